"""Task orchestration, name registry, export and reports."""
