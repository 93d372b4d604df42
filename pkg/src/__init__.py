"""dgla-cert - exact certification kernel."""

__version__ = "0.1.0"
