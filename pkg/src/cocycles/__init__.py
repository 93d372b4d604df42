"""Chevalley–Eilenberg cohomology and characteristic 2-cocycles."""
