"""Moduli Intersections package."""
