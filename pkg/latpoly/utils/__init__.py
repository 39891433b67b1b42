"""latpoly utils module."""
