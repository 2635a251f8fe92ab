"""Exact tools for Mori-dreamness and Cox rings of blown-up weighted projective planes."""

__version__ = "0.1.0"
