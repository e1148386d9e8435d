"""Exact classification of ADE singularity types on Gorenstein Q-homology planes."""

__version__ = "0.1.0"
