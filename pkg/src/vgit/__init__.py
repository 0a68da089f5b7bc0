"""Variation of GIT quotients for k*-actions on affine toric varieties."""

__version__ = "0.1.0"
