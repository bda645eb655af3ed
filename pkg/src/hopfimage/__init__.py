"""Exact computation of Hopf images of representations of finite-dimensional Hopf algebras."""

__version__ = "0.1.0"
