"""Alcove combinatorics of extended affine Weyl groups: admissible and permissible sets."""

__version__ = "0.1.0"
