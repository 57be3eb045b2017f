"""Polar decomposition transforms and complex symmetry of matrices."""
