"""Galois-theoretic and p-adic evidence for hyperelliptic Jacobians over finite fields."""

__version__ = "0.1.0"
