"""Symmetry module - Gruppi di Möbius e determinazione di G/G1."""
