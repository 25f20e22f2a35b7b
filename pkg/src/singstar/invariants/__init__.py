"""Invariants module - Invarianti di Seifert e reticolo d'intersezione."""
