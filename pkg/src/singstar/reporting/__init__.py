"""Reporting module - Resa dei report."""
