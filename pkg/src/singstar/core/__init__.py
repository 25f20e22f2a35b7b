"""Core module - Eccezioni, configurazione e aritmetica di base."""
