"""IO Handlers module - Formati di testo ed export tabellare."""
