"""The ``.lie`` format and the command line."""
