"""Exact toolkit for Heisenberg Lie superalgebras and their minimal faithful representations."""
