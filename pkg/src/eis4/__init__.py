"""Exact q-expansions and identity checks for level-4 double Eisenstein series."""
from __future__ import annotations

__version__ = "0.1.0"
