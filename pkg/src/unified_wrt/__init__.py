"""Exact SO(3) WRT invariants at odd roots of unity and their unified
(Habiro-ring) counterparts for lens spaces and diagonal surgery presentations."""
from __future__ import annotations

__version__ = "0.1.0"
