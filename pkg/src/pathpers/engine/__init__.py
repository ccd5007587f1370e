"""Vietoris-Rips persistence engine for finite semimetric spaces (F2 coefficients)."""
from .barcode import Bar, Barcode
from .cliques import DEFAULT_MAX_SIMPLICES, FiltrationSimplex, enumerate_cliques
from .reduction import (cycle_boundary, exhaust_cycle, snv_bars, tighten_representative,
                        vr_barcode)
from .unionfind import UnionFind

__all__ = [
    "Bar", "Barcode", "DEFAULT_MAX_SIMPLICES", "FiltrationSimplex", "UnionFind",
    "cycle_boundary", "enumerate_cliques", "exhaust_cycle", "snv_bars",
    "tighten_representative", "vr_barcode",
]
