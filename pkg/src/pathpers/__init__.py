"""Pathwise persistence barcodes of multi-filtered flag complexes.

A path through a multi-filtered flag complex is turned into a finite
semimetric space whose Vietoris-Rips barcode equals the barcode of the
complex along that path in every positive degree.
"""
__version__ = "0.1.0"

from .engine import Bar, Barcode, enumerate_cliques, snv_bars, tighten_representative, vr_barcode
from .multifiltration import (EdgeAnnotations, PathwiseEdgeList, PointAnnotations,
                              build_pathwise_edges, edge_annotations_from_complex, point_entry)
from .pathwise import PathwiseBarcode, pathwise_barcode, rank_invariant, rank_invariant_table
from .poset import Antichain, Path, first_reachable_step, leq, minimal_elements, validate_path
from .semimetric import SemimetricMatrix, check_semimetric
from .transform import transform

__all__ = [
    "Antichain", "Bar", "Barcode", "EdgeAnnotations", "Path", "PathwiseBarcode", "PathwiseEdgeList",
    "PointAnnotations", "SemimetricMatrix", "build_pathwise_edges", "check_semimetric",
    "edge_annotations_from_complex", "enumerate_cliques", "first_reachable_step", "leq", "minimal_elements",
    "pathwise_barcode", "point_entry", "rank_invariant", "rank_invariant_table", "snv_bars",
    "tighten_representative", "transform", "validate_path", "vr_barcode",
]
