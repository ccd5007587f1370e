"""JSON file formats and byte-stable serialization.

All JSON written by this package uses sorted keys, compact separators and a
trailing newline.  Integral numbers are written as integers and ``inf`` as
``null``, so identical results always serialize to identical bytes.
"""
from __future__ import annotations

import json
import math
from pathlib import Path as FsPath
from typing import Any, Tuple

from .engine import Barcode
from .errors import ParseError, ValidationError
from .genomic.dataset import AlignedDataset
from .multifiltration import EdgeAnnotations, PointAnnotations, edge_annotations_from_complex
from .pathwise import PathwiseBarcode
from .poset import Path, minimal_elements


def _plain(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if hasattr(obj, "item"):  # numpy scalars
        obj = obj.item()
    if isinstance(obj, int):
        return obj
    if isinstance(obj, float):
        if math.isinf(obj) or math.isnan(obj):
            return None
        return int(obj) if obj.is_integer() else obj
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj: Any) -> str:
    return json.dumps(_plain(obj), sort_keys=True, separators=(",", ":")) + "\n"


def load_json(path) -> Any:
    try:
        text = FsPath(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror or exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def _grades(raw, where: str, dim=None):
    if not isinstance(raw, list) or not raw:
        raise ParseError(f"{where}: expected a non-empty list of grades")
    out = []
    for g in raw:
        if not isinstance(g, list) or not g or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in g):
            raise ParseError(f"{where}: grade {g!r} is not a list of numbers")
        if dim is not None and len(g) != dim:
            raise ValidationError(f"{where}: grade {g} has {len(g)} coordinates, expected {dim}")
        out.append(tuple(float(x) for x in g))
    return out


def parse_path(obj) -> Path:
    rows = _grades(obj, "path")
    if len({len(r) for r in rows}) != 1:
        raise ValidationError("path: all grades must have the same length")
    return Path(tuple(rows))


def parse_point_annotations(obj) -> PointAnnotations:
    if not isinstance(obj, dict) or "points" not in obj or "dimension" not in obj:
        raise ParseError("annotations: expected an object with 'dimension' and 'points'")
    dim = obj["dimension"]
    points = obj["points"]
    if not isinstance(points, list):
        raise ParseError("annotations: 'points' must be a list")
    by_id = {}
    for p in points:
        if not isinstance(p, dict) or "id" not in p or "grades" not in p:
            raise ParseError(f"annotations: malformed point entry {p!r}")
        if p["id"] in by_id:
            raise ValidationError(f"annotations: point id {p['id']} listed twice")
        by_id[p["id"]] = minimal_elements(_grades(p["grades"], f"point {p['id']}", dim))
    if sorted(by_id) != list(range(len(by_id))):
        raise ValidationError("annotations: point ids must be exactly 0..N-1")
    return PointAnnotations(tuple(by_id[i] for i in range(len(by_id))))


def parse_edge_annotations(obj) -> Tuple[EdgeAnnotations, int]:
    """Edge annotation file -> (annotations, vertex count).

    The vertex count is ``n_vertices`` when given, else one more than the
    largest endpoint.
    """
    if not isinstance(obj, dict) or "edges" not in obj or "dimension" not in obj:
        raise ParseError("edge annotations: expected an object with 'dimension' and 'edges'")
    dim = obj["dimension"]
    items = []
    for e in obj["edges"]:
        if not isinstance(e, dict) or not {"u", "v", "grades"} <= set(e):
            raise ParseError(f"edge annotations: malformed edge entry {e!r}")
        items.append(((int(e["u"]), int(e["v"])), _grades(e["grades"], f"edge ({e['u']},{e['v']})", dim)))
    annotations = edge_annotations_from_complex(items)
    n = obj.get("n_vertices", annotations.n_vertices())
    if not isinstance(n, int) or n < max(1, annotations.n_vertices()):
        raise ValidationError("edge annotations: n_vertices smaller than the largest endpoint")
    return annotations, n


def edge_annotations_to_dict(annotations: EdgeAnnotations, n: int) -> dict:
    return {
        "dimension": annotations.dimension,
        "n_vertices": n,
        "edges": [{"u": u, "v": v, "grades": [list(g) for g in a]} for (u, v), a in annotations.items()],
    }


def barcode_to_dict(barcode: Barcode) -> dict:
    bars = []
    for b in barcode.bars:
        entry = {"dim": b.dim, "birth": b.birth, "death": b.death}
        if b.rep is not None:
            entry["rep"] = [list(e) for e in b.rep]
        bars.append(entry)
    return {"field": barcode.field, "bars": bars}


def pathwise_to_dict(pb: PathwiseBarcode) -> dict:
    out = barcode_to_dict(pb.barcode)
    for entry in out["bars"]:
        entry["authoritative"] = pb.authoritative(entry["dim"])
    out["steps"] = [list(s) for s in pb.path.steps]
    return out


def dataset_to_dict(data: AlignedDataset) -> dict:
    return {
        "ids": list(data.ids), "sequences": list(data.sequences), "times": list(data.times),
        "counts": list(data.counts), "n_bins": data.n_bins, "reference": data.reference,
        "bin_labels": list(data.bin_labels),
    }


def dataset_from_dict(obj) -> AlignedDataset:
    """Accepts a bare dataset object or the synth output wrapping one under ``dataset``."""
    if isinstance(obj, dict) and isinstance(obj.get("dataset"), dict):
        obj = obj["dataset"]
    try:
        return AlignedDataset(ids=tuple(obj["ids"]), sequences=tuple(obj["sequences"]),
                              times=tuple(int(t) for t in obj["times"]), n_bins=int(obj["n_bins"]),
                              counts=tuple(obj.get("counts") or ()), reference=obj.get("reference"),
                              bin_labels=tuple(obj.get("bin_labels") or ()))
    except (KeyError, TypeError) as exc:
        raise ParseError(f"dataset: missing or malformed field {exc}") from None
