import json
import math
from pathlib import Path

import pytest

from pathpers.engine import Bar, Barcode, vr_barcode
from pathpers.errors import ParseError, ValidationError
from pathpers.formats import (barcode_to_dict, dataset_from_dict, dataset_to_dict, dumps, edge_annotations_to_dict,
                              load_json, parse_edge_annotations, parse_path, parse_point_annotations)
from pathpers.genomic import SynthSpec, synth_dataset
from pathpers.oracle import vr_barcode_oracle
from pathpers.semimetric import parse_lower_distance

GOLDEN = Path(__file__).parent / "golden"


def test_dumps_stable():
    assert dumps({"b": 1.0, "a": [math.inf, 0.5]}) == '{"a":[null,0.5],"b":1}\n'


def test_barcode_json_schema():
    out = barcode_to_dict(Barcode((Bar(1, 1, 2, ((0, 1), (1, 2), (2, 3), (0, 3))),)))
    assert dumps(out) == ('{"bars":[{"birth":1,"death":2,"dim":1,"rep":[[0,1],[1,2],[2,3],[0,3]]}],'
                          '"field":"F2"}\n')


def test_parse_path():
    assert len(parse_path([[1, 1], [2, 2], [3, 2]])) == 3
    with pytest.raises(ValidationError):
        parse_path([[1, 1], [2]])
    with pytest.raises(ParseError):
        parse_path({"steps": []})


def test_parse_point_annotations():
    ann = parse_point_annotations({"dimension": 1, "points": [{"id": 1, "grades": [[2]]}, {"id": 0, "grades": [[1]]}]})
    assert [a.elements for a in ann.entries] == [((1.0,),), ((2.0,),)]
    with pytest.raises(ValidationError):
        parse_point_annotations({"dimension": 1, "points": [{"id": 1, "grades": [[2]]}]})
    with pytest.raises(ValidationError):
        parse_point_annotations({"dimension": 2, "points": [{"id": 0, "grades": [[2]]}]})


def test_edge_annotations_roundtrip():
    obj = load_json(GOLDEN / "bifiltered_four_cycle.edges.json")
    ann, n = parse_edge_annotations(obj)
    assert n == 4
    again, n2 = parse_edge_annotations(edge_annotations_to_dict(ann, n))
    assert dict(again) == dict(ann) and n2 == n


def test_load_json_errors(tmp_path):
    with pytest.raises(ParseError):
        load_json(tmp_path / "missing.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    with pytest.raises(ParseError):
        load_json(bad)


def test_dataset_roundtrip():
    data, truth = synth_dataset(SynthSpec(seed=3, homoplasies=1))
    assert dataset_from_dict(json.loads(dumps(dataset_to_dict(data)))) == data
    assert dataset_from_dict({"dataset": dataset_to_dict(data), "truth": truth}) == data


@pytest.mark.parametrize("name,n_h1", [("four_cycle", 1), ("unit_triangle", 0), ("two_four_cycles", 2)])
def test_golden_barcodes(name, n_h1):
    d = parse_lower_distance((GOLDEN / f"{name}.txt").read_text())
    bc = vr_barcode(d, max_dim=2, with_reps=True)
    assert dumps(barcode_to_dict(bc)) == (GOLDEN / f"{name}.barcode.json").read_text()
    assert {k: sorted(bc.intervals(k)) for k in range(3)} == vr_barcode_oracle(d.to_dense(), 2)
    assert bc.intervals(1) == [(1, 2)] * n_h1
