"""Random multi-filtered flag complexes and their explicit filtrations.

Used by the test-suite and the demo scripts to compare pathwise barcodes with
brute-force homology of the complexes ``X_p`` themselves.
"""
from __future__ import annotations

from typing import List, Sequence, Tuple

import numpy as np

from .multifiltration import EdgeAnnotations
from .oracle import ExplicitComplex
from .poset import Antichain, Grade, Path, leq, minimal_elements


def random_grade(rng: np.random.Generator, top: int, dim: int) -> Grade:
    return tuple(float(x) for x in rng.integers(1, top + 1, size=dim))


def motif_edges(rng: np.random.Generator, n_vertices: int, motif: str, cone: bool = False) -> set:
    """Edge set of a hollow cycle or octahedron on randomly chosen vertices.

    With ``cone`` one further vertex is joined to all of them, so the class
    can be filled in once those edges enter.
    """
    order = [int(x) for x in rng.permutation(n_vertices)]
    edges = set()
    if motif == "cycle" and n_vertices >= 4:
        ring = order[:int(rng.integers(4, min(n_vertices, 6) + 1))]
        edges = {tuple(sorted((ring[i], ring[i - 1]))) for i in range(len(ring))}
    elif motif == "octahedron" and n_vertices >= 6:
        v = order[:6]
        antipodal = {frozenset((v[0], v[1])), frozenset((v[2], v[3])), frozenset((v[4], v[5]))}
        edges = {tuple(sorted((a, b))) for i, a in enumerate(v) for b in v[i + 1:]
                 if frozenset((a, b)) not in antipodal}
    used = sorted({x for e in edges for x in e})
    if cone and edges and len(used) < n_vertices:
        apex = order[len(used)]
        edges |= {tuple(sorted((apex, x))) for x in used}
    return edges


def random_filtered_complex(rng: np.random.Generator, n_vertices: int, *, top: int = 4, dim: int = 2,
                            edge_prob: float = 0.5, motif: str = "",
                            cone: bool = False) -> Tuple[List[Antichain], EdgeAnnotations]:
    """Vertex and edge entry antichains of a random ``{1..top}^dim``-filtered flag complex.

    Every edge grade dominates an entry grade of each endpoint, so each ``X_p``
    is a genuine subcomplex.  ``motif`` ("cycle" or "octahedron") forces the
    edges of that shape into the complex so that classes in degrees 1 and 2
    actually occur, ``cone`` adds a vertex that can later fill them; other
    edges are drawn with probability ``edge_prob``.
    """
    vertex = [minimal_elements([random_grade(rng, top, dim) for _ in range(rng.integers(1, 3))])
              for _ in range(n_vertices)]
    forced = motif_edges(rng, n_vertices, motif, cone) if motif else set()
    edges = {}
    for u in range(n_vertices):
        for v in range(u + 1, n_vertices):
            if (u, v) not in forced and rng.random() >= edge_prob:
                continue
            grades = []
            for _ in range(rng.integers(1, 4)):
                gu = vertex[u].elements[rng.integers(len(vertex[u]))]
                gv = vertex[v].elements[rng.integers(len(vertex[v]))]
                g = random_grade(rng, top, dim) if rng.random() < 0.5 else gu
                grades.append(tuple(max(a, b, c) for a, b, c in zip(gu, gv, g)))
            edges[u, v] = minimal_elements(grades)
    return vertex, EdgeAnnotations(edges)


def random_path(rng: np.random.Generator, max_len: int, *, top: int = 4, dim: int = 2,
                end_at_top: bool = False) -> Path:
    """Random monotone path of length ``1..max_len``; optionally its last step is the top grade."""
    length = int(rng.integers(1, max_len + 1))
    step = np.array(random_grade(rng, top, dim))
    steps = [tuple(step)]
    for _ in range(length - 1):
        step = np.minimum(step + rng.integers(0, 3, size=dim), top)
        steps.append(tuple(float(x) for x in step))
    if end_at_top:
        steps[-1] = tuple(float(top) for _ in range(dim))
    return Path(tuple(steps))


def complex_at(grade: Sequence[float], vertex: Sequence[Antichain], edges: EdgeAnnotations,
               max_dim: int) -> ExplicitComplex:
    """The flag complex ``X_p``: vertices and edges whose entry antichain lies below ``p``."""
    verts = [i for i, a in enumerate(vertex) if any(leq(g, grade) for g in a)]
    present = [e for e, a in edges.items() if any(leq(g, grade) for g in a)]
    return ExplicitComplex.flag(verts, present, max_dim)


def explicit_chain(path: Path, vertex: Sequence[Antichain], edges: EdgeAnnotations,
                   max_dim: int) -> List[ExplicitComplex]:
    return [complex_at(p, vertex, edges, max_dim) for p in path.steps]


def full_vertex_annotations(n_vertices: int, dim: int) -> List[Antichain]:
    """Every vertex present from the bottom grade on (for complexes given by edges only)."""
    bottom = tuple(float("-1e300") for _ in range(dim))
    return [Antichain((bottom,)) for _ in range(n_vertices)]
