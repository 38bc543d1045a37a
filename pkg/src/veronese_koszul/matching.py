"""The matching complex, its reduced homology, and the characteristic-2 example.

Faces of the matching complex on ``n`` points are sets of pairwise disjoint
pairs ``(i, j)``, ``1 <= i < j <= n``, stored as lexicographically sorted
tuples.  The empty face is included, so homology is reduced.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import networkx as nx

from .cycles import z_cycle
from .koszul import KoszulElement, homology_dim, is_boundary, is_cycle, slice_data
from .linalg import GF, QQ, ExactField, SparseMatrix, in_span, rank, smith_invariants

Face = tuple  # sorted tuple of disjoint pairs


def matchings(n: int) -> list[Face]:
    pairs = list(combinations(range(1, n + 1), 2))
    out = []

    def rec(start, used, chosen):
        out.append(tuple(chosen))
        for k in range(start, len(pairs)):
            a, b = pairs[k]
            if a in used or b in used:
                continue
            chosen.append((a, b))
            rec(k + 1, used | {a, b}, chosen)
            chosen.pop()

    rec(0, frozenset(), [])
    return out


@dataclass(frozen=True)
class ChainComplex:
    """Faces by dimension and integer boundary matrices ``C_k -> C_{k-1}``."""

    n: int
    faces: dict  # dim -> list of faces, dim -1 is the empty face
    boundaries: dict  # dim k -> SparseMatrix from dim k to dim k-1

    @property
    def top_dim(self) -> int:
        return max(self.faces)

    def face_counts(self) -> dict[int, int]:
        return {d: len(f) for d, f in sorted(self.faces.items())}

    def boundary(self, k: int) -> SparseMatrix:
        if k in self.boundaries:
            return self.boundaries[k]
        rows = len(self.faces.get(k - 1, []))
        cols = len(self.faces.get(k, []))
        return SparseMatrix(rows, cols)

    def to_json(self) -> str:
        return json.dumps({
            "n": self.n,
            "faces": {str(d): [[list(p) for p in f] for f in fs] for d, fs in sorted(self.faces.items())},
            "boundaries": {str(k): [[r, c, v] for (r, c), v in sorted(M.entries().items())]
                           for k, M in sorted(self.boundaries.items())},
        }, sort_keys=True)


@lru_cache(maxsize=None)
def matching_complex(n: int) -> ChainComplex:
    faces: dict[int, list] = {}
    for f in matchings(n):
        faces.setdefault(len(f) - 1, []).append(f)
    for d in faces:
        faces[d].sort()
    index = {d: {f: r for r, f in enumerate(fs)} for d, fs in faces.items()}
    bds = {}
    for k in range(0, max(faces) + 1):
        entries = {}
        for c, f in enumerate(faces[k]):
            for m in range(len(f)):
                entries[index[k - 1][f[:m] + f[m + 1:]], c] = (-1) ** m
        bds[k] = SparseMatrix(len(faces[k - 1]), len(faces[k]), entries)
    return ChainComplex(n, faces, bds)


def reduced_homology(n: int, dim: int, field: ExactField = QQ) -> int:
    cx = matching_complex(n)
    c_dim = len(cx.faces.get(dim, []))
    if not c_dim:
        return 0
    rk_out = rank(cx.boundary(dim), field) if dim >= 0 else 0
    rk_in = rank(cx.boundary(dim + 1), field) if dim + 1 in cx.boundaries else 0
    return c_dim - rk_out - rk_in


def reduced_homology_torsion(n: int, dim: int) -> list[int]:
    """Torsion coefficients of the integral reduced homology in ``dim``."""
    cx = matching_complex(n)
    if dim + 1 not in cx.boundaries:
        return []
    return [d for d in smith_invariants(cx.boundary(dim + 1)) if d > 1]


def petersen_graph_of_matchings() -> nx.Graph:
    cx = matching_complex(5)
    g = nx.Graph()
    g.add_nodes_from(f[0] for f in cx.faces[0])
    g.add_edges_from(tuple(f) for f in cx.faces[1])
    return g


def petersen_check() -> dict:
    g = petersen_graph_of_matchings()
    cx = matching_complex(5)
    degrees = sorted({d for _, d in g.degree()})
    result = {
        "vertices": g.number_of_nodes(),
        "edges": g.number_of_edges(),
        "degrees": degrees,
        "girth": nx.girth(g),
        "diameter": nx.diameter(g),
        "top_dim": cx.top_dim,
        "isomorphic_to_petersen": nx.is_isomorphic(g, nx.petersen_graph()),
    }
    result["pass"] = (result["vertices"] == 10 and result["edges"] == 15 and degrees == [3]
                      and result["girth"] == 5 and result["diameter"] == 2 and cx.top_dim == 1)
    return result


def squarefree_slice_compare(n: int, field: ExactField = QQ, i_range=None) -> dict:
    """Koszul homology at multidegree ``(1,...,1)`` against ``H~_{i-1}`` of the matching complex."""
    if i_range is None:
        i_range = range(0, n // 2 + 2)
    rows = []
    for i in i_range:
        k = homology_dim(n, i, (1,) * n, field)
        m = reduced_homology(n, i - 1, field)
        rows.append({"i": i, "koszul": k, "matching": m, "pass": k == m})
    return {"n": n, "field": repr(field), "rows": rows, "pass": all(r["pass"] for r in rows)}


# -- the characteristic-2 example -----------------------------------------------

_CHAR2_TERMS = [  # polynomial variable, then the two quadratic monomials in written order
    (1, (2, 3), (4, 5)),
    (3, (4, 5), (1, 2)),
    (5, (1, 2), (3, 4)),
    (2, (3, 4), (1, 5)),
    (4, (1, 5), (2, 3)),
]


def char2_element(field: ExactField = GF(2)) -> KoszulElement:
    """The five-term element, each term with coefficient +1 in its written order."""
    out = KoszulElement.zero(5, field)
    for v, q1, q2 in _CHAR2_TERMS:
        out = out + KoszulElement.variable(v, 5, field) * KoszulElement.quad(*q1, 5, field) \
            * KoszulElement.quad(*q2, 5, field)
    return out


def squarefree_z_generators(n: int, t: int, field: ExactField):
    """``z_{a,b}`` over variables with each variable used exactly once (``n = 2t + 1``)."""
    if n != 2 * t + 1:
        raise ValueError("square-free z_{a,b} in degree t need n = 2t + 1")
    gens = []
    for a in combinations(range(1, n + 1), t + 1):
        rest = [x for x in range(1, n + 1) if x not in a]
        gens.append(((a, tuple(rest)), z_cycle(a, rest, n, field)))
    return gens


def _coefficient_sum(u: KoszulElement):
    return u.field(sum(c for _, c in u.items()))


def char2_witness() -> dict:
    n, t = 5, 2  # the element lives in wedge^2, so the comparison cycles have t = 2
    delta = (1,) * n
    out: dict = {}
    for field in (GF(2), QQ):
        z = char2_element(field)
        sl = slice_data(n, t, delta, field)
        gens = squarefree_z_generators(n, t, field)
        cols = SparseMatrix.from_columns(len(sl.basis), [sl.to_vector(g) for _, g in gens])
        membership = in_span(sl.to_vector(z), cols, field)
        out[repr(field)] = {
            "is_cycle": is_cycle(z),
            "class_nonzero": is_cycle(z) and not is_boundary(z),
            "in_generator_span": membership.member,
            "generator_terms": sorted({len(g) for _, g in gens}),
            "generator_coefficient_sums": sorted({str(_coefficient_sum(g)) for _, g in gens}),
            "z_coefficient_sum": str(_coefficient_sum(z)),
            "homology_dim": homology_dim(n, t, delta, field),
        }
    f2, q = out["GF(2)"], out["QQ"]
    out["pass"] = (f2["is_cycle"] and f2["class_nonzero"] and not f2["in_generator_span"]
                   and f2["generator_coefficient_sums"] == ["0"] and f2["z_coefficient_sum"] == "1"
                   and f2["generator_terms"] == [6]
                   and q["is_cycle"] and q["in_generator_span"])
    return out
