"""The gl(n) action on the Koszul complex by derivations, and closures in homology.

``E_(a,b)`` is the derivation with ``x_b -> x_a``.  It acts on the polynomial
factor and on every quadratic monomial of the wedge by the Leibniz rule, and
commutes with the differential.  In characteristic zero the submodule of a
polynomial representation generated under the group equals the one
generated under the Lie algebra, which is what the closure computes.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field as dc_field

from .cycles import squarefree_Z_product
from .koszul import KoszulElement, class_is_nonzero, compositions, is_cycle, slice_data, sort_wedge
from .linalg import QQ, ExactField
from .partitions import Partition, frobenius, schur_dim, schur_expand, schur_poly, self_conjugate_enum


@dataclass(frozen=True)
class ElementaryOperator:
    """``E_(i,j)`` (1-based): the derivation sending ``x_j`` to ``x_i``."""

    i: int
    j: int

    def __str__(self):
        return f"E{self.i}{self.j}"


def act(E: ElementaryOperator | tuple[int, int], u: KoszulElement) -> KoszulElement:
    if not isinstance(E, ElementaryOperator):
        E = ElementaryOperator(*E)
    n, f = u.n, u.field
    tgt, src = E.i - 1, E.j - 1
    if not (0 <= tgt < n and 0 <= src < n):
        raise ValueError(f"{E} out of range for n={n}")
    out: dict = {}

    def put(key, c):
        out[key] = out.get(key, 0) + c

    for (exps, wedge), c in u.items():
        if exps[src]:
            e = list(exps)
            e[src] -= 1
            e[tgt] += 1
            put((tuple(e), wedge), c * exps[src])
        for k, (a, b) in enumerate(wedge):
            mult = (a == src) + (b == src)
            if not mult:
                continue
            # replace one occurrence of x_src in x_a x_b by x_tgt
            other = b if a == src else a
            q = (min(tgt, other), max(tgt, other))
            sign, new = sort_wedge(wedge[:k] + (q,) + wedge[k + 1:])
            if sign:
                put((exps, new), sign * mult * c)
    return KoszulElement._raw(n, f, {k: v for k, v in ((k, f(v)) for k, v in out.items()) if v})


def operators(n: int, include_diagonal: bool = False) -> list[ElementaryOperator]:
    return [ElementaryOperator(a, b) for a in range(1, n + 1) for b in range(1, n + 1)
            if include_diagonal or a != b]


@dataclass
class Closure:
    """A gl(n)-stable subspace of homology, held slice by slice.

    ``spaces[delta]`` is an echelon basis of boundaries plus closure vectors
    in that multidegree; ``dims`` records how many closure vectors were added.
    """

    n: int
    i: int
    field: ExactField
    spaces: dict = dc_field(default_factory=dict)
    dims: Counter = dc_field(default_factory=Counter)
    basis: list = dc_field(default_factory=list)

    @property
    def dim(self) -> int:
        return sum(self.dims.values())

    def weights(self) -> Counter:
        return Counter({d: c for d, c in self.dims.items() if c})

    def offer(self, part: KoszulElement, delta) -> KoszulElement | None:
        """Add a multidegree-homogeneous cycle; return its reduced class if new."""
        sl = slice_data(self.n, self.i, delta, self.field)
        if delta not in self.spaces:
            self.spaces[delta] = sl.boundaries.copy()
        vec = sl.to_vector(part)
        if not self.spaces[delta].add(vec):
            return None
        self.dims[delta] += 1
        rep = sl.to_element(sl.boundaries.reduce(vec))
        self.basis.append(rep)
        return rep


def gl_closure(seeds, n: int, i: int, field: ExactField = QQ) -> Closure:
    """Smallest gl(n)-stable subspace of ``H_i`` containing the seed classes.

    Seeds are split into multidegree components first: the diagonal operators
    separate weights, so each component lies in the closure.  New vectors are
    processed breadth-first, operators in lexicographic order; the loop stops
    when no operator produces a class outside the current span.
    """
    closure = Closure(n, i, field)
    queue = []
    for s in seeds:
        if not s:
            continue
        if s.homological_degree() != i:
            raise ValueError(f"seed has homological degree {s.homological_degree()}, expected {i}")
        if not is_cycle(s):
            raise ValueError("seed is not a cycle")
        for delta, part in s.components().items():
            rep = closure.offer(part, delta)
            if rep is not None:
                queue.append(rep)
    ops = operators(n)
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        for E in ops:
            w = act(E, v)
            if not w:
                continue
            for delta, part in w.components().items():
                rep = closure.offer(part, delta)
                if rep is not None:
                    queue.append(rep)
    return closure


def gl_module_dim(seeds, n: int, bidegree: tuple[int, int], field: ExactField = QQ) -> int:
    i, j = bidegree
    for s in seeds:
        if s and any(bd != (i, j) for bd in s.bidegrees()):
            raise ValueError(f"seed is not homogeneous of bidegree {bidegree}")
    return gl_closure(seeds, n, i, field).dim


def isotypic_verify(lam, n: int, field: ExactField = QQ) -> dict:
    """Seed ``Z_{mu_1} ... Z_{mu_s}`` and compare its closure with ``S^lambda(V)``."""
    lam = Partition(lam)
    if lam.length > n:
        raise ValueError(f"{lam} has more than n={n} rows")
    mu = frobenius(lam)
    seed = KoszulElement.one(n, field)
    for m in mu.arms:
        seed = seed * squarefree_Z_product([m], n, field)
    bidegree = (mu.size, lam.weight)
    nonzero = class_is_nonzero(seed)
    closure = gl_closure([seed], n, mu.size, field)
    sdim = schur_dim(lam, n)
    weights_match = closure.weights() == Counter(schur_poly(lam, n))
    return {
        "lambda": str(lam),
        "n": n,
        "seed_bidegree": list(bidegree),
        "seed_nonzero": nonzero,
        "closure_dim": closure.dim,
        "schur_dim": sdim,
        "weights_match": weights_match,
        "pass": nonzero and closure.dim == sdim and weights_match,
    }


def homology_character(n: int, i: int, j: int, field: ExactField = QQ) -> dict:
    """Multidegree-slice dimensions of ``H_i(m^2)_j``, every slice computed."""
    char = {}
    for delta in compositions(j, n):
        d = slice_data(n, i, delta, field).homology_dim
        if d:
            char[delta] = d
    return char


def decomposition_verify(n: int, i: int, j: int, field: ExactField = QQ) -> dict:
    expansion = schur_expand(homology_character(n, i, j, field), n)
    predicted = {lam: 1 for lam in self_conjugate_enum(n, i, j)}
    return {
        "n": n, "i": i, "j": j,
        "expansion": expansion.as_dict(),
        "predicted": {str(lam): 1 for lam in predicted},
        "pass": dict(expansion.entries) == predicted,
    }
