"""The Koszul complex on the quadratic monomials of ``k[x_1..x_n]``.

A basis term is a pair ``(exps, wedge)``: ``exps`` is the exponent vector of
the polynomial factor and ``wedge`` a strictly increasing tuple of quadratic
monomials.  A quadratic monomial ``x_a x_b`` is stored as the 0-based pair
``(a, b)`` with ``a <= b``; wedges are ordered lexicographically on these
pairs, and every sign in the package is relative to that order.

All homology is computed one multidegree slice at a time.  The differential
preserves the ``N^n`` multidegree, so each slice is an independent, small
linear algebra problem.
"""
from __future__ import annotations

import random
from bisect import bisect_left
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial, prod
from typing import Iterator, Mapping

from .linalg import QQ, Echelon, ExactField, SparseMatrix, kernel_basis, rank

Key = tuple  # (exps, wedge)


def quadratic_monomials(n: int) -> list[tuple[int, int]]:
    return [(a, b) for a in range(n) for b in range(a, n)]


def sort_wedge(qs) -> tuple[int, tuple]:
    """Sign of the sorting permutation and the sorted wedge; sign 0 on a repeat."""
    qs = list(qs)
    if len(set(qs)) != len(qs):
        return 0, ()
    inversions = sum(1 for x in range(len(qs)) for y in range(x + 1, len(qs)) if qs[x] > qs[y])
    return (-1) ** inversions, tuple(sorted(qs))


def term_multidegree(key: Key) -> tuple[int, ...]:
    exps, wedge = key
    deg = list(exps)
    for a, b in wedge:
        deg[a] += 1
        deg[b] += 1
    return tuple(deg)


def term_bidegree(key: Key) -> tuple[int, int]:
    exps, wedge = key
    return len(wedge), sum(exps) + 2 * len(wedge)


def _sort_key(key: Key):
    exps, wedge = key
    return len(wedge), tuple(-e for e in exps), wedge


def _format_quad(q, n):
    a, b = q
    return f"{a + 1}{b + 1}" if n < 10 else f"{a + 1}.{b + 1}"


class KoszulElement:
    """An element of ``S (x) wedge^* S_2``, always kept in canonical form."""

    __slots__ = ("n", "field", "_terms")

    def __init__(self, n: int, terms: Mapping[Key, object] | None = None, field: ExactField = QQ):
        self.n = n
        self.field = field
        clean: dict = {}
        for (exps, wedge), c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != n:
                raise ValueError(f"exponent vector {exps} has length != {n}")
            sign, wedge = sort_wedge(tuple(q) for q in wedge)
            if not sign:
                continue
            for a, b in wedge:
                if not 0 <= a <= b < n:
                    raise ValueError(f"bad quadratic monomial {(a, b)} for n={n}")
            key = (exps, wedge)
            clean[key] = clean.get(key, 0) + sign * c
        self._terms = {k: v for k, v in ((k, field(v)) for k, v in clean.items()) if v}

    @classmethod
    def _raw(cls, n, field, terms):
        obj = cls.__new__(cls)
        obj.n, obj.field, obj._terms = n, field, terms
        return obj

    @classmethod
    def zero(cls, n: int, field: ExactField = QQ) -> "KoszulElement":
        return cls._raw(n, field, {})

    @classmethod
    def one(cls, n: int, field: ExactField = QQ) -> "KoszulElement":
        return cls._raw(n, field, {((0,) * n, ()): field(1)})

    @classmethod
    def variable(cls, k: int, n: int, field: ExactField = QQ) -> "KoszulElement":
        """``x_k (x) 1`` with a 1-based index."""
        exps = [0] * n
        exps[k - 1] = 1
        return cls._raw(n, field, {(tuple(exps), ()): field(1)})

    @classmethod
    def quad(cls, a: int, b: int, n: int, field: ExactField = QQ) -> "KoszulElement":
        """``1 (x) x_a x_b`` with 1-based indices."""
        a, b = sorted((a - 1, b - 1))
        return cls._raw(n, field, {((0,) * n, ((a, b),)): field(1)})

    # -- container protocol -------------------------------------------------

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def coefficient(self, exps, wedge) -> object:
        return self._terms.get((tuple(exps), tuple(wedge)), 0)

    def terms(self) -> list[tuple[object, tuple, tuple]]:
        """Canonically ordered ``(coeff, exps, wedge)`` triples."""
        return [(self._terms[k], k[0], k[1]) for k in sorted(self._terms, key=_sort_key)]

    def __eq__(self, other):
        if isinstance(other, KoszulElement):
            return self.n == other.n and self.field == other.field and self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    __hash__ = None

    # -- arithmetic -----------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, KoszulElement):
            raise TypeError(f"expected a KoszulElement, got {type(other).__name__}")
        if other.field != self.field:
            raise ValueError(f"field mismatch: {self.field} vs {other.field}")
        if other.n != self.n:
            raise ValueError(f"number of variables differs: {self.n} vs {other.n}")

    def __add__(self, other):
        self._check(other)
        f = self.field
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = f(out.get(k, 0) + c)
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return KoszulElement._raw(self.n, f, out)

    def __neg__(self):
        f = self.field
        return KoszulElement._raw(self.n, f, {k: f(-c) for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "KoszulElement":
        f = self.field
        c = f(c)
        if not c:
            return KoszulElement.zero(self.n, f)
        return KoszulElement._raw(self.n, f, {k: f(c * v) for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, KoszulElement):
            return wedge_multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    # -- structure -------------------------------------------------------------

    def differential(self) -> "KoszulElement":
        return differential(self)

    def bidegrees(self) -> set[tuple[int, int]]:
        return {term_bidegree(k) for k in self._terms}

    def multidegrees(self) -> set[tuple[int, ...]]:
        return {term_multidegree(k) for k in self._terms}

    def homological_degree(self) -> int:
        degs = {len(w) for _, w in self._terms}
        if len(degs) > 1:
            raise ValueError(f"element is not homogeneous in homological degree: {sorted(degs)}")
        return degs.pop() if degs else 0

    def components(self) -> dict[tuple[int, ...], "KoszulElement"]:
        """Split into multidegree-homogeneous pieces."""
        parts: dict = {}
        for k, c in self._terms.items():
            parts.setdefault(term_multidegree(k), {})[k] = c
        return {d: KoszulElement._raw(self.n, self.field, t) for d, t in sorted(parts.items())}

    # -- text and JSON -----------------------------------------------------

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for c, exps, wedge in self.terms():
            body = f"x^({','.join(map(str, exps))}) ⊗ [{' ^ '.join(_format_quad(q, self.n) for q in wedge)}]"
            neg = self.field.characteristic == 0 and c < 0
            mag = -c if neg else c
            if not pieces:
                pieces.append(f"{'-' if neg else ''}{mag} * {body}")
            else:
                pieces.append(f" {'-' if neg else '+'} {mag} * {body}")
        return "".join(pieces)

    __str__ = to_text

    def __repr__(self):
        return f"KoszulElement(n={self.n}, {self.field}, {self.to_text()})"

    def to_json(self) -> list[dict]:
        return [{"coeff": str(c), "exps": list(exps), "wedge": [[a + 1, b + 1] for a, b in wedge]}
                for c, exps, wedge in self.terms()]

    @classmethod
    def from_json(cls, data, n: int, field: ExactField = QQ) -> "KoszulElement":
        terms: dict = {}
        for t in data:
            wedge = [(a - 1, b - 1) for a, b in t["wedge"]]
            sign, sw = sort_wedge(wedge)
            if not sign:
                continue
            key = (tuple(t["exps"]), sw)
            terms[key] = terms.get(key, 0) + sign * Fraction(t["coeff"])
        return cls(n, terms, field)


def differential(u: KoszulElement) -> KoszulElement:
    """``d(f (x) q_1 ^ ... ^ q_i) = sum_k (-1)^(k-1) f q_k (x) q_1 ^ .. q_k^ .. ^ q_i``."""
    f = u.field
    out: dict = {}
    for (exps, wedge), c in u._terms.items():
        for k, (a, b) in enumerate(wedge):
            e = list(exps)
            e[a] += 1
            e[b] += 1
            key = (tuple(e), wedge[:k] + wedge[k + 1:])
            out[key] = out.get(key, 0) + (c if k % 2 == 0 else -c)
    return KoszulElement._raw(u.n, f, {k: v for k, v in ((k, f(v)) for k, v in out.items()) if v})


def wedge_multiply(u: KoszulElement, v: KoszulElement) -> KoszulElement:
    """``(f (x) w)(g (x) h) = fg (x) w ^ h`` with the sign of the sorting permutation."""
    u._check(v)
    f = u.field
    out: dict = {}
    for (e1, w1), c1 in u._terms.items():
        s1 = set(w1)
        for (e2, w2), c2 in v._terms.items():
            if s1.intersection(w2):
                continue
            inversions = sum(bisect_left(w2, x) for x in w1)
            key = (tuple(a + b for a, b in zip(e1, e2)), tuple(sorted(w1 + w2)))
            c = c1 * c2
            out[key] = out.get(key, 0) + (-c if inversions % 2 else c)
    return KoszulElement._raw(u.n, f, {k: x for k, x in ((k, f(x)) for k, x in out.items()) if x})


# -- bases and slices -----------------------------------------------------------

def compositions(total: int, n: int) -> Iterator[tuple[int, ...]]:
    """All ``n``-tuples of non-negative integers summing to ``total``, reverse-lex."""
    if n == 0:
        if total == 0:
            yield ()
        return
    if n == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, n - 1):
            yield (first,) + rest


def _wedges_in(n: int, i: int, delta: tuple[int, ...]) -> Iterator[tuple]:
    """``i``-subsets of quadratic monomials whose multidegree fits under ``delta``."""
    quads = quadratic_monomials(n)
    budget = list(delta)

    def rec(start, chosen):
        if len(chosen) == i:
            yield tuple(chosen)
            return
        for k in range(start, len(quads) - (i - len(chosen)) + 1):
            a, b = quads[k]
            budget[a] -= 1
            budget[b] -= 1
            if budget[a] >= 0 and budget[b] >= 0:
                chosen.append((a, b))
                yield from rec(k + 1, chosen)
                chosen.pop()
            budget[a] += 1
            budget[b] += 1

    yield from rec(0, [])


@lru_cache(maxsize=None)
def _basis_multidegree(n: int, i: int, delta: tuple[int, ...]) -> tuple[Key, ...]:
    if i < 0 or len(delta) != n or sum(delta) < 2 * i or min(delta, default=0) < 0:
        return ()
    out = []
    for wedge in _wedges_in(n, i, delta):
        exps = list(delta)
        for a, b in wedge:
            exps[a] -= 1
            exps[b] -= 1
        out.append((tuple(exps), wedge))
    return tuple(out)


def component_basis(n: int, i: int, slice) -> list[Key]:
    """Basis terms of ``K_i`` in a slice: an internal degree ``j`` or a multidegree tuple."""
    if isinstance(slice, int):
        return [k for delta in compositions(slice, n) for k in _basis_multidegree(n, i, delta)]
    return list(_basis_multidegree(n, i, tuple(slice)))


def boundary_matrix(n: int, i: int, delta, field: ExactField = QQ) -> SparseMatrix:
    """Matrix of ``d_i : K_i -> K_{i-1}`` on a slice (multidegree tuple or internal degree)."""
    src = component_basis(n, i, delta)
    tgt = component_basis(n, i - 1, delta)
    index = {k: r for r, k in enumerate(tgt)}
    columns = []
    for exps, wedge in src:
        col = {}
        for k, (a, b) in enumerate(wedge):
            e = list(exps)
            e[a] += 1
            e[b] += 1
            col[index[tuple(e), wedge[:k] + wedge[k + 1:]]] = field(1 if k % 2 == 0 else -1)
        columns.append(col)
    return SparseMatrix.from_columns(len(tgt), columns)


class _Slice:
    """Cached linear algebra for one ``(n, i, multidegree, field)`` slice."""

    def __init__(self, n, i, delta, field):
        self.n, self.i, self.delta, self.field = n, i, delta, field
        self.basis = _basis_multidegree(n, i, delta)
        self.index = {k: r for r, k in enumerate(self.basis)}
        self._boundaries = None
        self._cycles = None
        self._rank_out = None

    @property
    def rank_out(self) -> int:
        if self._rank_out is None:
            self._rank_out = rank(boundary_matrix(self.n, self.i, self.delta, self.field), self.field) \
                if self.i > 0 and self.basis else 0
        return self._rank_out

    @property
    def boundaries(self) -> Echelon:
        """Echelon basis of the image of ``d_{i+1}`` inside this slice."""
        if self._boundaries is None:
            ech = Echelon(self.field)
            M = boundary_matrix(self.n, self.i + 1, self.delta, self.field)
            for c in sorted(range(M.cols), key=lambda c: (len(M._columns.get(c, ())), c)):
                ech.add(M._columns.get(c, {}))
            self._boundaries = ech
        return self._boundaries

    @property
    def cycles(self) -> list[dict]:
        if self._cycles is None:
            if self.i == 0:
                self._cycles = [{r: 1} for r in range(len(self.basis))]
            else:
                self._cycles = kernel_basis(boundary_matrix(self.n, self.i, self.delta, self.field),
                                            self.field)
        return self._cycles

    @property
    def homology_dim(self) -> int:
        return len(self.basis) - self.rank_out - self.boundaries.rank

    def to_vector(self, u: KoszulElement) -> dict:
        out = {}
        for k, c in u._terms.items():
            r = self.index.get(k)
            if r is None:
                raise ValueError(f"term {k} does not lie in slice (i={self.i}, {self.delta})")
            out[r] = c
        return out

    def to_element(self, v: Mapping[int, object]) -> KoszulElement:
        f = self.field
        return KoszulElement._raw(self.n, f, {self.basis[r]: f(c) for r, c in v.items() if f(c)})


@lru_cache(maxsize=None)
def _slice(n: int, i: int, delta: tuple[int, ...], characteristic: int) -> _Slice:
    from .linalg import field_of
    return _Slice(n, i, delta, field_of(characteristic))


def slice_data(n: int, i: int, delta, field: ExactField = QQ) -> _Slice:
    return _slice(n, i, tuple(delta), field.characteristic)


def _orbit_size(delta) -> int:
    counts: dict = {}
    for d in delta:
        counts[d] = counts.get(d, 0) + 1
    return factorial(len(delta)) // prod(factorial(c) for c in counts.values())


def homology_dim(n: int, i: int, slice, field: ExactField = QQ, symmetric: bool = True) -> int:
    """``dim H_i`` in an internal degree or a multidegree slice.

    For an internal degree, ``symmetric=True`` computes one slice per
    permutation orbit of multidegrees (permuting variables is an isomorphism
    of complexes) and weights it by the orbit size.
    """
    if i < 0:
        return 0
    if not isinstance(slice, int):
        return slice_data(n, i, slice, field).homology_dim
    total = 0
    for delta in compositions(slice, n):
        if symmetric:
            if any(delta[k] < delta[k + 1] for k in range(n - 1)):
                continue
            total += _orbit_size(delta) * slice_data(n, i, delta, field).homology_dim
        else:
            total += slice_data(n, i, delta, field).homology_dim
    return total


def is_cycle(u: KoszulElement) -> bool:
    return not differential(u)


def is_boundary(u: KoszulElement) -> bool:
    if not u:
        return True
    i = u.homological_degree()
    for delta, part in u.components().items():
        sl = slice_data(u.n, i, delta, u.field)
        if not sl.boundaries.contains(sl.to_vector(part)):
            return False
    return True


def class_is_nonzero(u: KoszulElement) -> bool:
    return is_cycle(u) and not is_boundary(u)


def reduce_class(u: KoszulElement) -> KoszulElement:
    """Canonical representative of ``u`` modulo boundaries, slice by slice."""
    if not u:
        return u
    i = u.homological_degree()
    out = KoszulElement.zero(u.n, u.field)
    for delta, part in u.components().items():
        sl = slice_data(u.n, i, delta, u.field)
        out = out + sl.to_element(sl.boundaries.reduce(sl.to_vector(part)))
    return out


def homology_rep_basis(n: int, i: int, slice, field: ExactField = QQ) -> list[KoszulElement]:
    """Cycles whose classes form a basis of the homology slice, reduced modulo boundaries."""
    deltas = compositions(slice, n) if isinstance(slice, int) else [tuple(slice)]
    reps = []
    for delta in deltas:
        sl = slice_data(n, i, delta, field)
        if not sl.basis or sl.homology_dim == 0:
            continue
        acc = sl.boundaries.copy()
        for v in sl.cycles:
            if acc.add(v):
                reps.append(sl.to_element(sl.boundaries.reduce(v)))
    return reps


def random_element(n: int, i: int, j: int, rng: random.Random, field: ExactField = QQ,
                   terms: int = 4, coeff_range: int = 3) -> KoszulElement:
    """Random element homogeneous of bidegree ``(i, j)``; may be zero when the component is."""
    quads = quadratic_monomials(n)
    d = j - 2 * i
    if d < 0 or i > len(quads):
        return KoszulElement.zero(n, field)
    out = {}
    for _ in range(terms):
        wedge = tuple(sorted(rng.sample(quads, i)))
        exps = [0] * n
        for _ in range(d):
            exps[rng.randrange(n)] += 1
        c = rng.randint(-coeff_range, coeff_range)
        key = (tuple(exps), wedge)
        out[key] = out.get(key, 0) + c
    return KoszulElement(n, out, field)


def lowest_strand_span_check(n: int, i_max: int, field: ExactField = QQ,
                             j_slack: int = 2) -> dict:
    """Check that even internal degrees are spanned by products of lowest-strand cycles.

    A class in ``H_i`` of internal degree ``j`` (``j`` even) is tested against
    the span of all products of ``j - 2i`` tableau cycles whose homological
    degrees add up to ``i``; such a product is a product of ``(j - 2i)/2``
    classes of the form ``z z'`` in ``H_t(m^2)_{2t+2}``, the lowest strand of
    the Veronese.  Internal degrees up to ``2i + n + j_slack`` are scanned.
    """
    from itertools import combinations_with_replacement

    from .cycles import tableau_cycle, tableau_generators

    gens = {t: [tableau_cycle(p, n, field) for p in tableau_generators(n, t)]
            for t in range(i_max + 1)}
    flat = [(t, z) for t in sorted(gens) for z in gens[t]]
    checks = []
    for i in range(i_max + 1):
        for j in range(2 * i, 2 * i + n + j_slack + 1):
            if j % 2:
                continue
            dim = homology_dim(n, i, j, field, symmetric=False)
            k = j - 2 * i
            entry = {"i": i, "j": j, "homology_dim": dim, "factors": k, "span_dim": 0}
            if dim == 0:
                entry.update(pass_=True, vacuous=True)
                checks.append(entry)
                continue
            products = []
            if k == 0:
                products.append(KoszulElement.one(n, field))
            else:
                for combo in combinations_with_replacement(range(len(flat)), k):
                    if sum(flat[c][0] for c in combo) != i:
                        continue
                    prod_el = KoszulElement.one(n, field)
                    for c in combo:
                        prod_el = prod_el * flat[c][1]
                    if prod_el:
                        products.append(prod_el)
            accs: dict = {}
            span = 0
            for p in products:
                for delta, part in p.components().items():
                    sl = slice_data(n, i, delta, field)
                    if delta not in accs:
                        accs[delta] = sl.boundaries.copy()
                    if accs[delta].add(sl.to_vector(part)):
                        span += 1
            entry.update(span_dim=span, products=len(products), pass_=span == dim, vacuous=False)
            checks.append(entry)
    for c in checks:
        c["pass"] = c.pop("pass_")
    return {"n": n, "i_max": i_max, "field": repr(field), "checks": checks,
            "pass": all(c["pass"] for c in checks)}
