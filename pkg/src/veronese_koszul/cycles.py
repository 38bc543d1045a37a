"""Explicit Koszul cycles: the hooks ``Z_i``, the cycles ``z_{a,b}``, Garnir
relations and straightening onto semistandard tableau pairs.

Variable indices in this module's public API are 1-based.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, product
from typing import Sequence

from .koszul import KoszulElement, class_is_nonzero, homology_dim, slice_data
from .linalg import QQ, Echelon, ExactField
from .partitions import hook_partition, schur_dim

LinearForm = tuple  # coefficient vector of length n


def as_linear_form(x, n: int) -> LinearForm:
    """An int is read as the variable ``x_k`` (1-based); a sequence as coefficients."""
    if isinstance(x, int):
        if not 1 <= x <= n:
            raise ValueError(f"variable index {x} out of range 1..{n}")
        return tuple(1 if k == x - 1 else 0 for k in range(n))
    x = tuple(x)
    if len(x) != n:
        raise ValueError(f"linear form {x} has length != {n}")
    return x


@dataclass(frozen=True)
class CyclePair:
    """Sequences ``a`` (``t+1`` linear forms) and ``b`` (``t`` linear forms)."""

    a: tuple
    b: tuple

    def __post_init__(self):
        if len(self.a) != len(self.b) + 1:
            raise ValueError(f"need len(a) == len(b) + 1, got {len(self.a)} and {len(self.b)}")

    @property
    def t(self) -> int:
        return len(self.b)

    def __str__(self):
        fmt = lambda xs: ",".join(str(x) for x in xs)
        return f"z[{fmt(self.a)}|{fmt(self.b)}]"

    @classmethod
    def parse(cls, text: str) -> "CyclePair":
        """Parse ``"z[1,2|2]"`` or ``"1,2|2"`` into variable indices."""
        body = text.strip()
        if body.startswith("z"):
            body = body[1:]
        body = body.strip("[] ")
        left, _, right = body.partition("|")
        ints = lambda s: tuple(int(x) for x in s.replace(" ", "").split(",") if x)
        return cls(ints(left), ints(right))


@dataclass(frozen=True, order=True)
class TableauPair:
    """Variable indices with ``a`` strictly increasing, ``b`` weakly increasing and ``a_1 <= b_1``."""

    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        a, b = self.a, self.b
        if len(a) != len(b) + 1:
            raise ValueError("need len(a) == len(b) + 1")
        if any(a[k] >= a[k + 1] for k in range(len(a) - 1)):
            raise ValueError(f"a must be strictly increasing: {a}")
        if any(b[k] > b[k + 1] for k in range(len(b) - 1)):
            raise ValueError(f"b must be weakly increasing: {b}")
        if b and a[0] > b[0]:
            raise ValueError(f"need a_1 <= b_1: {a}, {b}")

    @property
    def t(self) -> int:
        return len(self.b)

    def __str__(self):
        return f"z[{','.join(map(str, self.a))}|{','.join(map(str, self.b))}]"


def _quadratic(b: LinearForm, a: LinearForm, n: int, field: ExactField) -> KoszulElement:
    """``1 (x) b*a`` expanded on the quadratic monomials."""
    terms: dict = {}
    zero = (0,) * n
    for c, bc in enumerate(b):
        if not bc:
            continue
        for d, ad in enumerate(a):
            if not ad:
                continue
            key = (zero, ((min(c, d), max(c, d)),))
            terms[key] = terms.get(key, 0) + bc * ad
    return KoszulElement(n, terms, field)


def _linear(a: LinearForm, n: int, field: ExactField) -> KoszulElement:
    terms = {}
    for c, ac in enumerate(a):
        if ac:
            e = [0] * n
            e[c] = 1
            terms[tuple(e), ()] = ac
    return KoszulElement(n, terms, field)


def z_cycle(a: Sequence, b: Sequence, n: int, field: ExactField = QQ) -> KoszulElement:
    """``sum_sigma sgn(sigma) a_sigma(t+1) (x) b_1 a_sigma(1) ^ ... ^ b_t a_sigma(t)``.

    Expanded as a signed sum over injective assignments, one row at a time,
    so partial products with the same set of used ``a``-slots are merged.
    """
    a = [as_linear_form(x, n) for x in a]
    b = [as_linear_form(x, n) for x in b]
    t = len(b)
    if len(a) != t + 1:
        raise ValueError(f"need len(a) == len(b) + 1, got {len(a)} and {t}")
    rows = [[_quadratic(b[k], a[l], n, field) for l in range(t + 1)] for k in range(t)]
    rows.append([_linear(a[l], n, field) for l in range(t + 1)])
    states = {frozenset(): KoszulElement.one(n, field)}
    for row in rows:
        nxt: dict = {}
        for used, partial in states.items():
            if not partial:
                continue
            for l in range(t + 1):
                if l in used:
                    continue
                term = partial * row[l]
                if sum(1 for s in used if s > l) % 2:
                    term = -term
                key = used | {l}
                nxt[key] = nxt[key] + term if key in nxt else term
        states = nxt
    return states.get(frozenset(range(t + 1)), KoszulElement.zero(n, field))


def cycle_of(pair: CyclePair | TableauPair, n: int, field: ExactField = QQ) -> KoszulElement:
    return z_cycle(pair.a, pair.b, n, field)


tableau_cycle = cycle_of


def hook_cycle(i: int, n: int, field: ExactField = QQ) -> KoszulElement:
    """``Z_i``: the alternating sum over ``j <= i+1`` of
    ``x_j (x) x_1x_{i+1} ^ .. (omit x_j x_{i+1}) .. ^ x_{i+1}^2``."""
    if not 0 <= i < n:
        raise ValueError(f"Z_{i} needs 0 <= i < n = {n}")
    top = i  # 0-based index of x_{i+1}
    terms = {}
    for j in range(i + 1):
        exps = [0] * n
        exps[j] += 1
        wedge = tuple((k, top) for k in range(i + 1) if k != j)
        terms[tuple(exps), wedge] = 1 if j % 2 == 0 else -1
    return KoszulElement(n, terms, field)


def squarefree_Z_product(subset, n: int, field: ExactField = QQ) -> KoszulElement:
    out = KoszulElement.one(n, field)
    for i in sorted(set(subset)):
        out = out * hook_cycle(i, n, field)
    return out


def _is_squarefree_term(key) -> bool:
    exps, wedge = key
    return all(e <= 1 for e in exps) and all(a != b for a, b in wedge)


def squarefree_term_check(n: int, field: ExactField = QQ) -> dict:
    """The square-free term argument for ``Z_0 Z_1 ... Z_{n-1}``, made computational."""
    per_hook = {i: sum(1 for k in hook_cycle(i, n, field).keys() if _is_squarefree_term(k))
                for i in range(n)}
    full = squarefree_Z_product(range(n), n, field)
    t_key = ((1,) * n, tuple((j, i) for i in range(n) for j in range(i)))
    t_key = (t_key[0], tuple(sorted(t_key[1])))
    t_coeff = full.coefficient(*t_key)
    others_with_square = all(not _is_squarefree_term(k) for k in full.keys() if k != t_key)
    # every basis element one degree up in T's slice must miss T in its boundary
    hdeg = len(t_key[1])
    delta = (n,) * n
    up = slice_data(n, hdeg + 1, delta, field)
    hits = 0
    for exps, wedge in up.basis:
        src = KoszulElement._raw(n, field, {(exps, wedge): field(1)})
        if src.differential().coefficient(*t_key):
            hits += 1
    result = {
        "n": n,
        "squarefree_terms_per_hook": per_hook,
        "T_coefficient": str(t_coeff),
        "other_terms_have_square": others_with_square,
        "preimage_candidates": len(up.basis),
        "preimages_hitting_T": hits,
    }
    result["pass"] = (all(v == 1 for v in per_hook.values())
                      and t_coeff in (field(1), field(-1)) and others_with_square and hits == 0)
    return result


def garnir_sum(a: Sequence[int], btail: Sequence[int], n: int,
               field: ExactField = QQ) -> KoszulElement:
    """``sum_j (-1)^j z_{a^(j), b^(j)}`` with ``a^(j) = a`` minus ``a_j`` and
    ``b^(j) = (a_j, btail...)``; identically zero."""
    a, btail = list(a), list(btail)
    t = len(a) - 2
    if t < 1:
        raise ValueError("the Garnir relation needs t >= 1, i.e. len(a) >= 3")
    if len(btail) != t - 1:
        raise ValueError(f"need len(btail) == t - 1 = {t - 1}, got {len(btail)}")
    out = KoszulElement.zero(n, field)
    for j in range(1, t + 3):
        z = z_cycle(a[:j - 1] + a[j:], [a[j - 1]] + btail, n, field)
        out = out + (z if j % 2 == 0 else -z)
    return out


def tableau_generators(n: int, t: int) -> list[TableauPair]:
    out = []
    for a in combinations(range(1, n + 1), t + 1):
        for b in combinations_with_replacement(range(1, n + 1), t):
            if not b or a[0] <= b[0]:
                out.append(TableauPair(a, b))
    return out


def omega(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(1 for x in b if a[0] > x)


def _normalise_pair(a, b):
    """Sort ``a`` (alternating) and ``b`` (symmetric); sign 0 on a repeated ``a`` entry."""
    a = list(a)
    if len(set(a)) != len(a):
        return 0, (), ()
    inv = sum(1 for x in range(len(a)) for y in range(x + 1, len(a)) if a[x] > a[y])
    return (-1) ** inv, tuple(sorted(a)), tuple(sorted(b))


def straighten(a: Sequence[int], b: Sequence[int], n: int, field: ExactField = QQ,
               return_depth: bool = False):
    """Express ``z_{a,b}`` in the tableau cycles, inducting on ``omega``.

    With ``(a, b)`` sorted and ``omega > 0``, the Garnir relation for
    ``(b_1, a_1, ..., a_{t+1})`` and ``(b_2, ..., b_t)`` gives
    ``z_{a,b} = sum_{j >= 2} (-1)^j z_{abar^(j), bbar^(j)}``.
    """
    sign, a0, b0 = _normalise_pair(a, b)
    if any(not 1 <= x <= n for x in a0 + b0):
        raise ValueError("variable index out of range")
    if len(a0) != len(b0) + 1 and sign:
        raise ValueError("need len(a) == len(b) + 1")
    result: dict[TableauPair, object] = {}
    depth = 0
    if sign:
        depth = _straighten_into(a0, b0, field(sign), field, result, 0)
    result = {k: v for k, v in sorted(result.items()) if v}
    return (result, depth) if return_depth else result


def _straighten_into(a, b, coeff, field, acc, level) -> int:
    if omega(a, b) == 0:
        key = TableauPair(a, b)
        acc[key] = field(acc.get(key, 0) + coeff)
        return level
    abar = (b[0],) + tuple(a)
    bbar = tuple(b[1:])
    depth = level
    for j in range(2, len(abar) + 1):
        sa = abar[:j - 1] + abar[j:]
        sb = (abar[j - 1],) + bbar
        sign, na, nb = _normalise_pair(sa, sb)
        if not sign:
            continue
        c = field(coeff * sign * (1 if j % 2 == 0 else -1))
        depth = max(depth, _straighten_into(na, nb, c, field, acc, level + 1))
    return depth


def expand_combination(coeffs: dict, n: int, field: ExactField = QQ) -> KoszulElement:
    out = KoszulElement.zero(n, field)
    for pair, c in coeffs.items():
        out = out + cycle_of(pair, n, field).scale(c)
    return out


def strand_span_check(n: int, t: int, field: ExactField = QQ) -> dict:
    """Tableau cycles versus the lowest strand ``H_t(m^2)_{2t+1}``.

    Reports independence in ``K_t``, the dimension of their span in homology,
    the homology dimension and the hook-content dimension.  Over a field of
    positive characteristic the numbers are an experiment, not a claim.
    """
    pairs = tableau_generators(n, t)
    gens = [cycle_of(p, n, field) for p in pairs]
    all_cycles = all(not g.differential() for g in gens)
    chain: dict = {}
    homol: dict = {}
    independent = 0
    spanned = 0
    for g in gens:
        for delta, part in g.components().items():
            sl = slice_data(n, t, delta, field)
            vec = sl.to_vector(part)
            if delta not in chain:
                chain[delta] = Echelon(field)
                homol[delta] = sl.boundaries.copy()
            independent += chain[delta].add(vec)
            spanned += homol[delta].add(vec)
    hdim = homology_dim(n, t, 2 * t + 1, field, symmetric=False)
    sdim = schur_dim(hook_partition(t), n)
    result = {
        "n": n, "t": t, "field": repr(field),
        "generators": len(pairs),
        "schur_dim": sdim,
        "all_cycles": all_cycles,
        "independent_in_complex": independent == len(gens) and all(len(g.components()) == 1 for g in gens),
        "span_in_homology": spanned,
        "homology_dim": hdim,
    }
    result["pass"] = (all_cycles and result["independent_in_complex"]
                      and len(pairs) == sdim == hdim == spanned)
    return result


def random_cycle_pair(n: int, t: int, rng: random.Random, coeff_range: int = 2) -> CyclePair:
    form = lambda: tuple(rng.randint(-coeff_range, coeff_range) for _ in range(n))
    return CyclePair(tuple(form() for _ in range(t + 1)), tuple(form() for _ in range(t)))


def random_garnir_case(n: int, t: int, rng: random.Random) -> tuple[tuple[int, ...], tuple[int, ...]]:
    a = tuple(rng.randint(1, n) for _ in range(t + 2))
    btail = tuple(rng.randint(1, n) for _ in range(t - 1))
    return a, btail


def random_non_tableau(n: int, t: int, rng: random.Random):
    """Sorted ``(a, b)`` with distinct ``a`` and ``omega > 0``; None when impossible."""
    # omega > 0 forces a_1 >= 2, so a needs t+1 distinct values in 2..n
    if t < 1 or t + 1 > n - 1:
        return None
    for _ in range(1000):
        a = tuple(sorted(rng.sample(range(1, n + 1), t + 1)))
        b = tuple(sorted(rng.randint(1, n) for _ in range(t)))
        if omega(a, b) > 0:
            return a, b
    return None


def exhaustive_garnir_cases(n: int, t: int):
    for a in product(range(1, n + 1), repeat=t + 2):
        for btail in product(range(1, n + 1), repeat=t - 1):
            yield a, btail


def nonzero_products_check(n: int, field: ExactField = QQ) -> dict:
    subsets = [s for k in range(n + 1) for s in combinations(range(n), k)]
    rows = [{"subset": list(s), "nonzero": class_is_nonzero(squarefree_Z_product(s, n, field))}
            for s in subsets]
    return {"n": n, "field": repr(field), "subsets": rows, "pass": all(r["nonzero"] for r in rows)}
