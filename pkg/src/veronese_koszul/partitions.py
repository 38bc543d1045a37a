"""Partitions, Frobenius notation and a small amount of Schur function machinery.

Symmetric polynomials in ``n`` variables are plain ``dict`` objects mapping an
exponent tuple of length ``n`` to an integer coefficient.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from math import prod
from typing import Iterator, Mapping

Poly = dict  # exponent tuple -> int


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are accepted and dropped, so ``Partition((2, 1, 0))`` is
    ``Partition((2, 1))``.
    """

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[k] < parts[k + 1] for k in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if text in ("", "0", "()", "[]"):
            return cls(())
        return cls(int(p) for p in text.strip("()[]").split(","))

    def __str__(self):
        return ",".join(map(str, self)) if self else "0"

    def __repr__(self):
        return f"Partition({tuple(self)})"

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def is_self_conjugate(self) -> bool:
        return conjugate(self) == self

    def durfee(self) -> int:
        return sum(1 for i, p in enumerate(self, 1) if p >= i)

    def cells(self) -> Iterator[tuple[int, int]]:
        """0-based (row, column) cells in row-major order."""
        for r, p in enumerate(self):
            for c in range(p):
                yield r, c


def conjugate(lam) -> Partition:
    lam = tuple(lam)
    if not lam:
        return Partition(())
    return Partition(sum(1 for p in lam if p > c) for c in range(lam[0]))


@dataclass(frozen=True)
class FrobeniusForm:
    """Diagonal arm lengths of a self-conjugate partition."""

    arms: tuple[int, ...]

    def __post_init__(self):
        arms = tuple(int(m) for m in self.arms)
        object.__setattr__(self, "arms", arms)
        if any(m < 0 for m in arms):
            raise ValueError(f"Frobenius arms must be non-negative: {arms}")
        if any(arms[k] <= arms[k + 1] for k in range(len(arms) - 1)):
            raise ValueError(f"Frobenius arms must be strictly decreasing: {arms}")

    @property
    def s(self) -> int:
        return len(self.arms)

    @property
    def size(self) -> int:
        return sum(self.arms)

    def to_partition(self) -> Partition:
        return from_frobenius(self)

    def first_hook(self) -> Partition:
        """The hook ``(m+1, 1^m)`` on the first diagonal cell."""
        if not self.arms:
            raise ValueError("empty Frobenius form has no hooks")
        return hook_partition(self.arms[0])

    def tail(self) -> "FrobeniusForm":
        return FrobeniusForm(self.arms[1:])


def hook_partition(m: int) -> Partition:
    return Partition((m + 1,) + (1,) * m)


def frobenius(lam) -> FrobeniusForm:
    lam = Partition(lam)
    if not lam.is_self_conjugate():
        raise ValueError(f"{lam!r} is not self-conjugate")
    s = lam.durfee()
    return FrobeniusForm(tuple(lam[i] - i - 1 for i in range(s)))


def from_frobenius(mu) -> Partition:
    if not isinstance(mu, FrobeniusForm):
        mu = FrobeniusForm(tuple(mu))
    arms = mu.arms
    if not arms:
        return Partition(())
    s = len(arms)
    # the first s columns have lengths arms[k] + k + 1 by symmetry
    cols = [m + k + 1 for k, m in enumerate(arms)]
    rows = [m + k + 1 for k, m in enumerate(arms)]
    rows += [sum(1 for c in cols if c > r) for r in range(s, cols[0])]
    return Partition(rows)


def euler_image(mu) -> tuple[int, ...]:
    """Sizes of the diagonal hooks: a partition of ``|lambda|`` into distinct odd parts."""
    if not isinstance(mu, FrobeniusForm):
        mu = FrobeniusForm(tuple(mu))
    return tuple(2 * m + 1 for m in mu.arms)


def partitions_of(total: int, max_part: int | None = None,
                  max_len: int | None = None) -> Iterator[Partition]:
    """All partitions of ``total`` in reverse lexicographic order."""
    if max_part is None:
        max_part = total
    if max_len is None:
        max_len = total

    def rec(remaining, cap, slots):
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for p in range(min(cap, remaining), 0, -1):
            for rest in rec(remaining - p, p, slots - 1):
                yield (p,) + rest

    for parts in rec(total, max_part, max_len):
        yield Partition(parts)


def self_conjugate_partitions(total: int) -> list[Partition]:
    return [lam for lam in partitions_of(total) if lam.is_self_conjugate()]


def self_conjugate_enum(n: int, i: int, j: int) -> list[Partition]:
    """Self-conjugate partitions of ``j`` with at most ``n`` rows and ``|mu| = i``."""
    return [lam for lam in partitions_of(j, max_part=n, max_len=n)
            if lam.is_self_conjugate() and frobenius(lam).size == i]


def schur_dim(lam, n: int) -> int:
    """Number of SSYT of shape ``lam`` with entries in ``1..n`` (hook-content formula)."""
    lam = Partition(lam)
    if lam.length > n:
        return 0
    conj = conjugate(lam)
    num = prod(n + c - r for r, c in lam.cells())
    den = prod(lam[r] - c + conj[c] - r - 1 for r, c in lam.cells())
    return num // den


def ssyt(lam, n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Semistandard tableaux of shape ``lam`` with entries in ``1..n``."""
    lam = Partition(lam)
    cells = list(lam.cells())
    conj = conjugate(lam)
    filling: dict[tuple[int, int], int] = {}

    def rec(k):
        if k == len(cells):
            yield tuple(tuple(filling[r, c] for c in range(lam[r])) for r in range(len(lam)))
            return
        r, c = cells[k]
        lo = 1
        if c > 0:
            lo = max(lo, filling[r, c - 1])
        if r > 0:
            lo = max(lo, filling[r - 1, c] + 1)
        # leave room for the strictly increasing column below
        hi = n - (conj[c] - r - 1)
        for v in range(lo, hi + 1):
            filling[r, c] = v
            yield from rec(k + 1)
        filling.pop((r, c), None)

    yield from rec(0)


@lru_cache(maxsize=None)
def _schur_poly_items(lam: Partition, n: int) -> tuple:
    out: Counter = Counter()
    for tab in ssyt(lam, n):
        exps = [0] * n
        for row in tab:
            for v in row:
                exps[v - 1] += 1
        out[tuple(exps)] += 1
    return tuple(sorted(out.items()))


def schur_poly(lam, n: int) -> Poly:
    return dict(_schur_poly_items(Partition(lam), n))


def poly_mul(f: Mapping, g: Mapping) -> Poly:
    out: dict = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def poly_add(f: Mapping, g: Mapping, scale: int = 1) -> Poly:
    out = dict(f)
    for e, c in g.items():
        out[e] = out.get(e, 0) + scale * c
    return {e: c for e, c in out.items() if c}


class NonSymmetricError(ValueError):
    def __init__(self, witness):
        self.witness = witness
        e1, e2 = witness
        super().__init__(f"polynomial is not symmetric: coefficients at {e1} and {e2} differ")


@dataclass(frozen=True)
class SchurExpansion:
    """Multiplicities of Schur polynomials; negative values are kept, not rejected."""

    entries: Mapping[Partition, int] = field(default_factory=dict)

    def multiplicity(self, lam) -> int:
        return self.entries.get(Partition(lam), 0)

    def is_positive(self) -> bool:
        return all(c > 0 for c in self.entries.values())

    def to_poly(self, n: int) -> Poly:
        out: Poly = {}
        for lam, c in self.entries.items():
            out = poly_add(out, schur_poly(lam, n), c)
        return out

    def as_dict(self) -> dict[str, int]:
        return {str(lam): c for lam, c in sorted(self.entries.items(), reverse=True)}

    def __eq__(self, other):
        if isinstance(other, SchurExpansion):
            return dict(self.entries) == dict(other.entries)
        if isinstance(other, Mapping):
            return dict(self.entries) == {Partition(k): v for k, v in other.items()}
        return NotImplemented

    __hash__ = None


def check_symmetric(f: Mapping, n: int) -> None:
    """Raise NonSymmetricError with a witness pair if ``f`` is not symmetric."""
    for e, c in f.items():
        if len(e) != n:
            raise ValueError(f"exponent {e} has wrong length for n={n}")
        for k in range(n - 1):
            if e[k] == e[k + 1]:
                continue
            swapped = e[:k] + (e[k + 1], e[k]) + e[k + 2:]
            if f.get(swapped, 0) != c:
                raise NonSymmetricError((e, swapped))


def schur_expand(f: Mapping, n: int) -> SchurExpansion:
    """Expand a symmetric polynomial in the Schur basis.

    Works only with the dominant (weakly decreasing) exponents: the
    lexicographically largest one is dominance-maximal, and subtracting the
    matching Schur polynomial removes it while touching only smaller weights.
    """
    f = {e: c for e, c in f.items() if c}
    check_symmetric(f, n)
    dominant = {e: c for e, c in f.items() if all(e[k] >= e[k + 1] for k in range(n - 1))}
    result: dict[Partition, int] = {}
    while dominant:
        lead = max(dominant)
        c = dominant[lead]
        lam = Partition(lead)
        result[lam] = c
        for e, k in schur_poly(lam, n).items():
            if all(e[r] >= e[r + 1] for r in range(n - 1)):
                v = dominant.get(e, 0) - c * k
                if v:
                    dominant[e] = v
                else:
                    dominant.pop(e, None)
    return SchurExpansion(result)


def monomial_weights(f: Mapping) -> Counter:
    """Exponent multiset of a polynomial with non-negative integer coefficients."""
    return Counter({e: c for e, c in f.items() if c})


def lr_selfconjugate_check(lam) -> dict:
    """Expand ``s_nu * s_lambda_hat`` in ``mu_1 + 1`` variables and inspect self-conjugate constituents."""
    lam = Partition(lam)
    mu = frobenius(lam)
    if mu.s == 0:
        raise ValueError("the LR check needs a nonempty partition")
    nu = mu.first_hook()
    lam_hat = from_frobenius(mu.tail())
    dim_v = mu.arms[0] + 1
    expansion = schur_expand(poly_mul(schur_poly(nu, dim_v), schur_poly(lam_hat, dim_v)), dim_v)
    others = {str(rho): c for rho, c in expansion.entries.items()
              if rho != lam and rho.is_self_conjugate() and c != 0}
    return {
        "lambda": str(lam),
        "nu": str(nu),
        "lambda_hat": str(lam_hat),
        "dim_V": dim_v,
        "expansion": expansion.as_dict(),
        "multiplicity": expansion.multiplicity(lam),
        "other_self_conjugate": others,
        "pass": expansion.multiplicity(lam) >= 1 and not others,
    }


def distinct_odd_partitions(total: int) -> list[Partition]:
    return [lam for lam in partitions_of(total)
            if all(p % 2 for p in lam) and len(set(lam)) == len(lam)]
