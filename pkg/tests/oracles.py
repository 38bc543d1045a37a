"""Brute-force reference implementations used by the tests.

Nothing here imports the library.  Everything is dense, naive and slow on
purpose, so agreement with the library is evidence and not a tautology.
Keys follow the library's layout: ``(exps, wedge)`` with 0-based quadratic
monomials ``(a, b)``, ``a <= b``, and a lexicographically sorted wedge.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import combinations, permutations, product
from math import gcd, prod


# -- linear algebra ---------------------------------------------------------------

def frac_rank(rows) -> int:
    """Rank by textbook Gaussian elimination over Fractions."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return 0
    rk, ncols = 0, len(m[0])
    for c in range(ncols):
        piv = next((r for r in range(rk, len(m)) if m[r][c] != 0), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        for r in range(len(m)):
            if r != rk and m[r][c] != 0:
                f = m[r][c] / m[rk][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[rk])]
        rk += 1
    return rk


def bareiss_rank(rows) -> int:
    """Rank by classical one-step Bareiss elimination on integer matrices."""
    m = [list(map(int, r)) for r in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    prev, rk = 1, 0
    for c in range(ncols):
        piv = next((r for r in range(rk, nrows) if m[r][c]), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        for r in range(rk + 1, nrows):
            for k in range(c + 1, ncols):
                num = m[r][k] * m[rk][c] - m[r][c] * m[rk][k]
                assert num % prev == 0, "Bareiss division must be exact"
                m[r][k] = num // prev
            m[r][c] = 0
        prev = m[rk][c]
        rk += 1
    return rk


def rank_mod_p(rows, p: int) -> int:
    m = [[int(x) % p for x in r] for r in rows]
    if not m:
        return 0
    rk = 0
    for c in range(len(m[0])):
        piv = next((r for r in range(rk, len(m)) if m[r][c]), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        inv = pow(m[rk][c], -1, p)
        m[rk] = [x * inv % p for x in m[rk]]
        for r in range(len(m)):
            if r != rk and m[r][c]:
                f = m[r][c]
                m[r] = [(x - f * y) % p for x, y in zip(m[r], m[rk])]
        rk += 1
    return rk


def rank_oracle(rows, char: int = 0) -> int:
    return frac_rank(rows) if char == 0 else rank_mod_p(rows, char)


def determinant(rows) -> Fraction:
    m = [[Fraction(x) for x in r] for r in rows]
    n, det = len(m), Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return det


def invariant_factors(rows) -> list[int]:
    """Nonzero invariant factors from determinantal divisors (gcd of k-minors)."""
    if not rows or not rows[0]:
        return []
    nr, nc = len(rows), len(rows[0])
    divisors = [1]
    for k in range(1, min(nr, nc) + 1):
        g = 0
        for rs in combinations(range(nr), k):
            for cs in combinations(range(nc), k):
                g = gcd(g, int(determinant([[rows[r][c] for c in cs] for r in rs])))
        if g == 0:
            break
        divisors.append(g)
    return [divisors[k] // divisors[k - 1] for k in range(1, len(divisors))]


# -- the Koszul complex, built from scratch ------------------------------------------

def quads(n: int) -> list[tuple[int, int]]:
    return [(a, b) for a in range(n) for b in range(a, n)]


def monomials(deg: int, n: int) -> list[tuple[int, ...]]:
    if deg < 0:
        return []
    return [e for e in product(range(deg + 1), repeat=n) if sum(e) == deg]


def sort_with_sign(seq):
    """Bubble sort counting swaps; sign 0 on a repeated factor."""
    s, sign = list(seq), 1
    for i in range(len(s)):
        for k in range(len(s) - 1 - i):
            if s[k] > s[k + 1]:
                s[k], s[k + 1] = s[k + 1], s[k]
                sign = -sign
    if any(s[k] == s[k + 1] for k in range(len(s) - 1)):
        return 0, None
    return sign, tuple(s)


def koszul_basis(n: int, i: int, j: int) -> list:
    return [(e, w) for w in combinations(quads(n), i) for e in monomials(j - 2 * i, n)]


def d_term(key) -> dict:
    exps, wedge = key
    out = {}
    for m, (a, b) in enumerate(wedge):
        e = list(exps)
        e[a] += 1
        e[b] += 1
        k = (tuple(e), wedge[:m] + wedge[m + 1:])
        out[k] = out.get(k, 0) + (-1) ** m
    return out


def d_element(terms: dict) -> dict:
    out = {}
    for key, c in terms.items():
        for k, s in d_term(key).items():
            out[k] = out.get(k, 0) + s * c
    return {k: v for k, v in out.items() if v}


def wedge_product(u: dict, v: dict) -> dict:
    out = {}
    for (e1, w1), c1 in u.items():
        for (e2, w2), c2 in v.items():
            sign, w = sort_with_sign(w1 + w2)
            if not sign:
                continue
            k = (tuple(x + y for x, y in zip(e1, e2)), w)
            out[k] = out.get(k, 0) + sign * c1 * c2
    return {k: v for k, v in out.items() if v}


def differential_matrix(n: int, i: int, j: int) -> list[list[int]]:
    """Dense matrix of ``d_i : K_i(j) -> K_{i-1}(j)``."""
    src, tgt = koszul_basis(n, i, j), koszul_basis(n, i - 1, j) if i > 0 else []
    index = {k: r for r, k in enumerate(tgt)}
    rows = [[0] * len(src) for _ in tgt]
    for c, key in enumerate(src):
        for k, s in d_term(key).items():
            rows[index[k]][c] += s
    return rows


def koszul_homology_dim(n: int, i: int, j: int, char: int = 0) -> int:
    dim = len(koszul_basis(n, i, j))
    if not dim:
        return 0
    out = rank_oracle(differential_matrix(n, i, j), char) if i > 0 else 0
    inn = rank_oracle(differential_matrix(n, i + 1, j), char) if koszul_basis(n, i + 1, j) else 0
    return dim - out - inn


def in_image(n: int, i: int, j: int, terms: dict, char: int = 0) -> bool:
    """Is the bidegree-(i, j) element ``terms`` in the image of ``d_{i+1}``?"""
    basis = koszul_basis(n, i, j)
    index = {k: r for r, k in enumerate(basis)}
    vec = [0] * len(basis)
    for k, c in terms.items():
        vec[index[k]] = c
    if not koszul_basis(n, i + 1, j):
        return not any(vec)
    m = differential_matrix(n, i + 1, j)
    aug = [r + [v] for r, v in zip(m, vec)]
    return rank_oracle(m, char) == rank_oracle(aug, char)


# -- z_{a,b} by the permutation formula -----------------------------------------------

def perm_sign(p) -> int:
    inv = sum(1 for x in range(len(p)) for y in range(x + 1, len(p)) if p[x] > p[y])
    return -1 if inv % 2 else 1


def _form(x, n):
    if isinstance(x, int):
        return tuple(1 if k == x - 1 else 0 for k in range(n))
    return tuple(x)


def z_expand(a, b, n: int) -> dict:
    """``sum_sigma sgn(sigma) a_sigma(t+1) (x) (b_1 a_sigma(1)) ^ ... ^ (b_t a_sigma(t))``."""
    a = [_form(x, n) for x in a]
    b = [_form(x, n) for x in b]
    t = len(b)
    out = {}
    for sigma in permutations(range(t + 1)):
        sg = perm_sign(sigma)
        lead = a[sigma[t]]
        # each wedge factor b_k a_sigma(k) is a quadratic form: expand multilinearly
        factors = []
        for k in range(t):
            f = {}
            for p, q in product(range(n), repeat=2):
                c = b[k][p] * a[sigma[k]][q]
                if c:
                    key = (min(p, q), max(p, q))
                    f[key] = f.get(key, 0) + c
            factors.append([(q, c) for q, c in f.items() if c])
        for v in range(n):
            if not lead[v]:
                continue
            exps = tuple(1 if k == v else 0 for k in range(n))
            for choice in product(*factors):
                sign, w = sort_with_sign([q for q, _ in choice])
                if not sign:
                    continue
                c = sg * sign * lead[v] * prod(c for _, c in choice)
                out[exps, w] = out.get((exps, w), 0) + c
    return {k: v for k, v in out.items() if v}


def hook_Z(i: int, n: int) -> dict:
    """``Z_i`` written out from its defining sum, 0-based index ``i``."""
    out = {}
    for j in range(i + 1):
        exps = tuple(1 if k == j else 0 for k in range(n))
        wedge = [(k, i) for k in range(i + 1) if k != j]
        sign, w = sort_with_sign(wedge)
        out[exps, w] = (-1) ** j * sign
    return out


# -- partitions and symmetric functions ---------------------------------------------------

def partitions_brute(total: int) -> set[tuple[int, ...]]:
    out = set()

    def rec(rem, parts):
        if rem == 0:
            out.add(tuple(sorted(parts, reverse=True)))
            return
        for p in range(1, rem + 1):
            rec(rem - p, parts + [p])

    rec(total, [])
    return out


def conjugate_brute(lam) -> tuple[int, ...]:
    cells = {(r, c) for r, p in enumerate(lam) for c in range(p)}
    cols = Counter(c for _, c in cells)
    return tuple(cols[c] for c in range(len(cols)))


def ssyt_brute(lam, n: int) -> list[dict]:
    """All semistandard fillings with entries 1..n by brute force over all fillings."""
    cells = [(r, c) for r, p in enumerate(lam) for c in range(p)]
    out = []
    for values in product(range(1, n + 1), repeat=len(cells)):
        T = dict(zip(cells, values))
        rows_ok = all(T[r, c] <= T[r, c + 1] for (r, c) in cells if (r, c + 1) in T)
        cols_ok = all(T[r, c] < T[r + 1, c] for (r, c) in cells if (r + 1, c) in T)
        if rows_ok and cols_ok:
            out.append(T)
    return out


def schur_weights_brute(lam, n: int) -> Counter:
    out = Counter()
    for T in ssyt_brute(lam, n):
        cnt = Counter(T.values())
        out[tuple(cnt[k] for k in range(1, n + 1))] += 1
    return out


def weyl_dim(lam, n: int) -> int:
    """Weyl dimension formula for GL_n."""
    lam = list(lam) + [0] * max(0, n - len(lam))
    if len(lam) > n and any(lam[n:]):
        return 0
    num = prod(lam[i] - lam[j] + j - i for i in range(n) for j in range(i + 1, n))
    den = prod(j - i for i in range(n) for j in range(i + 1, n))
    return num // den


def durfee(lam) -> int:
    return sum(1 for i, p in enumerate(lam) if p >= i + 1)


def self_conjugate_brute(n: int, i: int, j: int) -> set[tuple[int, ...]]:
    """Self-conjugate lambda, at most n rows, |lambda| = j, and |mu| = i in Frobenius form."""
    out = set()
    for lam in partitions_brute(j) if j > 0 else {()}:
        if len(lam) > n or conjugate_brute(lam) != lam:
            continue
        s = durfee(lam)
        if sum(lam[k] - k - 1 for k in range(s)) == i:
            out.add(lam)
    return out


# -- the matching complex ---------------------------------------------------------------

def matching_faces(n: int, k: int) -> list:
    if k < -1:
        return []
    pairs = list(combinations(range(1, n + 1), 2))
    return [f for f in combinations(pairs, k + 1) if len({v for p in f for v in p}) == 2 * (k + 1)]


def matching_boundary(n: int, k: int) -> list[list[int]]:
    src, tgt = matching_faces(n, k), matching_faces(n, k - 1)
    index = {f: r for r, f in enumerate(tgt)}
    rows = [[0] * len(src) for _ in tgt]
    for c, f in enumerate(src):
        for m in range(len(f)):
            rows[index[f[:m] + f[m + 1:]]][c] += (-1) ** m
    return rows


def matching_reduced_homology(n: int, k: int, char: int = 0) -> int:
    dim = len(matching_faces(n, k))
    if not dim:
        return 0
    out = rank_oracle(matching_boundary(n, k), char) if k >= 0 else 0
    up = matching_faces(n, k + 1)
    inn = rank_oracle(matching_boundary(n, k + 1), char) if up else 0
    return dim - out - inn
