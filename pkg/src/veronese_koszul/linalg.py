"""Exact sparse linear algebra over the rationals and over GF(p).

Vectors are ``dict[int, scalar]`` with no stored zeros.  Over the rationals all
elimination runs on integer vectors: a row is combined with a pivot row by
cross-multiplication and the result is divided by its content, so pivots stay
integral and every division is exact.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Iterable, Mapping, TextIO

Vector = dict


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


class ExactField:
    """The rationals (characteristic 0) or the prime field GF(p)."""

    __slots__ = ("characteristic",)

    def __init__(self, characteristic: int = 0):
        if characteristic != 0 and not _is_prime(characteristic):
            raise ValueError(f"characteristic must be 0 or prime, got {characteristic}")
        self.characteristic = characteristic

    def __repr__(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"

    def __eq__(self, other):
        return isinstance(other, ExactField) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("ExactField", self.characteristic))

    def __call__(self, x):
        """Coerce ``x`` (int, Fraction or string) into the field."""
        p = self.characteristic
        if isinstance(x, str):
            x = Fraction(x)
        if p == 0:
            if isinstance(x, Fraction):
                return x.numerator if x.denominator == 1 else x
            return int(x) if not isinstance(x, int) else x
        if isinstance(x, Fraction):
            if x.denominator % p == 0:
                raise ZeroDivisionError(f"{x} has no image in GF({p})")
            return x.numerator * pow(x.denominator, -1, p) % p
        return x % p

    def inv(self, x):
        if self.characteristic == 0:
            return self(Fraction(1) / x)
        x = self(x)
        if not x:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.characteristic})")
        return pow(x, -1, self.characteristic)

    def format(self, x) -> str:
        return str(x)


@lru_cache(maxsize=None)
def GF(p: int) -> ExactField:
    return ExactField(p)


QQ = ExactField(0)


def field_of(characteristic: int) -> ExactField:
    return QQ if characteristic == 0 else GF(characteristic)


class SparseMatrix:
    """Immutable sparse matrix, stored column-major."""

    __slots__ = ("rows", "cols", "_columns")

    def __init__(self, rows: int, cols: int, entries: Mapping[tuple[int, int], object] = (),
                 columns: Mapping[int, Mapping[int, object]] | None = None):
        self.rows = rows
        self.cols = cols
        colmap: dict[int, dict[int, object]] = {}
        items = entries.items() if isinstance(entries, Mapping) else entries
        for (r, c), v in items:
            if v:
                colmap.setdefault(c, {})[r] = v
        if columns is not None:
            for c, col in columns.items():
                for r, v in col.items():
                    if v:
                        colmap.setdefault(c, {})[r] = v
        for c, col in colmap.items():
            if not 0 <= c < cols or any(not 0 <= r < rows for r in col):
                raise IndexError(f"entry out of range for a {rows}x{cols} matrix")
        self._columns = colmap

    @classmethod
    def from_columns(cls, rows: int, columns: Iterable[Mapping[int, object]]) -> "SparseMatrix":
        columns = list(columns)
        return cls(rows, len(columns), columns=dict(enumerate(columns)))

    @classmethod
    def from_dense(cls, dense) -> "SparseMatrix":
        dense = [list(r) for r in dense]
        rows = len(dense)
        cols = len(dense[0]) if rows else 0
        return cls(rows, cols, {(r, c): v for r, row in enumerate(dense)
                                for c, v in enumerate(row) if v})

    @classmethod
    def identity(cls, k: int) -> "SparseMatrix":
        return cls(k, k, {(i, i): 1 for i in range(k)})

    def column(self, c: int) -> Vector:
        return dict(self._columns.get(c, {}))

    def columns(self) -> list[Vector]:
        return [self.column(c) for c in range(self.cols)]

    def entries(self) -> dict[tuple[int, int], object]:
        return {(r, c): v for c, col in self._columns.items() for r, v in col.items()}

    @property
    def nnz(self) -> int:
        return sum(len(col) for col in self._columns.values())

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.cols, self.rows, {(c, r): v for (r, c), v in self.entries().items()})

    def apply(self, v: Mapping[int, object], field: ExactField = QQ) -> Vector:
        out: dict[int, object] = {}
        for c, x in v.items():
            for r, a in self._columns.get(c, {}).items():
                out[r] = field(out.get(r, 0) + a * x)
        return {r: x for r, x in out.items() if x}

    def to_dense(self) -> list[list]:
        dense = [[0] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries().items():
            dense[r][c] = v
        return dense

    def __eq__(self, other):
        return (isinstance(other, SparseMatrix) and (self.rows, self.cols) == (other.rows, other.cols)
                and self.entries() == other.entries())

    __hash__ = None

    def __repr__(self):
        return f"SparseMatrix({self.rows}x{self.cols}, nnz={self.nnz})"


def write_matrix_market(M: SparseMatrix, stream: TextIO, comment: str = "") -> None:
    """Matrix Market coordinate format; rational entries are written as ``p/q``."""
    kind = "integer" if all(isinstance(v, int) for v in M.entries().values()) else "real"
    stream.write(f"%%MatrixMarket matrix coordinate {kind} general\n")
    if comment:
        for line in comment.splitlines():
            stream.write(f"% {line}\n")
    entries = sorted(M.entries().items(), key=lambda kv: (kv[0][1], kv[0][0]))
    stream.write(f"{M.rows} {M.cols} {len(entries)}\n")
    for (r, c), v in entries:
        stream.write(f"{r + 1} {c + 1} {v}\n")


def read_matrix_market(stream: TextIO) -> SparseMatrix:
    lines = [ln for ln in stream.read().splitlines() if ln and not ln.startswith("%")]
    rows, cols, _ = map(int, lines[0].split())
    entries = {}
    for ln in lines[1:]:
        r, c, v = ln.split()
        x = Fraction(v)
        entries[int(r) - 1, int(c) - 1] = x.numerator if x.denominator == 1 else x
    return SparseMatrix(rows, cols, entries)


def _content(values) -> int:
    g = 0
    for x in values:
        g = gcd(g, x)
        if g == 1:
            break
    return g


class Echelon:
    """Incrementally built echelon basis of a subspace.

    Each stored row has a pivot column; a row never contains the pivot of a
    row inserted before it.  Reducing a vector by eliminating pivots in
    insertion order therefore leaves a remainder supported off the pivot set,
    and that remainder is the unique such element of the coset.

    With ``track=True`` every row remembers how it was combined from the
    labelled input vectors, which is what span membership needs.
    """

    def __init__(self, field: ExactField = QQ, track: bool = False):
        self.field = field
        self.track = track
        self._rows: dict[int, tuple[dict, dict]] = {}
        self._order: dict[int, int] = {}

    def copy(self) -> "Echelon":
        other = Echelon(self.field, self.track)
        other._rows = dict(self._rows)
        other._order = dict(self._order)
        return other

    @property
    def rank(self) -> int:
        return len(self._rows)

    def __len__(self):
        return len(self._rows)

    @property
    def pivots(self) -> list[int]:
        return sorted(self._rows, key=self._order.__getitem__)

    def _prepare(self, v: Mapping[int, object]):
        """Return (vector, scale) with vector = scale * v in working form."""
        if self.field.characteristic:
            f = self.field
            out = {k: f(x) for k, x in v.items()}
            return {k: x for k, x in out.items() if x}, 1
        v = {k: x for k, x in v.items() if x}
        den = 1
        for x in v.values():
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
        w = {k: int(x * den) for k, x in v.items()}
        g = _content(w.values())
        if g > 1:
            w = {k: x // g for k, x in w.items()}
        return w, Fraction(den, g or 1)

    def _reduce_raw(self, v: dict, scale, hist: dict | None):
        """Eliminate every pivot from ``v``; invariant: v = scale*v0 - sum(hist[k]*g_k)."""
        rows, order = self._rows, self._order
        p = self.field.characteristic
        while True:
            best = None
            for c in v:
                o = order.get(c)
                if o is not None and (best is None or o < best[0]):
                    best = (o, c)
            if best is None:
                return v, scale, hist
            c = best[1]
            row, rhist = rows[c]
            a = v[c]
            if p:
                # stored rows are normalised to a unit pivot
                for k, x in row.items():
                    y = (v.get(k, 0) - a * x) % p
                    if y:
                        v[k] = y
                    else:
                        v.pop(k, None)
                if hist is not None:
                    for k, x in rhist.items():
                        y = (hist.get(k, 0) + a * x) % p
                        if y:
                            hist[k] = y
                        else:
                            hist.pop(k, None)
            else:
                lead = row[c]
                g = gcd(a, lead)
                mv, mr = lead // g, a // g
                if mv != 1:
                    v = {k: mv * x for k, x in v.items()}
                for k, x in row.items():
                    y = v.get(k, 0) - mr * x
                    if y:
                        v[k] = y
                    else:
                        v.pop(k, None)
                if hist is not None:
                    if mv != 1:
                        hist = {k: mv * x for k, x in hist.items()}
                    for k, x in rhist.items():
                        y = hist.get(k, 0) + mr * x
                        if y:
                            hist[k] = y
                        else:
                            hist.pop(k, None)
                scale = scale * mv
                cont = _content(v.values())
                if cont > 1:
                    v = {k: x // cont for k, x in v.items()}
                    scale = Fraction(scale, cont)
                    if hist is not None:
                        hist = {k: Fraction(x, cont) for k, x in hist.items()}

    def reduce(self, v: Mapping[int, object]) -> Vector:
        """Canonical representative of ``v`` modulo the stored subspace."""
        w, scale = self._prepare(v)
        w, scale, _ = self._reduce_raw(w, scale, None)
        if not w:
            return {}
        f = self.field
        if f.characteristic:
            return w
        return {k: f(Fraction(x) / scale) for k, x in w.items()}

    def contains(self, v: Mapping[int, object]) -> bool:
        w, scale = self._prepare(v)
        return not self._reduce_raw(w, scale, None)[0]

    def add(self, v: Mapping[int, object], label=None) -> bool:
        """Insert ``v``; return True when it was independent of the stored rows."""
        w, scale = self._prepare(v)
        hist = {} if self.track else None
        w, scale, hist = self._reduce_raw(w, scale, hist)
        if not w:
            return False
        # row history: w = scale * g_label - sum(hist)
        if self.track:
            rhist = {k: -x for k, x in hist.items()}
            rhist[label] = rhist.get(label, 0) + scale
            rhist = {k: x for k, x in rhist.items() if x}
        else:
            rhist = {}
        self._insert_reduced(w, rhist)
        return True

    def _insert_reduced(self, w: dict, rhist: dict) -> None:
        # prefer a unit pivot, then the smallest column
        if self.field.characteristic:
            p = self.field.characteristic
            c = min(w)
            inv = pow(w[c], -1, p)
            w = {k: x * inv % p for k, x in w.items()}
            rhist = {k: x * inv % p for k, x in rhist.items()}
        else:
            c = min(w, key=lambda k: (abs(w[k]) != 1, k))
        self._order[c] = len(self._order)
        self._rows[c] = (w, rhist)

    def express(self, v: Mapping[int, object]):
        """Coefficients over the labelled inputs summing to ``v``, or None."""
        if not self.track:
            raise ValueError("express() needs an Echelon built with track=True")
        w, scale = self._prepare(v)
        w, scale, hist = self._reduce_raw(w, scale, {})
        if w:
            return None
        f = self.field
        if f.characteristic:
            inv = pow(scale, -1, f.characteristic) if scale != 1 else 1
            return {k: x * inv % f.characteristic for k, x in hist.items() if x}
        return {k: f(Fraction(x) / scale) for k, x in hist.items() if x}


def _sorted_by_fill(M: SparseMatrix) -> list[int]:
    return sorted(range(M.cols), key=lambda c: (len(M._columns.get(c, ())), c))


def rank(M: SparseMatrix, field: ExactField = QQ) -> int:
    ech = Echelon(field)
    for c in _sorted_by_fill(M):
        ech.add(M._columns.get(c, {}))
    return ech.rank


def kernel_basis(M: SparseMatrix, field: ExactField = QQ) -> list[Vector]:
    """Basis of the right kernel; over QQ the vectors are primitive integer vectors."""
    ech = Echelon(field, track=True)
    out = []
    for c in range(M.cols):
        w, scale = ech._prepare(M._columns.get(c, {}))
        w, scale, hist = ech._reduce_raw(w, scale, {})
        if w:
            rhist = {k: -x for k, x in hist.items()}
            rhist[c] = rhist.get(c, 0) + scale
            ech._insert_reduced(w, {k: x for k, x in rhist.items() if x})
            continue
        vec = {k: -x for k, x in hist.items()}
        vec[c] = vec.get(c, 0) + scale
        out.append(_normalise(vec, field))
    return out


def _normalise(vec: Mapping[int, object], field: ExactField) -> Vector:
    vec = {k: x for k, x in vec.items() if x}
    if field.characteristic:
        p = field.characteristic
        return {k: x % p for k, x in vec.items() if x % p}
    den = 1
    for x in vec.values():
        if isinstance(x, Fraction):
            den = lcm(den, x.denominator)
    ints = {k: int(x * den) for k, x in vec.items()}
    g = _content(ints.values()) or 1
    return {k: x // g for k, x in ints.items()}


@dataclass(frozen=True)
class SpanResult:
    """Outcome of a span-membership query.

    ``coefficients`` maps column index to scalar when ``member`` is true;
    otherwise ``certificate`` is a row functional vanishing on every column
    and nonzero on the queried vector.
    """

    member: bool
    coefficients: dict | None = None
    certificate: dict | None = None

    def __bool__(self):
        return self.member


def in_span(v: Mapping[int, object], columns: SparseMatrix, field: ExactField = QQ) -> SpanResult:
    ech = Echelon(field, track=True)
    for c in range(columns.cols):
        ech.add(columns._columns.get(c, {}), label=c)
    coeffs = ech.express(v)
    if coeffs is not None:
        return SpanResult(True, coefficients=coeffs)
    for phi in kernel_basis(columns.transpose(), field):
        val = field(sum(phi.get(k, 0) * x for k, x in v.items()))
        if val:
            return SpanResult(False, certificate=phi)
    raise AssertionError("no certificate found for a vector outside the span")


def quotient_reduce(v: Mapping[int, object], subspace, field: ExactField = QQ) -> Vector:
    """Canonical coset representative of ``v`` modulo the column span of ``subspace``.

    ``subspace`` may be a SparseMatrix or an already built Echelon.
    """
    if isinstance(subspace, SparseMatrix):
        ech = Echelon(field)
        for c in _sorted_by_fill(subspace):
            ech.add(subspace._columns.get(c, {}))
        subspace = ech
    return subspace.reduce(v)


def smith_invariants(M: SparseMatrix) -> list[int]:
    """Nonzero invariant factors of an integer matrix, in divisibility order."""
    A = [[int(x) for x in row] for row in M.to_dense()]
    m, n = M.rows, M.cols
    out = []
    t = 0
    while t < min(m, n):
        nz = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not nz:
            break
        _, pi, pj = min(nz)
        A[t], A[pi] = A[pi], A[t]
        for row in A:
            row[t], row[pj] = row[pj], row[t]
        while True:
            p = A[t][t]
            done = True
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // p
                    A[i] = [x - q * y for x, y in zip(A[i], A[t])]
                    if A[i][t]:
                        done = False
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // p
                    for row in A:
                        row[j] -= q * row[t]
                    if A[t][j]:
                        done = False
            if done:
                bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                            if A[i][j] % p), None)
                if bad is None:
                    break
                A[t] = [x + y for x, y in zip(A[t], A[bad[0]])]
                continue
            # move the smallest nonzero entry of row/column t to the corner
            cand = [(abs(A[i][t]), i, t) for i in range(t, m) if A[i][t]]
            cand += [(abs(A[t][j]), t, j) for j in range(t, n) if A[t][j]]
            _, pi, pj = min(cand)
            A[t], A[pi] = A[pi], A[t]
            for row in A:
                row[t], row[pj] = row[pj], row[t]
        out.append(abs(A[t][t]))
        t += 1
    return out
