"""Exact sparse linear algebra over the rationals.

Two independent rank routes are provided: fraction-free (Bareiss) integer
elimination, which is the certified path, and rank modulo several word-size
primes, which is the fast path.  Kernels and preimages use sparse rational
Gauss-Jordan elimination with deterministic pivoting (first usable row,
columns in order).
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

PRIMES = (2147483647, 2147483629, 2147483587, 1000000007)


class DimensionError(ValueError):
    pass


class SparseMatrix:
    """Rows x cols matrix stored as ``{row: {col: Fraction}}`` without zeros."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, entries=()):
        self.nrows = nrows
        self.ncols = ncols
        self.rows = {}
        for i, j, x in entries:
            self.add(i, j, x)

    def add(self, i: int, j: int, x) -> None:
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexError(f"entry ({i}, {j}) outside {self.nrows}x{self.ncols}")
        x = Fraction(x)
        if not x:
            return
        row = self.rows.setdefault(i, {})
        y = row.get(j, 0) + x
        if y:
            row[j] = y
        else:
            del row[j]
            if not row:
                del self.rows[i]

    @classmethod
    def from_dense(cls, dense) -> "SparseMatrix":
        dense = [list(r) for r in dense]
        ncols = len(dense[0]) if dense else 0
        m = cls(len(dense), ncols)
        for i, r in enumerate(dense):
            for j, x in enumerate(r):
                m.add(i, j, x)
        return m

    def to_dense(self) -> list:
        out = [[Fraction(0)] * self.ncols for _ in range(self.nrows)]
        for i, row in self.rows.items():
            for j, x in row.items():
                out[i][j] = x
        return out

    def entries(self):
        for i in sorted(self.rows):
            for j in sorted(self.rows[i]):
                yield i, j, self.rows[i][j]

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows.values())

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.ncols, self.nrows, ((j, i, x) for i, j, x in self.entries()))

    def matvec(self, v) -> list:
        out = [Fraction(0)] * self.nrows
        for i, row in self.rows.items():
            out[i] = sum((x * v[j] for j, x in row.items()), Fraction(0))
        return out

    def matmul(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.ncols != other.nrows:
            raise DimensionError("inner dimensions differ")
        out = SparseMatrix(self.nrows, other.ncols)
        for i, row in self.rows.items():
            acc = {}
            for k, x in row.items():
                for j, y in other.rows.get(k, {}).items():
                    acc[j] = acc.get(j, 0) + x * y
            for j, z in acc.items():
                out.add(i, j, z)
        return out

    def is_zero(self) -> bool:
        return not self.rows

    def __eq__(self, other) -> bool:
        return (isinstance(other, SparseMatrix) and self.nrows == other.nrows
                and self.ncols == other.ncols and self.rows == other.rows)

    def __repr__(self) -> str:
        return f"SparseMatrix({self.nrows}x{self.ncols}, nnz={self.nnz()})"


# ---------------------------------------------------------------- rank routes

def _integer_rows(m: SparseMatrix) -> list:
    """Scale each row by the lcm of its denominators."""
    out = []
    for i in sorted(m.rows):
        row = m.rows[i]
        den = lcm(*(x.denominator for x in row.values()))
        out.append({j: int(x * den) for j, x in row.items()})
    return out


def rank_bareiss(m: SparseMatrix) -> int:
    """Certified rank by fraction-free elimination on integer rows."""
    rows = [[r.get(j, 0) for j in range(m.ncols)] for r in _integer_rows(m)]
    nr, nc = len(rows), m.ncols
    prev = 1
    rank = 0
    for col in range(nc):
        piv = next((i for i in range(rank, nr) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank][col]
        for i in range(rank + 1, nr):
            a = rows[i][col]
            ri, rr = rows[i], rows[rank]
            for j in range(col + 1, nc):
                ri[j] = (p * ri[j] - a * rr[j]) // prev
            ri[col] = 0
        prev = p
        rank += 1
        if rank == nr:
            break
    return rank


def rank_mod_p(m: SparseMatrix, p: int) -> int:
    rows = []
    for i in sorted(m.rows):
        row = {}
        for j, x in m.rows[i].items():
            den = x.denominator % p
            if den == 0:
                raise ZeroDivisionError("denominator divisible by the prime")
            v = x.numerator * pow(den, -1, p) % p
            if v:
                row[j] = v
        if row:
            rows.append(row)
    pivots = {}
    rank = 0
    for row in rows:
        while row:
            col = min(row)
            if col not in pivots:
                inv = pow(row[col], -1, p)
                pivots[col] = {j: v * inv % p for j, v in row.items()}
                rank += 1
                break
            prow = pivots[col]
            f = row[col]
            for j, v in prow.items():
                nv = (row.get(j, 0) - f * v) % p
                if nv:
                    row[j] = nv
                else:
                    row.pop(j, None)
    return rank


def rank_modular(m: SparseMatrix, primes=PRIMES) -> int:
    """Fast path: rank over several primes; the maximum is the rational rank
    unless every prime is unlucky."""
    best = 0
    for p in primes:
        try:
            best = max(best, rank_mod_p(m, p))
        except ZeroDivisionError:
            continue
    return best


def rank(m: SparseMatrix, certified: bool = False) -> int:
    if certified:
        return rank_bareiss(m)
    return rank_modular(m)


# ---------------------------------------------------------------- Gauss-Jordan over Q

def _rref(m: SparseMatrix):
    """Sparse reduced row echelon form: returns (pivot rows by column, order)."""
    pivots = {}
    order = []
    for i in sorted(m.rows):
        row = dict(m.rows[i])
        for col in sorted(c for c in row if c in pivots):
            f = row.get(col)
            if not f:
                continue
            for j, v in pivots[col].items():
                nv = row.get(j, 0) - f * v
                if nv:
                    row[j] = nv
                else:
                    row.pop(j, None)
        if not row:
            continue
        col = min(row)
        inv = 1 / row[col]
        row = {j: v * inv for j, v in row.items()}
        for c in order:
            prow = pivots[c]
            f = prow.get(col)
            if f:
                for j, v in row.items():
                    nv = prow.get(j, 0) - f * v
                    if nv:
                        prow[j] = nv
                    else:
                        prow.pop(j, None)
        pivots[col] = row
        order.append(col)
    return pivots


def _reduce_against(row: dict, pivots: dict) -> dict:
    row = dict(row)
    changed = True
    while changed:
        changed = False
        for col in sorted(c for c in row if c in pivots):
            f = row.get(col)
            if not f:
                continue
            changed = True
            for j, v in pivots[col].items():
                nv = row.get(j, 0) - f * v
                if nv:
                    row[j] = nv
                else:
                    row.pop(j, None)
    return row


def rank_rational(m: SparseMatrix) -> int:
    return len(_rref(m))


def kernel_basis(m: SparseMatrix) -> list:
    """Basis of the null space as lists of Fractions, one per free column."""
    pivots = _rref(m)
    free = [j for j in range(m.ncols) if j not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.ncols
        v[f] = Fraction(1)
        for col, row in pivots.items():
            x = row.get(f)
            if x:
                v[col] = -x
        basis.append(v)
    return basis


def solve_in_image(m: SparseMatrix, b) -> list | None:
    """Some ``x`` with ``m x = b``, or ``None`` when ``b`` is not in the image."""
    b = [Fraction(x) for x in b]
    if len(b) != m.nrows:
        raise DimensionError(f"right-hand side has length {len(b)}, expected {m.nrows}")
    aug = SparseMatrix(m.nrows, m.ncols + 1)
    aug.rows = {i: dict(r) for i, r in m.rows.items()}
    for i, x in enumerate(b):
        aug.add(i, m.ncols, x)
    pivots = _rref(aug)
    if m.ncols in pivots:
        return None
    x = [Fraction(0)] * m.ncols
    for col, row in pivots.items():
        x[col] = row.get(m.ncols, Fraction(0))
    if m.matvec(x) != b:
        raise ArithmeticError("rational verification of the preimage failed")
    return x


def in_span(vectors: list, target: dict) -> bool:
    """Is the sparse vector ``target`` in the span of sparse ``vectors``?"""
    pivots = _rref_rows([dict(v) for v in vectors])
    return not _reduce_against(target, pivots)


def _rref_rows(rows: list) -> dict:
    ncols = 1 + max((max(r) for r in rows if r), default=-1)
    m = SparseMatrix(len(rows), max(ncols, 1))
    m.rows = {i: {j: Fraction(v) for j, v in r.items() if v} for i, r in enumerate(rows) if r}
    return _rref(m)


# ---------------------------------------------------------------- Matrix Market

def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def dump_matrix_market(m: SparseMatrix) -> str:
    lines = ["%%MatrixMarket matrix coordinate rational general",
             f"{m.nrows} {m.ncols} {m.nnz()}"]
    for i, j, x in m.entries():
        lines.append(f"{i + 1} {j + 1} {_fmt(x)}")
    return "\n".join(lines) + "\n"


def load_matrix_market(text: str) -> SparseMatrix:
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("%")]
    nr, nc, nnz = (int(t) for t in lines[0].split())
    m = SparseMatrix(nr, nc)
    for ln in lines[1:1 + nnz]:
        i, j, x = ln.split()
        m.add(int(i) - 1, int(j) - 1, Fraction(x))
    return m
