"""Exact sparse row echelon forms over Q.

Rows are dicts ``column -> Fraction``.  The pivot of a row is its smallest
column; callers order columns so that column 0 is the monomial to be
eliminated first.
"""
from __future__ import annotations

from fractions import Fraction


class Echelon:
    """Incrementally built echelon basis with deterministic pivoting."""

    def __init__(self):
        self.rows: dict[int, dict[int, Fraction]] = {}
        self._order: list[int] | None = None

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def pivots(self) -> list[int]:
        if self._order is None:
            self._order = sorted(self.rows)
        return self._order

    def reduce(self, v: dict) -> dict:
        """Remove every pivot column from v (v is not modified)."""
        v = dict(v)
        if not v or not self.rows:
            return v
        rows = self.rows
        # walk pivots that can occur, in increasing order
        while True:
            cand = [c for c in v if c in rows]
            if not cand:
                return v
            c = min(cand)
            coef = v[c]
            for col, x in rows[c].items():
                nv = v.get(col, 0) - coef * x
                if nv:
                    v[col] = nv
                else:
                    v.pop(col, None)

    def add(self, v: dict) -> bool:
        """Reduce v and insert it if independent; returns True when added."""
        r = self.reduce(v)
        if not r:
            return False
        p = min(r)
        inv = 1 / r[p]
        self.rows[p] = {c: x * inv for c, x in r.items()}
        self._order = None
        return True

    def back_substitute(self):
        """Bring the basis to reduced row echelon form."""
        for p in sorted(self.rows, reverse=True):
            row = self.rows[p]
            for q in self.rows:
                if q < p and p in self.rows[q]:
                    other = self.rows[q]
                    coef = other[p]
                    for col, x in row.items():
                        nv = other.get(col, 0) - coef * x
                        if nv:
                            other[col] = nv
                        else:
                            other.pop(col, None)


def rank_of(vectors) -> int:
    e = Echelon()
    for v in vectors:
        e.add(v)
    return e.rank


try:  # exact rational RREF in C; the pure Python Echelon is the fallback
    import flint
except ImportError:  # pragma: no cover
    flint = None


def _to_fmpq(x: Fraction):
    return flint.fmpq(x.numerator, x.denominator)


def _rref_rows(rows: list[dict], ncols: int) -> list[dict]:
    """Nonzero rows of the RREF of the given sparse rows (flint backend)."""
    M = flint.fmpq_mat(len(rows), ncols)
    for i, r in enumerate(rows):
        for c, x in r.items():
            M[i, c] = _to_fmpq(x) if isinstance(x, Fraction) else flint.fmpq(x)
    R, rank = M.rref()
    ent = R.entries()
    out = []
    for i in range(rank):
        base = i * ncols
        row = {}
        for c in range(ncols):
            x = ent[base + c]
            if x:
                row[c] = Fraction(int(x.p), int(x.q))
        out.append(row)
    return out


def echelon_from_rows(rows, ncols: int, chunk: int = 0, use_flint: bool | None = None) -> Echelon:
    """Reduced echelon basis of the span of an iterable of sparse rows.

    Rows are consumed in chunks and consumption stops once the rank equals
    ``ncols``.
    """
    use_flint = (flint is not None) if use_flint is None else use_flint
    ech = Echelon()
    if not use_flint:
        for r in rows:
            if len(ech) == ncols:
                break
            ech.add(r)
        ech.back_substitute()
        return ech
    chunk = chunk or max(2 * ncols, 400)
    basis: list[dict] = []
    buf: list[dict] = []

    def flush():
        nonlocal basis, buf
        if buf:
            basis = _rref_rows(basis + buf, ncols)
            buf = []

    for r in rows:
        if len(basis) == ncols:
            break
        if r:
            buf.append(r)
        if len(buf) >= chunk:
            flush()
    if len(basis) < ncols:
        flush()
    for row in basis:
        p = min(row)
        ech.rows[p] = row
    return ech
