"""Graded pieces of a quotient by a homogeneous ideal, degree by degree.

``GradedIdeal`` works in quotient coordinates: Q_k is presented as a
quotient of the direct sum over variables x of x * Q_{k - deg x}.  The
relations are (a) the different factorizations m = x (m/x) = y (m/y) of
each degree-k monomial and (b) the degree-k generators.  Matrices therefore
have about (#variables * dim Q) columns rather than one column per monomial.

``MacaulayIdeal`` is the plain Macaulay-slice construction (one column per
monomial).  It is slower and kept as an independent cross-check.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import Echelon, echelon_from_rows
from .poly import Monomial, Poly, Ring, mono_mul, mono_var

log = logging.getLogger(__name__)


class NotHomogeneous(ValueError):
    pass


def _divide(m: Monomial, i: int) -> Monomial:
    out = []
    for j, e in m:
        if j == i:
            if e > 1:
                out.append((j, e - 1))
        else:
            out.append((j, e))
    return tuple(out)


def _count_monomials(degs: list[int], k: int) -> int:
    ways = [1] + [0] * k
    for w in degs:
        for t in range(w, k + 1):
            ways[t] += ways[t - w]
    return ways[k]


@dataclass
class QuotientSlice:
    degree: int
    ambient_dim: int
    columns: list = field(default_factory=list)  # (var index, basis index in lower slice)
    echelon: Echelon = field(default_factory=Echelon)
    basis: list = field(default_factory=list)  # column indices spanning the quotient
    reps: list = field(default_factory=list)  # a monomial representing each basis element
    position: dict = field(default_factory=dict)  # column -> basis index

    @property
    def quotient_dim(self) -> int:
        return len(self.basis)

    @property
    def ideal_dim(self) -> int:
        return self.ambient_dim - self.quotient_dim


class _Base:
    ring: Ring

    def _split(self, gens):
        out: dict[int, list[Poly]] = {}
        for g in gens:
            deg = self.ring.is_homogeneous(g)
            if deg is None:
                raise NotHomogeneous(f"generator {self.ring.format(g)} is not homogeneous")
            if deg == "zero":
                continue
            out.setdefault(deg, []).append(g)
        return out

    def hilbert(self, max_degree: int) -> list[int]:
        return [self.slice(k).quotient_dim for k in range(max_degree + 1)]

    def coords(self, p: Poly) -> dict:
        """Coordinates of a homogeneous p in the basis of its degree slice."""
        raise NotImplementedError

    def degree(self, p: Poly) -> int:
        deg = self.ring.is_homogeneous(p)
        if deg is None:
            raise NotHomogeneous(f"{self.ring.format(p)} is not homogeneous")
        return deg

    def normal_form(self, p: Poly) -> Poly:
        """Canonical representative: a combination of basis representatives."""
        deg = self.ring.is_homogeneous(p)
        if deg == "zero":
            return Poly()
        if deg is None:
            return sum((self.normal_form(q) for q in split_by_degree(self.ring, p).values()), Poly())
        reps = self.slice(deg).reps
        return Poly({reps[i]: c for i, c in self.coords(p).items()})

    def contains(self, p: Poly) -> bool:
        return not self.normal_form(p)

    def basis_poly(self, k: int, v: dict) -> Poly:
        reps = self.slice(k).reps
        return Poly({reps[i]: c for i, c in v.items() if c})


class GradedIdeal(_Base):
    def __init__(self, ring: Ring, gens, use_flint: bool | None = None):
        self.ring = ring
        self.gens = self._split(gens)
        self.use_flint = use_flint
        self.slices: dict[int, QuotientSlice] = {}
        self._nf: dict[Monomial, dict] = {}
        self._colindex: dict[int, dict] = {}
        self._degs = ring.degrees

    # -- monomial normal forms ---------------------------------------------
    def _lift(self, sl: QuotientSlice, i: int, lower: dict) -> dict:
        """Column vector of x_i times an element of the lower slice."""
        table = self._colindex[sl.degree]
        return {table[(i, b)]: c for b, c in lower.items()}

    def nf_monomial(self, m: Monomial) -> dict:
        """Coordinates of a monomial in its slice basis (memoized)."""
        hit = self._nf.get(m)
        if hit is not None:
            return hit
        k = self.ring.degree_of(m)
        sl = self.slice(k)
        if k == 0:
            v = {0: Fraction(1)} if sl.basis else {}
        else:
            i = m[0][0]
            v = self._reduce(sl, self._lift(sl, i, self.nf_monomial(_divide(m, i))))
        self._nf[m] = v
        return v

    def _relation_rows(self, sl: QuotientSlice, k: int):
        for g in self.gens.get(k, []):
            yield self._column_vector(sl, g)
        for m in self.ring.monomials(k):
            vs = [i for i, _ in m]
            if len(vs) < 2:
                continue
            first = self._lift(sl, vs[0], self.nf_monomial(_divide(m, vs[0])))
            for j in vs[1:]:
                diff = dict(first)
                for col, x in self._lift(sl, j, self.nf_monomial(_divide(m, j))).items():
                    y = diff.get(col, 0) - x
                    if y:
                        diff[col] = y
                    else:
                        diff.pop(col, None)
                if diff:
                    yield diff

    def _reduce(self, sl: QuotientSlice, v: dict) -> dict:
        r = sl.echelon.reduce(v)
        pos = sl.position
        return {pos[c]: x for c, x in r.items()}

    def _column_vector(self, sl: QuotientSlice, p: Poly) -> dict:
        """Unreduced column vector of a degree-k polynomial."""
        out: dict = {}
        for m, c in p.terms.items():
            i = m[0][0]
            for col, x in self._lift(sl, i, self.nf_monomial(_divide(m, i))).items():
                y = out.get(col, 0) + c * x
                if y:
                    out[col] = y
                else:
                    out.pop(col, None)
        return out

    def coords(self, p: Poly) -> dict:
        if not p:
            return {}
        k = self.degree(p)
        sl = self.slice(k)
        if k == 0:
            c = p.coefficient(())
            return {0: c} if sl.basis and c else {}
        return self._reduce(sl, self._column_vector(sl, p))

    # -- slices --------------------------------------------------------------
    def slice(self, k: int) -> QuotientSlice:
        if k in self.slices:
            return self.slices[k]
        ring = self.ring
        degs = self._degs
        if k == 0:
            sl = QuotientSlice(0, 1)
            if not any(g.coefficient(()) for g in self.gens.get(0, [])):
                sl.basis, sl.reps, sl.position = [0], [()], {0: 0}
            self.slices[0] = sl
            self._colindex[0] = {}
            return sl
        sl = QuotientSlice(k, _count_monomials(degs, k))
        table: dict = {}
        for i, w in enumerate(degs):
            if w <= k:
                lower = self.slice(k - w)
                for b in range(lower.quotient_dim):
                    table[(i, b)] = len(sl.columns)
                    sl.columns.append((i, b))
        self._colindex[k] = table
        self.slices[k] = sl  # lower slices are done; columns are fixed
        ncols = len(sl.columns)
        ech = echelon_from_rows(self._relation_rows(sl, k), ncols, use_flint=self.use_flint)
        sl.echelon = ech
        piv = ech.rows
        sl.basis = [c for c in range(ncols) if c not in piv]
        sl.position = {c: t for t, c in enumerate(sl.basis)}
        for c in sl.basis:
            i, b = sl.columns[c]
            sl.reps.append(mono_mul(self.slice(k - degs[i]).reps[b], mono_var(i)))
        log.debug("slice %d: %d columns, quotient %d", k, ncols, sl.quotient_dim)
        return sl


class MacaulayIdeal(_Base):
    """One column per monomial; I_k spanned by x * I_{k - deg x} and degree-k generators."""

    def __init__(self, ring: Ring, gens):
        self.ring = ring
        self.gens = self._split(gens)
        self.slices: dict = {}

    def slice(self, k: int):
        if k in self.slices:
            return self.slices[k]
        ring = self.ring
        mons = ring.monomials(k)
        mons.sort(key=ring.mono_key, reverse=True)
        col = {m: i for i, m in enumerate(mons)}
        ech = Echelon()
        for g in self.gens.get(k, []):
            ech.add({col[m]: c for m, c in g.terms.items()})
        for i, w in enumerate(ring.degrees):
            if w > k or not any(d <= k - w for d in self.gens):
                continue
            lower = self.slice(k - w)
            xi = mono_var(i)
            for row in lower.echelon.rows.values():
                ech.add({col[mono_mul(lower.monomials[c], xi)]: x for c, x in row.items()})
        ech.back_substitute()
        sl = QuotientSlice(k, len(mons), echelon=ech)
        sl.monomials = mons
        sl.column = col
        sl.basis = [c for c in range(len(mons)) if c not in ech.rows]
        sl.position = {c: t for t, c in enumerate(sl.basis)}
        sl.reps = [mons[c] for c in sl.basis]
        self.slices[k] = sl
        return sl

    def coords(self, p: Poly) -> dict:
        if not p:
            return {}
        sl = self.slice(self.degree(p))
        try:
            v = {sl.column[m]: c for m, c in p.terms.items()}
        except KeyError as exc:  # pragma: no cover
            raise NotHomogeneous(str(exc)) from None
        r = sl.echelon.reduce(v)
        return {sl.position[c]: x for c, x in r.items()}


def split_by_degree(ring: Ring, p: Poly) -> dict[int, Poly]:
    out: dict[int, Poly] = {}
    for m, c in p.terms.items():
        k = ring.degree_of(m)
        out.setdefault(k, Poly())
        out[k].terms[m] = c
    return out
