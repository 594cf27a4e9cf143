"""Graded pieces, invariant parts and top-degree ratios of a presentation's quotient."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .ideal import GradedIdeal, NotHomogeneous
from .linalg import Echelon
from .poly import Poly


class TopDegreeError(ValueError):
    pass


@dataclass
class DualityReport:
    ok: bool
    dim: int
    dims: list
    problems: list = field(default_factory=list)


class GradedQuotient:
    def __init__(self, pres, ideal: GradedIdeal | None = None):
        self.pres = pres
        self.ring = pres.ring
        self.ideal = ideal or pres.ideal()
        self._inv: dict[int, Echelon] = {}

    @property
    def dim(self) -> int:
        return self.pres.dim

    def slice(self, k: int):
        return self.ideal.slice(k)

    def hilbert(self, max_degree: int | None = None) -> list[int]:
        top = self.dim + 2 if max_degree is None else max_degree
        return [self.slice(k).quotient_dim for k in range(top + 1)]

    def normal_form(self, p: Poly) -> Poly:
        return self.ideal.normal_form(p)

    def _symmetrize(self, p: Poly) -> Poly:
        if self.pres.d == 1:
            return p
        if self.pres.kc is None:
            raise ValueError("no symmetric group action on this presentation")
        from .symmetry import reynolds

        return reynolds(self.pres.kc.ctx, p)

    def invariant_echelon(self, k: int) -> Echelon:
        """Echelon basis (in slice coordinates) of the invariant part in degree k."""
        if k not in self._inv:
            sl = self.slice(k)
            ech = Echelon()
            for m in sl.reps:
                ech.add(self.ideal.coords(self._symmetrize(Poly.monomial(m))))
            self._inv[k] = ech
        return self._inv[k]

    def invariant_hilbert(self, max_degree: int | None = None) -> list[int]:
        top = self.dim + 2 if max_degree is None else max_degree
        return [self.invariant_echelon(k).rank for k in range(top + 1)]

    def integrate_ratio(self, monomials, invariant: bool = True) -> list[Fraction]:
        """Coordinates of each class against a fixed generator of the top piece."""
        polys = list(monomials)
        sl = self.slice(self.dim)
        for p in polys:
            if self.ring.is_homogeneous(p) not in (self.dim, "zero"):
                raise NotHomogeneous(f"{self.ring.format(p)} is not of degree {self.dim}")
        if invariant:
            ech = self.invariant_echelon(self.dim)
            if ech.rank != 1:
                raise TopDegreeError(f"invariant top piece has dimension {ech.rank}")
            (basis,) = ech.rows.values()
            polys = [self._symmetrize(p) for p in polys]
        else:
            if sl.quotient_dim != 1:
                raise TopDegreeError(f"top piece has dimension {sl.quotient_dim}")
            basis = {0: Fraction(1)}
        piv = min(basis)
        out = []
        for p in polys:
            v = self.ideal.coords(p)
            c = Fraction(v.get(piv, 0)) / basis[piv]
            if any(v.get(i, 0) != c * x for i, x in basis.items()) or any(i not in basis for i in v if v[i]):
                raise TopDegreeError("class is not a multiple of the top generator")
            out.append(c)
        return out


def socle_and_duality(dim: int, dims) -> DualityReport:
    dims = list(dims)
    rep = DualityReport(True, dim, dims)
    if len(dims) <= dim:
        rep.problems.append(f"only {len(dims)} degrees computed, need {dim + 1}")
    else:
        if dims[0] != 1:
            rep.problems.append(f"degree 0 has dimension {dims[0]}")
        if dims[dim] != 1:
            rep.problems.append(f"socle degree {dim} has dimension {dims[dim]}")
        for k in range(dim + 1):
            if dims[k] != dims[dim - k]:
                rep.problems.append(f"degree {k}: {dims[k]} != {dims[dim - k]} in degree {dim - k}")
        for k in range(dim + 1, len(dims)):
            if dims[k]:
                rep.problems.append(f"degree {k} above the top is nonzero ({dims[k]})")
    rep.ok = not rep.problems
    return rep


def hilbert(pres, max_degree: int | None = None) -> list[int]:
    return GradedQuotient(pres).hilbert(max_degree)
