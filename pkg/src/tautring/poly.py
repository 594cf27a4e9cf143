"""Sparse polynomials over Q in graded variables.

A monomial is a tuple of ``(var_index, exponent)`` pairs sorted by index,
so polynomials do not depend on the size of the variable table.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .partitions import Partition

Monomial = tuple  # tuple[tuple[int, int], ...]
ONE: Monomial = ()


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        va, ea = a[i]
        vb, eb = b[j]
        if va == vb:
            out.append((va, ea + eb))
            i += 1
            j += 1
        elif va < vb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def mono_var(i: int, e: int = 1) -> Monomial:
    return ((i, e),) if e else ()


class Poly:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict = {}
        if terms:
            for m, c in terms.items():
                if c:
                    self.terms[m] = Fraction(c)

    @classmethod
    def const(cls, c) -> "Poly":
        return cls({ONE: c})

    @classmethod
    def var(cls, i: int) -> "Poly":
        return cls({mono_var(i): 1})

    @classmethod
    def monomial(cls, m: Monomial, c=1) -> "Poly":
        return cls({m: c})

    def copy(self) -> "Poly":
        p = Poly()
        p.terms = dict(self.terms)
        return p

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self):
        p = Poly()
        p.terms = {m: -c for m, c in self.terms.items()}
        return p

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        t = dict(self.terms)
        for m, c in other.terms.items():
            v = t.get(m, 0) + c
            if v:
                t[m] = v
            else:
                t.pop(m, None)
        p = Poly()
        p.terms = t
        return p

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Poly":
        c = Fraction(c)
        p = Poly()
        if c:
            p.terms = {m: v * c for m, v in self.terms.items()}
        return p

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        t: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                v = t.get(m, 0) + c1 * c2
                if v:
                    t[m] = v
                else:
                    t.pop(m, None)
        p = Poly()
        p.terms = t
        return p

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self.scale(Fraction(1) / Fraction(c))

    def __pow__(self, k: int):
        out = Poly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def coefficient(self, m: Monomial) -> Fraction:
        return self.terms.get(m, Fraction(0))

    def variables(self) -> set[int]:
        return {i for m in self.terms for i, _ in m}

    def substitute(self, images: dict) -> "Poly":
        """Replace variable i by images[i] (a Poly); others kept."""
        out = Poly()
        cache: dict = {}
        for m, c in self.terms.items():
            term = Poly.const(c)
            keep = []
            for i, e in m:
                if i in images:
                    key = (i, e)
                    if key not in cache:
                        cache[key] = images[i] ** e
                    term = term * cache[key]
                else:
                    keep.append((i, e))
            if keep:
                term = term * Poly.monomial(tuple(keep))
            out = out + term
        return out

    def map_vars(self, perm: dict) -> "Poly":
        """Rename variables; perm maps index -> index."""
        t: dict = {}
        for m, c in self.terms.items():
            nm = tuple(sorted((perm.get(i, i), e) for i, e in m))
            t[nm] = t.get(nm, 0) + c
        return Poly(t)

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __repr__(self):
        return f"Poly({self.sorted_terms()!r})"


def mono_degree(m: Monomial, degrees) -> int:
    return sum(degrees[i] * e for i, e in m)


@dataclass(frozen=True)
class GradedVar:
    name: str
    kind: str  # "k2", "k3", "D", "F", or an auxiliary kind
    degree: int
    partition: Partition | None = None


@dataclass
class Ring:
    """A variable table.  Variables are addressed by index or name."""

    vars: list[GradedVar] = field(default_factory=list)

    def __post_init__(self):
        self._index = {v.name: i for i, v in enumerate(self.vars)}

    def add(self, v: GradedVar) -> int:
        if v.name in self._index:
            raise ValueError(f"duplicate variable {v.name}")
        self.vars.append(v)
        self._index[v.name] = len(self.vars) - 1
        return len(self.vars) - 1

    def index(self, name: str) -> int:
        return self._index[name]

    def __contains__(self, name):
        return name in self._index

    def gen(self, name: str) -> Poly:
        return Poly.var(self._index[name])

    @property
    def degrees(self) -> list[int]:
        return [v.degree for v in self.vars]

    def degree_of(self, m: Monomial) -> int:
        return mono_degree(m, self.degrees)

    def is_homogeneous(self, p: Poly):
        """Common degree of all terms, "zero" for p == 0, None if mixed."""
        if not p:
            return "zero"
        degs = {self.degree_of(m) for m in p.terms}
        return degs.pop() if len(degs) == 1 else None

    def monomials(self, degree: int, indices: Iterable[int] | None = None) -> list[Monomial]:
        """All monomials of the given weighted degree, in a fixed order."""
        idx = sorted(indices) if indices is not None else list(range(len(self.vars)))
        degs = self.degrees
        out: list[Monomial] = []

        def rec(pos, remaining, acc):
            if remaining == 0:
                out.append(tuple(acc))
                return
            if pos == len(idx):
                return
            i = idx[pos]
            w = degs[i]
            e = 0
            while e * w <= remaining:
                if e:
                    acc.append((i, e))
                rec(pos + 1, remaining - e * w, acc)
                if e:
                    acc.pop()
                e += 1

        if degree >= 0:
            rec(0, degree, [])
        out.sort(key=self.mono_key)
        return out

    def mono_key(self, m: Monomial):
        # exponent vector in variable order; larger vectors reduce first
        n = len(self.vars)
        v = [0] * n
        for i, e in m:
            v[i] = e
        return tuple(v)

    def exponent_vector(self, m: Monomial) -> list[int]:
        return list(self.mono_key(m))

    def format(self, p: Poly) -> str:
        if not p:
            return "0"
        parts = []
        for m, c in sorted(p.terms.items(), key=lambda t: self.mono_key(t[0]), reverse=True):
            mon = "*".join(
                self.vars[i].name + (f"^{e}" if e > 1 else "") for i, e in m
            )
            if not mon:
                parts.append(str(c))
            elif c == 1:
                parts.append(mon)
            elif c == -1:
                parts.append("-" + mon)
            else:
                parts.append(f"{c}*{mon}")
        return " + ".join(parts).replace("+ -", "- ")

    def serialize(self, p: Poly) -> list:
        out = []
        for m, c in sorted(p.terms.items(), key=lambda t: self.mono_key(t[0]), reverse=True):
            out.append([c.numerator, c.denominator, self.exponent_vector(m)])
        return out

    def deserialize(self, data) -> Poly:
        t = {}
        for num, den, exps in data:
            m = tuple((i, e) for i, e in enumerate(exps) if e)
            t[m] = Fraction(num, den)
        return Poly(t)


def all_monomials_upto(ring: Ring, degree: int) -> list[Monomial]:
    out = []
    for k in range(degree + 1):
        out.extend(ring.monomials(k))
    return out


