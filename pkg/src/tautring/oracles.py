"""Classical numbers recomputed from first principles.

Nothing here depends on the tautological ring engine.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import comb

from .linalg import Echelon


def _polymul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _polydiv_exact(a, b):
    a = list(a)
    out = [0] * (len(a) - len(b) + 1)
    for i in range(len(out) - 1, -1, -1):
        q, r = divmod(a[i + len(b) - 1], b[-1])
        if r:
            raise ArithmeticError("inexact division")
        out[i] = q
        for j, y in enumerate(b):
            a[i + j] -= q * y
    if any(a[: len(b) - 1]):
        raise ArithmeticError("inexact division")
    return out


def gaussian_binomial(n: int, k: int = 2) -> list[int]:
    """Coefficients of [n+1 choose k]_q, the Betti numbers of G(k, n+1)."""
    if n < 1:
        raise ValueError("n must be positive")
    m = n + 1
    num, den = [1], [1]
    for i in range(k):
        num = _polymul(num, [-1] + [0] * (m - i - 1) + [1])  # q^{m-i} - 1
        den = _polymul(den, [-1] + [0] * i + [1])  # q^{i+1} - 1
    return _polydiv_exact(num, den)


def kontsevich_plane_counts(dmax: int) -> list[int]:
    """[N_1, ..., N_dmax]: rational plane curves through 3d - 1 points."""
    if dmax < 1:
        raise ValueError("dmax must be positive")
    N = {1: 1}
    for d in range(2, dmax + 1):
        s = 0
        for d1 in range(1, d):
            d2 = d - d1
            s += N[d1] * N[d2] * (d1 * d1 * d2 * d2 * comb(3 * d - 4, 3 * d1 - 2) - d1**3 * d2 * comb(3 * d - 4, 3 * d1 - 1))
        N[d] = s
    return [N[d] for d in range(1, dmax + 1)]


class ProjectiveGW:
    """Genus 0 invariants <H^{c_1} ... H^{c_m}>_d of P^r from WDVV.

    Degree-d primitive invariants (all c_i >= 2) are the unknowns of a
    linear system assembled from WDVV with lower degrees known; degree 1
    is normalized by the line through two points.
    """

    def __init__(self, r: int):
        if r < 1:
            raise ValueError("r must be positive")
        self.r = r
        self.table: dict = {}

    def expected_sum(self, d: int) -> int:
        # sum of (c - 1) over insertions
        return (self.r + 1) * d + self.r - 3

    def primitive_classes(self, d: int) -> list[tuple[int, ...]]:
        target = self.expected_sum(d)
        out = []

        def rec(lo, left, acc):
            if left == 0:
                out.append(tuple(acc))
                return
            for c in range(lo, self.r + 1):
                if c - 1 <= left:
                    rec(c, left - (c - 1), acc + [c])

        rec(2, target, [])
        return out

    def value(self, d: int, codims) -> Fraction:
        codims = tuple(sorted(codims))
        if any(c < 0 or c > self.r for c in codims):
            return Fraction(0)
        if d == 0:
            return Fraction(int(len(codims) == 3 and sum(codims) == self.r))
        if sum(c - 1 for c in codims) != self.expected_sum(d):
            return Fraction(0)
        if 0 in codims:
            return Fraction(0)
        ones = codims.count(1)
        key = (d, codims[ones:])
        if key not in self.table:
            self._solve(d)
        return self.table[key] * d**ones

    def _solve(self, d: int):
        for e in range(1, d):
            if (e, self.primitive_classes(e)[0]) not in self.table:
                self._solve(e)
        unknowns = self.primitive_classes(d)
        index = {u: i for i, u in enumerate(unknowns)}
        rows = []
        r = self.r
        if d == 1:
            rows.append(({index[(r, r)]: Fraction(1)}, Fraction(1)))
        # WDVV for (i, j | k, l) against (i, k | j, l) with extra insertions S
        for size in range(0, len(max(unknowns, key=len)) + 1):
            for S in _multisets(range(2, r + 1), size):
                for i, j, k, l in product(range(1, r + 1), repeat=4):
                    if sum(c - 1 for c in S) + i + j + k + l != (r + 1) * d + r:
                        continue
                    lin, const = {}, Fraction(0)
                    for sign, (a, b, c2, e2) in ((1, (i, j, k, l)), (-1, (i, k, j, l))):
                        self._expand(d, S, a, b, c2, e2, sign, index, lin)
                        const += sign * self._known(d, S, a, b, c2, e2)
                    lin = {x: y for x, y in lin.items() if y}
                    if lin:
                        rows.append((lin, -const))
        sol = _solve_linear(rows, len(unknowns))
        for u, v in zip(unknowns, sol):
            self.table[(d, u)] = v

    def _expand(self, d, S, i, j, k, l, sign, index, lin):
        """Terms of sum_e N(A+{i,j,e}) N(B+{r-e,k,l}) linear in degree-d unknowns."""
        r = self.r
        for e in range(r + 1):
            # degree split (d, 0): B empty, classical factor
            c0 = self.value(0, (r - e, k, l))
            if c0:
                self._add_linear(d, list(S) + [i, j, e], c0 * sign, index, lin)
            c0 = self.value(0, (i, j, e))
            if c0:
                self._add_linear(d, list(S) + [r - e, k, l], c0 * sign, index, lin)

    def _add_linear(self, d, codims, coef, index, lin):
        codims = sorted(codims)
        if 0 in codims or sum(c - 1 for c in codims) != self.expected_sum(d):
            return
        ones = codims.count(1)
        key = tuple(codims[ones:])
        lin[index[key]] = lin.get(index[key], 0) + coef * d**ones

    def _known(self, d, S, i, j, k, l):
        """Terms with both degrees positive."""
        total = Fraction(0)
        n = len(S)
        for d1 in range(1, d):
            d2 = d - d1
            for mask in range(1 << n):
                A = [S[t] for t in range(n) if mask >> t & 1]
                B = [S[t] for t in range(n) if not mask >> t & 1]
                for e in range(self.r + 1):
                    x = self.value(d1, A + [i, j, e])
                    if x:
                        total += x * self.value(d2, B + [self.r - e, k, l])
        return total


def _multisets(values, size):
    values = list(values)

    def rec(start, left):
        if left == 0:
            yield ()
            return
        for t in range(start, len(values)):
            for rest in rec(t, left - 1):
                yield (values[t],) + rest

    return list(rec(0, size))


def _solve_linear(rows, nvars: int) -> list[Fraction]:
    """Solve sum lin[x] * u_x = rhs exactly; the system must determine all u."""
    ech = Echelon()
    rhs_col = nvars
    for lin, rhs in rows:
        v = dict(lin)
        if rhs:
            v[rhs_col] = Fraction(rhs)
        ech.add(v)
    ech.back_substitute()
    piv = set(ech.pivots())
    if rhs_col in piv:
        raise ArithmeticError("inconsistent WDVV system")
    if len(piv) != nvars:
        raise ArithmeticError("WDVV system does not determine all invariants")
    out = [Fraction(0)] * nvars
    for p, row in ech.rows.items():
        out[p] = Fraction(row.get(rhs_col, 0)) / row[p]
    return out


def p3_degree2_counts() -> list[Fraction]:
    """<(H^2)^a (H^3)^b>_2 on P^3 for (a, b) = (8,0), (6,1), (4,2), (2,3), (0,4)."""
    gw = ProjectiveGW(3)
    return [gw.value(2, [2] * a + [3] * b) for a, b in ((8, 0), (6, 1), (4, 2), (2, 3), (0, 4))]


def plane_counts_wdvv(dmax: int) -> list[Fraction]:
    """N_d from the generic WDVV solver, for cross-checking the closed recursion."""
    gw = ProjectiveGW(2)
    return [gw.value(d, [2] * (3 * d - 1)) for d in range(1, dmax + 1)]


# -- Schubert calculus on G(k, n) ------------------------------------------
def pieri(lam: tuple, p: int, k: int, m: int) -> list[tuple]:
    """sigma_lam * sigma_p in G(k, k+m): partitions in a k x m box."""
    lam = tuple(lam) + (0,) * (k - len(lam))
    out = []

    def rec(row, left, acc):
        if row == k:
            if left == 0:
                out.append(tuple(acc))
            return
        hi = m if row == 0 else lam[row - 1]  # horizontal strip: mu_row <= lam_{row-1}
        for mu in range(lam[row], min(hi, lam[row] + left) + 1):
            rec(row + 1, left - (mu - lam[row]), acc + [mu])

    rec(0, p, [])
    return out


def schubert_integral(factors, k: int, n: int) -> int:
    """Degree of a product of special Schubert classes sigma_p on G(k, n)."""
    m = n - k
    state = {(0,) * k: 1}
    for p in factors:
        nxt: dict = {}
        for lam, c in state.items():
            for mu in pieri(lam, p, k, m):
                nxt[mu] = nxt.get(mu, 0) + c
        state = nxt
    return state.get((m,) * k, 0)


def schubert_g24_ratios() -> list[int]:
    """(sigma_1^4, sigma_1^2 sigma_2, sigma_2^2) on G(2, 4)."""
    return [schubert_integral(f, 2, 4) for f in ((1, 1, 1, 1), (1, 1, 2), (2, 2))]
