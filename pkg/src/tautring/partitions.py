"""Boundary partitions {h, h-bar} of {1..d} and the S_d action on them."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations


@dataclass(frozen=True, order=True)
class Partition:
    """Unordered 2-partition of {1..d}, stored by the side containing 1."""

    side: tuple[int, ...]
    d: int

    def __post_init__(self):
        s = tuple(sorted(set(self.side)))
        if not s or len(s) >= self.d or s[0] < 1 or s[-1] > self.d:
            raise ValueError(f"invalid side {self.side} for d={self.d}")
        if 1 not in s:
            s = complement(s, self.d)
        object.__setattr__(self, "side", s)

    @classmethod
    def from_side(cls, side, d: int) -> "Partition":
        return cls(tuple(side), d)

    @property
    def other(self) -> tuple[int, ...]:
        return complement(self.side, self.d)

    @property
    def sides(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return self.side, self.other

    def has_side(self, s) -> bool:
        return tuple(sorted(s)) in self.sides

    def opposite(self, s) -> tuple[int, ...]:
        s = tuple(sorted(s))
        if s == self.side:
            return self.other
        if s == self.other:
            return self.side
        raise ValueError(f"{s} is not a side of {self}")

    def __str__(self):
        return "[" + ",".join(map(str, self.side)) + f"]|d={self.d}"

    @classmethod
    def parse(cls, text: str) -> "Partition":
        body, _, dpart = text.partition("|d=")
        side = [int(x) for x in body.strip("[]").split(",") if x]
        return cls(tuple(side), int(dpart))


def complement(side, d: int) -> tuple[int, ...]:
    s = set(side)
    return tuple(i for i in range(1, d + 1) if i not in s)


def enumerate_partitions(d: int) -> list[Partition]:
    """All 2^(d-1) - 1 boundary partitions, ordered by (|side|, side)."""
    if d < 1:
        raise ValueError("d must be positive")
    out = []
    rest = list(range(2, d + 1))
    for k in range(0, d - 1):
        for c in combinations(rest, k):
            out.append(Partition((1,) + c, d))
    out.sort(key=lambda p: (len(p.side), p.side))
    return out


def _check_same(P: Partition, Q: Partition):
    if P.d != Q.d:
        raise ValueError("partitions over different d")


def is_crossing(P: Partition, Q: Partition) -> bool:
    """True iff all four pairwise intersections of sides are nonempty."""
    _check_same(P, Q)
    if P == Q:
        return False
    for a in P.sides:
        for b in Q.sides:
            if not set(a) & set(b):
                return False
    return True


def oriented_pair(P: Partition, Q: Partition) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Sides (h, h') of P, Q with complement(h') contained in h.

    Equivalently the two complements are disjoint.  Unique for distinct
    non-crossing pairs.
    """
    _check_same(P, Q)
    if P == Q or is_crossing(P, Q):
        raise ValueError("orientation needs a distinct non-crossing pair")
    for h in P.sides:
        for hp in Q.sides:
            if set(complement(hp, P.d)) <= set(h) and set(h) & set(hp):
                return h, hp
    raise ValueError("no admissible orientation")  # pragma: no cover


def chain_range(P: Partition, Q: Partition, inclusive: bool = False) -> list[Partition]:
    """Partitions with a side h'' between complement(h') and h.

    (h, h') is the orientation from ``oriented_pair``.  With ``inclusive``
    the endpoints P and Q are part of the interval.
    """
    h, hp = oriented_pair(P, Q)
    low = set(complement(hp, P.d))
    mid = sorted(set(h) - low)
    out = []
    for k in range(len(mid) + 1):
        if not inclusive and k in (0, len(mid)):
            continue
        for c in combinations(mid, k):
            out.append(Partition(tuple(sorted(low | set(c))), P.d))
    return out


def proper_subsets(h) -> list[tuple[int, ...]]:
    """Nonempty strict subsets of h, ordered by size then lexicographically."""
    h = tuple(sorted(h))
    return [c for k in range(1, len(h)) for c in combinations(h, k)]


def act_on_side(sigma, side) -> tuple[int, ...]:
    """sigma is a tuple with sigma[i-1] the image of i."""
    return tuple(sorted(sigma[i - 1] for i in side))


def act(sigma, P: Partition) -> Partition:
    if len(sigma) != P.d:
        raise ValueError("permutation size mismatch")
    return Partition(act_on_side(sigma, P.side), P.d)


def compose(sigma, tau):
    """(sigma o tau)(i) = sigma(tau(i))."""
    return tuple(sigma[t - 1] for t in tau)
