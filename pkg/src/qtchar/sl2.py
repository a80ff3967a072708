"""Closed-form rank-1 theory.

Dominant rank-1 monomials decompose uniquely into 2-segments (arithmetic
progressions of step 2); the deformed character of a segment has an explicit
descending A^-1-string expansion, and general deformed characters follow by
triangular subtraction of lower dominant monomials.
"""

from __future__ import annotations

from .algebra import Monomial, YtAlgebra, YtElement
from .cartan import validate_cartan
from .errors import InternalInconsistency, NotDominant
from .tpoly import ONE, TPoly

_SL2 = None


def sl2_algebra() -> YtAlgebra:
    """Shared rank-1 algebra instance."""
    global _SL2
    if _SL2 is None:
        _SL2 = YtAlgebra(validate_cartan([[2]]))
    return _SL2


class Segment:
    """The 2-segment {start, start+2, ..., start+2(count-1)}."""

    __slots__ = ("start", "count")

    def __init__(self, start: int, count: int):
        if count < 1:
            raise ValueError("segment needs at least one level")
        self.start = start
        self.count = count

    @property
    def top(self) -> int:
        return self.start + 2 * (self.count - 1)

    def levels(self):
        return range(self.start, self.top + 1, 2)

    def level_set(self):
        return frozenset(self.levels())

    def monomial(self) -> Monomial:
        return Monomial({(1, l): 1 for l in self.levels()})

    def __eq__(self, other):
        return (
            isinstance(other, Segment)
            and (self.start, self.count) == (other.start, other.count)
        )

    def __hash__(self):
        return hash((self.start, self.count))

    def __repr__(self):
        return f"Segment({self.start}, {self.count})"


def _counts(m: Monomial) -> dict:
    counts = {}
    for (i, l), e in m.items():
        if i != 1:
            raise ValueError("rank-1 monomial expected (node 1 only)")
        if e < 0:
            raise NotDominant(f"negative exponent at level {l}")
        counts[l] = e
    return counts


def _special_position(s1: Segment, s2: Segment) -> bool:
    """Union is a 2-segment properly containing each of the two."""
    a, b = s1.level_set(), s2.level_set()
    u = a | b
    lo, hi = min(u), max(u)
    if any((l - lo) % 2 for l in u) or len(u) != (hi - lo) // 2 + 1:
        return False
    return u > a and u > b


def decompose_segments(m: Monomial):
    """Unique decomposition of a dominant rank-1 monomial into 2-segments.

    Greedy: longest segment from the lowest remaining level; a repair pass
    merges any special-position pair (union + intersection) until stable.
    """
    counts = _counts(m)
    remaining = dict(counts)
    segments = []
    while remaining:
        l0 = min(remaining)
        l = l0
        while l in remaining:
            remaining[l] -= 1
            if remaining[l] == 0:
                del remaining[l]
            l += 2
        segments.append(Segment(l0, (l - l0) // 2))
    changed = True
    while changed:
        changed = False
        for a in range(len(segments)):
            for b in range(a + 1, len(segments)):
                if _special_position(segments[a], segments[b]):
                    u = segments[a].level_set() | segments[b].level_set()
                    inter = segments[a].level_set() & segments[b].level_set()
                    merged = [Segment(min(u), len(u))]
                    if inter:
                        merged.append(Segment(min(inter), len(inter)))
                    segments = (
                        [s for k, s in enumerate(segments) if k not in (a, b)] + merged
                    )
                    changed = True
                    break
            if changed:
                break
    segments.sort(key=lambda s: (s.start, -s.count))
    return segments


def classic_L(m: Monomial) -> dict:
    """Classical irreducible rank-1 character as a commutative monomial sum."""
    segments = decompose_segments(m)
    total = {Monomial.unit(): 1}
    for seg in segments:
        l, k = seg.start, seg.count - 1
        part = {}
        for j in range(k + 2):
            d = {}
            for s in range(0, k - j + 1):
                d[(1, l + 2 * s)] = 1
            for s in range(k - j + 2, k + 2):
                d[(1, l + 2 * s)] = -1
            part[Monomial(d)] = part.get(Monomial(d), 0) + 1
        new = {}
        for m1, c1 in total.items():
            for m2, c2 in part.items():
                key = m1.times(m2)
                new[key] = new.get(key, 0) + c1 * c2
        total = {k: v for k, v in new.items() if v}
    return total


def is_irregular(m: Monomial) -> bool:
    """True iff some segment fits in another both in place and shifted by 2."""
    segments = decompose_segments(m)
    for a, s1 in enumerate(segments):
        set1 = s1.level_set()
        shifted = frozenset(l + 2 for l in set1)
        for b, s2 in enumerate(segments):
            if a == b:
                continue
            set2 = s2.level_set()
            if set1 <= set2 and shifted <= set2:
                return True
    return False


def ft_segment(alg: YtAlgebra, seg: Segment) -> YtElement:
    """Deformed character of a 2-segment: descending A^-1 strings with t^j."""
    m_elem = YtElement.from_monomial(seg.monomial())
    bracket = YtElement.unit()
    string = YtElement.unit()
    for j in range(1, seg.count + 1):
        string = alg.mul(string, alg.a_inv_elem(1, seg.top + 3 - 2 * j))
        bracket = bracket + string.scale(TPoly.t_power(j))
    return alg.mul(m_elem, bracket)


def _normalize_leading(elem: YtElement, m: Monomial) -> YtElement:
    lead = elem.coeff(m)
    sp = lead.single_power()
    if sp is None or sp[1] != 1:
        raise InternalInconsistency(f"leading coefficient on {m} is {lead}, not a t-power")
    return elem.scale(TPoly.t_power(-sp[0]))


def et_sl2(alg: YtAlgebra, m: Monomial) -> YtElement:
    """Ordered product of level-wise fundamental factors, leading coefficient 1."""
    counts = _counts(m)
    acc = YtElement.unit()
    for l in sorted(counts):
        factor = ft_segment(alg, Segment(l, 1))
        for _ in range(counts[l]):
            acc = alg.mul(acc, factor)
    return _normalize_leading(acc, m)


def ft_sl2(alg: YtAlgebra, m: Monomial) -> YtElement:
    """Deformed character with m as unique dominant monomial."""
    cached = alg.ft_sl2_cache.get(m)
    if cached is not None:
        return cached
    e = et_sl2(alg, m)
    out = e
    for mu, lam in e.dominant_part().items():
        if mu != m:
            out = out - ft_sl2(alg, mu).scale(lam)
    alg.ft_sl2_cache[m] = out
    return out
