"""
Bruhat intervals [x, y] as graded posets, isomorphism testing with
certificates, an isomorphism-invariant fingerprint for bucketing, and
the two poset invariants that drive the interval comparisons: m-parent
counts and the Z-sets

    Z^m = { z in [x, y] : l(y) - l(z) = m and P_{z,y}(q) = 1 + q }.

Isomorphism search refines the rank partition by iterated neighborhood
colors and then backtracks over class-respecting, rank-by-rank
assignments checking cover preservation; Bruhat intervals are graded,
so rank is forced and cover preservation suffices for order
isomorphism.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Optional

from . import closedform, regions, weyl
from .laurent import QPoly, Q_PLUS_ONE
from .regions import RegionKind, ThetaIndex
from .weyl import RHO, SIGMA, Element

__all__ = [
    "Interval",
    "IsoCertificate",
    "NotComparableError",
    "build_interval",
    "is_isomorphic",
    "fingerprint",
    "parents",
    "z_invariant",
    "z_preserved_check",
    "structural_lemma_checks",
]


class NotComparableError(ValueError):
    """Raised when asked to build [x, y] with x not below y."""


class Interval:
    """The graded poset on {z : x <= z <= y}, rank = l(z) - l(x).

    Members are indexed in (rank, canonical word) order; covers are the
    comparabilities between adjacent ranks (Bruhat order is graded by
    length, so these are exactly the cover relations).
    """

    __slots__ = (
        "bottom",
        "top",
        "members",
        "index",
        "ranks",
        "span",
        "rank_sizes",
        "down_masks",
        "up_masks",
        "_leq_masks",
        "_colors",
        "_fingerprint",
    )

    def __init__(self, bottom: Element, top: Element, members: list[Element]):
        self.bottom = bottom
        self.top = top
        self.members = tuple(members)
        self.index = {z: i for i, z in enumerate(self.members)}
        base = bottom.length
        self.ranks = tuple(z.length - base for z in self.members)
        self.span = top.length - base
        sizes = [0] * (self.span + 1)
        for r in self.ranks:
            sizes[r] += 1
        self.rank_sizes = tuple(sizes)
        self.down_masks: tuple[int, ...] = self._cover_masks()
        up = [0] * len(self.members)
        for j, mask in enumerate(self.down_masks):
            m = mask
            while m:
                low = m & -m
                up[low.bit_length() - 1] |= 1 << j
                m ^= low
        self.up_masks = tuple(up)
        self._leq_masks: Optional[tuple[int, ...]] = None
        self._colors: Optional[tuple[int, ...]] = None
        self._fingerprint: Optional[str] = None

    def _cover_masks(self) -> tuple[int, ...]:
        by_rank: dict[int, list[int]] = {}
        for i, r in enumerate(self.ranks):
            by_rank.setdefault(r, []).append(i)
        down = [0] * len(self.members)
        for r in range(1, self.span + 1):
            for j in by_rank.get(r, ()):
                zj = self.members[j]
                acc = 0
                for i in by_rank.get(r - 1, ()):
                    if weyl.bruhat_leq(self.members[i], zj):
                        acc |= 1 << i
                down[j] = acc
        return tuple(down)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, z: Element) -> bool:
        return z in self.index

    def __repr__(self) -> str:
        return (
            f"Interval([{self.bottom.word() or '~'}, {self.top.word() or '~'}], "
            f"size={len(self.members)})"
        )

    def rank_of(self, z: Element) -> int:
        return self.ranks[self.index[z]]

    @property
    def leq_masks(self) -> tuple[int, ...]:
        """leq_masks[i] has bit j set when member i <= member j."""
        if self._leq_masks is None:
            masks = []
            for i, zi in enumerate(self.members):
                acc = 0
                for j, zj in enumerate(self.members):
                    if weyl.bruhat_leq(zi, zj):
                        acc |= 1 << j
                masks.append(acc)
            self._leq_masks = tuple(masks)
        return self._leq_masks

    def covers(self) -> list[tuple[int, int]]:
        """Cover pairs (i, j) with member i covered by member j."""
        out = []
        for j, mask in enumerate(self.down_masks):
            m = mask
            while m:
                low = m & -m
                out.append((low.bit_length() - 1, j))
                m ^= low
        out.sort()
        return out

    def is_graded(self) -> bool:
        """Every maximal chain climbs one rank at a time from x to y."""
        if self.rank_sizes[0] != 1 or self.rank_sizes[-1] != 1:
            return False
        n = len(self.members)
        for i in range(n):
            r = self.ranks[i]
            if r < self.span and self.up_masks[i] == 0:
                return False
            if r > 0 and self.down_masks[i] == 0:
                return False
        return True

    # -- canonical refinement -------------------------------------------------

    @property
    def colors(self) -> tuple[int, ...]:
        """Stable colors from iterated (rank, neighbor-multiset) refinement."""
        if self._colors is None:
            n = len(self.members)
            colors = list(self.ranks)
            while True:
                data = []
                for i in range(n):
                    down = _mask_colors(self.down_masks[i], colors)
                    up = _mask_colors(self.up_masks[i], colors)
                    data.append((colors[i], down, up))
                palette = {d: c for c, d in enumerate(sorted(set(data)))}
                new = [palette[d] for d in data]
                if new == colors:
                    break
                colors = new
            self._colors = tuple(colors)
        return self._colors

    def to_json_obj(self) -> dict:
        return {
            "bottom": self.bottom.word(),
            "top": self.top.word(),
            "members": [z.word() for z in self.members],
            "covers": [[i, j] for i, j in self.covers()],
        }


def _mask_colors(mask: int, colors: list[int]) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(colors[low.bit_length() - 1])
        mask ^= low
    return tuple(sorted(out))


_INTERVAL_CACHE: dict[tuple[Element, Element], Interval] = {}


def build_interval(x: Element, y: Element) -> Interval:
    """The interval [x, y]; raises NotComparableError when x is not below y."""
    key = (x, y)
    cached = _INTERVAL_CACHE.get(key)
    if cached is not None:
        return cached
    if not weyl.bruhat_leq(x, y):
        raise NotComparableError(
            f"{x.word() or 'id'!s} is not below {y.word() or 'id'!s} in Bruhat order"
        )
    members = [z for z in weyl.lower_interval(y) if weyl.bruhat_leq(x, z)]
    members.sort(key=Element.sort_key)
    out = Interval(x, y, members)
    _INTERVAL_CACHE[key] = out
    return out


# ---------------------------------------------------------------------------
# isomorphism

@dataclass(frozen=True)
class IsoCertificate:
    """An order isomorphism, stored as a member-to-member mapping."""

    mapping: dict[Element, Element]

    def apply(self, z: Element) -> Element:
        return self.mapping[z]

    def inverse(self) -> "IsoCertificate":
        return IsoCertificate({b: a for a, b in self.mapping.items()})

    def compose(self, earlier: "IsoCertificate") -> "IsoCertificate":
        """self after earlier."""
        return IsoCertificate({a: self.mapping[b] for a, b in earlier.mapping.items()})

    def to_index_permutation(self, a: Interval, b: Interval) -> list[int]:
        """JSON form: position i holds the b-index of the image of a.members[i]."""
        return [b.index[self.mapping[z]] for z in a.members]

    def is_valid(self, a: Interval, b: Interval) -> bool:
        """Re-derive that the mapping preserves order in both directions."""
        if set(self.mapping) != set(a.members):
            return False
        if set(self.mapping.values()) != set(b.members):
            return False
        perm = self.to_index_permutation(a, b)
        la, lb = a.leq_masks, b.leq_masks
        n = len(a.members)
        for i in range(n):
            row = la[i]
            img_row = 0
            m = row
            while m:
                low = m & -m
                img_row |= 1 << perm[low.bit_length() - 1]
                m ^= low
            if img_row != lb[perm[i]]:
                return False
        return True


def is_isomorphic(a: Interval, b: Interval) -> Optional[IsoCertificate]:
    """A certificate iff the two intervals are order isomorphic.

    Deterministic for fixed inputs: members are scanned in canonical
    order and the first completed assignment wins.
    """
    if (
        len(a.members) != len(b.members)
        or a.span != b.span
        or a.rank_sizes != b.rank_sizes
    ):
        return None
    ca, cb = a.colors, b.colors
    if sorted(ca) != sorted(cb):
        return None
    n = len(a.members)
    by_color_b: dict[tuple[int, int], list[int]] = {}
    for j in range(n):
        by_color_b.setdefault((b.ranks[j], cb[j]), []).append(j)
    order = sorted(range(n), key=lambda i: (a.ranks[i], ca[i], i))
    amap = [-1] * n
    used = 0

    def extend(pos: int) -> bool:
        nonlocal used
        if pos == n:
            return True
        i = order[pos]
        req = 0
        m = a.down_masks[i]
        while m:
            low = m & -m
            req |= 1 << amap[low.bit_length() - 1]
            m ^= low
        for j in by_color_b.get((a.ranks[i], ca[i]), ()):
            bit = 1 << j
            if used & bit or b.down_masks[j] != req:
                continue
            amap[i] = j
            used |= bit
            if extend(pos + 1):
                return True
            amap[i] = -1
            used &= ~bit
        return False

    if not extend(0):
        return None
    return IsoCertificate(
        {a.members[i]: b.members[amap[i]] for i in range(n)}
    )


def fingerprint(a: Interval) -> str:
    """Isomorphism-invariant digest of the refined color structure.

    Equal for isomorphic intervals by construction; used to gate the
    backtracking search.
    """
    if a._fingerprint is None:
        colors = a.colors
        edge_profile = sorted(
            (colors[i], colors[j]) for i, j in a.covers()
        )
        blob = repr((a.span, a.rank_sizes, sorted(colors), edge_profile))
        a._fingerprint = hashlib.sha256(blob.encode()).hexdigest()[:16]
    return a._fingerprint


# ---------------------------------------------------------------------------
# poset invariants

def parents(a: Element, b: Element, interval: Interval, m: int) -> frozenset[Element]:
    """Common upper bounds of a and b in the interval, exactly m ranks up."""
    if a not in interval or b not in interval:
        raise ValueError("both elements must lie in the interval")
    if a.length != b.length:
        raise ValueError(
            f"rank mismatch: l({a.word()}) = {a.length} != {b.length} = l({b.word()})"
        )
    if m < 1:
        raise ValueError("m must be a positive integer")
    target = a.length + m
    return frozenset(
        z
        for z in interval.members
        if z.length == target and weyl.bruhat_leq(a, z) and weyl.bruhat_leq(b, z)
    )


def z_invariant(interval: Interval, m: int) -> frozenset[Element]:
    """Members at corank m whose KL polynomial against the top is 1 + q."""
    y = interval.top
    target = y.length - m
    return frozenset(
        z
        for z in interval.members
        if z.length == target and closedform.kl_fast(z, y) == Q_PLUS_ONE
    )


def z_preserved_check(a: Interval, b: Interval, cert: IsoCertificate) -> bool:
    """Whether the certificate maps Z^m of a onto Z^m of b for m = 1..4."""
    for m in range(1, 5):
        image = {cert.apply(z) for z in z_invariant(a, m)}
        if image != z_invariant(b, m):
            return False
    return True


# ---------------------------------------------------------------------------
# structural consequences of the Z-sets

def _six_case_elements(idx: ThetaIndex) -> list[Element]:
    m, n = idx
    if m == 0 and n == 0:
        return [weyl.generator(0), weyl.identity()]
    if m > 0 and n == 0:
        return [
            RHO.apply(regions.theta((m - 1, 0))),
            RHO.apply(regions.x_chain(2 * m)),
        ]
    if m == 0 and n > 0:
        rho2 = RHO * RHO
        return [
            rho2.apply(regions.theta((0, n - 1))),
            rho2.apply(SIGMA.apply(regions.x_chain(2 * n))),
        ]
    return []


def structural_lemma_checks(bound: int) -> dict:
    """Check the Z-set lemmas on every interval with l(y) <= bound.

    * tops in Theta1, Theta2 or X: |Z^3| = 1 forces P = 1 + q;
    * tops in Theta1 or X: empty Z^3 forces P = 1;
    * tops in X: P is 1 or 1 + q according to Z^3 being empty or not;
    * tops in Theta2 with empty Z^3 and P != 1: the pulled-back bottom
      is one of the six exceptional cases, with P = 1 + q, |Z^4| = 1 and
      length gap 4 or 5.
    """
    one = QPoly.one()
    counts = {"theta1_x_unique": 0, "empty_z3": 0, "x_tops": 0, "six_case": 0}
    violations: list[dict] = []
    instances: list[dict] = []
    for y in weyl.enumerate_up_to_length(bound):
        if y.is_identity:
            continue
        tag = regions.classify(y)
        kind = tag.kind
        if kind is RegionKind.THETA:
            continue
        corank3 = [
            (z, closedform.kl_fast(z, y))
            for z in weyl.lower_interval(y)
            if z.length == y.length - 3
        ]
        corank4 = [
            (z, closedform.kl_fast(z, y))
            for z in weyl.lower_interval(y)
            if z.length == y.length - 4
        ]
        inv = tag.tau.inverse_symmetry()
        six = _six_case_elements(tag.params) if kind is RegionKind.THETA2 else []
        for x in weyl.lower_interval(y):
            z3 = sum(
                1
                for z, p in corank3
                if p == Q_PLUS_ONE and weyl.bruhat_leq(x, z)
            )
            p_xy = closedform.kl_fast(x, y)

            def flag(rule: str) -> None:
                violations.append(
                    {
                        "rule": rule,
                        "x": x.word(),
                        "y": y.word(),
                        "P": str(p_xy),
                        "z3": z3,
                    }
                )

            if z3 == 1:
                counts["theta1_x_unique"] += 1
                if p_xy != Q_PLUS_ONE:
                    flag("|Z3| = 1 forces P = 1 + q")
            if z3 == 0 and kind in (RegionKind.THETA1, RegionKind.X):
                counts["empty_z3"] += 1
                if p_xy != one:
                    flag("empty Z3 forces P = 1")
            if kind is RegionKind.X:
                counts["x_tops"] += 1
                expected = one if z3 == 0 else Q_PLUS_ONE
                if p_xy != expected:
                    flag("X tops: P determined by Z3")
            if kind is RegionKind.THETA2 and z3 == 0 and p_xy != one:
                counts["six_case"] += 1
                z4 = sum(
                    1
                    for z, p in corank4
                    if p == Q_PLUS_ONE and weyl.bruhat_leq(x, z)
                )
                gap = y.length - x.length
                x0 = inv.apply(x)
                ok = (
                    x0 in six
                    and p_xy == Q_PLUS_ONE
                    and z4 == 1
                    and gap in (4, 5)
                )
                instances.append(
                    {
                        "x": x.word(),
                        "y": y.word(),
                        "m": tag.params.m,
                        "n": tag.params.n,
                        "case_element": x0.word(),
                        "gap": gap,
                        "ok": ok,
                    }
                )
                if not ok:
                    flag("six-case lemma")
    return {
        "bound": bound,
        "counts": counts,
        "six_case_instances": instances,
        "violations": violations,
        "holds": not violations,
    }
