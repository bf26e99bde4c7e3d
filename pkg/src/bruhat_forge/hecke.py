"""
The Hecke algebra of the affine Weyl group of type A2~, in the
normalization where the quadratic relation reads
H_s^2 = (v^-1 - v) H_s + H_id and the canonical basis element of a
simple reflection is H_s + v H_id.

Provides the standard basis, multiplication by H_s and by H_s + v, the
canonical basis via the mu-corrected recursion (the oracle every closed
formula is checked against), Kazhdan-Lusztig polynomials in both the v-
and q-normalizations, the auxiliary sums N_x (lower-interval sum) and
M_{x,y} (union of two lower intervals), coefficient extraction G_x,
the content c(H) (total coefficient mass at v = 1), monotonic elements,
and the coefficientwise order on Hecke elements.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Optional

from . import weyl
from .laurent import ONE, V, V_INV, ZERO, LaurentPoly, QPoly, to_q
from .weyl import Element, ResourceLimitError, Symmetry

__all__ = [
    "HeckeElement",
    "standard_basis",
    "mult_std",
    "mult_kl_s",
    "kl_basis",
    "kl_polynomial",
    "mu",
    "N_element",
    "M_element",
    "G_coefficient",
    "content",
    "is_monotonic",
    "hecke_geq",
    "bar_involution",
    "apply_symmetry",
    "DEFAULT_KL_CAP",
]

DEFAULT_KL_CAP = 24


class HeckeElement:
    """A finitely supported map Element -> LaurentPoly (standard basis)."""

    __slots__ = ("_m", "_hash")

    def __init__(self, terms: Mapping[Element, LaurentPoly] | None = None):
        self._m = {x: p for x, p in (terms or {}).items() if p}
        self._hash: Optional[int] = None

    @classmethod
    def zero(cls) -> "HeckeElement":
        return cls()

    def support(self) -> tuple[Element, ...]:
        return tuple(sorted(self._m, key=Element.sort_key))

    def coefficient(self, x: Element) -> LaurentPoly:
        return self._m.get(x, ZERO)

    def items(self) -> Iterator[tuple[Element, LaurentPoly]]:
        for x in self.support():
            yield x, self._m[x]

    def __len__(self) -> int:
        return len(self._m)

    def __bool__(self) -> bool:
        return bool(self._m)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self._m == other._m

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash(frozenset(self._m.items()))
            self._hash = h
        return h

    def __repr__(self) -> str:
        parts = [f"({p}) H[{x.word() or '~'}]" for x, p in self.items()]
        return "HeckeElement(" + " + ".join(parts or ["0"]) + ")"

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        acc = dict(self._m)
        for x, p in other._m.items():
            q = acc.get(x)
            acc[x] = p if q is None else q + p
        return HeckeElement(acc)

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        acc = dict(self._m)
        for x, p in other._m.items():
            q = acc.get(x)
            acc[x] = -p if q is None else q - p
        return HeckeElement(acc)

    def scale(self, p: LaurentPoly) -> "HeckeElement":
        if not p:
            return HeckeElement()
        return HeckeElement({x: q * p for x, q in self._m.items()})

    # -- serialization ------------------------------------------------------

    def to_json_obj(self) -> list[dict]:
        """[{element: canonical word, poly: [[exp, coeff], ...]}, ...]"""
        return [
            {"element": x.word(), "poly": p.to_pairs()} for x, p in self.items()
        ]

    @classmethod
    def from_json_obj(cls, obj: Iterable[Mapping]) -> "HeckeElement":
        return cls(
            {
                weyl.from_word(rec["element"]): LaurentPoly.from_pairs(
                    (e, c) for e, c in rec["poly"]
                )
                for rec in obj
            }
        )


def standard_basis(w: Element) -> HeckeElement:
    """The single term H_w with coefficient 1."""
    return HeckeElement({w: ONE})


def _mult_gen(H: HeckeElement, s: int, side: str, kl: bool) -> HeckeElement:
    """Multiply by H_s (kl=False) or by H_s + v (kl=True) on either side."""
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    right = side == "right"
    acc: dict[Element, LaurentPoly] = {}

    def add(x: Element, p: LaurentPoly) -> None:
        q = acc.get(x)
        acc[x] = p if q is None else q + p

    for x, p in H._m.items():
        xs = x.right_mult(s) if right else x.left_mult(s)
        add(xs, p)
        if xs.length > x.length:
            if kl:
                add(x, p * V)
        else:
            add(x, p * (V_INV if kl else V_INV - V))
    return HeckeElement(acc)


def mult_std(H: HeckeElement, s: int, side: str = "right") -> HeckeElement:
    """Multiply by the standard generator H_s.

    H_x H_s = H_{xs} when the length goes up, and
    H_x H_s = H_{xs} + (v^-1 - v) H_x when it goes down.
    """
    return _mult_gen(H, s, side, kl=False)


def mult_kl_s(H: HeckeElement, s: int, side: str = "right") -> HeckeElement:
    """Multiply by the canonical generator H_s + v H_id."""
    return _mult_gen(H, s, side, kl=True)


# ---------------------------------------------------------------------------
# canonical basis (the recursion oracle)

_KL_CACHE: dict[Element, HeckeElement] = {}


def kl_basis(w: Element, max_length: int = DEFAULT_KL_CAP) -> HeckeElement:
    """Canonical basis element of w by the mu-corrected recursion.

    Writing kl_basis(w) = sum_x h_{x,w}(v) H_x, the result satisfies
    h_{w,w} = 1 and h_{x,w} in v Z[v] for x < w, and is fixed by the bar
    involution.  Computed as kl_basis(ws) * (H_s + v) minus the
    correction sum over x with xs < x of mu(x, ws) * kl_basis(x), where
    mu is the coefficient of v^1.  Results are memoized.
    """
    if w.length > max_length:
        raise ResourceLimitError(
            f"kl_basis at length {w.length} exceeds the cap {max_length}"
        )
    cached = _KL_CACHE.get(w)
    if cached is not None:
        return cached
    if w.is_identity:
        out = standard_basis(w)
    else:
        s = min(w.right_descents())
        u = w.right_mult(s)
        base = kl_basis(u, max_length)
        out = mult_kl_s(base, s, "right")
        for x, p in base._m.items():
            m = p.coefficient(1)
            if m and x.right_mult(s).length < x.length:
                out = out - kl_basis(x, max_length).scale(LaurentPoly({0: m}))
    _KL_CACHE[w] = out
    return out


def mu(x: Element, w: Element) -> int:
    """The coefficient of v in h_{x,w}."""
    return kl_basis(w).coefficient(x).coefficient(1)


def kl_polynomial(x: Element, w: Element) -> tuple[LaurentPoly, QPoly]:
    """(h_{x,w}, P_{x,w}); both zero when x is not below w."""
    h = kl_basis(w).coefficient(x)
    if not h:
        return ZERO, QPoly.zero()
    return h, to_q(h, w.length - x.length)


# ---------------------------------------------------------------------------
# auxiliary elements and the coefficient apparatus

_N_CACHE: dict[Element, HeckeElement] = {}


def N_element(x: Element) -> HeckeElement:
    """Sum over z <= x of v^(l(x)-l(z)) H_z."""
    cached = _N_CACHE.get(x)
    if cached is None:
        n = x.length
        cached = HeckeElement(
            {z: LaurentPoly({n - z.length: 1}) for z in weyl.lower_interval(x)}
        )
        _N_CACHE[x] = cached
    return cached


def M_element(x: Element, y: Element) -> HeckeElement:
    """Sum over w <= x or w <= y of v^(l(x)-l(w)) H_w.

    The exponents are centered on l(x), so M_{x,y} = M_{y,x} only when
    the two lengths agree.
    """
    n = x.length
    support = set(weyl.lower_interval(x)) | set(weyl.lower_interval(y))
    return HeckeElement({w: LaurentPoly({n - w.length: 1}) for w in support})


def G_coefficient(x: Element, H: HeckeElement) -> LaurentPoly:
    """The coefficient of H_x in H (zero when absent)."""
    return H.coefficient(x)


def content(H: HeckeElement) -> int:
    """Sum over the support of the coefficient values at v = 1."""
    return sum(p.evaluate_at_one() for p in H._m.values())


def is_monotonic(H: HeckeElement) -> bool:
    """Whether G_y(H) - v^(l(x)-l(y)) G_x(H) lies in N[v, v^-1] for all
    y <= x.

    Quantified over pairs inside the downward closure of the support;
    for pairs involving an element outside the closure the inequality
    degenerates to coefficient non-negativity, which is checked
    explicitly.
    """
    if not all(p.is_nonneg() for p in H._m.values()):
        return False
    for x, px in H._m.items():
        lx = x.length
        for y in weyl.lower_interval(x):
            diff = H.coefficient(y) - px.shift(lx - y.length)
            if not diff.is_nonneg():
                return False
    return True


def hecke_geq(H1: HeckeElement, H2: HeckeElement) -> bool:
    """Coefficientwise order: every G_x(H1 - H2) lies in N[v, v^-1]."""
    diff = H1 - H2
    return all(p.is_nonneg() for p in diff._m.values())


# ---------------------------------------------------------------------------
# bar involution and symmetries

_BAR_STD_CACHE: dict[Element, HeckeElement] = {}


def _bar_standard(x: Element) -> HeckeElement:
    """Image of H_x under the bar involution: bar(H_s) = H_s + (v - v^-1)."""
    cached = _BAR_STD_CACHE.get(x)
    if cached is not None:
        return cached
    if x.is_identity:
        out = standard_basis(x)
    else:
        s = min(x.left_descents())
        rest = _bar_standard(x.left_mult(s))
        out = mult_std(rest, s, "left") + rest.scale(V - V_INV)
    _BAR_STD_CACHE[x] = out
    return out


def bar_involution(H: HeckeElement) -> HeckeElement:
    """The bar involution: v -> v^-1 on coefficients, H_s -> H_s^-1."""
    out = HeckeElement()
    for x, p in H._m.items():
        out = out + _bar_standard(x).scale(p.bar())
    return out


def apply_symmetry(tau: Symmetry, H: HeckeElement) -> HeckeElement:
    """Relabel the support by tau; coefficients are unchanged.

    Valid for every tau in G because diagram automorphisms extend to
    algebra automorphisms permuting both bases, and inversion preserves
    all KL coefficients.
    """
    return HeckeElement({tau.apply(x): p for x, p in H._m.items()})
