"""
The affine Weyl group W of type A2~: three generators s0, s1, s2 with
s_i^2 = id and all pairwise braid relations of order 3.

Elements are stored exactly as affine maps on the weight lattice of A2:
w(x) = A.x + t, where A is one of the six finite Weyl group matrices (in
weight coordinates) and t lies in the root lattice.  This realization
gives O(1) products, inverses and equality, an O(1) length formula
(walls of the alcove tessellation separating w(A0) from the fundamental
alcove A0), and the alcove model w -> w(A0) used for drawing.

Words are sequences of generator labels; any integer label k denotes the
generator with index k mod 3, so "1234321" reads the same as "1201021".
Elements serialize as their ShortLex-minimal reduced word with generator
order 0 < 1 < 2.

The symmetry group G (order 12) is generated by the diagram rotation rho
(s0 -> s1 -> s2 -> s0), the diagram flip sigma (fixes s0, swaps s1 and
s2) and the inversion map iota: w -> w^-1.  Diagram automorphisms act by
conjugation with an affine isometry of the plane that maps A0 to itself,
so applying a symmetry is O(1) as well.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

__all__ = [
    "Element",
    "Symmetry",
    "ResourceLimitError",
    "SYMMETRY_GROUP",
    "DEFAULT_MAX_LENGTH",
    "HARD_MAX_LENGTH",
    "parse_word",
    "from_word",
    "identity",
    "generator",
    "multiply",
    "inverse",
    "length",
    "descents",
    "bruhat_leq",
    "lower_interval",
    "apply_symmetry",
    "enumerate_up_to_length",
    "elements_of_length",
    "alcove_coordinates",
    "alcove_vertices",
]

Generator = int
WordLike = Union[str, Iterable[int]]

DEFAULT_MAX_LENGTH = 16
HARD_MAX_LENGTH = 64


class ResourceLimitError(RuntimeError):
    """Raised when an enumeration or recursion exceeds its configured cap."""


# ---------------------------------------------------------------------------
# linear algebra over the weight lattice (integer 2x2 matrices, row-major)

Mat = tuple[int, int, int, int]
Vec = tuple[int, int]

_ID: Mat = (1, 0, 0, 1)
_S1: Mat = (-1, 0, 1, 1)   # s1: (a, b) -> (-a, a+b)
_S2: Mat = (1, 1, 0, -1)   # s2: (a, b) -> (a+b, -b)
_S0: Mat = (0, -1, -1, 0)  # linear part of s0: (a, b) -> (-b, -a)


def _mat_mul(m: Mat, n: Mat) -> Mat:
    a, b, c, d = m
    e, f, g, h = n
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def _mat_vec(m: Mat, v: Vec) -> Vec:
    a, b, c, d = m
    x, y = v
    return (a * x + b * y, c * x + d * y)


def _mat_inv(m: Mat) -> Mat:
    a, b, c, d = m
    det = a * d - b * c
    # all matrices here have determinant +-1
    return (d // det, -b // det, -c // det, a // det)


def _finite_weyl_matrices() -> tuple[Mat, ...]:
    mats = [_ID, _S1, _S2]
    frontier = list(mats)
    while frontier:
        m = frontier.pop()
        for g in (_S1, _S2):
            p = _mat_mul(m, g)
            if p not in mats:
                mats.append(p)
                frontier.append(p)
    return tuple(sorted(mats))


_LINS: tuple[Mat, ...] = _finite_weyl_matrices()
_LIN_INDEX: dict[Mat, int] = {m: i for i, m in enumerate(_LINS)}
_LIN_MUL: tuple[tuple[int, ...], ...] = tuple(
    tuple(_LIN_INDEX[_mat_mul(m, n)] for n in _LINS) for m in _LINS
)
_LIN_INV: tuple[int, ...] = tuple(_LIN_INDEX[_mat_inv(m)] for m in _LINS)

_GEN_LIN: tuple[int, int, int] = (_LIN_INDEX[_S0], _LIN_INDEX[_S1], _LIN_INDEX[_S2])
_GEN_TRANS: tuple[Vec, Vec, Vec] = ((1, 1), (0, 0), (0, 0))


# ---------------------------------------------------------------------------
# elements

class Element:
    """A group element, interned so that equal elements are one object.

    ``lin`` indexes the linear part among the six finite Weyl matrices
    and ``(tx, ty)`` is the translation in weight coordinates (always a
    root lattice vector: tx = ty mod 3).
    """

    __slots__ = ("lin", "tx", "ty", "_hash", "_len", "_rd", "_ld", "_word")

    def __init__(self, lin: int, tx: int, ty: int):
        self.lin = lin
        self.tx = tx
        self.ty = ty
        self._hash = hash((lin, tx, ty))
        self._len: Optional[int] = None
        self._rd: Optional[frozenset[int]] = None
        self._ld: Optional[frozenset[int]] = None
        self._word: Optional[str] = None

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Element):
            return NotImplemented
        return (
            self.lin == other.lin and self.tx == other.tx and self.ty == other.ty
        )

    def __hash__(self) -> int:
        return self._hash

    def __reduce__(self):
        return (_make, (self.lin, self.tx, self.ty))

    def __repr__(self) -> str:
        return f"Element({self.word()!r})"

    # -- group structure ---------------------------------------------------

    def __mul__(self, other: "Element") -> "Element":
        a = _LINS[self.lin]
        x, y = _mat_vec(a, (other.tx, other.ty))
        return _make(_LIN_MUL[self.lin][other.lin], x + self.tx, y + self.ty)

    def inverse(self) -> "Element":
        inv = _LIN_INV[self.lin]
        x, y = _mat_vec(_LINS[inv], (self.tx, self.ty))
        return _make(inv, -x, -y)

    def right_mult(self, s: Generator) -> "Element":
        """w * s for a single generator, without building ``s`` first."""
        lin = _LIN_MUL[self.lin][_GEN_LIN[s]]
        if s == 0:
            a, b, c, d = _LINS[self.lin]
            return _make(lin, self.tx + a + b, self.ty + c + d)
        return _make(lin, self.tx, self.ty)

    def left_mult(self, s: Generator) -> "Element":
        """s * w for a single generator."""
        g = _GEN_LIN[s]
        x, y = _mat_vec(_LINS[g], (self.tx, self.ty))
        ex, ey = _GEN_TRANS[s]
        return _make(_LIN_MUL[g][self.lin], x + ex, y + ey)

    # -- length, descents, words -------------------------------------------

    @property
    def length(self) -> int:
        """Number of tessellation walls separating w(A0) from A0."""
        n = self._len
        if n is None:
            px, py = self._scaled_centroid()
            n = abs(px // 3) + abs(py // 3) + abs((px + py) // 3)
            self._len = n
        return n

    def _scaled_centroid(self) -> Vec:
        # 3 * centroid of w(A0) in weight coordinates
        a, b, c, d = _LINS[self.lin]
        return (a + b + 3 * self.tx, c + d + 3 * self.ty)

    @property
    def is_identity(self) -> bool:
        return self.length == 0

    def right_descents(self) -> frozenset[int]:
        """{s : l(ws) < l(w)}"""
        rd = self._rd
        if rd is None:
            n = self.length
            rd = frozenset(s for s in (0, 1, 2) if self.right_mult(s).length < n)
            self._rd = rd
        return rd

    def left_descents(self) -> frozenset[int]:
        """{s : l(sw) < l(w)}"""
        ld = self._ld
        if ld is None:
            n = self.length
            ld = frozenset(s for s in (0, 1, 2) if self.left_mult(s).length < n)
            self._ld = ld
        return ld

    def word(self) -> str:
        """ShortLex-minimal reduced word, with generator order 0 < 1 < 2.

        >>> from_word("1212").word()
        '21'
        """
        w = self._word
        if w is None:
            letters = []
            cur = self
            while not cur.is_identity:
                s = min(cur.left_descents())
                letters.append(str(s))
                cur = cur.left_mult(s)
            w = "".join(letters)
            self._word = w
        return w

    def sort_key(self) -> tuple[int, str]:
        return (self.length, self.word())

    # -- alcove geometry ----------------------------------------------------

    def alcove_vertices(self) -> tuple[Vec, Vec, Vec]:
        """Vertices of w(A0) in weight coordinates (integer points)."""
        a, b, c, d = _LINS[self.lin]
        t = (self.tx, self.ty)
        return (t, (a + t[0], c + t[1]), (b + t[0], d + t[1]))

    @property
    def orientation_up(self) -> bool:
        """True when w(A0) points the same way as A0 (even length)."""
        a, b, c, d = _LINS[self.lin]
        return a * d - b * c > 0


_REGISTRY: dict[tuple[int, int, int], Element] = {}


def _make(lin: int, tx: int, ty: int) -> Element:
    key = (lin, tx, ty)
    el = _REGISTRY.get(key)
    if el is None:
        el = Element(lin, tx, ty)
        _REGISTRY[key] = el
    return el


_IDENTITY = _make(_LIN_INDEX[_ID], 0, 0)
_GENERATORS = tuple(_make(_GEN_LIN[s], *_GEN_TRANS[s]) for s in (0, 1, 2))


def identity() -> Element:
    return _IDENTITY


def generator(s: int) -> Element:
    """The simple reflection with label s (taken mod 3)."""
    return _GENERATORS[s % 3]


def parse_word(word: WordLike) -> tuple[int, ...]:
    """Normalize a word to generator indices, reducing labels mod 3.

    >>> parse_word("1234321")
    (1, 2, 0, 1, 0, 2, 1)
    """
    if isinstance(word, str):
        if word and not word.isdigit():
            raise ValueError(f"word must be a digit string, got {word!r}")
        return tuple(int(ch) % 3 for ch in word)
    return tuple(int(k) % 3 for k in word)


def from_word(word: WordLike) -> Element:
    """Evaluate a (possibly non-reduced) word to a group element.

    >>> from_word([]) is identity()
    True
    >>> from_word("1212") == from_word("21")
    True
    """
    w = _IDENTITY
    for s in parse_word(word):
        w = w.right_mult(s)
    return w


def multiply(a: Element, b: Element) -> Element:
    return a * b


def inverse(w: Element) -> Element:
    return w.inverse()


def length(w: Element) -> int:
    return w.length


def descents(w: Element, side: str) -> frozenset[int]:
    """Left or right descent set; ``side`` is "left" or "right"."""
    if side == "right":
        return w.right_descents()
    if side == "left":
        return w.left_descents()
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


# ---------------------------------------------------------------------------
# Bruhat order

_BRUHAT_MEMO: dict[tuple[Element, Element], bool] = {}


def bruhat_leq(x: Element, y: Element) -> bool:
    """x <= y in Bruhat order, by the lifting-property recursion:
    pick s with sy < y; then x <= y iff (sx <= sy if sx < x else x <= sy).
    """
    if x is y or x.length == 0:
        return True
    if x.length >= y.length:
        return x == y
    key = (x, y)
    memo = _BRUHAT_MEMO
    hit = memo.get(key)
    if hit is not None:
        return hit
    s = min(y.left_descents())
    sy = y.left_mult(s)
    if s in x.left_descents():
        res = bruhat_leq(x.left_mult(s), sy)
    else:
        res = bruhat_leq(x, sy)
    memo[key] = res
    return res


_LOWER_MEMO: dict[Element, tuple[Element, ...]] = {}


def lower_interval(y: Element) -> tuple[Element, ...]:
    """All z <= y, sorted by (length, word)."""
    cached = _LOWER_MEMO.get(y)
    if cached is None:
        cached = tuple(
            sorted(
                (z for z in enumerate_up_to_length(y.length) if bruhat_leq(z, y)),
                key=Element.sort_key,
            )
        )
        _LOWER_MEMO[y] = cached
    return cached


# ---------------------------------------------------------------------------
# enumeration

_LAYERS: list[tuple[Element, ...]] = [(_IDENTITY,)]


def elements_of_length(n: int) -> tuple[Element, ...]:
    """All elements of length exactly n, sorted by canonical word."""
    if n < 0:
        raise ValueError("length must be non-negative")
    if n > HARD_MAX_LENGTH:
        raise ResourceLimitError(
            f"enumeration up to length {n} exceeds the hard cap {HARD_MAX_LENGTH}"
        )
    while len(_LAYERS) <= n:
        prev = _LAYERS[-1]
        depth = len(_LAYERS)
        seen = set()
        layer = []
        for w in prev:
            for s in (0, 1, 2):
                nxt = w.right_mult(s)
                if nxt.length == depth and nxt not in seen:
                    seen.add(nxt)
                    layer.append(nxt)
        layer.sort(key=Element.sort_key)
        _LAYERS.append(tuple(layer))
    return _LAYERS[n]


def enumerate_up_to_length(max_length: int = DEFAULT_MAX_LENGTH) -> tuple[Element, ...]:
    """All elements of length <= max_length, each exactly once.

    >>> len(enumerate_up_to_length(1))
    4
    """
    if max_length < 0:
        raise ValueError("length must be non-negative")
    if max_length > HARD_MAX_LENGTH:
        raise ResourceLimitError(
            f"enumeration up to length {max_length} exceeds the hard cap "
            f"{HARD_MAX_LENGTH}"
        )
    out: list[Element] = []
    for n in range(max_length + 1):
        out.extend(elements_of_length(n))
    return tuple(out)


# ---------------------------------------------------------------------------
# the symmetry group G = <rho, sigma, iota>

Affine = tuple[Mat, Vec]


def _aff_mul(f: Affine, g: Affine) -> Affine:
    fm, fv = f
    gm, gv = g
    x, y = _mat_vec(fm, gv)
    return (_mat_mul(fm, gm), (x + fv[0], y + fv[1]))


def _aff_inv(f: Affine) -> Affine:
    m, v = f
    mi = _mat_inv(m)
    x, y = _mat_vec(mi, v)
    return (mi, (-x, -y))


# rho is conjugation by the order-3 rotation of the plane fixing A0 and
# cycling its walls; sigma is conjugation by the reflection swapping the
# two weight axes.  Both normalize W.
_ROT: Affine = ((-1, -1, 1, 0), (1, 0))
_FLIP: Affine = ((0, 1, 1, 0), (0, 0))

_PERM_RHO = (1, 2, 0)
_PERM_SIGMA = (0, 2, 1)
_PERM_ID = (0, 1, 2)


def _perm_mul(p: tuple[int, int, int], q: tuple[int, int, int]) -> tuple[int, int, int]:
    return (p[q[0]], p[q[1]], p[q[2]])


def _diagram_conjugators() -> dict[tuple[int, int, int], Affine]:
    conj = {_PERM_ID: (_ID, (0, 0))}
    frontier = [_PERM_ID]
    while frontier:
        p = frontier.pop()
        for q, aff in ((_PERM_RHO, _ROT), (_PERM_SIGMA, _FLIP)):
            r = _perm_mul(q, p)
            if r not in conj:
                conj[r] = _aff_mul(aff, conj[p])
                frontier.append(r)
    return conj


_CONJ: dict[tuple[int, int, int], Affine] = _diagram_conjugators()
_CONJ_INV: dict[tuple[int, int, int], Affine] = {
    p: _aff_inv(a) for p, a in _CONJ.items()
}


@dataclass(frozen=True)
class Symmetry:
    """An element of G: a diagram automorphism plus an optional inversion.

    ``perm[s]`` is the image of generator s under the diagram part; the
    inversion iota commutes with the diagram part as a map on W.
    """

    perm: tuple[int, int, int]
    inv: bool = False

    def apply(self, w: Element) -> Element:
        c = _CONJ[self.perm]
        ci = _CONJ_INV[self.perm]
        m, v = _aff_mul(_aff_mul(c, (_LINS[w.lin], (w.tx, w.ty))), ci)
        out = _make(_LIN_INDEX[m], v[0], v[1])
        return out.inverse() if self.inv else out

    def apply_generator(self, s: Generator) -> Generator:
        return self.perm[s]

    def __mul__(self, other: "Symmetry") -> "Symmetry":
        return Symmetry(_perm_mul(self.perm, other.perm), self.inv ^ other.inv)

    def inverse_symmetry(self) -> "Symmetry":
        inv = (self.perm.index(0), self.perm.index(1), self.perm.index(2))
        return Symmetry(inv, self.inv)

    @property
    def name(self) -> str:
        return _SYMMETRY_NAMES[(self.perm, self.inv)]

    def __repr__(self) -> str:
        return f"Symmetry({self.name})"


RHO = Symmetry(_PERM_RHO)
SIGMA = Symmetry(_PERM_SIGMA)
IOTA = Symmetry(_PERM_ID, True)
IDENTITY_SYMMETRY = Symmetry(_PERM_ID)

# fixed enumeration order: id, rho, rho^2, sigma, sigma rho, sigma rho^2,
# then the same six composed with iota
_D3_ORDER = [
    ("id", IDENTITY_SYMMETRY),
    ("rho", RHO),
    ("rho2", RHO * RHO),
    ("sigma", SIGMA),
    ("sigma_rho", SIGMA * RHO),
    ("sigma_rho2", SIGMA * RHO * RHO),
]
SYMMETRY_GROUP: tuple[Symmetry, ...] = tuple(
    [tau for _, tau in _D3_ORDER] + [tau * IOTA for _, tau in _D3_ORDER]
)
_SYMMETRY_NAMES: dict[tuple[tuple[int, int, int], bool], str] = {}
for _n, _tau in _D3_ORDER:
    _SYMMETRY_NAMES[(_tau.perm, False)] = _n
    _SYMMETRY_NAMES[(_tau.perm, True)] = _n + "_iota"

SYMMETRY_BY_NAME: dict[str, Symmetry] = {tau.name: tau for tau in SYMMETRY_GROUP}


def apply_symmetry(tau: Symmetry, w: Element) -> Element:
    """The image of w under tau; preserves lengths and Bruhat order.

    >>> apply_symmetry(RHO, generator(0)) is generator(1)
    True
    """
    return tau.apply(w)


# ---------------------------------------------------------------------------
# alcove coordinates (Cartesian, exact)

def _cartesian(v: Vec) -> tuple[Fraction, Fraction]:
    # weight point a*w1 + b*w2 with w1 = (1, 0), w2 = (1/2, sqrt(3)/2);
    # the second coordinate is returned as the rational multiple of sqrt(3)
    a, b = v
    return (Fraction(2 * a + b, 2), Fraction(b, 2))


def alcove_coordinates(w: Element) -> tuple[tuple[Fraction, Fraction], bool]:
    """Centroid of the alcove w(A0) plus its orientation flag.

    Returns ((x, y'), up) where the Cartesian centroid is (x, y' * sqrt(3))
    for the embedding with A0 = triangle (0,0), (1,0), (1/2, sqrt(3)/2).
    The map is injective and identity() lands on A0 pointing up.
    """
    verts = [_cartesian(v) for v in w.alcove_vertices()]
    cx = sum(v[0] for v in verts) / 3
    cy = sum(v[1] for v in verts) / 3
    return ((cx, cy), w.orientation_up)


def alcove_vertices(w: Element) -> tuple[tuple[Fraction, Fraction], ...]:
    """Cartesian vertices of w(A0), second coordinates as multiples of sqrt(3)."""
    return tuple(_cartesian(v) for v in w.alcove_vertices())
