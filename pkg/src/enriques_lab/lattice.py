"""The rank-10 numerical lattice of an Enriques surface, in the isotropic basis.

The lattice is presented by ten isotropic classes E1..E10 with Ei.Ej = 1
for i != j, together with the half-fiber sum

    E12 = (1/3)(E1 + ... + E10) - E1 - E2,

which pairs to 2 with E1, E2 and to 1 with E3..E10.  Internally every
class is stored by its integer coordinates in the unimodular basis
{E1, ..., E9, E12}; the E-basis coordinates are rationals with
denominator dividing 3.  All arithmetic is exact.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .exactla import bareiss_det

RANK = 10

#: Gram matrix in the basis E1..E10 (0 on the diagonal, 1 off it).
GRAM_E = tuple(tuple(0 if i == j else 1 for j in range(RANK)) for i in range(RANK))

#: Pairings of E12 with E1..E10.
_E12_ROW = (2, 2, 1, 1, 1, 1, 1, 1, 1, 1)

#: Gram matrix in the integral basis B = {E1..E9, E12}.
GRAM_B = tuple(
    tuple(
        (0 if i == j else 1) if i < 9 and j < 9
        else _E12_ROW[i] if j == 9 and i < 9
        else _E12_ROW[j] if i == 9 and j < 9
        else 0
        for j in range(RANK)
    )
    for i in range(RANK)
)


def _self_check():
    d_e = bareiss_det(GRAM_E)
    if d_e != -9:
        raise AssertionError(f"E-basis Gram determinant {d_e}, expected -9")
    d_b = bareiss_det(GRAM_B)
    if d_b not in (1, -1):
        raise AssertionError(f"integral-basis Gram determinant {d_b}, expected +-1")
    return d_e, d_b


GRAM_E_DET, GRAM_B_DET = _self_check()


class InvalidClassError(ValueError):
    """Raised for coordinates that do not define a lattice class."""


@dataclass(frozen=True)
class NumClass:
    """A numerical class, stored by integer coordinates in {E1..E9, E12}."""

    b: tuple

    def __post_init__(self):
        if len(self.b) != RANK or not all(isinstance(x, int) for x in self.b):
            raise InvalidClassError("need 10 integer coordinates in the integral basis")

    @classmethod
    def from_basis(cls, coords) -> "NumClass":
        return cls(tuple(int(x) for x in coords))

    @classmethod
    def from_e(cls, coords) -> "NumClass":
        """Build a class from E1..E10 coordinates (denominators dividing 3)."""
        e = [Fraction(x) for x in coords]
        if len(e) != RANK:
            raise InvalidClassError("need 10 coordinates")
        if any(x.denominator not in (1, 3) for x in e):
            raise InvalidClassError("denominators must divide 3")
        b10 = 3 * e[9]
        if b10.denominator != 1:
            raise InvalidClassError("not in the lattice: E10 coordinate")
        b = []
        for i in range(9):
            bi = e[i] - e[9] + (3 * e[9] if i < 2 else 0)
            if bi.denominator != 1:
                raise InvalidClassError("not in the lattice")
            b.append(int(bi))
        b.append(int(b10))
        out = cls(tuple(b))
        if list(out.coords) != e:
            raise AssertionError("basis conversion mismatch")
        return out

    @property
    def coords(self):
        """Coordinates in the basis E1..E10, as Fractions."""
        b = self.b
        t = Fraction(b[9], 3)
        e = [b[i] + t - (b[9] if i < 2 else 0) for i in range(9)]
        e.append(t)
        return tuple(Fraction(x) for x in e)

    def dot(self, other: "NumClass") -> int:
        return sum(
            self.b[i] * GRAM_B[i][j] * other.b[j]
            for i in range(RANK)
            for j in range(RANK)
            if GRAM_B[i][j]
        )

    def square(self) -> int:
        return self.dot(self)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.b)

    def __add__(self, other):
        return NumClass(tuple(a + b for a, b in zip(self.b, other.b)))

    def __sub__(self, other):
        return NumClass(tuple(a - b for a, b in zip(self.b, other.b)))

    def __neg__(self):
        return NumClass(tuple(-a for a in self.b))

    def __rmul__(self, k: int):
        return NumClass(tuple(k * a for a in self.b))

    def __str__(self):
        return format_num_class(self)


def _basis_vector(i):
    return NumClass(tuple(1 if j == i else 0 for j in range(RANK)))


def E(i: int) -> NumClass:
    """The isotropic generator E_i, 1 <= i <= 10."""
    if not 1 <= i <= 10:
        raise InvalidClassError("index out of range")
    if i <= 9:
        return _basis_vector(i - 1)
    # E10 = 3 E12 + 2 E1 + 2 E2 - E3 - ... - E9
    return NumClass((2, 2, -1, -1, -1, -1, -1, -1, -1, 3))


E12 = _basis_vector(9)

#: Generators appearing in simple isotropic decompositions, in SID order.
SID_GENERATORS = (E12,) + tuple(E(i) for i in range(1, 11))


def pairing(u: NumClass, v: NumClass) -> int:
    """Intersection pairing; always an integer on lattice classes."""
    return u.dot(v)


def is_primitive(z: NumClass) -> bool:
    """A nonzero class is primitive iff it is not a proper multiple."""
    if z.is_zero():
        raise InvalidClassError("the zero class is neither primitive nor imprimitive")
    g = 0
    for x in z.b:
        g = gcd(g, x)
    return g == 1


@dataclass(frozen=True)
class PicClass:
    """Numerical class plus the 2-torsion bit recording a K_S summand."""

    num: NumClass
    eps: int = 0

    def __post_init__(self):
        if self.eps not in (0, 1):
            raise InvalidClassError("torsion bit must be 0 or 1")

    def __add__(self, other):
        return PicClass(self.num + other.num, (self.eps + other.eps) % 2)

    def square(self) -> int:
        return self.num.square()

    def __str__(self):
        s = format_num_class(self.num)
        return s + "+K" if self.eps else s


K_S = PicClass(NumClass((0,) * RANK), 1)


def genus_of(h: PicClass | NumClass) -> int:
    """Genus p with H^2 = 2p - 2."""
    num = h.num if isinstance(h, PicClass) else h
    h2 = num.square()
    if h2 < 0 or h2 % 2:
        raise InvalidClassError(f"H^2 = {h2} is not an even nonnegative integer")
    return h2 // 2 + 1


class Divisibility(enum.Enum):
    H_DIVISIBLE = "H-divisible"
    H_PLUS_K_DIVISIBLE = "H-plus-K-divisible"
    NEITHER = "neither"


def two_divisibility(h: PicClass) -> Divisibility:
    """Which of H, H + K_S is divisible by 2 in the Picard group."""
    num_even = all(x % 2 == 0 for x in h.num.b)
    if not num_even:
        return Divisibility.NEITHER
    return Divisibility.H_DIVISIBLE if h.eps == 0 else Divisibility.H_PLUS_K_DIVISIBLE


@dataclass(frozen=True)
class Lattice:
    """An ad-hoc lattice given by an explicit symmetric Gram matrix."""

    gram: tuple
    label: str = ""

    def __post_init__(self):
        g = self.gram
        n = len(g)
        if any(len(row) != n for row in g):
            raise ValueError("Gram matrix must be square")
        if any(g[i][j] != g[j][i] for i in range(n) for j in range(n)):
            raise ValueError("Gram matrix must be symmetric")

    @property
    def rank(self):
        return len(self.gram)

    def pairing(self, u, v) -> int:
        n = self.rank
        if len(u) != n or len(v) != n:
            raise ValueError("vector length must match the rank")
        return sum(u[i] * self.gram[i][j] * v[j] for i in range(n) for j in range(n))

    def det(self) -> int:
        return bareiss_det(self.gram)


def diagonal_lattice(entries, label="") -> Lattice:
    n = len(entries)
    gram = tuple(tuple(entries[i] if i == j else 0 for j in range(n)) for i in range(n))
    return Lattice(gram, label)


E_BASIS_LATTICE = Lattice(GRAM_E, "E1..E10 pairing table")


class MapKind(enum.Enum):
    HYPERELLIPTIC = "hyperelliptic"
    SUPERELLIPTIC = "superelliptic"
    BASE_POINT_FREE = "base-point-free"
    BIRATIONAL_MORPHISM = "birational-morphism"
    ISOMORPHISM_ON_S = "isomorphism-on-S"
    RATIONAL_MAP = "rational-map"


def map_kind_phi_constraint(kind: MapKind):
    """(min phi, exact phi or None) imposed by the behaviour of the map."""
    if kind is MapKind.HYPERELLIPTIC:
        return (1, 1)
    if kind in (MapKind.SUPERELLIPTIC, MapKind.BASE_POINT_FREE, MapKind.BIRATIONAL_MORPHISM):
        return (2, None)
    if kind is MapKind.ISOMORPHISM_ON_S:
        return (3, None)
    return (1, None)


def allowed_phis(p: int, kind: MapKind, isomorphism=None):
    """Values of phi compatible with the map kind and phi^2 <= 2p - 2.

    ``isomorphism`` sharpens the constraint: True forces phi >= 3 and
    False forces phi <= 2 (phi >= 3 holds iff the map restricts to an
    isomorphism on a general member).
    """
    lo, exact = map_kind_phi_constraint(kind)
    hi = isqrt(2 * p - 2)
    if exact is not None:
        return [exact] if lo <= exact <= hi else []
    if isomorphism is True:
        lo = max(lo, 3)
    if isomorphism is False:
        hi = min(hi, 2)
    return [v for v in range(lo, hi + 1)]


def k3_degree_bound(coeffs, min_pairing: int) -> int:
    """Lower bound on D . sum(c_i Ebar_i) for D distinct from every Ebar_i.

    On a K3 cover two non-proportional elliptic curve classes pair to at
    least ``min_pairing``, so the degree of any further elliptic class
    against sum(c_i Ebar_i) is at least min_pairing * sum(c_i).
    """
    if min_pairing < 1:
        raise ValueError("min_pairing must be >= 1")
    return min_pairing * sum(coeffs)


@dataclass(frozen=True)
class SidCoefficients:
    """Coefficients of a simple isotropic decomposition.

    H = a0 E12 + a1 E1 + ... + a10 E10 + eps K_S, all a_i >= 0, and either
    a0 = 0 with the number of positive a_i different from 9, or a10 = 0.
    """

    a0: int
    a: tuple
    eps: int = 0

    def __post_init__(self):
        if len(self.a) != 10:
            raise InvalidClassError("need coefficients for E1..E10")
        if self.a0 < 0 or any(x < 0 for x in self.a):
            raise InvalidClassError("SID coefficients must be nonnegative")
        if self.eps not in (0, 1):
            raise InvalidClassError("torsion bit must be 0 or 1")
        if not self.is_normalized():
            raise InvalidClassError(f"not a normalized SID: {self.a0}, {self.a}")

    def is_normalized(self) -> bool:
        positives = sum(1 for x in self.a if x > 0)
        return (self.a0 == 0 and positives != 9) or self.a[9] == 0

    def num(self) -> NumClass:
        total = self.a0 * E12
        for i, c in enumerate(self.a):
            if c:
                total = total + c * E(i + 1)
        return total

    def to_pic(self) -> PicClass:
        return PicClass(self.num(), self.eps)

    def canonical(self) -> "SidCoefficients":
        """Orbit representative under the symmetries of the pairing table.

        With a0 > 0 only the E1 <-> E2 swap and permutations of E3..E10
        are available, so (a1, a2) and (a3..a10) are sorted descending
        separately; with a0 = 0 all ten generators are interchangeable
        and the whole tuple is sorted.
        """
        a = self.a
        if self.a0 == 0:
            return SidCoefficients(0, tuple(sorted(a, reverse=True)), self.eps)
        head = tuple(sorted(a[:2], reverse=True))
        tail = tuple(sorted(a[2:], reverse=True))
        return SidCoefficients(self.a0, head + tail, self.eps)

    def __str__(self):
        terms = []
        for i, c in enumerate(self.a):
            if c:
                terms.append(f"{c if c != 1 else ''}E{i + 1}")
        if self.a0:
            terms.append(f"{self.a0 if self.a0 != 1 else ''}E12")
        if not terms:
            terms.append("0")
        s = "+".join(terms)
        return s + "+K" if self.eps else s


def format_num_class(z: NumClass) -> str:
    """Readable form of a class as a combination of E1..E9 and E12."""
    names = [f"E{i}" for i in range(1, 10)] + ["E12"]
    terms = []
    for c, name in zip(z.b, names):
        if c == 0:
            continue
        if c == 1:
            terms.append(f"+{name}")
        elif c == -1:
            terms.append(f"-{name}")
        else:
            terms.append(f"{c:+d}{name}")
    if not terms:
        return "0"
    out = "".join(terms)
    return out[1:] if out.startswith("+") else out
