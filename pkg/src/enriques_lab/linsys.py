"""Linear systems of degree-d surfaces in P^3 with vanishing-order
conditions along lines.

Vanishing to order m along a line is imposed as: every partial
derivative of order < m, restricted to a parametrization of the line,
is the zero polynomial in the parameters.  These are linear conditions
on the coefficient vector; the kernel is computed by fraction-free
integer elimination, so dimensions are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb

from .exactla import clear_denominators, int_echelon, int_kernel_basis, kernel_basis
from .poly import Poly

S_VARS = ("s0", "s1", "s2", "s3")
UV = ("u", "v")
ABC = ("a", "b", "c")


def _primitive_point(coords):
    pt = tuple(Fraction(x) for x in coords)
    if len(pt) != 4 or all(x == 0 for x in pt):
        raise ValueError("a point of P^3 needs 4 coordinates, not all zero")
    return tuple(clear_denominators(list(pt)))


@dataclass(frozen=True)
class Line:
    """A line of P^3 through two distinct rational points."""

    p: tuple
    q: tuple

    @classmethod
    def through(cls, p, q) -> "Line":
        p, q = _primitive_point(p), _primitive_point(q)
        if _proportional(p, q):
            raise ValueError("the two points of a line must be distinct")
        return cls(p, q)

    @classmethod
    def from_forms(cls, f1: Poly, f2: Poly) -> "Line":
        """Intersection of two planes given by linear forms."""
        normals = []
        for f in (f1, f2):
            if f.degree() != 1 or not f.is_homogeneous():
                raise ValueError("plane forms must be homogeneous linear")
            normals.append([f.coefficient(tuple(1 if i == j else 0 for i in range(4)))
                            for j in range(4)])
        null = int_kernel_basis(normals, ncols=4)
        if len(null) != 2:
            raise ValueError("the two forms do not cut out a line")
        return cls.through(null[0], null[1])

    def parametrization(self):
        """Images s_i -> p_i u + q_i v over the parameter variables (u, v)."""
        return {
            v: Poly(UV, {(1, 0): self.p[i], (0, 1): self.q[i]})
            for i, v in enumerate(S_VARS)
        }

    def contains(self, point) -> bool:
        pt = _primitive_point(point)
        m = [list(self.p), list(self.q), list(pt)]
        return len(int_echelon(m)[1]) <= 2


def _proportional(p, q):
    return all(p[i] * q[j] == p[j] * q[i] for i in range(4) for j in range(4))


@dataclass(frozen=True)
class LinSysSpec:
    degree: int
    conditions: tuple  # of (Line, order)

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("degree must be positive")
        for _, order in self.conditions:
            if order < 1:
                raise ValueError("vanishing order must be positive")


def monomial_basis(degree):
    """Exponent tuples of total degree d in s0..s3, graded lex s0 > s1 > s2 > s3."""
    out = []
    for combo in combinations_with_replacement(range(4), degree):
        e = [0, 0, 0, 0]
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(key=lambda e: tuple(-x for x in e))
    return out


def _falling(e, a):
    c = 1
    for x, y in zip(e, a):
        if y > x:
            return 0
        for t in range(y):
            c *= x - t
    return c


def _multi_indices(total):
    out = []
    for combo in combinations_with_replacement(range(4), total):
        e = [0, 0, 0, 0]
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


def line_condition_rows(degree, line: Line, order: int, basis=None):
    """Integer rows expressing: all partials of order < ``order`` vanish on the line."""
    basis = basis or monomial_basis(degree)
    # powers of the two linear parameter forms per variable
    pows = []
    for i in range(4):
        lin = [line.p[i], line.q[i]]  # coefficients of (u, v)
        cache = [[1]]
        for _ in range(degree):
            prev = cache[-1]
            nxt = [0] * (len(prev) + 1)
            for k, c in enumerate(prev):
                nxt[k] += c * lin[0]
                nxt[k + 1] += c * lin[1]
            cache.append(nxt)
        pows.append(cache)
    rows = []
    for total in range(order):
        for alpha in _multi_indices(total):
            deg_sub = degree - total
            block = [[0] * len(basis) for _ in range(deg_sub + 1)]
            for col, e in enumerate(basis):
                c = _falling(e, alpha)
                if not c:
                    continue
                rem = tuple(x - y for x, y in zip(e, alpha))
                conv = [c]
                for i in range(4):
                    if rem[i]:
                        conv = _convolve(conv, pows[i][rem[i]])
                for k, val in enumerate(conv):
                    if val:
                        block[k][col] = val
            rows.extend(r for r in block if any(r))
    return rows


def _convolve(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def plane_containment_rows(degree, form: Poly, basis=None):
    """Rows expressing F == 0 on the plane {form = 0}."""
    basis = basis or monomial_basis(degree)
    normal = [form.coefficient(tuple(1 if i == j else 0 for i in range(4)))
              for j in range(4)]
    null = int_kernel_basis([normal], ncols=4)
    if len(null) != 3:
        raise ValueError("not a plane form")
    images = {
        v: Poly(ABC, {(1, 0, 0): null[0][i], (0, 1, 0): null[1][i], (0, 0, 1): null[2][i]})
        for i, v in enumerate(S_VARS)
    }
    rows = []
    exps = sorted({e for e in _abc_monomials(degree)})
    index = {e: k for k, e in enumerate(exps)}
    block = [[0] * len(basis) for _ in exps]
    for col, e in enumerate(basis):
        mono = Poly(S_VARS, {e: 1}).substitute(images, ABC)
        for ee, c in mono.terms.items():
            block[index[ee]][col] = c
    rows.extend(r for r in block if any(r))
    return rows


def _abc_monomials(degree):
    out = []
    for combo in combinations_with_replacement(range(3), degree):
        e = [0, 0, 0]
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


@dataclass(frozen=True)
class CoefficientSpace:
    degree: int
    monomials: tuple
    kernel: tuple  # primitive integer coefficient vectors

    @property
    def projective_dimension(self):
        return len(self.kernel) - 1

    def polynomials(self):
        return [
            Poly(S_VARS, {e: c for e, c in zip(self.monomials, vec) if c})
            for vec in self.kernel
        ]


def solve_system(spec: LinSysSpec, extra_rows=()) -> CoefficientSpace:
    basis = monomial_basis(spec.degree)
    rows = []
    for line, order in spec.conditions:
        rows.extend(line_condition_rows(spec.degree, line, order, basis))
    rows.extend(extra_rows)
    if rows:
        kern = int_kernel_basis(rows, ncols=len(basis))
    else:
        kern = [[1 if i == j else 0 for i in range(len(basis))] for j in range(len(basis))]
    return CoefficientSpace(spec.degree, tuple(basis), tuple(tuple(v) for v in kern))


def system_dimension(spec: LinSysSpec) -> int:
    """Projective dimension of the system (-1 when empty)."""
    return solve_system(spec).projective_dimension


def member_contains_line(space: CoefficientSpace, line: Line) -> bool:
    """True iff every member of the system vanishes identically on the line."""
    images = line.parametrization()
    for poly in space.polynomials():
        if not poly.substitute(images, UV).is_zero():
            return False
    return True


def tangent_cone(f: Poly, point):
    """Lowest-degree homogeneous part of f at the point, in an affine chart.

    The point is moved to the origin of the chart of its first nonzero
    coordinate; the returned polynomial lives in the three remaining
    variable names.
    """
    pt = _primitive_point(point)
    k = next(i for i in range(4) if pt[i] != 0)
    chart_vars = tuple(v for i, v in enumerate(S_VARS) if i != k)
    images = {}
    for i, v in enumerate(S_VARS):
        if i == k:
            images[v] = Poly.constant(chart_vars, pt[k])
        else:
            images[v] = Poly.variable(chart_vars, v) + Poly.constant(chart_vars, pt[i])
    local = f.substitute(images, chart_vars)
    if local.coefficient((0, 0, 0)) != 0:
        raise ValueError("the polynomial does not vanish at the point")
    return local.lowest_part()


def verify_expected_form(space: CoefficientSpace, candidates) -> bool:
    """True iff span(candidates) equals the computed kernel over QQ."""
    vectors = []
    for cand in candidates:
        if cand.degree() != space.degree or not cand.is_homogeneous():
            raise ValueError("candidate degree does not match the system")
        vec = [Fraction(cand.coefficient(e)) for e in space.monomials]
        vectors.append(clear_denominators(vec))
    kern = [list(v) for v in space.kernel]
    r_kern = len(int_echelon(kern)[1]) if kern else 0
    r_cand = len(int_echelon(vectors)[1]) if vectors else 0
    r_union = len(int_echelon(kern + vectors)[1]) if kern + vectors else 0
    return r_kern == r_cand == r_union


def load_spec(data) -> LinSysSpec:
    """Build a LinSysSpec from a fixture dict."""
    conditions = []
    for cond in data["conditions"]:
        line_data = cond["line"]
        if "points" in line_data:
            line = Line.through(*[[Fraction(str(x)) for x in pt] for pt in line_data["points"]])
        else:
            f1, f2 = (parse_form(s) for s in line_data["forms"])
            line = Line.from_forms(f1, f2)
        conditions.append((line, int(cond.get("order", 1))))
    return LinSysSpec(int(data["degree"]), tuple(conditions))


def parse_form(text: str) -> Poly:
    from .poly import parse_poly

    return parse_poly(text, S_VARS)
