"""Certified computation of phi(H) = min { z.H : z isotropic, z.H > 0 }.

The search is layered: for m = 1, 2, ... up to the bound given by the
smallest positive pairing of H with the eleven SID generators, the fiber
{ z : z.H = m, z^2 = 0 } is enumerated exactly.  A fiber element splits
as z = (m/H^2) H + w with w in the rank-9 negative-definite complement
of H, so the fiber is a coset of that complement carved out by a sphere
of radius m^2/H^2; its points are listed by a rational-Cholesky
Fincke-Pohst walk with integer-sqrt bounds.  The first m whose fiber
contains a primitive vector is phi(H).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

from .exactla import mat_vec, solve_unique, transpose, unimodular_column_reduction
from .lattice import (
    GRAM_B,
    RANK,
    NumClass,
    PicClass,
    SID_GENERATORS,
    is_primitive,
)


def _pairing_covector(h: NumClass):
    return mat_vec([list(r) for r in GRAM_B], list(h.b))


class _FiberContext:
    """Per-class data shared by all fiber enumerations for one H."""

    def __init__(self, h: NumClass):
        self.h = h
        self.h2 = h.square()
        if self.h2 <= 0:
            raise ValueError(f"phi needs H^2 > 0, got {self.h2}")
        w = _pairing_covector(h)
        self.divisor, U = unimodular_column_reduction(w)
        cols = transpose(U)
        self.x0 = cols[0]  # w . x0 = divisor
        self.kernel = cols[1:]  # basis of {u : u.H = 0}, rank 9
        # Gram of the complement; negative definite, so Q = -A is positive.
        k = len(self.kernel)
        gram_rows = [mat_vec([list(r) for r in GRAM_B], c) for c in self.kernel]
        A = [[sum(gram_rows[i][t] * self.kernel[j][t] for t in range(RANK)) for j in range(k)] for i in range(k)]
        self.Q = [[-A[i][j] for j in range(k)] for i in range(k)]
        self.L, self.D = _rational_cholesky(self.Q)
        # coordinates of the projection defect of x0 along the complement:
        # A t = kernel^T . Gram . x0
        rhs = [sum(gram_rows[i][t] * self.x0[t] for t in range(RANK)) for i in range(k)]
        self.t_base = solve_unique(A, rhs)  # w0 = sum t_i kernel_i for z0 = x0

    def fiber(self, m: int):
        """All z with z.H = m and z^2 = 0, as NumClass."""
        if m % self.divisor:
            return
        scale = m // self.divisor
        z0 = [scale * x for x in self.x0]
        t = [Fraction(scale) * ti for ti in self.t_base]
        target = Fraction(m * m, self.h2)
        for u in _sphere_points(self.Q, self.L, self.D, t, target):
            z = list(z0)
            for ui, col in zip(u, self.kernel):
                if ui:
                    z = [a + ui * b for a, b in zip(z, col)]
            out = NumClass(tuple(z))
            assert out.square() == 0 and out.dot(self.h) == m
            yield out


def _rational_cholesky(Q):
    """Q = L D L^T with unit lower-triangular L and positive diagonal D.

    Raises if Q is not positive definite, which doubles as a check of
    the signature (1, 9) of the ambient lattice.
    """
    n = len(Q)
    L = [[Fraction(0)] * n for _ in range(n)]
    D = [Fraction(0)] * n
    for i in range(n):
        L[i][i] = Fraction(1)
        D[i] = Fraction(Q[i][i]) - sum(L[i][k] ** 2 * D[k] for k in range(i))
        if D[i] <= 0:
            raise ArithmeticError("complement of H is not negative definite")
        for j in range(i + 1, n):
            L[j][i] = (Fraction(Q[j][i]) - sum(L[j][k] * L[i][k] * D[k] for k in range(i))) / D[i]
    return L, D


def _floor_sqrt_bound(limit: Fraction):
    """Largest integer v with v^2 <= limit (limit >= 0)."""
    return isqrt(limit.numerator // limit.denominator) if limit >= 0 else -1


def _sphere_points(Q, L, D, t, target: Fraction):
    """Integer u with (u + t)^T Q (u + t) == target, exactly."""
    n = len(Q)
    u = [0] * n
    x = [Fraction(0)] * n  # x_i = u_i + t_i once assigned

    def recurse(i, budget: Fraction):
        if budget < 0:
            return
        # offset c_i = t_i + sum_{j>i} L[j][i] x_j
        c = Fraction(t[i])
        for j in range(i + 1, n):
            c += L[j][i] * x[j]
        if i == 0:
            # need D[0] (u + c)^2 == budget exactly
            rem = budget / D[0]
            # (u q + p)^2 == rem q^2 with c = p/q
            p, q = c.numerator, c.denominator
            rhs = rem * q * q
            if rhs.denominator != 1:
                return
            v = isqrt(rhs.numerator)
            if v * v != rhs.numerator:
                return
            for vv in {v, -v}:
                num = vv - p
                if num % q == 0:
                    u[0] = num // q
                    x[0] = u[0] + t[0]
                    yield list(u)
            return
        # |u + c| <= sqrt(budget / D[i]); with c = p/q this is |u q + p| <= vmax
        lim = budget / D[i]
        p, q = c.numerator, c.denominator
        vmax = _floor_sqrt_bound(lim * q * q)
        lo = _ceil_div(-vmax - p, q)
        hi = _floor_div(vmax - p, q)
        for ui in range(lo, hi + 1):
            u[i] = ui
            x[i] = ui + t[i]
            yield from recurse(i - 1, budget - D[i] * (ui + c) ** 2)

    yield from recurse(n - 1, target)


def _floor_div(a, b):
    return a // b


def _ceil_div(a, b):
    return -((-a) // b)


def phi(h: PicClass | NumClass) -> int:
    """phi(H) for H with H^2 > 0; the torsion part of H is ignored."""
    num = h.num if isinstance(h, PicClass) else h
    ctx = _FiberContext(num)
    bound = None
    for gen in SID_GENERATORS:
        d = gen.dot(num)
        if d > 0 and (bound is None or d < bound):
            bound = d
    if bound is None:
        raise ValueError("no SID generator pairs positively with H; not normalized")
    for m in range(1, bound + 1):
        found_any = False
        for z in ctx.fiber(m):
            found_any = True
            if is_primitive(z):
                assert m * m <= ctx.h2, "phi^2 <= H^2 must hold"
                return m
        # a nonempty fiber at the first achieved level always contains a
        # primitive vector: an imprimitive k*z' forces a nonempty fiber at m/k
        assert not found_any, "nonempty fiber without primitive vectors"
    raise AssertionError("unreachable: the generator bound is attained")


def isotropic_fiber(h: PicClass | NumClass, m: int):
    """The finite set { z : z^2 = 0, z.H = m }, as a sorted list."""
    num = h.num if isinstance(h, PicClass) else h
    ctx = _FiberContext(num)
    return sorted(ctx.fiber(m), key=lambda z: z.b)
