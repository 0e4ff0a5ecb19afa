"""Brute-force phi oracle over a coordinate box, independent of the
layered fiber search.

phi_box_min(H, r) returns min { z.H : z != 0, z^2 = 0, z.H > 0 } over all
z whose integral-basis coordinates lie in [-r, r]^10.  The box is
symmetric and no nonzero isotropic class is orthogonal to H (H^2 > 0),
so this equals min |z.H| over the nonzero isotropic box vectors.

Strategy.  In scaled coordinates c_i = 3 e_i (integers, all congruent
mod 3) the form reads 9 z^2 = (sum c)^2 - sum c^2, so the isotropic box
vectors are the box points on the slices

    sum_i c_i = T   and   sum_i c_i^2 = T^2,

one slice per total T.  Two exact facts keep the walk small:

* slice cutoff: writing sigma = T/3, s = sum of the E-coordinates of H
  and rho = |e(H)| their Euclidean norm, every isotropic z satisfies
  |z.H| >= |sigma| (s - rho) by Cauchy-Schwarz, and s > rho follows from
  H^2 > 0, s > 0.  A slice can therefore beat the current best only if
  |T| (s - rho) <= 3 (best - 1), checked by integer squaring.

* inside a slice the remaining square budget, the reachable interval of
  the remaining sum, Cauchy-Schwarz, and the |z.H| <= best - 1 window
  discard subtrees; all bounds are sound, so nothing feasible is lost.

The seed min positive generator pairing, restricted to generators whose
coordinates fit in the box, is attained inside the box, so initializing
best with it keeps the result exactly the box minimum.
"""

from __future__ import annotations

from math import isqrt

from .exactla import mat_vec
from .lattice import GRAM_B, NumClass, PicClass, SID_GENERATORS


def _seed_bound(num: NumClass, radius: int) -> int:
    """Upper bound attained by a box vector: min positive generator pairing
    among the SID generators whose coordinates fit in the box."""
    best = None
    for gen in SID_GENERATORS:
        if max(abs(x) for x in gen.b) > radius:
            continue
        d = gen.dot(num)
        if d > 0 and (best is None or d < best):
            best = d
    if best is None:
        raise ValueError("no box SID generator pairs positively with H")
    return best


def _slice_may_improve(T: int, s_g: int, h2: int, cap: int) -> bool:
    """Can the slice sum T carry z with |z.H| <= cap?

    With g = 3 e(H) and s_g = sum g, the bound |z.H| >= |sigma|(s - rho)
    becomes: reject unless |T| s_g - 9 cap <= |T| sqrt(s_g^2 - 9 H^2),
    which is checked by squaring (both sides exact integers).
    """
    lhs = abs(T) * s_g - 9 * cap
    if lhs <= 0:
        return True
    return lhs * lhs <= T * T * (s_g * s_g - 9 * h2)


def phi_box_min(h: PicClass | NumClass, radius: int = 6) -> int:
    num = h.num if isinstance(h, PicClass) else h
    h2 = num.square()
    if h2 <= 0:
        raise ValueError("phi needs H^2 > 0")
    if radius < 1:
        raise ValueError("radius >= 1 is needed for the seed witnesses")
    w = mat_vec([list(r) for r in GRAM_B], list(num.b))
    g = [int(3 * x) for x in num.coords]
    s_g = sum(g)
    if s_g <= 0:
        raise ValueError("H must have positive coordinate sum (effective side)")
    best = _seed_bound(num, radius)
    r = radius
    n = 9

    order = sorted(range(9), key=lambda i: -abs(w[i]))

    for b10 in range(-r, r + 1):
        if best == 1:
            break
        # c_i = 3 b_i + offset_i for the nine free coordinates; c_10 = b10
        offsets = [(-2 * b10 if i < 2 else b10) for i in range(9)]
        wv = [w[i] for i in order]
        off = [offsets[i] for i in order]
        clo = [-3 * r + o for o in off]
        chi = [3 * r + o for o in off]
        sc_lo = [0] * (n + 1)
        sc_hi = [0] * (n + 1)
        sw_lo = [0] * (n + 1)
        sw_hi = [0] * (n + 1)
        for d in range(n - 1, -1, -1):
            sc_lo[d] = sc_lo[d + 1] + clo[d]
            sc_hi[d] = sc_hi[d + 1] + chi[d]
            a, b = -r * wv[d], r * wv[d]
            sw_lo[d] = sw_lo[d + 1] + min(a, b)
            sw_hi[d] = sw_hi[d + 1] + max(a, b)

        for T in range(b10 + sc_lo[0], b10 + sc_hi[0] + 1):
            if (T - 10 * b10) % 3:
                continue
            budget0 = T * T - b10 * b10
            if budget0 < 0:
                continue
            if not _slice_may_improve(T, s_g, h2, best - 1):
                continue

            def walk(depth, dpart, rem_sum, budget):
                nonlocal best
                if depth == n:
                    if rem_sum == 0 and budget == 0 and dpart != 0 and abs(dpart) < best:
                        best = abs(dpart)
                    return
                if not (sc_lo[depth] <= rem_sum <= sc_hi[depth]):
                    return
                k = n - depth
                if budget < 0 or k * budget < rem_sum * rem_sum:
                    return
                if (rem_sum - k * b10) % 3:
                    return
                cap = best - 1
                dlo = dpart + sw_lo[depth]
                dhi = dpart + sw_hi[depth]
                if not ((dhi >= 1 and dlo <= cap) or (dlo <= -1 and dhi >= -cap)):
                    return
                o = off[depth]
                s = isqrt(budget)
                b_lo = max(-r, -((s + o) // 3))
                b_hi = min(r, (s - o) // 3)
                for b in range(b_lo, b_hi + 1):
                    c = 3 * b + o
                    walk(depth + 1, dpart + b * wv[depth], rem_sum - c, budget - c * c)

            walk(0, b10 * w[9], T - b10, budget0)
    return best
