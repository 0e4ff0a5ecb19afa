"""Enumeration of simple isotropic decompositions with prescribed genus
and phi.

Tuples are produced directly in canonical form (a1 >= a2 and
a3 >= ... >= a10); only the E1 <-> E2 swap and permutations of
E3..E10 preserve the pairing table, so canonical tuples are exactly the
orbits.  All pairings among the SID generators are positive, hence the
partial value of H^2/2 grows monotonically in every coefficient and the
depth-first walk is exhaustive once it caps each coefficient by the
remaining budget.
"""

from __future__ import annotations

import random

from .isotropy import phi
from .lattice import E, E12, NumClass, SidCoefficients


def enumerate_sids(g: int, target_phi: int):
    """All canonical SID tuples with H^2 = 2g - 2 and phi = target_phi.

    The torsion bit is omitted (phi and H^2 are numerical); returned
    tuples carry eps = 0.  Tuples presenting the same moduli component
    are not merged.
    """
    if g < 2:
        raise ValueError("genus must be >= 2")
    if target_phi < 1:
        raise ValueError("phi must be >= 1")
    target = g - 1
    gens = [E12] + [E(i) for i in range(1, 11)]
    out = []

    def extend(idx, partial: NumClass, value, coeffs):
        if idx == 11:
            if value == target:
                positives = sum(1 for x in coeffs[1:] if x > 0)
                normalized = (coeffs[0] == 0 and positives != 9) or coeffs[10] == 0
                if normalized:
                    sid = SidCoefficients(coeffs[0], tuple(coeffs[1:]))
                    if phi(sid.num()) == target_phi:
                        out.append(sid)
            return
        gen = gens[idx]
        pair = gen.dot(partial)
        # canonical-form ceilings: a2 <= a1 and a3 >= ... >= a10 always;
        # with a0 = 0 the whole tuple is one descending chain
        ceiling = None
        if idx == 2 or idx >= 4 or (idx == 3 and coeffs[0] == 0):
            ceiling = coeffs[idx - 1]
        c = 0
        while True:
            if ceiling is not None and c > ceiling:
                break
            gain = c * pair
            if value + gain > target:
                break
            if pair == 0 and c > target:
                break
            extend(idx + 1, partial + c * gen if c else partial, value + gain, coeffs + [c])
            c += 1

    extend(0, NumClass((0,) * 10), 0, [])
    return sorted(out, key=lambda s: (s.a0, s.a))


def random_normalized_sids(count: int, max_genus: int, seed: int):
    """Seeded sample of normalized SID tuples with 2 <= genus <= max_genus.

    Used as fuzz input for the phi oracle comparisons; duplicates are
    removed and the result is deterministic in the seed.
    """
    rng = random.Random(seed)
    seen = set()
    out = []
    while len(out) < count:
        a0 = rng.choice((0, 0, 0, 1, 1, 2))
        a = [0] * 10
        support = rng.sample(range(10 if a0 == 0 else 9), k=rng.randint(1, 4))
        for i in support:
            a[i] = rng.randint(1, 6)
        try:
            sid = SidCoefficients(a0, tuple(a)).canonical()
        except ValueError:
            continue
        h2 = sid.num().square()
        if not 2 <= h2 // 2 + 1 <= max_genus:
            continue
        if sid in seen:
            continue
        seen.add(sid)
        out.append(sid)
    return out
