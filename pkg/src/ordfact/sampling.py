"""Seeded random generators for orders, maps, adjunctions, and squares.

All randomness is funneled through a caller-supplied ``random.Random``
so every suite is reproducible from one seed.  The library modules
themselves are deterministic.
"""

from __future__ import annotations

import random

from .order import MonotoneMap, Preorder, make_preorder
from .galois import Adjunction, compose_adjunctions, identity_adjunction, right_adjoint
from .polar import CommutingSquare, polar_factorization, square


def random_poset(rng: random.Random, n: int, density: float = 0.4) -> Preorder:
    """Random n-element poset: random edges along a random topological order."""
    labels = [f"x{i}" for i in range(n)]
    topo = list(range(n))
    rng.shuffle(topo)
    pairs = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                pairs.append((labels[topo[i]], labels[topo[j]]))
    return make_preorder(labels, pairs)


def random_preorder(rng: random.Random, n: int, density: float = 0.3) -> Preorder:
    labels = [f"x{i}" for i in range(n)]
    pairs = [
        (labels[i], labels[j])
        for i in range(n)
        for j in range(n)
        if i != j and rng.random() < density
    ]
    return make_preorder(labels, pairs)


def random_monotone_map(
    rng: random.Random, P: Preorder, Q: Preorder, tries: int = 50
) -> MonotoneMap | None:
    """Sample a monotone map by constrained assignment with restarts."""
    if Q.n == 0:
        return MonotoneMap(P, Q, ()) if P.n == 0 else None
    for _ in range(tries):
        assign: list[int] = []
        ok = True
        for i in range(P.n):
            cands = [
                q
                for q in range(Q.n)
                if all(
                    (not P.leq[j][i] or Q.leq[assign[j]][q])
                    and (not P.leq[i][j] or Q.leq[q][assign[j]])
                    for j in range(i)
                )
            ]
            if not cands:
                ok = False
                break
            assign.append(rng.choice(cands))
        if ok:
            return MonotoneMap(P, Q, tuple(assign))
    return None


def random_adjunction(
    rng: random.Random, P: Preorder, Q: Preorder, tries: int = 80
) -> Adjunction | None:
    """Sample a left adjoint P -> Q that actually has a right adjoint."""
    for _ in range(tries):
        left = random_monotone_map(rng, P, Q)
        if left is None:
            return None
        g = right_adjoint(left)
        if g is not None:
            return g
    return None


def random_adjunction_any(
    rng: random.Random, max_size: int, tries: int = 200
) -> Adjunction:
    """Keep sampling poset pairs until an adjunction shows up."""
    for _ in range(tries):
        P = random_poset(rng, rng.randint(1, max_size))
        Q = random_poset(rng, rng.randint(1, max_size))
        g = random_adjunction(rng, P, Q)
        if g is not None:
            return g
    # identity adjunctions always exist; use one as a last resort
    P = random_poset(rng, rng.randint(1, max_size))
    return identity_adjunction(P)


def random_fill_square(rng: random.Random, max_size: int) -> CommutingSquare:
    """A square with a reflection on top and a coreflection on the bottom.

    Built so a diagonal is known to exist: pick a reflection e, a
    coreflection m, a bridging adjunction d, and close the square with
    r = e then d and s = d then m.
    """
    for attempt in range(1000):
        g = random_adjunction_any(rng, max_size)
        e = polar_factorization(g).reflection
        h = random_adjunction_any(rng, max_size)
        m = polar_factorization(h).coreflection
        d = random_adjunction(rng, e.target, m.source)
        if d is None:
            continue
        r = compose_adjunctions(e, d)
        s = compose_adjunctions(d, m)
        return square(top=e, bottom=m, left=r, right=s)
    # reflections compose with identities, so this square always works
    g = random_adjunction_any(rng, max_size)
    fac = polar_factorization(g)
    return square(
        top=fac.reflection,
        bottom=fac.coreflection,
        left=fac.reflection,
        right=fac.coreflection,
    )


def random_strict_square(rng: random.Random, max_size: int) -> CommutingSquare:
    """A strictly commuting square of adjunctions.

    Pick g and a right side f1, then factor their composite polarly: the
    reflection leg becomes the left side and the coreflection leg the
    bottom, which commutes on the nose.
    """
    for attempt in range(1000):
        g = random_adjunction_any(rng, max_size)
        B1 = random_poset(rng, rng.randint(1, max_size))
        f1 = random_adjunction(rng, g.target, B1)
        if f1 is None:
            continue
        k = compose_adjunctions(g, f1)
        fac = polar_factorization(k)
        return square(top=g, bottom=fac.coreflection, left=fac.reflection, right=f1)
    return identity_padded_square(rng, max_size)


def identity_padded_square(rng: random.Random, max_size: int) -> CommutingSquare:
    """A square whose sides are identities and whose top equals its bottom."""
    g = random_adjunction_any(rng, max_size)
    return square(
        top=g,
        bottom=g,
        left=identity_adjunction(g.source),
        right=identity_adjunction(g.target),
    )
