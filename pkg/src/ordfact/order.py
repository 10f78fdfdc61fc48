"""Finite preorders, monotone maps, and the finite limits built from them.

A preorder is a carrier of labeled elements plus a dense boolean matrix
``leq`` with ``leq[i][j]`` meaning element i is below element j.  Element
identity is positional; labels are metadata only.  All values are frozen
dataclasses and safe to share.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass


class OrderError(ValueError):
    """Base class for malformed order-theoretic inputs."""


class NotAPosetError(OrderError):
    pass


class CompositionError(OrderError):
    pass


class ConeError(OrderError):
    pass


@dataclass(frozen=True)
class Preorder:
    elements: tuple[str, ...]
    leq: tuple[tuple[bool, ...], ...]

    def __post_init__(self):
        n = len(self.elements)
        if len(set(self.elements)) != n:
            raise OrderError("duplicate element label")
        if len(self.leq) != n or any(len(row) != n for row in self.leq):
            raise OrderError("leq matrix shape does not match carrier")
        for i in range(n):
            if not self.leq[i][i]:
                raise OrderError(f"relation not reflexive at {self.elements[i]!r}")
        for i in range(n):
            for j in range(n):
                if self.leq[i][j]:
                    for k in range(n):
                        if self.leq[j][k] and not self.leq[i][k]:
                            raise OrderError(
                                "relation not transitive at "
                                f"({self.elements[i]!r},{self.elements[j]!r},{self.elements[k]!r})"
                            )

    @property
    def n(self) -> int:
        return len(self.elements)

    def le(self, i: int, j: int) -> bool:
        return self.leq[i][j]

    def equiv(self, i: int, j: int) -> bool:
        return self.leq[i][j] and self.leq[j][i]

    def index(self, label: str) -> int:
        try:
            return self.elements.index(label)
        except ValueError:
            raise OrderError(f"unknown element label {label!r}") from None


@dataclass(frozen=True)
class PosetWitness:
    preorder: Preorder

    def __post_init__(self):
        P = self.preorder
        for i in range(P.n):
            for j in range(P.n):
                if i != j and P.leq[i][j] and P.leq[j][i]:
                    raise NotAPosetError(
                        f"antisymmetry fails at ({P.elements[i]!r},{P.elements[j]!r})"
                    )


@dataclass(frozen=True)
class MonotoneMap:
    src: Preorder
    tgt: Preorder
    map: tuple[int, ...]

    def __post_init__(self):
        if len(self.map) != self.src.n:
            raise OrderError("map length does not match source carrier")
        for v in self.map:
            if not (0 <= v < self.tgt.n):
                raise OrderError(f"map value {v} out of target range")
        for i in range(self.src.n):
            for j in range(self.src.n):
                if self.src.leq[i][j] and not self.tgt.leq[self.map[i]][self.map[j]]:
                    raise OrderError(
                        "map not monotone at "
                        f"({self.src.elements[i]!r},{self.src.elements[j]!r})"
                    )

    def __call__(self, i: int) -> int:
        return self.map[i]


@dataclass(frozen=True)
class Cone:
    vertex: Preorder
    legs: tuple[MonotoneMap, ...]

    def __post_init__(self):
        for leg in self.legs:
            if leg.src != self.vertex:
                raise ConeError("cone leg does not start at the vertex")


@dataclass(frozen=True)
class LimitCone:
    """A limit apex together with its projections, in diagram order."""

    apex: Preorder
    projections: tuple[MonotoneMap, ...]

    def __iter__(self):
        yield self.apex
        yield from self.projections


class HomCompare(enum.Enum):
    BELOW = "<="
    ABOVE = ">="
    EQUIVALENT = "=="
    INCOMPARABLE = "incomparable"
    DIFFERENT_PROFILE = "different-profile"


def make_preorder(labels, pairs=()) -> Preorder:
    """Reflexive-transitive closure of a generating relation."""
    labels = tuple(labels)
    if len(set(labels)) != len(labels):
        raise OrderError("duplicate element label")
    idx = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)
    m = [[i == j for j in range(n)] for i in range(n)]
    for a, b in pairs:
        if a not in idx:
            raise OrderError(f"unknown element label {a!r}")
        if b not in idx:
            raise OrderError(f"unknown element label {b!r}")
        m[idx[a]][idx[b]] = True
    # Warshall closure
    for k in range(n):
        mk = m[k]
        for i in range(n):
            if m[i][k]:
                mi = m[i]
                for j in range(n):
                    if mk[j]:
                        mi[j] = True
    return Preorder(labels, tuple(tuple(row) for row in m))


def is_poset(P: Preorder) -> bool:
    return all(
        not (P.leq[i][j] and P.leq[j][i])
        for i in range(P.n)
        for j in range(P.n)
        if i != j
    )


def as_poset(P: Preorder) -> PosetWitness:
    return PosetWitness(P)


def identity(P: Preorder) -> MonotoneMap:
    return MonotoneMap(P, P, tuple(range(P.n)))


def compose(f: MonotoneMap, g: MonotoneMap) -> MonotoneMap:
    """Diagrammatic composite: f then g."""
    if f.tgt != g.src:
        raise CompositionError("maps are not composable")
    return MonotoneMap(f.src, g.tgt, tuple(g.map[v] for v in f.map))


def hom_compare(f: MonotoneMap, g: MonotoneMap) -> HomCompare:
    if f.src != g.src or f.tgt != g.tgt:
        return HomCompare.DIFFERENT_PROFILE
    below = all(f.tgt.leq[f.map[i]][g.map[i]] for i in range(f.src.n))
    above = all(f.tgt.leq[g.map[i]][f.map[i]] for i in range(f.src.n))
    if below and above:
        return HomCompare.EQUIVALENT
    if below:
        return HomCompare.BELOW
    if above:
        return HomCompare.ABOVE
    return HomCompare.INCOMPARABLE


def maps_equivalent(f: MonotoneMap, g: MonotoneMap) -> bool:
    return hom_compare(f, g) is HomCompare.EQUIVALENT


def quotient(P: Preorder) -> tuple[PosetWitness, MonotoneMap]:
    """Collapse mutual-leq classes; class label joins sorted member labels."""
    reps: list[int] = []
    canon = [0] * P.n
    for i in range(P.n):
        for ci, r in enumerate(reps):
            if P.equiv(i, r):
                canon[i] = ci
                break
        else:
            canon[i] = len(reps)
            reps.append(i)
    labels = []
    for r in reps:
        members = sorted(P.elements[i] for i in range(P.n) if P.equiv(i, r))
        labels.append("{" + ",".join(members) + "}")
    leq = tuple(tuple(P.leq[a][b] for b in reps) for a in reps)
    Q = Preorder(tuple(labels), leq)
    return PosetWitness(Q), MonotoneMap(P, Q, tuple(canon))


def opposite(P: Preorder) -> Preorder:
    return Preorder(
        P.elements, tuple(tuple(P.leq[j][i] for j in range(P.n)) for i in range(P.n))
    )


def product(P: Preorder, Q: Preorder) -> LimitCone:
    pairs = [(i, j) for i in range(P.n) for j in range(Q.n)]
    labels = tuple(f"({P.elements[i]},{Q.elements[j]})" for i, j in pairs)
    leq = tuple(
        tuple(P.leq[i][k] and Q.leq[j][l] for k, l in pairs) for i, j in pairs
    )
    R = Preorder(labels, leq)
    pi0 = MonotoneMap(R, P, tuple(i for i, _ in pairs))
    pi1 = MonotoneMap(R, Q, tuple(j for _, j in pairs))
    return LimitCone(R, (pi0, pi1))


def terminal() -> PosetWitness:
    return PosetWitness(make_preorder(("*",)))


def bang(P: Preorder) -> MonotoneMap:
    return MonotoneMap(P, terminal().preorder, tuple(0 for _ in range(P.n)))


def equalizer(f: MonotoneMap, g: MonotoneMap) -> LimitCone:
    if f.src != g.src or f.tgt != g.tgt:
        raise CompositionError("equalizer needs a parallel pair")
    keep = [i for i in range(f.src.n) if f.map[i] == g.map[i]]
    labels = tuple(f.src.elements[i] for i in keep)
    leq = tuple(tuple(f.src.leq[i][j] for j in keep) for i in keep)
    E = Preorder(labels, leq)
    incl = MonotoneMap(E, f.src, tuple(keep))
    return LimitCone(E, (incl,))


def pullback(f0: MonotoneMap, f1: MonotoneMap) -> LimitCone:
    if f0.tgt != f1.tgt:
        raise CompositionError("pullback needs maps with a common target")
    pairs = [
        (i, j)
        for i in range(f0.src.n)
        for j in range(f1.src.n)
        if f0.map[i] == f1.map[j]
    ]
    labels = tuple(
        f"({f0.src.elements[i]},{f1.src.elements[j]})" for i, j in pairs
    )
    leq = tuple(
        tuple(f0.src.leq[i][k] and f1.src.leq[j][l] for k, l in pairs)
        for i, j in pairs
    )
    R = Preorder(labels, leq)
    pi0 = MonotoneMap(R, f0.src, tuple(i for i, _ in pairs))
    pi1 = MonotoneMap(R, f1.src, tuple(j for _, j in pairs))
    return LimitCone(R, (pi0, pi1))


def all_monotone_maps(P: Preorder, Q: Preorder):
    """Yield every monotone map P -> Q, by backtracking over images."""
    n = P.n
    if n == 0:
        yield MonotoneMap(P, Q, ())
        return
    assign = [0] * n

    def extend(i: int):
        if i == n:
            yield MonotoneMap(P, Q, tuple(assign))
            return
        for q in range(Q.n):
            ok = True
            for j in range(i):
                if P.leq[j][i] and not Q.leq[assign[j]][q]:
                    ok = False
                    break
                if P.leq[i][j] and not Q.leq[q][assign[j]]:
                    ok = False
                    break
            if ok:
                assign[i] = q
                yield from extend(i + 1)

    yield from extend(0)


def mediator(
    cone: Cone, limit: LimitCone, *, uniqueness_search_limit: int = 10**6
) -> MonotoneMap:
    """The unique map into a limit commuting with the cone legs.

    Uniqueness is confirmed by exhaustive enumeration when the number of
    candidate functions stays under ``uniqueness_search_limit``.
    """
    if len(cone.legs) != len(limit.projections):
        raise ConeError("cone leg count does not match limit projections")
    apex = limit.apex
    out = []
    for v in range(cone.vertex.n):
        hits = [
            x
            for x in range(apex.n)
            if all(
                proj.map[x] == leg.map[v]
                for proj, leg in zip(limit.projections, cone.legs)
            )
        ]
        if not hits:
            raise ConeError(
                f"cone does not commute with the limit at {cone.vertex.elements[v]!r}"
            )
        if len(hits) > 1:
            raise ConeError("limit projections are not jointly injective")
        out.append(hits[0])
    med = MonotoneMap(cone.vertex, apex, tuple(out))
    for proj, leg in zip(limit.projections, cone.legs):
        if compose(med, proj) != leg:
            raise ConeError("mediator does not reproduce a cone leg")
    if apex.n ** max(cone.vertex.n, 1) <= uniqueness_search_limit:
        found = [
            c
            for c in all_monotone_maps(cone.vertex, apex)
            if all(
                compose(c, proj) == leg
                for proj, leg in zip(limit.projections, cone.legs)
            )
        ]
        assert found == [med], "mediator is not unique"
    return med


def transitive_reduction(pw: PosetWitness) -> list[tuple[int, int]]:
    """Cover pairs (i, j): i strictly below j with nothing strictly between."""
    P = pw.preorder
    covers = []
    for i in range(P.n):
        for j in range(P.n):
            if i == j or not P.leq[i][j]:
                continue
            if any(
                k not in (i, j) and P.leq[i][k] and P.leq[k][j] for k in range(P.n)
            ):
                continue
            covers.append((i, j))
    return sorted(covers)


def isomorphic(P: Preorder, Q: Preorder) -> bool:
    """Search-based order-isomorphism check; exponential, desk scale only."""
    if P.n != Q.n:
        return False
    for perm in itertools.permutations(range(Q.n)):
        if all(
            P.leq[i][j] == Q.leq[perm[i]][perm[j]]
            for i in range(P.n)
            for j in range(P.n)
        ):
            return True
    return False


# -- serialization ----------------------------------------------------------


def preorder_to_json(P: Preorder) -> dict:
    return {
        "elements": list(P.elements),
        "leq": [list(row) for row in P.leq],
    }


def preorder_from_json(d: dict) -> Preorder:
    return Preorder(
        tuple(d["elements"]), tuple(tuple(bool(v) for v in row) for row in d["leq"])
    )


def map_to_json(f: MonotoneMap) -> dict:
    return {
        "src": preorder_to_json(f.src),
        "tgt": preorder_to_json(f.tgt),
        "map": list(f.map),
    }


def map_from_json(d: dict) -> MonotoneMap:
    return MonotoneMap(
        preorder_from_json(d["src"]),
        preorder_from_json(d["tgt"]),
        tuple(int(v) for v in d["map"]),
    )


def poset_to_dot(pw: PosetWitness) -> str:
    """Hasse diagram: one node per element, one edge per cover pair."""
    P = pw.preorder
    lines = ["digraph {", "  rankdir=BT;"]
    for i, lab in enumerate(P.elements):
        escaped = lab.replace("\\", "\\\\").replace('"', '\\"')
        lines.append(f'  n{i} [label="{escaped}"];')
    for i, j in transitive_reduction(pw):
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
