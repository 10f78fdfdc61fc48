"""Galois connections between finite preorders.

An adjunction g = <left, right> packages a left adjoint g.left : A0 -> A1
and a right adjoint g.right : A1 -> A0 with the unit/counit inequalities
checked at construction.  Composition is written diagrammatically
throughout: compose(f, g) means f then g.
"""

from __future__ import annotations

from dataclasses import dataclass

from .order import (
    CompositionError,
    MonotoneMap,
    OrderError,
    Preorder,
    compose,
    equalizer,
    identity,
    maps_equivalent,
    opposite,
)


class AdjunctionError(OrderError):
    """Raised when a claimed adjunction fails; carries the witness element."""

    def __init__(self, message: str, witness: str | None = None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class Adjunction:
    left: MonotoneMap
    right: MonotoneMap

    def __post_init__(self):
        if self.left.src != self.right.tgt or self.left.tgt != self.right.src:
            raise AdjunctionError("left and right adjoints are not anti-parallel")
        src, tgt = self.left.src, self.left.tgt
        for a in range(src.n):
            if not src.leq[a][self.right.map[self.left.map[a]]]:
                raise AdjunctionError(
                    f"unit fails at {src.elements[a]!r}", witness=src.elements[a]
                )
        for b in range(tgt.n):
            if not tgt.leq[self.left.map[self.right.map[b]]][b]:
                raise AdjunctionError(
                    f"counit fails at {tgt.elements[b]!r}", witness=tgt.elements[b]
                )

    @property
    def source(self) -> Preorder:
        return self.left.src

    @property
    def target(self) -> Preorder:
        return self.left.tgt


@dataclass(frozen=True)
class MorphismClass:
    is_reflection: bool
    is_coreflection: bool
    is_pseudo_reflection: bool
    is_pseudo_coreflection: bool
    is_equivalence: bool
    is_isomorphism: bool

    def __post_init__(self):
        assert not self.is_isomorphism or (self.is_reflection and self.is_coreflection)
        assert not self.is_equivalence or (
            self.is_pseudo_reflection and self.is_pseudo_coreflection
        )
        assert not self.is_reflection or self.is_pseudo_reflection
        assert not self.is_coreflection or self.is_pseudo_coreflection


@dataclass(frozen=True)
class SubobjectInclusion:
    sub: Preorder
    incl: MonotoneMap
    corestriction: MonotoneMap
    strict: bool


def verify_adjunction(left: MonotoneMap, right: MonotoneMap) -> Adjunction:
    g = Adjunction(left, right)
    # cross-check the iff form on all element pairs
    src, tgt = left.src, left.tgt
    for a in range(src.n):
        for b in range(tgt.n):
            if tgt.leq[left.map[a]][b] != src.leq[a][right.map[b]]:
                raise AdjunctionError(
                    "adjointness iff fails at "
                    f"({src.elements[a]!r},{tgt.elements[b]!r})",
                    witness=src.elements[a],
                )
    return g


def identity_adjunction(P: Preorder) -> Adjunction:
    return Adjunction(identity(P), identity(P))


def compose_adjunctions(g: Adjunction, h: Adjunction) -> Adjunction:
    if g.target != h.source:
        raise CompositionError("adjunctions are not composable")
    return Adjunction(compose(g.left, h.left), compose(h.right, g.right))


def involution(g: Adjunction) -> Adjunction:
    """Swap adjoints and flip both orders; reflections become coreflections."""
    return Adjunction(
        MonotoneMap(opposite(g.target), opposite(g.source), g.right.map),
        MonotoneMap(opposite(g.source), opposite(g.target), g.left.map),
    )


def closure(g: Adjunction) -> MonotoneMap:
    return compose(g.left, g.right)


def interior(g: Adjunction) -> MonotoneMap:
    return compose(g.right, g.left)


def classify(g: Adjunction) -> MorphismClass:
    clo = closure(g)
    intr = interior(g)
    id0 = identity(g.source)
    id1 = identity(g.target)
    is_refl = intr == id1
    is_corefl = clo == id0
    is_prefl = maps_equivalent(intr, id1)
    is_pcorefl = maps_equivalent(clo, id0)
    return MorphismClass(
        is_reflection=is_refl,
        is_coreflection=is_corefl,
        is_pseudo_reflection=is_prefl,
        is_pseudo_coreflection=is_pcorefl,
        is_equivalence=is_prefl and is_pcorefl,
        is_isomorphism=is_refl and is_corefl,
    )


def _fixed_point_sub(ambient: Preorder, endo: MonotoneMap) -> SubobjectInclusion:
    sub, incl = equalizer(identity(ambient), endo)
    core = []
    for a in range(ambient.n):
        target = endo.map[a]
        hits = [s for s in range(sub.n) if ambient.equiv(incl.map[s], target)]
        if not hits:
            raise AdjunctionError(
                "no fixed point equivalent to the image of "
                f"{ambient.elements[a]!r}; carrier is not posetal enough",
                witness=ambient.elements[a],
            )
        core.append(hits[0])
    corestriction = MonotoneMap(ambient, sub, tuple(core))
    strict = compose(incl, corestriction) == identity(sub) and compose(
        corestriction, incl
    ) == endo
    return SubobjectInclusion(sub, incl, corestriction, strict)


def closed_elements(g: Adjunction) -> SubobjectInclusion:
    """Fixed points of the closure, as a subobject of the source."""
    return _fixed_point_sub(g.source, closure(g))


def open_elements(g: Adjunction) -> SubobjectInclusion:
    """Fixed points of the interior, as a subobject of the target."""
    return _fixed_point_sub(g.target, interior(g))


def right_adjoint(left: MonotoneMap) -> Adjunction | None:
    """Solve for the right adjoint, or report that none exists.

    For each b the candidate set is {a | left(a) <= b}; the right adjoint
    exists iff each candidate set has a maximum up to equivalence, and the
    least-index maximal element is chosen for determinism.
    """
    src, tgt = left.src, left.tgt
    out = []
    for b in range(tgt.n):
        sb = [a for a in range(src.n) if tgt.leq[left.map[a]][b]]
        best = None
        for a in sb:
            if all(src.leq[x][a] for x in sb):
                best = a
                break
        if best is None:
            return None
        out.append(best)
    try:
        return Adjunction(left, MonotoneMap(tgt, src, tuple(out)))
    except (AdjunctionError, OrderError):
        return None


def adjunction_to_json(g: Adjunction) -> dict:
    from .order import map_to_json

    return {"left": map_to_json(g.left), "right": map_to_json(g.right)}


def adjunction_from_json(d: dict) -> Adjunction:
    from .order import map_from_json

    return verify_adjunction(map_from_json(d["left"]), map_from_json(d["right"]))
