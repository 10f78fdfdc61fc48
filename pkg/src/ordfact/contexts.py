"""Formal contexts and their concept lattices.

A context is a binary incidence between objects and attributes.  Its
derivation operators form a Galois connection between the powerset of
objects and the flipped powerset of attributes; the axis of that
connection is the concept lattice.  ``brute_force_concepts`` re-derives
everything from the incidence matrix alone and serves as an independent
oracle for the axis route.
"""

from __future__ import annotations

from dataclasses import dataclass

from .order import OrderError, PosetWitness, Preorder, opposite
from .galois import Adjunction, MonotoneMap, verify_adjunction
from .polar import axis


class ContextError(OrderError):
    pass


@dataclass(frozen=True)
class FormalContext:
    objects: tuple[str, ...]
    attributes: tuple[str, ...]
    incidence: tuple[tuple[bool, ...], ...]

    def __post_init__(self):
        if len(set(self.objects)) != len(self.objects):
            raise ContextError("duplicate object label")
        if len(set(self.attributes)) != len(self.attributes):
            raise ContextError("duplicate attribute label")
        if len(self.incidence) != len(self.objects) or any(
            len(row) != len(self.attributes) for row in self.incidence
        ):
            raise ContextError("incidence shape does not match labels")


@dataclass(frozen=True)
class Concept:
    extent: int  # bitmask over objects
    intent: int  # bitmask over attributes


def parse_cxt(text: str) -> FormalContext:
    """Parse the Burmeister .cxt format."""
    lines = text.splitlines()

    def bad(lineno, msg):
        return ContextError(f"line {lineno + 1}: {msg}")

    pos = 0

    def next_line(expect_blank=False):
        nonlocal pos
        if pos >= len(lines):
            raise ContextError("unexpected end of file")
        line = lines[pos]
        pos += 1
        return line

    header = next_line()
    if header.strip() != "B":
        raise bad(0, "expected header 'B'")
    blank = next_line()
    if blank.strip():
        raise bad(pos - 1, "expected blank line after header")
    try:
        n_obj = int(next_line().strip())
        n_att = int(next_line().strip())
    except ValueError:
        raise bad(pos - 1, "expected object/attribute counts") from None
    blank = next_line()
    if blank.strip():
        raise bad(pos - 1, "expected blank line after counts")
    objects = tuple(next_line() for _ in range(n_obj))
    attributes = tuple(next_line() for _ in range(n_att))
    rows = []
    for g in range(n_obj):
        lineno = pos
        row = next_line()
        if len(row) != n_att:
            raise bad(lineno, f"row length {len(row)} != attribute count {n_att}")
        for ch in row:
            if ch not in ".X":
                raise bad(lineno, f"invalid incidence character {ch!r}")
        rows.append(tuple(ch == "X" for ch in row))
    return FormalContext(objects, attributes, tuple(rows))


def format_cxt(K: FormalContext) -> str:
    rows = [
        "".join("X" if v else "." for v in row) for row in K.incidence
    ]
    return "\n".join(
        ["B", "", str(len(K.objects)), str(len(K.attributes)), ""]
        + list(K.objects)
        + list(K.attributes)
        + rows
    ) + "\n"


def derive_objects(K: FormalContext, x_mask: int) -> int:
    """Attributes common to every object in the mask."""
    out = 0
    for m in range(len(K.attributes)):
        if all(
            K.incidence[g][m]
            for g in range(len(K.objects))
            if x_mask >> g & 1
        ):
            out |= 1 << m
    return out


def derive_attributes(K: FormalContext, y_mask: int) -> int:
    """Objects bearing every attribute in the mask."""
    out = 0
    for g in range(len(K.objects)):
        if all(
            K.incidence[g][m]
            for m in range(len(K.attributes))
            if y_mask >> m & 1
        ):
            out |= 1 << g
    return out


def _mask_label(mask: int, labels: tuple[str, ...]) -> str:
    members = [labels[i] for i in range(len(labels)) if mask >> i & 1]
    return "{" + ",".join(sorted(members)) + "}"


def powerset_poset(labels: tuple[str, ...]) -> Preorder:
    """All subsets of the labels, ordered by inclusion, in mask order."""
    n = len(labels)
    masks = list(range(1 << n))
    names = tuple(_mask_label(m, labels) for m in masks)
    leq = tuple(tuple((a & b) == a for b in masks) for a in masks)
    return Preorder(names, leq)


POWERSET_THRESHOLD = 10


def context_adjunction(K: FormalContext) -> Adjunction:
    """The derivation Galois connection, with the attribute side flipped."""
    if len(K.objects) > POWERSET_THRESHOLD or len(K.attributes) > POWERSET_THRESHOLD:
        raise ContextError("context exceeds the powerset threshold")
    A0 = powerset_poset(K.objects)
    A1 = opposite(powerset_poset(K.attributes))
    left = MonotoneMap(
        A0, A1, tuple(derive_objects(K, x) for x in range(A0.n))
    )
    right = MonotoneMap(
        A1, A0, tuple(derive_attributes(K, y) for y in range(A1.n))
    )
    return verify_adjunction(left, right)


def _concept_sort_key(K: FormalContext, c: Concept):
    return tuple(i for i in range(len(K.objects)) if c.extent >> i & 1)


def concept_lattice(K: FormalContext) -> tuple[PosetWitness, list[Concept]]:
    """The axis of the context adjunction, relabeled as concept pairs."""
    g = context_adjunction(K)
    data = axis(g)
    # axis elements index into the two powersets; their indices are the masks
    concepts = [
        Concept(extent=data.pi0.map[k], intent=data.pi1.map[k])
        for k in range(data.axis.n)
    ]
    order = sorted(range(len(concepts)), key=lambda k: _concept_sort_key(K, concepts[k]))
    concepts = [concepts[k] for k in order]
    labels = tuple(
        f"({_mask_label(c.extent, K.objects)}|{_mask_label(c.intent, K.attributes)})"
        for c in concepts
    )
    leq = tuple(
        tuple((a.extent & b.extent) == a.extent for b in concepts) for a in concepts
    )
    return PosetWitness(Preorder(labels, leq)), concepts


def brute_force_concepts(K: FormalContext) -> list[Concept]:
    """Independent oracle: scan all extents directly on the incidence matrix."""
    n_obj, n_att = len(K.objects), len(K.attributes)
    if n_obj > POWERSET_THRESHOLD or n_att > POWERSET_THRESHOLD:
        raise ContextError("context exceeds the powerset threshold")
    found = []
    for x in range(1 << n_obj):
        intent = 0
        for m in range(n_att):
            if all(K.incidence[g][m] for g in range(n_obj) if x >> g & 1):
                intent |= 1 << m
        extent = 0
        for g in range(n_obj):
            if all(K.incidence[g][m] for m in range(n_att) if intent >> m & 1):
                extent |= 1 << g
        if extent == x:
            found.append(Concept(extent=x, intent=intent))
    found.sort(key=lambda c: _concept_sort_key(K, c))
    return found


def concepts_to_json(K: FormalContext, concepts: list[Concept]) -> dict:
    return {
        "concepts": [
            {
                "extent": sorted(
                    K.objects[i]
                    for i in range(len(K.objects))
                    if c.extent >> i & 1
                ),
                "intent": sorted(
                    K.attributes[i]
                    for i in range(len(K.attributes))
                    if c.intent >> i & 1
                ),
            }
            for c in concepts
        ]
    }
