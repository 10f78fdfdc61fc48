"""Polar factorization of an adjunction through its axis.

The axis of g is the order of pairs (closed element, open element) matched
by the adjoints.  Every adjunction with posetal endpoints factors as a
reflection onto the axis followed by a coreflection out of it; the closed
and open subobjects carry isomorphic copies of the same factorization.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .order import (
    MonotoneMap,
    OrderError,
    Preorder,
    all_monotone_maps,
    compose,
    identity,
    is_poset,
    maps_equivalent,
)
from .galois import (
    Adjunction,
    AdjunctionError,
    classify,
    closed_elements,
    closure,
    compose_adjunctions,
    identity_adjunction,
    interior,
    open_elements,
)


class PolarError(OrderError):
    pass


def _require_posetal(g: Adjunction) -> None:
    if not is_poset(g.source):
        raise PolarError("source is not posetal; quotient first")
    if not is_poset(g.target):
        raise PolarError("target is not posetal; quotient first")


@dataclass(frozen=True)
class AxisData:
    axis: Preorder
    pi0: MonotoneMap  # axis -> A0
    pi1: MonotoneMap  # axis -> A1
    xi0: MonotoneMap  # A0 -> axis
    xi1: MonotoneMap  # A1 -> axis


@dataclass(frozen=True)
class PolarFactorization:
    source: Preorder
    reflection: Adjunction
    axis: Preorder
    coreflection: Adjunction
    target: Preorder
    flavor: str
    identities_verified: bool = False


@dataclass(frozen=True)
class CommutingSquare:
    """A morphism of adjunctions (left, right): top -> bottom.

    Commutation is top then right against left then bottom; strictness
    records whether the composites agree on the nose or only up to
    equivalence.
    """

    top: Adjunction
    bottom: Adjunction
    left: Adjunction
    right: Adjunction
    strictness: str = field(default="strict", compare=False)


def square(
    top: Adjunction, bottom: Adjunction, left: Adjunction, right: Adjunction
) -> CommutingSquare:
    if top.source != left.source or top.target != right.source:
        raise PolarError("square sides do not share corners with the top")
    if bottom.source != left.target or bottom.target != right.target:
        raise PolarError("square sides do not share corners with the bottom")
    via_right = compose_adjunctions(top, right)
    via_left = compose_adjunctions(left, bottom)
    if via_right == via_left:
        strictness = "strict"
    elif maps_equivalent(via_right.left, via_left.left) and maps_equivalent(
        via_right.right, via_left.right
    ):
        strictness = "pseudo"
    else:
        raise PolarError("square does not commute, even up to equivalence")
    return CommutingSquare(top, bottom, left, right, strictness)


def axis(g: Adjunction) -> AxisData:
    _require_posetal(g)
    A0, A1 = g.source, g.target
    clo = closure(g)
    intr = interior(g)
    pairs = [
        (a, b)
        for a in range(A0.n)
        for b in range(A1.n)
        if clo.map[a] == a and intr.map[b] == b and g.left.map[a] == b and g.right.map[b] == a
    ]
    labels = tuple(f"({A0.elements[a]}|{A1.elements[b]})" for a, b in pairs)
    leq = tuple(
        tuple(A0.leq[a][c] and A1.leq[b][d] for c, d in pairs) for a, b in pairs
    )
    ax = Preorder(labels, leq)
    where = {p: k for k, p in enumerate(pairs)}
    pi0 = MonotoneMap(ax, A0, tuple(a for a, _ in pairs))
    pi1 = MonotoneMap(ax, A1, tuple(b for _, b in pairs))
    xi0 = MonotoneMap(
        A0, ax, tuple(where[(clo.map[a], g.left.map[a])] for a in range(A0.n))
    )
    xi1 = MonotoneMap(
        A1, ax, tuple(where[(g.right.map[b], intr.map[b])] for b in range(A1.n))
    )
    data = AxisData(ax, pi0, pi1, xi0, xi1)
    assert compose(xi0, pi0) == clo and compose(xi0, pi1) == g.left
    assert compose(xi1, pi0) == g.right and compose(xi1, pi1) == intr
    assert compose(pi0, xi0) == identity(ax) == compose(pi1, xi1)
    return data


def polar_factorization(g: Adjunction) -> PolarFactorization:
    data = axis(g)
    refl = Adjunction(data.xi0, data.pi0)
    corefl = Adjunction(data.pi1, data.xi1)
    return _checked_factorization(g, refl, data.axis, corefl, "full")


def closed_polar_factorization(g: Adjunction) -> PolarFactorization:
    _require_posetal(g)
    sub = closed_elements(g)
    refl = Adjunction(sub.corestriction, sub.incl)
    corefl = Adjunction(
        compose(sub.incl, g.left), compose(g.right, sub.corestriction)
    )
    return _checked_factorization(g, refl, sub.sub, corefl, "closed")


def open_polar_factorization(g: Adjunction) -> PolarFactorization:
    _require_posetal(g)
    sub = open_elements(g)
    refl = Adjunction(
        compose(g.left, sub.corestriction), compose(sub.incl, g.right)
    )
    corefl = Adjunction(sub.incl, sub.corestriction)
    return _checked_factorization(g, refl, sub.sub, corefl, "open")


def _checked_factorization(
    g: Adjunction,
    refl: Adjunction,
    ax: Preorder,
    corefl: Adjunction,
    flavor: str,
) -> PolarFactorization:
    if not classify(refl).is_reflection:
        raise PolarError(f"{flavor} reflection leg failed classification")
    if not classify(corefl).is_coreflection:
        raise PolarError(f"{flavor} coreflection leg failed classification")
    if compose_adjunctions(refl, corefl) != g:
        raise PolarError(f"{flavor} factorization does not compose to the input")
    if is_poset(g.source) and is_poset(g.target) and not is_poset(ax):
        raise PolarError("axis of a posetal adjunction must be posetal")
    return PolarFactorization(
        source=g.source,
        reflection=refl,
        axis=ax,
        coreflection=corefl,
        target=g.target,
        flavor=flavor,
        identities_verified=True,
    )


def central_isomorphism(g: Adjunction) -> Adjunction:
    """The isomorphism clo(g) = open(g) induced by the adjoints."""
    _require_posetal(g)
    c = closed_elements(g)
    o = open_elements(g)
    fwd = compose(compose(c.incl, g.left), o.corestriction)
    bwd = compose(compose(o.incl, g.right), c.corestriction)
    iso = Adjunction(fwd, bwd)
    if compose(fwd, bwd) != identity(c.sub) or compose(bwd, fwd) != identity(o.sub):
        raise PolarError("central isomorphism is not a strict isomorphism")
    return iso


def closed_isomorphism(g: Adjunction) -> Adjunction:
    """Isomorphism clo(g) = axis, matching each closed element with its image."""
    data = axis(g)
    c = closed_elements(g)
    fwd = compose(c.incl, data.xi0)
    bwd = compose(data.pi0, c.corestriction)
    iso = Adjunction(fwd, bwd)
    if compose(fwd, bwd) != identity(c.sub) or compose(bwd, fwd) != identity(data.axis):
        raise PolarError("closed isomorphism is not a strict isomorphism")
    return iso


def open_isomorphism(g: Adjunction) -> Adjunction:
    """Isomorphism axis = open(g)."""
    data = axis(g)
    o = open_elements(g)
    fwd = compose(data.pi1, o.corestriction)
    bwd = compose(o.incl, data.xi1)
    iso = Adjunction(fwd, bwd)
    if compose(fwd, bwd) != identity(data.axis) or compose(bwd, fwd) != identity(o.sub):
        raise PolarError("open isomorphism is not a strict isomorphism")
    return iso


def _all_adjunctions(P: Preorder, Q: Preorder):
    rights = list(all_monotone_maps(Q, P))
    for lft in all_monotone_maps(P, Q):
        for rgt in rights:
            try:
                yield Adjunction(lft, rgt)
            except AdjunctionError:
                continue


def diagonal_fill(sq: CommutingSquare, *, search_limit: int = 4) -> Adjunction:
    """Unique diagonal through a reflection-over-coreflection square.

    The square is read with the reflection e across the top, the
    coreflection m across the bottom, r on the left and s on the right,
    commuting as e then s = r then m.  Both defining routes for each
    adjoint are computed and must agree.
    """
    e, m, r, s = sq.top, sq.bottom, sq.left, sq.right
    if sq.strictness != "strict":
        raise PolarError("diagonal fill needs a strictly commuting square")
    if not classify(e).is_reflection:
        raise PolarError("top of the square is not a reflection")
    if not classify(m).is_coreflection:
        raise PolarError("bottom of the square is not a coreflection")
    d_left = compose(s.left, m.right)
    if d_left != compose(e.right, r.left):
        raise PolarError("diagonal left-adjoint routes disagree")
    d_right = compose(r.right, e.left)
    if d_right != compose(m.left, s.right):
        raise PolarError("diagonal right-adjoint routes disagree")
    d = Adjunction(d_left, d_right)
    if compose_adjunctions(e, d) != r or compose_adjunctions(d, m) != s:
        raise PolarError("diagonal does not satisfy the fill equations")
    B, C = e.target, m.source
    if max(B.n, C.n) <= search_limit:
        found = [
            cand
            for cand in _all_adjunctions(B, C)
            if compose_adjunctions(e, cand) == r
            and compose_adjunctions(cand, m) == s
        ]
        assert found == [d], "diagonal fill is not unique"
    return d


def _adjunctions_equivalent(a: Adjunction, b: Adjunction) -> bool:
    return maps_equivalent(a.left, b.left) and maps_equivalent(a.right, b.right)


def pseudo_diagonal_fill(sq: CommutingSquare, *, search_limit: int = 3) -> Adjunction:
    """Diagonal through a pseudo square, unique up to equivalence."""
    e, m, r, s = sq.top, sq.bottom, sq.left, sq.right
    if not classify(e).is_pseudo_reflection:
        raise PolarError("top of the square is not a pseudo-reflection")
    if not classify(m).is_pseudo_coreflection:
        raise PolarError("bottom of the square is not a pseudo-coreflection")
    d = Adjunction(compose(s.left, m.right), compose(r.right, e.left))
    if not _adjunctions_equivalent(compose_adjunctions(e, d), r):
        raise PolarError("pseudo diagonal does not fill against the left side")
    if not _adjunctions_equivalent(compose_adjunctions(d, m), s):
        raise PolarError("pseudo diagonal does not fill against the right side")
    B, C = e.target, m.source
    if max(B.n, C.n) <= search_limit:
        for cand in _all_adjunctions(B, C):
            if _adjunctions_equivalent(
                compose_adjunctions(e, cand), r
            ) and _adjunctions_equivalent(compose_adjunctions(cand, m), s):
                assert _adjunctions_equivalent(cand, d), (
                    "pseudo diagonal is not unique up to equivalence"
                )
    return d


def axis_morphism(sq: CommutingSquare) -> Adjunction:
    """The adjunction between axes induced by a strict square."""
    if sq.strictness != "strict":
        raise PolarError("axis morphism needs a strictly commuting square")
    g, h, f0, f1 = sq.top, sq.bottom, sq.left, sq.right
    dg = axis(g)
    dh = axis(h)
    fwd = compose(dg.pi1, compose(f1.left, dh.xi1))
    fwd_alt = compose(dg.pi0, compose(f0.left, dh.xi0))
    if fwd != fwd_alt:
        raise PolarError("axis left-adjoint routes disagree")
    bwd = compose(dh.pi0, compose(f0.right, dg.xi0))
    bwd_alt = compose(dh.pi1, compose(f1.right, dg.xi1))
    if bwd != bwd_alt:
        raise PolarError("axis right-adjoint routes disagree")
    diag = Adjunction(fwd, bwd)
    ref_g = Adjunction(dg.xi0, dg.pi0)
    coref_g = Adjunction(dg.pi1, dg.xi1)
    ref_h = Adjunction(dh.xi0, dh.pi0)
    coref_h = Adjunction(dh.pi1, dh.xi1)
    assert compose_adjunctions(ref_g, diag) == compose_adjunctions(f0, ref_h)
    assert compose_adjunctions(diag, coref_h) == compose_adjunctions(coref_g, f1)
    return diag


@dataclass(frozen=True)
class CheckRecord:
    passed: bool
    checked: int
    failures: tuple[str, ...]


@dataclass(frozen=True)
class FactorizationSystemReport:
    subcategory_laws: CheckRecord
    existence: CheckRecord
    diagonalization: CheckRecord
    uniqueness: CheckRecord

    def __post_init__(self):
        # the report must never claim diagonalization without uniqueness
        assert not (self.diagonalization.passed and not self.uniqueness.passed)

    @property
    def passed(self) -> bool:
        return (
            self.subcategory_laws.passed
            and self.existence.passed
            and self.diagonalization.passed
            and self.uniqueness.passed
        )


def check_factorization_system(
    samples: list[Adjunction],
    squares: list[CommutingSquare] = (),
    factorizations: list[PolarFactorization] = (),
    *,
    search_limit: int = 4,
) -> FactorizationSystemReport:
    """Run the factorization-system laws over sample adjunctions.

    Failures are collected as witnesses, never raised; `factorizations`
    lets callers feed externally built (possibly wrong) factorizations
    into the subcategory-law check.
    """
    sub_fail: list[str] = []
    exist_fail: list[str] = []
    diag_fail: list[str] = []
    uniq_fail: list[str] = []
    checked_sub = checked_exist = checked_diag = checked_uniq = 0

    triples = []
    for i, g in enumerate(samples):
        checked_exist += 1
        try:
            full = polar_factorization(g)
            clo_f = closed_polar_factorization(g)
            opn = open_polar_factorization(g)
        except OrderError as exc:
            exist_fail.append(f"sample {i}: {exc}")
            continue
        triples.append((i, g, full, clo_f, opn))

    for i, g, full, clo_f, opn in triples:
        for flavor, fac in (("full", full), ("closed", clo_f), ("open", opn)):
            checked_sub += 1
            if not classify(fac.reflection).is_reflection:
                sub_fail.append(f"sample {i} {flavor}: reflection leg misclassified")
            if not classify(fac.coreflection).is_coreflection:
                sub_fail.append(f"sample {i} {flavor}: coreflection leg misclassified")
        ident = identity_adjunction(g.source)
        cls = classify(ident)
        checked_sub += 1
        if not (cls.is_reflection and cls.is_coreflection and cls.is_isomorphism):
            sub_fail.append(f"sample {i}: identity not in both classes")

    # reflections and coreflections compose within their class
    for i, g, full, clo_f, _ in triples:
        checked_sub += 1
        iso = closed_isomorphism(g)
        rr = compose_adjunctions(clo_f.reflection, iso)
        if not classify(rr).is_reflection:
            sub_fail.append(f"sample {i}: composite of reflections not a reflection")
        mm = compose_adjunctions(iso, full.coreflection)
        if not classify(mm).is_coreflection:
            sub_fail.append(
                f"sample {i}: composite of coreflections not a coreflection"
            )

    for j, fac in enumerate(factorizations):
        checked_sub += 1
        if not classify(fac.reflection).is_reflection:
            sub_fail.append(f"factorization {j}: reflection leg misclassified")
        if not classify(fac.coreflection).is_coreflection:
            sub_fail.append(f"factorization {j}: coreflection leg misclassified")

    # uniqueness: the full and closed factorizations of each sample are
    # linked by a unique isomorphism, found by diagonalization
    for i, g, full, clo_f, opn in triples:
        checked_uniq += 1
        try:
            link = square(
                top=clo_f.reflection,
                bottom=full.coreflection,
                left=full.reflection,
                right=clo_f.coreflection,
            )
            d = diagonal_fill(link, search_limit=search_limit)
        except (OrderError, AssertionError) as exc:
            uniq_fail.append(f"sample {i}: {exc}")
            continue
        if not classify(d).is_isomorphism:
            uniq_fail.append(f"sample {i}: linking diagonal is not an isomorphism")

    for k, sq in enumerate(squares):
        checked_diag += 1
        try:
            diagonal_fill(sq, search_limit=search_limit)
        except (OrderError, AssertionError) as exc:
            diag_fail.append(f"square {k}: {exc}")

    # comp then div recovers the factorization up to isomorphism of axes
    for i, g, full, _, _ in triples:
        checked_exist += 1
        regained = polar_factorization(
            compose_adjunctions(full.reflection, full.coreflection)
        )
        if regained.axis != full.axis:
            exist_fail.append(f"sample {i}: refactoring changed the axis")

    return FactorizationSystemReport(
        subcategory_laws=CheckRecord(not sub_fail, checked_sub, tuple(sub_fail)),
        existence=CheckRecord(not exist_fail, checked_exist, tuple(exist_fail)),
        diagonalization=CheckRecord(not diag_fail, checked_diag, tuple(diag_fail)),
        uniqueness=CheckRecord(not uniq_fail, checked_uniq, tuple(uniq_fail)),
    )
