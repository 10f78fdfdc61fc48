"""The split fibration of finite preorders over finite carriers.

Every monotone map factors as a vertical gap followed by a cartesian
lift through its apex, the source carrier with the order pulled back
along the underlying function.  On top of that cleavage sit the kernel
orders of an adjunction and the diamond diagram linking them with the
axis.
"""

from __future__ import annotations

from dataclasses import dataclass

from .order import (
    CompositionError,
    MonotoneMap,
    OrderError,
    Preorder,
    all_monotone_maps,
    compose,
    equalizer,
    hom_compare,
    HomCompare,
    identity,
    is_poset,
    maps_equivalent,
    product,
    pullback,
)
from .galois import (
    Adjunction,
    classify,
    closure,
    interior,
)
from .polar import (
    CommutingSquare,
    PolarError,
    axis,
    axis_morphism,
)


class FibrationError(OrderError):
    pass


@dataclass(frozen=True)
class CleavageFactorization:
    original: MonotoneMap
    apex: Preorder
    gap: MonotoneMap  # vertical: identity on the carrier
    lift: MonotoneMap  # cartesian: apex -> target

    def __iter__(self):
        yield self.apex
        yield self.gap
        yield self.lift


def pulled_back_order(labels, func, E1: Preorder) -> Preorder:
    labels = tuple(labels)
    for v in func:
        if not (0 <= v < E1.n):
            raise FibrationError(f"function value {v} out of range")
    leq = tuple(
        tuple(E1.leq[func[i]][func[j]] for j in range(len(labels)))
        for i in range(len(labels))
    )
    return Preorder(labels, leq)


def cartesian_lift(labels, func, E1: Preorder) -> tuple[Preorder, MonotoneMap]:
    """The apex and cartesian lift of a carrier function into E1."""
    func = tuple(func)
    delta = pulled_back_order(labels, func, E1)
    return delta, MonotoneMap(delta, E1, func)


def cleavage_factorize(e: MonotoneMap) -> CleavageFactorization:
    delta, lift = cartesian_lift(e.src.elements, e.map, e.tgt)
    gap = MonotoneMap(e.src, delta, tuple(range(e.src.n)))
    return CleavageFactorization(original=e, apex=delta, gap=gap, lift=lift)


def is_cartesian(e: MonotoneMap) -> bool:
    return e.src.leq == pulled_back_order(e.src.elements, e.map, e.tgt).leq


def diagonal(e2: MonotoneMap, e1: MonotoneMap) -> MonotoneMap:
    """The mediator of e2 into the cleavage of e1 (e2 then e1 composable)."""
    if e2.tgt != e1.src:
        raise CompositionError("maps are not composable")
    return compose(e2, cleavage_factorize(e1).gap)


def verify_cleavage(cf: CleavageFactorization) -> str | None:
    """Check the cleavage laws; returns a witness description on failure."""
    e = cf.original
    if tuple(cf.gap.map) != tuple(range(e.src.n)):
        return "gap is not vertical"
    if compose(cf.gap, cf.lift) != e:
        return "gap followed by lift is not the original map"
    expected = pulled_back_order(e.src.elements, e.map, e.tgt)
    if cf.apex.leq != expected.leq:
        for i in range(e.src.n):
            for j in range(e.src.n):
                if cf.apex.leq[i][j] != expected.leq[i][j]:
                    return (
                        "apex order wrong at "
                        f"({e.src.elements[i]!r},{e.src.elements[j]!r})"
                    )
    if not is_cartesian(cf.lift):
        return "lift is not cartesian"
    return None


@dataclass(frozen=True)
class CheckRecord:
    passed: bool
    checked: int
    failures: tuple[str, ...]


@dataclass(frozen=True)
class OefReport:
    cleavage_uniqueness: CheckRecord
    right_cancellation: CheckRecord
    left_cancellation: CheckRecord
    equivalence_factorization: CheckRecord
    equalizers_cartesian: CheckRecord
    adjoint_facts: CheckRecord
    limit_preservation: CheckRecord

    @property
    def passed(self) -> bool:
        return all(
            getattr(self, name).passed
            for name in (
                "cleavage_uniqueness",
                "right_cancellation",
                "left_cancellation",
                "equivalence_factorization",
                "equalizers_cartesian",
                "adjoint_facts",
                "limit_preservation",
            )
        )

    def records(self):
        for name in (
            "cleavage_uniqueness",
            "right_cancellation",
            "left_cancellation",
            "equivalence_factorization",
            "equalizers_cartesian",
            "adjoint_facts",
            "limit_preservation",
        ):
            yield name, getattr(self, name)


def _le(f: MonotoneMap, g: MonotoneMap) -> bool:
    cmp = hom_compare(f, g)
    return cmp in (HomCompare.BELOW, HomCompare.EQUIVALENT)


def verify_oef_axioms(
    maps: list[MonotoneMap],
    adjunctions: list[Adjunction] = (),
    *,
    enumeration_cap: int = 4,
    pair_budget: int = 400,
) -> OefReport:
    """Check the order-enriched fibration axioms over sample maps.

    Auxiliary parallel pairs for the cancellation laws are enumerated
    exhaustively against each map's own endpoints when carriers stay
    within ``enumeration_cap`` elements; ``pair_budget`` caps the number
    of parallel sample pairs examined for the quadratic checks.
    """
    cleav_fail, rc_fail, lc_fail, ef_fail = [], [], [], []
    eq_fail, fact_fail, lim_fail = [], [], []
    n_cleav = n_rc = n_lc = n_ef = n_eq = n_fact = n_lim = 0

    for k, e in enumerate(maps):
        n_cleav += 1
        cf = cleavage_factorize(e)
        w = verify_cleavage(cf)
        if w:
            cleav_fail.append(f"map {k}: {w}")
        if is_cartesian(e):
            # cleavage uniqueness: a cartesian map factors as (identity, itself)
            if cf.apex != e.src or cf.gap != identity(e.src) or cf.lift != e:
                cleav_fail.append(f"map {k}: cartesian map has nontrivial cleavage")

        if max(e.src.n, e.tgt.n) > enumeration_cap:
            continue
        aux = [e.src, e.tgt]
        if is_cartesian(e):
            for X in aux:
                pool = list(all_monotone_maps(X, e.src))
                for p in pool:
                    for q in pool:
                        n_rc += 1
                        if _le(compose(p, e), compose(q, e)) and not _le(p, q):
                            rc_fail.append(
                                f"map {k}: right cancellation fails for a pair "
                                f"from {X.elements}"
                            )
        for Y in aux:
            pool = list(all_monotone_maps(cf.apex, Y))
            for p in pool:
                for q in pool:
                    n_lc += 1
                    if _le(compose(cf.gap, p), compose(cf.gap, q)) and not _le(p, q):
                        lc_fail.append(
                            f"map {k}: left cancellation fails into {Y.elements}"
                        )

    parallel_pairs = []
    for i, f in enumerate(maps):
        for j in range(i + 1, len(maps)):
            g = maps[j]
            if f.src == g.src and f.tgt == g.tgt:
                parallel_pairs.append((i, j, f, g))
                if len(parallel_pairs) >= pair_budget:
                    break
        if len(parallel_pairs) >= pair_budget:
            break

    for i, j, f, g in parallel_pairs:
        if maps_equivalent(f, g):
            n_ef += 1
            cf, cg = cleavage_factorize(f), cleavage_factorize(g)
            if cf.apex != cg.apex or cf.gap.map != cg.gap.map:
                ef_fail.append(f"maps {i},{j}: equivalent maps with different gaps")
            elif not maps_equivalent(cf.lift, cg.lift):
                ef_fail.append(
                    f"maps {i},{j}: equivalent maps with inequivalent lifts"
                )
        n_eq += 1
        incl = equalizer(f, g).projections[0]
        if not is_cartesian(incl):
            eq_fail.append(f"maps {i},{j}: equalizer inclusion not cartesian")
        n_lim += 1
        carrier = [x for x in range(f.src.n) if f.map[x] == g.map[x]]
        if list(incl.map) != carrier:
            lim_fail.append(f"equalizer carrier wrong for maps {i},{j}")
        n_lim += 1
        expected = sum(
            1
            for a in range(f.src.n)
            for b in range(g.src.n)
            if f.map[a] == g.map[b]
        )
        if pullback(f, g).apex.n != expected:
            lim_fail.append(f"pullback carrier wrong for maps {i},{j}")

    for k, g in enumerate(adjunctions):
        cls = classify(g)
        if cls.is_reflection:
            n_fact += 1
            if not is_cartesian(g.right):
                fact_fail.append(f"adjunction {k}: reflection right adjoint not cartesian")
        if cls.is_coreflection:
            n_fact += 1
            if not is_cartesian(g.left):
                fact_fail.append(f"adjunction {k}: coreflection left adjoint not cartesian")

    # the underlying functor preserves product carriers
    for k, e in enumerate(maps[:20]):
        n_lim += 1
        if product(e.src, e.tgt).apex.n != e.src.n * e.tgt.n:
            lim_fail.append(f"product carrier wrong for map {k}")

    return OefReport(
        cleavage_uniqueness=CheckRecord(not cleav_fail, n_cleav, tuple(cleav_fail)),
        right_cancellation=CheckRecord(not rc_fail, n_rc, tuple(rc_fail)),
        left_cancellation=CheckRecord(not lc_fail, n_lc, tuple(lc_fail)),
        equivalence_factorization=CheckRecord(not ef_fail, n_ef, tuple(ef_fail)),
        equalizers_cartesian=CheckRecord(not eq_fail, n_eq, tuple(eq_fail)),
        adjoint_facts=CheckRecord(not fact_fail, n_fact, tuple(fact_fail)),
        limit_preservation=CheckRecord(not lim_fail, n_lim, tuple(lim_fail)),
    )


def kernel_of_left(g: Adjunction) -> Preorder:
    """ker of the left adjoint: source carrier, order pulled back along it."""
    return pulled_back_order(g.source.elements, g.left.map, g.target)


def kernel_of_right(g: Adjunction) -> Preorder:
    return pulled_back_order(g.target.elements, g.right.map, g.source)


def closure_lift(g: Adjunction) -> MonotoneMap:
    """The closure pushed into the kernel of the left adjoint.

    Requires a posetal target; the result is cartesian, strictly
    idempotent, equivalent to the identity, and commutes with the gap.
    """
    if not is_poset(g.target):
        raise FibrationError("closure lift needs a posetal target")
    ker = kernel_of_left(g)
    lifted = MonotoneMap(ker, ker, closure(g).map)
    gap = MonotoneMap(g.source, ker, tuple(range(g.source.n)))
    assert is_cartesian(lifted)
    assert compose(lifted, lifted) == lifted
    assert maps_equivalent(lifted, identity(ker))
    assert compose(gap, lifted) == compose(closure(g), gap)
    return lifted


DIAMOND_IDENTITY_KEYS = (
    "clo.equ=ref",
    "equ.ref~=lift0",
    "ref.equ~=lift1",
    "equ~.int=ref~",
    "ref.ref~=g",
    "clo.lift0=g",
    "lift1.int=g",
)


@dataclass(frozen=True)
class DiamondDiagram:
    g: Adjunction
    axis: Preorder
    ker_left: Preorder
    ker_right: Preorder
    ref: Adjunction
    ref_op: Adjunction
    equ: Adjunction
    equ_op: Adjunction
    lift0: Adjunction
    lift1: Adjunction
    clo: Adjunction
    intr: Adjunction
    identities: tuple[tuple[str, bool], ...]

    @property
    def legs(self):
        return {
            "ref": self.ref,
            "ref~": self.ref_op,
            "equ": self.equ,
            "equ~": self.equ_op,
            "lift0": self.lift0,
            "lift1": self.lift1,
            "clo": self.clo,
            "int": self.intr,
        }


def diamond(g: Adjunction) -> DiamondDiagram:
    """The five-object, eight-adjunction diamond over g, verified strictly."""
    if not (is_poset(g.source) and is_poset(g.target)):
        raise PolarError("diamond needs posetal endpoints")
    A0, A1 = g.source, g.target
    kerL = kernel_of_left(g)
    kerR = kernel_of_right(g)
    data = axis(g)
    ax = data.axis
    clo_map = closure(g)
    int_map = interior(g)

    ref = Adjunction(data.xi0, data.pi0)
    ref_op = Adjunction(data.pi1, data.xi1)
    clo = Adjunction(
        MonotoneMap(A0, kerL, tuple(range(A0.n))),
        MonotoneMap(kerL, A0, clo_map.map),
    )
    intr = Adjunction(
        MonotoneMap(kerR, A1, int_map.map),
        MonotoneMap(A1, kerR, tuple(range(A1.n))),
    )
    equ = Adjunction(
        MonotoneMap(kerL, ax, data.xi0.map), MonotoneMap(ax, kerL, data.pi0.map)
    )
    equ_op = Adjunction(
        MonotoneMap(ax, kerR, data.pi1.map), MonotoneMap(kerR, ax, data.xi1.map)
    )
    lift0 = Adjunction(
        MonotoneMap(kerL, A1, g.left.map), MonotoneMap(A1, kerL, g.right.map)
    )
    lift1 = Adjunction(
        MonotoneMap(A0, kerR, g.left.map), MonotoneMap(kerR, A0, g.right.map)
    )

    from .galois import compose_adjunctions as cadj

    identities = (
        ("clo.equ=ref", cadj(clo, equ) == ref),
        ("equ.ref~=lift0", cadj(equ, ref_op) == lift0),
        ("ref.equ~=lift1", cadj(ref, equ_op) == lift1),
        ("equ~.int=ref~", cadj(equ_op, intr) == ref_op),
        ("ref.ref~=g", cadj(ref, ref_op) == g),
        ("clo.lift0=g", cadj(clo, lift0) == g),
        ("lift1.int=g", cadj(lift1, intr) == g),
    )
    if not all(ok for _, ok in identities):
        bad = [k for k, ok in identities if not ok]
        raise AssertionError(f"diamond identities violated: {bad}")
    for name, leg in (("equ", equ), ("equ~", equ_op)):
        if not classify(leg).is_equivalence:
            raise AssertionError(f"diamond leg {name} is not an equivalence")

    return DiamondDiagram(
        g=g,
        axis=ax,
        ker_left=kerL,
        ker_right=kerR,
        ref=ref,
        ref_op=ref_op,
        equ=equ,
        equ_op=equ_op,
        lift0=lift0,
        lift1=lift1,
        clo=clo,
        intr=intr,
        identities=identities,
    )


KERNEL_IDENTITY_KEYS = (
    "ref.axis=f0.ref",
    "axis.ref~=ref~.f1",
    "equ.axis=kerL.equ",
    "axis.equ~=equ~.kerR",
    "clo.kerL=f0.clo",
    "kerR.int=int.f1",
    "kerL.lift0=lift0.f1",
    "lift1.kerR=f0.lift1",
)


@dataclass(frozen=True)
class KernelSquareResult:
    square: CommutingSquare
    ker_left_adj: Adjunction
    ker_right_adj: Adjunction
    axis_adj: Adjunction
    identity_report: tuple[tuple[str, bool], ...]


def kernel_square(sq: CommutingSquare) -> KernelSquareResult:
    """Kernel and axis adjunctions of a strict square, with Table-style checks."""
    if sq.strictness != "strict":
        raise FibrationError("kernel adjunctions need a strict square")
    g, h, f0, f1 = sq.top, sq.bottom, sq.left, sq.right
    dg = diamond(g)
    dh = diamond(h)

    clo_h = closure(h)
    int_g = interior(g)
    ker_left_adj = Adjunction(
        MonotoneMap(dg.ker_left, dh.ker_left, f0.left.map),
        MonotoneMap(
            dh.ker_left,
            dg.ker_left,
            tuple(f0.right.map[clo_h.map[x]] for x in range(dh.ker_left.n)),
        ),
    )
    ker_right_adj = Adjunction(
        MonotoneMap(
            dg.ker_right,
            dh.ker_right,
            tuple(f1.left.map[int_g.map[x]] for x in range(dg.ker_right.n)),
        ),
        MonotoneMap(dh.ker_right, dg.ker_right, f1.right.map),
    )
    axis_adj = axis_morphism(sq)

    from .galois import compose_adjunctions as cadj

    report = (
        ("ref.axis=f0.ref", cadj(dg.ref, axis_adj) == cadj(f0, dh.ref)),
        ("axis.ref~=ref~.f1", cadj(axis_adj, dh.ref_op) == cadj(dg.ref_op, f1)),
        ("equ.axis=kerL.equ", cadj(dg.equ, axis_adj) == cadj(ker_left_adj, dh.equ)),
        (
            "axis.equ~=equ~.kerR",
            cadj(axis_adj, dh.equ_op) == cadj(dg.equ_op, ker_right_adj),
        ),
        ("clo.kerL=f0.clo", cadj(dg.clo, ker_left_adj) == cadj(f0, dh.clo)),
        ("kerR.int=int.f1", cadj(ker_right_adj, dh.intr) == cadj(dg.intr, f1)),
        (
            "kerL.lift0=lift0.f1",
            cadj(ker_left_adj, dh.lift0) == cadj(dg.lift0, f1),
        ),
        (
            "lift1.kerR=f0.lift1",
            cadj(dg.lift1, ker_right_adj) == cadj(f0, dh.lift1),
        ),
    )
    if not all(ok for _, ok in report):
        bad = [k for k, ok in report if not ok]
        raise AssertionError(f"kernel identities violated: {bad}")
    return KernelSquareResult(
        square=sq,
        ker_left_adj=ker_left_adj,
        ker_right_adj=ker_right_adj,
        axis_adj=axis_adj,
        identity_report=report,
    )
