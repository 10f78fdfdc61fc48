"""Factorization theory of order adjunctions on finite preorders."""

from .order import (
    Cone,
    HomCompare,
    LimitCone,
    MonotoneMap,
    NotAPosetError,
    OrderError,
    PosetWitness,
    Preorder,
    compose,
    equalizer,
    hom_compare,
    identity,
    is_poset,
    make_preorder,
    mediator,
    opposite,
    product,
    pullback,
    quotient,
    terminal,
    transitive_reduction,
)
from .galois import (
    Adjunction,
    AdjunctionError,
    MorphismClass,
    classify,
    closed_elements,
    closure,
    compose_adjunctions,
    identity_adjunction,
    interior,
    involution,
    open_elements,
    right_adjoint,
    verify_adjunction,
)
from .polar import (
    CommutingSquare,
    PolarError,
    PolarFactorization,
    axis,
    axis_morphism,
    central_isomorphism,
    check_factorization_system,
    closed_polar_factorization,
    diagonal_fill,
    open_polar_factorization,
    polar_factorization,
    pseudo_diagonal_fill,
    square,
)
from .fibration import (
    CleavageFactorization,
    DiamondDiagram,
    cartesian_lift,
    cleavage_factorize,
    closure_lift,
    diagonal,
    diamond,
    is_cartesian,
    kernel_square,
    verify_oef_axioms,
)
from .contexts import (
    Concept,
    ContextError,
    FormalContext,
    brute_force_concepts,
    concept_lattice,
    context_adjunction,
    derive_attributes,
    derive_objects,
    parse_cxt,
)

__version__ = "0.1.0"
