"""Derived equivalence classification of linear Nakayama algebras with
almost separate relations, by way of quipus."""

__version__ = "0.1.0"

from .presentations import (
    Cord,
    ErrorCode,
    InvalidPresentation,
    InvalidQuiver,
    MarkedQuipuQuiver,
    NakayamaPresentation,
    NotationError,
    PreconditionError,
    QuipuError,
    QuipuShape,
    Relation,
    embed_nakayama,
    embed_quipu,
    parse,
    render,
    shape_of,
    validate_nakayama,
)
from .shapes import canonical_form, is_isomorphic, normalize, symmetry_orbit
from .crswap import cr_swap, cr_swap_inverse, first_relation_to_cord
from .translate import (
    derived_equivalent,
    equivalence_family,
    nakayama_to_quipu,
    quipu_to_nakayama,
    strip_length2,
)
from .invariants import coxeter_polynomial, verify_equivalence
from .enumeration import classify, enumerate_nakayama, enumerate_quipus
