"""Symbolic toolkit for higher-adjunctibility combinatorics."""

from .adjunctions import (
    AXIOM,
    NOT_REDUCED,
    UNVERIFIED,
    VERIFIED,
    AdjunctionRecord,
    comparison_cell,
    compose_adjunctions,
    declare_adjunction,
    dualize,
    register_axiom,
    transport,
    verify_zigzag,
)
from .dexterity import (
    DexterityFunction,
    RewriteTrace,
    all_functions,
    build,
    canonical,
    interchange,
    l_count,
    normalize_witness,
    parity_pair,
    replay,
)
from .errors import AdjkitError, CapacityError, DomainError, ParseError, TypingError
from .factbase import ClassFact, FactBase, factbase_from_json, factbase_to_json, saturate
from .opposites import (
    OppositeFunction,
    build_opposite,
    negate_opposite,
    op_abbrev,
    op_for_pair,
    xor_compose,
)
from .schema import SchemaTower, generate_schema, interchange_schema, schema_counts
from .terms import (
    Cell,
    Comp,
    FormalContext,
    Gen,
    Id,
    Inv,
    check_equal,
    check_typing,
    comp,
    format_cell,
    hcomp,
    inverse,
    normalize_cell,
    parse_cell,
)
from .trees import (
    are_tree_equivalent,
    brute_force_classes,
    class_count_recurrence,
    format_tree,
    parse_tree,
    tree_from_function,
    tree_interchange,
    wreath_involutions,
)

__all__ = [name for name in dir() if not name.startswith("_")]
