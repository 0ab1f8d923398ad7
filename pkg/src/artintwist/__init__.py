"""Symbolic machinery for subgroups generated by powers of generalized
braid group generators: Coxeter graphs, commutation-only word rewriting,
the free groupoid on the associated oriented graph, the twist action on
it, and nontriviality certificates for the induced word problem.
"""

from .coxeter import (
    INFINITY,
    CoxeterGraph,
    FoldedGraph,
    FoldingGadget,
    a_n,
    components,
    fold,
    folding_gadget,
    format_graph,
    hat,
    is_connected,
    is_small_type,
    parse_graph,
    relative_position,
    star,
)
from .errors import (
    ArtinTwistError,
    ContractViolation,
    InternalInconsistencyError,
    ParseError,
)
from .groupoid import (
    Edge,
    GroupoidPath,
    OrientedGraph,
    ReducedForm,
    arc_path,
    build_graph,
    compose,
    constant_path,
    format_path,
    has_square,
    invert,
    is_b_path,
    loop_path,
    parse_path,
    random_path,
    reduce_path,
    reduced_form,
    square_generators,
    type_projection,
)
from .twist import (
    TwistWord,
    apply_twist,
    apply_word,
    raag_action,
    relation_failures,
    twist_letter,
)
from .verify import (
    ArtinWord,
    NontrivialityCertificate,
    artin_actions_agree,
    certify_nontrivial_small_type,
    check_garside,
    decide_trivial_image,
    expand_through_fold,
    lift_exponents,
    prod_word,
)
from .words import (
    ExponentAssignment,
    RaagExpression,
    apply_type_i,
    apply_type_ii,
    ends_in,
    format_expression,
    ii_equivalent,
    is_m_reduced,
    is_trivial_raag,
    m_reduce,
    m_reduce_with_trace,
    parse_expression,
    split_criterion,
    type_i_positions,
    type_ii_positions,
)

__version__ = "0.1.0"
