"""Exact decomposition of cyclic modules over finitely generated algebras.

The pipeline: a weighted-automaton covering tree turns one generating
vector into a basis (wfa, modules), the commutant of the restricted
action is solved exactly (endo), and idempotent/Fitting splittings are
searched until every summand carries an indecomposability certificate
or an honest "undecided" (decompose).  Front ends cover boolean
functions under the symmetric group in characteristic 2 (boolfn) and
permutation modules in characteristic 0 (perms).
"""

from .boolfn import (
    MAX_VARIABLES,
    BooleanFunction,
    ParseError,
    decompose_boolean,
    function_from_vector,
    monomial_name,
    monomial_names,
    parse_anf,
    sn_action,
)
from .decompose import (
    DecompositionReport,
    SummandBlock,
    block_from_vectors,
    check_report,
    complete_decomposition,
    decompose_once,
    enumerate_idempotents,
)
from .endo import (
    Certificate,
    EndoAlgebra,
    SearchConfig,
    commutant_basis,
    compute_end,
    find_splitting_element,
    fitting_split,
    is_invertible,
    is_nilpotent,
    radical_char0,
    verify_certificate,
)
from .fields import GF2, QQ, FieldScalar, FieldSpec, gf
from .linalg import DenseMatrix, SpanSolver, kernel_basis, mat_pow, rref, solve
from .modules import (
    ActionGraph,
    AlgebraAction,
    CyclicModule,
    action_graph,
    orbit_basis,
    restricted_action,
    submodule_generated,
)
from .perms import (
    PermutationPresentation,
    left_translation_action,
    permutation_module,
    symmetric_group,
)
from .polynomials import (
    Polynomial,
    factor,
    factor_gfp,
    factor_q,
    min_poly,
    poly_gcd,
    squarefree_decomposition,
)
from .serialize import (
    FormatError,
    automaton_from_json,
    automaton_to_json,
    graph_to_dot,
    presentation_from_json,
    presentation_to_json,
    report_to_json,
    to_text,
)
from .wfa import (
    PrefixBasis,
    WeightedAutomaton,
    direct_sum,
    equivalent,
    left_reduce,
    minimize,
    right_reduce,
    scale,
)

__all__ = [
    "GF2",
    "QQ",
    "FieldScalar",
    "FieldSpec",
    "gf",
    "DenseMatrix",
    "SpanSolver",
    "kernel_basis",
    "mat_pow",
    "rref",
    "solve",
    "Polynomial",
    "factor",
    "factor_gfp",
    "factor_q",
    "min_poly",
    "poly_gcd",
    "squarefree_decomposition",
    "PrefixBasis",
    "WeightedAutomaton",
    "direct_sum",
    "equivalent",
    "left_reduce",
    "minimize",
    "right_reduce",
    "scale",
    "ActionGraph",
    "AlgebraAction",
    "CyclicModule",
    "action_graph",
    "orbit_basis",
    "restricted_action",
    "submodule_generated",
    "Certificate",
    "EndoAlgebra",
    "SearchConfig",
    "commutant_basis",
    "compute_end",
    "find_splitting_element",
    "fitting_split",
    "is_invertible",
    "is_nilpotent",
    "radical_char0",
    "verify_certificate",
    "DecompositionReport",
    "SummandBlock",
    "block_from_vectors",
    "check_report",
    "complete_decomposition",
    "decompose_once",
    "enumerate_idempotents",
    "MAX_VARIABLES",
    "BooleanFunction",
    "ParseError",
    "decompose_boolean",
    "function_from_vector",
    "monomial_name",
    "monomial_names",
    "parse_anf",
    "sn_action",
    "PermutationPresentation",
    "left_translation_action",
    "permutation_module",
    "symmetric_group",
    "FormatError",
    "automaton_from_json",
    "automaton_to_json",
    "graph_to_dot",
    "presentation_from_json",
    "presentation_to_json",
    "report_to_json",
    "to_text",
]
