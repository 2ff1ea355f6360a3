"""Exact analysis workbench for decision tables with many-valued decisions.

The package computes optimal deterministic and nondeterministic
decision-tree complexity under bounded measures, the structural
parameters of binary tables (certificate maxima, shattered column sets,
annihilating words, irreducible covers), generates the explicit table
families used by the verification suites, and checks every bound and
construction on concrete instances.
"""

from .errors import (
    CoverError,
    FormatError,
    MeasureError,
    MvdError,
    ResourceLimitError,
    TableError,
    TreeError,
    UnboundedMeasureError,
)
from .families import (
    LayeredGraph,
    PhiSpec,
    gen_family,
    gen_gk,
    gen_qn,
    gen_random,
    gen_t0,
    gen_threshold,
    gen_tk,
    gen_tkstar,
    h_step,
    nu_k,
    r_param,
    triangle,
)
from .limits import Limits, default_limits
from .measure import Measure, eval_attr_set, eval_tree, eval_word, m_psi
from .params import Cover, budget_words, g_param, l_param, z_param
from .solve import (
    SolveResult,
    SolveStats,
    certificate_cost,
    m_param,
    psi_a,
    psi_d,
    solve_det,
    solve_nondet,
    tree_from_cover,
)
from .table import (
    UNIVERSAL,
    Assignment,
    ClosureMember,
    DecisionMap,
    DecisionTable,
    change_decisions,
    closure_sample,
    common_decisions,
    is_degenerate,
    remove_columns,
    subtable,
)
from .tableio import (
    TableDocument,
    load_document,
    parse_table,
    parse_weights_sidecar,
    read_document,
    save_table,
    serialize_table,
)
from .tree import (
    CompletePath,
    DecisionTree,
    Inner,
    Terminal,
    complete_paths,
    export_tree,
    import_tree,
    tree_from_obj,
    tree_to_obj,
    validate_tree,
)
from .verify import (
    CheckRecord,
    ClassProfile,
    VerificationReport,
    check_bounds,
    check_construction,
    check_families,
    empirical_profile,
    nondet_by_word_enumeration,
)

__version__ = "0.1.0"

__all__ = [
    "Assignment",
    "CheckRecord",
    "ClassProfile",
    "ClosureMember",
    "CompletePath",
    "Cover",
    "CoverError",
    "DecisionMap",
    "DecisionTable",
    "DecisionTree",
    "FormatError",
    "Inner",
    "LayeredGraph",
    "Limits",
    "Measure",
    "MeasureError",
    "MvdError",
    "PhiSpec",
    "ResourceLimitError",
    "SolveResult",
    "SolveStats",
    "TableDocument",
    "TableError",
    "Terminal",
    "TreeError",
    "UNIVERSAL",
    "UnboundedMeasureError",
    "VerificationReport",
    "budget_words",
    "certificate_cost",
    "change_decisions",
    "check_bounds",
    "check_construction",
    "check_families",
    "closure_sample",
    "common_decisions",
    "complete_paths",
    "default_limits",
    "empirical_profile",
    "eval_attr_set",
    "eval_tree",
    "eval_word",
    "export_tree",
    "g_param",
    "gen_family",
    "gen_gk",
    "gen_qn",
    "gen_random",
    "gen_t0",
    "gen_threshold",
    "gen_tk",
    "gen_tkstar",
    "h_step",
    "import_tree",
    "is_degenerate",
    "l_param",
    "load_document",
    "m_param",
    "m_psi",
    "nondet_by_word_enumeration",
    "nu_k",
    "parse_table",
    "parse_weights_sidecar",
    "psi_a",
    "psi_d",
    "r_param",
    "read_document",
    "remove_columns",
    "save_table",
    "serialize_table",
    "solve_det",
    "solve_nondet",
    "subtable",
    "tree_from_cover",
    "tree_from_obj",
    "tree_to_obj",
    "triangle",
    "validate_tree",
    "z_param",
]
