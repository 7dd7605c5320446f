"""Computational toolkit for singular virtual braid monoids."""

from .words import (
    BraidWord, Budget, Distinct, Equivalent, Generator, IndexRangeError, Kind,
    ParseError, RelationInstance, TraceStep, Unknown, Verdict, compose_perms,
    concat, degree, equivalent, free_reduce, free_reduce_trace, identity_perm,
    inverse_word, invert_perm, invert_step, parse_word, print_word,
    relation_catalog, replay_trace, rewrite_neighbors, rho, sigma,
    singularity_count, tau, theta, virtual_word_of_perm,
)
from .gauss import (
    Arrow, ArrowKind, GaussWord, braid_of_gauss, canonical_form,
    canonical_form_trace, gauss_from_dict, gauss_of_braid, gauss_to_dict,
    omega_equivalent, omega_neighbors, pair_invariants, replay_omega_trace,
)
from .desing import (
    FormalSum, degree_spectrum, eta, eta_hat, eta_hat_expansion, flatten,
    formal_sum_from_dicts, formal_sum_to_dicts, scalar_preimage_check,
)
from .pure import (
    PureGenerator, PureWord, SemidirectPair, SingularFactorization, X, Y,
    decompose, embed_pure_generator, embed_pure_word, factor_singular,
    pair_from_dict, pair_to_dict, parse_pure_word, print_pure_word,
    reassemble_factorization, reassemble_pair, semidirect_multiply,
    sp_relation_instances, tau_of_permutation, verify_sp_relations,
)
from .surface import (
    RibbonGraph, SurfaceSummary, boundary_components, euler_by_traversal,
    euler_characteristic, genus, ribbon_of_braid, summary_to_dict,
    surface_summary,
)
from .suites import SUITE_NAMES, SuiteReport, run_suite

__version__ = "0.1.0"
