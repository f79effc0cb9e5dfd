"""D4(3) perfect crystal B^{1,L}, its path model, and Demazure verification.

Thin Python surface over the C++ core: element enumeration and crystal
operators, tensor/path crystals, Demazure subsets, and the verification
suites returning JSON-shaped dict reports.
"""

from ._core import (  # noqa: F401
    BudgetExceeded,
    Path,
    PredicateId,
    Weight,
    apply_word,
    ba,
    bbar,
    bruhat_increases,
    delta,
    demazure_chain,
    demazure_paths,
    e,
    enumerate_b,
    eps,
    f,
    f_max,
    fundamental,
    graph_dot,
    graph_json,
    ground_state,
    in_b,
    is_dominant,
    lemma_weyl_check,
    level,
    minimal_elements,
    minimal_parametrized,
    pair_h,
    path_e,
    path_eps_phi,
    path_f,
    path_wt,
    perfect_axioms,
    phi,
    pk_set,
    predicate,
    predicate_ba,
    predicate_cross_check,
    reflect,
    root_coefficients,
    s_of,
    script_a,
    simple_root,
    stream_index,
    t_of,
    tensor_e,
    tensor_eps,
    tensor_f,
    tensor_phi,
    tensor_wt,
    verify_condition1,
    verify_condition2,
    verify_condition3,
    verify_theorem,
    wk_word,
    wt,
    wt_from_eps_phi,
    z_of,
)

__version__ = "0.1.0"
