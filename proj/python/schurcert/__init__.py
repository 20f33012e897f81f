"""Sign certificates for block operator matrices via Schur complements."""

from ._core import (
    SchurcertError,
    NumericallySingularError,
    check_nn,
    check_pd,
    check_pd_bidiagonal,
    classify_example_l2,
    classify_functional,
    classify_hessian,
    count_inequalities,
    enumerate_chains,
    invert,
    is_bidiagonal,
    quadratic_form,
    random_self_adjoint,
    recursion_depth,
    schur_first,
    schur_second,
    sym_eig_min,
)

__all__ = [
    "SchurcertError",
    "NumericallySingularError",
    "check_nn",
    "check_pd",
    "check_pd_bidiagonal",
    "classify_example_l2",
    "classify_functional",
    "classify_hessian",
    "count_inequalities",
    "enumerate_chains",
    "invert",
    "is_bidiagonal",
    "quadratic_form",
    "random_self_adjoint",
    "recursion_depth",
    "schur_first",
    "schur_second",
    "sym_eig_min",
]
