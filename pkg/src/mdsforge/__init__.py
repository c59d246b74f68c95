"""Exact MDS evaluation codes over GF(p^m): construction, certification,
subset-condition search, existence bounds and erasure decoding."""

from .certify import (
    Certificate,
    dual_code,
    mds_exhaustive,
    min_distance_bruteforce,
    non_rs_certificate,
    schur_square_dim,
    schur_square_dim_from_exponents,
)
from .codec import ERASED, decode_erasures, systematic_form
from .conditions import (
    BoundQuery,
    ConditionSpec,
    ExhaustiveSearch,
    GreedySearch,
    RandomSearch,
    check_esym,
    esym_value,
    existence_bound,
    search_eval_set,
    shift_transform,
    subset_sum_counts,
)
from .evalcode import (
    EvalCode,
    EvalSet,
    ExponentSet,
    GrsSpec,
    encode,
    generator_matrix,
    grs_generator,
    is_arithmetic_progression,
    sumset,
)
from .families import (
    FAMILIES,
    cor44,
    cor62,
    cor411,
    extended_hamming_parity,
    lift_parity_columns,
    thm63,
    thm64,
    thm412,
    thm415,
)
from .field import FieldContext, FieldElement, enumerate_field, fe_pow, make_field
from .matrix import (
    MatrixFq,
    columns_independent,
    matrix_from_rows,
    null_space,
    rank,
    rref,
    solve_square,
)

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "BoundQuery",
    "ConditionSpec",
    "ERASED",
    "EvalCode",
    "EvalSet",
    "ExhaustiveSearch",
    "ExponentSet",
    "FAMILIES",
    "FieldContext",
    "FieldElement",
    "GreedySearch",
    "GrsSpec",
    "MatrixFq",
    "RandomSearch",
    "check_esym",
    "columns_independent",
    "cor411",
    "cor44",
    "cor62",
    "decode_erasures",
    "dual_code",
    "encode",
    "enumerate_field",
    "esym_value",
    "existence_bound",
    "extended_hamming_parity",
    "fe_pow",
    "generator_matrix",
    "grs_generator",
    "is_arithmetic_progression",
    "lift_parity_columns",
    "make_field",
    "matrix_from_rows",
    "mds_exhaustive",
    "min_distance_bruteforce",
    "non_rs_certificate",
    "null_space",
    "rank",
    "rref",
    "schur_square_dim",
    "schur_square_dim_from_exponents",
    "search_eval_set",
    "shift_transform",
    "solve_square",
    "subset_sum_counts",
    "sumset",
    "systematic_form",
    "thm412",
    "thm415",
    "thm63",
    "thm64",
]
