"""MDS scanning, Schur squares, verdicts, duals."""

import random

import pytest

from mdsforge.certify import (
    VERDICT_INDETERMINATE,
    VERDICT_NON_RS,
    VERDICT_RS_CONSISTENT,
    dual_code,
    mds_exhaustive,
    min_distance_bruteforce,
    non_rs_certificate,
    schur_square_dim,
    schur_square_dim_from_exponents,
)
from mdsforge.errors import InfeasibleError, InvalidParamsError, RankDeficientError
from mdsforge.evalcode import (
    EvalCode,
    EvalSet,
    ExponentSet,
    GrsSpec,
    generator_matrix,
    grs_generator,
)
from mdsforge.field import make_field
from mdsforge.matrix import matrix_from_rows, mat_vec, rank

from oracles import brute_min_distance


def scalars(ctx, values):
    return tuple(ctx.scalar(v) for v in values)


def make_code(ctx, point_vals, exps):
    return EvalCode(ctx, EvalSet(scalars(ctx, point_vals)), ExponentSet(tuple(exps)))


def test_reed_solomon_control():
    ctx = make_field(13)
    cert = non_rs_certificate(make_code(ctx, range(6), (0, 1, 2)))
    assert cert.is_mds
    assert cert.failing_columns is None
    assert cert.schur_dim == 5  # == 2k - 1
    assert cert.verdict == VERDICT_RS_CONSISTENT


def test_gap_exponents_flip_the_verdict():
    ctx = make_field(13)
    cert = non_rs_certificate(make_code(ctx, range(6), (0, 1, 3)))
    assert cert.is_mds
    assert cert.schur_dim == 6
    assert cert.verdict == VERDICT_NON_RS


def test_known_dependent_columns_witness():
    # 1 + 5 + 7 == 0 in Z_13, so the first three columns fail for exponents
    # {0, 1, 3}: the subset-sum is the x^2 coefficient of the cubic vanishing
    # on those points.
    ctx = make_field(13)
    code = make_code(ctx, [1, 5, 7, 2, 3, 4], (0, 1, 3))
    ok, witness = mds_exhaustive(generator_matrix(code))
    assert not ok
    assert witness == (0, 1, 2)


def test_witness_is_lex_first():
    ctx = make_field(13)
    # two dependent triples; {1,5,7} sits at indices (1, 3, 5), {2,5,6} at (0, 3, 4)
    code = make_code(ctx, [2, 1, 3, 5, 6, 7], (0, 1, 3))
    ok, witness = mds_exhaustive(generator_matrix(code))
    assert not ok
    assert witness == (0, 3, 4)


def test_parallel_scan_matches_serial():
    ctx = make_field(13)
    good = generator_matrix(make_code(ctx, range(6), (0, 1, 3)))
    bad = generator_matrix(make_code(ctx, [1, 5, 7, 2, 3, 4], (0, 1, 3)))
    for mat in (good, bad):
        serial = mds_exhaustive(mat, jobs=1)
        assert mds_exhaustive(mat, jobs=2) == serial
        assert mds_exhaustive(mat, jobs=3) == serial


def test_k_greater_than_n_rejected():
    ctx = make_field(13)
    g = matrix_from_rows(ctx, [[ctx.one()], [ctx.zero()]])
    with pytest.raises(InvalidParamsError):
        mds_exhaustive(g)


def test_subset_guard_trips():
    ctx = make_field(13)
    g = generator_matrix(make_code(ctx, range(6), (0, 1, 3)))
    with pytest.raises(InfeasibleError):
        mds_exhaustive(g, guard=5)


def test_schur_dim_two_paths_agree():
    ctx = make_field(13)
    for exps in [(0, 1, 2), (0, 1, 3), (0, 2, 3), (0, 1, 2, 4)]:
        code = make_code(ctx, range(8), exps)
        assert schur_square_dim(generator_matrix(code)) == schur_square_dim_from_exponents(code)


def test_schur_dim_bounds():
    # MDS with k <= n/2 forces schur >= 2k - 1; k(k+1)/2 products cap it above
    ctx = make_field(13)
    code = make_code(ctx, range(8), (0, 1, 3))
    s = schur_square_dim(generator_matrix(code))
    assert 2 * 3 - 1 <= s <= min(8, 3 * 4 // 2)


def test_column_scaling_invariance():
    # rescaling columns changes neither MDS status nor the Schur dimension
    rng = random.Random(5)
    ctx = make_field(13)
    code = make_code(ctx, range(6), (0, 1, 3))
    g = generator_matrix(code)
    scales = [ctx.scalar(rng.randint(1, 12)) for _ in range(g.cols)]
    scaled = matrix_from_rows(
        ctx,
        [[ctx.mul(g.entries[i][j], scales[j]) for j in range(g.cols)] for i in range(g.rows)],
    )
    assert mds_exhaustive(scaled)[0] == mds_exhaustive(g)[0]
    assert schur_square_dim(scaled) == schur_square_dim(g)


def test_min_distance_known_code():
    ctx = make_field(13)
    code = make_code(ctx, range(6), (0, 1, 3))
    d, wd = min_distance_bruteforce(code)
    assert d == 4
    assert wd == (1, 0, 0, 0, 180, 648, 1368)
    assert sum(wd) == 13**3


def test_min_distance_constant_code():
    # I = {0}: repetition code, every nonzero codeword has full weight
    ctx = make_field(5)
    code = make_code(ctx, range(4), (0,))
    d, wd = min_distance_bruteforce(code)
    assert d == 4
    assert wd == (1, 0, 0, 0, 4)


def test_min_distance_matches_oracle():
    rng = random.Random(3)
    ctx = make_field(7)
    for _ in range(10):
        pts = rng.sample(range(7), 5)
        exps = tuple(sorted(rng.sample(range(5), 2)))
        code = make_code(ctx, pts, exps)
        d, _ = min_distance_bruteforce(code)
        assert d == brute_min_distance(ctx, [list(r) for r in generator_matrix(code).entries])


def test_verdict_indeterminate_when_k_large():
    # k > n/2: the Schur square cannot separate, even for an MDS code
    ctx = make_field(13)
    cert = non_rs_certificate(make_code(ctx, range(4), (0, 1, 2)))
    assert cert.is_mds
    assert cert.verdict == VERDICT_INDETERMINATE


def test_verdict_indeterminate_when_not_mds():
    ctx = make_field(13)
    cert = non_rs_certificate(make_code(ctx, [1, 5, 7, 2, 3, 4], (0, 1, 3)))
    assert not cert.is_mds
    assert cert.failing_columns == (0, 1, 2)
    assert cert.verdict == VERDICT_INDETERMINATE


def test_certificate_carries_min_distance_only_on_request():
    ctx = make_field(13)
    code = make_code(ctx, range(6), (0, 1, 3))
    assert non_rs_certificate(code).min_distance is None
    cert = non_rs_certificate(code, with_min_distance=True)
    assert cert.min_distance == 4


def test_grs_schur_dim_is_classical():
    # generalized Reed-Solomon squares to dimension exactly 2k - 1
    rng = random.Random(17)
    ctx = make_field(13)
    for _ in range(10):
        n = rng.randint(5, 9)
        k = rng.randint(2, n // 2)
        pts = scalars(ctx, rng.sample(range(13), n))
        mults = scalars(ctx, [rng.randint(1, 12) for _ in range(n)])
        g = grs_generator(GrsSpec(ctx, EvalSet(pts), mults, k))
        assert schur_square_dim(g) == 2 * k - 1


def test_dual_annihilates_and_is_mds():
    ctx = make_field(13)
    g = generator_matrix(make_code(ctx, range(6), (0, 1, 3)))
    d = dual_code(g)
    assert d.rows == 3
    for i in range(d.rows):
        assert all(v == ctx.zero() for v in mat_vec(g, d.row(i)))
    assert rank(d) == 3
    assert mds_exhaustive(d)[0]


def test_dual_of_full_length_code_is_empty():
    ctx = make_field(5)
    g = matrix_from_rows(ctx, [[ctx.one(), ctx.zero()], [ctx.zero(), ctx.one()]])
    assert dual_code(g).rows == 0


def test_dual_requires_full_row_rank():
    ctx = make_field(5)
    g = matrix_from_rows(ctx, [scalars(ctx, [1, 2]), scalars(ctx, [2, 4])])
    with pytest.raises(RankDeficientError):
        dual_code(g)


def test_extension_field_certification():
    ctx = make_field(2, 4)
    pts = tuple(ctx.from_int(v) for v in (0, 4, 5, 6, 7, 8))
    code = EvalCode(ctx, EvalSet(pts), ExponentSet((0, 1, 3)))
    cert = non_rs_certificate(code)
    assert cert.is_mds
    assert cert.verdict == VERDICT_NON_RS
