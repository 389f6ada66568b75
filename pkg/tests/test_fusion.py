from fractions import Fraction

import pytest

from symfusion.exactnum import PoleAtLimit
from symfusion.fusion import (ConfigError, FusionConfig, NotApplicable,
                              NonStandardNeighbor, SizeLimitExceeded,
                              _zmat_limit, e_operator, f_operator_closed,
                              f_operator_general, measured_eigenvalue,
                              operator_hash, scaled_idempotency_constant,
                              verify_corollary32, verify_divisibility,
                              verify_prop33, verify_scaled_idempotent,
                              verify_theta_factorization)
from symfusion.shapes import (Partition, column_tableau, count_semistandard,
                              row_tableau, skew, standard_tableaux)
from symfusion.symalg import Permutation
from symfusion.tensorop import (SparseOperator, alternating_form, perm_op,
                                q_op, rank, symmetric_form)


def P(*parts):
    return Partition(parts)


def T(lam, mu=(), which="row"):
    sh = skew(P(*lam), P(*mu))
    return row_tableau(sh) if which == "row" else column_tableau(sh)


I2 = lambda n=2: SparseOperator.identity(2, n)
P12_2 = perm_op(Permutation((2, 1)), 2)


def test_config_validation():
    with pytest.raises(ConfigError):
        FusionConfig(T((1,)), 3, 0, "alternating")  # odd N
    with pytest.raises(ConfigError):
        FusionConfig(T((1, 1, 1)), 2, 0, "symmetric")  # label out of range
    with pytest.raises(ConfigError):
        FusionConfig(T((2, 1), (1,)), 2, 0, "symmetric")  # inner shape needs M > 0
    cfg = FusionConfig(T((2,)), 3, 1, "symmetric")
    assert cfg.constraint_mode == "column" and cfg.base_point == Fraction(-1, 2)
    cfg = FusionConfig(T((2,)), 2, 0, "alternating")
    assert cfg.constraint_mode == "row" and cfg.base_point == Fraction(1, 2)


def test_e_operator_examples():
    assert e_operator(T((2,)), 2) == I2() + P12_2
    assert rank(e_operator(T((2,)), 2)) == 3
    assert e_operator(T((1, 1)), 2) == I2() - P12_2
    assert rank(e_operator(T((1, 1)), 2)) == 1
    sk = [t for t in standard_tableaux(skew(P(2, 1), P(1))) if t.contents == (1, -1)][0]
    E = e_operator(sk, 2)
    assert E == I2() - P12_2.scaled(Fraction(1, 2))
    assert rank(E) == 4 == count_semistandard(skew(P(2, 1), P(1)), 2)


def test_f_general_O3_single_row():
    cfg = FusionConfig(T((2,)), 3, 0, "symmetric")
    F = f_operator_general(cfg)
    I = SparseOperator.identity(3, 2)
    Q = q_op(1, 2, symmetric_form(3), 2)
    Pm = perm_op(Permutation((2, 1)), 3)
    assert F == I + Pm - Q.scaled(Fraction(2, 3))
    assert (Q * F).is_zero()
    assert rank(F) == 5


def test_f_general_Sp2_single_row():
    cfg = FusionConfig(T((2,)), 2, 0, "alternating")
    F = f_operator_general(cfg)
    assert F == I2() + P12_2
    assert rank(F) == 3


def test_f_general_O2_single_column():
    # one factor is genuinely singular on the line; the product is regular
    cfg = FusionConfig(T((1, 1)), 2, 0, "symmetric")
    F = f_operator_general(cfg)
    assert F == I2() - P12_2
    assert rank(F) == 1
    assert (q_op(1, 2, symmetric_form(2), 2) * F).is_zero()


def test_closed_formula_examples():
    cfg = FusionConfig(T((2,)), 3, 0, "symmetric")
    F = f_operator_general(cfg)
    assert f_operator_closed(cfg, "col_O") == F
    assert f_operator_closed(cfg, "regular_case") == F
    assert f_operator_closed(cfg, "any_SO") == F
    cfg_sp = FusionConfig(T((2,)), 2, 0, "alternating")
    assert f_operator_closed(cfg_sp, "row_Sp") == f_operator_general(cfg_sp)
    assert f_operator_closed(cfg_sp, "any_Sp") == f_operator_general(cfg_sp)
    # empty pair set: both boxes share the single column
    cfg_col = FusionConfig(T((1, 1)), 2, 0, "symmetric")
    assert f_operator_closed(cfg_col, "col_O") == e_operator(T((1, 1)), 2)


def test_closed_formula_applicability():
    cfg = FusionConfig(T((2,)), 3, 0, "symmetric")
    with pytest.raises(NotApplicable):
        f_operator_closed(cfg, "row_Sp")
    with pytest.raises(NotApplicable):
        f_operator_closed(cfg, "any_Sp")
    cfg_col = FusionConfig(T((1, 1)), 2, 0, "symmetric")
    with pytest.raises(NotApplicable):
        f_operator_closed(cfg_col, "any_SO")  # 2*2 > 2
    with pytest.raises(NotApplicable):
        f_operator_closed(cfg_col, "regular_case")
    # non-column tableau rejected by col_O
    cfg_rowtab = FusionConfig(T((2, 1), which="row"), 3, 0, "symmetric")
    tabs = standard_tableaux(skew(P(2, 1)))
    other = [t for t in tabs if t != column_tableau(skew(P(2, 1)))][0]
    assert other == cfg_rowtab.tableau
    with pytest.raises(NotApplicable):
        f_operator_closed(cfg_rowtab, "col_O")


def test_scaled_idempotency_examples():
    E = e_operator(T((2,)), 2)
    assert verify_scaled_idempotent(E, Fraction(2))
    cfg = FusionConfig(T((2,)), 3, 0, "symmetric")
    assert verify_scaled_idempotent(f_operator_general(cfg), Fraction(2))
    assert scaled_idempotency_constant(P(2, 1)) == Fraction(3)
    E21 = e_operator(T((2, 1)), 2)
    assert verify_scaled_idempotent(E21, Fraction(3))


def test_divisibility_examples():
    cfg = FusionConfig(T((2,)), 3, 0, "symmetric")
    F = f_operator_general(cfg)
    E = e_operator(T((2,)), 3)
    assert verify_divisibility(F, E, Fraction(2))
    cfg2 = FusionConfig(T((1, 1)), 2, 0, "symmetric")
    F2 = f_operator_general(cfg2)
    E2 = e_operator(T((1, 1)), 2)
    assert F2 == E2 and verify_divisibility(F2, E2, Fraction(2))
    cfg3 = FusionConfig(T((2,)), 2, 0, "alternating")
    assert f_operator_general(cfg3) == e_operator(T((2,)), 2)


def test_measured_eigenvalue():
    E = e_operator(T((2,)), 2)
    assert measured_eigenvalue(E) == 2
    # the two-box disconnected skew element is not essentially idempotent
    sk = [t for t in standard_tableaux(skew(P(2, 1), P(1))) if t.contents == (1, -1)][0]
    assert measured_eigenvalue(e_operator(sk, 2)) is None


def test_prop33_examples():
    assert verify_prop33(FusionConfig(T((2,)), 3, 0, "symmetric"))
    assert verify_prop33(FusionConfig(T((1, 1)), 2, 0, "symmetric"))
    assert verify_prop33(FusionConfig(T((1,)), 2, 0, "alternating"))
    with pytest.raises(ConfigError):
        verify_prop33(FusionConfig(T((2,)), 3, 1, "symmetric"))


def test_corollary32_examples():
    t21 = T((2, 1))
    assert verify_corollary32(t21, 2, FusionConfig(t21, 3, 0, "symmetric"))
    assert verify_corollary32(t21, 2, FusionConfig(t21, 2, 0, "alternating",
                                                   strict=False))
    t22 = T((2, 2))
    assert verify_corollary32(t22, 2, FusionConfig(t22, 2, 0, "symmetric",
                                                   strict=False))
    with pytest.raises(NonStandardNeighbor):
        verify_corollary32(t21, 1, FusionConfig(t21, 3, 0, "symmetric"))


def test_theta_factorization_configs():
    t2 = T((2,))
    assert verify_theta_factorization(t2, 0, 2, 1, "symmetric")
    assert verify_theta_factorization(t2, 1, 2, 1, "symmetric")
    for t in standard_tableaux(skew(P(2, 1))):
        assert verify_theta_factorization(t, 1, 2, 2, "symmetric")
    for t in standard_tableaux(skew(P(2, 2))):
        assert verify_theta_factorization(t, 1, 2, 2, "alternating")
    with pytest.raises(NotApplicable):
        verify_theta_factorization(T((1, 1)), 1, 2, 1, "alternating")  # odd M
    with pytest.raises(SizeLimitExceeded):
        verify_theta_factorization(T((4, 2)), 1, 3, 1, "symmetric")


def test_divisibility_for_skew_shape_with_measured_scalar():
    # single-row skew: the symmetrizer operator is essentially idempotent,
    # so the measured eigenvalue feeds the divisibility reformulation
    O = T((3,), (1,))
    cfg = FusionConfig(O, 2, 1, "symmetric")
    E = e_operator(O, 2)
    sigma = measured_eigenvalue(E)
    assert sigma == 2
    assert verify_divisibility(f_operator_general(cfg), E, sigma)


def test_pole_detection_machinery():
    # a 1x1 "matrix" with numerator 1 over denominator ε must raise
    with pytest.raises(PoleAtLimit):
        _zmat_limit({0: {0: (1,)}}, [(0, 2)], 1, 1)
    # numerator divisible by ε passes: 3ε/2ε -> 3/2
    out = _zmat_limit({0: {0: (0, 3)}}, [(0, 2)], 1, 1)
    assert out.entry(0, 0) == Fraction(3, 2)


def test_dimension_cap(monkeypatch):
    monkeypatch.setenv("FUSION_MAX_DIM", "8")
    with pytest.raises(SizeLimitExceeded):
        e_operator(T((2, 2)), 2)  # 2^4 = 16 > 8
    monkeypatch.delenv("FUSION_MAX_DIM")


def test_operator_hash_stability():
    E = e_operator(T((2,)), 2)
    assert operator_hash(E) == operator_hash(I2() + P12_2)
    assert operator_hash(E) != operator_hash(I2())


def test_rank_of_F_matches_traceless_intersection_dimension():
    # the two sides go through disjoint code paths: integer elimination
    # for the rank, field elimination for the subspace intersection
    from symfusion.tensorop import image_basis, intersect, traceless_basis

    cases = [
        (T((2,)), 3, "symmetric"),
        (T((2, 1)), 3, "symmetric"),
        (T((1, 1)), 2, "symmetric"),
        (T((2,)), 2, "alternating"),
        (T((2, 1)), 4, "alternating"),
    ]
    for tab, N, kind in cases:
        cfg = FusionConfig(tab, N, 0, kind)
        F = f_operator_general(cfg)
        form = symmetric_form(N) if kind == "symmetric" else alternating_form(N)
        E = e_operator(tab, N)
        meet = intersect(image_basis(E), traceless_basis(N, tab.n, form))
        assert rank(F) == meet.dim


def test_certify_collects_passing_checks():
    from symfusion.fusion import certify

    cert = certify(FusionConfig(T((2,)), 3, 0, "symmetric"))
    assert cert.all_passed()
    names = {c.name for c in cert.checks}
    assert {"regular-limit", "scaled-idempotency", "two-sided-divisibility",
            "traceless-image", "rank-monotone"} <= names
    payload = cert.to_json()
    assert payload["operator_hash"]
    assert all("paper_ref" in c for c in payload["checks"])
    listed = [c["name"] for c in payload["checks"]]
    assert listed == sorted(listed)


def test_route_agreement_small_sweep():
    # every applicable closed formula agrees with the general route
    cases = [
        (T((2, 1)), 3, 0, "symmetric"),
        (T((2, 1), which="col"), 3, 0, "symmetric"),
        (T((2, 1)), 2, 2, "alternating"),
        (T((3,)), 2, 1, "symmetric"),
        (T((2, 1), (1,)), 2, 1, "symmetric"),
        (T((2, 1), (1,), "col"), 2, 1, "symmetric"),
        (T((2, 2), (1,)), 2, 2, "symmetric"),
    ]
    for tab, N, M, kind in cases:
        cfg = FusionConfig(tab, N, M, kind)
        F = f_operator_general(cfg)
        for formula in ("col_O", "row_Sp", "any_Sp", "any_SO", "regular_case"):
            try:
                G = f_operator_closed(cfg, formula)
            except NotApplicable:
                continue
            assert G == F, (tab, N, M, kind, formula)
