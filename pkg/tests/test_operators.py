import numpy as np
import pytest

from modelspace.antilinear import AntilinearMap, LinearMap, check_conjugation
from modelspace.circle import FourierWindow, grid_points
from modelspace.errors import AliasingError, ConfigurationError, DomainError, TruncationError
from modelspace.model_space import BlaschkeProduct, LaurentSymbol, kernels, tm_basis
from modelspace.operators import (
    SplitModelSpace,
    atto_matrix,
    c_split_matrix,
    c_theta_matrix,
    conjugation_label,
    default_window,
    dichotomy_check,
    emit_operator,
    hankel_matrix,
    intertwining_solutions,
    mz_conjugation_enumerate,
    orthogonal_splittings,
    split_space,
    tilde_hankel_matrix,
)

Z = BlaschkeProduct.zpow
GRID = 1024
THETA = BlaschkeProduct((0.3 + 0.2j, -0.5, 0.1j, 0.6), 1j)
ALPHA = BlaschkeProduct((-0.5, 0.1j))


def rand_symbol(rng, lo, hi):
    n = hi - lo + 1
    return LaurentSymbol(lo, rng.uniform(-1, 1, n) + 1j * rng.uniform(-1, 1, n))


def test_c_theta_monomial_is_flip():
    assert np.array_equal(c_theta_matrix(tm_basis(Z(5))).matrix, np.fliplr(np.eye(5)))
    assert np.array_equal(c_theta_matrix(tm_basis(Z(1))).matrix, [[1]])


def test_c_theta_blaschke_is_conjugation_and_maps_kernels():
    theta = BlaschkeProduct((0, 0.5))
    b = tm_basis(theta, GRID)
    c = c_theta_matrix(b)
    assert check_conjugation(c)
    k, kt = kernels(theta, 0.3 - 0.2j, GRID)
    assert np.allclose(c(b.coordinates(k)), b.coordinates(kt), atol=1e-12)


def test_c_split_monomial_permutation():
    c = c_split_matrix(Z(3), Z(5))
    v = np.array([1, 2j, 3, 4 + 1j, 5])
    assert np.allclose(c(v), np.conj(v[[2, 1, 0, 4, 3]]))


def test_c_split_two_by_two_is_j():
    assert np.array_equal(c_split_matrix(Z(1), Z(2)).matrix, np.eye(2))


def test_c_split_blaschke_prop_and_conjugation():
    s = SplitModelSpace(THETA, ALPHA, GRID)
    assert check_conjugation(s.c_split)
    rhs = s.eb @ s.A("theta", "beta", s.s_alpha.conj()) + s.eba @ s.p_alpha
    assert ((s.c_theta @ s.c_split) - rhs).norm() < 1e-9


def test_split_space_requires_divisor():
    with pytest.raises(DomainError):
        SplitModelSpace(Z(5), BlaschkeProduct((0.5,)))
    with pytest.raises(DomainError):
        SplitModelSpace(Z(5), BlaschkeProduct())


def test_atto_monomial_pattern():
    rng = np.random.default_rng(0)
    phi = rand_symbol(rng, -4, 2)
    m = atto_matrix(phi, Z(5), Z(3)).matrix
    for i in range(3):
        for j in range(5):
            assert m[i, j] == phi.coefficient(i - j)


def test_atto_identity_for_unit_symbol():
    assert np.allclose(atto_matrix(LaurentSymbol.monomial(0), THETA, THETA, GRID).matrix, np.eye(4), atol=1e-13)


def test_atto_adjoint_relation_blaschke():
    rng = np.random.default_rng(1)
    phi = rand_symbol(rng, -3, 3)
    a = atto_matrix(phi, THETA, ALPHA, GRID)
    b = atto_matrix(phi.conj(), ALPHA, THETA, GRID)
    assert np.allclose(a.adjoint().matrix, b.matrix, atol=1e-10)


def test_atto_cross_checked_by_independent_quadrature():
    theta = BlaschkeProduct((0, 0.5))
    alpha = Z(1)
    phi = LaurentSymbol.monomial(1)
    m = atto_matrix(phi, theta, alpha, 256).matrix
    # K_z is spanned by 1, so the entry is <z e_j, 1>, evaluated on a doubled grid
    t = grid_points(512)
    e1 = np.ones_like(t)
    e2 = np.sqrt(1 - 0.25) / (1 - 0.5 * t) * t
    expected = [np.mean(t * e1), np.mean(t * e2)]
    assert m.shape == (1, 2)
    assert np.allclose(m[0], expected, atol=1e-13)


def test_atto_refuses_aliased_symbol():
    with pytest.raises(AliasingError):
        atto_matrix(LaurentSymbol(-20, np.ones(41)), THETA, ALPHA, 32)


def test_hankel_of_analytic_symbol_vanishes():
    for domain in (tm_basis(Z(4)), tm_basis(THETA, GRID)):
        h = hankel_matrix(LaurentSymbol(0, [1, 2, 3]), domain, (-6, -1))
        assert np.allclose(h.matrix, 0, atol=1e-13)


def test_hankel_window_too_narrow():
    phi = LaurentSymbol(-6, [1.0])
    with pytest.raises(TruncationError):
        hankel_matrix(phi, tm_basis(Z(3)), (-3, -1))
    with pytest.raises(TruncationError):
        hankel_matrix(phi, tm_basis(THETA, GRID), FourierWindow.zeros(-3, -1))
    with pytest.raises(ConfigurationError):
        hankel_matrix(phi, tm_basis(Z(3)), FourierWindow.zeros(-6, 0))


def test_hankel_quadrature_path_matches_exact_path():
    rng = np.random.default_rng(2)
    phi = rand_symbol(rng, -5, 3)
    domain = tm_basis(Z(4), 128)
    window = default_window(phi, domain)
    exact = hankel_matrix(phi, domain, window).matrix
    sampled = hankel_matrix(phi.sample(128), domain, window).matrix
    assert np.allclose(exact, sampled, atol=1e-13)
    t_exact = tilde_hankel_matrix(Z(4), window, domain).matrix
    t_sampled = tilde_hankel_matrix(Z(4).sample(128), window, domain).matrix
    assert np.allclose(t_exact, t_sampled, atol=1e-13)


def test_hankel_factorisation_z4():
    rng = np.random.default_rng(3)
    phi = rand_symbol(rng, -3, 3)
    s = split_space(Z(4), Z(4))
    lhs = s.A("theta", "theta", phi) @ s.c_theta
    rhs = s.HH(s.theta, "theta", s.s_theta.conj() * phi, "theta") @ s.c_theta
    assert (lhs - rhs).norm() <= 1e-12


def test_hankel_fixture_example():
    rng = np.random.default_rng(4)
    a = {n: complex(v) for n, v in zip(range(-4, 3), rng.standard_normal(7))}
    phi = LaurentSymbol(-4, [a[n] for n in range(-4, 3)])
    s = split_space(Z(5), Z(3))
    got = (s.HH(s.alpha, "alpha", phi, "theta") @ s.c_theta).matrix
    want = [[0, 0, 0, a[-4], a[-3]], [0, 0, a[-4], a[-3], a[-2]], [0, a[-4], a[-3], a[-2], a[-1]]]
    assert np.allclose(got, want, atol=1e-12)


def test_embeddings_decompose_model_space():
    s = SplitModelSpace(THETA, ALPHA, GRID)
    u = np.hstack([s.e1.matrix, s.e2.matrix])
    assert np.allclose(u.conj().T @ u, np.eye(4), atol=1e-12)
    v = np.hstack([s.eb.matrix, s.eba.matrix])
    assert np.allclose(v.conj().T @ v, np.eye(4), atol=1e-12)


def test_alpha_equal_theta_has_trivial_complement():
    s = split_space(Z(3), Z(3))
    assert s.b_beta.dim == 0
    assert s.e2.shape == (3, 0)
    assert np.array_equal(s.c_split.matrix, s.c_theta.matrix)


# --- classification --------------------------------------------------------------


def test_intertwining_solutions_are_hankel_of_expected_dimension():
    sols = intertwining_solutions(3)
    assert sols.shape[0] == 13


def test_enumerate_examples():
    assert mz_conjugation_enumerate(3, 5, 0).admissible_betas == (3, 4, 5)
    assert mz_conjugation_enumerate(1, 2, 1).admissible_betas == (2, 3)
    for n in range(2, 7):
        assert mz_conjugation_enumerate(n, n, 0).admissible_betas == (n,)
    res = mz_conjugation_enumerate(3, 5, 0)
    for b, w in res.witnesses.items():
        assert w.shape == (5, 3)
    with pytest.raises(DomainError):
        mz_conjugation_enumerate(3, 5, 0, search_band=0)
    with pytest.raises(DomainError):
        mz_conjugation_enumerate(6, 5)


def test_dichotomy_z5_z3():
    found = dichotomy_check(3, 5)
    assert sorted(c.label for c in found) == ["C_{z^3,z^2}", "C_{z^5}"]
    split = next(c for c in found if c.label == "C_{z^3,z^2}")
    assert np.array_equal(split.matrix.matrix, c_split_matrix(Z(3), Z(5)).matrix)
    with pytest.raises(DomainError):
        dichotomy_check(5, 5)


@pytest.mark.parametrize("n", range(2, 7))
def test_dichotomy_all_monomial_pairs(n):
    for d in range(1, n):
        assert {(c.beta1, c.beta2) for c in dichotomy_check(d, n)} == {(n, n), (d, n + d)}


def test_labels():
    assert conjugation_label(3, 5, 5, 5) == "C_{z^5}"
    assert conjugation_label(1, 2, 1, 3) == "C_{z,z}"
    assert conjugation_label(3, 5, 4, 6).startswith("C[")


def test_orthogonal_splittings():
    assert orthogonal_splittings(3, 2) == {(0, 2), (3, 0)}
    assert orthogonal_splittings(1, 1) == {(0, 1), (1, 0)}


# --- serialisation ------------------------------------------------------------------


def test_emit_operator():
    phi = LaurentSymbol(-1, [1, 2, 3])
    out = emit_operator("atto", Z(5), Z(3), phi)
    assert out["rows"] == 3 and out["cols"] == 5 and out["kind"] == "linear"
    assert out["metadata"]["op"] == "atto" and out["metadata"]["basis"] == "monomial"
    out = emit_operator("c-split", THETA, ALPHA, grid=GRID)
    assert out["kind"] == "antilinear" and out["metadata"]["basis"] == "takenaka-malmquist"
    assert emit_operator("embed", Z(5), Z(3))["cols"] == 2
    assert emit_operator("c-theta", Z(2))["entries"] == [[0, 0], [1, 0], [1, 0], [0, 0]]
    with pytest.raises(ConfigurationError):
        emit_operator("toeplitz", Z(5), Z(3))
    with pytest.raises(ConfigurationError):
        emit_operator("atto", Z(5), Z(3))
    with pytest.raises(ConfigurationError):
        emit_operator("c-split", Z(5))


def test_types_of_builders():
    s = split_space(Z(4), Z(2))
    assert isinstance(s.c_split, AntilinearMap)
    assert isinstance(s.A("theta", "alpha", 1.0), LinearMap)
