import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from modelspace.circle import CircleFunction, grid_points, riesz_project
from modelspace.errors import AliasingError, DimensionError, DomainError, EmptyBasisError, ValidationError
from modelspace.model_space import (
    BlaschkeProduct,
    LaurentSymbol,
    blaschke_divide,
    divides,
    inner_mult_embed,
    kernels,
    model_project,
    tm_basis,
)

GRID = 512
ZEROS = (0.3 + 0.2j, -0.5, 0.1j, 0.6)


def in_model_space(f: CircleFunction, theta: BlaschkeProduct, tol=1e-10) -> bool:
    """f in H^2 and conj(theta) f in conj(z H^2)."""
    m = f.grid_size
    minus_part = riesz_project("minus", f).norm()
    analytic_part = riesz_project("plus", theta.sample(m).conj() * f).norm()
    return minus_part < tol and analytic_part < tol


def test_blaschke_validation():
    with pytest.raises(DomainError):
        BlaschkeProduct((1.0,))
    with pytest.raises(DomainError):
        BlaschkeProduct((0.2,), 2.0)
    with pytest.raises(DomainError):
        BlaschkeProduct.zpow(-1)


def test_blaschke_is_inner_and_vanishes_at_zeros():
    b = BlaschkeProduct(ZEROS, 1j)
    t = grid_points(64)
    assert np.allclose(np.abs(b(t)), 1, atol=1e-14)
    for a in ZEROS:
        assert abs(b(a)) < 1e-15
    assert b.degree == 4 and not b.is_monomial


def test_zeros_are_canonically_ordered():
    assert BlaschkeProduct((0.5, 0.1j, 0)) == BlaschkeProduct((0, 0.5, 0.1j))


def test_divide_monomials():
    q = blaschke_divide(BlaschkeProduct.zpow(3), BlaschkeProduct.zpow(5))
    assert q == BlaschkeProduct.zpow(2)
    assert blaschke_divide(BlaschkeProduct.zpow(6), BlaschkeProduct.zpow(5)) is None
    assert not divides(BlaschkeProduct((0.5,)), BlaschkeProduct.zpow(5))


def test_divide_blaschke_quotient_times_divisor_is_theta():
    theta = BlaschkeProduct(ZEROS, 1j)
    alpha = BlaschkeProduct((-0.5, 0.1j), -1)
    beta = blaschke_divide(alpha, theta)
    z = np.array([0.2 + 0.1j, -0.7j, 0.9])
    assert np.allclose(alpha(z) * beta(z), theta(z))
    assert theta.equivalent(BlaschkeProduct(ZEROS, -1))
    assert not theta.equivalent(alpha)


def test_json_round_trip_and_malformed():
    b = BlaschkeProduct(ZEROS, 1j)
    assert BlaschkeProduct.from_json(b.to_json()) == b
    with pytest.raises(ValidationError):
        BlaschkeProduct.from_json({"zeros": [[0.1]]})
    s = LaurentSymbol(-2, [1, 2j, 3])
    assert LaurentSymbol.from_json(s.to_json()) == s


def test_laurent_symbol_algebra():
    s = LaurentSymbol.from_dict({-1: 2.0, 2: 1j})
    assert s.lo == -1 and s.hi == 2
    assert s.conj().to_dict() == {1: 2.0, -2: -1j}
    prod = s * LaurentSymbol.monomial(3)
    assert prod.to_dict() == {2: 2.0, 5: 1j}
    assert (s - s).is_zero
    assert (2 * s).to_dict() == {-1: 4.0, 2: 2j}
    z = np.exp(0.3j)
    assert s(z) == pytest.approx(2 / z + 1j * z**2)
    assert np.allclose(s.sample(32).samples, s(grid_points(32)))
    # trimming of exact zeros
    assert LaurentSymbol(-3, [0, 0, 1, 0]) == LaurentSymbol.monomial(-1)


def test_laurent_symbol_sample_refuses_aliasing():
    with pytest.raises(AliasingError):
        LaurentSymbol(-10, np.ones(21)).sample(16)


def test_monomial_basis_is_powers_of_z():
    b = tm_basis(BlaschkeProduct.zpow(4), 64)
    t = grid_points(64)
    for k, f in enumerate(b.functions):
        assert np.allclose(f.samples, t**k)


def test_empty_basis():
    with pytest.raises(EmptyBasisError):
        tm_basis(BlaschkeProduct(), 64)


@settings(max_examples=25, deadline=None)
@given(
    zeros=st.lists(
        st.tuples(st.floats(0, 0.8), st.floats(0, 2 * np.pi)), min_size=1, max_size=6
    ),
    repeat=st.booleans(),
)
def test_takenaka_malmquist_basis_is_orthonormal_and_in_model_space(zeros, repeat):
    zs = [r * np.exp(1j * a) for r, a in zeros]
    if repeat:
        zs.append(zs[0])
    theta = BlaschkeProduct(tuple(zs))
    b = tm_basis(theta, 1024)
    assert np.linalg.norm(b.gram() - np.eye(b.dim)) < 1e-10
    for f in b.functions:
        assert in_model_space(f, theta)


def test_coordinates_reconstruct_round_trip():
    b = tm_basis(BlaschkeProduct(ZEROS), GRID)
    v = np.arange(4) + 1j
    assert np.allclose(b.coordinates(b.reconstruct(v)), v)
    with pytest.raises(DimensionError):
        b.reconstruct([1, 2])
    with pytest.raises(DimensionError):
        b.coordinates(CircleFunction.constant(1, 64))


def test_evaluate_inside_disk_matches_cauchy_integral():
    b = tm_basis(BlaschkeProduct(ZEROS), GRID)
    v = np.array([1, -1j, 0.5, 2])
    f = b.reconstruct(v)
    lam = 0.3 - 0.4j
    t = grid_points(GRID)
    cauchy = np.mean(f.samples * t / (t - lam))
    assert b.evaluate(v, lam) == pytest.approx(cauchy, abs=1e-12)


def test_kernels_reproduce_and_reject_boundary():
    theta = BlaschkeProduct(ZEROS)
    b = tm_basis(theta, GRID)
    lam = 0.2 + 0.5j
    k, kt = kernels(theta, lam, GRID)
    assert in_model_space(k, theta) and in_model_space(kt, theta)
    v = np.array([0.3, 1j, -2, 1])
    f = b.reconstruct(v)
    assert np.mean(f.samples * np.conj(k.samples)) == pytest.approx(b.evaluate(v, lam), abs=1e-12)
    with pytest.raises(DomainError):
        kernels(theta, 1.0, GRID)


def test_model_project_agrees_with_orthogonal_projection():
    theta = BlaschkeProduct(ZEROS)
    b = tm_basis(theta, GRID)
    rng = np.random.default_rng(0)
    f = LaurentSymbol(-6, rng.standard_normal(13) + 1j * rng.standard_normal(13)).sample(GRID)
    assert np.allclose(model_project(f, b), b.coordinates(f), atol=1e-13)


def test_monomial_model_project_truncates_powers():
    b = tm_basis(BlaschkeProduct.zpow(3), 64)
    f = LaurentSymbol(-2, [1, 2, 3, 4, 5, 6]).sample(64)  # z^-2 .. z^3
    assert np.allclose(model_project(f, b), [3, 4, 5])


def test_inner_multiplication_embedding_is_isometric():
    theta = BlaschkeProduct(ZEROS)
    alpha = BlaschkeProduct((-0.5, 0.1j))
    beta = blaschke_divide(alpha, theta)
    e = inner_mult_embed(alpha, tm_basis(beta, GRID), tm_basis(theta, GRID))
    assert np.allclose(e.matrix.conj().T @ e.matrix, np.eye(2), atol=1e-12)
    with pytest.raises(DomainError):
        inner_mult_embed(theta, tm_basis(beta, GRID), tm_basis(theta, GRID))


def test_monomial_embedding_is_a_shift():
    e = inner_mult_embed(BlaschkeProduct.zpow(3), tm_basis(BlaschkeProduct.zpow(2), 64),
                         tm_basis(BlaschkeProduct.zpow(5), 64))
    expected = np.zeros((5, 2))
    expected[3, 0] = expected[4, 1] = 1
    assert np.array_equal(e.matrix, expected)
