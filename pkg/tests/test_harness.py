import json

import numpy as np
import pytest

from modelspace.errors import ConfigurationError, DomainError, UnknownIdentityError
from modelspace.harness import (
    FIXTURES,
    REGISTRY,
    IdentityReport,
    RunConfig,
    fixture_suite,
    random_blaschke_pair,
    random_symbol,
    registry_ids,
    run_suite,
    verify_corollary_5_3,
    verify_identity,
)
from modelspace.model_space import BlaschkeProduct, LaurentSymbol, divides

Z = BlaschkeProduct.zpow

LISTED_IDS = [
    "pairing", "adj1", "adj2", "adj3", "adj4", "dia-sharp", "box-sharp", "q-proj", "q-ker", "q-ran",
    "prop2-5", "c-split-def", "prop3-1a", "prop3-1b", "ker-theta", "ker-split", "repro", "repro-conj",
    "prop3-2a", "prop3-2b", "sym1", "sym2", "sym3", "sym1a", "sym2a", "sym3a", "cor5-3-1", "cor5-3-2",
    "naive-csym", "p-theta-fact", "p-theta-conj", "hank-fact-left", "hank-fact-right", "han1", "han2",
    "han3", "cor7-3", "eq7-8",
]


def test_registry_contains_every_listed_id():
    ids = set(registry_ids())
    assert set(LISTED_IDS) <= ids
    assert any(i.startswith("fixture-6-") for i in ids)
    assert any(i.startswith("fixture-8-") for i in ids)
    for ident in REGISTRY.values():
        assert ident.statement.strip()


def test_run_config_validation():
    with pytest.raises(ConfigurationError):
        RunConfig(grid_size=1000)
    with pytest.raises(ConfigurationError):
        RunConfig(tolerance_monomial=0)
    with pytest.raises(ConfigurationError):
        RunConfig(trials=0)


def test_sym1_example():
    rng = np.random.default_rng(11)
    phi = LaurentSymbol(-4, rng.uniform(-1, 1, 7) + 1j * rng.uniform(-1, 1, 7))  # band [-4, 2]
    r = verify_identity("sym1", Z(5), Z(3), phi)
    assert r.passed and r.residual <= 1e-12


def test_naive_symmetry_counterexample():
    r = verify_identity("naive-csym")
    assert r.residual == pytest.approx(2.0, abs=1e-12)
    assert not r.passed and not r.expect_equal and r.ok
    assert r.extras["A"] == [[0.0, -1.0], [1.0, 0.0]]


def test_han1_degenerates_when_alpha_is_theta():
    for theta in (Z(4), BlaschkeProduct((0.2, -0.4j, 0.5))):
        r = verify_identity("han1", theta, theta)
        assert r.passed and r.residual <= 1e-12


def test_errors():
    with pytest.raises(UnknownIdentityError):
        verify_identity("sym9")
    with pytest.raises(DomainError):
        verify_identity("sym1", Z(5), BlaschkeProduct((0.5,)))
    with pytest.raises(DomainError):
        verify_identity("cor5-3-1", Z(4), Z(4))
    with pytest.raises(ConfigurationError):
        verify_corollary_5_3("sideways", Z(5), Z(3))


def test_report_json_and_pass_invariant():
    r = verify_identity("sym2", Z(4), Z(1), config=RunConfig(seed=3))
    data = json.loads(r.dumps())
    assert {"id", "params", "residual", "tol", "pass"} <= set(data)
    assert data["pass"] == (data["residual"] <= data["tol"])
    assert data["params"]["seed"] == 3 and data["params"]["grid"] == 1024


def test_pass_flag_follows_tolerance():
    r = IdentityReport("x", {}, 0.5, 1e-3, False)
    assert not r.ok
    assert IdentityReport("x", {}, 0.5, 1e-3, False, expect_equal=False).ok
    assert not IdentityReport("x", {}, 1e-14, 1e-3, True, expect_equal=False).ok


def test_determinism():
    cfg = RunConfig(seed=5)
    theta, alpha = BlaschkeProduct((0.1, 0.4j, -0.3)), BlaschkeProduct((0.4j,))
    for ident in ("sym3", "han2", "q-ker", "cor5-3-2", "ker-split"):
        a = verify_identity(ident, theta, alpha, config=cfg).dumps()
        b = verify_identity(ident, theta, alpha, config=cfg).dumps()
        assert a == b
    other = verify_identity("sym3", theta, alpha, config=RunConfig(seed=6)).dumps()
    assert other != verify_identity("sym3", theta, alpha, config=cfg).dumps()


def test_blaschke_path_records_grid_refinement():
    r = verify_identity("han3", BlaschkeProduct((0.5, -0.2j, 0.7)), BlaschkeProduct((0.7,)))
    steps = r.extras["refinement"]
    assert len(steps) >= 2 and steps[-1][0] == r.params["grid"]
    assert r.passed and r.tolerance == 1e-8


def test_sym3_runs_both_normalisations():
    r = verify_identity("sym3", Z(6), Z(2))
    assert r.extras["raw"] <= 1e-12 and r.extras["normalised"] <= 1e-12


def test_eq7_8_agrees_with_its_two_halves():
    theta, alpha = BlaschkeProduct((0.3, -0.6j, 0.2 + 0.2j)), BlaschkeProduct((-0.6j,))
    phi = LaurentSymbol(-2, [1, 0.5j, -1, 2, 0.3])
    r = verify_identity("eq7-8", theta, alpha, phi)
    assert r.extras["operator_side"] <= 1e-9 and r.extras["hankel_side"] <= 1e-9
    for part in ("han2", "cor7-3"):
        assert verify_identity(part, theta, alpha, phi).passed


def test_pair_identities_record_swapped_kernel_order():
    r = verify_identity("q-ker", Z(5), Z(3))
    assert r.passed
    assert r.extras["swapped_order_residual"] > 0.1


def test_corollary_examples_with_displayed_symbols():
    rng = np.random.default_rng(6)
    a = {n: complex(*rng.uniform(-1, 1, 2)) for n in range(-4, 3)}
    first = LaurentSymbol.from_dict({-4: a[-4], -3: a[-3], -2: a[-2]})
    second = LaurentSymbol.from_dict({0: a[0], 1: a[1], 2: a[2]})
    assert verify_corollary_5_3("class1", Z(5), Z(3), phi=first).residual <= 1e-12
    assert verify_corollary_5_3("class2", Z(5), Z(3), phi=second).residual <= 1e-12
    # exchanged, they fail
    assert verify_corollary_5_3("class1", Z(5), Z(3), phi=second).residual > 1e-3
    assert verify_corollary_5_3("class2", Z(5), Z(3), phi=first).residual > 1e-3
    g = verify_corollary_5_3("generic", Z(5), Z(3))
    assert g.residual > 1e-3 and g.ok


def test_fixture_suite():
    reports = fixture_suite(RunConfig(seed=2))
    assert {r.identity_id for r in reports} == set(FIXTURES)
    assert len(reports) == 12
    for r in reports:
        assert r.passed, r.dumps()
        assert r.extras["entrywise_max"] <= 1e-12


def test_random_helpers():
    rng = np.random.default_rng(0)
    s = random_symbol(rng, 3)
    assert s.lo >= -3 and s.hi <= 3
    assert np.all(np.abs(s.coeffs.real) <= 1) and np.all(np.abs(s.coeffs.imag) <= 1)
    for _ in range(20):
        theta, alpha = random_blaschke_pair(rng)
        assert 2 <= theta.degree <= 6 and 1 <= alpha.degree < theta.degree
        assert max(abs(z) for z in theta.zeros) <= 0.8
        assert divides(alpha, theta)


def test_suite_has_no_failures():
    reports = run_suite(RunConfig(trials=2))
    bad = [r.dumps() for r in reports if not r.ok]
    assert not bad
    ids = [r.identity_id for r in reports]
    assert ids == sorted(ids)
