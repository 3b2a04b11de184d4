import math

import pytest

from kfseq.golden import GoldenRational, parse_exact
from kfseq.partition import counts
from kfseq.qmc import (
    CATALOG,
    birkhoff_average,
    birkhoff_errors,
    get_integrand,
    qmc_integrate,
    sample_start,
    source_points,
)

T20 = counts(20).total


def test_catalog_integrals():
    for f in CATALOG.values():
        # midpoint rule on a fine grid as an independent check of the constants
        m = 200000
        approx = math.fsum(f((j + 0.5) / m) for j in range(m)) / m
        assert approx == pytest.approx(f.exact_integral, abs=1e-6), f.id


def test_step_is_flagged_discontinuous():
    assert not CATALOG["step"].continuous
    assert all(f.continuous for k, f in CATALOG.items() if k != "step")


def test_unknown_integrand():
    with pytest.raises(KeyError):
        get_integrand("cube")
    with pytest.raises(KeyError):
        qmc_integrate("cube", 10)


@pytest.mark.parametrize("source", ["xi", "orbit:0", "orbit:1/2", "random:7"])
@pytest.mark.parametrize("N", [1, 5, 1000])
def test_constant_is_exact(source, N):
    assert qmc_integrate("one", N, source).estimate == 1.0


def test_constant_exact_along_any_orbit():
    assert birkhoff_average("random:3", "one", 777).estimate == 1.0


def test_linear_and_quadratic_near_exact():
    tol = 10 * math.log(T20) / T20
    for fid in ("x", "x2", "sin2pi"):
        res = qmc_integrate(fid, T20)
        assert res.N == T20
        assert res.abs_error < tol, fid


@pytest.mark.parametrize("fid", sorted(CATALOG))
def test_birkhoff_from_zero_is_bit_identical(fid):
    a = birkhoff_average(parse_exact("0"), fid, 3000).estimate
    b = qmc_integrate(fid, 3000, "xi").estimate
    assert a == b


def test_sample_start_is_dyadic_and_seeded():
    x = sample_start(4)
    assert isinstance(x, GoldenRational)
    assert 0 <= x < 1
    assert x == sample_start(4)
    assert x != sample_start(5)


def test_birkhoff_errors_single_pass_matches_direct():
    errs = birkhoff_errors("random:2", "x2", [10, 100, 1000])
    for n, e in errs.items():
        assert e == birkhoff_average("random:2", "x2", n).abs_error


def test_birkhoff_decay_example():
    errs = birkhoff_errors("random:1", "x2", [1000, 20000])
    assert errs[20000] < errs[1000]


def test_random_source_is_seeded():
    assert list(source_points("random:9", 5)) == list(source_points("random:9", 5))


def test_bad_arguments():
    with pytest.raises(ValueError):
        qmc_integrate("x", 0)
    with pytest.raises(ValueError):
        qmc_integrate("x", 10, "sobol")
    with pytest.raises(ValueError):
        birkhoff_average("0", "x", 0)
