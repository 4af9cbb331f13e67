import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from postsel.errors import DegenerateCat, TruncationOverflow
from postsel.fock import displace, expect_number
from postsel.observables import g2, mandel_q
from postsel.states import (PointerKind, PointerSpec, auto_dim, cat, coherent, hermite,
                            squeezed_coherent, squeezed_coherent_amplitude, squeezed_vacuum)


def test_coherent_vacuum_and_poisson():
    assert coherent(0, 1.0, 16)[0] == 1
    p = coherent(1, math.pi / 3, 64).probabilities()
    assert p[0] == pytest.approx(math.exp(-1), abs=1e-12)
    assert g2(coherent(1.7, 0)) == pytest.approx(1, abs=1e-9)


def test_squeezed_vacuum_moments():
    assert squeezed_vacuum(0, 0.3, 16)[0] == pytest.approx(1)
    v = squeezed_vacuum(0.5, math.pi / 3)
    assert expect_number(v) == pytest.approx(math.sinh(0.5) ** 2, abs=1e-10)
    assert g2(v) == pytest.approx(3 + 1 / math.sinh(0.5) ** 2, rel=1e-8)
    assert np.all(v.amps[1::2] == 0)


def test_cat_examples():
    assert mandel_q(cat(0.5, math.pi / 3, math.pi / 2)) == pytest.approx(0, abs=1e-9)
    x = math.exp(-0.18)
    odd = cat(0.3, 0, math.pi)
    assert g2(odd) == pytest.approx(1 - 4 * x / (1 + x) ** 2, rel=1e-8)
    assert g2(odd) < 1
    assert np.max(np.abs(cat(0.3, 0, 0).amps[1::2])) < 1e-14


def test_degenerate_cat_rejected():
    with pytest.raises(DegenerateCat):
        cat(0.0, 0.0, math.pi)


def test_pointer_spec_validation():
    with pytest.raises(ValueError):
        PointerSpec(PointerKind.COHERENT, r=1, eta=0.5)
    with pytest.raises(ValueError):
        PointerSpec.squeezed(4.5)
    assert PointerSpec.cat(1, 0.5, 0.2).alpha == pytest.approx(complex(math.cos(0.5), math.sin(0.5)))


def test_auto_dim_doubles_until_it_fits():
    tried = []

    def builder(d):
        tried.append(d)
        if d < 512:
            raise TruncationOverflow("too small")
        return d

    assert auto_dim(builder, None) == 512
    assert tried == [128, 256, 512]


def test_auto_dim_gives_up_at_cap():
    def builder(d):
        raise TruncationOverflow("never fits")

    with pytest.raises(TruncationOverflow):
        auto_dim(builder, None)


def test_env_overrides_default_dim(monkeypatch):
    monkeypatch.setenv("POSTSEL_DIM", "48")
    assert coherent(0.5).dim == 48


def test_large_squeezing_needs_larger_basis():
    assert squeezed_vacuum(2.0).dim > 128


def test_hermite_low_orders():
    z = 0.3 + 0.4j
    assert hermite(0, z) == 1
    assert hermite(2, z) == pytest.approx(4 * z * z - 2)
    assert hermite(3, z) == pytest.approx(8 * z ** 3 - 12 * z)


def test_squeezed_amplitude_examples():
    assert squeezed_coherent_amplitude(0, 0, 0.7, 0.2) == pytest.approx(math.cosh(0.7) ** -0.5)
    assert abs(squeezed_coherent_amplitude(3, 0, 0.7, 0.2)) < 1e-14
    oracle = displace(0.5, squeezed_vacuum(0.5, math.pi / 3))
    assert squeezed_coherent_amplitude(2, 0.5, 0.5, math.pi / 3) == pytest.approx(oracle[2], abs=1e-9)


def test_squeezed_amplitude_high_order_is_finite():
    a = squeezed_coherent_amplitude(400, 1.0, 1.5, 0.3)
    assert math.isfinite(abs(a)) and abs(a) < 1


@settings(max_examples=30, deadline=None)
@given(st.floats(-1.5, 1.5), st.floats(0, 1.2), st.floats(0, 2 * math.pi))
def test_displaced_squeezed_matches_oracle(beta, eta, delta):
    direct = squeezed_coherent(beta, eta, delta, 256)
    oracle = displace(beta, squeezed_vacuum(eta, delta, 256))
    assert np.allclose(direct.amps, oracle.amps, atol=1e-11)


@settings(max_examples=30, deadline=None)
@given(st.floats(0, 2), st.floats(0, 2 * math.pi), st.floats(0, 2 * math.pi))
def test_cat_normalized(r, delta, omega):
    if 2 * (1 + math.exp(-2 * r * r) * math.cos(omega)) < 1e-6:
        return
    assert cat(r, delta, omega).norm() == pytest.approx(1, abs=1e-10)
