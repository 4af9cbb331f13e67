import cmath
import importlib
import math
import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from postsel import _pykernels, kernels
from postsel.states import coherent

compiled = pytest.importorskip("postsel._kernels", reason="extension not built")


@settings(max_examples=30, deadline=None)
@given(st.floats(0, 1.5), st.floats(-math.pi, math.pi), st.sampled_from([16, 33, 128]))
def test_displace_step_backends_agree(b, phase, dim):
    beta = b * cmath.exp(1j * phase)
    v = np.ascontiguousarray(coherent(0.7, 0.4, dim).amps)
    assert np.allclose(compiled.displace_step(beta, v), _pykernels.displace_step(beta, v), atol=1e-14)


@settings(max_examples=30, deadline=None)
@given(st.floats(-1.5, 1.5), st.floats(0, 2), st.floats(0, 2 * math.pi), st.sampled_from([1, 2, 17, 200]))
def test_squeezed_series_backends_agree(beta, eta, delta, dim):
    a = np.asarray(compiled.squeezed_coherent_series(complex(beta), eta, delta, dim))
    b = _pykernels.squeezed_coherent_series(complex(beta), eta, delta, dim)
    assert np.allclose(a, b, atol=1e-14)


@pytest.mark.skipif(os.environ.get("POSTSEL_PURE") == "1", reason="fallback forced")
def test_default_backend_is_compiled():
    assert kernels.BACKEND == "cython"


def test_pure_python_fallback_selected_by_env():
    code = "from postsel import BACKEND; print(BACKEND)"
    out = subprocess.run([sys.executable, "-c", code], env={"POSTSEL_PURE": "1", "PATH": ""},
                         capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_fallback_module_reloads_cleanly(monkeypatch):
    monkeypatch.setenv("POSTSEL_PURE", "1")
    mod = importlib.reload(kernels)
    try:
        assert mod.BACKEND == "python"
        assert mod.displace_step is _pykernels.displace_step
    finally:
        monkeypatch.delenv("POSTSEL_PURE")
        importlib.reload(kernels)
