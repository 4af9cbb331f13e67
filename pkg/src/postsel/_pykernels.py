"""Pure numpy implementations of the inner loops (fallback when the extension is absent)."""
import numpy as np


def displace_step(beta, v):
    """One normal-ordered displacement pass on a truncated vector.

    D(beta) = exp(-|beta|^2/2) exp(beta a†) exp(-conj(beta) a).  The lowering
    series is exact on the truncated space; the raising series drops whatever
    is pushed beyond the cutoff, so the result is the projection of D(beta)v.
    """
    v = np.asarray(v, dtype=np.complex128)
    dim = v.shape[0]
    beta = complex(beta)
    n = np.arange(dim, dtype=float)

    w = v.copy()
    c = np.ones(dim, dtype=np.complex128)
    lower = -beta.conjugate()
    for k in range(1, dim):
        # c[j] holds the k-th coefficient for output index j
        c = c[: dim - k] * (lower * np.sqrt(n[: dim - k] + k) / k)
        if not c.any():
            break
        w[: dim - k] += c * v[k:]

    out = w.copy()
    d = np.ones(dim, dtype=np.complex128)
    for k in range(1, dim):
        # d[j] is the coefficient for output index m = j + k
        d = d[1:] * (beta * np.sqrt(n[k:] - k + 1) / k)
        if not d.any():
            break
        out[k:] += d * w[: dim - k]
    return out * np.exp(-0.5 * abs(beta) ** 2)


def squeezed_coherent_series(beta, eta, delta, dim):
    """Amplitudes <n|D(beta)S(xi)|0> for n < dim, xi = eta e^{i delta}.

    Runs the Hermite three-term recurrence on the rescaled sequence
    h_n = u^n H_n(z) / sqrt(n!), u^2 = e^{i delta} tanh(eta) / 2, so that no
    factorials or branch choices appear and eta = 0 is regular.
    """
    beta = complex(beta)
    ch, sh, th = np.cosh(eta), np.sinh(eta), np.tanh(eta)
    e = np.exp(1j * delta)
    gamma = beta * ch + beta.conjugate() * e * sh
    lead = gamma / ch
    back = e * th
    pref = np.exp(-0.5 * abs(beta) ** 2 - 0.5 * beta.conjugate() ** 2 * e * th) / np.sqrt(ch)
    out = np.empty(dim, dtype=np.complex128)
    out[0] = 1.0
    if dim > 1:
        out[1] = lead
    for n in range(1, dim - 1):
        out[n + 1] = (lead * out[n] - np.sqrt(n) * back * out[n - 1]) / np.sqrt(n + 1)
    return pref * out
