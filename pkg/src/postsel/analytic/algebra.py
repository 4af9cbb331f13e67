"""Closed-form matrix elements for superpositions of Gaussian branches.

Everything here is exact algebra on coherent and displaced-squeezed states;
no Fock truncation is involved.
"""
import cmath
import math

import numpy as np


def coherent_gram(gammas):
    """<gamma_j|gamma_k> for a list of coherent amplitudes."""
    g = np.asarray(gammas, dtype=complex)
    return np.exp(-0.5 * np.abs(g[:, None]) ** 2 - 0.5 * np.abs(g[None, :]) ** 2
                  + np.conj(g[:, None]) * g[None, :])


def displaced_coherent(beta, gamma):
    """D(beta)|gamma> = phase |gamma + beta>; returns (phase, gamma + beta)."""
    return cmath.exp(1j * (beta * gamma.conjugate()).imag), gamma + beta


def coherent_superposition_moments(coeffs, gammas):
    """Weight and normalized <a>, <a^2>, <a†a>, <a†^2 a^2> of sum_k c_k |gamma_k>."""
    c = np.asarray(coeffs, dtype=complex)
    g = np.asarray(gammas, dtype=complex)
    rho = np.conj(c)[:, None] * c[None, :] * coherent_gram(g)
    gl, gr = np.conj(g)[:, None], g[None, :]
    weight = rho.sum().real
    return (weight,
            complex((rho * gr).sum() / weight),
            complex((rho * gr ** 2).sum() / weight),
            float((rho * gl * gr).sum().real / weight),
            float((rho * gl ** 2 * gr ** 2).sum().real / weight))


def _laguerre(k, a, x):
    if k == 0:
        return 1.0
    if k == 1:
        return 1.0 + a - x
    if k == 2:
        return 0.5 * (x * x - 2.0 * (a + 2) * x + (a + 1) * (a + 2))
    raise ValueError("only L_0..L_2 are needed")


def displacement_element(m, n, d):
    """<m|D(d)|n> for m, n <= 2."""
    x = abs(d) ** 2
    g = math.exp(-0.5 * x)
    if m >= n:
        return g * math.sqrt(math.factorial(n) / math.factorial(m)) * d ** (m - n) * _laguerre(n, m - n, x)
    return g * math.sqrt(math.factorial(m) / math.factorial(n)) * (-d.conjugate()) ** (n - m) * _laguerre(m, n - m, x)


def _lowered(power, beta, eta, delta):
    """Fock coefficients of (S† a S + beta)^power |0>, power <= 2."""
    e = cmath.exp(1j * delta)
    c, sh = math.cosh(eta), math.sinh(eta)
    if power == 0:
        return [1.0]
    if power == 1:
        return [beta, -e * sh]
    return [beta * beta - e * sh * c, -2.0 * beta * e * sh, math.sqrt(2.0) * e * e * sh * sh]


def squeezed_branch_element(k, l, beta1, beta2, eta, delta):
    """<D(beta1)S(xi)0| a†^k a^l |D(beta2)S(xi)0> with xi = eta e^{i delta}.

    a^l D(b)S|0> = D(b) S (S†aS + b)^l |0>, and S† D(d) S = D(d cosh + conj(d) e^{i delta} sinh),
    so the element reduces to a few Fock matrix elements of one displacement.
    """
    beta1, beta2 = complex(beta1), complex(beta2)
    phase = cmath.exp(0.5 * (-beta1 * beta2.conjugate() + beta1.conjugate() * beta2))
    dd = beta2 - beta1
    e = cmath.exp(1j * delta)
    d = dd * math.cosh(eta) + dd.conjugate() * e * math.sinh(eta)
    q = _lowered(k, beta1, eta, delta)
    p = _lowered(l, beta2, eta, delta)
    total = 0j
    for i, qi in enumerate(q):
        for j, pj in enumerate(p):
            total += complex(qi).conjugate() * pj * displacement_element(i, j, d)
    return phase * total


def branch_sum(coeffs, element):
    """sum_jk conj(c_j) c_k element(j, k)."""
    return sum(complex(cj).conjugate() * ck * element(j, k)
               for j, cj in enumerate(coeffs) for k, ck in enumerate(coeffs))
