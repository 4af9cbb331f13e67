"""Squeezed-vacuum pointer S(xi)|0>, xi = eta e^{i delta}."""
import cmath
import math

from ..postselect import weak_value
from ..states import hermite
from .algebra import branch_sum, squeezed_branch_element
from .quantities import Quantity


def _parts(spec, cfg):
    eta, delta = spec.eta, spec.delta
    w = weak_value(cfg)
    s = cfg.s
    ch, sh = math.cosh(eta), math.sinh(eta)
    e = cmath.exp(1j * delta)
    overlap = math.exp(-0.5 * s * s * abs(ch + e * sh) ** 2)
    return eta, delta, w, s, ch, sh, e, overlap


# -- published forms -------------------------------------------------------

def kappa(spec, cfg, phi=None):
    """kappa = sqrt(2) [1 + |w|^2 + (1 - |w|^2) e^{-s^2 |cosh + e^{i delta} sinh|^2 / 2}]^{-1/2}."""
    _, _, w, _, _, _, _, g = _parts(spec, cfg)
    return math.sqrt(2) / math.sqrt(1 + abs(w) ** 2 + (1 - abs(w) ** 2) * g)


def amplitude_literal(n, beta, eta, delta):
    """<n|beta, xi> with the Hermite polynomial evaluated directly (principal branches)."""
    e = cmath.exp(1j * delta)
    th = math.tanh(eta)
    chi = beta * math.cosh(eta) + beta.conjugate() * e * math.sinh(eta)
    pref = cmath.exp(-0.5 * abs(beta) ** 2 - 0.5 * beta.conjugate() ** 2 * e * th) / math.sqrt(math.cosh(eta))
    scale = (0.5 * e * th) ** (n / 2) / math.sqrt(math.factorial(n))
    return pref * scale * hermite(n, chi * (e * math.sinh(2 * eta)) ** -0.5)


def mean_n_literal(spec, cfg, phi=None):
    eta, delta, w, s, _, sh, _, g = _parts(spec, cfg)
    big_i = g * (sh ** 2 + s * s / 4 - s * s / 2 * (1 + 1j * math.sin(delta) * math.sinh(2 * eta)))
    k2 = kappa(spec, cfg) ** 2
    return k2 / 4 * (2 * (1 + abs(w) ** 2) * (s * s / 4 + sh ** 2)
                     + 2 * ((1 - w) * (1 + w).conjugate() * big_i).real)


def xphi_literal(spec, cfg, phi):
    # the first two terms cancel as printed; e^{-+i theta} uses the preselection angle
    eta, _, w, s, ch, _, e, g = _parts(spec, cfg)
    k2 = kappa(spec, cfg) ** 2
    bracket = ch ** 2 + 0.5 * e * math.sinh(2 * eta) - 0.5
    th = cfg.theta
    body = (math.cos(phi) * abs(1 + w) ** 2 - math.cos(phi) * abs(1 + w) ** 2
            + 2 * g * (cmath.exp(-1j * th) * (1 + w) * (1 - w).conjugate() * bracket).real
            - 2 * g * (cmath.exp(1j * th) * (1 + w).conjugate() * (1 - w) * bracket).real)
    return s * k2 / (4 * math.sqrt(2)) * body


def _ii_literal(spec, cfg):
    eta, delta, w, s, ch, sh, e, g = _parts(spec, cfg)
    k2 = kappa(spec, cfg) ** 2
    em = cmath.exp(-1j * delta)
    s2h = math.sinh(2 * eta)
    # unbalanced closing brace read as ending the bracket before the exponential
    iii = (s * s / 4 + s * s * (0.5 * em * s2h + sh ** 2)
           + s * s * (ch + e * sh) ** 2 * cmath.exp(-2j * delta) * sh ** 2
           - em * 0.5 * s2h) * g
    diag = s * s / 4 - 0.5 * s2h * em
    return k2 / 4 * (diag * abs(1 + w) ** 2 + diag * abs(1 - w) ** 2 + (1 - abs(w) ** 2) * iii)


def x2_literal(spec, cfg, phi):
    ii = _ii_literal(spec, cfg)
    return 0.5 * (2 * (ii * cmath.exp(-2j * phi)).real + 2 * mean_n_literal(spec, cfg) + 1)


def init_g2(spec, cfg=None, phi=None):
    return 3 + 1 / math.sinh(spec.eta) ** 2


def init_q(spec, cfg=None, phi=None):
    return 1 + 2 * math.sinh(spec.eta) ** 2


def init_sphi(spec, cfg, phi):
    eta, delta = spec.eta, spec.delta
    return 0.5 * (math.cosh(eta) ** 2 - math.sinh(2 * eta) * math.cos(2 * phi - delta)
                  + math.sinh(eta) ** 2) - 0.5


def init_sphi_squeezed_axis(eta):
    """S at phi = delta/2, the squeezed quadrature: -(1 - e^{-2 eta})/2."""
    return -0.5 * (1 - math.exp(-2 * eta))


def init_sphi_stretched_axis(eta):
    """S at phi = delta/2 + pi/2: (e^{2 eta} - 1)/2."""
    return 0.5 * math.expm1(2 * eta)


# -- corrected forms -------------------------------------------------------

def _cross_i(spec, cfg):
    """Corrected appendix quantity I: <xi,s/2| a†a |xi,-s/2>, which is real."""
    _, delta, _, s, ch, sh, e, g = _parts(spec, cfg)
    return g * (sh ** 2 - s * s / 4 - s * s * sh * (ch * math.cos(delta) + sh)
                - s * s * sh ** 2 * abs(ch + e * sh) ** 2)


def mean_n(spec, cfg, phi=None):
    _, _, w, s, _, sh, _, _ = _parts(spec, cfg)
    k2 = kappa(spec, cfg) ** 2
    return k2 / 4 * (2 * (1 + abs(w) ** 2) * (s * s / 4 + sh ** 2)
                     + 2 * ((1 - w) * (1 + w).conjugate() * _cross_i(spec, cfg)).real)


def xphi(spec, cfg, phi):
    eta, _, w, s, ch, _, e, g = _parts(spec, cfg)
    k2 = kappa(spec, cfg) ** 2
    bracket = ch ** 2 + 0.5 * e * math.sinh(2 * eta) - 0.5
    rot = cmath.exp(-1j * phi)
    body = (math.cos(phi) * (abs(1 + w) ** 2 - abs(1 - w) ** 2)
            + 2 * g * (rot * (1 + w) * (1 - w).conjugate() * bracket).real
            - 2 * g * (rot * (1 + w).conjugate() * (1 - w) * bracket).real)
    return s * k2 / (4 * math.sqrt(2)) * body


def mean_a2(spec, cfg, phi=None):
    """Corrected II = <a^2>: phases e^{+i delta} and a factor 2 on the cross term."""
    eta, _, w, s, ch, sh, e, g = _parts(spec, cfg)
    k2 = kappa(spec, cfg) ** 2
    s2h = math.sinh(2 * eta)
    cross = g * (s * s / 4 + s * s * (0.5 * e * s2h + sh ** 2)
                 + s * s * (ch + e.conjugate() * sh) ** 2 * e * e * sh ** 2 - 0.5 * e * s2h)
    diag = s * s / 4 - 0.5 * s2h * e
    return k2 / 4 * (diag * (abs(1 + w) ** 2 + abs(1 - w) ** 2) + 2 * (1 - abs(w) ** 2) * cross)


def x2(spec, cfg, phi):
    return 0.5 * (2 * (mean_a2(spec, cfg) * cmath.exp(-2j * phi)).real + 2 * mean_n(spec, cfg) + 1)


# -- branch algebra --------------------------------------------------------
# Independent route through Fock elements of one displacement in the squeezed
# frame.  The published text gives no <a†^2 a^2>, so g2 relies on this.

def _branches(cfg):
    w = weak_value(cfg)
    return (0.5 * (1 + w), 0.5 * (1 - w)), (cfg.s / 2, -cfg.s / 2)


def branch_moment(spec, cfg, k, l):
    """Normalized <a†^k a^l> of the final squeezed pointer."""
    coeffs, shifts = _branches(cfg)

    def element(kk, ll):
        return lambda j, m: squeezed_branch_element(kk, ll, shifts[j], shifts[m], spec.eta, spec.delta)

    return branch_sum(coeffs, element(k, l)) / branch_sum(coeffs, element(0, 0)).real


def kappa_branch(spec, cfg, phi=None):
    coeffs, shifts = _branches(cfg)
    weight = branch_sum(coeffs, lambda j, m: squeezed_branch_element(
        0, 0, shifts[j], shifts[m], spec.eta, spec.delta)).real
    return 1 / math.sqrt(weight)


def a2a2(spec, cfg, phi=None):
    return branch_moment(spec, cfg, 2, 2).real


def g2(spec, cfg):
    return a2a2(spec, cfg) / mean_n(spec, cfg) ** 2


LITERAL = {
    Quantity.SqNorm: kappa,
    Quantity.SqMeanN: mean_n_literal,
    Quantity.SqXphi: xphi_literal,
    Quantity.SqX2: x2_literal,
    Quantity.SqInitG2: init_g2,
    Quantity.SqInitQ: init_q,
    Quantity.SqInitSphi: init_sphi,
}

CORRECTED = {
    Quantity.SqNorm: kappa,
    Quantity.SqMeanN: mean_n,
    Quantity.SqA2A2: a2a2,
    Quantity.SqXphi: xphi,
    Quantity.SqX2: x2,
    Quantity.SqInitG2: init_g2,
    Quantity.SqInitQ: init_q,
    Quantity.SqInitSphi: init_sphi,
}
