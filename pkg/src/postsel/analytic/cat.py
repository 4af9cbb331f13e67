"""Cat pointer K(|alpha> + e^{i omega}|-alpha>), alpha = r e^{i delta}.

The final pointer is four coherent components, so the corrected moments are
exact sums over a 4x4 Gram matrix.  ``*_literal`` transcribes the printed
expressions; the unsuffixed versions carry one-symbol fixes.  The four-component
sums (:func:`moments`) give an independent route used to cross-check both.
"""
import cmath
import math

from ..postselect import weak_value
from .algebra import coherent_superposition_moments, displaced_coherent
from .quantities import Quantity


def _parts(spec, cfg):
    a = spec.alpha
    w = weak_value(cfg)
    x = math.exp(-2 * abs(a) ** 2)
    k2 = 1 / (2 + 2 * x * math.cos(spec.omega))
    return a, w, cfg.s, x, k2, cmath.exp(1j * spec.omega)


def norm_inv2(spec, cfg, phi=None):
    """kappa^-2, the branch weight ||Phi_w||^2 = success / cos^2(theta/2)."""
    a, w, s, _, k2, eo = _parts(spec, cfg)
    cross = (1 - w) * (1 + w.conjugate()) * (eo * math.exp(-0.5 * abs(2 * a + s) ** 2)
                                           + eo.conjugate() * math.exp(-0.5 * abs(2 * a - s) ** 2))
    return (0.5 * (1 + abs(w) ** 2)
            + k2 * (1 - abs(w) ** 2) * math.cos(2 * s * a.imag) * math.exp(-s * s / 2)
            + 0.5 * k2 * cross.real)


def _pref(spec, cfg):
    _, _, _, _, k2, _ = _parts(spec, cfg)
    return k2 / (4 * norm_inv2(spec, cfg))


# -- published appendix forms ----------------------------------------------

def mean_n(spec, cfg, phi=None):
    a, w, s, x, _, eo = _parts(spec, cfg)
    ap, am = a + s / 2, a - s / 2
    plus = (abs(ap) ** 2 + abs(-a + s / 2) ** 2
            + eo * ap.conjugate() * (-a + s / 2) * x
            + eo.conjugate() * (-a + s / 2).conjugate() * ap * x)
    minus = (abs(am) ** 2 + abs(ap) ** 2
             - eo * am.conjugate() * ap * x - eo.conjugate() * ap.conjugate() * am * x)
    inner = (eo * abs(ap) ** 2 * math.exp(-2 * abs(ap) ** 2)
             + eo.conjugate() * math.exp(-2 * abs(am) ** 2) * abs(am) ** 2
             - 2 * math.exp(-s * s / 2) * (cmath.exp(2j * s * a.imag) * ap.conjugate() * am).real)
    body = (abs(1 + w) ** 2 * plus + abs(1 - w) ** 2 * minus
            - 2 * (inner * (1 - w) * (1 + w).conjugate()).real)
    return (_pref(spec, cfg) * body).real


def _a2a2_body(spec, cfg, last_power):
    a, w, s, x, _, eo = _parts(spec, cfg)
    ap, am = a + s / 2, a - s / 2
    ac = a.conjugate()
    plus = (abs(ap) ** 4 + abs(-a + s / 2) ** 4
            + eo * (ac + s / 2) ** 2 * (-a + s / 2) ** 2 * x
            + eo.conjugate() * (-ac + s / 2) ** 2 * ap ** 2 * x)
    minus = (abs(am) ** 4 + abs(ap) ** 4
             + eo * x * (ac - s / 2) ** 2 * ap ** 2
             + eo.conjugate() * x * (ac + s / 2) ** last_power * am ** 2)
    inner = (eo * abs(ap) ** 4 * math.exp(-2 * abs(ap) ** 2)
             + eo.conjugate() * abs(am) ** 4 * math.exp(-2 * abs(am) ** 2)
             + 2 * math.exp(-s * s / 2) * (cmath.exp(2j * s * a.imag) * (ac + s / 2) ** 2 * am ** 2).real)
    body = (abs(1 + w) ** 2 * plus + abs(1 - w) ** 2 * minus
            + 2 * (inner * (1 - w) * (1 + w).conjugate()).real)
    return (_pref(spec, cfg) * body).real


def a2a2_literal(spec, cfg, phi=None):
    # last term printed with a single power of (alpha* + s/2)
    return _a2a2_body(spec, cfg, 1)


def a2a2(spec, cfg, phi=None):
    return _a2a2_body(spec, cfg, 2)


def _a_body(spec, cfg, angle):
    a, w, s, x, _, _ = _parts(spec, cfg)
    ep = cmath.exp(1j * angle)
    em = ep.conjugate()
    sn, cs = math.sin(2 * s * a.imag), math.cos(2 * s * a.imag)
    gp = math.exp(-0.5 * abs(2 * a + s) ** 2)
    gm = math.exp(-0.5 * abs(2 * a - s) ** 2)
    d = math.exp(-0.5 * s * s)
    body = (abs(1 + w) ** 2 * (s + ep * (-a + s / 2) * x + em * (a + s / 2) * x)
            + abs(1 - w) ** 2 * (-s - ep * (a + s / 2) * x + em * (a - s / 2) * x)
            + (1 - w) * (1 + w).conjugate() * ((2j * a * sn - s * cs) * d
                                               - ep * (a + s / 2) * gp + em * (a - s / 2) * gm)
            + (1 - w).conjugate() * (1 + w) * ((-2j * a * sn + s * cs) * d
                                               + ep * (-a + s / 2) * gm + em * (a + s / 2) * gp))
    return _pref(spec, cfg) * body


def a_literal(spec, cfg, phi):
    # the printed e^{+-i phi} factors read with phi the quadrature angle
    return _a_body(spec, cfg, phi)


def mean_a(spec, cfg, phi=None):
    """<a>: the e^{+-i phi} factors carry the cat phase omega."""
    return _a_body(spec, cfg, spec.omega)


def xphi(spec, cfg, phi):
    return math.sqrt(2) * (mean_a(spec, cfg) * cmath.exp(-1j * phi)).real


def _a2_body(spec, cfg, damp_exp):
    a, w, s, x, _, eo = _parts(spec, cfg)
    ap, am = a + s / 2, a - s / 2
    sn, cs = math.sin(2 * s * a.imag), math.cos(2 * s * a.imag)
    base = 2 * math.exp(-s * s * damp_exp) * (cs * (a * a + s * s / 4) - 1j * s * a * sn)
    body = (abs(1 + w) ** 2 * (2 * (a * a + s * s / 4) + eo * x * (-a + s / 2) ** 2
                               + eo.conjugate() * x * ap ** 2)
            + abs(1 - w) ** 2 * (2 * (a * a + s * s / 4) + eo * x * ap ** 2
                                 + eo.conjugate() * x * am ** 2)
            + (1 - w) * (1 + w).conjugate() * (base + eo.conjugate() * am ** 2 * math.exp(-2 * abs(am) ** 2)
                                               + eo * ap ** 2 * math.exp(-2 * abs(ap) ** 2))
            + (1 + w) * (1 - w).conjugate() * (base + eo * am ** 2 * math.exp(-2 * abs(am) ** 2)
                                               + eo.conjugate() * ap ** 2 * math.exp(-2 * abs(ap) ** 2)))
    return _pref(spec, cfg) * body


def a2_literal(spec, cfg, phi=None):
    return _a2_body(spec, cfg, 0.25)


def a2(spec, cfg, phi=None):
    """<a^2> with the branch-overlap damping e^{-s^2/2} in place of e^{-s^2/4}."""
    return _a2_body(spec, cfg, 0.5)


# -- four-component superposition -------------------------------------------

def components(spec, cfg):
    """Coefficients and amplitudes of the unnormalized final pointer, without K."""
    a, w, s, _, _, eo = _parts(spec, cfg)
    coeffs, gammas = [], []
    for branch, beta in ((0.5 * (1 + w), s / 2), (0.5 * (1 - w), -s / 2)):
        for amp, gamma in ((1.0, a), (eo, -a)):
            phase, shifted = displaced_coherent(complex(beta), complex(gamma))
            coeffs.append(branch * amp * phase)
            gammas.append(shifted)
    return coeffs, gammas


def moments(spec, cfg):
    """(kappa^-2, <a>, <a^2>, <a†a>, <a†^2 a^2>) of the normalized final pointer."""
    coeffs, gammas = components(spec, cfg)
    weight, m_a, m_a2, m_n, m_a2a2 = coherent_superposition_moments(coeffs, gammas)
    return weight * _parts(spec, cfg)[4], m_a, m_a2, m_n, m_a2a2


def norm_inv2_sum(spec, cfg, phi=None):
    return moments(spec, cfg)[0]


# -- initial cat state -------------------------------------------------------

def init_q(spec, cfg=None, phi=None):
    r2 = spec.r ** 2
    c = math.cos(spec.omega)
    return 4 * r2 * math.exp(-2 * r2) * c / (1 - math.exp(-4 * r2) * c * c)


def init_g2(spec, cfg=None, phi=None):
    r2 = spec.r ** 2
    xc = math.exp(-2 * r2) * math.cos(spec.omega)
    return 1 + 4 * xc / (1 - xc) ** 2


def init_sphi_literal(spec, cfg, phi):
    r2, om = spec.r ** 2, spec.omega
    x = math.exp(-2 * r2)
    inner = (math.cos(2 * phi) * (math.exp(2 * r2) + math.cos(om)) ** 2
             + math.sin(om) ** 2 * math.cos(phi) ** 2 - 1)
    return r2 * math.exp(-4 * r2) / (1 + x * math.cos(om)) ** 2 * (1 + inner)


def init_sphi(spec, cfg, phi):
    """Corrected: e^{4r^2} - 1 in place of the bare 1, and cos 2(phi - delta) on the bracket."""
    r2, om = spec.r ** 2, spec.omega
    x = math.exp(-2 * r2)
    bracket = (math.expm1(4 * r2)
               + math.cos(2 * (phi - spec.delta)) * ((math.exp(2 * r2) + math.cos(om)) ** 2 + math.sin(om) ** 2))
    return r2 * math.exp(-4 * r2) / (1 + x * math.cos(om)) ** 2 * bracket


LITERAL = {
    Quantity.CatNorm: norm_inv2,
    Quantity.CatMeanN: mean_n,
    Quantity.CatA2A2: a2a2_literal,
    Quantity.CatAmean: a_literal,
    Quantity.CatA2: a2_literal,
    Quantity.CatInitQ: init_q,
    Quantity.CatInitG2: init_g2,
    Quantity.CatInitSphi: init_sphi_literal,
}

CORRECTED = {
    Quantity.CatNorm: norm_inv2,
    Quantity.CatMeanN: mean_n,
    Quantity.CatA2A2: a2a2,
    Quantity.CatAmean: mean_a,
    Quantity.CatA2: a2,
    Quantity.CatInitQ: init_q,
    Quantity.CatInitG2: init_g2,
    Quantity.CatInitSphi: init_sphi,
}
