"""Coherent pointer |alpha>, alpha = r e^{i vartheta}: final state and its moments.

``*_literal`` functions transcribe the published expressions symbol for symbol;
the unsuffixed ones carry the corrections listed in :mod:`.typos`.
"""
import cmath
import math


from ..postselect import weak_value
from ..states import coherent
from .quantities import Quantity


def _common(spec, cfg):
    a = spec.alpha
    return a, weak_value(cfg), cfg.s


def norm_inv2(spec, cfg, phi=None):
    """lambda^-2 = 1 + |w|^2 + e^{-s^2/2} Re[(1+w)(1-w*) e^{-2is Im alpha}]."""
    a, w, s = _common(spec, cfg)
    return (1 + abs(w) ** 2
            + math.exp(-s * s / 2) * ((1 + w) * (1 - w.conjugate()) * cmath.exp(-2j * s * a.imag)).real)


def _mean_n_body(a, w, s):
    ap, am = a + s / 2, a - s / 2
    cross = cmath.exp(2j * s * a.imag) * (1 - abs(w) ** 2 - 2j * w.imag) * ap.conjugate() * am
    return (abs(1 + w) ** 2 * abs(ap) ** 2 + abs(1 - w) ** 2 * abs(am) ** 2
            + 2 * math.exp(-s * s / 2) * cross.real)


def mean_n_literal(spec, cfg, phi=None):
    a, w, s = _common(spec, cfg)
    return _mean_n_body(a, w, s) / (4 * norm_inv2(spec, cfg))


def mean_n(spec, cfg, phi=None):
    a, w, s = _common(spec, cfg)
    return _mean_n_body(a, w, s) / (2 * norm_inv2(spec, cfg))


def _a2a2_body(a, w, s, exponent):
    ap, am = a + s / 2, a - s / 2
    cross = (cmath.exp(1j * exponent) * (1 + w.conjugate()) * (1 - w)
             * ap.conjugate() ** 2 * am ** 2)
    return (abs(1 + w) ** 2 * abs(ap) ** 4 + abs(1 - w) ** 2 * abs(am) ** 4
            + 2 * math.exp(-s * s / 2) * cross.real)


def a2a2_literal(spec, cfg, phi=None):
    # exponent printed as 2 i s |alpha| sin(phi); phi read as the system azimuth
    a, w, s = _common(spec, cfg)
    return _a2a2_body(a, w, s, 2 * s * abs(a) * math.sin(cfg.phi_sys)) / (4 * norm_inv2(spec, cfg))


def a2a2(spec, cfg, phi=None):
    a, w, s = _common(spec, cfg)
    return _a2a2_body(a, w, s, 2 * s * a.imag) / (2 * norm_inv2(spec, cfg))


def _xphi_cross(a, w, s, phi):
    r, vt = abs(a), cmath.phase(a)
    return 0.5 * math.exp(-s * s / 2) * (
        cmath.exp(2j * s * a.imag) * (1 - w) * (1 + w.conjugate())
        * (2 * r * math.cos(vt - phi) + 1j * s * math.sin(phi))).real


def xphi_literal(spec, cfg, phi):
    # cos(phi - theta) with theta the preselection angle; prefactor |lambda|^2/sqrt(2)
    a, w, s = _common(spec, cfg)
    body = ((1 + abs(w) ** 2) * abs(a) * math.cos(phi - cfg.theta)
            + s * math.cos(phi) * w.real + _xphi_cross(a, w, s, phi))
    return body / (math.sqrt(2) * norm_inv2(spec, cfg))


def xphi(spec, cfg, phi):
    a, w, s = _common(spec, cfg)
    body = ((1 + abs(w) ** 2) * abs(a) * math.cos(phi - cmath.phase(a))
            + s * math.cos(phi) * w.real + _xphi_cross(a, w, s, phi))
    return math.sqrt(2) * body / norm_inv2(spec, cfg)


def _a2_body(a, w, s):
    ap, am = a + s / 2, a - s / 2
    damp = math.exp(-s * s / 2)
    return (abs(1 + w) ** 2 * ap ** 2 + abs(1 - w) ** 2 * am ** 2
            + cmath.exp(2j * s * a.imag) * damp * (1 - w) * (1 + w.conjugate()) * am ** 2
            + cmath.exp(-2j * s * a.imag) * damp * (1 + w) * (1 - w.conjugate()) * ap ** 2)


def a2_literal(spec, cfg, phi=None):
    a, w, s = _common(spec, cfg)
    return _a2_body(a, w, s) / (4 * norm_inv2(spec, cfg))


def a2(spec, cfg, phi=None):
    a, w, s = _common(spec, cfg)
    return _a2_body(a, w, s) / (2 * norm_inv2(spec, cfg))


def final_state(spec, cfg, dim):
    """lambda/sqrt(2) [(1+w) e^{-i(s/2)Im a}|a+s/2> + (1-w) e^{i(s/2)Im a}|a-s/2>] in the Fock basis."""
    a, w, s = _common(spec, cfg)
    lam = 1 / math.sqrt(norm_inv2(spec, cfg))
    plus = coherent(abs(a + s / 2), cmath.phase(a + s / 2), dim).amps
    minus = coherent(abs(a - s / 2), cmath.phase(a - s / 2), dim).amps
    tau = 0.5 * s * a.imag
    return lam / math.sqrt(2) * ((1 + w) * cmath.exp(-1j * tau) * plus
                                 + (1 - w) * cmath.exp(1j * tau) * minus)


def success_probability(spec, cfg):
    """Exact postselection probability cos^2(theta/2) lambda^-2 / 2."""
    return cfg.overlap ** 2 * norm_inv2(spec, cfg) / 2


LITERAL = {
    Quantity.CohNorm: norm_inv2,
    Quantity.CohMeanN: mean_n_literal,
    Quantity.CohA2A2: a2a2_literal,
    Quantity.CohXphi: xphi_literal,
    Quantity.CohA2: a2_literal,
}

CORRECTED = {
    Quantity.CohNorm: norm_inv2,
    Quantity.CohMeanN: mean_n,
    Quantity.CohA2A2: a2a2,
    Quantity.CohXphi: xphi,
    Quantity.CohA2: a2,
}
