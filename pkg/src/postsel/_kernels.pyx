# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled inner loops.  Mirrors ``_pykernels`` exactly; see there for the math."""
import numpy as np

from libc.math cimport sqrt, exp, cosh, sinh, tanh, cos, sin

ctypedef double complex cplx


def displace_step(cplx beta, const cplx[::1] v):
    cdef Py_ssize_t dim = v.shape[0]
    cdef Py_ssize_t n, k, m
    cdef cplx c, acc
    cdef cplx lower = complex(-beta.real, beta.imag)  # -conj(beta)
    cdef double scale = exp(-0.5 * (beta.real * beta.real + beta.imag * beta.imag))
    w = np.empty(dim, dtype=np.complex128)
    out = np.empty(dim, dtype=np.complex128)
    cdef cplx[::1] wv = w
    cdef cplx[::1] ov = out
    with nogil:
        for n in range(dim):
            c = 1.0
            acc = v[n]
            for k in range(1, dim - n):
                c = c * lower * (sqrt(<double>(n + k)) / k)
                if c == 0:
                    break
                acc = acc + c * v[n + k]
            wv[n] = acc
        for m in range(dim):
            c = 1.0
            acc = wv[m]
            for k in range(1, m + 1):
                c = c * beta * (sqrt(<double>(m - k + 1)) / k)
                if c == 0:
                    break
                acc = acc + c * wv[m - k]
            ov[m] = acc * scale
    return out


def squeezed_coherent_series(cplx beta, double eta, double delta, Py_ssize_t dim):
    cdef double ch = cosh(eta), sh = sinh(eta), th = tanh(eta)
    cdef cplx e = complex(cos(delta), sin(delta))
    cdef cplx bconj = complex(beta.real, -beta.imag)
    cdef cplx gamma = beta * ch + bconj * e * sh
    cdef cplx lead = gamma / ch
    cdef cplx back = e * th
    cdef cplx pref = np.exp(-0.5 * abs(beta) ** 2 - 0.5 * bconj * bconj * e * th) / sqrt(ch)
    out = np.empty(dim, dtype=np.complex128)
    cdef cplx[::1] ov = out
    cdef cplx h_prev = 1.0, h = lead, h_next
    cdef Py_ssize_t n
    with nogil:
        ov[0] = pref
        if dim > 1:
            ov[1] = pref * lead
        for n in range(1, dim - 1):
            h_next = (lead * h - sqrt(<double>n) * back * h_prev) / sqrt(<double>(n + 1))
            ov[n + 1] = pref * h_next
            h_prev = h
            h = h_next
    return out
