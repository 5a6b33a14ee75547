# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled direct-summation kernel for the two-sided transform.

Evaluates F[w1, w2] = sum_{m1, m2} e_i(s*2*pi*m1*w1/n1) * q[m1, m2]
* e_j(s*2*pi*m2*w2/n2) by the textbook quadruple loop (no FFT, no
factorization), so it stays an independent reference for the fast path.
Normalization is applied by the caller.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport cos, sin

cnp.import_array()

DEF TWO_PI = 6.283185307179586476925286766559


def dqft2_direct(const double[:, :, ::1] q, int sign):
    """Unnormalized two-sided transform of a (n1, n2, 4) component array."""
    cdef Py_ssize_t n1 = q.shape[0]
    cdef Py_ssize_t n2 = q.shape[1]
    cdef cnp.ndarray[cnp.float64_t, ndim=3] out_arr = np.empty((n1, n2, 4))
    cdef double[:, :, ::1] out = out_arr

    # Phase tables; angles reduced mod 2*pi via the integer product mod n.
    cdef cnp.ndarray[cnp.float64_t, ndim=2] c1 = np.empty((n1, n1))
    cdef cnp.ndarray[cnp.float64_t, ndim=2] s1 = np.empty((n1, n1))
    cdef cnp.ndarray[cnp.float64_t, ndim=2] c2 = np.empty((n2, n2))
    cdef cnp.ndarray[cnp.float64_t, ndim=2] s2 = np.empty((n2, n2))
    cdef double[:, ::1] c1v = c1, s1v = s1, c2v = c2, s2v = s2

    cdef Py_ssize_t w1, w2, m1, m2
    cdef double ang
    for w1 in range(n1):
        for m1 in range(n1):
            ang = sign * TWO_PI * ((w1 * m1) % n1) / n1
            c1v[w1, m1] = cos(ang)
            s1v[w1, m1] = sin(ang)
    for w2 in range(n2):
        for m2 in range(n2):
            ang = sign * TWO_PI * ((w2 * m2) % n2) / n2
            c2v[w2, m2] = cos(ang)
            s2v[w2, m2] = sin(ang)

    cdef double cl, sl, cr, sr
    cdef double qw, qx, qy, qz
    cdef double a, b, c, d
    cdef double ow, ox, oy, oz
    for w1 in range(n1):
        for w2 in range(n2):
            ow = ox = oy = oz = 0.0
            for m1 in range(n1):
                cl = c1v[w1, m1]
                sl = s1v[w1, m1]
                for m2 in range(n2):
                    qw = q[m1, m2, 0]
                    qx = q[m1, m2, 1]
                    qy = q[m1, m2, 2]
                    qz = q[m1, m2, 3]
                    # left multiply by (cl + i sl)
                    a = cl * qw - sl * qx
                    b = cl * qx + sl * qw
                    c = cl * qy - sl * qz
                    d = cl * qz + sl * qy
                    # right multiply by (cr + j sr)
                    cr = c2v[w2, m2]
                    sr = s2v[w2, m2]
                    ow += a * cr - c * sr
                    ox += b * cr - d * sr
                    oy += a * sr + c * cr
                    oz += b * sr + d * cr
            out[w1, w2, 0] = ow
            out[w1, w2, 1] = ox
            out[w1, w2, 2] = oy
            out[w1, w2, 3] = oz
    return out_arr
