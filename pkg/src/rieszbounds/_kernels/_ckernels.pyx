# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled accumulation kernels.

Kahan-compensated inner loops for Riesz-mean and power sums over sorted
eigenvalue arrays.  Semantics match ``pykernels``; the pure version is the
accuracy reference (exact summation), this one is the speed path.
"""

from libc.math cimport pow

BACKEND = "c"


cdef Py_ssize_t _count_below(const double[::1] lams, double z) noexcept nogil:
    # binary search: number of entries strictly below z (array sorted ascending)
    cdef Py_ssize_t lo = 0, hi = lams.shape[0], mid
    while lo < hi:
        mid = (lo + hi) // 2
        if lams[mid] < z:
            lo = mid + 1
        else:
            hi = mid
    return lo


def riesz_sum(const double[::1] lams, double sigma, double z):
    """Kahan sum of (z - lam)**sigma over eigenvalues strictly below z."""
    cdef Py_ssize_t idx = _count_below(lams, z)
    cdef double s = 0.0, c = 0.0, term, y, t
    cdef Py_ssize_t i
    if sigma == 0.0:
        return float(idx), idx
    with nogil:
        for i in range(idx):
            term = pow(z - lams[i], sigma)
            y = term - c
            t = s + y
            c = (t - s) - y
            s = t
    return s, idx


def power_sum(const double[::1] lams, Py_ssize_t k, double p):
    """Kahan sum of lams[i]**p for i < k."""
    cdef double s = 0.0, c = 0.0, term, y, t
    cdef Py_ssize_t i
    with nogil:
        for i in range(k):
            term = lams[i] if p == 1.0 else pow(lams[i], p)
            y = term - c
            t = s + y
            c = (t - s) - y
            s = t
    return s
