"""Pure-Python accumulation kernels.

Fallback for the compiled extension.  Sums are exact (``math.fsum``), which
more than meets the compensated-summation requirement of the hot paths.
"""

import math
from bisect import bisect_left

import numpy as np

BACKEND = "python"


def riesz_sum(lams, sigma, z):
    """Sum of (z - lam)**sigma over eigenvalues strictly below z.

    ``lams`` must be sorted ascending.  For ``sigma == 0`` the value is the
    strict counting function.  Negative ``sigma`` is permitted as long as no
    eigenvalue equals ``z``.  Returns ``(value, count)``.
    """
    idx = bisect_left(lams, z)
    if sigma == 0.0:
        return float(idx), idx
    if idx == 0:
        return 0.0, 0
    head = np.asarray(lams[:idx], dtype=float)
    terms = np.power(z - head, sigma)
    return math.fsum(terms), idx


def power_sum(lams, k, p):
    """Exact sum of lams[i]**p for i < k."""
    head = np.asarray(lams[:k], dtype=float)
    if p == 1.0:
        return math.fsum(head)
    return math.fsum(np.power(head, p))


def prefix_sums(lams):
    """Correctly rounded running prefix sums of ``lams``.

    ``out[i]`` equals ``math.fsum(lams[:i+1])`` exactly: the running state is
    kept as a list of non-overlapping partials (Shewchuk's algorithm) and
    rounded after every addition.
    """
    out = np.empty(len(lams), dtype=float)
    partials = []
    for i, x in enumerate(lams):
        x = float(x)
        j = 0
        for y in partials:
            if abs(x) < abs(y):
                x, y = y, x
            hi = x + y
            lo = y - (hi - x)
            if lo:
                partials[j] = lo
                j += 1
            x = hi
        partials[j:] = [x]
        out[i] = math.fsum(partials)
    return out
