import numpy as np

from .errors import SingularPointError

SINGULAR_TOL = 1e-12


def checked_div(num, den, x, scale=1.0, what="denominator", tol=SINGULAR_TOL):
    """num/den, raising SingularPointError at the first x where |den| <= tol*scale."""
    den = np.asarray(den)
    bad = np.abs(den) <= tol * np.asarray(scale)
    if np.any(bad):
        xs = np.broadcast_to(np.asarray(x, dtype=float), bad.shape)
        raise SingularPointError(xs[bad].ravel()[0], what)
    return num / den
