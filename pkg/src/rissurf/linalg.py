"""Small dense complex SVD (one-sided Jacobi) and the pseudo-inverse built on it."""
from __future__ import annotations

import numpy as np

RANK_RTOL = 1e-12


def jacobi_svd(a, tol: float = 1e-15, max_sweeps: int = 60):
    """Thin SVD ``a = U diag(s) V^H`` by one-sided Hestenes rotations.

    Columns of a working copy are orthogonalised pairwise; for wide matrices
    the conjugate transpose is decomposed instead. Singular values are
    returned in descending order.
    """
    a = np.asarray(a, dtype=complex)
    m, n = a.shape
    if m < n:
        u, s, vh = jacobi_svd(a.conj().T, tol, max_sweeps)
        return vh.conj().T, s, u.conj().T
    w = a.copy()
    v = np.eye(n, dtype=complex)
    for _ in range(max_sweeps):
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                alpha = np.vdot(w[:, p], w[:, p]).real
                beta = np.vdot(w[:, q], w[:, q]).real
                gamma = np.vdot(w[:, p], w[:, q])
                g = abs(gamma)
                if g == 0.0 or g <= tol * np.sqrt(alpha * beta):
                    continue
                rotated = True
                # real symmetric 2x2 problem after removing the phase of gamma
                ph = gamma / g
                zeta = (beta - alpha) / (2.0 * g)
                t = np.copysign(1.0, zeta) / (abs(zeta) + np.sqrt(1.0 + zeta * zeta))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = c * t
                wp, wq = w[:, p].copy(), w[:, q]
                w[:, p] = c * wp - s * np.conj(ph) * wq
                w[:, q] = s * ph * wp + c * wq
                vp, vq = v[:, p].copy(), v[:, q]
                v[:, p] = c * vp - s * np.conj(ph) * vq
                v[:, q] = s * ph * vp + c * vq
        if not rotated:
            break
    s = np.linalg.norm(w, axis=0)
    order = np.argsort(-s, kind="stable")
    s = s[order]
    w = w[:, order]
    v = v[:, order]
    u = np.zeros_like(w)
    nz = s > 0
    u[:, nz] = w[:, nz] / s[nz]
    return u, s, v.conj().T


def pinv(a, rtol: float = RANK_RTOL):
    """Moore-Penrose pseudo-inverse; singular values below rtol * s_max count as zero."""
    u, s, vh = jacobi_svd(a)
    if s.size == 0 or s[0] == 0.0:
        return np.zeros((np.shape(a)[1], np.shape(a)[0]), dtype=complex)
    inv = np.where(s > rtol * s[0], 1.0 / np.where(s > 0, s, 1.0), 0.0)
    return (vh.conj().T * inv) @ u.conj().T
