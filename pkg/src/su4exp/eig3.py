"""Closed-form spectral and singular value factorization of real 3x3 matrices.

Eigenvalues of a symmetric 3x3 matrix come from the trigonometric (Cardano)
solution of the cubic characteristic polynomial, which is branch-free and
deterministic.  Eigenvectors are built from products of the shifted matrix;
eigenvalues clustered within a relative 1e-9 are treated as repeated and an
orthonormal basis of the cluster's invariant subspace is completed by
Gram-Schmidt, with an exact 2x2 rotation to split near-degenerate pairs.
"""

from __future__ import annotations

import math

import numpy as np

CLUSTER_RTOL = 1e-9


def _rotation_2x2(d11: float, d22: float, d12: float) -> tuple[float, float]:
    """cos, sin of the rotation diagonalizing [[d11, d12], [d12, d22]]."""
    theta = 0.5 * math.atan2(2.0 * d12, d11 - d22)
    return math.cos(theta), math.sin(theta)


def eigh3(A: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and orthonormal eigenvectors of symmetric A.

    Returns (w, V) with A @ V[:, i] = w[i] * V[:, i].  Fully unrolled scalar
    arithmetic: this sits on the hot path of the structured exponentials and
    3x3 numpy calls would dominate the runtime.
    """
    A = np.asarray(A, dtype=float)
    a00, a11, a22 = float(A[0, 0]), float(A[1, 1]), float(A[2, 2])
    a01 = 0.5 * (float(A[0, 1]) + float(A[1, 0]))
    a02 = 0.5 * (float(A[0, 2]) + float(A[2, 0]))
    a12 = 0.5 * (float(A[1, 2]) + float(A[2, 1]))
    scale = max(abs(a00), abs(a11), abs(a22), abs(a01), abs(a02), abs(a12))
    if scale == 0.0:
        return np.zeros(3), np.eye(3)

    def matvec(x0, x1, x2, shift=0.0):
        return ((a00 - shift) * x0 + a01 * x1 + a02 * x2,
                a01 * x0 + (a11 - shift) * x1 + a12 * x2,
                a02 * x0 + a12 * x1 + (a22 - shift) * x2)

    def quad(x0, x1, x2, y0, y1, y2):
        return (a00 * x0 * y0 + a11 * x1 * y1 + a22 * x2 * y2
                + a01 * (x0 * y1 + x1 * y0) + a02 * (x0 * y2 + x2 * y0)
                + a12 * (x1 * y2 + x2 * y1))

    m = (a00 + a11 + a22) / 3.0
    k00, k11, k22 = a00 - m, a11 - m, a22 - m
    p2 = (k00 * k00 + k11 * k11 + k22 * k22
          + 2.0 * (a01 * a01 + a02 * a02 + a12 * a12)) / 6.0
    p = math.sqrt(p2)
    if p < 1e-14 * scale:
        return np.full(3, m), np.eye(3)
    detK = (k00 * (k11 * k22 - a12 * a12) - a01 * (a01 * k22 - a12 * a02)
            + a02 * (a01 * a12 - k11 * a02))
    r = min(1.0, max(-1.0, detK / (2.0 * p * p * p)))
    phi = math.acos(r) / 3.0
    # Ordered: cos(phi) >= cos(phi - 2pi/3) >= cos(phi + 2pi/3) on [0, pi/3].
    w = (m + 2.0 * p * math.cos(phi + 2.0 * math.pi / 3.0),
         m + 2.0 * p * math.cos(phi - 2.0 * math.pi / 3.0),
         m + 2.0 * p * math.cos(phi))

    # The trigonometric roots lose about half the working precision near a
    # double root, so only the best-separated eigenvalue's vector is taken
    # from the shifted product; the remaining pair is resolved exactly by a
    # 2x2 rotation in the orthogonal complement.  Since tr(B^2) = 6, at most
    # one pair can be clustered once p is non-negligible.
    gaps = [min(abs(w[i] - w[j]) for j in range(3) if j != i) for i in range(3)]
    iso = max(range(3), key=gaps.__getitem__)
    pair = [i for i in range(3) if i != iso]
    wj, wk = w[pair[0]], w[pair[1]]

    # Columns of (A - wj)(A - wk), all proportional to v_iso; take the
    # largest for stability.
    best, best_n = None, -1.0
    for e in ((1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0)):
        y = matvec(*e, shift=wk)
        x = matvec(*y, shift=wj)
        n = x[0] * x[0] + x[1] * x[1] + x[2] * x[2]
        if n > best_n:
            best, best_n = x, n
    nv = math.sqrt(best_n)
    v0, v1, v2 = best[0] / nv, best[1] / nv, best[2] / nv

    # Orthonormal basis of the complement of v_iso.
    k = min(range(3), key=lambda i: abs((v0, v1, v2)[i]))
    u = [-(v0, v1, v2)[i] * (v0, v1, v2)[k] for i in range(3)]
    u[k] += 1.0
    nu = math.sqrt(u[0] * u[0] + u[1] * u[1] + u[2] * u[2])
    u0, u1_, u2_ = u[0] / nu, u[1] / nu, u[2] / nu
    t0 = v1 * u2_ - v2 * u1_
    t1 = v2 * u0 - v0 * u2_
    t2 = v0 * u1_ - v1 * u0

    # Exact rotation diagonalizing the 2x2 restriction of A.
    d11 = quad(u0, u1_, u2_, u0, u1_, u2_)
    d22 = quad(t0, t1, t2, t0, t1, t2)
    d12 = quad(u0, u1_, u2_, t0, t1, t2)
    c, s = _rotation_2x2(d11, d22, d12)
    x1 = (c * u0 + s * t0, c * u1_ + s * t1, c * u2_ + s * t2)
    x2 = (-s * u0 + c * t0, -s * u1_ + c * t1, -s * u2_ + c * t2)

    cols = [None, None, None]
    cols[iso] = (v0, v1, v2)
    cols[pair[0]], cols[pair[1]] = x1, x2
    pairs = sorted((quad(*v, *v), v) for v in cols)
    vals = np.array([pv[0] for pv in pairs])
    V = np.array([pv[1] for pv in pairs]).T
    return vals, V


def svd3(G: np.ndarray, tol: float = 1e-12) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Singular value factorization G = U @ diag(s) @ V.T of a real 3x3 matrix.

    Built on the closed-form eigendecomposition of G^T G; singular values are
    returned descending.  Left vectors for (near-)zero singular values are
    completed by Gram-Schmidt.
    """
    G = np.asarray(G, dtype=float)
    w, V = eigh3(G.T @ G)
    order = np.argsort(w)[::-1]
    V = V[:, order]
    scale = max(np.abs(G).max(), 1e-300)

    # Singular values from ||G v|| directly; sqrt of the eigenvalue loses
    # accuracy once sigma^2 falls below the eigensolver's absolute error.
    s = np.array([np.linalg.norm(G @ V[:, i]) for i in range(3)])

    # Left vectors in descending-sigma order, Gram-Schmidt against the ones
    # already placed: directions belonging to tiny sigmas are ill-determined
    # and must not contaminate the well-determined ones.
    U = np.zeros((3, 3))
    placed = []
    for i in range(3):
        u = G @ V[:, i] if s[i] > tol * scale else None
        if u is None:
            for e in np.eye(3):
                cand = e.copy()
                for j in placed:
                    cand -= (U[:, j] @ cand) * U[:, j]
                if np.linalg.norm(cand) > 0.5:
                    u = cand
                    break
        else:
            for j in placed:
                u = u - (U[:, j] @ u) * U[:, j]
        U[:, i] = u / np.linalg.norm(u)
        placed.append(i)
    return U, s, V
