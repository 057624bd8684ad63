"""Closed-form exponentials for structured 4x4 anti-Hermitian matrices.

Every formula here reduces e^X to products of at most three commuting factors
of the form cos(lam) I + sinc(lam) Y with Y^2 = -lam^2 I, or to the low-degree
minimal-polynomial evaluations

    quadratic type I    e^X = cos(c) I + sinc(c) X            (X^2 = -c^2 I)
    quadratic type II   e^X = e^{-beta} exp(X + beta I)
    cubic type I        e^X = I + sinc(c) X + (1-cos c)/c^2 X^2

``exp_auto`` dispatches over the structured families (cheapest pattern checks
first), falls back to a magic-basis conjugation when the conjugated image is
structured, and finally to the Taylor-series reference exponential.  All
results carry a method tag and a unitarity residual.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .classify import classify
from .errors import StructureError
from .model import MAGIC_BASIS, QuintupleDecomp, Su4Element, mat_pure_pure
from .oracle import expm_reference
from .eig3 import eigh3
from .quaternion import PureQuaternion

STRUCTURE_TOL = 1e-10

# sigma_x (x) sigma_x: the anti-identity ("exchange") matrix.
R4 = np.fliplr(np.eye(4))
# Symplectic form [[0, I2], [-I2, 0]].
J4 = np.block([[np.zeros((2, 2)), np.eye(2)], [-np.eye(2), np.zeros((2, 2))]])

_EX = PureQuaternion(1.0, 0.0, 0.0)
_EY = PureQuaternion(0.0, 1.0, 0.0)
_EZ = PureQuaternion(0.0, 0.0, 1.0)
_AXES = (_EX, _EY, _EZ)


@dataclass(frozen=True)
class ExpResult:
    """Unitary U = e^X with the formula used and a numerical residual.

    ``residual`` is ||U* U - I||_F, maximized with ||U - U_oracle||_F
    whenever the reference exponential was consulted along the way.
    """

    U: np.ndarray
    method: str
    residual: float


@dataclass(frozen=True)
class SymTriDiag:
    """Parameters of i x (real symmetric tridiagonal with zero diagonal)."""

    alpha: float
    beta: float
    gamma: float

    def matrix(self) -> np.ndarray:
        T = np.zeros((4, 4))
        for k, v in enumerate((self.alpha, self.beta, self.gamma)):
            T[k, k + 1] = T[k + 1, k] = v
        return 1j * T


def sinc(c: complex) -> complex:
    """sin(c)/c with a series fallback for small |c| (cancellation-free)."""
    if abs(c) < 1e-4:
        c2 = c * c
        return 1.0 - c2 / 6.0 * (1.0 - c2 / 20.0)
    return cmath.sin(c) / c


def cosm1_over_c2(c: complex) -> complex:
    """(1 - cos(c))/c^2 with a series fallback for small |c|.

    The direct quotient cancels catastrophically below |c| ~ 1e-4 and still
    loses a few digits up to |c| ~ 1e-2, where the truncated series is
    already exact to working precision, so the crossover sits at 1e-2.
    """
    if abs(c) < 1e-2:
        c2 = c * c
        return 0.5 - c2 / 24.0 * (1.0 - c2 / 30.0)
    return (1.0 - cmath.cos(c)) / (c * c)


def _principal_root(c2: complex) -> complex:
    """c = sqrt(r) e^{i theta/2} for c^2 = r e^{i theta}, theta in [0, 2pi)."""
    c2 = complex(c2)
    r = abs(c2)
    theta = math.atan2(c2.imag, c2.real) % (2.0 * math.pi)
    return math.sqrt(r) * cmath.exp(0.5j * theta)


_EYE4 = np.eye(4, dtype=complex)
_EYE4.setflags(write=False)


def _rotation_factor(lam: float, Y: np.ndarray) -> np.ndarray:
    """cos(lam) I + sinc(lam) Y for Y with Y^2 = -lam^2 I."""
    return math.cos(lam) * _EYE4 + sinc(lam) * Y


def _unitarity(U: np.ndarray) -> float:
    return float(np.linalg.norm(U.conj().T @ U - np.eye(4)))


# -- structure predicates -------------------------------------------------

def is_tridiagonal_type(X: Su4Element, tol: float = STRUCTURE_TOL) -> bool:
    """Traceless part equals i x (real symmetric tridiagonal, zero diagonal)."""
    A = X.traceless
    scale = max(1.0, np.abs(A).max())
    if np.abs(A.real).max() > tol * scale:
        return False
    T = A.imag
    mask = np.eye(4, dtype=bool) | np.eye(4, k=1, dtype=bool) | np.eye(4, k=-1, dtype=bool)
    off = np.abs(np.where(mask, 0.0, T)).max()
    diag = np.abs(np.diagonal(T)).max()
    return max(off, diag) <= tol * scale


def is_perskew(X: Su4Element, tol: float = STRUCTURE_TOL) -> bool:
    """X0^T R4 + R4 X0 = 0 (perskewsymmetric about the anti-diagonal)."""
    A = X.traceless
    scale = max(1.0, np.abs(A).max())
    return np.abs(A.T @ R4 + R4 @ A).max() <= tol * scale


def is_skew_hamiltonian(X: Su4Element, tol: float = STRUCTURE_TOL) -> bool:
    """X^T J4 = J4 X (the scalar part satisfies this automatically)."""
    A = X.entries
    scale = max(1.0, np.abs(A).max())
    return np.abs(A.T @ J4 - J4 @ A).max() <= tol * scale


def is_imaginary_symmetric(X: Su4Element, tol: float = STRUCTURE_TOL) -> bool:
    """Traceless part is iC with C real symmetric (p = q = 0)."""
    A = X.traceless
    scale = max(1.0, np.abs(A).max())
    return np.abs(A.real).max() <= tol * scale


def _bisym_block_position(C: np.ndarray, tol: float) -> tuple[int, int] | None:
    """(row, col) of the 1x1 block if C splits as 2x2 (+) 1x1, else None.

    The split need not be aligned with the main diagonal: it only requires a
    row i0 and column j0 that vanish outside their crossing entry.
    """
    scale = max(1.0, np.abs(C).max())
    for i0 in range(3):
        for j0 in range(3):
            row = max(abs(C[i0, j]) for j in range(3) if j != j0)
            col = max(abs(C[i, j0]) for i in range(3) if i != i0)
            if max(row, col) <= tol * scale:
                return i0, j0
    return None


def is_bisymmetric(X: Su4Element, tol: float = STRUCTURE_TOL) -> bool:
    """Imaginary symmetric with the interaction matrix 2x2 (+) 1x1 split."""
    if not is_imaginary_symmetric(X, tol):
        return False
    return _bisym_block_position(X.quintuple.Cmat, tol) is not None


def is_normal_element(X: Su4Element, tol: float = STRUCTURE_TOL) -> bool:
    """[B, C] = 0 for the real/imaginary split of the traceless part."""
    d = X.quintuple
    B, C = d.B(), d.C()
    scale = max(1.0, float(np.linalg.norm(B)) * float(np.linalg.norm(C)))
    return float(np.linalg.norm(B @ C - C @ B)) <= tol * scale


# -- minimal-polynomial formulas ------------------------------------------

def exp_quadratic_I(X: np.ndarray, c2: complex) -> np.ndarray:
    """e^X = cos(c) I + sinc(c) X for X with X^2 = -c^2 I, c != 0."""
    X = np.asarray(X, dtype=complex)
    n = X.shape[0]
    resid = np.linalg.norm(X @ X + c2 * np.eye(n))
    scale = max(float(np.linalg.norm(X)) ** 2, abs(c2), 1e-300)
    if resid > 1e-9 * scale:
        raise StructureError("quadratic-I minimal polynomial", float(resid))
    c = _principal_root(c2)
    return cmath.cos(c) * np.eye(n, dtype=complex) + sinc(c) * X


def exp_quadratic_II(X: np.ndarray, beta: complex, gamma: complex) -> np.ndarray:
    """e^X for X with X^2 + 2 beta X + gamma I = 0, beta != 0.

    Evaluated through (X + beta I)^2 = (beta^2 - gamma) I:
    e^X = e^{-beta} [cos(omega) I + sinc(omega)(X + beta I)] with
    omega^2 = gamma - beta^2 (real and positive for anti-Hermitian X, where
    beta is purely imaginary and gamma real).
    """
    X = np.asarray(X, dtype=complex)
    n = X.shape[0]
    resid = np.linalg.norm(X @ X + 2.0 * beta * X + gamma * np.eye(n))
    scale = max(float(np.linalg.norm(X)) ** 2, abs(gamma), 1e-300)
    if resid > 1e-9 * scale:
        raise StructureError("quadratic-II minimal polynomial", float(resid))
    if beta == 0:
        raise ValueError("beta = 0 is the quadratic type I case")
    # (X + beta I)^2 = -c^2 I is already certified by the residual above, so
    # the shifted quadratic-I formula is applied directly.
    c = _principal_root(gamma - beta * beta)
    Y = X + beta * np.eye(n)
    return cmath.exp(-beta) * (cmath.cos(c) * np.eye(n, dtype=complex) + sinc(c) * Y)


def exp_cubic_I(X: np.ndarray, c2: complex) -> np.ndarray:
    """Euler-Rodrigues: e^X = I + sinc(c) X + (1-cos c)/c^2 X^2 for X^3 = -c^2 X."""
    X = np.asarray(X, dtype=complex)
    n = X.shape[0]
    X2 = X @ X
    resid = np.linalg.norm(X2 @ X + c2 * X)
    scale = max(float(np.linalg.norm(X)) ** 3, 1e-300)
    if resid > 1e-9 * scale:
        raise StructureError("cubic-I minimal polynomial", float(resid))
    c = _principal_root(c2)
    return (np.eye(n, dtype=complex) + sinc(c) * X + cosm1_over_c2(c) * X2)


# -- structured families --------------------------------------------------

def exp_tridiag(S: SymTriDiag) -> ExpResult:
    """Two commuting rotation factors for i x tridiagonal symmetric input.

    With r = (0, beta/2, 0), t = (0, (gamma-alpha)/2, 0) and
    s = (beta/2, 0, (alpha+gamma)/2):

        e^S = [cos(l1) I + i sinc(l1)(M_{r(x)i} + M_{t(x)k})]
              [cos(l2) I + i sinc(l2) M_{s(x)j}]

    l1 = sqrt(beta^2 + (gamma-alpha)^2)/2, l2 = sqrt(beta^2 + (gamma+alpha)^2)/2.
    """
    a, b, g = S.alpha, S.beta, S.gamma
    r = PureQuaternion(0.0, b / 2.0, 0.0)
    t = PureQuaternion(0.0, (g - a) / 2.0, 0.0)
    s = PureQuaternion(b / 2.0, 0.0, (a + g) / 2.0)
    l1 = 0.5 * math.hypot(b, g - a)
    l2 = 0.5 * math.hypot(b, g + a)
    F1 = _rotation_factor(l1, 1j * (mat_pure_pure(r, _EX) + mat_pure_pure(t, _EZ)))
    F2 = _rotation_factor(l2, 1j * mat_pure_pure(s, _EY))
    U = F1 @ F2
    return ExpResult(U=U, method="tridiag", residual=_unitarity(U))


def exp_perskew(X: Su4Element, tol: float = STRUCTURE_TOL) -> ExpResult:
    """Two-factor exponential for perskewsymmetric X (X0^T R4 = -R4 X0).

    The traceless part lives in the span of i{sigma_z(x)I, sigma_x(x)sigma_z,
    sigma_y(x)sigma_z} (an anticommuting triple) and i{I(x)sigma_z,
    sigma_z(x)sigma_x, sigma_z(x)sigma_y} (another), and the two triples
    commute; each bracket exponentiates as a rotation factor with
    l1 = sqrt(p1^2 + p2^2 + a^2), l2 = sqrt(q1^2 + q2^2 + b^2).
    """
    A = X.traceless
    resid = float(np.abs(A.T @ R4 + R4 @ A).max())
    if resid > tol * max(1.0, np.abs(A).max()):
        raise StructureError("perskewsymmetric", resid)
    pc = X.pauli
    p1, p2, a = pc.beta[2], pc.gamma[0, 2], pc.gamma[1, 2]
    q1, q2, b = pc.alpha[2], pc.gamma[2, 0], pc.gamma[2, 1]
    from .qtensor import pauli_kron
    Y1 = 1j * (p1 * pauli_kron("z", "0") + p2 * pauli_kron("x", "z")
               + a * pauli_kron("y", "z"))
    Y2 = 1j * (q1 * pauli_kron("0", "z") + q2 * pauli_kron("z", "x")
               + b * pauli_kron("z", "y"))
    l1 = math.sqrt(p1 ** 2 + p2 ** 2 + a ** 2)
    l2 = math.sqrt(q1 ** 2 + q2 ** 2 + b ** 2)
    U = cmath.exp(1j * X.scalar) * (_rotation_factor(l1, Y1) @ _rotation_factor(l2, Y2))
    return ExpResult(U=U, method="perskew", residual=_unitarity(U))


def exp_skewham(X: Su4Element, tol: float = STRUCTURE_TOL) -> ExpResult:
    """Single-rotation exponential for skew-Hamiltonian X (X^T J4 = J4 X).

    e^X = e^{ib}[cos(l) I + i sinc(l)(p1 sigma_y(x)sigma_y + p2 I(x)sigma_z
    + p3 I(x)sigma_x + c sigma_z(x)sigma_y + d sigma_x(x)sigma_y)] with
    l = sqrt(||p||^2 + c^2 + d^2): the five basis terms mutually anticommute.
    """
    A = X.entries
    resid = float(np.abs(A.T @ J4 - J4 @ A).max())
    if resid > tol * max(1.0, np.abs(A).max()):
        raise StructureError("skew-Hamiltonian", resid)
    pc = X.pauli
    p1, p2, p3 = pc.gamma[1, 1], pc.alpha[2], pc.alpha[0]
    c, d = pc.gamma[2, 1], pc.gamma[0, 1]
    from .qtensor import pauli_kron
    Y = 1j * (p1 * pauli_kron("y", "y") + p2 * pauli_kron("0", "z")
              + p3 * pauli_kron("0", "x") + c * pauli_kron("z", "y")
              + d * pauli_kron("x", "y"))
    lam = math.sqrt(p1 ** 2 + p2 ** 2 + p3 ** 2 + c ** 2 + d ** 2)
    U = cmath.exp(1j * X.scalar) * _rotation_factor(lam, Y)
    return ExpResult(U=U, method="skewham", residual=_unitarity(U))


from .model import _PURE_STACK

_PURE_FLAT = _PURE_STACK.reshape(9, 16)


def _imsym_factors(Cmat: np.ndarray, V: np.ndarray) -> np.ndarray:
    """Product of rotation factors from right singular directions V of Cmat."""
    Us = Cmat @ V
    # row i of Ms is the flattened M_{u_i (x) v_i}; one stacked product
    # replaces three separate basis contractions.
    outer = Us[:, None, :] * V[None, :, :]
    Ms = (outer.reshape(9, 3).T @ _PURE_FLAT)
    U = None
    for i in range(3):
        u = Us[:, i]
        s = math.sqrt(float(u @ u))
        F = _rotation_factor(s, 1j * Ms[i].reshape(4, 4))
        U = F if U is None else U @ F
    return U


def exp_imaginary_symmetric(X: Su4Element, tol: float = STRUCTURE_TOL) -> ExpResult:
    """Three commuting rotation factors for X = iC, C real symmetric.

    The right singular directions v_i of the interaction matrix give
    iC = sum_i i M_{u_i (x) v_i} with u_i = Cmat v_i pairwise orthogonal, so
    e^X = prod_i (cos(s_i) I + i sinc(s_i) M_{u_i (x) v_i}), s_i = ||u_i||.
    """
    A = X.traceless
    resid = float(np.abs(A.real).max())
    if resid > tol * max(1.0, np.abs(A).max()):
        raise StructureError("imaginary-symmetric", resid)
    Cmat = X.quintuple.Cmat
    _, V = eigh3(Cmat.T @ Cmat)
    U = cmath.exp(1j * X.scalar) * _imsym_factors(Cmat, V)
    return ExpResult(U=U, method="imsym", residual=_unitarity(U))


def exp_bisymmetric_fast(X: Su4Element, tol: float = STRUCTURE_TOL) -> ExpResult:
    """Imaginary-symmetric exponential via a closed-form 2x2 rotation angle.

    Requires the interaction matrix to split as a 2x2 block plus a 1x1 block
    (in any row/column position).  The angle
    theta = atan2(2 p.q, q.q - p.p)/2 applied to the two columns of the 2x2
    block orthogonalizes their images, replacing the 3x3 spectral
    factorization.
    """
    if not is_imaginary_symmetric(X, tol):
        raise StructureError("bisymmetric pattern",
                             float(np.abs(X.traceless.real).max()))
    Cmat = X.quintuple.Cmat
    pos = _bisym_block_position(Cmat, tol)
    if pos is None:
        raise StructureError("bisymmetric pattern",
                             float(np.abs(Cmat).max()))
    i0, j0 = pos
    rows = [i for i in range(3) if i != i0]
    cols = [j for j in range(3) if j != j0]
    p = Cmat[rows, cols[0]]
    q = Cmat[rows, cols[1]]
    theta = 0.5 * math.atan2(2.0 * float(p @ q), float(q @ q) - float(p @ p))
    ct, st = math.cos(theta), math.sin(theta)
    V = np.zeros((3, 3))
    V[cols[0], 0], V[cols[1], 0] = ct, -st
    V[cols[0], 1], V[cols[1], 1] = st, ct
    V[j0, 2] = 1.0
    U = cmath.exp(1j * X.scalar) * _imsym_factors(Cmat, V)
    return ExpResult(U=U, method="bisym", residual=_unitarity(U))


def exp_normal_split(X: Su4Element, tol: float = STRUCTURE_TOL) -> ExpResult:
    """e^X = e^B e^{iC} when the real/imaginary parts commute.

    e^B is itself a product of the two commuting quaternion rotations
    M_{p(x)1} and M_{1(x)q} (each squares to a negative scalar).
    """
    d = X.quintuple
    B, C = d.B(), d.C()
    resid = float(np.linalg.norm(B @ C - C @ B))
    if resid > tol * max(1.0, float(np.linalg.norm(B)) * float(np.linalg.norm(C))):
        raise StructureError("commuting real/imaginary split", resid)
    from .model import _mat_1_pure, _mat_pure_1
    np_, nq = d.p.norm(), d.q.norm()
    EB = (_rotation_factor(np_, _mat_pure_1(d.p).astype(complex))
          @ _rotation_factor(nq, _mat_1_pure(d.q).astype(complex)))
    _, V = eigh3(d.Cmat.T @ d.Cmat)
    EC = _imsym_factors(d.Cmat, V)
    U = cmath.exp(1j * X.scalar) * (EB @ EC)
    return ExpResult(U=U, method="normal-split", residual=_unitarity(U))


# -- dispatcher -----------------------------------------------------------

def _tridiag_params(X: Su4Element) -> SymTriDiag:
    T = X.traceless.imag
    return SymTriDiag(alpha=float(T[0, 1]), beta=float(T[1, 2]), gamma=float(T[2, 3]))


def _structured_attempt(X: Su4Element, tol: float) -> ExpResult | None:
    """Exponential via the pattern families, or None when nothing matches."""
    if is_tridiagonal_type(X, tol):
        res = exp_tridiag(_tridiag_params(X))
        U = cmath.exp(1j * X.scalar) * res.U
        return ExpResult(U=U, method="tridiag", residual=_unitarity(U))
    if is_perskew(X, tol):
        return exp_perskew(X, tol)
    if is_skew_hamiltonian(X, tol):
        return exp_skewham(X, tol)
    if is_imaginary_symmetric(X, tol):
        if is_bisymmetric(X, tol):
            return exp_bisymmetric_fast(X, tol)
        return exp_imaginary_symmetric(X, tol)
    if is_normal_element(X, tol):
        return exp_normal_split(X, tol)
    return None


def exp_auto(X: Su4Element, tol: float = STRUCTURE_TOL) -> ExpResult:
    """Exponential of X by the cheapest applicable closed form.

    Order: tridiagonal, perskewsymmetric, skew-Hamiltonian,
    imaginary-symmetric (bisymmetric fast path first), commuting split,
    minimal-polynomial formulas, magic-basis conjugation into one of the
    above patterns, and finally the series reference exponential.
    """
    res = _structured_attempt(X, tol)
    if res is not None:
        return res

    cls = classify(X)
    phase = cmath.exp(1j * X.scalar)
    A = X.traceless
    if cls.tag == "quadratic-I":
        U = phase * exp_quadratic_I(A, cls.c2)
        return ExpResult(U=U, method="quad-I", residual=_unitarity(U))
    if cls.tag == "quadratic-II":
        U = phase * exp_quadratic_II(A, cls.beta, cls.gamma)
        return ExpResult(U=U, method="quad-II", residual=_unitarity(U))
    if cls.tag == "cubic-I":
        U = phase * exp_cubic_I(A, cls.c2)
        return ExpResult(U=U, method="cubic-I", residual=_unitarity(U))

    for W in (MAGIC_BASIS, MAGIC_BASIS.conj().T):
        Y = Su4Element(W @ X.entries @ W.conj().T)
        inner = _structured_attempt(Y, tol)
        if inner is not None:
            U = W.conj().T @ inner.U @ W
            return ExpResult(U=U, method="magic", residual=_unitarity(U))

    U = expm_reference(X.entries)
    return ExpResult(U=U, method="oracle", residual=_unitarity(U))
