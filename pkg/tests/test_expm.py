"""Closed-form exponentials: every structured family and every
minimal-polynomial formula is checked against the series reference, plus the
factorization identities the formulas rest on (commuting factors, scalar
squares of anticommuting sums)."""

import cmath
import math

import numpy as np
import pytest

from su4exp.errors import StructureError
from su4exp.expm import (
    SymTriDiag,
    cosm1_over_c2,
    exp_auto,
    exp_bisymmetric_fast,
    exp_cubic_I,
    exp_imaginary_symmetric,
    exp_normal_split,
    exp_perskew,
    exp_quadratic_I,
    exp_quadratic_II,
    exp_skewham,
    exp_tridiag,
    is_bisymmetric,
    is_imaginary_symmetric,
    is_normal_element,
    is_perskew,
    is_skew_hamiltonian,
    is_tridiagonal_type,
    sinc,
)
from su4exp.families import FAMILIES
from su4exp.model import MAGIC_BASIS, Su4Element
from su4exp.oracle import expm_reference
from su4exp.qtensor import pauli_kron


def _check(U, X, tol=1e-10):
    assert np.abs(U.conj().T @ U - np.eye(4)).max() < tol
    assert np.abs(U - expm_reference(X)).max() < tol


# -- scalar helpers --------------------------------------------------------

def test_sinc_series_matches_exact():
    for c in (1e-9, 1e-5, 9.9e-5, 1.01e-4, 0.5, 2.0, 1e-5 + 1e-5j):
        exact = cmath.sin(c) / c
        assert abs(sinc(c) - exact) < 1e-15 * max(1.0, abs(exact))
    assert sinc(0.0) == 1.0


def test_cosm1_series_matches_exact():
    # 2 sin^2(c/2) / c^2 is a cancellation-free reference on the real axis.
    for c in (1e-9, 1e-5, 9.9e-5, 1.01e-4, 9.9e-3, 1.01e-2, 0.5, 2.0):
        exact = 2.0 * math.sin(c / 2.0) ** 2 / (c * c)
        # the direct branch just above the crossover keeps ~12 digits
        assert abs(cosm1_over_c2(c) - exact) < 1e-12
    assert cosm1_over_c2(0.0) == 0.5


# -- minimal-polynomial formulas -------------------------------------------

def test_quadratic_I_diagonal():
    X = 1j * np.diag([1.0, 1.0, -1.0, -1.0])
    U = exp_quadratic_I(X, 1.0)
    _check(U, X, tol=1e-13)
    assert np.abs(U - np.diag(np.exp(np.diag(X)))).max() < 1e-13


def test_quadratic_I_rejects_wrong_structure():
    with pytest.raises(StructureError):
        exp_quadratic_I(1j * np.diag([1.0, 2.0, -1.0, -2.0]), 1.0)


def test_quadratic_II_shifted_rotation():
    X = 1j * np.diag([1.0, 1.0, 1.0, -3.0])
    # (x - i)(x + 3i) = x^2 + 2ix + 3
    U = exp_quadratic_II(X, 1j, 3.0)
    _check(U, X, tol=1e-13)
    with pytest.raises(StructureError):
        exp_quadratic_II(1j * np.diag([1.0, 2.0, -1.0, -2.0]), 1j, 3.0)
    with pytest.raises(ValueError):
        exp_quadratic_II(1j * np.diag([1.0, 1.0, -1.0, -1.0]), 0.0, 1.0)


def test_cubic_I_rotation_formula():
    X = 1j * np.diag([0.0, 0.0, 2.0, -2.0])
    U = exp_cubic_I(X, 4.0)
    _check(U, X, tol=1e-13)
    with pytest.raises(StructureError):
        exp_cubic_I(1j * np.diag([1.0, 2.0, -1.0, -2.0]), 4.0)


# -- tridiagonal -----------------------------------------------------------

def test_tridiag_zero_is_identity():
    res = exp_tridiag(SymTriDiag(0.0, 0.0, 0.0))
    assert np.abs(res.U - np.eye(4)).max() < 1e-14


def test_tridiag_matches_oracle():
    rng = np.random.default_rng(60)
    for _ in range(200):
        S = SymTriDiag(*rng.uniform(-5, 5, 3))
        res = exp_tridiag(S)
        _check(res.U, S.matrix())
        assert res.method == "tridiag"


def test_tridiag_factors_commute():
    # The two generator pieces the formula splits into commute, and each
    # squares to a (negative) scalar, so the two rotation factors are exact.
    from su4exp.model import mat_pure_pure
    from su4exp.quaternion import PureQuaternion
    ex = PureQuaternion(1.0, 0.0, 0.0)
    ey = PureQuaternion(0.0, 1.0, 0.0)
    ez = PureQuaternion(0.0, 0.0, 1.0)
    rng = np.random.default_rng(61)
    for _ in range(50):
        a, b, g = rng.uniform(-3, 3, 3)
        r = PureQuaternion(0.0, b / 2.0, 0.0)
        t = PureQuaternion(0.0, (g - a) / 2.0, 0.0)
        s = PureQuaternion(b / 2.0, 0.0, (a + g) / 2.0)
        Y1 = 1j * (mat_pure_pure(r, ex) + mat_pure_pure(t, ez))
        Y2 = 1j * mat_pure_pure(s, ey)
        S = SymTriDiag(a, b, g)
        assert np.abs(Y1 + Y2 - S.matrix()).max() < 1e-12
        assert np.abs(Y1 @ Y2 - Y2 @ Y1).max() < 1e-12
        for Y in (Y1, Y2):
            sq = Y @ Y
            assert np.abs(sq - sq[0, 0] * np.eye(4)).max() < 1e-12


def test_tridiag_time_scaling():
    S0 = (1.3, -0.4, 2.2)
    for t in (0.1, 1.0, 10.0):
        S = SymTriDiag(*(t * v for v in S0))
        _check(exp_tridiag(S).U, S.matrix())


# -- perskewsymmetric ------------------------------------------------------

def _perskew_element(rng):
    coeffs = rng.uniform(-5, 5, 6)
    H = (coeffs[0] * pauli_kron("z", "0") + coeffs[1] * pauli_kron("x", "z")
         + coeffs[2] * pauli_kron("y", "z") + coeffs[3] * pauli_kron("0", "z")
         + coeffs[4] * pauli_kron("z", "x") + coeffs[5] * pauli_kron("z", "y"))
    return Su4Element(1j * H + 1j * rng.uniform(-2, 2) * np.eye(4))


def test_perskew_matches_oracle():
    rng = np.random.default_rng(62)
    for _ in range(200):
        X = _perskew_element(rng)
        assert is_perskew(X)
        res = exp_perskew(X)
        _check(res.U, X.entries)


def test_perskew_diagonal_case():
    # Single sigma_z (x) I term: diagonal rotation.
    X = Su4Element(1j * pauli_kron("z", "0"))
    U = exp_perskew(X).U
    expected = np.diag(np.exp(1j * np.array([1.0, 1.0, -1.0, -1.0])))
    assert np.abs(U - expected).max() < 1e-14


def test_perskew_rejects_generic():
    rng = np.random.default_rng(63)
    A = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    X = Su4Element(0.5 * (A - A.conj().T))
    with pytest.raises(StructureError):
        exp_perskew(X)


def test_perskew_triples_anticommute_and_commute():
    tr1 = [pauli_kron("z", "0"), pauli_kron("x", "z"), pauli_kron("y", "z")]
    tr2 = [pauli_kron("0", "z"), pauli_kron("z", "x"), pauli_kron("z", "y")]
    for i in range(3):
        for j in range(3):
            if i != j:
                assert np.abs(tr1[i] @ tr1[j] + tr1[j] @ tr1[i]).max() < 1e-14
                assert np.abs(tr2[i] @ tr2[j] + tr2[j] @ tr2[i]).max() < 1e-14
            assert np.abs(tr1[i] @ tr2[j] - tr2[j] @ tr1[i]).max() < 1e-14


# -- skew-Hamiltonian ------------------------------------------------------

def _skewham_element(rng):
    coeffs = rng.uniform(-5, 5, 5)
    H = (coeffs[0] * pauli_kron("y", "y") + coeffs[1] * pauli_kron("0", "z")
         + coeffs[2] * pauli_kron("0", "x") + coeffs[3] * pauli_kron("z", "y")
         + coeffs[4] * pauli_kron("x", "y"))
    return Su4Element(1j * H + 1j * rng.uniform(-2, 2) * np.eye(4))


def test_skewham_matches_oracle():
    rng = np.random.default_rng(64)
    for _ in range(200):
        X = _skewham_element(rng)
        assert is_skew_hamiltonian(X)
        res = exp_skewham(X)
        _check(res.U, X.entries)


def test_skewham_single_term():
    X = Su4Element(1j * pauli_kron("y", "y"))
    U = exp_skewham(X).U
    expected = math.cos(1.0) * np.eye(4) + 1j * math.sin(1.0) * pauli_kron("y", "y")
    assert np.abs(U - expected).max() < 1e-14


def test_skewham_terms_anticommute():
    terms = [pauli_kron("y", "y"), pauli_kron("0", "z"), pauli_kron("0", "x"),
             pauli_kron("z", "y"), pauli_kron("x", "y")]
    for i in range(5):
        for j in range(i + 1, 5):
            assert np.abs(terms[i] @ terms[j] + terms[j] @ terms[i]).max() < 1e-14
    # The anticommutation makes any linear combination square to a scalar.
    rng = np.random.default_rng(65)
    c = rng.normal(size=5)
    Y = sum(ci * ti for ci, ti in zip(c, terms))
    assert np.abs(Y @ Y - float(c @ c) * np.eye(4)).max() < 1e-12


# -- imaginary symmetric / bisymmetric -------------------------------------

def _imsym_element(rng):
    C = rng.uniform(-5, 5, (3, 3))
    X = Su4Element.from_quintuple(np.zeros(3), np.zeros(3),
                                  C[:, 0], C[:, 1], C[:, 2],
                                  scalar=rng.uniform(-2, 2))
    return X


def test_imsym_matches_oracle():
    rng = np.random.default_rng(66)
    for _ in range(200):
        X = _imsym_element(rng)
        assert is_imaginary_symmetric(X)
        res = exp_imaginary_symmetric(X)
        _check(res.U, X.entries)


def test_imsym_factors_commute():
    from su4exp.eig3 import eigh3
    from su4exp.expm import _imsym_factors
    from su4exp.model import mat_pure_pure
    rng = np.random.default_rng(67)
    for _ in range(50):
        Cmat = rng.uniform(-3, 3, (3, 3))
        _, V = eigh3(Cmat.T @ Cmat)
        Fs = []
        for i in range(3):
            v = V[:, i]
            u = Cmat @ v
            s = math.sqrt(float(u @ u))
            M = 1j * mat_pure_pure(u, v)
            Fs.append(math.cos(s) * np.eye(4) + (sinc(s)) * M)
        for i in range(3):
            for j in range(i + 1, 3):
                assert np.abs(Fs[i] @ Fs[j] - Fs[j] @ Fs[i]).max() < 1e-12
        prod = Fs[0] @ Fs[1] @ Fs[2]
        assert np.abs(prod - _imsym_factors(Cmat, V)).max() < 1e-12


def test_bisym_matches_oracle_all_block_positions():
    rng = np.random.default_rng(68)
    for i0 in range(3):
        for j0 in range(3):
            for _ in range(20):
                C = rng.uniform(-4, 4, (3, 3))
                C[i0, :] = 0.0
                C[:, j0] = 0.0
                C[i0, j0] = rng.uniform(-4, 4)
                X = Su4Element.from_quintuple(np.zeros(3), np.zeros(3),
                                              C[:, 0], C[:, 1], C[:, 2])
                assert is_bisymmetric(X)
                res = exp_bisymmetric_fast(X)
                assert res.method == "bisym"
                _check(res.U, X.entries)


def test_bisym_degenerate_angle():
    # Already-orthogonal columns: theta = 0 and the factors are immediate.
    C = np.diag([2.0, -1.0, 0.5])
    X = Su4Element.from_quintuple(np.zeros(3), np.zeros(3),
                                  C[:, 0], C[:, 1], C[:, 2])
    res = exp_bisymmetric_fast(X)
    _check(res.U, X.entries, tol=1e-12)


def test_bisym_rejects_full_interaction():
    rng = np.random.default_rng(69)
    C = rng.uniform(1, 2, (3, 3))
    X = Su4Element.from_quintuple(np.zeros(3), np.zeros(3),
                                  C[:, 0], C[:, 1], C[:, 2])
    with pytest.raises(StructureError):
        exp_bisymmetric_fast(X)


# -- commuting real/imaginary split ----------------------------------------

def test_normal_split_matches_oracle():
    rng = np.random.default_rng(70)
    sampler = FAMILIES["normal-split"][0]
    for _ in range(200):
        X = sampler(rng)
        assert is_normal_element(X)
        res = exp_normal_split(X)
        _check(res.U, X.entries)


def test_normal_split_rejects_noncommuting():
    X = Su4Element.from_quintuple([1.0, 0, 0], [0, 0, 0],
                                  [0, 1.0, 0], [1.0, 0, 0], [0, 0, 0])
    if not is_normal_element(X):
        with pytest.raises(StructureError):
            exp_normal_split(X)


# -- dispatcher ------------------------------------------------------------

def test_exp_auto_intended_methods():
    rng = np.random.default_rng(71)
    expected = {
        "tridiag": "tridiag", "perskew": "perskew", "skewham": "skewham",
        "imsym": "imsym", "bisym": "bisym", "normal-split": "normal-split",
        "quad-I": "quad-I", "quad-II": "quad-II", "cubic-I": "cubic-I",
    }
    for name, (sampler, _) in FAMILIES.items():
        for _ in range(20):
            X = sampler(rng)
            res = exp_auto(X)
            assert res.method == expected[name], (name, res.method)
            _check(res.U, X.entries, tol=1e-9)


def test_exp_auto_magic_path():
    V = MAGIC_BASIS
    T = SymTriDiag(1.0, 2.0, 3.0).matrix()
    X = Su4Element(V.conj().T @ T @ V)
    res = exp_auto(X)
    assert res.method == "magic"
    _check(res.U, X.entries, tol=1e-12)


def test_exp_auto_oracle_fallback():
    rng = np.random.default_rng(72)
    A = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    X = Su4Element(0.5 * (A - A.conj().T))
    res = exp_auto(X)
    assert res.method == "oracle"
    _check(res.U, X.entries, tol=1e-12)


def test_exp_auto_determinant_phase():
    # det e^X = e^{tr X} = e^{4ib} for traceless-plus-scalar input.
    rng = np.random.default_rng(73)
    for name, (sampler, _) in FAMILIES.items():
        X = sampler(rng)
        b = X.scalar
        U = exp_auto(X).U
        assert abs(np.linalg.det(U) - cmath.exp(4j * b)) < 1e-9


def test_time_scaling_families():
    rng = np.random.default_rng(74)
    for name, (sampler, _) in FAMILIES.items():
        X = sampler(rng)
        for t in (0.1, 1.0, 10.0):
            Y = Su4Element(t * X.entries)
            res = exp_auto(Y)
            _check(res.U, Y.entries, tol=1e-9)


def test_is_tridiagonal_predicate():
    assert is_tridiagonal_type(Su4Element(SymTriDiag(1, 2, 3).matrix()))
    assert not is_tridiagonal_type(Su4Element(1j * pauli_kron("x", "x")))
