import numpy as np
import pytest
import scipy.linalg

from diskslepian.linalg import (AsymmetryError, EigenPair, SymTridiagonal,
                                dense_sym_eigen, symtri_eigen)

import oracles


def test_symtri_2x2_analytic():
    T = SymTridiagonal([2.0, 2.0], [-1.0])
    pairs = symtri_eigen(T, 2)
    assert [p.value for p in pairs] == pytest.approx([1.0, 3.0], abs=1e-14)


def test_symtri_diagonal():
    T = SymTridiagonal([5.0, 5.0, 5.0], [0.0, 0.0])
    pairs = symtri_eigen(T, 3)
    assert [p.value for p in pairs] == pytest.approx([5.0, 5.0, 5.0], abs=1e-14)


def test_symtri_vs_sturm_bisection_oracle():
    diag = [float(k * k) for k in range(1, 7)]
    off = [1.0] * 5
    pairs = symtri_eigen(SymTridiagonal(diag, off), 6)
    ref = oracles.tridiag_eigs_bisect(diag, off, 6)
    for p, r in zip(pairs, ref):
        assert abs(p.value - float(r)) <= 1e-12 * max(1.0, abs(float(r)))


def test_symtri_residual_and_orthogonality():
    rng = np.random.default_rng(3)
    T = SymTridiagonal(rng.normal(size=40), rng.normal(size=39))
    pairs = symtri_eigen(T, 40)
    vals = np.array([p.value for p in pairs])
    assert np.all(np.diff(vals) >= 0)
    V = np.array([p.vector for p in pairs]).T
    norm = T.norm_bound()
    for p in pairs:
        assert np.linalg.norm(T.matvec(p.vector) - p.value * p.vector) <= 1e-11 * norm
        assert abs(np.linalg.norm(p.vector) - 1.0) <= 1e-12
    assert np.max(np.abs(V.T @ V - np.eye(40))) <= 1e-10
    # trace preservation
    assert np.sum(vals) == pytest.approx(np.sum(T.diag), rel=1e-10)


def test_offdiag_sign_flip_similarity():
    rng = np.random.default_rng(11)
    d = rng.normal(size=12)
    e = rng.normal(size=11)
    base = symtri_eigen(SymTridiagonal(d, e), 12)
    flipped = symtri_eigen(SymTridiagonal(d, -e), 12)
    signs = (-1.0) ** np.arange(12)
    for p, q in zip(base, flipped):
        assert q.value == pytest.approx(p.value, rel=1e-12, abs=1e-12)
        # D T D^-1 with D = diag(+-1) flips component signs predictably
        flipped_vec = signs * p.vector
        if np.dot(flipped_vec, q.vector) < 0:
            flipped_vec = -flipped_vec
        assert np.max(np.abs(flipped_vec - q.vector)) <= 1e-9


def test_symtri_count_validation():
    T = SymTridiagonal([1.0, 2.0], [0.5])
    with pytest.raises(ValueError):
        symtri_eigen(T, 3)
    with pytest.raises(ValueError):
        symtri_eigen(T, 0)


def test_dense_identity_and_rank_one():
    pairs = dense_sym_eigen(np.eye(4), 4)
    assert [p.value for p in pairs] == pytest.approx([1.0] * 4, abs=1e-14)
    v = np.array([0.5, -0.5, 0.5, 0.5])
    pairs = dense_sym_eigen(np.outer(v, v), 4)
    assert pairs[0].value == pytest.approx(1.0, abs=1e-13)
    assert [abs(p.value) for p in pairs[1:]] == pytest.approx([0.0] * 3, abs=1e-13)
    # dominant eigenvector reproduces v up to the deterministic sign rule
    assert np.max(np.abs(np.abs(pairs[0].vector) - np.abs(v))) <= 1e-12
    assert pairs[0].vector[np.argmax(np.abs(pairs[0].vector))] > 0


def test_dense_vs_tridiagonalized_path():
    rng = np.random.default_rng(5)
    A = rng.normal(size=(8, 8))
    A = 0.5 * (A + A.T)
    dense = sorted(p.value for p in dense_sym_eigen(A, 8))
    H, q = scipy.linalg.hessenberg(A, calc_q=True)
    T = SymTridiagonal(np.diag(H), np.diag(H, 1))
    tri = [p.value for p in symtri_eigen(T, 8)]
    assert np.max(np.abs(np.array(dense) - np.array(tri))) <= 1e-10


def test_dense_ordering_by_magnitude():
    A = np.diag([0.1, -3.0, 2.0, -0.5])
    pairs = dense_sym_eigen(A, 4)
    assert [p.value for p in pairs] == pytest.approx([-3.0, 2.0, -0.5, 0.1])


def test_dense_asymmetry_error():
    A = np.array([[1.0, 2.0], [2.1, 1.0]])
    with pytest.raises(AsymmetryError):
        dense_sym_eigen(A, 1)
