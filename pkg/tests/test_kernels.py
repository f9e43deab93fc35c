"""Backend equivalence: the numba kernels and the numpy fallback must
return identical arrays on identical inputs."""

import numpy as np
import pytest

from trslab import kernels
from trslab import polyops as po
from trslab.field import make_field


FIELDS = [make_field(2, 3), make_field(2, 4), make_field(5, 2)]


@pytest.fixture(autouse=True)
def _restore_backend():
    yield
    kernels.set_backend(None)


def _both(fn):
    kernels.set_backend("numba")
    a = fn()
    kernels.set_backend("numpy")
    b = fn()
    return a, b


@pytest.mark.parametrize("ctx", FIELDS, ids=lambda c: c.descriptor())
def test_det_batch_backends_agree_and_match_reference(ctx):
    rng = np.random.default_rng(20)
    tables = ctx.tables()
    mats = rng.integers(0, ctx.q, size=(300, 4, 4))
    nb, npy = _both(lambda: kernels.det_batch(tables, mats))
    assert np.array_equal(nb, npy)
    for i in range(0, 300, 37):
        assert int(nb[i]) == po.det(ctx, mats[i])


@pytest.mark.parametrize("ctx", FIELDS, ids=lambda c: c.descriptor())
def test_det_batch_singular_and_small(ctx):
    tables = ctx.tables()
    mats = np.zeros((3, 2, 2), dtype=np.int64)
    mats[0] = np.eye(2)
    mats[1] = [[1, 1], [1, 1]]
    mats[2] = [[0, 1], [1, 0]]
    nb, npy = _both(lambda: kernels.det_batch(tables, mats))
    assert np.array_equal(nb, npy)
    assert nb[0] == 1 and nb[1] == 0
    assert int(nb[2]) == ctx.neg(1)


@pytest.mark.parametrize("ctx", FIELDS, ids=lambda c: c.descriptor())
def test_scan_syndromes_backends_agree(ctx):
    rng = np.random.default_rng(21)
    tables = ctx.tables()
    mu = rng.integers(0, ctx.q, size=(500, 4))
    classes = rng.integers(0, ctx.q, size=(200, 4))
    nb, npy = _both(lambda: kernels.scan_syndromes(tables, mu, classes))
    assert np.array_equal(nb, npy)
    # reference: first subset index with vanishing dot product
    for ci in range(0, 200, 23):
        expect = -1
        for si in range(500):
            acc = 0
            for j in range(4):
                acc = ctx.add(acc, ctx.mul(int(mu[si, j]), int(classes[ci, j])))
            if acc == 0:
                expect = si
                break
        assert int(nb[ci]) == expect


@pytest.mark.parametrize("ctx", FIELDS, ids=lambda c: c.descriptor())
def test_enumerate_codewords_backends_agree(ctx):
    rng = np.random.default_rng(22)
    tables = ctx.tables()
    G = rng.integers(0, ctx.q, size=(3, 6))
    nb, npy = _both(lambda: kernels.enumerate_codewords(tables, G))
    assert np.array_equal(nb, npy)
    assert nb.shape == (ctx.q**3, 6)
    # reference: encode one message by hand
    idx = min(ctx.q**3 - 1, 2 + ctx.q + ctx.q**2)
    digits = [idx % ctx.q, (idx // ctx.q) % ctx.q, (idx // ctx.q**2) % ctx.q]
    word = np.zeros(6, dtype=np.int64)
    for i, d in enumerate(digits):
        word = ctx.add_arr(word, ctx.mul_arr(np.int64(d), G[i]))
    assert np.array_equal(nb[idx], word)


def test_min_hamming_backends_agree():
    rng = np.random.default_rng(23)
    words = rng.integers(0, 8, size=(50, 9))
    codewords = rng.integers(0, 8, size=(400, 9))
    nb, npy = _both(lambda: kernels.min_hamming(words, codewords))
    assert np.array_equal(nb, npy)
    ref = (words[:, None, :] != codewords[None, :, :]).sum(axis=2).min(axis=1)
    assert np.array_equal(nb, ref)


def test_empty_inputs():
    ctx = make_field(2, 3)
    tables = ctx.tables()
    assert kernels.det_batch(tables, np.zeros((0, 3, 3))).size == 0
    assert kernels.scan_syndromes(tables, np.ones((4, 2)), np.zeros((0, 2))).size == 0
    assert kernels.min_hamming(np.zeros((0, 4)), np.zeros((5, 4))).size == 0


def test_backend_selection_and_env(monkeypatch):
    kernels.set_backend(None)
    monkeypatch.setenv("TRSLAB_BACKEND", "numpy")
    kernels.set_backend(None)
    assert kernels.get_backend() == "numpy"
    monkeypatch.delenv("TRSLAB_BACKEND")
    kernels.set_backend(None)
    assert kernels.get_backend() in ("numba", "numpy")
    with pytest.raises(ValueError):
        kernels.set_backend("fortran")


def test_warmup_runs_on_both_backends():
    tables = make_field(2, 2).tables()
    for backend in ("numba", "numpy"):
        kernels.set_backend(backend)
        kernels.warmup(tables)
