"""The compiled and pure-Python kernel backends must agree exactly."""

import numpy as np
import pytest

from nullforest import (
    available_backends,
    backend_name,
    maximum_matching,
    null_basis,
    set_backend,
    sparsest_basis,
    sparsest_nnz_count,
    support_set,
)

needs_ext = pytest.mark.skipif("ext" not in available_backends(),
                               reason="compiled backend not built")


@pytest.fixture
def restore_backend():
    original = backend_name()
    yield
    set_backend(original)


@needs_ext
def test_backends_agree_on_corpus(small_corpus, restore_backend):
    for name, f in small_corpus:
        results = {}
        for backend in ("py", "ext"):
            set_backend(backend)
            m = maximum_matching(f)
            basis = null_basis(f, m)
            results[backend] = (
                m.mate_array.tolist(),
                support_set(f, m),
                [(u, vec.entries) for u, vec in basis],
                [(u, vec.entries) for u, vec in sparsest_basis(f)],
                sparsest_nnz_count(f),
            )
        assert results["py"] == results["ext"], name


@needs_ext
def test_backend_switch_is_visible(restore_backend):
    assert set_backend("py") == "py"
    assert backend_name() == "py"
    assert set_backend("ext") == "ext"
    assert backend_name() == "ext"


def test_unknown_backend_rejected():
    with pytest.raises(ValueError):
        set_backend("fortran")


@needs_ext
def test_kernels_match_on_arrays(restore_backend):
    from nullforest import _kernels, _speedups
    from nullforest.forest import Forest

    f = Forest(7, [(0, 1), (1, 2), (2, 3), (1, 4), (4, 5)])  # 6 isolated
    args = (f._adj_ptr, f._adj_dat, f.n)
    for fn in ("component_labels", "leaf_matching"):
        py_out = getattr(_kernels, fn)(*args)
        ext_out = getattr(_speedups, fn)(*args)
        if isinstance(py_out, tuple):
            for a, b in zip(py_out, ext_out):
                assert np.array_equal(np.asarray(a), np.asarray(b)), fn
        else:
            assert np.array_equal(py_out, ext_out), fn
