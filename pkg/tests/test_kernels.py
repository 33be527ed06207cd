import os
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hue import kernels
from hue._accel import numba_enabled, thread_cap
from hue.complexes import build_coloring_complex, cube_complex
from hue.hypergraph import generate_family
from strategies import hypergraphs

TORUS = generate_family("torus9")


@given(hypergraphs(max_n=6), st.integers(1, 4))
def test_coloring_backends_agree(hg, k):
    a = kernels.count_proper_colorings(hg.n, hg.masks, k, backend="numba")
    b = kernels.count_proper_colorings(hg.n, hg.masks, k, backend="numpy")
    assert a == b


@given(hypergraphs(max_n=6))
def test_face_count_backends_agree(hg):
    a = kernels.cube_faces_outside_box(hg.n, hg.masks, backend="numba")
    b = kernels.cube_faces_outside_box(hg.n, hg.masks, backend="numpy")
    assert a == b


def test_torus_face_counts_match_between_backends():
    a = kernels.cube_faces_outside_box(9, TORUS.masks, backend="numba")
    b = kernels.cube_faces_outside_box(9, TORUS.masks, backend="numpy")
    assert a == b and a[0] == 330


def test_face_counts_without_edges_are_the_cube():
    assert kernels.cube_faces_outside_box(3, []) == list(cube_complex(3).f_vector[1:])


def test_coloring_edge_cases():
    assert kernels.count_proper_colorings(0, [], 3) == 1
    assert kernels.count_proper_colorings(3, [0b111], 0) == 0
    assert kernels.count_proper_colorings(3, [0b111], 3) == 24
    with pytest.raises(ValueError):
        kernels.count_proper_colorings(3, [0b111], -1)
    with pytest.raises(kernels.BudgetExceeded):
        kernels.count_proper_colorings(30, [0b11], 3)
    with pytest.raises(ValueError):
        kernels.count_proper_colorings(3, [0b111], 2, backend="gpu")


def test_dp_budget():
    with pytest.raises(kernels.BudgetExceeded):
        kernels.cube_faces_outside_box(20, [1 << i | 1 << (i + 1) for i in range(10)])


def test_overflow_promotes_to_python_integers(monkeypatch):
    expected = kernels.cube_faces_outside_box(9, TORUS.masks, backend="numpy")
    monkeypatch.setattr(kernels, "INT64_LIMIT", 10)
    promoted = kernels.cube_faces_outside_box(9, TORUS.masks)
    assert promoted == expected
    assert all(type(x) is int for x in promoted)


def test_face_counts_are_complement_of_box():
    hg = generate_family("paper_6_nonpart")
    f = kernels.cube_faces_outside_box(hg.n, hg.masks)
    K = build_coloring_complex(hg)
    # the box complex is the double cone over the coloring complex
    fd = list(K.f_vector) + [0, 0]
    box = [fd[i] + 2 * (fd[i - 1] if i else 0) + (fd[i - 2] if i > 1 else 0) for i in range(len(fd))]
    cube = cube_complex(hg.n).f_vector
    for i in range(hg.n + 1):
        b = box[i + 1] if i + 1 < len(box) else 0
        assert f[i] == cube[i + 1] - b


def test_env_flag_selects_numpy_path():
    code = "from hue._accel import numba_enabled; from hue.kernels import _pick; print(numba_enabled(), _pick(None))"
    env = dict(os.environ, HUE_DISABLE_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["False", "numpy"]


def test_thread_cap(monkeypatch):
    monkeypatch.delenv("HUE_THREADS", raising=False)
    assert thread_cap() is None
    monkeypatch.setenv("HUE_THREADS", "2")
    assert thread_cap() == 2
    monkeypatch.setenv("HUE_THREADS", "zero")
    assert thread_cap() is None
    monkeypatch.setenv("HUE_THREADS", "1")
    if numba_enabled():
        assert kernels.count_proper_colorings(4, [0b0011], 3) == 54
