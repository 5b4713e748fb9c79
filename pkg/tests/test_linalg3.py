import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from mqlorenz import (
    DegenerateFrameError,
    characteristic_coeffs,
    cubic_roots,
    det3,
    eigenvalues3,
    find_equilibria,
    gram_schmidt3,
    jacobian,
)

finite_entries = st.floats(
    min_value=-10.0, max_value=10.0, allow_nan=False, allow_infinity=False
)


def mat3(entries):
    return np.array(entries, dtype=float).reshape(3, 3)


@st.composite
def matrices(draw):
    return mat3([draw(finite_entries) for _ in range(9)])


def test_det3_and_coeffs_on_known_matrix():
    m = mat3([2, 0, 0, 0, 3, 4, 0, 4, 9])
    assert det3(m) == 2.0 * (27.0 - 16.0)
    c2, c1, c0 = characteristic_coeffs(m)
    assert c2 == -14.0  # -(2 + 3 + 9)
    assert c0 == -22.0  # -det


@given(matrices())
@settings(max_examples=200, deadline=None)
def test_det3_matches_numpy(m):
    scale = 1.0 + float(np.max(np.abs(m))) ** 3
    assert abs(det3(m) - float(np.linalg.det(m))) <= 1e-10 * scale


def test_cubic_zero_constant_term_is_exact():
    # x^3 + 16x^2 + 48x: roots 0, -4, -12 with no rounding at all
    roots = cubic_roots(16.0, 48.0, 0.0)
    assert roots == (0.0, -4.0, -12.0)


def test_cubic_triple_root():
    # (x + 2)^3
    roots = cubic_roots(6.0, 12.0, 8.0)
    assert roots == (-2.0, -2.0, -2.0)


def test_cubic_known_complex_pair():
    # characteristic cubic at the positive rest point of the default system
    roots = cubic_roots(16.0, 464.0, 12288.0)
    expected = [
        complex(2.650106254574596, 23.87200430688619),
        complex(2.650106254574596, -23.87200430688619),
        complex(-21.300212509149187, 0.0),
    ]
    for r, e in zip(roots, expected):
        assert abs(r - e) <= 1e-11 * (1.0 + abs(e))


def test_roots_sorted_and_conjugate_paired():
    # x^3 + x: roots 0 and +-i, ordered by descending real then imaginary part
    roots = cubic_roots(0.0, 1.0, 0.0)
    assert roots == (complex(0.0, 1.0), 0.0, complex(0.0, -1.0))


@given(matrices())
@settings(max_examples=200, deadline=None)
def test_eigenvalues_satisfy_vieta(m):
    evs = eigenvalues3(m)
    c2, c1, c0 = characteristic_coeffs(m)
    scale = 1.0 + max(abs(c2), abs(c1), abs(c0))
    e1 = sum(evs)
    e2 = evs[0] * evs[1] + evs[0] * evs[2] + evs[1] * evs[2]
    e3 = evs[0] * evs[1] * evs[2]
    # sum behaves like the trace and the product like the determinant
    assert abs(e1 - (-c2)) <= 1e-8 * scale
    assert abs(e3 - (-c0)) <= 1e-8 * scale
    assert abs(e2 - c1) <= 1e-7 * scale
    # complex roots appear as an exact conjugate pair
    pair = [ev for ev in evs if ev.imag != 0.0]
    assert len(pair) in (0, 2)
    if pair:
        assert pair[0].real == pair[1].real
        assert pair[0].imag == -pair[1].imag
    # descending real parts
    res = [ev.real for ev in evs]
    assert res == sorted(res, reverse=True)


@given(matrices())
@settings(max_examples=200, deadline=None)
def test_eigenvalues_match_numpy_when_well_separated(m):
    ours = eigenvalues3(m)
    theirs = sorted(np.linalg.eigvals(m), key=lambda v: (-v.real, -v.imag))
    scale = 1.0 + max(abs(v) for v in theirs)
    gaps = [abs(theirs[i] - theirs[j]) for i in range(3) for j in range(i + 1, 3)]
    # clustered spectra are ill-conditioned for both methods; skip those
    assume(min(gaps) > 1e-2 * scale)
    for a, b in zip(ours, theirs):
        assert abs(a - complex(b)) <= 1e-7 * scale


def test_eigenvalues_of_default_jacobians(params):
    origin = eigenvalues3(jacobian((0.0, 0.0, 0.0), params))
    assert origin == (0.0, -4.0, -12.0)
    e_plus = find_equilibria(params)[1]
    evs = eigenvalues3(jacobian(e_plus.location, params))
    assert abs(evs[0] - complex(2.650106254574596, 23.87200430688619)) < 1e-9
    assert abs(evs[2] - (-21.300212509149187)) < 1e-9


@given(matrices())
@settings(max_examples=200, deadline=None)
def test_gram_schmidt_orthonormal_and_volume(m):
    assume(abs(float(np.linalg.det(m))) > 1e-3)
    q, norms = gram_schmidt3(m)
    assert np.allclose(q.T @ q, np.eye(3), atol=1e-10)
    assert np.all(norms > 0.0)
    # the norms multiply out to the frame's volume
    vol = float(np.prod(norms))
    target = abs(float(np.linalg.det(m)))
    assert abs(vol - target) <= 1e-8 * (1.0 + target)
    # first column keeps its direction
    v0 = m[:, 0]
    assert np.allclose(q[:, 0], v0 / np.linalg.norm(v0), atol=1e-12)


def test_gram_schmidt_rejects_exactly_dependent_frame():
    frame = np.array([[1.0, 0.0, 1.0], [0.0, 1.0, 1.0], [0.0, 0.0, 0.0]])
    with pytest.raises(DegenerateFrameError):
        gram_schmidt3(frame)


def test_gram_schmidt_rejects_nonfinite():
    frame = np.eye(3)
    frame[2, 2] = float("inf")
    with pytest.raises(DegenerateFrameError):
        gram_schmidt3(frame)
