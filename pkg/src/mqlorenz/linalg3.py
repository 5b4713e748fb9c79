"""Small dense 3x3 helpers: determinants, characteristic polynomials,
closed-form cubic roots, and modified Gram-Schmidt orthonormalization.

Everything here is explicit scalar arithmetic so results are deterministic
and exact cases (zero constant term, integer coefficients) stay exact.
"""

import math

import numpy as np

from .errors import DegenerateFrameError

# imaginary parts below this (relative) size are rounding noise, not structure
SNAP_TOL = 1e-9

# a Gram-Schmidt norm at or below this is a numerically dependent frame
DEGENERATE_NORM = 1e-300


def det3(m):
    """Determinant of a 3x3 matrix by cofactor expansion along the first row."""
    a = np.asarray(m, dtype=float)
    if a.shape != (3, 3):
        raise ValueError(f"expected shape (3, 3), got {a.shape}")
    return float(
        a[0, 0] * (a[1, 1] * a[2, 2] - a[1, 2] * a[2, 1])
        - a[0, 1] * (a[1, 0] * a[2, 2] - a[1, 2] * a[2, 0])
        + a[0, 2] * (a[1, 0] * a[2, 1] - a[1, 1] * a[2, 0])
    )


def characteristic_coeffs(m):
    """Coefficients (c2, c1, c0) of det(lambda*I - m) = l^3 + c2 l^2 + c1 l + c0.

    c2 = -trace, c1 = sum of principal 2x2 minors, c0 = -det.
    """
    a = np.asarray(m, dtype=float)
    if a.shape != (3, 3):
        raise ValueError(f"expected shape (3, 3), got {a.shape}")
    c2 = -float(a[0, 0] + a[1, 1] + a[2, 2])
    c1 = float(
        (a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0])
        + (a[0, 0] * a[2, 2] - a[0, 2] * a[2, 0])
        + (a[1, 1] * a[2, 2] - a[1, 2] * a[2, 1])
    )
    c0 = -det3(a)
    return c2, c1, c0


def _eval_cubic(c2, c1, c0, r):
    return ((r + c2) * r + c1) * r + c0


def _polish_real(c2, c1, c0, r):
    # guarded Newton: a step counts only if it shrinks the residual, so the
    # tiny-slope jumps near multiple roots are rejected
    best = abs(_eval_cubic(c2, c1, c0, r))
    for _ in range(2):
        deriv = (3.0 * r + 2.0 * c2) * r + c1
        if deriv == 0.0:
            break
        step = _eval_cubic(c2, c1, c0, r) / deriv
        if not math.isfinite(step):
            break
        cand = r - step
        resid = abs(_eval_cubic(c2, c1, c0, cand))
        if resid >= best:
            break
        r, best = cand, resid
    return r


def _polish_complex(c2, c1, c0, r):
    best = abs(_eval_cubic(c2, c1, c0, r))
    for _ in range(2):
        deriv = (3.0 * r + 2.0 * c2) * r + c1
        if deriv == 0:
            break
        step = _eval_cubic(c2, c1, c0, r) / deriv
        if not (math.isfinite(step.real) and math.isfinite(step.imag)):
            break
        cand = r - step
        resid = abs(_eval_cubic(c2, c1, c0, cand))
        if resid >= best:
            break
        r, best = cand, resid
    return r


def _solve_quadratic(b, c):
    """Roots of l^2 + b l + c as a pair of complex numbers (stable form)."""
    disc = b * b - 4.0 * c
    if disc >= 0.0:
        sq = math.sqrt(disc)
        if b >= 0.0:
            q = -(b + sq) / 2.0
        else:
            q = -(b - sq) / 2.0
        r1 = q
        r2 = c / q if q != 0.0 else 0.0
        return complex(r1), complex(r2)
    half_im = math.sqrt(-disc) / 2.0
    re = -b / 2.0
    return complex(re, half_im), complex(re, -half_im)


def cubic_roots(c2, c1, c0):
    """All roots of l^3 + c2 l^2 + c1 l + c0 with real coefficients.

    Closed form (Cardano for one real root, trigonometric for three),
    followed by a Newton polish. Imaginary parts smaller than
    SNAP_TOL * (1 + |re|) are snapped to exactly zero, complex roots come
    in exactly conjugate pairs, and the result is sorted by descending
    real part (descending imaginary part within ties).

    Returns
    -------
    tuple of three complex numbers
    """
    c2, c1, c0 = float(c2), float(c1), float(c0)
    if c0 == 0.0:
        # exact factor lambda = 0; keeps integer spectra exact
        roots = [complex(0.0)] + list(_solve_quadratic(c2, c1))
    else:
        shift = -c2 / 3.0
        p = c1 - c2 * c2 / 3.0
        q = (2.0 * c2 * c2 * c2 / 27.0) - (c2 * c1 / 3.0) + c0
        if p == 0.0:
            # pure cubic t^3 = -q (the discriminant can underflow here)
            r = -math.copysign(abs(q) ** (1.0 / 3.0), q)
            half_spread = (math.sqrt(3.0) / 2.0) * abs(r)
            roots = [
                complex(r + shift),
                complex(-r / 2.0 + shift, half_spread),
                complex(-r / 2.0 + shift, -half_spread),
            ]
        else:
            qh = q / 2.0
            ph = p / 3.0
            disc = qh * qh + ph * ph * ph
            # p > 0 forces a positive discriminant even when disc underflows
            if disc > 0.0 or p > 0.0:
                # one real root; pick the large-magnitude cube root first
                sq = math.sqrt(max(disc, 0.0))
                u = -q / 2.0 - math.copysign(sq, q)
                a_part = math.copysign(abs(u) ** (1.0 / 3.0), u)
                b_part = -p / (3.0 * a_part)
                t_real = a_part + b_part
                re_pair = -t_real / 2.0
                im_pair = (math.sqrt(3.0) / 2.0) * (a_part - b_part)
                roots = [
                    complex(t_real + shift),
                    complex(re_pair + shift, abs(im_pair)),
                    complex(re_pair + shift, -abs(im_pair)),
                ]
            else:
                # three real roots (possibly repeated)
                scale = 2.0 * math.sqrt(-p / 3.0)
                denom = p * scale
                if denom == 0.0:
                    # subnormal p: the quotient's sign is all that survives
                    arg = 0.0 if q == 0.0 else math.copysign(1.0, -q)
                else:
                    arg = 3.0 * q / denom
                arg = min(1.0, max(-1.0, arg))
                phi = math.acos(arg)
                roots = [
                    complex(scale * math.cos((phi - 2.0 * math.pi * k) / 3.0) + shift)
                    for k in range(3)
                ]

    polished = []
    seen_pair = False
    for r in roots:
        if r.imag == 0.0:
            polished.append(complex(_polish_real(c2, c1, c0, r.real)))
        elif not seen_pair:
            # polish one member, mirror it to keep the pair exactly conjugate
            pr = _polish_complex(c2, c1, c0, r)
            polished.append(pr)
            polished.append(pr.conjugate())
            seen_pair = True
    roots = polished

    snapped = []
    for r in roots:
        if abs(r.imag) < SNAP_TOL * (1.0 + abs(r.real)):
            snapped.append(complex(r.real))
        else:
            snapped.append(r)
    snapped.sort(key=lambda r: (-r.real, -r.imag))
    return tuple(snapped)


def eigenvalues3(m):
    """Eigenvalues of a real 3x3 matrix via its characteristic cubic.

    Same snapping/ordering conventions as cubic_roots.
    """
    return cubic_roots(*characteristic_coeffs(m))


def gram_schmidt3(frame):
    """Modified Gram-Schmidt on the columns of a 3x3 frame.

    Returns
    -------
    (q, norms)
        q : ndarray (3, 3) with orthonormal columns spanning the same flags
        norms : ndarray (3,), the diagonal of R (growth factors per column)

    Raises
    ------
    DegenerateFrameError
        If a column's residual norm underflows (numerically dependent frame).
    """
    a = np.asarray(frame, dtype=float)
    if a.shape != (3, 3):
        raise ValueError(f"expected shape (3, 3), got {a.shape}")
    q = np.empty((3, 3))
    norms = np.empty(3)
    # non-finite input surfaces as a non-finite norm below, not as a warning
    with np.errstate(invalid="ignore", over="ignore"):
        for j in range(3):
            v = a[:, j].copy()
            for i in range(j):
                v -= (q[:, i] @ v) * q[:, i]
            norm = math.sqrt(float(v @ v))
            if not (norm > DEGENERATE_NORM) or not math.isfinite(norm):
                raise DegenerateFrameError(
                    f"column {j} has residual norm {norm!r}; frame is numerically dependent"
                )
            q[:, j] = v / norm
            norms[j] = norm
    return q, norms
