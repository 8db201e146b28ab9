"""The indefinite Hermitian space C^{n,1}.

Vectors are numpy complex arrays whose last axis holds the n+1 homogeneous
coordinates; every function here broadcasts over leading axes, so a batch of
points is just an array of shape ``(..., n+1)``.  Scalar classification
functions (``classify_vector``, ``span_class_*``) expect a single vector.

All zero tests are relative: a quantity of degree ``2k`` in the coordinates is
compared against ``tol`` times the product of the squared Euclidean norms of
the participating vectors.
"""
from __future__ import annotations

import enum

import numpy as np

DEFAULT_TOL = 1e-9


class DimensionError(ValueError):
    """Vectors from spaces of different dimension were combined."""


class VectorClass(enum.Enum):
    NEGATIVE = "Negative"
    NULL = "Null"
    POSITIVE = "Positive"


class SpanClass(enum.Enum):
    ELLIPTIC = "Elliptic"
    HYPERBOLIC = "Hyperbolic"
    PARABOLIC = "Parabolic"
    DEPENDENT_PAIR = "DependentPair"


def as_vector(coords) -> np.ndarray:
    """Coerce ``coords`` to a complex array representing vectors of C^{n,1}.

    The last axis must have length n+1 with n >= 2.
    """
    z = np.asarray(coords, dtype=complex)
    if z.ndim == 0 or z.shape[-1] < 3:
        raise DimensionError(
            f"need at least 3 homogeneous coordinates (n >= 2), got shape {z.shape}"
        )
    return z


def _nonzero(z: np.ndarray) -> np.ndarray:
    if np.any(norm2(z) == 0.0):
        raise ValueError("the zero vector has no projective class")
    return z


def _same_space(z: np.ndarray, w: np.ndarray) -> None:
    if z.shape[-1] != w.shape[-1]:
        raise DimensionError(
            f"incompatible spaces: C^{{{z.shape[-1] - 1},1}} vs C^{{{w.shape[-1] - 1},1}}"
        )


def dim(z) -> int:
    """The n of C^{n,1} that ``z`` lives in."""
    return as_vector(z).shape[-1] - 1


def norm2(z) -> np.ndarray:
    """Squared Euclidean norm of the coordinate vector."""
    z = np.asarray(z, dtype=complex)
    return np.sum(z.real**2 + z.imag**2, axis=-1)


def herm_inner(z, w):
    """<z, w> = z_1 conj(w_1) + ... + z_n conj(w_n) - z_{n+1} conj(w_{n+1})."""
    z = as_vector(z)
    w = as_vector(w)
    _same_space(z, w)
    wc = np.conj(w)
    return np.sum(z[..., :-1] * wc[..., :-1], axis=-1) - z[..., -1] * wc[..., -1]


def herm_norm(z):
    """<z, z> as a real number (or array)."""
    return np.real(herm_inner(z, z))


def classify_vector(z, tol: float = DEFAULT_TOL) -> VectorClass:
    z = _nonzero(as_vector(z))
    q = float(herm_norm(z))
    if abs(q) <= tol * float(norm2(z)):
        return VectorClass.NULL
    return VectorClass.POSITIVE if q > 0 else VectorClass.NEGATIVE


def gram2(z1, z2) -> np.ndarray:
    """Gram matrix [[<z1,z1>, <z1,z2>], [<z2,z1>, <z2,z2>]] (Hermitian)."""
    z1 = as_vector(z1)
    z2 = as_vector(z2)
    _same_space(z1, z2)
    a = herm_norm(z1)
    c = herm_norm(z2)
    b = herm_inner(z1, z2)
    g = np.empty(np.broadcast(a, c).shape + (2, 2), dtype=complex)
    g[..., 0, 0] = a
    g[..., 0, 1] = b
    g[..., 1, 0] = np.conj(b)
    g[..., 1, 1] = c
    return g


def gram_det(z1, z2):
    """det G = <z1,z1><z2,z2> - |<z1,z2>|^2, a real number."""
    z1 = as_vector(z1)
    z2 = as_vector(z2)
    _same_space(z1, z2)
    b = herm_inner(z1, z2)
    return herm_norm(z1) * herm_norm(z2) - (b.real**2 + b.imag**2)


def gram_eigenvalues(z1, z2):
    """Closed-form eigenvalues (lambda_1 >= lambda_2) of the 2x2 Gram matrix."""
    z1 = as_vector(z1)
    z2 = as_vector(z2)
    _same_space(z1, z2)
    a = herm_norm(z1)
    c = herm_norm(z2)
    b = herm_inner(z1, z2)
    root = np.sqrt((a - c) ** 2 + 4.0 * (b.real**2 + b.imag**2))
    return (a + c + root) / 2.0, (a + c - root) / 2.0


def span_class_det(z1, z2, tol: float = DEFAULT_TOL) -> SpanClass:
    """Sylvester type of span(z1, z2) from the sign of det G."""
    z1 = as_vector(z1)
    z2 = as_vector(z2)
    d = float(gram_det(z1, z2))
    if abs(d) <= tol * float(norm2(z1) * norm2(z2)):
        return SpanClass.PARABOLIC
    return SpanClass.ELLIPTIC if d > 0 else SpanClass.HYPERBOLIC


def span_class_eig(z1, z2, tol: float = DEFAULT_TOL) -> SpanClass:
    """Sylvester type of span(z1, z2) from the signs of the Gram eigenvalues.

    Independent of ``span_class_det``: the determinant is never formed.  An
    eigenvalue counts as zero when it is within ``tol * |z1| |z2|`` of 0
    (eigenvalues are quadratic in the coordinates).
    """
    z1 = as_vector(z1)
    z2 = as_vector(z2)
    lam1, lam2 = (float(x) for x in gram_eigenvalues(z1, z2))
    eps = tol * float(np.sqrt(norm2(z1) * norm2(z2)))
    if abs(lam2) <= eps or abs(lam1) <= eps:
        return SpanClass.PARABOLIC
    if lam2 > 0:
        return SpanClass.ELLIPTIC
    if lam1 > 0:
        return SpanClass.HYPERBOLIC
    raise ArithmeticError("negative definite 2-plane cannot occur in signature (n,1)")


def f_value(z):
    """The invariant f(z) = |<z, conj z>|^2 - <z, z>^2 (equals -det G(z, conj z))."""
    z = as_vector(z)
    s = herm_inner(z, np.conj(z))
    q = herm_norm(z)
    return (s.real**2 + s.imag**2) - q * q


def f_value_coords(z):
    """Coordinate form of f, kept as an independent check of ``f_value``.

    f = 4 sum_j (x_j y_{n+1} - x_{n+1} y_j)^2 - 4 sum_{j<k<=n} (x_j y_k - x_k y_j)^2
    with x = Re z, y = Im z.
    """
    z = as_vector(z)
    x = z.real
    y = z.imag
    xs, ys = x[..., :-1], y[..., :-1]
    xt, yt = x[..., -1:], y[..., -1:]
    time_part = np.sum((xs * yt - xt * ys) ** 2, axis=-1)
    minors = xs[..., :, None] * ys[..., None, :] - xs[..., None, :] * ys[..., :, None]
    space_part = 0.5 * np.sum(minors**2, axis=(-2, -1))
    return 4.0 * time_part - 4.0 * space_part


def conj_minor_max(z):
    """max_{j<k} |z_j conj(z_k) - z_k conj(z_j)| (the minors of z and conj z)."""
    z = as_vector(z)
    m = z[..., :, None] * np.conj(z[..., None, :])
    return np.max(np.abs(m - np.swapaxes(m, -1, -2)), axis=(-2, -1))


def conj_dependent(z, tol: float = DEFAULT_TOL):
    """True iff z and conj(z) are linearly dependent, i.e. [z] is a real point."""
    z = _nonzero(as_vector(z))
    return conj_minor_max(z) <= tol * norm2(z)
