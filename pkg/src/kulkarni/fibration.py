"""The projection Pi: Omega -> H_R^n, hyperbolic coordinates and Lorentz matrices.

Real Lorentz matrices act on C^{n,1} coordinatewise; ``J = diag(1, ..., 1, -1)``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hermitian import DEFAULT_TOL, as_vector, conj_dependent, f_value, herm_inner, herm_norm, norm2
from .projective import ProjectivePoint, normalize


class DomainError(ValueError):
    """Point outside the domain of Pi."""


def minkowski_j(n: int) -> np.ndarray:
    j = np.eye(n + 1)
    j[n, n] = -1.0
    return j


def lorentz_residual(a: np.ndarray) -> float:
    """max |A^T J A - J| entrywise."""
    a = np.asarray(a, dtype=float)
    j = minkowski_j(a.shape[0] - 1)
    return float(np.max(np.abs(a.T @ j @ a - j)))


@dataclass(frozen=True)
class IsometryMatrix:
    """A real (n+1)x(n+1) matrix preserving the form of signature (n,1)."""

    entries: np.ndarray

    @property
    def n(self) -> int:
        return self.entries.shape[0] - 1

    def check(self, atol: float = 1e-10) -> None:
        """Raise if the matrix fails A^T J A = J, det = +1 or time orientation."""
        if lorentz_residual(self.entries) > atol:
            raise ValueError("matrix does not preserve the Hermitian form")
        det = np.linalg.det(self.entries)
        if abs(det - 1.0) > 1e-8:
            raise ValueError(f"determinant {det:+.6g} is not +1")
        if self.entries[-1, -1] < 1.0 - atol:
            raise ValueError("matrix reverses time orientation")

    def __matmul__(self, other):
        if isinstance(other, IsometryMatrix):
            return IsometryMatrix(self.entries @ other.entries)
        return np.asarray(other) @ self.entries.T

    def apply(self, z) -> np.ndarray:
        """A z for a vector or a batch of vectors (last axis n+1)."""
        return as_vector(z) @ self.entries.T


# --- Pi ---------------------------------------------------------------------


def eta(z):
    """Principal square root of -<z, conj z> = z_{n+1}^2 - z_1^2 - ... - z_n^2.

    Real part >= 0; on the imaginary axis the root with nonnegative imaginary
    part is chosen.
    """
    z = as_vector(z)
    e2 = -herm_inner(z, np.conj(z))
    # adding 0.0 turns a -0.0 imaginary part into +0.0 before the branch cut
    root = np.sqrt(np.asarray(e2 + 0.0, dtype=complex))
    # on the (relative) imaginary axis prefer Im >= 0; conj rather than -root
    # keeps the tiny real part nonnegative, and |Re| <= 1e-14 |root| bounds
    # the change in eta^2 by 4e-14 |eta|^2
    flip = (np.abs(root.real) <= 1e-14 * np.abs(root)) & (root.imag < 0)
    return np.where(flip, np.conj(root), root)


def pi_tilde_raw(z) -> np.ndarray:
    """z conj(eta) + conj(z) eta, with no domain check (batch friendly)."""
    z = as_vector(z)
    e = eta(z)[..., None]
    return z * np.conj(e) + np.conj(z) * e


def _in_pi_domain(z: np.ndarray, tol: float) -> bool:
    scale = float(norm2(z)) ** 2
    if f_value(z) > tol * scale:
        return True
    return bool(conj_dependent(z, tol)) and herm_norm(z) < -tol * float(norm2(z))


def pi_tilde(z, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Real negative vector representing Pi([z]); z in U_+ or real negative."""
    z = as_vector(z)
    if not _in_pi_domain(z, tol):
        raise DomainError("point outside domain of Pi")
    return np.real(pi_tilde_raw(z))


def pi_projection(z, tol: float = DEFAULT_TOL) -> ProjectivePoint:
    """Pi([z]) in H_R^n, as a normalized projective point."""
    z = as_vector(z)
    if not _in_pi_domain(z, tol):
        raise DomainError("point outside domain of Pi")
    if conj_dependent(z, tol):
        # real negative: Pi is the identity on H_R^n
        return normalize(z)
    return normalize(np.real(pi_tilde_raw(z)))


def eta_scaling_sign(z, alpha: complex) -> int:
    """The sign s = eta(alpha z) / (alpha eta(z)) in {+1, -1}.

    eta(alpha z)^2 = alpha^2 eta(z)^2, so the principal branch gives
    eta(alpha z) = +-alpha eta(z) and hence Pi~(alpha z) = s |alpha|^2 Pi~(z).
    The sign cannot be removed: any eta that depends only on eta^2 has
    eta(-z) = eta(z), so Pi~(-z) = -Pi~(z).
    """
    z = as_vector(z)
    e = complex(eta(z))
    if e == 0:
        raise DomainError("eta vanishes; the sign is undefined")
    ratio = complex(eta(alpha * z)) / (alpha * e)
    return 1 if ratio.real >= 0 else -1


def pi_image_norm(z):
    """2 |eta|^2 (<z, z> - |eta|^2), the closed form of <Pi~ z, Pi~ z>."""
    e = np.abs(eta(z)) ** 2
    return 2.0 * e * (herm_norm(z) - e)


# --- hyperbolic coordinates -----------------------------------------------


def _sphere_frame(angles: np.ndarray) -> tuple[np.ndarray, list[np.ndarray]]:
    """Unit vector u(t_2..t_n) in R^n and its unit tangents along t_2, ..., t_n.

    u_n = cos t_2, u_{n-1} = cos t_3 sin t_2, ..., u_1 = cos t_n prod sin,
    u_2 = sin t_n prod sin.  The tangent along t_j is cos(t_j) times the
    sub-sphere vector in (t_{j+1}..t_n), then -sin t_j, then zeros; for the
    azimuth t_n it is (-sin t_n, cos t_n, 0, ..., 0).
    """
    k = len(angles) + 1
    if k == 2:
        (t,) = angles
        return np.array([np.cos(t), np.sin(t)]), [np.array([-np.sin(t), np.cos(t)])]
    t2 = angles[0]
    sub_u, sub_tangents = _sphere_frame(angles[1:])
    u = np.append(np.sin(t2) * sub_u, np.cos(t2))
    tangents = [np.append(np.cos(t2) * sub_u, -np.sin(t2))]
    tangents += [np.append(e, 0.0) for e in sub_tangents]
    return u, tangents


def hyp_point(t) -> np.ndarray:
    """Affine coordinates (x_1, ..., x_n) of the point with hyperbolic coordinates t."""
    t = np.asarray(t, dtype=float)
    u, _ = _sphere_frame(t[1:])
    return np.tanh(t[0]) * u


def hyp_matrix(t) -> IsometryMatrix:
    """Lorentz matrix with columns A_1, ..., A_{n+1} carrying o to x(t).

    A_1 = (cosh t_1 u, sinh t_1), A_j = (tangent along t_j, 0) for 2 <= j <= n,
    A_{n+1} = (sinh t_1 u, cosh t_1).  Its determinant is that of the spatial
    frame (u, tangents), a constant sign depending only on n.
    """
    t = np.asarray(t, dtype=float)
    n = t.shape[0]
    if n < 2:
        raise ValueError("hyperbolic coordinates need n >= 2 parameters")
    u, tangents = _sphere_frame(t[1:])
    ch, sh = np.cosh(t[0]), np.sinh(t[0])
    a = np.zeros((n + 1, n + 1))
    a[:n, 0] = ch * u
    a[n, 0] = sh
    for j, e in enumerate(tangents, start=1):
        a[:n, j] = e
    a[:n, n] = sh * u
    a[n, n] = ch
    return IsometryMatrix(a)


@dataclass(frozen=True)
class AdaptedBasis:
    """W_1 = A_1 / cosh t_1, W_j = A_j, W_{n+1} = A_{n+1} / cosh t_1."""

    W: tuple[np.ndarray, ...]

    def as_matrix(self) -> np.ndarray:
        return np.column_stack(self.W)


def adapted_basis(t) -> AdaptedBasis:
    t = np.asarray(t, dtype=float)
    a = hyp_matrix(t).entries
    ch = np.cosh(t[0])
    cols = [a[:, j].copy() for j in range(a.shape[1])]
    cols[0] /= ch
    cols[-1] /= ch
    return AdaptedBasis(tuple(cols))


def fiber_point(t, y, x_last: float) -> ProjectivePoint:
    """The point A(t) [i y_1 : ... : i y_n : x_last] of the fiber L_x over x(t)."""
    t = np.asarray(t, dtype=float)
    y = np.asarray(y, dtype=float)
    if x_last == 0:
        raise ValueError("boundary point C_x, not in fiber")
    if y.shape != t.shape:
        raise ValueError("y needs one entry per hyperbolic coordinate")
    lo = np.append(1j * y, complex(x_last))
    return normalize(hyp_matrix(t).apply(lo))


# --- embedding and random isometries --------------------------------------


def iota_embed(g, n: int) -> IsometryMatrix:
    """Block embedding of SO+(m,1) into SO+(n,1): identity on coordinates m+1..n."""
    g = np.asarray(g.entries if isinstance(g, IsometryMatrix) else g, dtype=float)
    m = g.shape[0] - 1
    if m > n:
        raise ValueError(f"cannot embed SO+({m},1) into SO+({n},1)")
    out = np.eye(n + 1)
    out[:m, :m] = g[:m, :m]
    out[:m, n] = g[:m, m]
    out[n, :m] = g[m, :m]
    out[n, n] = g[m, m]
    return IsometryMatrix(out)


def boost(m: int, j: int, s: float) -> np.ndarray:
    """Boost with rapidity s in the (x_j, x_{m+1}) plane (j is 0-based)."""
    b = np.eye(m + 1)
    b[j, j] = b[m, m] = np.cosh(s)
    b[j, m] = b[m, j] = np.sinh(s)
    return b


def random_rotation(m: int, rng: np.random.Generator) -> np.ndarray:
    """Random SO(m) from a QR-orthonormalized Gaussian matrix, embedded spatially."""
    q, r = np.linalg.qr(rng.standard_normal((m, m)))
    q = q * np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    out = np.eye(m + 1)
    out[:m, :m] = q
    return out


def random_isometry(
    m: int, seed: int, k: int = 3, max_rapidity: float = 2.0, rotate: bool = True
) -> IsometryMatrix:
    """Product of k alternating random rotations and boosts; deterministic in (m, seed, k).

    Each boost acts in a random (x_j, x_{m+1}) plane with rapidity uniform in
    [-max_rapidity, max_rapidity].  ``max_rapidity=0, rotate=False`` gives the
    identity.
    """
    if m < 2 or k < 1:
        raise ValueError("need m >= 2 and k >= 1")
    rng = np.random.default_rng([seed, m, k])
    a = np.eye(m + 1)
    for _ in range(k):
        rot = random_rotation(m, rng)
        j = int(rng.integers(m))
        s = rng.uniform(-max_rapidity, max_rapidity)
        if rotate:
            a = a @ rot
        a = a @ boost(m, j, s)
    return IsometryMatrix(a)
