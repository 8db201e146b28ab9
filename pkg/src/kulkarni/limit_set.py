"""Pointwise membership in the Kulkarni limit set Lambda and its complement Omega.

Lambda is the union of the complex hyperplanes H_p tangent to the boundary of
complex hyperbolic space at points p of the real (m-1)-sphere
{[w_1 : ... : w_m : 0 : ... : 0 : w_{n+1}] real, null}.  It is never enumerated;
membership is decided by the sign of f, of <z, z> and (for m = 2) of a 2x2
determinant on the projected coordinates.

``classify_batch`` is the only implementation of the decision procedure and
returns integer codes indexing ``LABELS``; the scalar entry points wrap it.
"""
from __future__ import annotations

import enum

import numpy as np

from .hermitian import DEFAULT_TOL, as_vector, conj_minor_max, f_value, herm_norm, norm2
from .projective import in_lambda0, q_project


class RegionLabel(enum.Enum):
    LAMBDA0 = "LAMBDA0"
    LAMBDA_REAL_EXTERIOR = "LAMBDA_REAL"
    LAMBDA_PARABOLIC = "LAMBDA_PARA"
    LAMBDA_INTERIOR = "LAMBDA_INT"
    OMEGA_ZERO = "OMEGA_0"
    OMEGA_MINUS = "OMEGA_MINUS"
    OMEGA_PLUS = "OMEGA_PLUS"
    OMEGA_SINGLE = "OMEGA"

    @property
    def in_lambda(self) -> bool:
        return self.name.startswith("LAMBDA")

    @property
    def in_omega(self) -> bool:
        return not self.in_lambda

    @classmethod
    def parse(cls, text: str) -> "RegionLabel":
        return cls(text)


class PartitionLabel(enum.Enum):
    U0 = "U0"
    UPLUS = "UPlus"
    UMINUS = "UMinus"


class DegenerateDeterminantError(ArithmeticError):
    """f < 0 on P_C^2 but Re/Im determinant of (p_1, p_2) vanishes."""


LABELS: tuple[RegionLabel, ...] = tuple(RegionLabel)
CODE = {label: i for i, label in enumerate(LABELS)}
DEGENERATE = -1
OMEGA_CODES = np.array([CODE[lab] for lab in LABELS if lab.in_omega])

_L0 = CODE[RegionLabel.LAMBDA0]
_LREAL = CODE[RegionLabel.LAMBDA_REAL_EXTERIOR]
_LPARA = CODE[RegionLabel.LAMBDA_PARABOLIC]
_LINT = CODE[RegionLabel.LAMBDA_INTERIOR]
_OZERO = CODE[RegionLabel.OMEGA_ZERO]
_OMINUS = CODE[RegionLabel.OMEGA_MINUS]
_OPLUS = CODE[RegionLabel.OMEGA_PLUS]
_OSINGLE = CODE[RegionLabel.OMEGA_SINGLE]


def partition_label(z, tol: float = DEFAULT_TOL) -> PartitionLabel:
    z = as_vector(z)
    scale = float(norm2(z)) ** 2
    if scale == 0.0:
        raise ValueError("the zero vector has no projective class")
    f = float(f_value(z))
    if abs(f) <= tol * scale:
        return PartitionLabel.U0
    return PartitionLabel.UPLUS if f > 0 else PartitionLabel.UMINUS


def omega2_sign_det(p):
    """d = Re(p_1) Im(p_2) - Re(p_2) Im(p_1)."""
    p = as_vector(p)
    return p[..., 0].real * p[..., 1].imag - p[..., 1].real * p[..., 0].imag


def _equal_dim_codes(p: np.ndarray, tol: float) -> np.ndarray:
    """Codes for points of P_C^m acted on by SO+(m,1) itself (m = p.shape[-1] - 1)."""
    m = p.shape[-1] - 1
    nrm = norm2(p)
    real = conj_minor_max(p) <= tol * nrm
    q = herm_norm(p)
    f = f_value(p)
    band = tol * nrm * nrm
    codes = np.empty(p.shape[:-1], dtype=np.int64)

    omega_real = _OZERO if m == 2 else _OSINGLE
    codes[real] = np.where(q[real] >= -tol * nrm[real], _LREAL, omega_real)

    nonreal = ~real
    fz = f[nonreal]
    bz = band[nonreal]
    sub = np.full(fz.shape, _LPARA, dtype=np.int64)
    if m == 2:
        sub[fz > bz] = _OZERO
        neg = fz < -bz
        d = omega2_sign_det(p[nonreal][neg])
        eps = tol * nrm[nonreal][neg]
        sub[neg] = np.where(d > eps, _OPLUS, np.where(d < -eps, _OMINUS, DEGENERATE))
    else:
        sub[fz > bz] = _OSINGLE
        sub[fz < -bz] = _LINT
    codes[nonreal] = sub
    return codes


def classify_batch(z, m: int | None = None, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Label codes for an array of vectors of shape (..., n+1); m defaults to n.

    Codes index ``LABELS``; ``DEGENERATE`` (-1) marks the undefined m = 2 case.
    """
    z = as_vector(z)
    n = z.shape[-1] - 1
    m = n if m is None else m
    lam0 = in_lambda0(z, m, tol)
    p = np.concatenate([z[..., :m], z[..., -1:]], axis=-1)
    if np.any(lam0):
        p = p.copy()
        p[lam0] = 0.0
        p[lam0, -1] = 1.0
    if np.any(norm2(z) == 0.0):
        raise ValueError("the zero vector has no projective class")
    codes = _equal_dim_codes(p, tol)
    codes[lam0] = _L0
    return codes


def _label(code: int, z) -> RegionLabel:
    if code == DEGENERATE:
        raise DegenerateDeterminantError(
            f"degenerate determinant; classification undefined at {z!r}"
        )
    return LABELS[code]


def classify_equal_dim(z, tol: float = DEFAULT_TOL) -> RegionLabel:
    """Label of [z] for the case m = n (the dimension is read from z)."""
    z = as_vector(z)
    if z.ndim != 1:
        raise ValueError("classify_equal_dim takes a single vector")
    if norm2(z) == 0.0:
        raise ValueError("the zero vector has no projective class")
    return _label(int(_equal_dim_codes(z[None], tol)[0]), z)


def omega2_component(p, tol: float = DEFAULT_TOL) -> RegionLabel:
    """Which of the three components of Omega in P_C^2 contains [p]."""
    p = as_vector(p)
    if p.shape[-1] != 3:
        raise ValueError("omega2_component needs a vector of C^{2,1}")
    label = classify_equal_dim(p, tol)
    if label.in_lambda:
        raise ValueError(f"point is in the limit set ({label.value}), not in Omega")
    return label


def classify(z, m: int | None = None, tol: float = DEFAULT_TOL) -> RegionLabel:
    """Label of [z] in P_C^n for the group SO+(m,1) embedded in SU(n,1)."""
    z = as_vector(z)
    if z.ndim != 1:
        raise ValueError("classify takes a single vector; use classify_batch")
    return _label(int(classify_batch(z[None], m, tol)[0]), z)


def classify_projected(z, m: int, tol: float = DEFAULT_TOL) -> RegionLabel:
    """Classify Q_m(z) inside P_C^m and lift the label (Lambda0 if undefined)."""
    z = as_vector(z)
    if in_lambda0(z, m, tol):
        return RegionLabel.LAMBDA0
    return classify_equal_dim(q_project(z, m, tol), tol)
