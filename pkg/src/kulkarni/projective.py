"""Points of P_C^n, tangent hyperplanes H_p and the coordinate projection Q_m."""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass

import numpy as np

from .hermitian import DEFAULT_TOL, as_vector, conj_dependent, herm_inner, norm2


class RealIntersectionKind(enum.Enum):
    """Shape of H_z intersected with the real m-space P_R^m (sitting in P_C^n)."""

    WHOLE_REAL_SPACE = "WholeRealSpace"
    REAL_HYPERPLANE = "RealHyperplane"
    REAL_CODIM2 = "RealCodim2"


class Lambda0Error(ValueError):
    """The point lies in Lambda_0, where the projection Q_m is undefined."""


def canonical_rep(z) -> np.ndarray:
    """Divide each vector by its largest-modulus coordinate (lowest index on ties).

    Works on batches; zero vectors raise.
    """
    z = as_vector(z)
    mod = np.abs(z)
    if np.any(np.max(mod, axis=-1) == 0.0):
        raise ValueError("the zero vector has no projective class")
    # argmax returns the first maximum, which is the lowest-index tie-break
    idx = np.argmax(mod, axis=-1)
    pivot = np.take_along_axis(z, idx[..., None], axis=-1)
    rep = z / pivot
    np.put_along_axis(rep, idx[..., None], 1.0 + 0.0j, axis=-1)
    return rep


@dataclass(frozen=True)
class ProjectivePoint:
    """A class [z] in P_C^n stored by its canonical representative."""

    rep: np.ndarray

    @property
    def n(self) -> int:
        return self.rep.shape[-1] - 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        return self.rep.shape == other.rep.shape and bool(
            np.all(np.abs(self.rep - other.rep) <= 1e-12)
        )

    def __hash__(self):
        return hash(self.rep.shape)

    def close_to(self, other: "ProjectivePoint", atol: float) -> bool:
        return self.rep.shape == other.rep.shape and bool(
            np.max(np.abs(self.rep - other.rep)) <= atol
        )

    def __repr__(self) -> str:
        coords = ":".join(f"{c.real:.6g}{c.imag:+.6g}j" for c in self.rep)
        return f"[{coords}]"


def normalize(z) -> ProjectivePoint:
    z = as_vector(z)
    if z.ndim != 1:
        raise ValueError("normalize takes a single vector; use canonical_rep for batches")
    return ProjectivePoint(canonical_rep(z))


@dataclass(frozen=True)
class TangentHyperplane:
    """H_p = {w : p_1 conj(w_1) + ... + p_n conj(w_n) - p_{n+1} conj(w_{n+1}) = 0}."""

    coeff: np.ndarray

    def contains(self, w, tol: float = DEFAULT_TOL) -> bool:
        w = as_vector(w)
        value = abs(complex(herm_inner(self.coeff, w)))
        return value <= tol * float(np.sqrt(norm2(self.coeff) * norm2(w)))


def hyperplane_of(p) -> TangentHyperplane:
    if not isinstance(p, ProjectivePoint):
        p = normalize(p)
    return TangentHyperplane(p.rep)


def _check_m(z: np.ndarray, m: int) -> None:
    n = z.shape[-1] - 1
    if not 2 <= m <= n:
        raise ValueError(f"m must satisfy 2 <= m <= n = {n}, got m = {m}")


def in_lambda0(z, m: int, tol: float = DEFAULT_TOL):
    """True iff coordinates 1..m and n+1 all vanish (relative to |z|)."""
    z = as_vector(z)
    _check_m(z, m)
    kept = np.concatenate([z[..., :m], z[..., -1:]], axis=-1)
    return np.max(np.abs(kept), axis=-1) <= tol * np.sqrt(norm2(z))


def q_project(z, m: int, tol: float = DEFAULT_TOL) -> np.ndarray:
    """(z_1, ..., z_m, z_{n+1}) as a vector of C^{m,1}."""
    z = as_vector(z)
    _check_m(z, m)
    if np.any(in_lambda0(z, m, tol)):
        raise Lambda0Error("point in Lambda_0, projection undefined")
    return np.concatenate([z[..., :m], z[..., -1:]], axis=-1)


def real_intersection_kind(z, m: int, tol: float = DEFAULT_TOL) -> RealIntersectionKind:
    z = as_vector(z)
    if norm2(z) == 0.0:
        raise ValueError("the zero vector has no projective class")
    if in_lambda0(z, m, tol):
        return RealIntersectionKind.WHOLE_REAL_SPACE
    if conj_dependent(q_project(z, m, tol), tol):
        return RealIntersectionKind.REAL_HYPERPLANE
    return RealIntersectionKind.REAL_CODIM2


def parse_point(text: str) -> np.ndarray:
    """Parse the JSON point format ``[[re, im], ...]`` into a complex vector."""
    raw = json.loads(text)
    if not isinstance(raw, list) or not raw:
        raise ValueError("point must be a non-empty JSON array of [re, im] pairs")
    coords = []
    for entry in raw:
        if not (isinstance(entry, list) and len(entry) == 2):
            raise ValueError(f"bad coordinate {entry!r}: expected [re, im]")
        coords.append(complex(float(entry[0]), float(entry[1])))
    return as_vector(coords)


def format_point(z) -> str:
    z = as_vector(z)
    # repr of a Python float round-trips exactly
    return json.dumps([[float(c.real), float(c.imag)] for c in z])
