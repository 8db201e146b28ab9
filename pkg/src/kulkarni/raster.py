"""Rasterize a real 2-dimensional slice of P_C^n by region label."""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .hermitian import DEFAULT_TOL, as_vector, norm2
from .limit_set import DEGENERATE, LABELS, RegionLabel, classify_batch

PALETTE: dict[RegionLabel, tuple[int, int, int]] = {
    RegionLabel.LAMBDA0: (0, 0, 0),
    RegionLabel.LAMBDA_REAL_EXTERIOR: (139, 0, 0),
    RegionLabel.LAMBDA_PARABOLIC: (255, 0, 0),
    RegionLabel.LAMBDA_INTERIOR: (255, 165, 0),
    RegionLabel.OMEGA_ZERO: (255, 255, 255),
    RegionLabel.OMEGA_MINUS: (0, 0, 255),
    RegionLabel.OMEGA_PLUS: (0, 200, 0),
    RegionLabel.OMEGA_SINGLE: (255, 255, 255),
}
UNDEFINED_COLOR = (128, 128, 128)
UNDEFINED = "UNDEFINED"


@dataclass(frozen=True)
class SliceSpec:
    m: int
    n: int
    center: np.ndarray
    dir_u: np.ndarray
    dir_v: np.ndarray
    half_width: float = 1.0
    resolution: int = 64
    out: str | None = None
    fmt: str = "ppm"
    tol: float = DEFAULT_TOL

    def validate(self) -> None:
        if not 2 <= self.m <= self.n:
            raise ValueError(f"need 2 <= m <= n, got m={self.m}, n={self.n}")
        if self.resolution < 8:
            raise ValueError("resolution must be at least 8")
        if self.half_width <= 0:
            raise ValueError("half_width must be positive")
        if self.fmt not in ("ppm", "csv"):
            raise ValueError(f"unknown format {self.fmt!r} (expected ppm or csv)")
        for name in ("center", "dir_u", "dir_v"):
            v = as_vector(getattr(self, name))
            if v.shape != (self.n + 1,):
                raise ValueError(f"{name} must have {self.n + 1} coordinates")
        u = as_vector(self.dir_u)
        v = as_vector(self.dir_v)
        nu, nv = float(norm2(u)), float(norm2(v))
        # a and b are real, so proportionality is over R: u = i v is a valid pair
        overlap = float(np.vdot(u, v).real) ** 2
        if nu == 0 or nv == 0 or overlap >= (1.0 - 1e-12) * nu * nv:
            raise ValueError("degenerate directions: dir_u and dir_v are proportional")


@dataclass
class SliceResult:
    offsets: np.ndarray  # pixel-centre coordinates along each axis
    codes: np.ndarray  # (res, res) label codes; row r <-> dir_v offset, col c <-> dir_u offset
    spec: SliceSpec

    def label(self, row: int, col: int) -> RegionLabel | None:
        code = int(self.codes[row, col])
        return None if code < 0 else LABELS[code]

    def point(self, row: int, col: int) -> np.ndarray:
        return pixel_point(self.spec, self.offsets[col], self.offsets[row])


def pixel_offsets(half_width: float, resolution: int) -> np.ndarray:
    step = 2.0 * half_width / resolution
    return -half_width + (np.arange(resolution) + 0.5) * step


def pixel_point(spec: SliceSpec, a: float, b: float) -> np.ndarray:
    return as_vector(spec.center) + a * as_vector(spec.dir_u) + b * as_vector(spec.dir_v)


_NO_POINT = -2


def render_slice(spec: SliceSpec) -> SliceResult:
    """Classify center + a dir_u + b dir_v on a res x res grid; write the file if asked."""
    spec.validate()
    offs = pixel_offsets(spec.half_width, spec.resolution)
    a = offs[None, :, None]
    b = offs[:, None, None]
    pts = as_vector(spec.center) + a * as_vector(spec.dir_u) + b * as_vector(spec.dir_v)
    flat = pts.reshape(-1, spec.n + 1)
    ref = float(norm2(spec.center)) + spec.half_width**2 * float(
        norm2(spec.dir_u) + norm2(spec.dir_v)
    )
    ok = norm2(flat) > 1e-24 * ref
    codes = np.full(flat.shape[0], _NO_POINT, dtype=np.int64)
    codes[ok] = classify_batch(flat[ok], spec.m, spec.tol)
    result = SliceResult(offs, codes.reshape(spec.resolution, spec.resolution), spec)
    if spec.out is not None:
        if spec.fmt == "csv":
            write_csv(result, spec.out)
        else:
            write_ppm(result, spec.out)
    return result


def _code_name(code: int) -> str:
    if code == DEGENERATE or code == _NO_POINT:
        return UNDEFINED
    return LABELS[code].value


def write_csv(result: SliceResult, path) -> None:
    """One row per pixel: row,col,a,b,LABEL (no header)."""
    offs = [float(x) for x in result.offsets]
    lines = []
    for r in range(result.codes.shape[0]):
        for c in range(result.codes.shape[1]):
            lines.append(f"{r},{c},{offs[c]!r},{offs[r]!r},{_code_name(result.codes[r, c])}")
    Path(path).write_text("\n".join(lines) + "\n")


def read_csv(path) -> list[tuple[int, int, float, float, str]]:
    rows = []
    for line in Path(path).read_text().splitlines():
        r, c, a, b, name = line.split(",")
        rows.append((int(r), int(c), float(a), float(b), name))
    return rows


def write_ppm(result: SliceResult, path) -> None:
    """Binary P6 image, max value 255; the top row is the largest dir_v offset."""
    res = result.codes.shape[0]
    lut = np.array([PALETTE[lab] for lab in LABELS] + [UNDEFINED_COLOR], dtype=np.uint8)
    idx = np.where(result.codes < 0, len(LABELS), result.codes)
    pixels = lut[idx[::-1]]
    header = f"P6\n{res} {res}\n255\n".encode("ascii")
    Path(path).write_bytes(header + pixels.tobytes())


def read_ppm(path) -> np.ndarray:
    data = Path(path).read_bytes()
    parts = data.split(maxsplit=4)
    if parts[0] != b"P6":
        raise ValueError("not a binary PPM (P6) file")
    width, height, maxval = int(parts[1]), int(parts[2]), int(parts[3])
    if maxval != 255:
        raise ValueError("only 8-bit PPM files are supported")
    pixels = np.frombuffer(parts[4], dtype=np.uint8, count=width * height * 3)
    return pixels.reshape(height, width, 3)
