"""Matrix exchange files: first line ``n=<int>``, then n+1 rows of comma-separated doubles."""
from __future__ import annotations

from pathlib import Path

import numpy as np


def write_matrix_csv(path, a) -> None:
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 2:
        raise ValueError("expected a square (n+1)x(n+1) real matrix")
    lines = [f"n={a.shape[0] - 1}"]
    # repr round-trips doubles exactly
    lines += [",".join(repr(float(x)) for x in row) for row in a]
    Path(path).write_text("\n".join(lines) + "\n")


def read_matrix_csv(path) -> np.ndarray:
    lines = [ln.strip() for ln in Path(path).read_text().splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("n="):
        raise ValueError("matrix file must start with a line 'n=<int>'")
    n = int(lines[0][2:])
    rows = [[float(x) for x in ln.split(",")] for ln in lines[1:]]
    a = np.array(rows, dtype=float)
    if a.shape != (n + 1, n + 1):
        raise ValueError(f"expected {n + 1}x{n + 1} entries, got shape {a.shape}")
    return a
