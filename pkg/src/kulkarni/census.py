"""Monte Carlo connected-component census of Omega.

Points are drawn from the unitarily invariant measure on P_C^n (Gaussian
vectors), Omega-labelled samples become graph nodes, and two nodes are joined
when the chord from the canonical representative of one to the phase-aligned
representative of the other stays inside a single chamber of Omega.
Components come from a union-find pass.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import asdict, dataclass, field

import numpy as np

from .hermitian import DEFAULT_TOL, conj_minor_max, f_value, herm_norm, norm2
from .limit_set import CODE, DEGENERATE, LABELS, OMEGA_CODES, RegionLabel, classify_batch
from .projective import canonical_rep

_CHUNK = 1024


@dataclass(frozen=True)
class CensusConfig:
    m: int
    n: int
    samples: int = 2000
    edge_candidates: int = 20000
    segment_steps: int = 64
    seed: int = 0
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        if not 2 <= self.m <= self.n:
            raise ValueError(f"need 2 <= m <= n, got m={self.m}, n={self.n}")
        if self.samples < 100:
            raise ValueError("samples must be at least 100")
        if self.segment_steps < 16:
            raise ValueError("segment_steps must be at least 16")
        if self.edge_candidates < 0:
            raise ValueError("edge_candidates must be nonnegative")


@dataclass
class CensusReport:
    component_count: int
    component_sizes: list[int]
    component_labels: list[dict[str, int]]
    label_histogram: dict[str, int]
    cross_label_edges: int
    cross_label_candidates: int
    edges_added: int
    nodes: int
    excluded_near_boundary: int
    degenerate_samples: int
    config: dict = field(default_factory=dict)

    @property
    def seed(self) -> int:
        return self.config["seed"]

    def to_dict(self) -> dict:
        return asdict(self)


class DisjointSet:
    def __init__(self, size: int):
        self.parent = list(range(size))
        self.rank = [0] * size

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1


def _draw(cfg: CensusConfig) -> tuple[np.ndarray, np.ndarray]:
    rng = np.random.default_rng([cfg.seed, 0])
    shape = (cfg.samples, cfg.n + 1)
    z = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
    reps = canonical_rep(z)
    return reps, classify_batch(reps, cfg.m, cfg.tol)


def sample_points(cfg: CensusConfig) -> list[tuple[np.ndarray, RegionLabel | None]]:
    """Labelled canonical representatives; ``None`` marks a degenerate sample."""
    reps, codes = _draw(cfg)
    return [(r, None if c == DEGENERATE else LABELS[c]) for r, c in zip(reps, codes)]


def _bilinear(u: np.ndarray, w: np.ndarray) -> np.ndarray:
    """<u, conj w>: the complex-bilinear companion of the Hermitian form."""
    return np.sum(u[..., :-1] * w[..., :-1], axis=-1) - u[..., -1] * w[..., -1]


def _hermitian(u: np.ndarray, w: np.ndarray) -> np.ndarray:
    return _bilinear(u, np.conj(w))


def chord_f_coefficients(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Coefficients (highest degree first) of the quartic s -> f(a + s (b - a)).

    a, b have shape (k, m+1); the result has shape (k, 5).
    """
    v = b - a
    c0, c1, c2 = _bilinear(a, a), 2.0 * _bilinear(a, v), _bilinear(v, v)
    h0 = _hermitian(a, a).real
    h1 = 2.0 * _hermitian(a, v).real
    h2 = _hermitian(v, v).real
    abs_c = [
        np.abs(c2) ** 2,
        2.0 * (c1 * np.conj(c2)).real,
        np.abs(c1) ** 2 + 2.0 * (c0 * np.conj(c2)).real,
        2.0 * (c0 * np.conj(c1)).real,
        np.abs(c0) ** 2,
    ]
    h_sq = [h2 * h2, 2.0 * h1 * h2, h1 * h1 + 2.0 * h0 * h2, 2.0 * h0 * h1, h0 * h0]
    return np.stack([p - q for p, q in zip(abs_c, h_sq)], axis=-1)


def chord_crosses_f_zero(a: np.ndarray, b: np.ndarray, slack: float = 1e-6) -> np.ndarray:
    """Does f vanish somewhere on the chord from a[i] to b[i] (s in [0, 1])?

    Near-real roots (|Im| <= slack) count as crossings, so tangencies are
    treated as blocking.
    """
    coeffs = chord_f_coefficients(a, b)
    out = np.zeros(coeffs.shape[0], dtype=bool)
    scale = np.max(np.abs(coeffs), axis=-1)
    for k in range(coeffs.shape[0]):
        c = coeffs[k]
        if scale[k] == 0.0:
            out[k] = True
            continue
        c = c[np.argmax(np.abs(c) > 1e-13 * scale[k]) :]
        if c.size < 2:
            continue
        roots = np.roots(c)
        near_real = np.abs(roots.imag) <= slack * (1.0 + np.abs(roots.real))
        inside = (roots.real >= -slack) & (roots.real <= 1.0 + slack)
        out[k] = bool(np.any(near_real & inside))
    return out


def segment_passes(a: np.ndarray, b: np.ndarray, m: int, steps: int, tol: float) -> np.ndarray:
    """For chord endpoints a[i], b[i]: is the chord a path inside one chamber of Omega?

    Every one of the ``steps + 1`` equally spaced points must be labelled
    Omega.  Because Omega minus the real locus is the open set {f > 0} (m > 2)
    or {f != 0} (m = 2) of the projected vector, and f restricted to a chord is
    a real quartic, the chord is additionally rejected when that quartic has a
    root in [0, 1]; a finite set of steps alone misses thin crossings of the
    hypersurface f = 0.
    """
    s = np.linspace(0.0, 1.0, steps + 1)[None, :, None]
    pts = (1.0 - s) * a[:, None, :] + s * b[:, None, :]
    flat = pts.reshape(-1, pts.shape[-1])
    nonzero = norm2(flat) > 0.0
    codes = np.full(flat.shape[0], CODE[RegionLabel.LAMBDA0], dtype=np.int64)
    codes[nonzero] = classify_batch(flat[nonzero], m, tol)
    in_omega = np.isin(codes.reshape(pts.shape[:2]), OMEGA_CODES).all(axis=1)
    pa = np.concatenate([a[:, :m], a[:, -1:]], axis=-1)
    pb = np.concatenate([b[:, :m], b[:, -1:]], axis=-1)
    passes = in_omega.copy()
    passes[in_omega] = ~chord_crosses_f_zero(pa[in_omega], pb[in_omega])
    return passes


def align_phase(a: np.ndarray, b: np.ndarray, m: int) -> np.ndarray:
    """Rescale each b[i] by a unit complex number so that the Euclidean product
    of the projected vectors Q_m(a[i]), Q_m(b[i]) is real and nonnegative."""
    pa = np.concatenate([a[:, :m], a[:, -1:]], axis=-1)
    pb = np.concatenate([b[:, :m], b[:, -1:]], axis=-1)
    overlap = np.sum(pa * np.conj(pb), axis=-1)
    mod = np.abs(overlap)
    phase = np.where(mod > 0.0, overlap / np.where(mod > 0.0, mod, 1.0), 1.0)
    return b * phase[:, None]


def _near_boundary(reps: np.ndarray, m: int, tol: float) -> np.ndarray:
    p = np.concatenate([reps[:, :m], reps[:, -1:]], axis=-1)
    nrm = norm2(p)
    near = np.abs(f_value(p)) <= 10.0 * tol * nrm**2
    # points of H_R^m have f = 0 but lie well inside Omega
    real_negative = (conj_minor_max(p) <= tol * nrm) & (herm_norm(p) < -10.0 * tol * nrm)
    return near & ~real_negative


def _nearest_neighbours(reps: np.ndarray, k: int, groups: np.ndarray | None = None) -> np.ndarray:
    """Indices of the k nearest points in Fubini-Study distance (self excluded).

    With ``groups``, only points of the same group count as neighbours; a
    point with fewer than k group mates repeats its farthest mate.
    """
    unit = reps / np.sqrt(norm2(reps))[:, None]
    overlap = np.abs(unit @ np.conj(unit).T)
    np.fill_diagonal(overlap, -1.0)
    if groups is not None:
        overlap[groups[:, None] != groups[None, :]] = -2.0
    k = min(k, reps.shape[0] - 1)
    nbrs = np.argsort(-overlap, axis=1)[:, :k]
    if groups is not None:
        mates = np.bincount(groups)[groups] - 1
        last = np.maximum(mates, 1)[:, None] - 1
        cols = np.minimum(np.arange(k)[None, :], last)
        nbrs = np.take_along_axis(nbrs, cols, axis=1)
    return nbrs


def candidate_pairs(
    reps: np.ndarray,
    count: int,
    rng: np.random.Generator,
    labels: np.ndarray | None = None,
    local_fraction: float = 0.5,
) -> tuple[np.ndarray, np.ndarray]:
    """Pairs of distinct node indices for the chord test.

    Initiators cycle through a random permutation so every node takes part.
    A ``local_fraction`` share of candidates pairs a node with its nearest
    neighbours carrying the same label, in rank order (closest first); the
    rest get a uniformly random partner of any label.  ``reps`` should be the
    points whose geometry decides membership (the projected vectors when
    m < n).
    """
    size = reps.shape[0]
    n_local = int(round(local_fraction * count))
    n_far = count - n_local

    i_far = np.resize(rng.permutation(size), n_far)
    j_far = rng.integers(size - 1, size=n_far)
    j_far = np.where(j_far >= i_far, j_far + 1, j_far)

    rounds = -(-n_local // size) if n_local else 0
    nbrs = _nearest_neighbours(reps, max(rounds, 1), labels)
    order = rng.permutation(size)
    i_loc = np.resize(order, n_local)
    rank = np.arange(n_local) // size
    j_loc = nbrs[i_loc, np.minimum(rank, nbrs.shape[1] - 1)]
    i, j = np.concatenate([i_far, i_loc]), np.concatenate([j_far, j_loc])
    keep = i != j
    return i[keep], j[keep]


def run_census(cfg: CensusConfig) -> CensusReport:
    reps, codes = _draw(cfg)
    histogram = Counter(LABELS[c].value for c in codes if c != DEGENERATE)
    degenerate = int(np.sum(codes == DEGENERATE))

    omega = np.isin(codes, OMEGA_CODES)
    near = omega & _near_boundary(reps, cfg.m, cfg.tol)
    nodes = np.flatnonzero(omega & ~near)
    if nodes.size < 2:
        raise ValueError(f"need at least 2 Omega samples, got {nodes.size}")

    rng = np.random.default_rng([cfg.seed, 1])
    projected = np.concatenate([reps[nodes, : cfg.m], reps[nodes, -1:]], axis=-1)
    i, j = candidate_pairs(projected, cfg.edge_candidates, rng, codes[nodes])

    dsu = DisjointSet(nodes.size)
    cross = 0
    cross_candidates = 0
    added = 0
    for start in range(0, i.size, _CHUNK):
        ii = i[start : start + _CHUNK]
        jj = j[start : start + _CHUNK]
        a = reps[nodes[ii]]
        b = align_phase(a, reps[nodes[jj]], cfg.m)
        ok = segment_passes(a, b, cfg.m, cfg.segment_steps, cfg.tol)
        same = codes[nodes[ii]] == codes[nodes[jj]]
        cross += int(np.sum(ok & ~same))
        cross_candidates += int(np.sum(~same))
        for u, v in zip(ii[ok & same], jj[ok & same]):
            dsu.union(int(u), int(v))
            added += 1

    members: dict[int, list[int]] = {}
    for k in range(nodes.size):
        members.setdefault(dsu.find(k), []).append(k)
    comps = sorted(members.values(), key=len, reverse=True)
    comp_labels = [
        dict(Counter(LABELS[codes[nodes[k]]].value for k in comp)) for comp in comps
    ]
    return CensusReport(
        component_count=len(comps),
        component_sizes=[len(c) for c in comps],
        component_labels=comp_labels,
        label_histogram=dict(sorted(histogram.items())),
        cross_label_edges=cross,
        cross_label_candidates=cross_candidates,
        edges_added=added,
        nodes=int(nodes.size),
        excluded_near_boundary=int(np.sum(near)),
        degenerate_samples=degenerate,
        config=asdict(cfg),
    )
