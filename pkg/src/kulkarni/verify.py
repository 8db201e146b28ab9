"""Randomized verification of every module invariant.

Each property draws its own generator from ``(seed, property index)`` so
results do not depend on which other properties run.  A property reports
the number of trials, failures and the largest residual observed; for
label-equality checks the residual is the mismatch indicator (0 or 1).
"""
from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from typing import Callable

import numpy as np

from .census import CensusConfig, run_census
from .fibration import (
    adapted_basis,
    eta,
    eta_scaling_sign,
    fiber_point,
    hyp_matrix,
    hyp_point,
    iota_embed,
    lorentz_residual,
    pi_image_norm,
    pi_projection,
    pi_tilde,
    pi_tilde_raw,
    random_isometry,
)
from .hermitian import (
    DEFAULT_TOL,
    SpanClass,
    conj_dependent,
    f_value,
    f_value_coords,
    gram2,
    gram_det,
    gram_eigenvalues,
    herm_inner,
    herm_norm,
    norm2,
    span_class_det,
    span_class_eig,
)
from .limit_set import (
    PartitionLabel,
    RegionLabel,
    classify,
    classify_equal_dim,
    partition_label,
)
from .projective import (
    hyperplane_of,
    in_lambda0,
    normalize,
    q_project,
    real_intersection_kind,
)
from .raster import SliceSpec, render_slice

EPS = np.finfo(float).eps


@dataclass
class PropertyResult:
    name: str
    module: str
    trials: int = 0
    failures: int = 0
    max_residual: float = 0.0
    threshold: str = ""
    seconds: float = 0.0
    witness: list | None = None  # matrix behind the worst residual, if any
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.failures == 0 and self.trials > 0 and self.error is None

    def record(self, residual: float, ok: bool, witness=None) -> None:
        self.trials += 1
        if not ok:
            self.failures += 1
        residual = float(residual)
        if residual > self.max_residual or np.isnan(residual):
            self.max_residual = residual
            if witness is not None:
                self.witness = np.asarray(witness).tolist()

    def check(self, ok: bool) -> None:
        self.record(0.0 if ok else 1.0, ok)


@dataclass
class SuiteReport:
    trials: int
    seed: int
    tol: float
    results: list[PropertyResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_dict(self, witnesses: bool = False) -> dict:
        out = []
        for r in self.results:
            d = asdict(r)
            d["passed"] = r.passed
            if not witnesses:
                d.pop("witness")
            out.append(d)
        return {
            "trials": self.trials,
            "seed": self.seed,
            "tol": self.tol,
            "passed": self.passed,
            "properties": out,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        width = max(len(r.name) for r in self.results) if self.results else 8
        head = f"{'property':<{width}}  {'module':<19} {'trials':>7} {'fail':>6}  {'max residual':>12}  result"
        lines = [head, "-" * len(head)]
        for r in self.results:
            lines.append(
                f"{r.name:<{width}}  {r.module:<19} {r.trials:>7} {r.failures:>6}  "
                f"{r.max_residual:>12.3e}  {'PASS' if r.passed else 'FAIL'}"
            )
            if r.error:
                lines.append(f"    error: {r.error}")
        total = sum(not r.passed for r in self.results)
        lines.append(f"{len(self.results) - total}/{len(self.results)} properties passed")
        return "\n".join(lines)


# --- samplers ---------------------------------------------------------------


def gaussian(rng: np.random.Generator, n: int, size=None) -> np.ndarray:
    shape = (n + 1,) if size is None else (size, n + 1)
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_alpha(rng: np.random.Generator) -> complex:
    """Nonzero complex scalar with log-uniform modulus in [1e-3, 1e3]."""
    return 10.0 ** rng.uniform(-3, 3) * np.exp(2j * np.pi * rng.uniform())


def parabolic_point(rng: np.random.Generator, m: int) -> np.ndarray:
    """A non-real z in C^{m,1} with f(z) = 0 and <z, z> > 0.

    z = x + i l with l = (v, 1) null and x = (w, w.v) orthogonal to l,
    moved by a random isometry and a random complex scale.
    """
    v = rng.standard_normal(m)
    v /= np.linalg.norm(v)
    w = rng.standard_normal(m)
    ell = np.append(v, 1.0)
    x = np.append(w, w @ v)
    g = random_isometry(m, int(rng.integers(2**31)), k=1)
    return random_alpha(rng) * g.apply(x + 1j * ell)


def embed_projected(
    rng: np.random.Generator, p: np.ndarray, n: int, real: bool = False
) -> np.ndarray:
    """A point of C^{n,1} whose Q_m projection is p (middle coordinates random)."""
    m = p.shape[-1] - 1
    mid = gaussian(rng, n - m - 1) if n > m else np.zeros(0, dtype=complex)
    if real:
        mid = mid.real.astype(complex)
    return np.concatenate([p[:m], mid, p[m:]])


def boundary_point(rng: np.random.Generator, m: int, n: int, kind: str) -> np.ndarray:
    """Sample lying exactly on a label boundary (or a special stratum)."""
    alpha = random_alpha(rng)
    if kind == "real":
        p = rng.standard_normal(m + 1).astype(complex)
    elif kind == "real_null":
        v = rng.standard_normal(m)
        p = np.append(v / np.linalg.norm(v), 1.0).astype(complex)
    elif kind == "parabolic":
        p = parabolic_point(rng, m)
    elif kind == "lambda0":
        z = np.zeros(n + 1, dtype=complex)
        z[m:n] = gaussian(rng, n - m - 1)
        return alpha * z
    else:
        raise ValueError(kind)
    return alpha * embed_projected(rng, p, n, real=kind != "parabolic")


def _boundary_kinds(m: int, n: int) -> list[str]:
    kinds = ["real", "real_null", "parabolic"]
    return kinds + ["lambda0"] if m < n else kinds


def _away_from_boundary(p: np.ndarray, tol: float) -> bool:
    """|f| and |<p,p>| above 10 tol scale (p already projected)."""
    s = float(norm2(p))
    return abs(float(f_value(p))) > 10 * tol * s * s and abs(float(herm_norm(p))) > 10 * tol * s


def u_plus_point(rng: np.random.Generator, n: int, tol: float) -> np.ndarray:
    while True:
        z = gaussian(rng, n)
        if f_value(z) > 100 * tol * float(norm2(z)) ** 2:
            return z


# --- the properties ---------------------------------------------------------

PropertyFn = Callable[[np.random.Generator, int, float, int, PropertyResult], None]

_REGISTRY: list[tuple[str, str, str, PropertyFn]] = []


def _property(module: str, threshold: str):
    def deco(fn: PropertyFn) -> PropertyFn:
        _REGISTRY.append((fn.__name__.lstrip("_"), module, threshold, fn))
        return fn

    return deco


HC, PR, LS, FE, CC = "hermitian-core", "projective", "limit-set", "fibration-embedding", "census-cli"


@_property(HC, "<= 4 eps |z||w|")
def _conjugate_symmetry(rng, trials, tol, seed, res):
    for _ in range(trials):
        n = int(rng.integers(2, 7))
        z, w = gaussian(rng, n), gaussian(rng, n)
        r = abs(herm_inner(w, z) - np.conj(herm_inner(z, w))) / np.sqrt(norm2(z) * norm2(w))
        res.record(r, r <= 4 * EPS)


@_property(HC, "relative <= 1e-12")
def _sesquilinearity(rng, trials, tol, seed, res):
    for _ in range(trials):
        n = int(rng.integers(2, 7))
        z, w = gaussian(rng, n), gaussian(rng, n)
        a = random_alpha(rng)
        r = abs(herm_inner(a * z, w) - a * herm_inner(z, w))
        r /= abs(a) * np.sqrt(norm2(z) * norm2(w))
        res.record(r, r <= 1e-12)
        # second slot is conjugate-linear
        r = abs(herm_inner(z, a * w) - np.conj(a) * herm_inner(z, w))
        r /= abs(a) * np.sqrt(norm2(z) * norm2(w))
        res.record(r, r <= 1e-12)


@_property(HC, "labels equal when |det G| > tol scale")
def _sylvester_oracle(rng, trials, tol, seed, res):
    for n in (2, 3, 5):
        for _ in range(trials):
            z1, z2 = gaussian(rng, n), gaussian(rng, n)
            scale = float(norm2(z1) * norm2(z2))
            if abs(float(gram_det(z1, z2))) <= tol * scale:
                continue
            res.check(span_class_det(z1, z2, tol) == span_class_eig(z1, z2, tol))


@_property(HC, "|l1 l2 - det G| <= 1e-10 scale")
def _det_eig_consistency(rng, trials, tol, seed, res):
    for n in (2, 3, 5):
        z1, z2 = gaussian(rng, n, trials), gaussian(rng, n, trials)
        scale = norm2(z1) * norm2(z2)
        l1, l2 = gram_eigenvalues(z1, z2)
        r = np.abs(l1 * l2 - gram_det(z1, z2)) / scale
        for x in r:
            res.record(x, x <= 1e-10)


@_property(HC, "G Hermitian; span tags never DependentPair")
def _gram_and_span_tags(rng, trials, tol, seed, res):
    for _ in range(trials):
        n = int(rng.integers(2, 6))
        z1 = gaussian(rng, n)
        z2 = z1 * random_alpha(rng) if rng.uniform() < 0.2 else gaussian(rng, n)
        g = gram2(z1, z2)
        ok = g[0, 1] == np.conj(g[1, 0]) and g[0, 0].imag == 0 and g[1, 1].imag == 0
        tags = {span_class_det(z1, z2, tol), span_class_eig(z1, z2, tol)}
        res.check(bool(ok) and SpanClass.DEPENDENT_PAIR not in tags)


@_property(HC, "|f - f_coords| <= 1e-10 |z|^4")
def _f_two_formula(rng, trials, tol, seed, res):
    for n in (2, 3, 4, 6):
        z = gaussian(rng, n, trials) * 10.0 ** rng.uniform(-3, 3, (trials, 1))
        r = np.abs(f_value(z) - f_value_coords(z)) / norm2(z) ** 2
        for x in r:
            res.record(x, x <= 1e-10)


@_property(HC, "|f(az) - |a|^4 f(z)| <= 1e-10 |a|^4 |z|^4")
def _f_homogeneity(rng, trials, tol, seed, res):
    for _ in range(trials):
        n = int(rng.integers(2, 7))
        z = gaussian(rng, n)
        a = random_alpha(rng)
        s = abs(a) ** 4 * float(norm2(z)) ** 2
        r = abs(f_value(a * z) - abs(a) ** 4 * f_value(z)) / s
        res.record(r, r <= 1e-10)


@_property(HC, "span type of (z, conj z) matches sign of f")
def _sign_correspondence(rng, trials, tol, seed, res):
    for i in range(trials):
        n = int(rng.integers(2, 6))
        z = parabolic_point(rng, n) if i % 4 == 0 else gaussian(rng, n)
        if conj_dependent(z, tol):
            continue
        scale = float(norm2(z)) ** 2
        f = float(f_value(z))
        tag = span_class_det(z, np.conj(z), tol)
        if f < -tol * scale:
            want = SpanClass.ELLIPTIC
        elif f > tol * scale:
            want = SpanClass.HYPERBOLIC
        else:
            want = SpanClass.PARABOLIC
        res.check(tag == want)


@_property(PR, "per-coordinate <= 1e-12")
def _normalize_idempotent_scale_invariant(rng, trials, tol, seed, res):
    for _ in range(trials):
        n = int(rng.integers(2, 7))
        z = gaussian(rng, n)
        p = normalize(z)
        r1 = np.max(np.abs(normalize(p.rep).rep - p.rep))
        r2 = np.max(np.abs(normalize(random_alpha(rng) * z).rep - p.rep))
        r = max(r1, r2)
        res.record(r, r <= 1e-12)


@_property(PR, "w in H_p <=> p in H_w")
def _hyperplane_duality(rng, trials, tol, seed, res):
    for i in range(trials):
        n = int(rng.integers(2, 7))
        p, w = gaussian(rng, n), gaussian(rng, n)
        if i % 2 == 0:
            # move w into H_p so that both sides are live
            w = w - herm_inner(w, p) / herm_norm(p) * p
        a = hyperplane_of(p).contains(w, tol)
        b = hyperplane_of(w).contains(p, tol)
        res.check(a == b and (a or i % 2 == 1))


@_property(PR, "exact equality")
def _q_project_conjugation(rng, trials, tol, seed, res):
    for _ in range(trials):
        n = int(rng.integers(2, 7))
        m = int(rng.integers(2, n + 1))
        z = gaussian(rng, n)
        res.check(bool(np.array_equal(q_project(np.conj(z), m, tol), np.conj(q_project(z, m, tol)))))


@_property(PR, "kind(a z) = kind(z)")
def _real_intersection_scale_invariance(rng, trials, tol, seed, res):
    for i in range(trials):
        n = int(rng.integers(3, 7))
        m = int(rng.integers(2, n))
        kinds = ["generic"] + _boundary_kinds(m, n)
        kind = kinds[i % len(kinds)]
        z = gaussian(rng, n) if kind == "generic" else boundary_point(rng, m, n, kind)
        k0 = real_intersection_kind(z, m, tol)
        res.check(real_intersection_kind(random_alpha(rng) * z, m, tol) == k0)


def _mn_grid():
    return [(2, 2), (2, 4), (3, 3), (3, 5)]


@_property(LS, "classify(a z) = classify(z)")
def _projective_well_definedness(rng, trials, tol, seed, res):
    for m, n in _mn_grid():
        kinds = ["generic"] + _boundary_kinds(m, n)
        for i in range(trials):
            kind = kinds[i % len(kinds)]
            z = gaussian(rng, n) if kind == "generic" else boundary_point(rng, m, n, kind)
            res.check(classify(random_alpha(rng) * z, m, tol) == classify(z, m, tol))


@_property(LS, "|f(iota(G) z) - f(z)| <= 1e-8 |z|^4")
def _f_invariance(rng, trials, tol, seed, res):
    for m, n in _mn_grid():
        for i in range(trials):
            g = iota_embed(random_isometry(m, seed * 1_000_003 + i), n)
            z = gaussian(rng, n)
            r = abs(float(f_value(g.apply(z)) - f_value(z))) / float(norm2(z)) ** 2
            res.record(r, r <= 1e-8, g.entries)


@_property(LS, "labels and U-partition preserved away from boundaries")
def _label_invariance(rng, trials, tol, seed, res):
    for m, n in _mn_grid():
        for i in range(trials):
            g = iota_embed(random_isometry(m, seed * 1_000_003 + i), n)
            z = gaussian(rng, n)
            gz = g.apply(z)
            p, gp = q_project(z, m, tol), q_project(gz, m, tol)
            if not (_away_from_boundary(p, tol) and _away_from_boundary(gp, tol)):
                continue
            sz, sgz = float(norm2(z)) ** 2, float(norm2(gz)) ** 2
            ok = classify(gz, m, tol) == classify(z, m, tol)
            if abs(float(f_value(z))) > 10 * tol * sz and abs(float(f_value(gz))) > 10 * tol * sgz:
                ok = ok and partition_label(gz, tol) == partition_label(z, tol)
            res.check(ok)


@_property(LS, "boundary strata keep their labels under iota(G)")
def _boundary_invariance(rng, trials, tol, seed, res):
    for m, n in _mn_grid():
        kinds = _boundary_kinds(m, n)
        for i in range(trials):
            g = iota_embed(random_isometry(m, seed * 1_000_003 + i, k=1), n)
            z = boundary_point(rng, m, n, kinds[i % len(kinds)])
            ok = classify(g.apply(z), m, tol) == classify(z, m, tol)
            if kinds[i % len(kinds)] in ("real", "real_null"):
                # real points lie in U_0
                ok = ok and partition_label(z, tol) == PartitionLabel.U0
            res.check(ok)


@_property(LS, "classify(z, m) = classify(Q_m z) exactly")
def _factorization(rng, trials, tol, seed, res):
    for m, n in [(2, 3), (2, 4), (3, 4), (3, 5)]:
        kinds = ["generic", "generic"] + _boundary_kinds(m, n)[:-1]
        for i in range(trials):
            kind = kinds[i % len(kinds)]
            z = gaussian(rng, n) if kind == "generic" else boundary_point(rng, m, n, kind)
            if in_lambda0(z, m, tol):
                continue
            res.check(classify(z, m, tol) == classify_equal_dim(q_project(z, m, tol), tol))


@_property(LS, "Lambda/Omega membership from U-partition (m = n > 2)")
def _lambda_partition_restatement(rng, trials, tol, seed, res):
    for n in (3, 4, 5):
        kinds = ["generic", "generic"] + _boundary_kinds(n, n)
        for i in range(trials):
            kind = kinds[i % len(kinds)]
            z = gaussian(rng, n) if kind == "generic" else boundary_point(rng, n, n, kind)
            part = partition_label(z, tol)
            real_neg = bool(conj_dependent(z, tol)) and herm_norm(z) < -tol * float(norm2(z))
            in_lambda = part == PartitionLabel.UMINUS or (part == PartitionLabel.U0 and not real_neg)
            res.check(classify(z, n, tol).in_lambda == in_lambda)


@_property(LS, "f <= tol and non-real => <z,z> > -tol |z|^2")
def _positivity_side_condition(rng, trials, tol, seed, res):
    for i in range(trials):
        n = int(rng.integers(2, 6))
        z = parabolic_point(rng, n) if i % 2 == 0 else gaussian(rng, n)
        s = float(norm2(z))
        if f_value(z) > tol * s * s or conj_dependent(z, tol):
            continue
        res.check(herm_norm(z) > -tol * s)


@_property(FE, "|eta^2 + <z, conj z>| <= 1e-12 |z|^2, Re eta >= 0")
def _eta_branch(rng, trials, tol, seed, res):
    for i in range(trials):
        n = int(rng.integers(2, 6))
        z = gaussian(rng, n)
        if i % 3 == 1:
            z = z.real.astype(complex)  # eta on the imaginary axis or real
        e = complex(eta(z))
        r = abs(e * e + herm_inner(z, np.conj(z))) / float(norm2(z))
        ok = r <= 1e-12 and e.real >= 0
        if abs(e.real) <= 1e-14 * abs(e):
            ok = ok and e.imag >= 0
        res.record(r, ok)


@_property(FE, "<Pi~z, Pi~z> < 0, closed form within relative 1e-10")
def _pi_image_negativity(rng, trials, tol, seed, res):
    for i in range(trials):
        n = int(rng.integers(2, 6))
        z = u_plus_point(rng, n, tol)
        p = pi_tilde(z, tol)
        lhs = float(herm_norm(p))
        rhs = float(pi_image_norm(z))
        r = abs(lhs - rhs) / abs(rhs)
        imag_ok = np.max(np.abs(pi_tilde_raw(z).imag)) <= 1e-10 * np.linalg.norm(p)
        res.record(r, r <= 1e-10 and lhs < 0 and rhs < 0 and bool(imag_ok))


@_property(FE, "|Pi~(Az) - A Pi~(z)| <= 1e-9 |A| |z|^2")
def _equivariance(rng, trials, tol, seed, res):
    for n in (2, 3, 4):
        for i in range(trials):
            a = random_isometry(n, seed * 1_000_003 + i)
            z = u_plus_point(rng, n, tol)
            scale = np.linalg.norm(a.entries, 2) * float(norm2(z))
            # f(Az) = f(z) > 0, but |Az| may be large enough that Az sits inside
            # the relative tolerance band; the identity concerns the formula itself
            lhs = np.real(pi_tilde_raw(a.apply(z)))
            r = np.max(np.abs(lhs - a.apply(pi_tilde(z, tol)))) / scale
            res.record(r, r <= 1e-9, a.entries)


@_property(FE, "|Pi~(az) - s |a|^2 Pi~(z)| <= 1e-10 |a|^2 |z|^2, s = +-1 from eta branch")
def _scaling(rng, trials, tol, seed, res):
    for i in range(trials):
        n = int(rng.integers(2, 6))
        z = u_plus_point(rng, n, tol)
        a = random_alpha(rng) if i % 4 else complex(1, 2)
        s = eta_scaling_sign(z, a)
        scale = abs(a) ** 2 * float(norm2(z))
        r = np.max(np.abs(pi_tilde(a * z, tol) - s * abs(a) ** 2 * pi_tilde(z, tol))) / scale
        res.record(r, r <= 1e-10)


@_property(FE, "|<z, Pi~z>|, |<conj z, Pi~z>| <= 1e-7 |z|^3 on parabolic z")
def _parabolic_orthogonality(rng, trials, tol, seed, res):
    for i in range(trials):
        n = int(rng.integers(2, 6))
        z = parabolic_point(rng, n)
        s = float(norm2(z))
        if abs(float(f_value(z))) > tol * s * s or conj_dependent(z, tol) or herm_norm(z) <= 0:
            continue
        p = pi_tilde_raw(z)
        r = max(abs(herm_inner(z, p)), abs(herm_inner(np.conj(z), p))) / s**1.5
        res.record(r, r <= 1e-7)


@_property(FE, "Pi(fiber_point(t, y, x)) = x(t) within 1e-8")
def _fiber_correctness(rng, trials, tol, seed, res):
    for n in (3, 4):
        for _ in range(trials):
            t = np.append(rng.uniform(-3, 3), rng.uniform(-np.pi, np.pi, n - 1))
            # |y| and |x_last| within two decades keep the point well inside U_+
            y = rng.standard_normal(n) * 10.0 ** rng.uniform(-1, 1)
            x_last = rng.choice([-1, 1]) * 10.0 ** rng.uniform(-1, 1)
            a = hyp_matrix(t)
            q = fiber_point(t, y, x_last)
            base = normalize(np.append(hyp_point(t), 1.0))
            r = np.max(np.abs(pi_projection(q.rep, tol).rep - base.rep))
            ok = r <= 1e-8 and lorentz_residual(a.entries) <= 1e-10
            res.record(r, ok, a.entries)


@_property(FE, "A^T J A = J within 1e-10; det +1 and A[n,n] >= 1 for random_isometry")
def _isometry_invariants(rng, trials, tol, seed, res):
    for i in range(trials):
        m = int(rng.integers(2, 6))
        a = random_isometry(m, seed * 1_000_003 + i)
        r = lorentz_residual(a.entries)
        ok = r <= 1e-10
        ok = ok and abs(np.linalg.det(a.entries) - 1.0) <= 1e-8
        ok = ok and a.entries[-1, -1] >= 1.0 - 1e-10
        res.record(r, ok, a.entries)
        t = np.append(rng.uniform(-3, 3), rng.uniform(-np.pi, np.pi, m - 1))
        h = hyp_matrix(t).entries
        res.record(lorentz_residual(h), lorentz_residual(h) <= 1e-10, h)


@_property(FE, "W_1 = A_1/cosh t_1, W_{n+1} = A_{n+1}/cosh t_1, W independent")
def _adapted_basis(rng, trials, tol, seed, res):
    for _ in range(trials):
        n = int(rng.integers(2, 6))
        t = np.append(rng.uniform(-3, 3), rng.uniform(-np.pi, np.pi, n - 1))
        a = hyp_matrix(t).entries
        w = adapted_basis(t).as_matrix()
        ch = np.cosh(t[0])
        r = max(
            np.max(np.abs(w[:, 0] - a[:, 0] / ch)),
            np.max(np.abs(w[:, -1] - a[:, -1] / ch)),
            np.max(np.abs(w[:, 1:-1] - a[:, 1:-1])) if n > 1 else 0.0,
        )
        independent = np.linalg.matrix_rank(w.T @ w) == n + 1
        res.record(r, r <= 1e-12 and bool(independent))


@_property(FE, "iota(GH) = iota(G) iota(H) within 1e-10")
def _iota_homomorphism(rng, trials, tol, seed, res):
    for i in range(trials):
        m = int(rng.integers(2, 4))
        n = m + int(rng.integers(0, 3))
        g = random_isometry(m, seed * 1_000_003 + 2 * i, k=2)
        h = random_isometry(m, seed * 1_000_003 + 2 * i + 1, k=2)
        lhs = iota_embed(g @ h, n).entries
        rhs = (iota_embed(g, n) @ iota_embed(h, n)).entries
        r = np.max(np.abs(lhs - rhs))
        ok = r <= 1e-10 and lorentz_residual(iota_embed(g, n).entries) <= 1e-10
        res.record(r, ok, iota_embed(g, n).entries)


@_property(CC, "identical config -> identical report")
def _census_determinism(rng, trials, tol, seed, res):
    cfg = CensusConfig(m=2, n=3, samples=300, edge_candidates=2000, seed=seed, tol=tol)
    res.check(run_census(cfg).to_dict() == run_census(cfg).to_dict())


@_property(CC, "cross_label_edges = 0 at default budgets, m = 2")
def _census_label_purity(rng, trials, tol, seed, res):
    for n in (2, 4):
        report = run_census(CensusConfig(m=2, n=n, seed=seed, tol=tol))
        res.record(report.cross_label_edges, report.cross_label_edges == 0)


@_property(CC, "re-classified pixels reproduce stored labels")
def _slice_consistency(rng, trials, tol, seed, res):
    for _ in range(max(1, trials // 100)):
        n = int(rng.integers(2, 5))
        m = int(rng.integers(2, n + 1))
        spec = SliceSpec(
            m, n, gaussian(rng, n), gaussian(rng, n), gaussian(rng, n),
            half_width=float(rng.uniform(0.1, 2.0)), resolution=8, tol=tol,
        )
        out = render_slice(spec)
        for r in range(8):
            for c in range(8):
                stored = out.label(r, c)
                if stored is None:
                    continue
                res.check(classify(out.point(r, c), m, tol) == stored)


PROPERTY_NAMES = tuple(name for name, *_ in _REGISTRY)


def verify_suite(
    trials: int,
    seed: int = 0,
    tol: float = DEFAULT_TOL,
    only: list[str] | None = None,
    skip_modules: tuple[str, ...] = (),
) -> SuiteReport:
    """Run the registered properties; ``only`` selects by property name."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    report = SuiteReport(trials=trials, seed=seed, tol=tol)
    for index, (name, module, threshold, fn) in enumerate(_REGISTRY):
        if only is not None and name not in only:
            continue
        if module in skip_modules:
            continue
        res = PropertyResult(name=name, module=module, threshold=threshold)
        rng = np.random.default_rng([seed, index])
        start = time.perf_counter()
        try:
            fn(rng, trials, tol, seed, res)
        except Exception as exc:  # an exception is a failed property, not a crash
            res.failures += 1
            res.error = f"{type(exc).__name__}: {exc}"
        res.seconds = round(time.perf_counter() - start, 3)
        report.results.append(res)
    return report


__all__ = [
    "PropertyResult",
    "SuiteReport",
    "PROPERTY_NAMES",
    "verify_suite",
    "gaussian",
    "parabolic_point",
    "boundary_point",
    "u_plus_point",
]
