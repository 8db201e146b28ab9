"""Acceptance criteria, each at its stated budget and tolerance.

Every test prints one ``[PASS]``/``[FAIL]`` line (visible in ``pytest -v``
output) before asserting.
"""
import time

import numpy as np
import pytest

from kulkarni.census import CensusConfig, run_census
from kulkarni.hermitian import f_value
from kulkarni.limit_set import RegionLabel, classify
from kulkarni.projective import normalize
from kulkarni.verify import verify_suite

pytestmark = pytest.mark.slow


def report_line(capsys, ok: bool, name: str, detail: str) -> None:
    with capsys.disabled():
        print(f"\n[{'PASS' if ok else 'FAIL'}] {name}: {detail}")


def run_properties(names, trials):
    report = verify_suite(trials, seed=0, only=list(names))
    assert [r.name for r in report.results] == list(names)
    return report


def summarize(report):
    return "; ".join(
        f"{r.name} trials={r.trials} failures={r.failures} max_residual={r.max_residual:.2e}"
        + (f" error={r.error}" if r.error else "")
        for r in report.results
    )


def test_census_three_components_for_m2(capsys):
    details, ok = [], True
    for n in (2, 4):
        start = time.perf_counter()
        r = run_census(CensusConfig(m=2, n=n, samples=2000, edge_candidates=20000, segment_steps=64))
        secs = time.perf_counter() - start
        good = (
            r.component_count == 3
            and min(r.component_sizes) >= 50
            and r.cross_label_edges == 0
            and secs <= 60
        )
        ok &= good
        details.append(
            f"(2,{n}) components={r.component_count} sizes={r.component_sizes[:5]} "
            f"cross_label_edges={r.cross_label_edges} time={secs:.1f}s"
        )
    report_line(capsys, ok, "census m=2: 3 components, each >= 50, no cross-label edges, <= 60 s", "; ".join(details))
    assert ok


def test_census_connected_for_m3(capsys):
    details, ok = [], True
    for n in (3, 5):
        start = time.perf_counter()
        r = run_census(CensusConfig(m=3, n=n, samples=2000, edge_candidates=20000, segment_steps=64))
        secs = time.perf_counter() - start
        omega = sum(v for k, v in r.label_histogram.items() if k.startswith("OMEGA"))
        frac = r.component_sizes[0] / omega
        good = frac >= 0.99 and secs <= 60
        ok &= good
        details.append(f"(3,{n}) largest={r.component_sizes[0]}/{omega} ({frac:.2%}) components={r.component_count} time={secs:.1f}s")
    report_line(capsys, ok, "census m=3: largest component >= 99% of Omega samples, <= 60 s", "; ".join(details))
    assert ok


def test_interior_witness(capsys):
    rng = np.random.default_rng(0)
    c = normalize(np.array([1, 1j, 0, 0])).rep
    dim = 2 * c.size
    bad, worst = 0, -np.inf
    for _ in range(1000):
        d = rng.standard_normal(dim)
        d *= 1e-3 * rng.uniform() ** (1 / dim) / np.linalg.norm(d)  # uniform in the ball
        z = c + d[: c.size] + 1j * d[c.size :]
        f = float(f_value(z))
        worst = max(worst, f)
        if not (classify(z, 3) == RegionLabel.LAMBDA_INTERIOR and f < 0):
            bad += 1
    ok = bad == 0
    report_line(capsys, ok, "interior witness m=n=3, 1000 points in radius-1e-3 ball",
                f"non-interior={bad} max f={worst:.3f}")
    assert ok


def test_sylvester_oracle(capsys):
    report = run_properties(["sylvester_oracle", "det_eig_consistency"], 100_000)
    report_line(capsys, report.passed, "Sylvester oracle, 1e5 pairs per n in {2,3,5}", summarize(report))
    assert report.passed


def test_invariance(capsys):
    report = run_properties(["f_invariance", "label_invariance"], 10_000)
    report_line(capsys, report.passed,
                "invariance, 1e4 trials per (m,n) in {(2,2),(2,4),(3,3),(3,5)}, |df| <= 1e-8 |z|^4",
                summarize(report))
    assert report.passed


def test_equivariance_and_scaling(capsys):
    report = run_properties(["equivariance", "scaling"], 10_000)
    report_line(capsys, report.passed, "equivariance + scaling of Pi~, 1e4 trials each",
                summarize(report) + " (scaling sign s = +-1 set by the eta branch)")
    assert report.passed


def test_factorization(capsys):
    report = run_properties(["factorization"], 10_000)
    report_line(capsys, report.passed, "factorization through Q_m, 1e4 trials per (m,n), m < n",
                summarize(report))
    assert report.passed


def test_fibration(capsys):
    report = run_properties(["fiber_correctness"], 1_000)
    report_line(capsys, report.passed, "fibration: Pi(fiber_point) = x(t) within 1e-8, A^T J A = J within 1e-10, n in {3,4}",
                summarize(report))
    assert report.passed


def test_pi_image_negativity(capsys):
    report = run_properties(["pi_image_negativity"], 10_000)
    report_line(capsys, report.passed, "Pi~ image negativity, 1e4 points of U_+, relative 1e-10",
                summarize(report))
    assert report.passed
