"""Acceptance suite: one printed PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines, or directly
with ``python3 tests/test_acceptance.py``.
"""
from __future__ import annotations

import random
import time
from fractions import Fraction
from math import comb, gcd

import pytest

from tropcurves import counts
from tropcurves.elliptic import wall_identity_holds
from tropcurves.lattice import double_area, pick_identity_holds
from tropcurves.paths import (
    LatticePath,
    column_profile,
    enumerate_paths,
    has_big_step,
    mikhalkin_multiplicity,
)
from tropcurves.subdivisions import (
    closed_form_multiplicity,
    enumerate_beta_sequences,
    generate_subdivisions,
    genus,
    is_irreducible,
    subdivision_multiplicity,
)

WORKED_PATH = LatticePath.of(
    6,
    [(0, 6), (0, 5), (0, 4), (0, 3), (0, 2), (0, 1), (1, 4), (1, 3), (1, 1), (2, 3), (2, 2),
     (3, 2), (3, 1), (4, 2), (4, 1), (4, 0), (5, 0), (6, 0)],
)


def _cold():
    counts._TALLY_CACHE.clear()
    counts.path_tally.cache_clear()


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def criterion_1():
    _cold()
    n, dt = _timed(lambda: counts.n_trop(3))
    return n == 12 and dt < 1.0, f"n_trop(3) = {n}, {dt:.3f} s (limit 1 s)"


def criterion_2():
    _cold()

    def run():
        return counts.n_trop(4), counts.e_trop_large_j(4), counts.e_trop_small_j(4)

    (n, large, small), dt = _timed(run)
    ok = n == 620 and large == small == 1860 and dt < 10.0
    return ok, f"n_trop(4) = {n}, large_j = {large}, small_j = {small}, {dt:.2f} s (limit 10 s)"


def criterion_3():
    parts = []
    ok = True
    for d in (2, 3, 4, 5):
        _cold()
        (large, small), dt = _timed(lambda: (counts.e_trop_large_j(d), counts.e_trop_small_j(d)))
        ok &= large == small
        if d == 5:
            ok &= dt < 300
        parts.append(f"d={d}: {large} vs {small} ({dt:.1f} s)")
    return ok, "; ".join(parts)


def criterion_4():
    parts = []
    ok = True
    for d in (3, 4, 5):
        cor, n = counts.n_via_corollary(d), counts.n_trop(d)
        fewer = len(counts.corollary_paths(d)) < len(enumerate_paths(d))
        ok &= cor == n and fewer
        parts.append(
            f"d={d}: corollary {cor} vs n_trop {n}, "
            f"{len(counts.corollary_paths(d))}/{len(enumerate_paths(d))} paths"
        )
    return ok, "; ".join(parts)


def criterion_5():
    checked = 0
    for d in range(1, 6):
        target = comb(d - 1, 2)
        for p in enumerate_paths(d):
            for s in generate_subdivisions(p):
                checked += 1
                if genus(s) != 0:
                    return False, f"genus {genus(s)} on a subdivision of {p.points}"
                if sum(double_area(c) for c in s.cells) != d * d:
                    return False, f"cells of {p.points} do not tile"
                if not all(pick_identity_holds(c) for c in s.cells):
                    return False, f"Pick fails on a cell of {p.points}"
                if counts.elliptic_factor_large_j(s) != target:
                    return False, f"large-j factor {counts.elliptic_factor_large_j(s)} != {target}"
    return True, f"{checked} subdivisions for d <= 5"


def criterion_6():
    checked = 0
    for d in range(1, 5):
        for p in enumerate_paths(d):
            subs = generate_subdivisions(p)
            rec, closed = mikhalkin_multiplicity(p), closed_form_multiplicity(p)
            explicit = sum(subdivision_multiplicity(s) for s in subs)
            if not rec == closed == explicit:
                return False, f"{p.points}: recursion {rec}, closed form {closed}, explicit {explicit}"
            rec_irr = mikhalkin_multiplicity(p, irreducible=True)
            exp_irr = sum(subdivision_multiplicity(s) for s in subs if is_irreducible(s))
            if rec_irr != exp_irr:
                return False, f"{p.points}: irreducible recursion {rec_irr}, explicit {exp_irr}"
            checked += 1
    return True, f"{checked} paths agree (all curves and irreducible)"


def criterion_7():
    rng = random.Random(20240601)
    failures = 0
    for _ in range(1000):
        u, v1, v2 = [(rng.randint(-10, 10), rng.randint(-10, 10)) for _ in range(3)]
        while True:
            n, m = rng.randint(1, 7), rng.randint(1, 7)
            if gcd(n, m) == 1:
                break
        failures += not wall_identity_holds(u, v1, v2, n, m)
    return failures == 0, f"1000 trials, {failures} failures"


def criterion_8():
    small = Fraction(0)
    cor = Fraction(0)
    n_unit = 0
    for d in range(1, 6):
        for p, t in zip(enumerate_paths(d), counts.tallies(d)):
            if has_big_step(p):
                continue
            n_unit += 1
            small += abs(t.small_j)
            small += sum(abs(counts.small_j_factor(s)) for s in generate_subdivisions(p))
            if d >= 3:
                cor += abs(counts.corollary_contribution(p))
    return small == 0 and cor == 0, f"{n_unit} unit-step paths, small-j total {small}, corollary total {cor}"


def criterion_9():
    prof = column_profile(WORKED_PATH)
    alpha = [a.trimmed() for a in prof.alpha]
    h = [prof.h(i) for i in range(1, 6)]
    sols = enumerate_beta_sequences(prof)
    ok = alpha == [(5,), (1, 1), (1,), (1,), (2,), (), ()] and h == [4, 3, 2, 2, 0] and len(sols) == 1
    if ok:
        beta = [b.trimmed() for b in sols[0].beta[:6]]
        beta_prime = [b.trimmed() for b in sols[0].beta_prime[1:6]]
        ok = beta == [(1,), (1,), (2,), (1,), (), ()] and beta_prime == [(1,), (1,), (1,), (), (1,)]
    return ok, f"alpha {alpha}, h(1..5) {h}, {len(sols)} beta solution(s)"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9]


@pytest.mark.parametrize("check", CRITERIA, ids=lambda f: f.__name__)
def test_criterion(check):
    ok, detail = check()
    print(f"\n{check.__name__}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


if __name__ == "__main__":
    for check in CRITERIA:
        ok, detail = check()
        print(f"{check.__name__}: {'PASS' if ok else 'FAIL'}  {detail}", flush=True)
