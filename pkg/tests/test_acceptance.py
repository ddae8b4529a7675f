"""Acceptance criteria 1-10, exact, with their time limits.

Each criterion prints one PASS/FAIL line.  Run with ``pytest tests/test_acceptance.py -v``
or directly with ``python tests/test_acceptance.py``.
"""

import random
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import layouts  # noqa: E402
from superheis.algebra import HeisenbergSpec, check_axioms, make_heisenberg  # noqa: E402
from superheis.bform import (  # noqa: E402
    abelian_witness, b_form, is_abelian_excluding_center, is_isotropic, maximal_targets,
    random_isotropic_subspace, zeta,
)
from superheis.degenerations import random_degeneration  # noqa: E402
from superheis.formulas import mu, mu_parts  # noqa: E402
from superheis.graded import GradedVector, SuperDim  # noqa: E402
from superheis.representation import (  # noqa: E402
    build_pi_even_center, build_pi_even_center_flipped, build_pi_odd_center, canonical_v0, flip_module,
    is_faithful, minimal_representations, rho_analysis, verify_representation,
)
from superheis.scalar import GaussRational  # noqa: E402

EVEN = [(m, n) for m in range(5) for n in range(6) if m + n]
ODD = list(range(1, 7))
SPECS = [HeisenbergSpec.even_center(m, n) for m, n in EVEN] + [HeisenbergSpec.odd_center(n) for n in ODD]


def ceil_half(n):
    return (n + 1) // 2


def crit1():
    for spec in SPECS:
        rep = check_axioms(make_heisenberg(spec))
        assert rep.ok, "%s: %s" % (spec, rep.first_violation)
        assert rep.center_dim == 1 and rep.center_is_z and rep.two_step_nilpotent, spec


def crit2():
    for m, n in EVEN:
        r = build_pi_even_center(m, n)
        assert verify_representation(r).ok and is_faithful(r), (m, n)
        assert r.module_dim.total() == m + ceil_half(n) + 2, (m, n)
    for n in ODD:
        r = build_pi_odd_center(n, n)
        assert verify_representation(r).ok and is_faithful(r), n
        assert r.module_dim.total() == n + 2, n


def crit3():
    for m, n in EVEN:
        std, flp = build_pi_even_center(m, n), build_pi_even_center_flipped(m, n)
        assert std.module_dim == SuperDim(m + 2, ceil_half(n)), (m, n)
        assert flp.module_dim == SuperDim(ceil_half(n), m + 2), (m, n)
        for r in (std, flp):
            assert verify_representation(r).ok and is_faithful(r), (m, n)
    for n in ODD:
        for k in range(n + 1):
            r = build_pi_odd_center(n, k)
            assert r.module_dim == SuperDim(k + 1, n - k + 1), (n, k)
            assert verify_representation(r).ok and is_faithful(r), (n, k)


def crit4():
    for m, n in EVEN:
        spec = HeisenbergSpec.even_center(m, n)
        low, total = min(m + 2, ceil_half(n)), m + ceil_half(n) + 2
        assert mu_parts(spec) == (low, low, total, total), spec
        reps = [build_pi_even_center(m, n), build_pi_even_center_flipped(m, n)]
        assert all(is_faithful(r) for r in reps)
        # each extremal part is attained by one of the pair, at total dimension mu01 = mu10
        assert any(r.module_dim.even == low and r.module_dim.total() == total for r in reps), spec
        assert any(r.module_dim.odd == low and r.module_dim.total() == total for r in reps), spec
    for n in ODD:
        spec = HeisenbergSpec.odd_center(n)
        assert mu_parts(spec) == (1, 1, n + 2, n + 2), spec
        r0, rn = build_pi_odd_center(n, 0), build_pi_odd_center(n, n)
        assert is_faithful(r0) and is_faithful(rn)
        assert r0.module_dim.even == 1 and r0.module_dim.total() == n + 2
        assert rn.module_dim.odd == 1 and rn.module_dim.total() == n + 2


def all_constructed(spec):
    return minimal_representations(spec)


def crit5():
    rng = random.Random(20240501)
    for spec in SPECS:
        reps = all_constructed(spec)
        for r in reps:
            assert verify_representation(r).ok
            assert is_faithful(r, cross_check=False) == (not r.z_image.is_zero())
        for k in range(50):
            d, what = random_degeneration(reps[k % len(reps)], rng)
            assert verify_representation(d).ok, "%s: %s" % (spec, what)
            assert is_faithful(d, cross_check=False) == (not d.z_image.is_zero()), "%s: %s" % (spec, what)


def crit6():
    rng = random.Random(6)
    for spec in SPECS:
        g = make_heisenberg(spec)
        for t in maximal_targets(spec):
            w = abelian_witness(spec, t, g)
            assert is_abelian_excluding_center(g, w) and w.superdim() == t and w.dim() == zeta(spec), spec
        b = b_form(g)
        half = (g.dim() - 1) // 2
        for _ in range(1000):
            s = random_isotropic_subspace(b, rng)
            assert is_isotropic(b, s), spec
            sd = s.superdim()
            assert s.dim() <= half, spec
            if spec.is_even_center:
                assert sd.even <= spec.m and sd.odd <= spec.n // 2, (spec, sd)


def crit7():
    for spec in SPECS:
        for r in all_constructed(spec):
            a = rho_analysis(r, canonical_v0(r))
            assert a.abelian and a.complement_ok and a.independent and a.rank_nullity, spec
            if a.a.dim() == zeta(spec):
                assert a.v0_outside_image is True, spec


def crit8():
    for spec in SPECS:
        assert mu(spec) == spec.dim() - zeta(spec) + 1, spec


def crit9():
    for spec in SPECS:
        for r in all_constructed(spec):
            f = flip_module(r)
            assert verify_representation(f).ok and is_faithful(f), spec
            assert (f.module_dim.even, f.module_dim.odd) == (r.module_dim.odd, r.module_dim.even), spec


def _rand_rational(rng):
    return GaussRational(Fraction(rng.randint(-50, 50), rng.randint(1, 12)))


def crit10():
    rng = random.Random(10)
    for m, n in [(1, 2), (1, 3), (2, 4)]:
        for build, layout in ((build_pi_even_center, layouts.standard_even_center),
                              (build_pi_even_center_flipped, layouts.flipped_even_center)):
            r = build(m, n)
            for _ in range(25):
                coeffs = [_rand_rational(rng) for _ in range(r.algebra.dim())]
                mat = r.image_of(GradedVector(r.algebra.superdim, coeffs))
                a, b, c, d = coeffs[:m], coeffs[m:2 * m], coeffs[2 * m], coeffs[2 * m + 1:]
                assert layouts.as_sparse(mat) == layouts.nonzero(layout(m, n, a, b, c, d)), (m, n, build.__name__)
    for n in (2, 3):
        for k in (0, 1):
            r = build_pi_odd_center(n, k)
            for _ in range(25):
                coeffs = [_rand_rational(rng) for _ in range(r.algebra.dim())]
                mat = r.image_of(GradedVector(r.algebra.superdim, coeffs))
                a, c, b = coeffs[:n], coeffs[n], coeffs[n + 1:]
                assert layouts.as_sparse(mat) == layouts.nonzero(layouts.odd_center(n, k, a, b, c)), (n, k)


CRITERIA = [
    (1, "axiom suite", crit1, 1.0),
    (2, "minimal faithful representations", crit2, 5.0),
    (3, "super-dimension realization", crit3, None),
    (4, "mu_i and mu_ij with attaining representations", crit4, None),
    (5, "faithful iff z acts, on 50 degenerations per spec", crit5, None),
    (6, "abelian witnesses and 1000 isotropic subspaces per spec", crit6, 30.0),
    (7, "orbit map certificates at canonical v0", crit7, None),
    (8, "mu = dim g - zeta + 1", crit8, None),
    (9, "parity flip keeps faithful modules", crit9, None),
    (10, "generic-element layouts", crit10, None),
]


def run_criterion(body, limit):
    start = time.perf_counter()
    error = None
    try:
        body()
    except AssertionError as exc:
        error = "assertion: %s" % (exc,)
    seconds = time.perf_counter() - start
    if error is None and limit is not None and seconds >= limit:
        error = "took %.2f s, limit %.0f s" % (seconds, limit)
    return error, seconds


def line(num, title, error, seconds, limit):
    budget = "" if limit is None else " / %.0f s" % limit
    status = "PASS" if error is None else "FAIL"
    text = "criterion %2d %s: %s (%.2f s%s)" % (num, status, title, seconds, budget)
    return text + ("  [%s]" % error if error else "")


@pytest.mark.parametrize("num, title, body, limit", CRITERIA, ids=["criterion_%d" % c[0] for c in CRITERIA])
def test_criterion(num, title, body, limit, capsys):
    error, seconds = run_criterion(body, limit)
    with capsys.disabled():
        print("\n" + line(num, title, error, seconds, limit))
    assert error is None, error


if __name__ == "__main__":
    failed = 0
    for num, title, body, limit in CRITERIA:
        error, seconds = run_criterion(body, limit)
        failed += error is not None
        print(line(num, title, error, seconds, limit), flush=True)
    sys.exit(1 if failed else 0)
