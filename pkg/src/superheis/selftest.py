"""Grid self-test: every invariant of the library over a range of parameters."""

import random
import time
from dataclasses import dataclass, field

from superheis.algebra import HeisenbergSpec, check_axioms, make_heisenberg
from superheis.bform import (
    abelian_witness, b_form, is_abelian_excluding_center, is_isotropic, maximal_targets,
    random_isotropic_subspace, zeta,
)
from superheis.degenerations import corrupt, random_degeneration
from superheis.formulas import admissible_superdims, full_report, mu, mu_parts
from superheis.representation import (
    Representation, canonical_v0, flip_module, is_faithful, minimal_representations, restrict_to_even_part,
    rho_analysis, verify_representation,
)


def grid(max_m=4, max_n=5, max_hn=6):
    specs = [HeisenbergSpec.even_center(m, n)
             for m in range(max_m + 1) for n in range(max_n + 1) if m + n]
    specs += [HeisenbergSpec.odd_center(n) for n in range(1, max_hn + 1)]
    return specs


@dataclass
class SelftestResult:
    specs: int = 0
    checks: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0
    warnings: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures


class _Fail(Exception):
    pass


def _require(cond, prop, spec, detail=""):
    if not cond:
        raise _Fail("%s failed for %s%s" % (prop, spec, ": " + detail if detail else ""))


def check_spec(spec, rng, samples=5, isotropic_samples=20, fixtures=None):
    """Run every property on one spec; returns the number of checks, raises _Fail."""
    n_checks = 0

    def req(cond, prop, detail=""):
        nonlocal n_checks
        n_checks += 1
        _require(cond, prop, spec, detail)

    g = make_heisenberg(spec)
    ax = check_axioms(g)
    req(ax.ok, "axioms", ax.first_violation or "")

    reps = fixtures if fixtures is not None else minimal_representations(spec)
    adm = admissible_superdims(spec)
    for r in reps:
        v = verify_representation(r)
        req(v.ok, "verify_representation", v.violations[0] if v.violations else "")
        req(is_faithful(r), "is_faithful")
        req(r.module_dim.total() == mu(spec), "total dimension equals mu")
        req(r.module_dim in adm, "superdim is admissible", str(r.module_dim))
        back = Representation.loads(r.dumps())
        req(back.images == r.images and back.module_dim == r.module_dim, "json round trip")

        a = rho_analysis(r, canonical_v0(r))
        req(a.abelian, "kernel of x -> x v0 abelian and z-free")
        req(a.complement_ok, "graded complement containing z")
        req(a.independent, "orbit vectors independent")
        req(a.rank_nullity, "rank-nullity")
        req(a.v0_outside_image is not False, "v0 outside image when dim a = zeta")

        f = flip_module(r)
        req(verify_representation(f).ok and is_faithful(f), "parity flip keeps a faithful representation")
        req((f.module_dim.even, f.module_dim.odd) == (r.module_dim.odd, r.module_dim.even), "parity flip exchanges parts")

        if spec.is_even_center:
            parts = [restrict_to_even_part(r, b) for b in (0, 1)]
            req(all(p.is_representation for p in parts), "even part acts blockwise")
            req(any(p.faithful and p.bound_ok for p in parts), "some block faithful for the even part with dim >= m+2")

        for _ in range(samples):
            d, what = random_degeneration(r, rng)
            req(verify_representation(d).ok, "degeneration is a representation", what)
            req(is_faithful(d, cross_check=False) == (not d.z_image.is_zero()), "faithful iff z acts", what)

    if fixtures is None:
        req({r.module_dim for r in reps} == set(adm), "every admissible superdim realized")
    rep = full_report(spec)
    req(rep.consistent(), "dimension report identities")
    req(rep.mu == spec.dim() - zeta(spec) + 1, "mu = dim g - zeta + 1")
    m0, m1, m01, m10 = mu_parts(spec)
    evens = [r.module_dim.even for r in reps]
    odds = [r.module_dim.odd for r in reps]
    if fixtures is None:
        req(min(evens) == m0 and min(odds) == m1, "mu0 and mu1 attained")

    for target in maximal_targets(spec):
        w = abelian_witness(spec, target, g)
        req(is_abelian_excluding_center(g, w) and w.superdim() == target and w.dim() == zeta(spec),
            "abelian witness", str(target))
    b = b_form(g)
    e = b.even_count()
    half = (g.dim() - 1) // 2
    for _ in range(isotropic_samples):
        s = random_isotropic_subspace(b, rng)
        sd = s.superdim()
        req(is_isotropic(b, s), "random subspace isotropic")
        req(s.dim() <= half, "isotropic dimension bound")
        if spec.is_even_center:
            req(sd.even <= e // 2 and sd.odd <= (g.dim() - 1 - e) // 2, "blockwise isotropic bound", str(sd))
        else:
            req(sd.even + sd.odd <= spec.n, "blockwise isotropic bound", str(sd))
    return n_checks


def run(max_m=4, max_n=5, max_hn=6, samples=5, isotropic_samples=20, seed=0, corrupted=False):
    """Check the grid; stops at the first failing property."""
    rng = random.Random(seed)
    res = SelftestResult()
    start = time.perf_counter()
    specs = grid(max_m, max_n, max_hn)
    if not specs:
        res.warnings.append("empty grid: nothing checked")
    try:
        if corrupted:
            spec = HeisenbergSpec.even_center(1, 0)
            bad = corrupt(minimal_representations(spec)[0])
            res.checks += check_spec(spec, rng, samples, isotropic_samples, fixtures=[bad])
        for spec in specs:
            res.checks += check_spec(spec, rng, samples, isotropic_samples)
            res.specs += 1
    except _Fail as exc:
        res.failures.append(str(exc))
    res.seconds = time.perf_counter() - start
    return res
