"""Closed forms for the minimal faithful dimensions of Heisenberg superalgebras."""

from dataclasses import dataclass

from superheis.bform import zeta
from superheis.graded import SuperDim


def _ceil_half(n):
    return (n + 1) // 2


def mu(spec):
    """Minimal total dimension of a faithful module."""
    if spec.is_even_center:
        return spec.m + _ceil_half(spec.n) + 2
    return spec.n + 2


def admissible_superdims(spec):
    """Super-dimensions of the faithful modules of dimension ``mu(spec)``."""
    if spec.is_even_center:
        a, b = spec.m + 2, _ceil_half(spec.n)
        out = [SuperDim(a, b)]
        if a != b:
            out.append(SuperDim(b, a))
        return out
    n = spec.n
    return [SuperDim(i + 1, n - i + 1) for i in range(n + 1)]


def mu_parts(spec):
    """``(mu0, mu1, mu01, mu10)``: least even and odd parts, and least total
    dimension among faithful modules attaining each of them."""
    if spec.is_even_center:
        low = min(spec.m + 2, _ceil_half(spec.n))
    else:
        low = 1
    total = mu(spec)
    return low, low, total, total


@dataclass(frozen=True)
class DimensionReport:
    spec: object
    mu: int
    zeta: int
    dim: int
    mu0: int
    mu1: int
    mu01: int
    mu10: int
    admissible_superdims: tuple

    def consistent(self):
        """The identities tying the fields together."""
        return (
            all(s.total() == self.mu for s in self.admissible_superdims)
            and self.mu == min(s.total() for s in self.admissible_superdims)
            and self.mu0 == self.mu1
            and self.mu01 == self.mu10 == self.mu
            and self.mu == self.dim - self.zeta + 1
        )

    def to_json(self):
        return {
            "algebra": self.spec.to_json(),
            "mu": self.mu,
            "zeta": self.zeta,
            "dim": self.dim,
            "mu0": self.mu0,
            "mu1": self.mu1,
            "mu01": self.mu01,
            "mu10": self.mu10,
            "admissible_superdims": [s.to_json() for s in self.admissible_superdims],
        }

    def text(self):
        sd = ", ".join("(%d,%d)" % (s.even, s.odd) for s in self.admissible_superdims)
        return ("%s: dim=%d mu=%d zeta=%d mu0=%d mu1=%d mu01=%d mu10=%d superdims %s"
                % (self.spec.name(), self.dim, self.mu, self.zeta,
                   self.mu0, self.mu1, self.mu01, self.mu10, sd))


def full_report(spec):
    m0, m1, m01, m10 = mu_parts(spec)
    return DimensionReport(spec, mu(spec), zeta(spec), spec.dim(), m0, m1, m01, m10,
                           tuple(admissible_superdims(spec)))
