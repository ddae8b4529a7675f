import json

import pytest

from superheis.algebra import HeisenbergSpec
from superheis.formulas import admissible_superdims, full_report, mu, mu_parts
from superheis.graded import SuperDim

from conftest import all_specs

EC, OC = HeisenbergSpec.even_center, HeisenbergSpec.odd_center


@pytest.mark.parametrize("spec, expected", [(EC(1, 2), 4), (EC(3, 0), 5), (OC(3), 5), (EC(0, 1), 3)])
def test_mu(spec, expected):
    assert mu(spec) == expected


@pytest.mark.parametrize("spec, expected", [
    (EC(1, 2), [SuperDim(3, 1), SuperDim(1, 3)]),
    (OC(2), [SuperDim(1, 3), SuperDim(2, 2), SuperDim(3, 1)]),
    (EC(0, 4), [SuperDim(2, 2)]),
])
def test_admissible(spec, expected):
    assert admissible_superdims(spec) == expected


@pytest.mark.parametrize("spec, expected", [
    (EC(1, 2), (1, 1, 4, 4)),
    (OC(4), (1, 1, 6, 6)),
    (EC(2, 0), (0, 0, 4, 4)),
])
def test_mu_parts(spec, expected):
    assert mu_parts(spec) == expected


def test_report_examples():
    r = full_report(EC(2, 3))
    assert (r.mu, r.zeta, r.dim) == (6, 3, 8)
    r = full_report(OC(1))
    assert (r.mu, r.zeta, r.dim) == (3, 1, 3)


@pytest.mark.parametrize("spec", all_specs(), ids=str)
def test_report_identities(spec):
    r = full_report(spec)
    assert r.consistent()
    assert r.mu == spec.dim() - r.zeta + 1
    obj = json.loads(json.dumps(r.to_json()))
    assert obj["mu"] == r.mu and len(obj["admissible_superdims"]) == len(r.admissible_superdims)
