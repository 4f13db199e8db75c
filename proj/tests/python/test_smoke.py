# Copyright 2026 The framecensus Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#   http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from fractions import Fraction

import pytest

import framecensus as fc


def test_counts():
    assert fc.burnside_m(8, 2) == 7
    assert fc.burnside_m(8, 3) == 17
    assert fc.count_generating(8, 2) == 22
    assert fc.asymptotic_a(8, 2) == Fraction(6)
    assert fc.fix_count_mult(8, 3, 2) == 2
    assert fc.hall_eulerian(12, 2) == 96
    assert fc.units(8) == [1, 3, 5, 7]


def test_big_integers_are_python_ints():
    value = fc.prime_unlifted(101, 30)
    assert isinstance(value, int)
    assert value > 2**64
    assert fc.asymptotic_a(101, 30).numerator > 2**64


def test_equivalence():
    assert fc.mult_canonical(8, [3, 6, 7]) == [1, 2, 5]
    assert fc.affine_canonical(8, [1, 2, 5]) == [0, 1, 4]
    assert fc.mult_witness(8, [1, 2, 5], [3, 6, 7]) == 3
    sigma = fc.unitary_witness(8, [1, 2, 5], [1, 5, 6])
    assert sigma is not None and sigma[0] == 0 and sorted(sigma) == list(range(8))
    assert fc.unitary_witness(8, [1, 3], [1, 5]) is None
    assert fc.is_exceptional(8, [1, 2, 5], [1, 5, 6])
    with pytest.raises(fc.SearchBudgetExceeded):
        fc.unitary_witness(8, [1, 2, 5], [1, 5, 6], budget=1)


def test_census_and_catalog():
    report = fc.run_census(8, 3, workers=2)
    assert (report.m, report.h_min, report.h_max) == (17, 16, 16)
    assert report.summary() == "n=8 d=3 m=17 h=16 a=56/3 exceptional=1"
    assert report.exceptional_pairs[0][:2] == ([1, 2, 5], [1, 5, 6])
    assert len(report.classes) == 17
    assert fc.import_catalog(report.to_json()) == report
    assert len(report.to_csv().splitlines()) == 18
    with pytest.raises(fc.CatalogParseError):
        fc.import_catalog(report.to_json()[:40])


def test_errors_and_verify():
    with pytest.raises(ValueError):
        fc.burnside_m(5, 6)
    with pytest.raises(ValueError):
        fc.prime_unlifted(12, 3)
    checks, failures = fc.verify(8, 2)
    assert checks > 0 and failures == []
