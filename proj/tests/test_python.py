# Copyright 2026 The autarc authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Smoke tests of the pyautarc extension module.

The build directory holding the module is put on sys.path via the
PYAUTARC_DIR environment variable (set by the build's test harness)."""

import os
import sys

import pytest

if os.environ.get("PYAUTARC_DIR"):
    sys.path.insert(0, os.environ["PYAUTARC_DIR"])

pyautarc = pytest.importorskip("pyautarc")


def test_fat_point_of_the_default_germ():
    point = pyautarc.fat_point(level=3)
    assert point["rank"] == 7
    assert len(point["basis"]) == 7
    assert point["basis"][0] == "1"


def test_monomial_fat_point_rank():
    point = pyautarc.fat_point(level=2, monomial=2)
    assert point["rank"] == 6  # C(2+2, 2)


def test_presentation_of_the_double_point():
    pres = pyautarc.presentation("endo", level=1, monomial=1)
    assert pres["variables"] == ["a_x_0", "a_x_1"]
    assert pres["equations"] == ["a_x_0^2", "2*a_x_0*a_x_1"]
    assert len(pres["digest"]) == 16


def test_count_is_an_exact_python_int():
    value = pyautarc.count(5, construction="endo", level=2, monomial=1)
    assert value == 25
    assert isinstance(value, int)


def test_interpolated_class():
    result = pyautarc.interpolate([2, 3, 5, 7], construction="endo",
                                  level=2, monomial=1)
    assert result["class"] == "L^2"


def test_certify_accepts_the_true_class_and_rejects_others():
    good = pyautarc.certify("L^2", [2, 3, 5], level=2, monomial=1)
    assert good["ok"] is True
    assert [row["q"] for row in good["rows"]] == [2, 3, 5]
    bad = pyautarc.certify("L^3", [2, 3, 5], level=2, monomial=1)
    assert bad["ok"] is False


def test_count_samples_match_the_square():
    samples = pyautarc.count_samples([2, 3, 5], level=2, monomial=1)
    assert [(s["q"], s["count"]) for s in samples] == [(2, 4), (3, 9), (5, 25)]


def test_auto_igusa_series_of_the_affine_line():
    series = pyautarc.auto_igusa_series(
        levels=2, primes=[2, 3, 5, 7, 11], monomial=1, policy="raw")
    assert series["classes"] == ["1", "L", "L^2"]
    assert series["coefficients"] == ["1", "L", "L^2"]


def test_explicit_policy_matches_the_worked_example():
    series = pyautarc.auto_igusa_series(
        levels=2, primes=[2, 3, 5, 7, 11, 13, 17, 19, 23],
        germ="y^2 - x^3", policy="explicit", exponents=[1, 3, 5])
    assert series["text"] == "L^-1 + L*t + L^2*t^2 + O(t^3)"


def test_classical_series_of_a_smooth_curve():
    series = pyautarc.classical_series("y - x^2", truncation=2,
                                       primes=[2, 3, 5, 7, 11, 13])
    assert series["coefficients"] == ["L", "L", "L"]


def test_fit_and_expand_round_trip():
    coefficients = ["1", "L"] + ["L^%d" % i for i in range(2, 11)]
    form = pyautarc.fit_series(coefficients, max_degree=2)
    assert form is not None
    assert form["factors"] == [(1, 1)]
    assert form["numerator"] == ["1"]
    again = pyautarc.expand_form(form["numerator"], form["factors"],
                                 truncation=10, additive=form["additive"])
    assert again == coefficients


def test_fit_returns_none_when_nothing_matches():
    assert pyautarc.fit_series(["1", "1", "2", "6", "24"]) is None


def test_errors_are_python_exceptions():
    with pytest.raises(pyautarc.Error):
        pyautarc.fat_point(level=1, germ="x^2 + 1")
    with pytest.raises(pyautarc.Error):
        pyautarc.count(3, level=2, monomial=2, budget=1)
    with pytest.raises(pyautarc.Error):
        pyautarc.presentation("frobnicate")


def test_verify_suite_reports_checks():
    report = pyautarc.verify_suite("classical-series")
    assert report["ok"] is True
    assert all(check["ok"] for check in report["checks"])
    assert "classical-series" in pyautarc.suite_names()
    assert len(pyautarc.suite_names()) == 8
