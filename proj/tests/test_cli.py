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
"""End-to-end tests of the autarc command-line tool.

The binary under test is taken from the AUTARC_BIN environment
variable (set by the build's test harness)."""

import json
import os
import shutil
import subprocess

import pytest


def binary():
    path = os.environ.get("AUTARC_BIN") or shutil.which("autarc")
    if not path or not os.path.exists(path):
        pytest.skip("autarc binary not found; set AUTARC_BIN")
    return path


def run(*args, env_extra=None, input_text=None):
    env = dict(os.environ)
    # Keep the ambient environment from leaking configuration in.
    for key in list(env):
        if key.startswith("AUTARC_"):
            del env[key]
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [binary(), *args],
        capture_output=True,
        text=True,
        input=input_text,
        env=env,
        timeout=240,
    )


def run_json(*args, env_extra=None):
    proc = run(*args, "--json", env_extra=env_extra)
    assert proc.returncode == 0, proc.stderr
    return json.loads(proc.stdout)


# ---------------------------------------------------------------- basics


def test_help_and_version_exit_zero():
    assert run("--help").returncode == 0
    proc = run("--version")
    assert proc.returncode == 0
    assert proc.stdout.strip()


def test_missing_subcommand_is_a_usage_error():
    assert run().returncode == 2


def test_unknown_flag_is_a_usage_error():
    assert run("truncate", "--frobnicate").returncode == 2


# ---------------------------------------------------------- presentations


def test_truncate_default_germ_level_three():
    report = run_json("truncate", "-i", "3")
    point = report["fat_point"]
    assert point["rank"] == 7
    assert len(point["basis"]) == 7
    assert point["basis"][0] == "1"
    assert report["meta"]["cache"] == ""


def test_truncate_monomial_rank_is_binomial():
    report = run_json("truncate", "--monomial", "2", "-i", "2")
    # k[x1,x2]/m^3 has rank C(2+2, 2) = 6.
    assert report["fat_point"]["rank"] == 6


def test_truncate_translated_center():
    # The curve y^2 = x^3 is smooth at (1, 1): the recentered germ has a
    # linear part, so the level-1 truncation is smaller than at the cusp.
    smooth = run_json("truncate", "-f", "y^2 - x^3", "--at", "1,1", "-i", "1")
    assert smooth["fat_point"]["rank"] == 2
    cusp = run_json("truncate", "-f", "y^2 - x^3", "-i", "1")
    assert cusp["fat_point"]["rank"] == 3


def test_center_must_lie_on_the_curve():
    proc = run("truncate", "-f", "y^2 - x^3", "--at", "2,1", "-i", "1")
    assert proc.returncode == 2


def test_endo_presentation_of_the_double_point():
    report = run_json("endo", "--monomial", "1", "-i", "1")
    pres = report["presentation"]
    assert [v["name"] for v in pres["variables"]] == ["a_x_0", "a_x_1"]
    assert pres["equations"] == ["a_x_0^2", "2*a_x_0*a_x_1"]
    assert len(report["digest"]) == 16


def test_jet_presentation_of_the_cusp():
    report = run_json("jet", "-m", "2")
    pres = report["presentation"]
    assert len(pres["variables"]) == 6
    assert len(pres["equations"]) == 3


def test_hom_into_the_affine_line_has_no_equations():
    report = run_json("hom", "-i", "1", "--target-coords", "u")
    assert report["presentation"]["equations"] == []


def test_nonvanishing_germ_is_rejected():
    proc = run("truncate", "-f", "x^2 + 1", "-i", "1")
    assert proc.returncode == 2
    assert "vanish" in proc.stderr


# ----------------------------------------------------------------- counts


def test_count_matches_the_closed_form():
    report = run_json("count", "--monomial", "1", "-i", "2",
                      "--primes", "2", "3", "5")
    samples = {s["q"]: s["count"] for s in report["samples"]}
    assert samples == {2: "4", 3: "9", 5: "25"}
    assert report["budget_exceeded"] == []


def test_budget_exhaustion_exits_one():
    proc = run("count", "--monomial", "2", "-i", "2",
               "--primes", "5", "--budget", "1", "--json")
    assert proc.returncode == 1
    report = json.loads(proc.stdout)
    assert report["budget_exceeded"] == [5]


def test_interpolated_class_with_holdout():
    report = run_json("class", "--monomial", "1", "-i", "2",
                      "--primes", "2", "3", "5", "7")
    interp = report["interpolation"]
    assert interp["ok"] is True
    assert interp["class"] == "L^2"
    assert [s["q"] for s in interp["holdout"]] == [7]


def test_certified_claim():
    report = run_json("class", "--monomial", "1", "-i", "2",
                      "--claimed", "L^2", "--primes", "2", "3", "5")
    cert = report["certification"]
    assert cert["ok"] is True
    assert all(row["match"] for row in cert["rows"])


def test_wrong_claim_fails_certification():
    proc = run("class", "--monomial", "1", "-i", "2",
               "--claimed", "L^3", "--primes", "2", "3", "5", "--json")
    assert proc.returncode == 1
    report = json.loads(proc.stdout)
    assert report["certification"]["ok"] is False


# ------------------------------------------------------------------ zeta


@pytest.fixture()
def cusp_scenario(tmp_path):
    path = tmp_path / "scenario.json"
    path.write_text(json.dumps({
        "kind": "germ",
        "germ": "y^2 - x^3",
        "levels": 2,
        "primes": [2, 3, 5, 7, 11, 13, 17, 19, 23],
        "policy": "explicit",
        "policy_exponents": [1, 3, 5],
    }))
    return str(path)


def test_zeta_text_output(cusp_scenario):
    proc = run("--scenario", cusp_scenario, "zeta")
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.strip() == "L^-1 + L*t + L^2*t^2 + O(t^3)"


def test_zeta_json_report(cusp_scenario):
    report = run_json("--scenario", cusp_scenario, "zeta")
    assert report["classes"] == ["1", "L^4", "L^7"]
    assert report["series"]["coefficients"] == ["L^-1", "L", "L^2"]
    assert len(report["scenario_digest"]) == 16


def test_classical_jet_series():
    # Order-2 jets of a smooth curve have class L^3, so the degree
    # bound (#primes - 2) must be at least 3.
    report = run_json("zeta", "-f", "y - x^2", "--classical", "-T", "2",
                      "--primes", "2", "3", "5", "7", "11", "13")
    assert report["series"]["coefficients"] == ["L", "L", "L"]


# ------------------------------------------------------------------- fit


def geometric_series_file(tmp_path):
    path = tmp_path / "series.json"
    path.write_text(json.dumps({
        "truncation": 10,
        "coefficients": ["1"] + ["L^%d" % i for i in range(1, 11)],
    }))
    return str(path)


def test_fit_recognizes_the_geometric_series(tmp_path):
    report = run_json("fit", "-s", geometric_series_file(tmp_path),
                      "--max-degree", "2")
    assert report["form"]["factors"] == [[1, 1]]
    assert report["form"]["numerator"] == ["1"]
    assert report["matches_series"] is True


def test_fit_accepts_a_zeta_report_as_input(tmp_path, cusp_scenario):
    # A full report (with a "series" field) works as fit input too,
    # here with a truncation too short for any candidate: exit 1.
    zeta = run("--scenario", cusp_scenario, "zeta", "--json")
    assert zeta.returncode == 0
    path = tmp_path / "report.json"
    path.write_text(zeta.stdout)
    proc = run("fit", "-s", str(path))
    assert proc.returncode == 1


# ----------------------------------------------------------------- cache


def test_cache_cold_and_warm_runs_are_identical(tmp_path):
    cache = str(tmp_path / "counts.jsonl")
    args = ("--cache", cache, "count", "--monomial", "1", "-i", "2",
            "--primes", "2", "3", "5", "--json")
    cold = run(*args)
    assert cold.returncode == 0
    assert os.path.exists(cache)
    warm = run(*args)
    assert warm.returncode == 0
    assert warm.stderr.count("cache hit") == 3
    assert "cache hit" not in cold.stderr
    # Reports agree byte for byte except the generation timestamp.
    cold_report = json.loads(cold.stdout)
    warm_report = json.loads(warm.stdout)
    cold_report["meta"]["generated"] = warm_report["meta"]["generated"]
    assert cold_report == warm_report


def test_cache_text_output_is_byte_identical(tmp_path):
    cache = str(tmp_path / "counts.jsonl")
    args = ("--cache", cache, "count", "--monomial", "1", "-i", "1",
            "--primes", "2", "3")
    cold = run(*args)
    warm = run(*args)
    assert cold.returncode == warm.returncode == 0
    assert warm.stdout == cold.stdout


# ----------------------------------------------------- environment overrides


def test_env_variables_configure_the_run(tmp_path):
    report = json.loads(run(
        "count", "--monomial", "1", "-i", "2",
        env_extra={"AUTARC_PRIMES": "2,3", "AUTARC_JSON": "1"},
    ).stdout)
    assert [s["q"] for s in report["samples"]] == [2, 3]


def test_flags_beat_environment():
    report = run_json("count", "--monomial", "1", "-i", "2",
                      "--primes", "7",
                      env_extra={"AUTARC_PRIMES": "2,3"})
    assert [s["q"] for s in report["samples"]] == [7]


def test_env_cache_matches_flag_cache(tmp_path):
    cache = str(tmp_path / "env.jsonl")
    proc = run("count", "--monomial", "1", "-i", "1", "--primes", "2",
               env_extra={"AUTARC_CACHE": cache})
    assert proc.returncode == 0
    assert os.path.exists(cache)


# ---------------------------------------------------------------- verify


def test_verify_lists_eight_suites():
    proc = run("verify", "--list")
    assert proc.returncode == 0
    suites = proc.stdout.split()
    assert len(suites) == 8
    assert "closed-forms" in suites


def test_unknown_suite_is_a_usage_error():
    assert run("verify", "no-such-suite").returncode == 2


def test_single_suite_runs_clean():
    proc = run("verify", "closed-forms")
    assert proc.returncode == 0, proc.stderr
    assert "closed-forms" in proc.stdout
