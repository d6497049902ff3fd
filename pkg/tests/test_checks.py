"""Small-ensemble runs of the property battery.

The acceptance suite reruns the same functions with large ensembles; these
runs keep the plumbing honest at unit-test cost.
"""

import numpy as np

from qcorr.checks import (
    CheckResult,
    check_additivity,
    check_ancilla_invariance,
    check_channel_contractivity,
    check_closed_form_vs_dp,
    check_dp_vs_naive,
    check_ghz_growth,
    check_local_unitary_invariance,
    check_mutual_info_vs_relative_entropy,
    check_nonnegativity,
    check_product_states,
    check_strong_subadditivity,
    run_default_checks,
)

SMALL = 4


def fresh_rng():
    return np.random.default_rng(2024)


def test_each_property_passes_small_ensembles():
    rng = fresh_rng()
    results = [
        check_nonnegativity(rng, SMALL),
        check_product_states(rng, SMALL),
        check_local_unitary_invariance(rng, SMALL),
        check_ancilla_invariance(rng, SMALL),
        check_channel_contractivity(rng, SMALL),
        check_additivity(rng, SMALL),
        check_ghz_growth(),
        check_dp_vs_naive(rng, SMALL),
        check_closed_form_vs_dp(max_qubits=5),
        check_mutual_info_vs_relative_entropy(rng, SMALL),
        check_strong_subadditivity(rng, SMALL),
    ]
    for result in results:
        assert result.passed, result.line()


def test_result_line_formats():
    assert CheckResult("demo", True, "worst 0").line() == "PASS  demo: worst 0"
    assert CheckResult("demo", False, "worst 1").line().startswith("FAIL")


def test_default_battery_is_seeded_and_complete():
    first = run_default_checks(seed=5, count=3)
    second = run_default_checks(seed=5, count=3)
    assert [r.detail for r in first] == [r.detail for r in second]
    names = [r.name for r in first]
    assert len(names) == len(set(names)) == 11
    assert all(r.passed for r in first)
