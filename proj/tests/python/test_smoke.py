"""Smoke tests for the itrisk python package against the bundled example."""

import json
import os
import sys

import itrisk


def load(name):
    with open(os.path.join(os.environ["ITRISK_DATA_DIR"], name)) as fh:
        return json.load(fh)


def main():
    model = load("mds_model.json")
    scheme1 = load("scheme1_plan.json")
    scheme2 = load("scheme2_plan.json")

    assert itrisk.validate_model(model) == []

    result = itrisk.simulate(model, scheme1)
    assert [r for _, r in result["profile"]] == [6, 7, 4, 5, 3, 4, 1, 2, 0]
    assert result["kpis"]["phi"] == 9
    assert result["kpis"]["max_risk"] == 7.0
    assert result["kpis"]["remaining_risk"] == 0.0

    result2 = itrisk.simulate(model, scheme2)
    assert result2["kpis"]["phi"] == 10
    assert result2["kpis"]["max_risk"] == 5.0
    assert abs(result2["kpis"]["average_risk"] - 2.2) < 1e-12

    report = itrisk.compare(model, [scheme1, scheme2])
    assert report["winners"]["average_risk"] == "scheme-II"
    assert report["winners"]["duration"] == "scheme-I"

    built = itrisk.build_adaptive_plan(
        model, [["DSP2", "DAQ2", "FFT"], ["DSP4", "CACFAR2", "PDP2"]]
    )
    rebuilt = itrisk.simulate(model, built)
    assert rebuilt["kpis"]["phi"] == 10
    assert rebuilt["kpis"]["max_risk"] == 5.0

    best = itrisk.optimize(model, objective="max-risk", max_cycles=2, mode="exhaustive")
    assert best["plans_explored"] > 0
    sim_best = itrisk.simulate(model, best["best_plan"])
    assert sim_best["kpis"]["max_risk"] <= 5.0

    # budget arithmetic
    assert itrisk.correlation_op_count(1920, 128, 32) == 7864320
    assert itrisk.cfar_op_count(200, 128, 32) == 819200
    assert abs(itrisk.per_unit_deadline(3e-3, 128) - 23.4375e-6) < 1e-15
    assert itrisk.required_processors(
        itrisk.fft_time_scaled(16e-6, 4096), itrisk.per_unit_deadline(3e-3, 128)
    ) == 4
    assert itrisk.board_count(8, 2) == 4
    assert itrisk.acquisition_memory_bits(4096, 128, 16) == 8388608
    samples, bits = itrisk.buffer_bits(16000, 3e-3, 16, 128)
    assert (samples, bits) == (48, 98304)
    assert itrisk.doppler_reference_count(2000, 62.5) == 32

    budget = itrisk.analyze_pipeline(load("mds_pipeline.json"), load("ts201_benchmark.json"))
    fft_stage = next(s for s in budget["stages"] if s["kind"] == "fft")
    assert fft_stage["required_processors"] == 4
    assert budget["totals"]["acquisition_memory_bits"] == 8388608

    registry = load("mds_registry.json")
    delta = itrisk.reuse_delta(registry, "k1", "k2")
    assert "TS5" not in delta["reusable"]
    assert delta["uncovered_tags"] == []
    cover = itrisk.minimal_cover(registry, "k2")
    assert len(cover["cases"]) == 5

    csv = itrisk.profile_csv(model, scheme1)
    assert csv.startswith("tick,risk\n1,6.000000\n")

    svg = itrisk.profile_svg(model, [scheme1, scheme2])
    assert svg.count("<polyline") == 2
    assert itrisk.profile_svg(model, [scheme1, scheme2]) == svg

    print("python smoke tests passed")


if __name__ == "__main__":
    sys.exit(main())
