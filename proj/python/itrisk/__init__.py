"""Integration-and-test risk planning: simulate, compare, optimize, budget.

Thin dict-level wrapper over the compiled _itrisk core. Model, plan,
pipeline, benchmark, and registry documents are plain dicts matching the
JSON schemas the CLI reads.
"""

import json as _json

try:
    from . import _itrisk as _core
except ImportError:  # development tree: extension on sys.path
    import _itrisk as _core

__version__ = _core.__version__

# scalar budget helpers pass straight through
per_unit_deadline = _core.per_unit_deadline
correlation_op_count = _core.correlation_op_count
cfar_op_count = _core.cfar_op_count
time_per_op = _core.time_per_op
required_processors = _core.required_processors
acquisition_memory_bits = _core.acquisition_memory_bits
range_resolution_to_deadline = _core.range_resolution_to_deadline
doppler_reference_count = _core.doppler_reference_count
board_count = _core.board_count
fft_time_scaled = _core.fft_time_scaled
buffer_bits = _core.buffer_bits


def simulate(model, plan):
    """Replay a plan; returns {kpis, cycles, profile, events}."""
    return _json.loads(_core.simulate_json(_json.dumps(model), _json.dumps(plan)))


def validate_model(model):
    return _json.loads(_core.validate_model_json(_json.dumps(model)))


def validate_plan(model, plan):
    return _json.loads(_core.validate_plan_json(_json.dumps(model), _json.dumps(plan)))


def build_conventional_plan(model, order):
    return _json.loads(_core.build_conventional_json(_json.dumps(model), order))


def build_adaptive_plan(model, partition):
    return _json.loads(_core.build_adaptive_json(_json.dumps(model), partition))


def compare(model, plans):
    return _json.loads(
        _core.compare_json(_json.dumps(model), [_json.dumps(p) for p in plans])
    )


def optimize(model, objective="avg-risk", max_cycles=2, mode="exhaustive"):
    return _json.loads(
        _core.optimize_json(_json.dumps(model), objective, max_cycles, mode)
    )


def analyze_pipeline(pipeline, benchmark):
    return _json.loads(
        _core.analyze_pipeline_json(_json.dumps(pipeline), _json.dumps(benchmark))
    )


def reuse_delta(registry, from_version, to_version):
    return _json.loads(
        _core.reuse_delta_json(_json.dumps(registry), from_version, to_version)
    )


def minimal_cover(registry, version):
    return _json.loads(_core.minimal_cover_json(_json.dumps(registry), version))


def profile_csv(model, plan):
    return _core.profile_csv(_json.dumps(model), _json.dumps(plan))


def profile_svg(model, plans):
    return _core.profile_svg(_json.dumps(model), [_json.dumps(p) for p in plans])
