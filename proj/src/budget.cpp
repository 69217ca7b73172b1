#include "itrisk/budget.hpp"

#include <cmath>

#include "itrisk/errors.hpp"

namespace itrisk::budget {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, const char* what) {
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw RangeError(std::string(what) + ": operation count overflows 64 bits");
    return out;
}

bool is_power_of_two(std::uint64_t n) { return n >= 1 && (n & (n - 1)) == 0; }

int log2_exact(std::uint64_t n) {
    int bits = 0;
    while (n > 1) {
        n >>= 1;
        ++bits;
    }
    return bits;
}

std::uint64_t require_param(const std::optional<std::uint64_t>& value, const char* stage,
                            const char* param) {
    if (!value)
        throw ConfigurationError(std::string(stage) + ": missing required param '" + param +
                                 "'");
    if (*value < 1)
        throw ConfigurationError(std::string(stage) + ": param '" + param + "' must be >= 1");
    return *value;
}

} // namespace

std::string to_string(StageKind kind) {
    switch (kind) {
    case StageKind::fft: return "fft";
    case StageKind::correlation: return "correlation";
    case StageKind::cfar: return "cfar";
    case StageKind::pdp: return "pdp";
    case StageKind::custom: return "custom";
    }
    return "?";
}

double per_unit_deadline(double total_deadline, std::uint64_t units) {
    if (units < 1) throw ArgumentError("per_unit_deadline: units must be >= 1");
    return total_deadline / static_cast<double>(units);
}

std::uint64_t correlation_op_count(std::uint64_t points, std::uint64_t channels,
                                   std::uint64_t refs) {
    if (points < 1 || channels < 1 || refs < 1)
        throw ArgumentError("correlation_op_count: all inputs must be >= 1");
    return checked_mul(checked_mul(points, channels, "correlation"), refs, "correlation");
}

std::uint64_t cfar_op_count(std::uint64_t window_cells, std::uint64_t channels,
                            std::uint64_t refs) {
    if (window_cells < 1 || channels < 1 || refs < 1)
        throw ArgumentError("cfar_op_count: all inputs must be >= 1");
    return checked_mul(checked_mul(window_cells, channels, "cfar"), refs, "cfar");
}

double time_per_op(double deadline, std::uint64_t ops) {
    if (ops < 1) throw ArgumentError("time_per_op: ops must be >= 1");
    return deadline / static_cast<double>(ops);
}

double fft_time_scaled(const ProcessorBenchmark& bench, std::uint64_t n) {
    if (!is_power_of_two(n) || n < 2)
        throw ArgumentError("fft_time_scaled: n must be a power of two >= 2");
    // n*log2(n) relative to the 1K anchor (1024 * 10).
    const double ratio = (static_cast<double>(n) * log2_exact(n)) / (1024.0 * 10.0);
    return bench.fft_1k_complex_time * ratio;
}

double correlation_via_fft_time(const ProcessorBenchmark& bench, std::uint64_t n) {
    return 2.0 * fft_time_scaled(bench, n) +
           static_cast<double>(n) * bench.fir_per_tap_time;
}

int required_processors(double stage_time_per_unit, double deadline_per_unit) {
    if (!(stage_time_per_unit > 0.0) || !(deadline_per_unit > 0.0))
        throw ArgumentError("required_processors: times must be positive");
    return static_cast<int>(std::ceil(stage_time_per_unit / deadline_per_unit));
}

BufferSizing buffer_bits(double sample_rate, double interval, int word_bits,
                         std::uint64_t channels) {
    if (!(sample_rate > 0.0) || !(interval > 0.0) || word_bits < 1 || channels < 1)
        throw ArgumentError("buffer_bits: all inputs must be positive");
    BufferSizing out;
    out.samples = static_cast<std::uint64_t>(sample_rate * interval);
    out.bits = checked_mul(checked_mul(out.samples, static_cast<std::uint64_t>(word_bits),
                                       "buffer"),
                           channels, "buffer");
    return out;
}

std::uint64_t acquisition_memory_bits(std::uint64_t n_points, std::uint64_t channels,
                                      int word_bits) {
    if (n_points < 1 || channels < 1 || word_bits < 1)
        throw ArgumentError("acquisition_memory_bits: all inputs must be >= 1");
    return checked_mul(checked_mul(n_points, channels, "acquisition"),
                       static_cast<std::uint64_t>(word_bits), "acquisition");
}

double range_resolution_to_deadline(double resolution_m, double sound_speed_mps) {
    if (!(resolution_m > 0.0) || !(sound_speed_mps > 0.0))
        throw ArgumentError("range_resolution_to_deadline: inputs must be positive");
    return 2.0 * resolution_m / sound_speed_mps;
}

std::uint64_t doppler_reference_count(double span_hz, double step_hz) {
    if (!(span_hz > 0.0) || !(step_hz > 0.0))
        throw ArgumentError("doppler_reference_count: inputs must be positive");
    if (span_hz < step_hz)
        throw ArgumentError("doppler_reference_count: span must be >= step");
    return static_cast<std::uint64_t>(std::ceil(span_hz / step_hz));
}

int board_count(int processors, int cores_per_board) {
    if (processors < 1 || cores_per_board < 1)
        throw ArgumentError("board_count: inputs must be positive");
    return (processors + cores_per_board - 1) / cores_per_board;
}

BudgetReport analyze_pipeline(const std::vector<PipelineStage>& stages,
                              const ProcessorBenchmark& bench, const SignalContext& ctx) {
    if (stages.empty()) throw ArgumentError("analyze_pipeline: no stages");

    BudgetReport report;
    report.io_rate = bench.io_rate;

    for (const auto& stage : stages) {
        const char* name = stage.name.c_str();
        if (!(stage.deadline > 0.0))
            throw ConfigurationError(stage.name + ": deadline must be positive");
        if (stage.channels < 1)
            throw ConfigurationError(stage.name + ": channels must be >= 1");

        StageReport s;
        s.name = stage.name;
        s.kind = stage.kind;

        switch (stage.kind) {
        case StageKind::fft: {
            const std::uint64_t n = require_param(stage.n_points, name, "n_points");
            // Work item = one beam's FFT; butterfly count gives the op total.
            s.units = stage.channels;
            s.op_count = checked_mul(checked_mul(n / 2, static_cast<std::uint64_t>(
                                                            log2_exact(n)),
                                                 name),
                                     stage.channels, name);
            s.scaled_stage_time = fft_time_scaled(bench, n);
            s.acquisition_bits = acquisition_memory_bits(n, stage.channels,
                                                         stage.word_bits);
            if (ctx.sample_rate > 0.0)
                s.buffer_bits =
                    buffer_bits(ctx.sample_rate, stage.deadline, stage.word_bits,
                                stage.channels)
                        .bits;
            break;
        }
        case StageKind::correlation: {
            const std::uint64_t points = require_param(stage.points, name, "points");
            const std::uint64_t refs = require_param(stage.refs, name, "refs");
            s.op_count = correlation_op_count(points, stage.channels, refs);
            if (stage.via_fft) {
                // Forward + inverse transform of twice the replica length.
                if (!is_power_of_two(points))
                    throw ConfigurationError(stage.name +
                                             ": via_fft needs a power-of-two point count");
                s.units = stage.channels;
                s.scaled_stage_time = correlation_via_fft_time(bench, points * 2);
            } else {
                s.units = s.op_count;
                s.scaled_stage_time = bench.fir_per_tap_time;
            }
            break;
        }
        case StageKind::cfar: {
            const std::uint64_t window = require_param(stage.window_cells, name,
                                                       "window_cells");
            const std::uint64_t refs = require_param(stage.refs, name, "refs");
            s.op_count = cfar_op_count(window, stage.channels, refs);
            s.units = s.op_count;
            s.scaled_stage_time = bench.fir_per_tap_time;
            break;
        }
        case StageKind::pdp: {
            const std::uint64_t targets = require_param(stage.max_targets, name,
                                                        "max_targets");
            s.op_count = checked_mul(targets, stage.channels, name);
            // Unit = one target validated across all channels.
            s.units = targets;
            s.scaled_stage_time = bench.fir_per_tap_time * static_cast<double>(stage.channels);
            break;
        }
        case StageKind::custom: {
            const std::uint64_t ops = require_param(stage.op_count, name, "op_count");
            s.op_count = checked_mul(ops, stage.channels, name);
            s.units = s.op_count;
            s.scaled_stage_time = bench.fir_per_tap_time;
            break;
        }
        }

        s.per_unit_deadline = per_unit_deadline(stage.deadline, s.units);
        s.time_per_op = time_per_op(stage.deadline, s.op_count);
        s.required_processors = required_processors(s.scaled_stage_time, s.per_unit_deadline);
        s.feasible = static_cast<double>(s.required_processors) * s.per_unit_deadline >=
                     s.scaled_stage_time;
        if (ctx.sample_rate > 0.0)
            s.data_rate = ctx.sample_rate * static_cast<double>(stage.channels) *
                          (static_cast<double>(stage.word_bits) / 8.0);

        report.total_processors += s.required_processors;
        report.acquisition_memory_bits += s.acquisition_bits;
        report.buffer_bits += s.buffer_bits;
        report.aggregate_data_rate += s.data_rate;
        report.all_feasible = report.all_feasible && s.feasible;
        report.stages.push_back(std::move(s));
    }

    report.boards = board_count(report.total_processors, bench.cores_per_board);
    return report;
}

} // namespace itrisk::budget
