#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace itrisk::budget {

enum class StageKind { fft, correlation, cfar, pdp, custom };

std::string to_string(StageKind kind);

/// One algorithm stage of the processing pipeline, with the deadline it must
/// meet. Which params matter depends on the kind:
///   fft:         n_points (power of two)
///   correlation: points, refs; via_fft switches to the FFT-based cost model
///   cfar:        window_cells, refs
///   pdp:         max_targets
///   custom:      op_count (per channel)
struct PipelineStage {
    std::string name;
    StageKind kind = StageKind::custom;
    std::optional<std::uint64_t> n_points;
    std::optional<std::uint64_t> points;
    std::optional<std::uint64_t> refs;
    std::optional<std::uint64_t> window_cells;
    std::optional<std::uint64_t> max_targets;
    std::optional<std::uint64_t> op_count;
    bool via_fft = false;
    std::uint64_t channels = 1;
    double deadline = 0.0; // seconds
    int word_bits = 16;
};

/// Device datapoints the sizing is anchored to.
struct ProcessorBenchmark {
    std::string name;
    double fft_1k_complex_time = 0.0; // seconds for a 1K complex radix-2 FFT
    double fir_per_tap_time = 0.0;    // seconds per multiply-accumulate
    double io_rate = 0.0;             // bytes/second per port
    int cores_per_board = 1;
};

struct SignalContext {
    double sample_rate = 0.0;  // Hz
    double sound_speed = 1500; // m/s
    double pri = 0.0;          // seconds
    std::uint64_t beams = 1;
};

// Bit/byte convention throughout: 1 KiB = 8192 bits, 1 MiB = 1024 KiB.
constexpr std::uint64_t kBitsPerKiB = 8192;
constexpr std::uint64_t kBitsPerMiB = 8192 * 1024;

/// total deadline shared across identical units -> budget per unit.
double per_unit_deadline(double total_deadline, std::uint64_t units);

/// points x channels x refs, overflow checked.
std::uint64_t correlation_op_count(std::uint64_t points, std::uint64_t channels,
                                   std::uint64_t refs);

/// window_cells x channels x refs, overflow checked.
std::uint64_t cfar_op_count(std::uint64_t window_cells, std::uint64_t channels,
                            std::uint64_t refs);

/// deadline / ops: the time budget each operation gets.
double time_per_op(double deadline, std::uint64_t ops);

/// Radix-2 FFT time extrapolated from the 1K benchmark by the n*log2(n) cost
/// ratio. n must be a power of two >= 2.
double fft_time_scaled(const ProcessorBenchmark& bench, std::uint64_t n);

/// Correlation computed as forward FFT + inverse FFT + pointwise multiply,
/// per beam, for an FFT of size n.
double correlation_via_fft_time(const ProcessorBenchmark& bench, std::uint64_t n);

/// ceil(time / deadline): processors needed so each unit meets its budget.
int required_processors(double stage_time_per_unit, double deadline_per_unit);

struct BufferSizing {
    std::uint64_t samples = 0; // per channel within the interval
    std::uint64_t bits = 0;
};

/// Samples accumulating during one output interval and the bits to hold them.
BufferSizing buffer_bits(double sample_rate, double interval, int word_bits,
                         std::uint64_t channels);

/// n x channels x word_bits: memory to hold one acquisition frame.
std::uint64_t acquisition_memory_bits(std::uint64_t n_points, std::uint64_t channels,
                                      int word_bits);

/// Two-way travel time across one range cell: 2 * resolution / sound_speed.
double range_resolution_to_deadline(double resolution_m, double sound_speed_mps);

/// ceil(span / step) Doppler replicas to cover the span.
std::uint64_t doppler_reference_count(double span_hz, double step_hz);

/// ceil(processors / cores_per_board).
int board_count(int processors, int cores_per_board);

struct StageReport {
    std::string name;
    StageKind kind = StageKind::custom;
    std::uint64_t op_count = 0;       // total operations, channel factor included
    std::uint64_t units = 0;          // parallelizable work items
    double per_unit_deadline = 0.0;   // seconds
    double time_per_op = 0.0;         // seconds budget per op
    double scaled_stage_time = 0.0;   // seconds of device time per unit
    int required_processors = 0;
    bool feasible = true;
    std::uint64_t acquisition_bits = 0;
    std::uint64_t buffer_bits = 0;
    double data_rate = 0.0; // bytes/second through the stage input
};

struct BudgetReport {
    std::vector<StageReport> stages;
    int total_processors = 0;
    int boards = 0;
    std::uint64_t acquisition_memory_bits = 0;
    std::uint64_t buffer_bits = 0;
    double aggregate_data_rate = 0.0; // bytes/second, reported against io_rate
    double io_rate = 0.0;
    bool all_feasible = true;
};

/// Size every stage against the benchmark: op counts, per-unit budgets,
/// device time, processors, and the acquisition/buffer memory totals.
/// Infeasible stages stay in the report with their flag down.
/// Throws ConfigurationError when a stage misses a required param.
BudgetReport analyze_pipeline(const std::vector<PipelineStage>& stages,
                              const ProcessorBenchmark& bench, const SignalContext& ctx);

} // namespace itrisk::budget
