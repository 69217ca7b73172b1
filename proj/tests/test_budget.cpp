#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "itrisk/budget.hpp"
#include "itrisk/errors.hpp"

using namespace itrisk::budget;

namespace {

ProcessorBenchmark ts201() {
    ProcessorBenchmark b;
    b.name = "TS201";
    b.fft_1k_complex_time = 16e-6;
    b.fir_per_tap_time = 0.83e-9;
    b.io_rate = 1e9;
    b.cores_per_board = 2;
    return b;
}

// Oracle: product by repeated addition, immune to a typoed formula.
std::uint64_t slow_product3(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    std::uint64_t ab = 0;
    for (std::uint64_t i = 0; i < b; ++i) ab += a;
    std::uint64_t out = 0;
    for (std::uint64_t i = 0; i < c; ++i) out += ab;
    return out;
}

// Oracle: radix-2 butterfly count (n/2)*log2(n) by repeated halving.
std::uint64_t butterflies(std::uint64_t n) {
    std::uint64_t stages = 0;
    for (std::uint64_t m = n; m > 1; m /= 2) ++stages;
    return (n / 2) * stages;
}

std::vector<PipelineStage> mds_stages(std::uint64_t channels) {
    PipelineStage daq;
    daq.name = "daq";
    daq.kind = StageKind::custom;
    daq.op_count = 1;
    daq.channels = channels;
    daq.deadline = 62.5e-6;

    PipelineStage fft;
    fft.name = "fft4k";
    fft.kind = StageKind::fft;
    fft.n_points = 4096;
    fft.channels = channels;
    fft.deadline = 3e-3;

    PipelineStage cfar;
    cfar.name = "cacfar";
    cfar.kind = StageKind::cfar;
    cfar.window_cells = 200;
    cfar.refs = 32;
    cfar.channels = channels;
    cfar.deadline = 3e-3;

    PipelineStage pdp;
    pdp.name = "pdp";
    pdp.kind = StageKind::pdp;
    pdp.max_targets = 10;
    pdp.channels = channels;
    pdp.deadline = 3e-3;

    return {daq, fft, cfar, pdp};
}

SignalContext mds_context() {
    SignalContext ctx;
    ctx.sample_rate = 16000;
    ctx.pri = 4.0;
    ctx.beams = 128;
    return ctx;
}

} // namespace

TEST_CASE("per-unit deadlines: 3 ms over 128 beams and the 2K correlation row") {
    CHECK(per_unit_deadline(3e-3, 128) == doctest::Approx(23.4375e-6).epsilon(1e-12));
    CHECK(per_unit_deadline(0.042, 1) == 0.042);
    CHECK(per_unit_deadline(128e-3, 128) == doctest::Approx(1e-3).epsilon(1e-12));
}

TEST_CASE("correlation op count: 1920 points x 128 channels x 32 refs") {
    CHECK(correlation_op_count(1920, 128, 32) == 7864320ULL);
    CHECK(correlation_op_count(1, 1, 1) == 1ULL);
    CHECK(correlation_op_count(640, 64, 32) == slow_product3(640, 64, 32));
    CHECK(correlation_op_count(640, 64, 32) == 1310720ULL);
}

TEST_CASE("cfar op count: 200-cell window x 128 channels x 32 refs") {
    CHECK(cfar_op_count(200, 128, 32) == 819200ULL);
    CHECK(cfar_op_count(1, 1, 1) == 1ULL);
    CHECK(cfar_op_count(200, 64, 32) == 409600ULL); // half the channels, half the count
}

TEST_CASE("op count overflow raises a range error") {
    CHECK_THROWS_AS(correlation_op_count(1ULL << 32, 1ULL << 32, 2), itrisk::RangeError);
}

TEST_CASE("time per op lands on the printed picosecond figures") {
    // 62.5 us / 7864320 ops: table prints 8.0 ps, exact value 7.947 ps.
    CHECK(time_per_op(62.5e-6, 7864320) ==
          doctest::Approx(8.0e-12).epsilon(0.01));
    // 3 ms / 819200 ops: table prints 3.6 ns, exact value 3.662 ns.
    CHECK(time_per_op(3e-3, 819200) == doctest::Approx(3.6e-9).epsilon(0.02));
    CHECK(time_per_op(1.0, 1) == 1.0);
}

TEST_CASE("fft time scales as n log2 n from the 1K anchor") {
    const auto bench = ts201();
    CHECK(fft_time_scaled(bench, 1024) == doctest::Approx(16e-6).epsilon(1e-12));
    CHECK(fft_time_scaled(bench, 4096) == doctest::Approx(76.8e-6).epsilon(1e-12));
    CHECK(fft_time_scaled(bench, 2048) == doctest::Approx(35.2e-6).epsilon(1e-12));

    // Butterfly-count oracle gives the same ratio.
    const double ratio = static_cast<double>(butterflies(4096)) / butterflies(1024);
    CHECK(fft_time_scaled(bench, 4096) ==
          doctest::Approx(bench.fft_1k_complex_time * ratio).epsilon(1e-12));

    CHECK_THROWS_AS(fft_time_scaled(bench, 1000), itrisk::ArgumentError);
    CHECK_THROWS_AS(fft_time_scaled(bench, 1), itrisk::ArgumentError);
}

TEST_CASE("four TS201 processors for the 4K FFT per-beam budget") {
    CHECK(required_processors(76.8e-6, 23.4375e-6) == 4);
    CHECK(required_processors(10e-6, 10e-6) == 1);
    CHECK(required_processors(76.8e-6, 23.4e-6) == 4); // ceil(3.28)
}

TEST_CASE("required_processors is monotone in time and antitone in deadline") {
    int prev = 0;
    for (int k = 1; k <= 50; ++k) {
        const int now = required_processors(1e-6 * k, 7e-6);
        CHECK(now >= prev);
        prev = now;
    }
    prev = 1 << 20;
    for (int k = 1; k <= 50; ++k) {
        const int now = required_processors(5e-4, 1e-6 * k);
        CHECK(now <= prev);
        prev = now;
    }
}

TEST_CASE("buffer sizing: 48 samples in 3 ms make 12 KiB across 128 channels") {
    const auto sizing = buffer_bits(16000, 3e-3, 16, 128);
    CHECK(sizing.samples == 48ULL);
    CHECK(sizing.bits == 98304ULL);
    CHECK(sizing.bits / kBitsPerKiB == 12ULL);

    const auto half = buffer_bits(16000, 3e-3, 16, 64);
    CHECK(half.bits == 49152ULL); // 6 KiB

    const auto tiny = buffer_bits(16000, 1e-9, 16, 128);
    CHECK(tiny.samples == 0ULL);
    CHECK(tiny.bits == 0ULL);
}

TEST_CASE("acquisition memory: a 4K frame on 128 channels is 1 MiB") {
    CHECK(acquisition_memory_bits(4096, 128, 16) == 8388608ULL);
    CHECK(acquisition_memory_bits(4096, 128, 16) == kBitsPerMiB);
    CHECK(acquisition_memory_bits(1, 1, 1) == 1ULL);
    CHECK(acquisition_memory_bits(4096, 64, 16) == kBitsPerMiB / 2);
}

TEST_CASE("range resolution to deadline is two-way travel time") {
    CHECK(range_resolution_to_deadline(2.25, 1500) == doctest::Approx(3e-3).epsilon(1e-12));
    CHECK(range_resolution_to_deadline(0.75, 1500) == doctest::Approx(1e-3).epsilon(1e-12));
    CHECK(range_resolution_to_deadline(90, 1500) == doctest::Approx(120e-3).epsilon(1e-12));
}

TEST_CASE("32 Doppler references cover a 2 kHz span at 62.5 Hz steps") {
    CHECK(doppler_reference_count(2000, 62.5) == 32ULL);
    CHECK(doppler_reference_count(100, 100) == 1ULL);
    CHECK(doppler_reference_count(2000, 60) == 34ULL);
}

TEST_CASE("8 processors on dual-DSP boards need 4 boards") {
    CHECK(board_count(8, 2) == 4);
    CHECK(board_count(1, 2) == 1);
    CHECK(board_count(5, 2) == 3);
}

TEST_CASE("correlation via FFT fits the 1 ms per-beam budget of table row 3") {
    const auto bench = ts201();
    // 2K correlation -> 4K forward + 4K inverse + pointwise multiply.
    const double per_beam = correlation_via_fft_time(bench, 4096);
    CHECK(per_beam == doctest::Approx(2 * 76.8e-6 + 4096 * 0.83e-9).epsilon(1e-12));
    CHECK(per_beam < per_unit_deadline(128e-3, 128));
}

TEST_CASE("the MDS pipeline reproduces the table-derived sizing") {
    const auto report = analyze_pipeline(mds_stages(128), ts201(), mds_context());
    REQUIRE(report.stages.size() == 4);

    const auto& fft = report.stages[1];
    CHECK(fft.required_processors == 4);
    CHECK(fft.feasible);
    CHECK(fft.per_unit_deadline == doctest::Approx(23.4375e-6).epsilon(1e-12));
    CHECK(fft.scaled_stage_time == doctest::Approx(76.8e-6).epsilon(1e-12));

    const auto& cfar = report.stages[2];
    CHECK(cfar.op_count == 819200ULL);
    CHECK(cfar.time_per_op == doctest::Approx(3.6e-9).epsilon(0.02));
    CHECK(cfar.feasible);

    const auto& pdp = report.stages[3];
    CHECK(pdp.per_unit_deadline == doctest::Approx(300e-6).epsilon(1e-12));
    CHECK(pdp.feasible);

    CHECK(report.acquisition_memory_bits == kBitsPerMiB);
    CHECK(report.buffer_bits == 12 * kBitsPerKiB);
    CHECK(report.all_feasible);
    CHECK(report.total_processors >= 4);
    CHECK(report.boards == board_count(report.total_processors, 2));
}

TEST_CASE("halving the channels halves every channel-proportional quantity") {
    const auto full = analyze_pipeline(mds_stages(128), ts201(), mds_context());
    const auto half = analyze_pipeline(mds_stages(64), ts201(), mds_context());
    REQUIRE(full.stages.size() == half.stages.size());
    for (std::size_t i = 0; i < full.stages.size(); ++i)
        CHECK(full.stages[i].op_count == 2 * half.stages[i].op_count);
    CHECK(full.acquisition_memory_bits == 2 * half.acquisition_memory_bits);
    CHECK(full.buffer_bits == 2 * half.buffer_bits);
    CHECK(full.stages[1].required_processors == 4);
    CHECK(half.stages[1].required_processors == 2);
}

TEST_CASE("a trivial custom stage needs one processor") {
    PipelineStage stage;
    stage.name = "noop";
    stage.kind = StageKind::custom;
    stage.op_count = 1;
    stage.deadline = 1.0;
    const auto report = analyze_pipeline({stage}, ts201(), SignalContext{});
    REQUIRE(report.stages.size() == 1);
    CHECK(report.stages[0].required_processors == 1);
    CHECK(report.stages[0].feasible);
}

TEST_CASE("a stage missing its required param is a configuration error") {
    PipelineStage stage;
    stage.name = "broken";
    stage.kind = StageKind::cfar;
    stage.deadline = 1.0;
    stage.refs = 32; // window_cells missing
    CHECK_THROWS_AS(analyze_pipeline({stage}, ts201(), SignalContext{}),
                    itrisk::ConfigurationError);
}

TEST_CASE("feasibility flag matches its defining inequality on every stage") {
    const auto report = analyze_pipeline(mds_stages(128), ts201(), mds_context());
    for (const auto& s : report.stages)
        CHECK(s.feasible == (s.required_processors * s.per_unit_deadline >=
                             s.scaled_stage_time));
}
