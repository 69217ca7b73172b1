#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "itrisk/model.hpp"

using namespace itrisk;

namespace {

ProductModel mds_model() {
    ProductModel m;
    for (const char* id : {"DAQ2", "FFT", "CACFAR2", "PDP2", "DSP2", "DSP4"})
        m.modules.push_back({id, id, 1.0, 1.0});
    m.interfaces.push_back({{"DAQ2", "DSP2"}, 1.0, 1.0});
    m.interfaces.push_back({{"FFT", "DSP2"}, 1.0, 1.0});
    m.interfaces.push_back({{"CACFAR2", "DSP4"}, 1.0, 1.0});
    m.interfaces.push_back({{"PDP2", "DSP4"}, 1.0, 1.0});
    m.precedence = {{"DAQ2", "FFT"}, {"FFT", "CACFAR2"}, {"CACFAR2", "PDP2"}};
    return m;
}

} // namespace

TEST_CASE("risk of a hypothesis is probability times impact while open") {
    FaultHypothesis h;
    CHECK(risk_of(h) == 1.0); // 1 risk unit per developed module

    h.probability = 0.3;
    h.impact = 2.0;
    CHECK(risk_of(h) == doctest::Approx(0.6));

    h.probability = 1.0;
    h.impact = 1.0;
    h.state = HypothesisState::cleared;
    CHECK(risk_of(h) == 0.0);
}

TEST_CASE("clearing is monotone on a set of hypotheses") {
    std::vector<FaultHypothesis> hyps(5);
    hyps[2].impact = 3.0;
    auto total = [&] {
        double sum = 0.0;
        for (const auto& h : hyps) sum += risk_of(h);
        return sum;
    };
    double before = total();
    for (auto& h : hyps) {
        h.state = HypothesisState::cleared;
        CHECK(total() <= before);
        CHECK(total() >= 0.0);
        before = total();
    }
    CHECK(total() == 0.0);
}

TEST_CASE("interface identity is an unordered pair") {
    InterfacePair ab{"A", "B"};
    InterfacePair ba{"B", "A"};
    CHECK(ab == ba);
    CHECK(ab.key() == ba.key());
    CHECK_FALSE(ab < ba);
    CHECK_FALSE(ba < ab);
}

TEST_CASE("the MDS model validates clean") {
    const auto report = validate_model(mds_model());
    CHECK(report.clean());
}

TEST_CASE("validate_model is pure") {
    const auto model = mds_model();
    const auto a = validate_model(model);
    const auto b = validate_model(model);
    REQUIRE(a.issues.size() == b.issues.size());
    for (std::size_t i = 0; i < a.issues.size(); ++i) {
        CHECK(a.issues[i].location == b.issues[i].location);
        CHECK(a.issues[i].message == b.issues[i].message);
    }
}

TEST_CASE("self-loop in precedence is a cycle violation") {
    auto model = mds_model();
    model.precedence.push_back({"FFT", "FFT"});
    const auto report = validate_model(model);
    REQUIRE(report.has_errors());
    bool found = false;
    for (const auto& issue : report.issues)
        if (issue.message.find("cycle") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("longer precedence cycles are caught too") {
    ProductModel model;
    model.modules = {{"A", "A", 1, 1}, {"B", "B", 1, 1}, {"C", "C", 1, 1}};
    model.precedence = {{"A", "B"}, {"B", "C"}, {"C", "A"}};
    CHECK(validate_model(model).has_errors());
}

TEST_CASE("interface to an undeclared id is flagged with its location") {
    auto model = mds_model();
    model.interfaces.push_back({{"DAQ2", "X"}, 1.0, 1.0});
    const auto report = validate_model(model);
    REQUIRE(report.has_errors());
    bool found = false;
    for (const auto& issue : report.issues)
        if (issue.message.find("'X'") != std::string::npos &&
            issue.location == "interface[4]")
            found = true;
    CHECK(found);
}

TEST_CASE("duplicate ids, bad probabilities, and duplicate interfaces are errors") {
    auto model = mds_model();
    model.modules.push_back({"DAQ2", "again", 1.0, 1.0});
    model.modules.push_back({"BAD", "bad", 0.0, -1.0});
    model.interfaces.push_back({{"DSP2", "DAQ2"}, 1.0, 1.0}); // flipped duplicate
    const auto report = validate_model(model);
    int errors = 0;
    for (const auto& issue : report.issues)
        if (issue.severity == Severity::error) ++errors;
    CHECK(errors >= 4); // dup id, p out of range, impact out of range, dup interface
}
