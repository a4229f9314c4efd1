#include "doctest.h"
#include "support.hpp"
#include "subsum/error.hpp"
#include "subsum/greedy_filler.hpp"

using namespace subsum;
using testing::R;

namespace {

void check_invariants(const SequenceSpec& spec, const FillResult& f) {
    REQUIRE(f.runs.size() == f.gaps.size());
    Rational packed = 0;
    Rational previous_gap = f.target;
    std::uint64_t previous_end = 0;
    for (std::size_t k = 0; k < f.runs.size(); ++k) {
        const auto& run = f.runs[k];
        CHECK(run.start > previous_end);
        CHECK(run.start <= run.end);
        for (std::uint64_t i = run.start; i <= run.end; ++i) packed += term(spec, i);
        CHECK(f.gaps[k] * 2 <= previous_gap);
        CHECK(f.gaps[k] >= 0);
        CHECK(f.gaps[k] < term(spec, run.end + 1));
        previous_gap = f.gaps[k];
        previous_end = run.end;
    }
    CHECK(packed == f.achieved);
    if (!f.gaps.empty()) CHECK(f.achieved + f.gaps.back() == f.target);
}

}  // namespace

TEST_CASE("fill examples on the harmonic sequence") {
    const auto five_sixths = fill(harmonic(), R("5/6"), R("1/1000000"));
    REQUIRE(five_sixths.runs.size() == 1);
    CHECK(five_sixths.runs[0] == FillRun{2, 3});
    CHECK(five_sixths.gaps == std::vector<Rational>{0});
    CHECK(five_sixths.achieved == R("5/6"));

    const auto half = fill(harmonic(), R("1/2"), R("1/1000000"));
    CHECK(half.runs == std::vector<FillRun>{{2, 2}});
    CHECK(half.gaps.back() == 0);

    const auto one = fill(harmonic(), R("1"), R("1/1000000"));
    check_invariants(harmonic(), one);
    CHECK(one.achieved + one.gaps.back() == 1);
    CHECK(one.gaps.back() < R("1/1000000"));
}

TEST_CASE("fill reaches eps and keeps its invariants for many targets") {
    const std::vector<SequenceSpec> specs{harmonic(), pseries(1, 5, R("3/2")), with_prefix({R("2"), R("2")}, harmonic()),
                                          pseries(1, 2, R("1/2"))};
    // Targets stay in (0, 3]: the run length grows like exp(r / scale).
    std::mt19937 rng(61);
    for (const auto& spec : specs) {
        for (int trial = 0; trial < 25; ++trial) {
            const Rational r = fraction(1 + static_cast<int>(rng() % 12), 4);
            const Rational eps = R("1/1000000000");
            const auto f = fill(spec, r, eps);
            CAPTURE(r);
            check_invariants(spec, f);
            CHECK_FALSE(f.round_limit_hit);
            CHECK(f.gaps.back() < eps);
        }
    }
}

TEST_CASE("fill flags the round limit but still returns its progress") {
    // The run for 1/6 within 3/2 * 1/k needs more than one round.
    const auto spec = pseries(1, 5, R("3/2"));
    const auto f = fill(spec, R("7/3"), R("1/1000000000000"), 1);
    CHECK(f.round_limit_hit);
    CHECK(f.runs.size() == 1);
    check_invariants(spec, f);
}

TEST_CASE("fill errors") {
    auto code_of = [](auto&& f) {
        try {
            f();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::InvariantViolation;
    };
    CHECK(code_of([] { fill(geometric(R("1"), R("1/2")), R("1"), R("1/10")); }) == ErrorCode::NotDivergent);
    CHECK(code_of([] { fill(harmonic(), R("0"), R("1/10")); }) == ErrorCode::InvalidSpec);
    CHECK(code_of([] { fill(harmonic(), R("1"), R("0")); }) == ErrorCode::InvalidSpec);
    CHECK(code_of([] { fill(with_prefix({R("1/10")}, harmonic()), R("1"), R("1/10")); }) == ErrorCode::InvalidSpec);
}
