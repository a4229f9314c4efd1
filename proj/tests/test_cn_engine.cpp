#include "doctest.h"
#include "support.hpp"
#include "subsum/cn_engine.hpp"
#include "subsum/error.hpp"

using namespace subsum;
using testing::R;

namespace {

SequenceSpec thirds() { return geometric(R("1/3"), R("1/3")); }
SequenceSpec halves() { return geometric(R("1/2"), R("1/2")); }
SequenceSpec gn() { return multigeometric({R("9/20"), R("6/11")}, R("5/3")); }

IntervalUnion U(std::initializer_list<std::pair<const char*, const char*>> items) {
    std::vector<ClosedInterval> raw;
    for (const auto& [l, r] : items) raw.push_back({R(l), R(r)});
    return normalize(raw);
}

}  // namespace

TEST_CASE("build_cn examples") {
    CHECK(build_cn(thirds(), 2).fattened == U({{"0", "1/18"}, {"1/9", "1/6"}, {"1/3", "7/18"}, {"4/9", "1/2"}}));
    CHECK(build_cn(thirds(), 1).fattened == U({{"0", "1/6"}, {"1/3", "1/2"}}));
    for (std::uint64_t n = 0; n <= 14; ++n) CHECK(build_cn(halves(), n).fattened == U({{"0", "1"}}));
    CHECK(build_cn(bigeometric(R("2/5"), R("3/5")), 6).fattened.components() == 23);
}

TEST_CASE("build_cn carries sorted distinct endpoints") {
    const auto cn = build_cn(thirds(), 2);
    const std::vector<Rational> expect{R("0"), R("1/9"), R("1/3"), R("4/9")};
    CHECK(cn.left_endpoints == expect);
    CHECK(cn.tail_used == TailEnclosure::exact_value(R("1/18")));
    CHECK_FALSE(cn.inner.has_value());
    // Equal endpoints collapse.
    CHECK(build_cn(finite_sequence({R("1"), R("1"), R("1")}), 3).left_endpoints.size() == 4);
}

TEST_CASE("inexact tails bracket C_n between inner and outer unions") {
    const auto cn = build_cn(pseries(2), 3);
    REQUIRE(cn.inner.has_value());
    CHECK(is_subset(*cn.inner, cn.fattened));
    const auto [outer, inner] = cn.component_range();
    CHECK(outer <= inner);
}

TEST_CASE("build_cn errors") {
    try {
        build_cn(harmonic(), 3);
        FAIL("harmonic accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DivergentTail);
    }
    try {
        build_cn(thirds(), 10, 100);
        FAIL("cap ignored");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::CapExceeded);
    }
    CHECK_THROWS_AS(build_cn(negate(thirds()), 2), Error);
}

TEST_CASE("word_interval examples") {
    CHECK(word_interval(thirds(), {{true}}) == ClosedInterval{R("1/3"), R("1/2")});
    CHECK(word_interval(thirds(), {}) == ClosedInterval{R("0"), R("1/2")});
    CHECK(word_interval(gn(), {}) == ClosedInterval{R("0"), R("5/3")});
    CHECK(word_interval(thirds(), {{false, true}}) == ClosedInterval{R("1/9"), R("1/6")});
    CHECK(word_interval(thirds(), {{true, true}}) == ClosedInterval{R("4/9"), R("1/2")});
}

TEST_CASE("ifs_maps examples") {
    const auto maps = ifs_maps(bigeometric(R("2/5"), R("3/5")));
    for (const auto& m : maps) CHECK(m.scale == R("6/25"));
    // Offsets from 0, beta(1-alpha), alpha, alpha + (1-alpha) beta.
    const Rational a = R("2/5");
    const Rational b = R("3/5");
    CHECK(maps[0].offset == 0);
    CHECK(maps[1].offset == b * (1 - a));
    CHECK(maps[2].offset == a);
    CHECK(maps[3].offset == a + (1 - a) * b);
    CHECK(maps[1].offset == R("9/25"));
    CHECK(maps[3].offset == R("19/25"));
    CHECK(ifs_maps(bigeometric(R("9/20"), R("6/11")))[0].scale == R("1/4"));
    try {
        ifs_maps(thirds());
        FAIL("geometric accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::WrongKind);
    }
}

TEST_CASE("leftmost_gap_check examples") {
    for (std::uint64_t n = 1; n <= 8; ++n) {
        CHECK(leftmost_gap_check(thirds(), n));
        CHECK_FALSE(leftmost_gap_check(halves(), n));
    }
    CHECK(leftmost_gap_check(gn(), 2));
    CHECK_FALSE(leftmost_gap_check(gn(), 1));
    CHECK(leftmost_gap_check(pseries(2), 1));
    CHECK_FALSE(leftmost_gap_check(pseries(2), 2));
    CHECK_THROWS_AS(leftmost_gap_check(multigeometric({R("9/14"), R("3/10")}, R("7/3")), 1), Error);
}

TEST_CASE("property: C_n are nested, symmetric, and keep their endpoints") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const auto spec = testing::random_exact_spec(rng);
        const Rational x0 = tail(spec, 0).lo;
        std::vector<CnResult> levels;
        for (std::uint64_t n = 0; n <= 9; ++n) levels.push_back(build_cn(spec, n));
        for (std::uint64_t n = 0; n <= 9; ++n) {
            const auto& cn = levels[n];
            CHECK(hull(cn.fattened) == ClosedInterval{0, x0});
            CHECK(reflect(cn.fattened, x0) == cn.fattened);
            if (n > 0) CHECK(is_subset(cn.fattened, levels[n - 1].fattened));
            for (std::uint64_t m = n; m <= 9; ++m) {
                for (const auto& s : cn.left_endpoints) {
                    CHECK(contains(levels[m].fattened, s));
                    CHECK(contains(levels[m].fattened, s + cn.tail_used.lo));
                }
            }
        }
    }
}

TEST_CASE("property: IFS maps generate C_{2k+2} from C_{2k}") {
    std::mt19937 rng(32);
    for (int trial = 0; trial < 25; ++trial) {
        const Rational alpha = testing::unit_rational(rng, 9);
        const Rational beta = testing::unit_rational(rng, 9);
        const Rational x0 = testing::positive_rational(rng, 3, 2);
        const auto spec = bigeometric(alpha, beta, x0);
        const auto maps = ifs_maps(spec);
        for (std::uint64_t k = 0; k <= 4; ++k) {
            const auto base = build_cn(spec, 2 * k).fattened;
            IntervalUnion image;
            for (const auto& m : maps) image = unite(image, m(base));
            CHECK(image == build_cn(spec, 2 * k + 2).fattened);
        }
    }
}

TEST_CASE("property: when every term exceeds its tail C_n has 2^n components") {
    std::mt19937 rng(33);
    for (int trial = 0; trial < 20; ++trial) {
        // rho < 1/2 makes x_n > X_n for every n.
        Rational rho = testing::unit_rational(rng, 12);
        if (rho >= R("1/2")) rho = 1 - rho;
        if (rho == R("1/2")) continue;
        const auto spec = geometric(testing::positive_rational(rng), rho);
        for (std::uint64_t n = 0; n <= 12; ++n) CHECK(build_cn(spec, n).fattened.components() == (std::size_t{1} << n));
    }
}

TEST_CASE("property: leftmost_gap_check agrees with the exact comparison on random geometric specs") {
    std::mt19937 rng(34);
    for (int trial = 0; trial < 30; ++trial) {
        const auto spec = geometric(testing::positive_rational(rng), testing::unit_rational(rng));
        for (std::uint64_t n = 1; n <= 8; ++n) CHECK(leftmost_gap_check(spec, n) == (term(spec, n) > tail(spec, n).lo));
    }
}
