#include "doctest.h"
#include "support.hpp"
#include "subsum/cn_engine.hpp"
#include "subsum/error.hpp"
#include "subsum/oracle.hpp"

#include <algorithm>

using namespace subsum;
using testing::R;

namespace {

SequenceSpec thirds() { return geometric(R("1/3"), R("1/3")); }
SequenceSpec gn() { return multigeometric({R("9/20"), R("6/11")}, R("5/3")); }

std::vector<Rational> Rs(std::initializer_list<const char*> xs) {
    std::vector<Rational> out;
    for (const char* x : xs) out.push_back(R(x));
    return out;
}

}  // namespace

TEST_CASE("subset_sums examples") {
    CHECK(subset_sums(thirds(), 2).sums == Rs({"0", "1/9", "1/3", "4/9"}));
    CHECK(subset_sums(geometric(R("1/2"), R("1/2")), 2).sums == Rs({"0", "1/4", "1/2", "3/4"}));
    CHECK(subset_sums(gn(), 2).sums == Rs({"0", "1/2", "3/4", "5/4"}));
    CHECK(subset_sums(finite_sequence({R("1"), R("1")}), 5).sums == Rs({"0", "1", "2"}));
}

TEST_CASE("subset_sums enforces the depth limit") {
    try {
        subset_sums(thirds(), kOracleDepthLimit + 1);
        FAIL("depth limit ignored");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DepthLimit);
    }
    CHECK(subset_sums(thirds(), kOracleDepthLimit).sums.size() == (std::size_t{1} << kOracleDepthLimit));
}

TEST_CASE("oracle_cn examples") {
    const std::vector<ClosedInterval> c2{{R("0"), R("1/18")}, {R("1/9"), R("1/6")}, {R("1/3"), R("7/18")}, {R("4/9"), R("1/2")}};
    CHECK(oracle_cn(thirds(), 2).intervals() == c2);
    CHECK(oracle_cn(geometric(R("1/2"), R("1/2")), 8).intervals() == std::vector<ClosedInterval>{{R("0"), R("1")}});
    CHECK(oracle_cn(bigeometric(R("2/5"), R("3/5")), 6).components() == 23);
}

TEST_CASE("membership_probe examples") {
    const auto quarter = membership_probe(thirds(), R("1/4"), 8);
    REQUIRE_FALSE(quarter.included());
    CHECK(*quarter.excluded_at <= 2);
    CHECK(membership_probe(thirds(), R("1/3"), 10).included());
    CHECK(membership_probe(gn(), R("7/8"), 14).included());
    CHECK_THROWS_AS(membership_probe(thirds(), R("1/3"), 21), Error);
}

TEST_CASE("property: oracle and engine agree exactly on random specs") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        const auto spec = testing::random_exact_spec(rng);
        for (std::uint64_t n = 0; n <= 12; n += 3) CHECK(oracle_cn(spec, n) == build_cn(spec, n).fattened);
    }
}

TEST_CASE("property: subset sums are closed under s -> partial sum - s") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        const auto spec = testing::random_exact_spec(rng);
        const std::uint64_t n = 10;
        const auto table = subset_sums(spec, n);
        Rational partial = 0;
        for (const auto& x : first_terms(spec, n)) partial += x;
        CHECK(table.sums.front() == 0);
        CHECK(table.sums.back() == partial);
        for (const auto& s : table.sums) CHECK(std::binary_search(table.sums.begin(), table.sums.end(), partial - s));
    }
}

TEST_CASE("property: signed truncations are translated absolute truncations") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 30; ++trial) {
        // Random signs on a random finite multiset.
        std::vector<Rational> pos;
        std::vector<Rational> neg;
        std::vector<Rational> all;
        for (int i = 0; i < 10; ++i) {
            const Rational x = testing::positive_rational(rng);
            all.push_back(x);
            (rng() % 2 ? pos : neg).push_back(x);
        }
        std::vector<SequenceSpec> parts;
        if (!pos.empty()) parts.push_back(finite_sequence(pos));
        if (!neg.empty()) parts.push_back(negate(finite_sequence(neg)));
        const auto signed_spec = as_sequence(MergedSpec{parts});
        Rational neg_sum = 0;
        for (const auto& x : neg) neg_sum -= x;
        auto expect = subset_sums(finite_sequence(all), 10).sums;
        for (auto& s : expect) s += neg_sum;
        CHECK(subset_sums(signed_spec, 10).sums == expect);
    }
}
