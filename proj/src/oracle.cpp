#include "subsum/oracle.hpp"

#include "subsum/error.hpp"

#include <algorithm>
#include <bit>

namespace subsum {

namespace {

void check_depth(std::uint64_t n) {
    if (n > kOracleDepthLimit) {
        throw Error(ErrorCode::DepthLimit,
                    "oracle depth " + std::to_string(n) + " exceeds " + std::to_string(kOracleDepthLimit));
    }
}

}  // namespace

SubsetSumTable subset_sums(const SequenceSpec& spec, std::uint64_t n) {
    check_depth(n);
    const std::vector<Rational> terms = first_terms(spec, n);
    const std::uint64_t k = terms.size();
    const std::uint64_t count = std::uint64_t{1} << k;

    std::vector<Rational> sums;
    sums.reserve(count);
    Rational current = 0;
    std::uint64_t gray = 0;
    sums.push_back(current);
    for (std::uint64_t step = 1; step < count; ++step) {
        // The bit flipped between consecutive Gray codes is the lowest set bit of step.
        const auto bit = static_cast<unsigned>(std::countr_zero(step));
        gray ^= std::uint64_t{1} << bit;
        if (gray & (std::uint64_t{1} << bit)) {
            current += terms[bit];
        } else {
            current -= terms[bit];
        }
        sums.push_back(current);
    }
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
    return {n, std::move(sums)};
}

IntervalUnion oracle_cn(const SequenceSpec& spec, std::uint64_t n) {
    check_depth(n);
    const TailEnclosure rest = tail(spec, n);
    if (rest.divergent) throw Error(ErrorCode::DivergentTail, "oracle C_n needs a summable sequence");
    const SubsetSumTable table = subset_sums(spec, n);
    std::vector<ClosedInterval> raw;
    raw.reserve(table.sums.size());
    for (const auto& s : table.sums) raw.push_back({s, s + rest.hi});
    return normalize(std::move(raw));
}

ProbeResult membership_probe(const SequenceSpec& spec, const Rational& x, std::uint64_t depth) {
    check_depth(depth);
    for (std::uint64_t d = 0; d <= depth; ++d) {
        if (!contains(oracle_cn(spec, d), x)) return {d};
    }
    return {};
}

}  // namespace subsum
