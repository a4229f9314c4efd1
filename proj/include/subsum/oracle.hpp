#pragma once

#include "subsum/interval_set.hpp"
#include "subsum/sequence.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace subsum {

/// Largest truncation depth the brute-force oracle accepts (2^20 subsets).
inline constexpr std::uint64_t kOracleDepthLimit = 20;

struct SubsetSumTable {
    std::uint64_t n = 0;
    std::vector<Rational> sums;  // sorted, distinct
};

/// All subset sums of the first n signed terms, enumerated in Gray-code
/// order so each step adds or removes one term. Throws DepthLimit.
SubsetSumTable subset_sums(const SequenceSpec& spec, std::uint64_t n);

/// normalize of [s, s + X_n.hi] over all subset sums s.
IntervalUnion oracle_cn(const SequenceSpec& spec, std::uint64_t n);

struct ProbeResult {
    std::optional<std::uint64_t> excluded_at;  // empty means "in every tested C_n"

    bool included() const { return !excluded_at.has_value(); }
};

/// Tests x against C_0, ..., C_depth. Exclusion at some depth proves x is
/// not a subsum; inclusion at every depth is only evidence.
ProbeResult membership_probe(const SequenceSpec& spec, const Rational& x, std::uint64_t depth);

}  // namespace subsum
