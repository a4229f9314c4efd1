#pragma once

#include "subsum/sequence.hpp"

#include <cstdint>
#include <vector>

namespace subsum {

/// Consecutive included indices start..end (1-based, inclusive).
struct FillRun {
    std::uint64_t start;
    std::uint64_t end;
    friend bool operator==(const FillRun&, const FillRun&) = default;
};

struct FillResult {
    std::vector<FillRun> runs;
    std::vector<Rational> gaps;  // exact residual after each round
    Rational achieved = 0;
    Rational target = 0;
    bool round_limit_hit = false;
};

/// Picks a subsequence of a positive, non-increasing, divergent sequence
/// whose sum approaches r. Each round packs a run of consecutive terms into
/// the current gap g, starting at the first unused term that is <= g; if the
/// residual would stay above g/2 the round restarts at the first term <= g/2,
/// so every round at least halves the gap. Stops when the gap is below eps
/// or after max_rounds (round_limit_hit is then set).
/// Throws NotDivergent for summable input and InvalidSpec for bad arguments.
FillResult fill(const SequenceSpec& spec, const Rational& r, const Rational& eps, std::uint64_t max_rounds = 256);

}  // namespace subsum
