#include "subsum/greedy_filler.hpp"

#include "subsum/error.hpp"

namespace subsum {

namespace {

// Smallest index i >= from with x_i <= bound, by galloping then bisection.
// Relies on the sequence being non-increasing and tending to zero.
std::uint64_t first_at_most(const SequenceSpec& spec, std::uint64_t from, const Rational& bound) {
    if (term(spec, from) <= bound) return from;
    std::uint64_t lo = from;  // x_lo > bound
    std::uint64_t step = 1;
    std::uint64_t hi = from + step;
    while (term(spec, hi) > bound) {
        lo = hi;
        step *= 2;
        hi = from + step;
    }
    while (hi - lo > 1) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        (term(spec, mid) > bound ? lo : hi) = mid;
    }
    return hi;
}

struct Round {
    FillRun run;
    Rational packed;
};

Round pack(const SequenceSpec& spec, std::uint64_t start, const Rational& gap) {
    Round out{{start, start - 1}, 0};
    std::uint64_t i = start;
    while (true) {
        Rational x = term(spec, i);
        if (out.packed + x > gap) break;
        out.packed += x;
        out.run.end = i;
        ++i;
    }
    return out;
}

}  // namespace

FillResult fill(const SequenceSpec& spec, const Rational& r, const Rational& eps, std::uint64_t max_rounds) {
    if (r <= 0) throw Error(ErrorCode::InvalidSpec, "target must be positive");
    if (eps <= 0) throw Error(ErrorCode::InvalidSpec, "eps must be positive");
    if (spec.negated) throw Error(ErrorCode::InvalidSpec, "fill needs a positive sequence");
    validate(spec);
    if (!tail(spec, 0).divergent) throw Error(ErrorCode::NotDivergent, "the sequence is summable");
    if (!is_nonincreasing(spec)) throw Error(ErrorCode::InvalidSpec, "fill needs a non-increasing sequence");

    FillResult result;
    result.target = r;
    Rational gap = r;
    std::uint64_t next = 1;
    while (gap >= eps && gap > 0) {
        if (result.runs.size() >= max_rounds) {
            result.round_limit_hit = true;
            break;
        }
        Round round = pack(spec, first_at_most(spec, next, gap), gap);
        if ((gap - round.packed) * 2 > gap) {
            round = pack(spec, first_at_most(spec, next, gap / 2), gap);
        }
        gap -= round.packed;
        result.achieved += round.packed;
        result.runs.push_back(round.run);
        result.gaps.push_back(gap);
        next = round.run.end + 1;
    }
    return result;
}

}  // namespace subsum
