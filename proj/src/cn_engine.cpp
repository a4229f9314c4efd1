#include "subsum/cn_engine.hpp"

#include "subsum/error.hpp"

#include <algorithm>
#include <iterator>

namespace subsum {

namespace {

void require_positive_summable(const SequenceSpec& spec) {
    if (spec.negated) throw Error(ErrorCode::InvalidSpec, "C_n is built for positive sequences");
    if (const auto* il = std::get_if<InterleaveTail>(&spec.tail)) {
        for (const auto& p : il->parts) require_positive_summable(p);
    }
}

IntervalUnion fatten(const std::vector<Rational>& endpoints, const Rational& width) {
    std::vector<ClosedInterval> raw;
    raw.reserve(endpoints.size());
    for (const auto& s : endpoints) raw.push_back({s, s + width});
    return normalize(std::move(raw));
}

}  // namespace

std::pair<std::size_t, std::size_t> CnResult::component_range() const {
    const std::size_t outer = fattened.components();
    return {outer, inner ? inner->components() : outer};
}

std::vector<Rational> subsum_endpoints(const SequenceSpec& spec, std::uint64_t n, std::size_t cap) {
    std::vector<Rational> level{Rational(0)};
    TermStream terms(spec);
    for (std::uint64_t k = 0; k < n; ++k) {
        auto x = terms.next();
        if (!x) break;
        std::vector<Rational> shifted;
        shifted.reserve(level.size());
        for (const auto& s : level) shifted.push_back(s + *x);
        std::vector<Rational> merged;
        merged.reserve(level.size() * 2);
        std::set_union(level.begin(), level.end(), shifted.begin(), shifted.end(), std::back_inserter(merged));
        if (merged.size() > cap) {
            throw Error(ErrorCode::CapExceeded, "C_" + std::to_string(k + 1) + " needs more than " +
                                                    std::to_string(cap) + " endpoints");
        }
        level = std::move(merged);
    }
    return level;
}

CnResult build_cn(const SequenceSpec& spec, std::uint64_t n, std::size_t cap) {
    require_positive_summable(spec);
    CnResult out;
    out.depth = n;
    out.tail_used = tail(spec, n);
    if (out.tail_used.divergent) throw Error(ErrorCode::DivergentTail, "C_n needs a summable sequence");
    out.left_endpoints = subsum_endpoints(spec, n, cap);
    out.fattened = fatten(out.left_endpoints, out.tail_used.hi);
    if (!out.tail_used.exact) out.inner = fatten(out.left_endpoints, out.tail_used.lo);
    return out;
}

ClosedInterval word_interval(const SequenceSpec& spec, const WordPath& xi) {
    require_positive_summable(spec);
    const std::uint64_t n = xi.bits.size();
    const TailEnclosure rest = tail(spec, n);
    if (rest.divergent) throw Error(ErrorCode::DivergentTail, "word intervals need a summable sequence");
    Rational left = 0;
    const auto terms = first_terms(spec, n);
    for (std::size_t k = 0; k < terms.size(); ++k) {
        if (xi.bits[k]) left += terms[k];
    }
    return {left, left + rest.hi};
}

std::array<AffineMap, 4> ifs_maps(const SequenceSpec& spec) {
    const auto* mg = std::get_if<MultigeometricTail>(&spec.tail);
    if (!mg || mg->ratios.size() != 2 || !spec.prefix.empty() || spec.negated) {
        throw Error(ErrorCode::WrongKind, "IFS maps need a bi-geometric (period-2 multigeometric) spec");
    }
    const Rational& alpha = mg->ratios[0];
    const Rational& beta = mg->ratios[1];
    const Rational& x0 = mg->total;
    const Rational lambda = (1 - alpha) * (1 - beta);
    return {AffineMap{lambda, 0}, AffineMap{lambda, beta * (1 - alpha) * x0}, AffineMap{lambda, alpha * x0},
            AffineMap{lambda, (alpha + (1 - alpha) * beta) * x0}};
}

bool leftmost_gap_check(const SequenceSpec& spec, std::uint64_t n, std::size_t cap) {
    if (n == 0) throw Error(ErrorCode::InvalidSpec, "stage index starts at 1");
    if (!is_nonincreasing(spec)) throw Error(ErrorCode::InvalidSpec, "gap check needs a non-increasing sequence");
    const Comparison cmp = compare_term_tail(spec, n);
    if (cmp == Comparison::Indeterminate) {
        throw Error(ErrorCode::IndeterminateComparison, "cannot separate x_" + std::to_string(n) + " from X_" +
                                                            std::to_string(n));
    }
    if (cmp == Comparison::TailBoundsTerm) return false;

    const CnResult coarse = build_cn(spec, n - 1, cap);
    const CnResult fine = build_cn(spec, n, cap);
    if (!coarse.tail_used.exact || !fine.tail_used.exact) return true;  // components are not exactly known
    const Rational& width = fine.tail_used.lo;
    for (const auto& comp : coarse.fattened.intervals()) {
        const ClosedInterval left_piece{comp.left, comp.left + width};
        const ClosedInterval right_piece{comp.right - width, comp.right};
        const auto& pieces = fine.fattened.intervals();
        const bool ok = left_piece.right < right_piece.left &&
                        std::find(pieces.begin(), pieces.end(), left_piece) != pieces.end() &&
                        std::find(pieces.begin(), pieces.end(), right_piece) != pieces.end();
        if (!ok) {
            throw Error(ErrorCode::InvariantViolation, "end pieces of [" + to_string(comp.left) + ", " +
                                                           to_string(comp.right) + "] are not components of C_" +
                                                           std::to_string(n));
        }
    }
    return true;
}

}  // namespace subsum
