#pragma once

#include "subsum/interval_set.hpp"
#include "subsum/sequence.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace subsum {

/// Default bound on the number of distinct left endpoints in build_cn.
inline constexpr std::size_t kDefaultEndpointCap = std::size_t{1} << 22;

/// Inclusion word xi_1 ... xi_n: bit k says whether x_k is in the subsum.
struct WordPath {
    std::vector<bool> bits;
};

/// The depth-n approximation C_n = U [x_xi, x_xi + X_n] over words of length n.
struct CnResult {
    std::uint64_t depth = 0;
    std::vector<Rational> left_endpoints;  // sorted, distinct finite subsums
    IntervalUnion fattened;                // endpoints fattened by the upper tail bound
    std::optional<IntervalUnion> inner;    // fattened by the lower bound, when the tail is inexact
    TailEnclosure tail_used;

    /// [components of fattened, components of inner]; equal when exact.
    std::pair<std::size_t, std::size_t> component_range() const;
};

/// Distinct finite subsums of the first n terms via
/// L_0 = {0}, L_{k+1} = L_k U (L_k + x_{k+1}). Throws CapExceeded.
std::vector<Rational> subsum_endpoints(const SequenceSpec& spec, std::uint64_t n,
                                       std::size_t cap = kDefaultEndpointCap);

/// Requires a positive summable spec (DivergentTail otherwise).
CnResult build_cn(const SequenceSpec& spec, std::uint64_t n, std::size_t cap = kDefaultEndpointCap);

/// J_xi = [x_xi, x_xi + X_n] with the upper tail bound.
ClosedInterval word_interval(const SequenceSpec& spec, const WordPath& xi);

struct AffineMap {
    Rational scale;
    Rational offset;

    Rational operator()(const Rational& x) const { return scale * x + offset; }
    IntervalUnion operator()(const IntervalUnion& u) const { return affine_image(u, scale, offset); }
};

/// The four maps phi_00, phi_01, phi_10, phi_11 of a period-2 multigeometric
/// spec (in that order), all with scale (1-alpha)(1-beta). Throws WrongKind.
std::array<AffineMap, 4> ifs_maps(const SequenceSpec& spec);

/// True iff x_n > X_n. In that case also checks on the built C_{n-1}, C_n
/// that both end pieces of every component of C_{n-1} are components of C_n
/// (InvariantViolation if not). Throws IndeterminateComparison when the
/// enclosures cannot separate term and tail.
bool leftmost_gap_check(const SequenceSpec& spec, std::uint64_t n, std::size_t cap = kDefaultEndpointCap);

}  // namespace subsum
