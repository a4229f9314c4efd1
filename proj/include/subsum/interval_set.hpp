#pragma once

#include "subsum/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace subsum {

/// Closed interval [left, right]; left == right is a point.
struct ClosedInterval {
    Rational left;
    Rational right;

    Rational length() const { return right - left; }
    friend bool operator==(const ClosedInterval&, const ClosedInterval&) = default;
};

/// Finite union of closed rational intervals in canonical form: sorted,
/// pairwise separated by genuine gaps (abutting intervals are merged).
class IntervalUnion {
   public:
    IntervalUnion() = default;

    const std::vector<ClosedInterval>& intervals() const { return intervals_; }
    std::size_t components() const { return intervals_.size(); }
    bool empty() const { return intervals_.empty(); }

    friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;

   private:
    friend IntervalUnion normalize(std::vector<ClosedInterval> raw, std::optional<std::size_t> cap);
    std::vector<ClosedInterval> intervals_;
};

/// Minimal sorted disjoint cover of the same point set. Throws CapExceeded
/// when the result has more than `cap` components and InvalidSpec when an
/// input interval has left > right.
IntervalUnion normalize(std::vector<ClosedInterval> raw, std::optional<std::size_t> cap = std::nullopt);

IntervalUnion translate(const IntervalUnion& u, const Rational& t);
/// Image under x -> x0 - x.
IntervalUnion reflect(const IntervalUnion& u, const Rational& x0);
/// Image under x -> scale * x + offset, scale > 0.
IntervalUnion affine_image(const IntervalUnion& u, const Rational& scale, const Rational& offset);

IntervalUnion unite(const IntervalUnion& a, const IntervalUnion& b, std::optional<std::size_t> cap = std::nullopt);
Rational total_length(const IntervalUnion& u);
/// Throws EmptyUnion.
ClosedInterval hull(const IntervalUnion& u);
bool contains(const IntervalUnion& u, const Rational& x);
bool is_subset(const IntervalUnion& a, const IntervalUnion& b);

/// Canonical text: one "left right" line per interval.
std::string to_text(const IntervalUnion& u);
/// Inverse of to_text; blank lines and lines starting with '#' are ignored.
IntervalUnion parse_interval_text(const std::string& text);

std::ostream& operator<<(std::ostream& os, const IntervalUnion& u);

}  // namespace subsum
