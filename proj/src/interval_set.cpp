#include "subsum/interval_set.hpp"

#include "subsum/error.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace subsum {

IntervalUnion normalize(std::vector<ClosedInterval> raw, std::optional<std::size_t> cap) {
    for (const auto& iv : raw) {
        if (iv.left > iv.right) {
            throw Error(ErrorCode::InvalidSpec, "interval with left > right: [" + to_string(iv.left) + ", " +
                                                    to_string(iv.right) + "]");
        }
    }
    std::sort(raw.begin(), raw.end(), [](const ClosedInterval& a, const ClosedInterval& b) {
        return a.left < b.left || (a.left == b.left && a.right < b.right);
    });
    IntervalUnion out;
    auto& merged = out.intervals_;
    for (auto& iv : raw) {
        if (!merged.empty() && iv.left <= merged.back().right) {
            if (iv.right > merged.back().right) merged.back().right = std::move(iv.right);
            continue;
        }
        if (cap && merged.size() >= *cap) {
            throw Error(ErrorCode::CapExceeded, "interval union exceeds " + std::to_string(*cap) + " components");
        }
        merged.push_back(std::move(iv));
    }
    return out;
}

IntervalUnion translate(const IntervalUnion& u, const Rational& t) { return affine_image(u, 1, t); }

IntervalUnion reflect(const IntervalUnion& u, const Rational& x0) {
    std::vector<ClosedInterval> raw;
    raw.reserve(u.components());
    for (const auto& iv : u.intervals()) raw.push_back({x0 - iv.right, x0 - iv.left});
    return normalize(std::move(raw));
}

IntervalUnion affine_image(const IntervalUnion& u, const Rational& scale, const Rational& offset) {
    if (scale <= 0) throw Error(ErrorCode::InvalidSpec, "affine scale must be positive");
    std::vector<ClosedInterval> raw;
    raw.reserve(u.components());
    for (const auto& iv : u.intervals()) raw.push_back({scale * iv.left + offset, scale * iv.right + offset});
    return normalize(std::move(raw));
}

IntervalUnion unite(const IntervalUnion& a, const IntervalUnion& b, std::optional<std::size_t> cap) {
    std::vector<ClosedInterval> raw = a.intervals();
    raw.insert(raw.end(), b.intervals().begin(), b.intervals().end());
    return normalize(std::move(raw), cap);
}

Rational total_length(const IntervalUnion& u) {
    Rational sum = 0;
    for (const auto& iv : u.intervals()) sum += iv.length();
    return sum;
}

ClosedInterval hull(const IntervalUnion& u) {
    if (u.empty()) throw Error(ErrorCode::EmptyUnion, "hull of an empty union");
    return {u.intervals().front().left, u.intervals().back().right};
}

bool contains(const IntervalUnion& u, const Rational& x) {
    const auto& ivs = u.intervals();
    // first interval whose right end is >= x
    auto it = std::lower_bound(ivs.begin(), ivs.end(), x,
                               [](const ClosedInterval& iv, const Rational& v) { return iv.right < v; });
    return it != ivs.end() && it->left <= x;
}

bool is_subset(const IntervalUnion& a, const IntervalUnion& b) {
    const auto& outer = b.intervals();
    std::size_t j = 0;
    for (const auto& iv : a.intervals()) {
        while (j < outer.size() && outer[j].right < iv.left) ++j;
        if (j == outer.size() || outer[j].left > iv.left || outer[j].right < iv.right) return false;
    }
    return true;
}

std::string to_text(const IntervalUnion& u) {
    std::string out;
    for (const auto& iv : u.intervals()) {
        out += to_string(iv.left);
        out += ' ';
        out += to_string(iv.right);
        out += '\n';
    }
    return out;
}

IntervalUnion parse_interval_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<ClosedInterval> raw;
    while (std::getline(in, line)) {
        if (line.empty() || line.front() == '#') continue;
        std::istringstream fields(line);
        std::string left;
        std::string right;
        std::string extra;
        if (!(fields >> left >> right) || (fields >> extra)) {
            throw Error(ErrorCode::ParseError, "expected 'left right', got '" + line + "'");
        }
        raw.push_back({parse_rational(left), parse_rational(right)});
    }
    return normalize(std::move(raw));
}

std::ostream& operator<<(std::ostream& os, const IntervalUnion& u) {
    os << '{';
    bool first = true;
    for (const auto& iv : u.intervals()) {
        if (!first) os << ", ";
        first = false;
        os << '[' << to_string(iv.left) << ", " << to_string(iv.right) << ']';
    }
    return os << '}';
}

}  // namespace subsum
