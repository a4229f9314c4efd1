#pragma once

#include "subsum/rational.hpp"
#include "subsum/sequence.hpp"

#include <random>
#include <vector>

namespace testing {

inline subsum::Rational R(const char* s) { return subsum::parse_rational(s); }

// Random rational num/den with 1 <= num < den <= max_den, i.e. in (0, 1).
inline subsum::Rational unit_rational(std::mt19937& rng, int max_den = 12) {
    std::uniform_int_distribution<int> den_dist(2, max_den);
    const int den = den_dist(rng);
    std::uniform_int_distribution<int> num_dist(1, den - 1);
    return subsum::fraction(num_dist(rng), den);
}

inline subsum::Rational positive_rational(std::mt19937& rng, int max_num = 9, int max_den = 9) {
    std::uniform_int_distribution<int> num_dist(1, max_num);
    std::uniform_int_distribution<int> den_dist(1, max_den);
    return subsum::fraction(num_dist(rng), den_dist(rng));
}

// Random positive prefix (length <= max_prefix) followed by a random geometric tail.
inline subsum::SequenceSpec random_prefixed_geometric(std::mt19937& rng, int max_prefix = 6) {
    std::uniform_int_distribution<int> len_dist(0, max_prefix);
    std::vector<subsum::Rational> prefix;
    const int len = len_dist(rng);
    for (int i = 0; i < len; ++i) prefix.push_back(positive_rational(rng));
    return subsum::with_prefix(prefix, subsum::geometric(positive_rational(rng), unit_rational(rng)));
}

inline subsum::SequenceSpec random_multigeometric(std::mt19937& rng, int max_period = 3) {
    std::uniform_int_distribution<int> m_dist(1, max_period);
    std::vector<subsum::Rational> ratios;
    const int m = m_dist(rng);
    for (int i = 0; i < m; ++i) ratios.push_back(unit_rational(rng, 10));
    return subsum::multigeometric(ratios, positive_rational(rng, 4, 3));
}

// A mix of every exactly summable kind.
inline subsum::SequenceSpec random_exact_spec(std::mt19937& rng) {
    std::uniform_int_distribution<int> kind(0, 3);
    switch (kind(rng)) {
        case 0: return random_prefixed_geometric(rng);
        case 1: return random_multigeometric(rng);
        case 2: {
            std::vector<subsum::Rational> terms;
            std::uniform_int_distribution<int> len(1, 8);
            const int n = len(rng);
            for (int i = 0; i < n; ++i) terms.push_back(positive_rational(rng));
            return subsum::finite_sequence(terms);
        }
        default:
            return subsum::interleave({random_prefixed_geometric(rng, 2), random_multigeometric(rng, 2)});
    }
}

}  // namespace testing
