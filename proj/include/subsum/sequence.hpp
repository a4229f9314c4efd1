#pragma once

#include "subsum/rational.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

namespace subsum {

struct SequenceSpec;

/// No generated terms: the sequence is exactly its prefix.
struct FiniteTail {
    friend bool operator==(const FiniteTail&, const FiniteTail&) = default;
};

/// a, a*rho, a*rho^2, ...
struct GeometricTail {
    Rational a;
    Rational rho;
    friend bool operator==(const GeometricTail&, const GeometricTail&) = default;
};

/// scale/k^p for k = start, start+1, ...  p == 1 is the (divergent) harmonic case.
struct PSeriesTail {
    std::uint32_t p = 2;
    std::uint64_t start = 1;
    Rational scale = 1;
    friend bool operator==(const PSeriesTail&, const PSeriesTail&) = default;
};

/// Terms driven by a periodic ratio sequence: with X_0 = total,
/// x_{i+1} = rho_{i mod m} * X_i and X_{i+1} = (1 - rho_{i mod m}) * X_i.
struct MultigeometricTail {
    std::vector<Rational> ratios;
    Rational total = 1;
    friend bool operator==(const MultigeometricTail&, const MultigeometricTail&) = default;
};

/// One geometric strand head, head*ratio, head*ratio^2, ...
struct Strand {
    Rational head;
    Rational ratio;
    friend bool operator==(const Strand&, const Strand&) = default;
};

/// Non-increasing merge of a finite multiset and geometric strands. This is
/// the form produced by nonincreasing_reorder.
struct SortedMergeTail {
    std::vector<Rational> finite;  // sorted non-increasing
    std::vector<Strand> strands;
    friend bool operator==(const SortedMergeTail&, const SortedMergeTail&) = default;
};

/// Round-robin interleaving of several specs; exhausted finite parts are skipped.
struct InterleaveTail {
    std::vector<SequenceSpec> parts;
    friend bool operator==(const InterleaveTail& a, const InterleaveTail& b);
};

using TailKind =
    std::variant<FiniteTail, GeometricTail, PSeriesTail, MultigeometricTail, SortedMergeTail, InterleaveTail>;

/// Symbolic null sequence: explicit positive prefix followed by a generated
/// tail. `negated` flips the sign of every term.
struct SequenceSpec {
    std::vector<Rational> prefix;
    TailKind tail = FiniteTail{};
    bool negated = false;

    friend bool operator==(const SequenceSpec& a, const SequenceSpec& b);
};

/// Several constant-sign specs whose terms are interleaved into one sequence.
struct MergedSpec {
    std::vector<SequenceSpec> parts;
};

// Constructors. All of them validate and throw Error(InvalidSpec) or
// Error(UnsupportedExponent) on out-of-range parameters.
SequenceSpec finite_sequence(std::vector<Rational> terms);
SequenceSpec geometric(Rational a, Rational rho);
SequenceSpec pseries(std::uint32_t p, std::uint64_t start = 1, Rational scale = 1);
SequenceSpec harmonic();
SequenceSpec multigeometric(std::vector<Rational> ratios, Rational total = 1);
SequenceSpec bigeometric(const Rational& alpha, const Rational& beta, Rational total = 1);
SequenceSpec with_prefix(std::vector<Rational> prefix, SequenceSpec spec);
SequenceSpec negate(SequenceSpec spec);
SequenceSpec interleave(std::vector<SequenceSpec> parts);

void validate(const SequenceSpec& spec);

/// Positive-part-first round-robin view of a merged spec as a single sequence.
SequenceSpec as_sequence(const MergedSpec& merged);
MergedSpec as_merged(const SequenceSpec& spec);

std::optional<std::uint64_t> finite_length(const SequenceSpec& spec);
bool is_empty(const SequenceSpec& spec);

/// Exact i-th term (1-based) including sign. Throws IndexBeyondFinite.
Rational term(const SequenceSpec& spec, std::uint64_t i);

/// First n terms (fewer if the sequence is finite and shorter), signed.
std::vector<Rational> first_terms(const SequenceSpec& spec, std::uint64_t n);

/// Lazily yields the signed terms of a spec in order.
class TermStream {
   public:
    explicit TermStream(const SequenceSpec& spec);
    ~TermStream();
    TermStream(TermStream&&) noexcept;
    TermStream& operator=(TermStream&&) noexcept;

    std::optional<Rational> next();

   private:
    struct State;
    std::unique_ptr<State> state_;
};

/// Rigorous enclosure of a tail of absolute values, X_n = sum_{k>n} |x_k|.
/// Exact enclosures have lo == hi. Inexact ones satisfy lo < X_n < hi
/// strictly. A divergent tail carries no finite bounds.
struct TailEnclosure {
    Rational lo;
    Rational hi;
    bool exact = true;
    bool divergent = false;

    static TailEnclosure exact_value(const Rational& v) { return {v, v, true, false}; }
    static TailEnclosure infinite() { return {0, 0, false, true}; }

    Rational width() const { return hi - lo; }

    friend bool operator==(const TailEnclosure&, const TailEnclosure&) = default;
};

TailEnclosure operator+(const TailEnclosure& a, const TailEnclosure& b);
TailEnclosure operator+(const TailEnclosure& a, const Rational& shift);

/// Tail after n terms. `extra` explicit terms of an inexact tail are summed
/// before the integral-test remainder bound is applied, shrinking the width.
TailEnclosure tail(const SequenceSpec& spec, std::uint64_t n, std::uint64_t extra = 0);

enum class Comparison { TermExceedsTail, TailBoundsTerm, Indeterminate };

/// Decides |x_n| > X_n (exceeds) versus |x_n| <= X_n (bounds), refining
/// inexact enclosures with up to `max_extra` explicit terms.
Comparison compare_term_tail(const SequenceSpec& spec, std::uint64_t n, std::uint64_t max_extra = 4096);

/// Magnitude view shared by all kinds made of geometric strands with one
/// common ratio: the multiset {finite} U {head_j * ratio^k}.
struct StrandForm {
    std::vector<Rational> finite;
    std::vector<Rational> heads;
    Rational ratio;  // meaningful only when heads is nonempty
};

std::optional<StrandForm> strand_form(const SequenceSpec& spec);

bool is_nonincreasing(const SequenceSpec& spec);

/// Same multiset of terms in non-increasing order. Returns the input when it
/// is already non-increasing. Throws UnsupportedKind for p-series prefixes
/// that break monotonicity and for strands with incompatible ratios.
SequenceSpec nonincreasing_reorder(const SequenceSpec& spec);

/// Multiplies every term by c > 0.
SequenceSpec scaled(const SequenceSpec& spec, const Rational& c);

struct SignSplit {
    SequenceSpec pos;
    SequenceSpec neg;
    TailEnclosure x_plus;   // sum of positive terms
    TailEnclosure x_minus;  // sum of |negative terms|; X^- is its negation
};

SignSplit sign_split(const MergedSpec& merged);

enum class Summability { AbsolutelySummable, ConditionallySummable, UnconditionallyUnsummable };

Summability summability_class(const MergedSpec& merged);
std::string_view summability_name(Summability s);

/// Positive spec of absolute values of every term.
SequenceSpec absolute(const MergedSpec& merged);

}  // namespace subsum
