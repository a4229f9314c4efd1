#pragma once

#include "subsum/cn_engine.hpp"
#include "subsum/sequence.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace subsum {

enum class Eventual { AllExceed, AllBound, EventuallyBound, ExceedsInfinitelyOften };
enum class ProofTag { FiniteSequence, GeometricRatio, MultigeometricPeriod, PSeriesMonotone };

struct EventualVerdict {
    Eventual kind;
    ProofTag proof;
    std::uint64_t exceed_count = 0;  // number of exceed events (finite unless infinitely often)
    std::uint64_t last_exceed = 0;   // index of the last exceed event, 0 if none
};

/// Thresholds for scale/k^p: x > X is certain for k <= k_exceed, and x <= X
/// holds for every k >= n_bound. Both are in terms of the denominator base k.
struct PSeriesThresholds {
    std::uint64_t k_exceed;
    std::uint64_t n_bound;
};

/// f_p(x) = (x+1) (x/(x+1))^p = x^p / (x+1)^(p-1).
Rational f_p(std::uint32_t p, std::uint64_t x);

/// k_exceed = p - 1 and the least n_bound >= 1 with p - 1 <= f_p(n_bound).
PSeriesThresholds pseries_thresholds(std::uint32_t p);

struct TermTailProfile {
    std::uint64_t horizon = 0;
    std::vector<Comparison> comparisons;  // positions 1..horizon of the non-increasing reorder
    std::optional<EventualVerdict> eventual;
    std::optional<PSeriesThresholds> pseries;
    /// Bound positions from here on are certain; used for component bounds.
    std::uint64_t bound_from = 0;
};

/// Term/tail comparisons on nonincreasing_reorder(spec) plus an analytic
/// verdict for strand forms (periodic pattern) and p-series (f_p monotone).
/// Throws IndeterminateComparison if the analytic step cannot be decided.
TermTailProfile term_tail_profile(const SequenceSpec& spec, std::uint64_t horizon);

struct CoverageCertificate {
    std::uint64_t base;
    std::vector<Integer> numerators;
    std::vector<std::uint64_t> digit_residues;  // sorted distinct subset sums mod base
    std::vector<Integer> representatives;       // one subset sum per residue 0..base-1
    std::uint64_t injectivity_depth;            // levels checked by brute force
};

/// Subset sums of the numerators mod base; a certificate iff every residue is
/// reached. Throws NotDigitForm for base < 2 or non-positive numerators.
std::optional<CoverageCertificate> digit_coverage_test(std::uint64_t base, const std::vector<Integer>& numerators);

struct DigitForm {
    std::uint64_t base;
    std::vector<Integer> numerators;
    Rational unit;  // strand j is unit * numerators[j] * base^-k, k >= 0
};

/// Strand view with common ratio 1/base and base <= max_base. Throws NotDigitForm.
DigitForm digit_form(const SequenceSpec& spec, std::uint64_t max_base = 64);

enum class VerdictKind { FiniteUnion, CantorSet, SymmetricCantorval, UnboundedInterval, WholeLine, Undetermined };

enum class Certificate {
    FiniteSequence,
    AllBound,
    EventuallyBound,
    AllExceed,
    LambdaBelowQuarter,
    DigitCoverage,
    InfinitelyManyComponents,
    OneSideDivergent,
    BothSidesDivergent,
};

enum class Strength { Proven, PaperPresumed };

std::string_view verdict_name(VerdictKind k);
std::string_view certificate_name(Certificate c);
std::string_view strength_name(Strength s);
std::string_view comparison_name(Comparison c);
std::string_view eventual_name(Eventual e);
std::string_view proof_tag_name(ProofTag t);

struct Verdict {
    VerdictKind kind = VerdictKind::Undetermined;
    Certificate certificate = Certificate::InfinitelyManyComponents;
    std::optional<Strength> strength;
    std::optional<Integer> component_lower;
    std::optional<Integer> component_upper;
    std::optional<std::uint64_t> exact_count;
    std::optional<TailEnclosure> hull_lo;  // empty: unbounded below
    std::optional<TailEnclosure> hull_hi;  // empty: unbounded above
    TailEnclosure translation = TailEnclosure::exact_value(0);
    std::optional<Rational> lambda;  // common strand ratio when the spec has one
    std::optional<CoverageCertificate> coverage;
    std::optional<TermTailProfile> profile;
};

struct ClassifyOptions {
    std::uint64_t horizon = 64;
    std::size_t cap = kDefaultEndpointCap;
    std::uint64_t max_digit_base = 64;
};

Verdict classify(const MergedSpec& spec, const ClassifyOptions& options = {});
Verdict classify(const SequenceSpec& spec, const ClassifyOptions& options = {});

/// Endpoints of the components of C_n built on the non-increasing reorder.
/// Throws NotApplicable when the tail bounds the term eventually.
std::vector<Rational> one_point_components(const SequenceSpec& spec, std::uint64_t n,
                                           std::size_t cap = kDefaultEndpointCap);

}  // namespace subsum
