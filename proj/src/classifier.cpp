#include "subsum/classifier.hpp"

#include "subsum/error.hpp"

#include <algorithm>
#include <map>

namespace subsum {

namespace {

constexpr std::uint64_t kRefineBudget = 4096;
constexpr std::uint64_t kInjectivityBudget = 4096;

SequenceSpec flatten_single(SequenceSpec spec) {
    while (true) {
        auto* il = std::get_if<InterleaveTail>(&spec.tail);
        if (!il || il->parts.size() != 1 || il->parts.front().negated) return spec;
        SequenceSpec inner = il->parts.front();
        inner.prefix.insert(inner.prefix.begin(), spec.prefix.begin(), spec.prefix.end());
        spec = std::move(inner);
    }
}

SequenceSpec sorted_positive(const SequenceSpec& spec) { return flatten_single(nonincreasing_reorder(spec)); }

TailEnclosure negated(const TailEnclosure& e) {
    if (e.divergent) return e;
    return {-e.hi, -e.lo, e.exact, false};
}

// Exact comparisons x_n > X_n for n = 1..count given the first terms and the total.
std::vector<Comparison> exact_comparisons(const std::vector<Rational>& terms, const Rational& total) {
    std::vector<Comparison> out;
    out.reserve(terms.size());
    Rational rest = total;
    for (const auto& x : terms) {
        rest -= x;
        out.push_back(x > rest ? Comparison::TermExceedsTail : Comparison::TailBoundsTerm);
    }
    return out;
}

EventualVerdict finite_event_summary(const std::vector<Comparison>& comps, ProofTag tag) {
    EventualVerdict ev{Eventual::AllBound, tag, 0, 0};
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (comps[i] == Comparison::TermExceedsTail) {
            ++ev.exceed_count;
            ev.last_exceed = i + 1;
        }
    }
    if (ev.exceed_count > 0) ev.kind = Eventual::EventuallyBound;
    return ev;
}

TermTailProfile finite_profile(const SequenceSpec& sorted, std::uint64_t length, std::uint64_t horizon) {
    TermTailProfile prof;
    const auto terms = first_terms(sorted, length);
    Rational total = 0;
    for (const auto& t : terms) total += t;
    const auto comps = exact_comparisons(terms, total);
    prof.eventual = finite_event_summary(comps, ProofTag::FiniteSequence);
    prof.horizon = std::min(horizon, length);
    prof.comparisons.assign(comps.begin(), comps.begin() + static_cast<std::ptrdiff_t>(prof.horizon));
    prof.bound_from = length + 1;
    return prof;
}

// Sorted strand sequences repeat their term/tail pattern with period m
// after a computable number P of leading terms. Everything up to P + m is
// compared exactly and the window P+1..P+m decides the rest.
TermTailProfile strand_profile(const SequenceSpec& sorted, const StrandForm& form, std::uint64_t horizon) {
    const Rational& ratio = form.ratio;
    const Rational top = *std::max_element(form.heads.begin(), form.heads.end());
    std::uint64_t max_shift = 0;
    std::uint64_t shifts_total = 0;
    std::vector<std::uint64_t> shifts;
    for (const auto& head : form.heads) {
        std::uint64_t e = 0;
        Rational b = head;
        while (b <= ratio * top) {
            b /= ratio;
            ++e;
        }
        shifts.push_back(e);
        max_shift = std::max(max_shift, e);
    }
    std::uint64_t k0 = max_shift;
    if (!form.finite.empty()) {
        const Rational smallest = *std::min_element(form.finite.begin(), form.finite.end());
        Rational level_top = pow(ratio, k0) * top;
        while (smallest <= level_top) {
            level_top *= ratio;
            ++k0;
        }
    }
    for (auto e : shifts) shifts_total += k0 - e;
    const std::uint64_t lead = form.finite.size() + shifts_total;
    const std::uint64_t period = form.heads.size();

    const auto terms = first_terms(sorted, lead + period);
    const auto window = exact_comparisons(terms, tail(sorted, 0).lo);

    TermTailProfile prof;
    const bool pure_geometric = period == 1 && form.finite.empty();
    const ProofTag tag = pure_geometric ? ProofTag::GeometricRatio : ProofTag::MultigeometricPeriod;
    const bool window_exceeds =
        std::any_of(window.begin() + static_cast<std::ptrdiff_t>(lead), window.end(),
                    [](Comparison c) { return c == Comparison::TermExceedsTail; });
    if (window_exceeds) {
        const bool all = std::all_of(window.begin(), window.end(),
                                     [](Comparison c) { return c == Comparison::TermExceedsTail; });
        prof.eventual = EventualVerdict{all ? Eventual::AllExceed : Eventual::ExceedsInfinitelyOften, tag, 0, 0};
    } else {
        std::vector<Comparison> leading(window.begin(), window.begin() + static_cast<std::ptrdiff_t>(lead));
        prof.eventual = finite_event_summary(leading, tag);
        prof.bound_from = prof.eventual->last_exceed + 1;
    }
    prof.horizon = horizon;
    prof.comparisons.reserve(horizon);
    for (std::uint64_t n = 1; n <= horizon; ++n) {
        const std::uint64_t idx = n <= lead + period ? n - 1 : lead + (n - lead - 1) % period;
        prof.comparisons.push_back(window[idx]);
    }
    return prof;
}

TermTailProfile pseries_profile(const SequenceSpec& sorted, const PSeriesTail& ps, std::uint64_t horizon) {
    const PSeriesThresholds th = pseries_thresholds(ps.p);
    const std::uint64_t q = sorted.prefix.size();
    const std::uint64_t bound_pos = q + std::max(th.n_bound, ps.start) - ps.start + 1;
    auto base_of = [&](std::uint64_t n) { return n > q ? ps.start + (n - q) - 1 : 0; };

    std::vector<Comparison> decided;
    for (std::uint64_t n = 1; n < bound_pos; ++n) {
        Comparison c = compare_term_tail(sorted, n, kRefineBudget);
        if (c == Comparison::Indeterminate) {
            const std::uint64_t k = base_of(n);
            if (k == 0 || k > th.k_exceed) {
                throw Error(ErrorCode::IndeterminateComparison,
                            "term/tail comparison undecided at n = " + std::to_string(n));
            }
            c = Comparison::TermExceedsTail;
        }
        decided.push_back(c);
    }
    TermTailProfile prof;
    prof.pseries = th;
    prof.eventual = finite_event_summary(decided, ProofTag::PSeriesMonotone);
    prof.bound_from = bound_pos;
    prof.horizon = horizon;
    for (std::uint64_t n = 1; n <= horizon; ++n) {
        prof.comparisons.push_back(n < bound_pos ? decided[n - 1] : Comparison::TailBoundsTerm);
    }
    return prof;
}

TermTailProfile profile_sorted(const SequenceSpec& sorted, std::uint64_t horizon) {
    if (auto length = finite_length(sorted)) return finite_profile(sorted, *length, horizon);
    if (const auto* ps = std::get_if<PSeriesTail>(&sorted.tail)) return pseries_profile(sorted, *ps, horizon);
    auto form = strand_form(sorted);
    if (!form || form->heads.empty()) {
        throw Error(ErrorCode::UnsupportedKind, "no term/tail analysis for this sequence kind");
    }
    return strand_profile(sorted, *form, horizon);
}

// Components of C_m decided gap by gap; gaps are compared against the tail
// enclosure, refined when a gap falls inside it.
std::optional<std::uint64_t> count_components(const SequenceSpec& sorted, std::uint64_t m, std::size_t cap) {
    std::vector<Rational> endpoints;
    try {
        endpoints = subsum_endpoints(sorted, m, cap);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::CapExceeded) return std::nullopt;
        throw;
    }
    const TailEnclosure coarse = tail(sorted, m);
    std::uint64_t count = 1;
    for (std::size_t i = 1; i < endpoints.size(); ++i) {
        const Rational gap = endpoints[i] - endpoints[i - 1];
        if (coarse.exact) {
            if (gap > coarse.lo) ++count;
            continue;
        }
        std::uint64_t extra = 0;
        while (true) {
            const TailEnclosure enc = tail(sorted, m, extra);
            if (gap >= enc.hi) {
                ++count;
                break;
            }
            if (gap <= enc.lo) break;
            if (extra >= kRefineBudget) return std::nullopt;
            extra = extra == 0 ? 8 : extra * 8;
        }
    }
    return count;
}

void require_positive(const SequenceSpec& spec) {
    if (spec.negated) throw Error(ErrorCode::InvalidSpec, "expected a positive sequence");
}

void classify_positive(const SequenceSpec& positive, const ClassifyOptions& opts, Verdict& v) {
    const SequenceSpec sorted = sorted_positive(positive);
    TermTailProfile prof = profile_sorted(sorted, opts.horizon);
    const EventualVerdict ev = *prof.eventual;
    const auto form = strand_form(sorted);
    if (form && !form->heads.empty()) v.lambda = form->ratio;

    switch (ev.kind) {
        case Eventual::AllBound:
        case Eventual::EventuallyBound: {
            v.kind = VerdictKind::FiniteUnion;
            v.component_lower = pow2(ev.exceed_count);
            if (ev.proof == ProofTag::FiniteSequence) {
                v.certificate = Certificate::FiniteSequence;
                v.component_upper = pow2(*finite_length(sorted));
            } else if (ev.proof == ProofTag::PSeriesMonotone) {
                v.certificate = ev.kind == Eventual::AllBound ? Certificate::AllBound : Certificate::EventuallyBound;
                v.component_upper = pow2(prof.bound_from);
            } else {
                v.certificate = ev.kind == Eventual::AllBound ? Certificate::AllBound : Certificate::EventuallyBound;
                v.component_upper = pow2(ev.last_exceed);
            }
            if (ev.proof == ProofTag::FiniteSequence) {
                try {
                    v.exact_count = subsum_endpoints(sorted, *finite_length(sorted), opts.cap).size();
                } catch (const Error& e) {
                    if (e.code() != ErrorCode::CapExceeded) throw;
                }
            } else {
                v.exact_count = count_components(sorted, ev.last_exceed, opts.cap);
            }
            break;
        }
        case Eventual::AllExceed:
            v.kind = VerdictKind::CantorSet;
            v.certificate = Certificate::AllExceed;
            v.strength = Strength::Proven;
            break;
        case Eventual::ExceedsInfinitelyOften: {
            if (form && form->heads.size() == 2 && form->ratio < Rational(1, 4)) {
                v.kind = VerdictKind::CantorSet;
                v.certificate = Certificate::LambdaBelowQuarter;
                v.strength = Strength::Proven;
                break;
            }
            std::optional<CoverageCertificate> cert;
            try {
                const DigitForm df = digit_form(sorted, opts.max_digit_base);
                cert = digit_coverage_test(df.base, df.numerators);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::NotDigitForm) throw;
            }
            if (cert) {
                v.kind = VerdictKind::SymmetricCantorval;
                v.certificate = Certificate::DigitCoverage;
                v.strength = Strength::Proven;
                v.coverage = std::move(cert);
            } else {
                v.kind = VerdictKind::Undetermined;
                v.certificate = Certificate::InfinitelyManyComponents;
            }
            break;
        }
    }
    v.profile = std::move(prof);
}

}  // namespace

Rational f_p(std::uint32_t p, std::uint64_t x) {
    const Rational base(Integer(std::to_string(x), 10));
    return pow(base, p) / pow(base + 1, p - 1);
}

PSeriesThresholds pseries_thresholds(std::uint32_t p) {
    if (p < 1) throw Error(ErrorCode::UnsupportedExponent, "p-series exponent must be at least 1");
    const Rational target(p - 1);
    std::uint64_t n = 1;
    while (f_p(p, n) < target) ++n;
    return {p - 1, n};
}

TermTailProfile term_tail_profile(const SequenceSpec& spec, std::uint64_t horizon) {
    require_positive(spec);
    validate(spec);
    return profile_sorted(sorted_positive(spec), horizon);
}

std::optional<CoverageCertificate> digit_coverage_test(std::uint64_t base, const std::vector<Integer>& numerators) {
    if (base < 2) throw Error(ErrorCode::NotDigitForm, "digit base must be at least 2");
    if (numerators.empty()) throw Error(ErrorCode::NotDigitForm, "no strand numerators");
    for (const auto& p : numerators) {
        if (p <= 0) throw Error(ErrorCode::NotDigitForm, "strand numerators must be positive");
    }
    // Smallest subset sum reaching each residue.
    std::map<std::uint64_t, Integer> best{{0, Integer(0)}};
    for (const auto& p : numerators) {
        auto next = best;
        for (const auto& [res, sum] : best) {
            const Integer s = sum + p;
            const Integer r = s % Integer(std::to_string(base), 10);
            const std::uint64_t key = r.get_ui();
            auto it = next.find(key);
            if (it == next.end() || s < it->second) next[key] = s;
        }
        best = std::move(next);
    }
    if (best.size() < base) return std::nullopt;

    CoverageCertificate cert;
    cert.base = base;
    cert.numerators = numerators;
    for (const auto& [res, sum] : best) {
        cert.digit_residues.push_back(res);
        cert.representatives.push_back(sum);
    }
    // Finite expansions sum_l r_{i_l} base^l over representative digits hit
    // each residue mod base^d exactly once.
    std::uint64_t depth = 0;
    std::uint64_t modulus = base;
    while (modulus <= kInjectivityBudget) {
        const std::uint64_t d = depth + 1;
        std::vector<bool> seen(modulus, false);
        std::vector<std::uint64_t> digits(d, 0);
        const Integer mod(std::to_string(modulus), 10);
        for (std::uint64_t word = 0; word < modulus; ++word) {
            std::uint64_t w = word;
            Integer value = 0;
            Integer scale = 1;
            for (std::uint64_t l = 0; l < d; ++l) {
                value += cert.representatives[w % base] * scale;
                scale *= static_cast<unsigned long>(base);
                w /= base;
            }
            const std::uint64_t r = Integer(value % mod).get_ui();
            if (seen[r]) throw Error(ErrorCode::InvariantViolation, "digit expansions collide mod base^d");
            seen[r] = true;
        }
        depth = d;
        modulus *= base;
    }
    cert.injectivity_depth = depth;
    return cert;
}

DigitForm digit_form(const SequenceSpec& spec, std::uint64_t max_base) {
    const auto form = strand_form(flatten_single(spec));
    if (!form || form->heads.empty()) throw Error(ErrorCode::NotDigitForm, "not a strand sequence");
    const Rational& ratio = form->ratio;
    if (ratio.get_num() != 1 || ratio.get_den() < 2 || !ratio.get_den().fits_ulong_p() ||
        ratio.get_den().get_ui() > max_base) {
        throw Error(ErrorCode::NotDigitForm, "strand ratio " + to_string(ratio) + " is not 1/n with small n");
    }
    DigitForm df;
    df.base = ratio.get_den().get_ui();
    df.unit = form->heads.front();
    for (std::size_t i = 1; i < form->heads.size(); ++i) df.unit = rational_gcd(df.unit, form->heads[i]);
    for (const auto& h : form->heads) {
        const Rational q = h / df.unit;
        df.numerators.push_back(q.get_num());
    }
    return df;
}

Verdict classify(const MergedSpec& spec, const ClassifyOptions& options) {
    for (const auto& part : spec.parts) validate(part);
    Verdict v;
    const SignSplit split = sign_split(spec);
    switch (summability_class(spec)) {
        case Summability::ConditionallySummable:
            v.kind = VerdictKind::WholeLine;
            v.certificate = Certificate::BothSidesDivergent;
            v.strength = Strength::Proven;
            return v;
        case Summability::UnconditionallyUnsummable:
            v.kind = VerdictKind::UnboundedInterval;
            v.certificate = Certificate::OneSideDivergent;
            v.strength = Strength::Proven;
            if (split.x_plus.divergent) {
                v.hull_lo = negated(split.x_minus);
            } else {
                v.hull_hi = split.x_plus;
            }
            return v;
        case Summability::AbsolutelySummable:
            break;
    }
    v.translation = negated(split.x_minus);
    v.hull_lo = v.translation;
    v.hull_hi = split.x_plus;
    classify_positive(absolute(spec), options, v);
    return v;
}

Verdict classify(const SequenceSpec& spec, const ClassifyOptions& options) {
    return classify(as_merged(spec), options);
}

std::vector<Rational> one_point_components(const SequenceSpec& spec, std::uint64_t n, std::size_t cap) {
    require_positive(spec);
    const SequenceSpec sorted = sorted_positive(spec);
    const TermTailProfile prof = profile_sorted(sorted, 1);
    const Eventual kind = prof.eventual->kind;
    if (kind == Eventual::AllBound || kind == Eventual::EventuallyBound) {
        throw Error(ErrorCode::NotApplicable, "the tail bounds the term eventually");
    }
    const CnResult cn = build_cn(sorted, n, cap);
    std::vector<Rational> out;
    for (const auto& comp : cn.fattened.intervals()) {
        out.push_back(comp.left);
        out.push_back(comp.right);
    }
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string_view verdict_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::FiniteUnion: return "FiniteUnion";
        case VerdictKind::CantorSet: return "CantorSet";
        case VerdictKind::SymmetricCantorval: return "SymmetricCantorval";
        case VerdictKind::UnboundedInterval: return "UnboundedInterval";
        case VerdictKind::WholeLine: return "WholeLine";
        case VerdictKind::Undetermined: return "Undetermined";
    }
    return "";
}

std::string_view certificate_name(Certificate c) {
    switch (c) {
        case Certificate::FiniteSequence: return "FiniteSequence";
        case Certificate::AllBound: return "AllBound";
        case Certificate::EventuallyBound: return "EventuallyBound";
        case Certificate::AllExceed: return "AllExceed";
        case Certificate::LambdaBelowQuarter: return "LambdaBelowQuarter";
        case Certificate::DigitCoverage: return "DigitCoverage+ExceedsInfinitelyOften";
        case Certificate::InfinitelyManyComponents: return "InfinitelyManyComponents";
        case Certificate::OneSideDivergent: return "OneSideDivergent";
        case Certificate::BothSidesDivergent: return "BothSidesDivergent";
    }
    return "";
}

std::string_view strength_name(Strength s) { return s == Strength::Proven ? "Proven" : "PaperPresumed"; }

std::string_view comparison_name(Comparison c) {
    switch (c) {
        case Comparison::TermExceedsTail: return "TermExceedsTail";
        case Comparison::TailBoundsTerm: return "TailBoundsTerm";
        case Comparison::Indeterminate: return "Indeterminate";
    }
    return "";
}

std::string_view eventual_name(Eventual e) {
    switch (e) {
        case Eventual::AllExceed: return "AllExceed";
        case Eventual::AllBound: return "AllBound";
        case Eventual::EventuallyBound: return "EventuallyBound";
        case Eventual::ExceedsInfinitelyOften: return "ExceedsInfinitelyOften";
    }
    return "";
}

std::string_view proof_tag_name(ProofTag t) {
    switch (t) {
        case ProofTag::FiniteSequence: return "finite-sequence";
        case ProofTag::GeometricRatio: return "geometric-ratio";
        case ProofTag::MultigeometricPeriod: return "multigeometric-period";
        case ProofTag::PSeriesMonotone: return "pseries-monotone";
    }
    return "";
}

}  // namespace subsum
