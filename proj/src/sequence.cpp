#include "subsum/sequence.hpp"

#include "subsum/error.hpp"

#include <algorithm>
#include <numeric>

namespace subsum {

bool operator==(const InterleaveTail& a, const InterleaveTail& b) { return a.parts == b.parts; }

bool operator==(const SequenceSpec& a, const SequenceSpec& b) {
    return a.negated == b.negated && a.prefix == b.prefix && a.tail == b.tail;
}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require(bool condition, const std::string& message) {
    if (!condition) throw Error(ErrorCode::InvalidSpec, message);
}

bool in_open_unit(const Rational& r) { return r > 0 && r < 1; }

Rational period_contraction(const std::vector<Rational>& ratios) {
    Rational lambda = 1;
    for (const auto& r : ratios) lambda *= 1 - r;
    return lambda;
}

// X_j for a multigeometric tail.
Rational multigeometric_tail(const MultigeometricTail& mg, std::uint64_t j) {
    const std::uint64_t m = mg.ratios.size();
    Rational out = mg.total * pow(period_contraction(mg.ratios), j / m);
    for (std::uint64_t l = 0; l < j % m; ++l) out *= 1 - mg.ratios[l];
    return out;
}

Rational pseries_term(const PSeriesTail& ps, std::uint64_t k) {
    static_assert(sizeof(unsigned long) >= sizeof(std::uint64_t));
    Integer denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), k, ps.p);
    return ps.scale / Rational(denom);
}

Rational pseries_integral_bound(const PSeriesTail& ps, std::uint64_t from) {
    // integral of scale * x^{-p} over [from, inf)
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), from, ps.p - 1);
    return ps.scale / Rational(Integer(ps.p - 1) * power);
}

Rational sorted_merge_total(const SortedMergeTail& sm) {
    Rational total = 0;
    for (const auto& t : sm.finite) total += t;
    for (const auto& s : sm.strands) total += s.head / (1 - s.ratio);
    return total;
}

std::vector<std::optional<std::uint64_t>> part_lengths(const std::vector<SequenceSpec>& parts) {
    std::vector<std::optional<std::uint64_t>> out;
    out.reserve(parts.size());
    for (const auto& p : parts) out.push_back(finite_length(p));
    return out;
}

// Terms taken from each part once the first n round-robin terms are emitted.
// Saturates when the finite parts run out.
std::vector<std::uint64_t> interleave_counts(const std::vector<SequenceSpec>& parts, std::uint64_t n) {
    const auto lengths = part_lengths(parts);
    std::vector<std::uint64_t> counts(parts.size(), 0);
    std::uint64_t remaining = n;
    auto active = [&](std::size_t i) { return !lengths[i] || counts[i] < *lengths[i]; };
    while (remaining > 0) {
        std::uint64_t live = 0;
        std::uint64_t room = UINT64_MAX;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (!active(i)) continue;
            ++live;
            if (lengths[i]) room = std::min(room, *lengths[i] - counts[i]);
        }
        if (live == 0) break;
        const std::uint64_t rounds = std::min(room, remaining / live);
        if (rounds == 0) {
            for (std::size_t i = 0; i < parts.size() && remaining > 0; ++i) {
                if (!active(i)) continue;
                ++counts[i];
                --remaining;
            }
            break;
        }
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (active(i)) counts[i] += rounds;
        }
        remaining -= rounds * live;
    }
    return counts;
}

bool constant_sign_parts(const SequenceSpec& spec) {
    if (const auto* il = std::get_if<InterleaveTail>(&spec.tail)) {
        for (const auto& p : il->parts) {
            if (p.negated || !constant_sign_parts(p)) return false;
        }
    }
    return true;
}

SequenceSpec strip_signs(SequenceSpec spec) {
    spec.negated = false;
    if (auto* il = std::get_if<InterleaveTail>(&spec.tail)) {
        for (auto& p : il->parts) p = strip_signs(std::move(p));
    }
    return spec;
}

SequenceSpec combine(std::vector<SequenceSpec> parts) {
    if (parts.empty()) return finite_sequence({});
    if (parts.size() == 1) return std::move(parts.front());
    return interleave(std::move(parts));
}

// Unsigned (for interleave: part-signed) term of the generated tail, j >= 1.
Rational tail_term(const TailKind& kind, std::uint64_t j);

}  // namespace

void validate(const SequenceSpec& spec) {
    for (const auto& t : spec.prefix) require(t > 0, "prefix terms must be positive, got " + to_string(t));
    std::visit(Overloaded{
                   [](const FiniteTail&) {},
                   [](const GeometricTail& g) {
                       require(g.a > 0, "geometric a must be positive");
                       require(in_open_unit(g.rho), "geometric rho must lie in (0,1), got " + to_string(g.rho));
                   },
                   [](const PSeriesTail& ps) {
                       if (ps.p < 1) throw Error(ErrorCode::UnsupportedExponent, "p-series exponent must be >= 1");
                       require(ps.start >= 1, "p-series start must be >= 1");
                       require(ps.scale > 0, "p-series scale must be positive");
                   },
                   [](const MultigeometricTail& mg) {
                       require(!mg.ratios.empty(), "multigeometric needs at least one ratio");
                       for (const auto& r : mg.ratios) {
                           require(in_open_unit(r), "multigeometric ratios must lie in (0,1), got " + to_string(r));
                       }
                       require(mg.total > 0, "multigeometric total must be positive");
                   },
                   [](const SortedMergeTail& sm) {
                       for (std::size_t i = 0; i < sm.finite.size(); ++i) {
                           require(sm.finite[i] > 0, "sorted-merge finite terms must be positive");
                           require(i == 0 || sm.finite[i] <= sm.finite[i - 1], "sorted-merge finite terms must be sorted");
                       }
                       for (const auto& s : sm.strands) {
                           require(s.head > 0, "strand head must be positive");
                           require(in_open_unit(s.ratio), "strand ratio must lie in (0,1)");
                       }
                   },
                   [](const InterleaveTail& il) {
                       require(!il.parts.empty(), "interleave needs at least one part");
                       for (const auto& p : il.parts) validate(p);
                   },
               },
               spec.tail);
}

SequenceSpec finite_sequence(std::vector<Rational> terms) {
    SequenceSpec s{std::move(terms), FiniteTail{}, false};
    validate(s);
    return s;
}

SequenceSpec geometric(Rational a, Rational rho) {
    SequenceSpec s{{}, GeometricTail{std::move(a), std::move(rho)}, false};
    validate(s);
    return s;
}

SequenceSpec pseries(std::uint32_t p, std::uint64_t start, Rational scale) {
    SequenceSpec s{{}, PSeriesTail{p, start, std::move(scale)}, false};
    validate(s);
    return s;
}

SequenceSpec harmonic() { return pseries(1); }

SequenceSpec multigeometric(std::vector<Rational> ratios, Rational total) {
    SequenceSpec s{{}, MultigeometricTail{std::move(ratios), std::move(total)}, false};
    validate(s);
    return s;
}

SequenceSpec bigeometric(const Rational& alpha, const Rational& beta, Rational total) {
    return multigeometric({alpha, beta}, std::move(total));
}

SequenceSpec with_prefix(std::vector<Rational> prefix, SequenceSpec spec) {
    prefix.insert(prefix.end(), spec.prefix.begin(), spec.prefix.end());
    spec.prefix = std::move(prefix);
    validate(spec);
    return spec;
}

SequenceSpec negate(SequenceSpec spec) {
    spec.negated = !spec.negated;
    return spec;
}

SequenceSpec interleave(std::vector<SequenceSpec> parts) {
    SequenceSpec s{{}, InterleaveTail{std::move(parts)}, false};
    validate(s);
    return s;
}

SequenceSpec as_sequence(const MergedSpec& merged) {
    std::vector<SequenceSpec> ordered;
    for (const auto& p : merged.parts) {
        if (!p.negated) ordered.push_back(p);
    }
    for (const auto& p : merged.parts) {
        if (p.negated) ordered.push_back(p);
    }
    return combine(std::move(ordered));
}

MergedSpec as_merged(const SequenceSpec& spec) {
    const auto* il = std::get_if<InterleaveTail>(&spec.tail);
    if (il && spec.prefix.empty() && !spec.negated) return MergedSpec{il->parts};
    return MergedSpec{{spec}};
}

std::optional<std::uint64_t> finite_length(const SequenceSpec& spec) {
    const std::uint64_t p = spec.prefix.size();
    return std::visit(Overloaded{
                          [&](const FiniteTail&) -> std::optional<std::uint64_t> { return p; },
                          [&](const InterleaveTail& il) -> std::optional<std::uint64_t> {
                              std::uint64_t total = p;
                              for (const auto& part : il.parts) {
                                  auto len = finite_length(part);
                                  if (!len) return std::nullopt;
                                  total += *len;
                              }
                              return total;
                          },
                          [&](const SortedMergeTail& sm) -> std::optional<std::uint64_t> {
                              if (sm.strands.empty()) return p + sm.finite.size();
                              return std::nullopt;
                          },
                          [](const auto&) -> std::optional<std::uint64_t> { return std::nullopt; },
                      },
                      spec.tail);
}

bool is_empty(const SequenceSpec& spec) {
    auto len = finite_length(spec);
    return len && *len == 0;
}

// ---------------------------------------------------------------- TermStream

struct TermStream::State {
    SequenceSpec spec;
    std::uint64_t emitted = 0;
    // geometric / multigeometric
    Rational current;
    std::size_t phase = 0;
    // p-series
    std::uint64_t k = 0;
    // sorted merge
    std::size_t finite_pos = 0;
    std::vector<Rational> heads;
    // interleave
    std::vector<TermStream> children;
    std::vector<bool> done;
    std::size_t turn = 0;

    explicit State(const SequenceSpec& s) : spec(s) {
        std::visit(Overloaded{
                       [&](const GeometricTail& g) { current = g.a; },
                       [&](const PSeriesTail& ps) { k = ps.start; },
                       [&](const MultigeometricTail& mg) { current = mg.total; },
                       [&](const SortedMergeTail& sm) {
                           for (const auto& st : sm.strands) heads.push_back(st.head);
                       },
                       [&](const InterleaveTail& il) {
                           for (const auto& p : il.parts) children.emplace_back(p);
                           done.assign(il.parts.size(), false);
                       },
                       [](const FiniteTail&) {},
                   },
                   spec.tail);
    }

    std::optional<Rational> raw_next() {
        if (emitted < spec.prefix.size()) return spec.prefix[emitted];
        return std::visit(
            Overloaded{
                [&](const FiniteTail&) -> std::optional<Rational> { return std::nullopt; },
                [&](const GeometricTail& g) -> std::optional<Rational> {
                    Rational out = current;
                    current *= g.rho;
                    return out;
                },
                [&](const PSeriesTail& ps) -> std::optional<Rational> { return pseries_term(ps, k++); },
                [&](const MultigeometricTail& mg) -> std::optional<Rational> {
                    const Rational& rho = mg.ratios[phase];
                    Rational out = rho * current;
                    current *= 1 - rho;
                    phase = (phase + 1) % mg.ratios.size();
                    return out;
                },
                [&](const SortedMergeTail& sm) -> std::optional<Rational> {
                    std::optional<std::size_t> best;
                    for (std::size_t j = 0; j < heads.size(); ++j) {
                        if (!best || heads[j] > heads[*best]) best = j;
                    }
                    const bool finite_left = finite_pos < sm.finite.size();
                    if (finite_left && (!best || sm.finite[finite_pos] >= heads[*best])) {
                        return sm.finite[finite_pos++];
                    }
                    if (!best) return std::nullopt;
                    Rational out = heads[*best];
                    heads[*best] *= sm.strands[*best].ratio;
                    return out;
                },
                [&](const InterleaveTail&) -> std::optional<Rational> {
                    for (std::size_t tries = 0; tries < children.size(); ++tries) {
                        const std::size_t i = turn;
                        turn = (turn + 1) % children.size();
                        if (done[i]) continue;
                        if (auto v = children[i].next()) return v;
                        done[i] = true;
                    }
                    return std::nullopt;
                },
            },
            spec.tail);
    }
};

TermStream::TermStream(const SequenceSpec& spec) : state_(std::make_unique<State>(spec)) {}
TermStream::~TermStream() = default;
TermStream::TermStream(TermStream&&) noexcept = default;
TermStream& TermStream::operator=(TermStream&&) noexcept = default;

std::optional<Rational> TermStream::next() {
    auto v = state_->raw_next();
    if (!v) return std::nullopt;
    ++state_->emitted;
    if (state_->spec.negated) return Rational(-*v);
    return v;
}

// --------------------------------------------------------------------- terms

namespace {

Rational tail_term(const TailKind& kind, std::uint64_t j) {
    return std::visit(
        Overloaded{
            [&](const FiniteTail&) -> Rational { throw Error(ErrorCode::IndexBeyondFinite, "finite sequence exhausted"); },
            [&](const GeometricTail& g) -> Rational { return g.a * pow(g.rho, j - 1); },
            [&](const PSeriesTail& ps) -> Rational { return pseries_term(ps, ps.start + j - 1); },
            [&](const MultigeometricTail& mg) -> Rational {
                return mg.ratios[(j - 1) % mg.ratios.size()] * multigeometric_tail(mg, j - 1);
            },
            [&](const SortedMergeTail& sm) -> Rational {
                TermStream stream(SequenceSpec{{}, sm, false});
                std::optional<Rational> v;
                for (std::uint64_t i = 0; i < j; ++i) v = stream.next();
                if (!v) throw Error(ErrorCode::IndexBeyondFinite, "sorted merge exhausted");
                return *v;
            },
            [&](const InterleaveTail& il) -> Rational {
                const auto lengths = part_lengths(il.parts);
                const auto counts = interleave_counts(il.parts, j - 1);
                std::optional<std::size_t> next_part;
                for (std::size_t i = 0; i < il.parts.size(); ++i) {
                    if (lengths[i] && counts[i] >= *lengths[i]) continue;
                    if (!next_part || counts[i] < counts[*next_part]) next_part = i;
                }
                if (!next_part) throw Error(ErrorCode::IndexBeyondFinite, "interleave exhausted");
                return term(il.parts[*next_part], counts[*next_part] + 1);
            },
        },
        kind);
}

}  // namespace

Rational term(const SequenceSpec& spec, std::uint64_t i) {
    if (i == 0) throw Error(ErrorCode::IndexBeyondFinite, "terms are 1-based");
    Rational v = i <= spec.prefix.size() ? spec.prefix[i - 1] : tail_term(spec.tail, i - spec.prefix.size());
    return spec.negated ? Rational(-v) : v;
}

std::vector<Rational> first_terms(const SequenceSpec& spec, std::uint64_t n) {
    std::vector<Rational> out;
    TermStream stream(spec);
    for (std::uint64_t i = 0; i < n; ++i) {
        auto v = stream.next();
        if (!v) break;
        out.push_back(std::move(*v));
    }
    return out;
}

// --------------------------------------------------------------------- tails

TailEnclosure operator+(const TailEnclosure& a, const TailEnclosure& b) {
    if (a.divergent || b.divergent) return TailEnclosure::infinite();
    return {a.lo + b.lo, a.hi + b.hi, a.exact && b.exact, false};
}

TailEnclosure operator+(const TailEnclosure& a, const Rational& shift) {
    if (a.divergent) return a;
    return {a.lo + shift, a.hi + shift, a.exact, false};
}

namespace {

TailEnclosure kind_tail(const TailKind& kind, std::uint64_t consumed, std::uint64_t extra) {
    return std::visit(
        Overloaded{
            [&](const FiniteTail&) { return TailEnclosure::exact_value(0); },
            [&](const GeometricTail& g) {
                return TailEnclosure::exact_value(g.a * pow(g.rho, consumed) / (1 - g.rho));
            },
            [&](const PSeriesTail& ps) {
                if (ps.p == 1) return TailEnclosure::infinite();
                const std::uint64_t first = ps.start + consumed;
                std::uint64_t explicit_terms = extra;
                if (first == 1 && explicit_terms == 0) explicit_terms = 1;
                Rational partial = 0;
                for (std::uint64_t k = first; k < first + explicit_terms; ++k) partial += pseries_term(ps, k);
                const std::uint64_t from = first + explicit_terms;
                // integral test: int_{from}^inf < sum_{k>=from} < int_{from-1}^inf
                return TailEnclosure{partial + pseries_integral_bound(ps, from),
                                     partial + pseries_integral_bound(ps, from - 1), false, false};
            },
            [&](const MultigeometricTail& mg) { return TailEnclosure::exact_value(multigeometric_tail(mg, consumed)); },
            [&](const SortedMergeTail& sm) {
                Rational rest = sorted_merge_total(sm);
                TermStream stream(SequenceSpec{{}, sm, false});
                for (std::uint64_t i = 0; i < consumed; ++i) {
                    auto v = stream.next();
                    if (!v) break;
                    rest -= *v;
                }
                return TailEnclosure::exact_value(rest);
            },
            [&](const InterleaveTail& il) {
                const auto counts = interleave_counts(il.parts, consumed);
                TailEnclosure sum = TailEnclosure::exact_value(0);
                for (std::size_t i = 0; i < il.parts.size(); ++i) sum = sum + tail(il.parts[i], counts[i], extra);
                return sum;
            },
        },
        kind);
}

}  // namespace

TailEnclosure tail(const SequenceSpec& spec, std::uint64_t n, std::uint64_t extra) {
    const std::uint64_t p = spec.prefix.size();
    if (n >= p) return kind_tail(spec.tail, n - p, extra);
    Rational partial = 0;
    for (std::uint64_t i = n; i < p; ++i) partial += spec.prefix[i];
    return kind_tail(spec.tail, 0, extra) + partial;
}

Comparison compare_term_tail(const SequenceSpec& spec, std::uint64_t n, std::uint64_t max_extra) {
    const Rational x = abs(term(spec, n));
    std::uint64_t extra = 0;
    while (true) {
        const TailEnclosure enc = tail(spec, n, extra);
        if (enc.divergent) return Comparison::TailBoundsTerm;
        if (enc.exact) return x > enc.lo ? Comparison::TermExceedsTail : Comparison::TailBoundsTerm;
        if (x >= enc.hi) return Comparison::TermExceedsTail;
        if (x <= enc.lo) return Comparison::TailBoundsTerm;
        if (extra >= max_extra) return Comparison::Indeterminate;
        extra = std::min<std::uint64_t>(max_extra, extra == 0 ? 8 : extra * 8);
    }
}

// ------------------------------------------------------------------- strands

std::optional<StrandForm> strand_form(const SequenceSpec& spec) {
    StrandForm form;
    form.finite = spec.prefix;
    std::optional<Rational> ratio;
    auto add_heads = [&](const std::vector<Rational>& heads, const Rational& r) {
        if (heads.empty()) return true;
        if (ratio && *ratio != r) return false;
        ratio = r;
        form.heads.insert(form.heads.end(), heads.begin(), heads.end());
        return true;
    };
    const bool ok = std::visit(
        Overloaded{
            [&](const FiniteTail&) { return true; },
            [&](const GeometricTail& g) { return add_heads({g.a}, g.rho); },
            [&](const PSeriesTail&) { return false; },
            [&](const MultigeometricTail& mg) {
                std::vector<Rational> heads;
                for (std::uint64_t j = 1; j <= mg.ratios.size(); ++j) heads.push_back(tail_term(mg, j));
                return add_heads(heads, period_contraction(mg.ratios));
            },
            [&](const SortedMergeTail& sm) {
                form.finite.insert(form.finite.end(), sm.finite.begin(), sm.finite.end());
                for (const auto& s : sm.strands) {
                    if (!add_heads({s.head}, s.ratio)) return false;
                }
                return true;
            },
            [&](const InterleaveTail& il) {
                for (const auto& part : il.parts) {
                    auto sub = strand_form(part);
                    if (!sub) return false;
                    form.finite.insert(form.finite.end(), sub->finite.begin(), sub->finite.end());
                    if (!add_heads(sub->heads, sub->ratio)) return false;
                }
                return true;
            },
        },
        spec.tail);
    if (!ok) return std::nullopt;
    form.ratio = ratio.value_or(0);
    return form;
}

bool is_nonincreasing(const SequenceSpec& spec) {
    for (std::size_t i = 1; i < spec.prefix.size(); ++i) {
        if (spec.prefix[i] > spec.prefix[i - 1]) return false;
    }
    auto first_tail_term_ok = [&](const Rational& first) {
        return spec.prefix.empty() || first <= spec.prefix.back();
    };
    return std::visit(Overloaded{
                          [&](const FiniteTail&) { return true; },
                          [&](const GeometricTail& g) { return first_tail_term_ok(g.a); },
                          [&](const PSeriesTail& ps) { return first_tail_term_ok(pseries_term(ps, ps.start)); },
                          [&](const MultigeometricTail& mg) {
                              // One full period plus one term decides it: the pattern scales.
                              Rational prev = tail_term(mg, 1);
                              if (!first_tail_term_ok(prev)) return false;
                              for (std::uint64_t j = 2; j <= mg.ratios.size() + 1; ++j) {
                                  Rational cur = tail_term(mg, j);
                                  if (cur > prev) return false;
                                  prev = cur;
                              }
                              return true;
                          },
                          [&](const SortedMergeTail& sm) {
                              TermStream s(SequenceSpec{{}, sm, false});
                              auto first = s.next();
                              return !first || first_tail_term_ok(*first);
                          },
                          [&](const InterleaveTail& il) {
                              if (il.parts.size() != 1) return false;
                              const auto& part = il.parts.front();
                              if (!is_nonincreasing(part)) return false;
                              auto first = first_terms(part, 1);
                              return first.empty() || first_tail_term_ok(abs(first.front()));
                          },
                      },
                      spec.tail);
}

SequenceSpec nonincreasing_reorder(const SequenceSpec& spec) {
    if (spec.negated || !constant_sign_parts(spec)) {
        throw Error(ErrorCode::InvalidSpec, "reordering needs a positive sequence");
    }
    if (is_nonincreasing(spec)) return spec;
    if (const auto* il = std::get_if<InterleaveTail>(&spec.tail); il && il->parts.size() == 1) {
        SequenceSpec flat = il->parts.front();
        flat.prefix.insert(flat.prefix.begin(), spec.prefix.begin(), spec.prefix.end());
        return nonincreasing_reorder(flat);
    }
    if (std::holds_alternative<PSeriesTail>(spec.tail)) {
        throw Error(ErrorCode::UnsupportedKind, "p-series with an out-of-order prefix cannot be reordered");
    }
    auto form = strand_form(spec);
    if (!form) throw Error(ErrorCode::UnsupportedKind, "terms are not geometric strands with a common ratio");
    SortedMergeTail sorted;
    sorted.finite = form->finite;
    std::sort(sorted.finite.begin(), sorted.finite.end(), std::greater<>());
    for (const auto& h : form->heads) sorted.strands.push_back({h, form->ratio});
    return SequenceSpec{{}, std::move(sorted), false};
}

SequenceSpec scaled(const SequenceSpec& spec, const Rational& c) {
    if (c <= 0) throw Error(ErrorCode::InvalidSpec, "scale factor must be positive");
    SequenceSpec out = spec;
    for (auto& t : out.prefix) t *= c;
    std::visit(Overloaded{
                   [](FiniteTail&) {},
                   [&](GeometricTail& g) { g.a *= c; },
                   [&](PSeriesTail& ps) { ps.scale *= c; },
                   [&](MultigeometricTail& mg) { mg.total *= c; },
                   [&](SortedMergeTail& sm) {
                       for (auto& t : sm.finite) t *= c;
                       for (auto& s : sm.strands) s.head *= c;
                   },
                   [&](InterleaveTail& il) {
                       for (auto& p : il.parts) p = scaled(p, c);
                   },
               },
               out.tail);
    return out;
}

// ---------------------------------------------------------------------- signs

SignSplit sign_split(const MergedSpec& merged) {
    std::vector<SequenceSpec> pos;
    std::vector<SequenceSpec> neg;
    for (const auto& part : merged.parts) {
        if (!constant_sign_parts(part)) throw Error(ErrorCode::InvalidSpec, "merged parts must have constant sign");
        (part.negated ? neg : pos).push_back(part);
    }
    SignSplit out{combine(std::move(pos)), combine(std::move(neg)), {}, {}};
    out.x_plus = tail(out.pos, 0);
    out.x_minus = tail(out.neg, 0);
    return out;
}

Summability summability_class(const MergedSpec& merged) {
    const auto split = sign_split(merged);
    const bool plus_inf = split.x_plus.divergent;
    const bool minus_inf = split.x_minus.divergent;
    if (plus_inf && minus_inf) return Summability::ConditionallySummable;
    if (plus_inf || minus_inf) return Summability::UnconditionallyUnsummable;
    return Summability::AbsolutelySummable;
}

std::string_view summability_name(Summability s) {
    switch (s) {
        case Summability::AbsolutelySummable: return "AbsolutelySummable";
        case Summability::ConditionallySummable: return "ConditionallySummable";
        case Summability::UnconditionallyUnsummable: return "UnconditionallyUnsummable";
    }
    return "";
}

SequenceSpec absolute(const MergedSpec& merged) {
    std::vector<SequenceSpec> parts;
    for (const auto& p : merged.parts) parts.push_back(strip_signs(p));
    return combine(std::move(parts));
}

}  // namespace subsum
