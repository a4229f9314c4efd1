#include "subsum/spec_json.hpp"

#include "subsum/error.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace subsum {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

const Json& field(const Json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key)) {
        throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
    }
    return obj.at(key);
}

std::vector<Rational> rational_list(const Json& j) {
    if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected an array of rationals");
    std::vector<Rational> out;
    for (const auto& item : j) out.push_back(json_rational(item));
    return out;
}

std::uint64_t json_count(const Json& j, const char* what) {
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
        throw Error(ErrorCode::ParseError, std::string(what) + " must be a non-negative integer");
    }
    return j.get<std::uint64_t>();
}

void reject_unknown(const Json& obj, std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* a : allowed) known = known || key == a;
        if (!known) throw Error(ErrorCode::ParseError, "unknown field '" + key + "'");
    }
}

TailKind parse_tail(const Json& t) {
    const std::string kind = field(t, "kind").get<std::string>();
    if (kind == "none" || kind == "finite") {
        reject_unknown(t, {"kind"});
        return FiniteTail{};
    }
    if (kind == "geometric") {
        reject_unknown(t, {"kind", "a", "rho"});
        return GeometricTail{json_rational(field(t, "a")), json_rational(field(t, "rho"))};
    }
    if (kind == "pseries") {
        reject_unknown(t, {"kind", "p", "start", "scale"});
        const Json& p = field(t, "p");
        if (!p.is_number_integer()) throw Error(ErrorCode::UnsupportedExponent, "p-series exponent must be an integer");
        const auto pv = p.get<std::int64_t>();
        if (pv < 1 || pv > std::numeric_limits<std::uint32_t>::max()) {
            throw Error(ErrorCode::UnsupportedExponent, "p-series exponent out of range");
        }
        PSeriesTail ps;
        ps.p = static_cast<std::uint32_t>(pv);
        if (t.contains("start")) ps.start = json_count(t.at("start"), "start");
        if (t.contains("scale")) ps.scale = json_rational(t.at("scale"));
        return ps;
    }
    if (kind == "multigeometric") {
        reject_unknown(t, {"kind", "ratios", "total"});
        MultigeometricTail mg;
        mg.ratios = rational_list(field(t, "ratios"));
        if (t.contains("total")) mg.total = json_rational(t.at("total"));
        return mg;
    }
    if (kind == "sorted-strands") {
        reject_unknown(t, {"kind", "finite", "strands"});
        SortedMergeTail sm;
        if (t.contains("finite")) sm.finite = rational_list(t.at("finite"));
        for (const auto& s : field(t, "strands")) {
            sm.strands.push_back({json_rational(field(s, "head")), json_rational(field(s, "ratio"))});
        }
        return sm;
    }
    if (kind == "interleave") {
        reject_unknown(t, {"kind", "parts"});
        InterleaveTail il;
        for (const auto& p : field(t, "parts")) il.parts.push_back(parse_sequence_json(p));
        return il;
    }
    throw Error(ErrorCode::ParseError, "unknown tail kind '" + kind + "'");
}

Json tail_json(const TailKind& tail) {
    return std::visit(
        Overloaded{
            [](const FiniteTail&) { return Json{{"kind", "none"}}; },
            [](const GeometricTail& g) {
                return Json{{"kind", "geometric"}, {"a", rational_json(g.a)}, {"rho", rational_json(g.rho)}};
            },
            [](const PSeriesTail& ps) {
                return Json{{"kind", "pseries"}, {"p", ps.p}, {"start", ps.start}, {"scale", rational_json(ps.scale)}};
            },
            [](const MultigeometricTail& mg) {
                Json ratios = Json::array();
                for (const auto& r : mg.ratios) ratios.push_back(rational_json(r));
                return Json{{"kind", "multigeometric"}, {"ratios", ratios}, {"total", rational_json(mg.total)}};
            },
            [](const SortedMergeTail& sm) {
                Json finite = Json::array();
                for (const auto& f : sm.finite) finite.push_back(rational_json(f));
                Json strands = Json::array();
                for (const auto& s : sm.strands) {
                    strands.push_back({{"head", rational_json(s.head)}, {"ratio", rational_json(s.ratio)}});
                }
                return Json{{"kind", "sorted-strands"}, {"finite", finite}, {"strands", strands}};
            },
            [](const InterleaveTail& il) {
                Json parts = Json::array();
                for (const auto& p : il.parts) parts.push_back(to_json(p));
                return Json{{"kind", "interleave"}, {"parts", parts}};
            },
        },
        tail);
}

std::vector<Preset> build_presets() {
    auto one = [](SequenceSpec s) { return MergedSpec{{std::move(s)}}; };
    const Rational half(1, 2);
    const Rational quarter(1, 4);
    return {
        {"thirds", "powers of 1/3: 1/3, 1/9, 1/27, ...", one(geometric(Rational(1, 3), Rational(1, 3)))},
        {"halves", "powers of 1/2: 1/2, 1/4, 1/8, ...", one(geometric(half, half))},
        {"harmonic", "1, 1/2, 1/3, ... (divergent)", one(harmonic())},
        {"gn", "ratios 9/20 and 6/11, total 5/3: 3/4, 2/4, 3/16, 2/16, ...",
         one(multigeometric({Rational(9, 20), Rational(6, 11)}, Rational(5, 3)))},
        {"kenyon", "digits 6 and 1 in base 4: 6/4, 1/4, 6/16, 1/16, ...",
         one(multigeometric({Rational(9, 14), Rational(3, 10)}, Rational(7, 3)))},
        {"ratios-2-5-3-5", "bi-geometric alpha = 2/5, beta = 3/5, total 1",
         one(bigeometric(Rational(2, 5), Rational(3, 5)))},
        {"two-then-halves", "2, then 1/2, 1/4, 1/8, ...", one(with_prefix({Rational(2)}, geometric(half, half)))},
        {"basel", "1/k^2 for k >= 1", one(pseries(2))},
        {"alternating-halves", "(-1)^k / 2^k for k >= 1",
         MergedSpec{{negate(geometric(half, quarter)), geometric(quarter, quarter)}}},
    };
}

}  // namespace

Json rational_json(const Rational& r) { return to_string(r); }

Rational json_rational(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) {
        return j.is_number_unsigned() ? Rational(Integer(std::to_string(j.get<std::uint64_t>()), 10))
                                      : Rational(Integer(std::to_string(j.get<std::int64_t>()), 10));
    }
    throw Error(ErrorCode::ParseError, "rationals must be \"p/q\" strings or integers, got " + j.dump());
}

SequenceSpec parse_sequence_json(const Json& j) {
    if (!j.is_object()) throw Error(ErrorCode::ParseError, "a sequence spec must be a JSON object");
    reject_unknown(j, {"prefix", "tail", "negated"});
    SequenceSpec spec;
    if (j.contains("prefix")) spec.prefix = rational_list(j.at("prefix"));
    if (j.contains("tail")) spec.tail = parse_tail(j.at("tail"));
    if (j.contains("negated")) {
        if (!j.at("negated").is_boolean()) throw Error(ErrorCode::ParseError, "negated must be a boolean");
        spec.negated = j.at("negated").get<bool>();
    }
    validate(spec);
    return spec;
}

MergedSpec parse_spec_json(const Json& j) {
    try {
        if (j.is_object() && j.contains("merge")) {
            reject_unknown(j, {"merge"});
            MergedSpec out;
            for (const auto& p : j.at("merge")) out.parts.push_back(parse_sequence_json(p));
            if (out.parts.empty()) throw Error(ErrorCode::InvalidSpec, "merge needs at least one part");
            return out;
        }
        return as_merged(parse_sequence_json(j));
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

Json to_json(const SequenceSpec& spec) {
    Json prefix = Json::array();
    for (const auto& t : spec.prefix) prefix.push_back(rational_json(t));
    return Json{{"prefix", prefix}, {"tail", tail_json(spec.tail)}, {"negated", spec.negated}};
}

Json to_json(const MergedSpec& spec) {
    if (spec.parts.size() == 1) return to_json(spec.parts.front());
    Json parts = Json::array();
    for (const auto& p : spec.parts) parts.push_back(to_json(p));
    return Json{{"merge", parts}};
}

const std::vector<Preset>& presets() {
    static const std::vector<Preset> all = build_presets();
    return all;
}

const Preset* find_preset(std::string_view name) {
    for (const auto& p : presets()) {
        if (p.name == name) return &p;
    }
    return nullptr;
}

MergedSpec load_spec(std::string_view arg) {
    if (const Preset* p = find_preset(arg)) return p->spec;
    std::string text;
    if (!arg.empty() && arg.front() == '{') {
        text = arg;
    } else {
        std::ifstream in{std::string(arg)};
        if (!in) {
            throw Error(ErrorCode::IoError, "'" + std::string(arg) + "' is neither a preset nor a readable file");
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    return parse_spec_json(j);
}

SequenceSpec single_positive(const MergedSpec& spec) {
    if (spec.parts.size() != 1 || spec.parts.front().negated) {
        throw Error(ErrorCode::InvalidSpec, "this operation needs a single positive sequence");
    }
    return spec.parts.front();
}

}  // namespace subsum
