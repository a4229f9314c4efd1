#include "doctest.h"
#include "support.hpp"
#include "subsum/error.hpp"
#include "subsum/spec_json.hpp"

#include <cstdio>
#include <fstream>

using namespace subsum;
using testing::R;

namespace {

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::InvariantViolation;
}

std::vector<std::string> first_six(const SequenceSpec& spec) {
    std::vector<std::string> out;
    for (const auto& x : first_terms(spec, 6)) out.push_back(x.get_str());
    return out;
}

}  // namespace

TEST_CASE("parse geometric with prefix") {
    const auto spec = parse_sequence_json(Json::parse(R"({"prefix": ["2"], "tail": {"kind": "geometric", "a": "1/2", "rho": "1/2"}})"));
    CHECK(spec == with_prefix({R("2")}, geometric(R("1/2"), R("1/2"))));
    CHECK(first_six(spec) == std::vector<std::string>{"2", "1/2", "1/4", "1/8", "1/16", "1/32"});
}

TEST_CASE("parse each tail kind") {
    CHECK(parse_sequence_json(Json::parse(R"({"tail": {"kind": "pseries", "p": 2}})")) == pseries(2));
    CHECK(parse_sequence_json(Json::parse(R"({"tail": {"kind": "pseries", "p": 1, "start": 3, "scale": "1/2"}})")) ==
          pseries(1, 3, R("1/2")));
    CHECK(parse_sequence_json(Json::parse(R"({"tail": {"kind": "multigeometric", "ratios": ["9/20", "6/11"], "total": "5/3"}})")) ==
          multigeometric({R("9/20"), R("6/11")}, R("5/3")));
    CHECK(parse_sequence_json(Json::parse(R"({"prefix": [3, "1/2"], "tail": {"kind": "none"}})")) ==
          finite_sequence({R("3"), R("1/2")}));
    const auto inter = parse_sequence_json(Json::parse(
        R"({"tail": {"kind": "interleave", "parts": [{"tail": {"kind": "geometric", "a": 1, "rho": "1/4"}},
                                                     {"tail": {"kind": "geometric", "a": "1/2", "rho": "1/4"}}]}})"));
    CHECK(first_six(inter) == std::vector<std::string>{"1", "1/2", "1/4", "1/8", "1/16", "1/32"});
    const auto merged = parse_spec_json(Json::parse(
        R"({"merge": [{"tail": {"kind": "geometric", "a": "1/4", "rho": "1/4"}},
                      {"negated": true, "tail": {"kind": "geometric", "a": "1/2", "rho": "1/4"}}]})"));
    CHECK(merged.parts.size() == 2);
}

TEST_CASE("round trip through JSON") {
    std::mt19937 rng(71);
    for (int trial = 0; trial < 100; ++trial) {
        const auto spec = testing::random_exact_spec(rng);
        const auto back = parse_sequence_json(Json::parse(to_json(spec).dump()));
        CHECK(back == spec);
        CHECK(first_terms(back, 8) == first_terms(spec, 8));
    }
    for (const auto& preset : presets()) {
        CAPTURE(preset.name);
        CHECK(parse_spec_json(to_json(preset.spec)).parts == preset.spec.parts);
    }
}

TEST_CASE("preset golden prefixes") {
    auto six = [](const char* name) { return first_six(single_positive(find_preset(name)->spec)); };
    CHECK(six("thirds") == std::vector<std::string>{"1/3", "1/9", "1/27", "1/81", "1/243", "1/729"});
    CHECK(six("halves") == std::vector<std::string>{"1/2", "1/4", "1/8", "1/16", "1/32", "1/64"});
    CHECK(six("harmonic") == std::vector<std::string>{"1", "1/2", "1/3", "1/4", "1/5", "1/6"});
    CHECK(six("basel") == std::vector<std::string>{"1", "1/4", "1/9", "1/16", "1/25", "1/36"});
    CHECK(six("gn") == std::vector<std::string>{"3/4", "1/2", "3/16", "1/8", "3/64", "1/32"});
    CHECK(six("ratios-2-5-3-5") == std::vector<std::string>{"2/5", "9/25", "12/125", "54/625", "72/3125", "324/15625"});
    CHECK(six("two-then-halves") == std::vector<std::string>{"2", "1/2", "1/4", "1/8", "1/16", "1/32"});
    CHECK(find_preset("alternating-halves")->spec.parts.size() == 2);
    CHECK(find_preset("no-such-preset") == nullptr);
}

TEST_CASE("load_spec accepts names, inline JSON and files") {
    CHECK(load_spec("thirds").parts == find_preset("thirds")->spec.parts);
    CHECK(single_positive(load_spec(R"({"tail": {"kind": "geometric", "a": "1/3", "rho": "1/3"}})")) ==
          single_positive(find_preset("thirds")->spec));
    const std::string path = "test_spec_json_tmp.json";
    {
        std::ofstream f(path);
        f << R"({"tail": {"kind": "pseries", "p": 2}})";
    }
    CHECK(single_positive(load_spec(path)) == pseries(2));
    std::remove(path.c_str());
    CHECK(code_of([] { load_spec("definitely/not/a/file.json"); }) == ErrorCode::IoError);
}

TEST_CASE("parse errors") {
    CHECK(code_of([] { parse_sequence_json(Json::parse(R"({"tail": {"kind": "geometric", "a": 0.5, "rho": "1/2"}})")); }) ==
          ErrorCode::ParseError);
    CHECK(code_of([] { parse_sequence_json(Json::parse(R"({"tail": {"kind": "spiral"}})")); }) == ErrorCode::ParseError);
    CHECK(code_of([] { parse_sequence_json(Json::parse(R"({"tail": {"kind": "none"}, "colour": "red"})")); }) ==
          ErrorCode::ParseError);
    CHECK(code_of([] { parse_sequence_json(Json::parse(R"({"tail": {"kind": "pseries", "p": "3/2"}})")); }) ==
          ErrorCode::UnsupportedExponent);
    CHECK(code_of([] { parse_sequence_json(Json::parse(R"({"tail": {"kind": "geometric", "a": "1", "rho": "1"}})")); }) ==
          ErrorCode::InvalidSpec);
    CHECK(code_of([] { json_rational(Json::parse(R"("1/0")")); }) == ErrorCode::ParseError);
    CHECK(code_of([] { single_positive(find_preset("alternating-halves")->spec); }) == ErrorCode::InvalidSpec);
}
