#include "doctest.h"
#include "subsum/cli.hpp"

#include <cstdlib>
#include <sstream>

using namespace subsum;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "subsum");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

Json invoke_json(std::vector<std::string> args) {
    const auto r = invoke(std::move(args));
    REQUIRE(r.code == kExitOk);
    return Json::parse(r.out);
}

}  // namespace

TEST_CASE("classify") {
    const auto thirds = invoke_json({"classify", "--seq", "thirds"});
    CHECK(thirds["kind"] == "CantorSet");
    CHECK(thirds["certificate"] == "AllExceed");
    const auto halves = invoke_json({"classify", "--seq", "halves"});
    CHECK(halves["kind"] == "FiniteUnion");
    CHECK(halves["exact_count"] == 1);
    CHECK(halves["hull"] == Json::array({"0", "1"}));
    const auto gn = invoke_json({"classify", "--seq", "gn"});
    CHECK(gn["kind"] == "SymmetricCantorval");
    const auto inline_spec = invoke_json({"classify", "--seq", R"({"tail": {"kind": "geometric", "a": "1/3", "rho": "1/3"}})"});
    CHECK(inline_spec == thirds);
}

TEST_CASE("cn") {
    const auto cn = invoke_json({"cn", "--seq", "ratios-2-5-3-5", "--depth", "6"});
    CHECK(cn["components"] == 23);
    CHECK(intervals_from_json(cn["intervals"]).components() == 23);
    const auto thirds = invoke_json({"cn", "--seq", "thirds", "--depth", "2"});
    CHECK(thirds["intervals"] == Json::parse(R"([["0","1/18"],["1/9","1/6"],["1/3","7/18"],["4/9","1/2"]])"));
    CHECK(thirds["total_length"] == "2/9");
    const auto text = invoke({"cn", "--seq", "thirds", "--depth", "1", "--format", "text"});
    CHECK(text.code == kExitOk);
    CHECK(text.out.rfind("0 1/6\n1/3 1/2\n", 0) == 0);
}

TEST_CASE("oracle") {
    const auto agree = invoke_json({"oracle", "--seq", "gn", "--depth", "10"});
    CHECK(agree["agree"] == true);
    const auto probe = invoke_json({"oracle", "--seq", "thirds", "--depth", "6", "--probe", "1/4"});
    CHECK(probe["probe"]["result"] == "ExcludedAtDepth");
    CHECK(probe["probe"]["depth"] == 1);
}

TEST_CASE("fill") {
    const auto f = invoke_json({"fill", "--seq", "harmonic", "--target", "5/6"});
    CHECK(f["runs"] == Json::parse("[[2,3]]"));
    CHECK(f["achieved"] == "5/6");
    CHECK(invoke({"fill", "--seq", "thirds", "--target", "1/2"}).code == kExitUsage);
}

TEST_CASE("presets and render") {
    const auto list = invoke_json({"presets"});
    REQUIRE(list.is_array());
    CHECK(list.size() >= 9);
    const auto svg = invoke({"render", "--seq", "thirds", "--depth", "3"});
    CHECK(svg.code == kExitOk);
    CHECK(svg.out.find("<svg") != std::string::npos);
}

TEST_CASE("usage and computation errors") {
    CHECK(invoke({"classify", "--seq", "thirds", "--bogus"}).code == kExitUsage);
    CHECK(invoke({"classify", "--seq", "no-such-preset"}).code == kExitUsage);
    CHECK(invoke({"cn", "--seq", "harmonic", "--depth", "3"}).code == kExitUsage);
    CHECK(invoke({}).code == kExitUsage);

    ::setenv("SUBSUM_CAP", "64", 1);
    CHECK(default_cap() == 64);
    const auto capped = invoke({"cn", "--seq", "thirds", "--depth", "10"});
    CHECK(capped.code == kExitComputation);
    CHECK(capped.err.find("CapExceeded") != std::string::npos);
    ::unsetenv("SUBSUM_CAP");
    CHECK(default_cap() == kDefaultEndpointCap);
}
