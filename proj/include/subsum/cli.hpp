#pragma once

#include "subsum/cn_engine.hpp"
#include "subsum/classifier.hpp"
#include "subsum/greedy_filler.hpp"
#include "subsum/spec_json.hpp"

#include <iosfwd>

namespace subsum {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitComputation = 2, kExitOracleDiff = 3 };

/// Entry point of the `subsum` tool; machine output goes to `out`,
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Endpoint cap from SUBSUM_CAP, else kDefaultEndpointCap.
std::size_t default_cap();

Json enclosure_json(const TailEnclosure& e);
Json intervals_json(const IntervalUnion& u);
IntervalUnion intervals_from_json(const Json& j);
Json cn_summary_json(const CnResult& cn);
Json verdict_json(const Verdict& v);
Json fill_json(const FillResult& f);

}  // namespace subsum
