#pragma once

#include "subsum/sequence.hpp"

#include "json.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace subsum {

using Json = nlohmann::json;

// Wire format:
//   {"prefix": ["2"], "tail": {"kind": "geometric", "a": "1/2", "rho": "1/2"}, "negated": false}
//   {"merge": [spec, spec, ...]}
// Tail kinds: none, geometric {a, rho}, pseries {p, start, scale},
// multigeometric {ratios, total}, sorted-strands {finite, strands: [{head, ratio}]},
// interleave {parts: [spec, ...]}. Rationals are "p/q" strings or JSON integers.

/// Throws ParseError on malformed JSON, InvalidSpec on invalid values.
MergedSpec parse_spec_json(const Json& j);
SequenceSpec parse_sequence_json(const Json& j);

Json to_json(const SequenceSpec& spec);
/// A single part serializes as a plain spec, several as {"merge": [...]}.
Json to_json(const MergedSpec& spec);

Json rational_json(const Rational& r);
Rational json_rational(const Json& j);

struct Preset {
    std::string name;
    std::string description;
    MergedSpec spec;
};

const std::vector<Preset>& presets();
const Preset* find_preset(std::string_view name);

/// Resolves a --seq argument: a preset name, inline JSON (starts with '{'),
/// or a path to a JSON file. Throws ParseError or IoError.
MergedSpec load_spec(std::string_view arg);

/// The merged spec must have exactly one positive part. Throws InvalidSpec.
SequenceSpec single_positive(const MergedSpec& spec);

}  // namespace subsum
