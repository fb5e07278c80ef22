#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "prefalloc/allocation.hpp"
#include "prefalloc/evaluate.hpp"
#include "prefalloc/instance.hpp"

namespace prefalloc {

struct ParsedInstance {
  Instance instance;
  std::vector<std::string> warnings;
};

/// Reads the instance JSON format:
///
///   { "items": ["a", "b"],
///     "agents": [ {"id": "1", "items": ["a", "b"], "arcs": [["a", "b"]]} ] }
///
/// Throws ParseError carrying a byte offset for syntax errors and a JSON
/// pointer for schema errors (including cycles).
ParsedInstance parse_instance(std::string_view text);

/// Canonical form: items and agents sorted by id, agent items and arcs
/// sorted, two-space indentation, trailing newline.
std::string serialize_instance(const Instance& inst);

/// Reads `{ "allocation": { "<agent>": ["<item>", ...], ... } }`. Only the
/// shape is checked here; use validate_allocation / resolve_allocation for
/// semantic checks.
NamedAllocation parse_allocation(std::string_view text);
std::string serialize_allocation(const Instance& inst, const Allocation& alloc);

/// `{ "profile": {"<agent>": d, ...}, "sum": s, "max": m }`
std::string serialize_profile(const Instance& inst, const DissatisfactionProfile& profile);

}  // namespace prefalloc
