#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prefalloc/allocation.hpp"
#include "prefalloc/instance.hpp"

namespace prefalloc::junction {

/// What a minimal allocation does around a junction v of agent i.
enum class JunctionCase : std::uint8_t {
  AllocatedSelf = 1,         // v goes to i
  PredecessorAllocated = 2,  // some predecessor of v goes to i
  SuccessorAllocated = 3,    // some successor of v goes to i
  NoneInCone = 4,            // nothing comparable to v goes to i
};

struct JunctionSlot {
  AgentIndex agent;
  ItemIndex item;

  friend bool operator==(const JunctionSlot&, const JunctionSlot&) = default;
};

/// (agent, junction) pairs sorted by agent, then item. Their count is gamma.
std::vector<JunctionSlot> junction_slots(const Instance& inst);

struct CaseAssignment {
  std::vector<JunctionSlot> slots;
  std::vector<JunctionCase> cases;  // parallel to slots

  /// Junctions of `agent` tagged with `c`, ascending.
  std::vector<ItemIndex> with(AgentIndex agent, JunctionCase c) const;
};

/// 4^gamma, saturating.
std::uint64_t case_count(std::size_t gamma);

/// The index-th assignment of a mixed-radix counter whose first slot varies
/// slowest.
CaseAssignment case_at(const std::vector<JunctionSlot>& slots, std::uint64_t index);

/// All 4^gamma assignments in counter order. Throws SizeLimitError when
/// gamma exceeds `gamma_limit`.
std::vector<CaseAssignment> enumerate_cases(const Instance& inst, std::size_t gamma_limit = 6);

/// Empty when the assignment passes every consistency test, otherwise the
/// first failed test.
std::optional<std::string> check_feasibility(const Instance& inst, const CaseAssignment& ca);

/// Maximal run of non-junction vertices of one agent's graph, listed from
/// upstream to downstream, with the junctions (if any) just before and after.
struct Segment {
  AgentIndex agent = 0;
  std::vector<ItemIndex> items;
  std::optional<ItemIndex> start;
  std::optional<ItemIndex> end;
};

/// Segments of one agent, ordered by their first item.
std::vector<Segment> segments(const Instance& inst, AgentIndex agent);

struct PathCatalog {
  /// Segments whose items may still go to their agent.
  std::vector<Segment> segments;
  /// Each entry lists segments of which at least one must receive an item.
  std::vector<std::vector<std::size_t>> mandatory;
  /// Remaining segments, free to receive an item or not.
  std::vector<std::size_t> optional;
};

/// One catalog per feasible combination of guesses on (case-3, case-2)
/// junction pairs joined by a segment. Infeasible guesses are left out.
std::vector<PathCatalog> build_path_catalogs(const Instance& inst, const CaseAssignment& ca);

struct FlowOutcome {
  std::int64_t profit = 0;
  /// Segment items chosen by the flow (case-1 junctions are not included).
  Allocation allocation;
};

/// Max-profit flow over the catalog: each unassigned item at most once,
/// each segment at most one item, each mandatory group at least one.
std::optional<FlowOutcome> solve_flow(const Instance& inst, const CaseAssignment& ca, const PathCatalog& catalog);

struct JunctionOptions {
  std::size_t gamma_limit = 6;
};

struct JunctionResult {
  std::int64_t value = 0;
  Allocation allocation;
  std::uint64_t cases = 0;
  std::uint64_t feasible_cases = 0;
  std::uint64_t catalogs = 0;
};

/// Min-sum dissatisfaction by enumerating junction cases and solving one
/// flow per catalog. Each candidate allocation is evaluated directly; the
/// first best one wins and is returned in minimal form.
JunctionResult minsum_junction_fpt(const Instance& inst, const JunctionOptions& options = {});

}  // namespace prefalloc::junction
