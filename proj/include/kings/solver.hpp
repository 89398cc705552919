#ifndef KINGS_SOLVER_HPP
#define KINGS_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "kings/seating.hpp"

namespace kings {

struct SolverConfig {
  bool fix_first_position = true;     // pin x_1 = 0 (sound by rotation invariance)
  bool use_reflection_pruning = false;  // existence-only mirror prune, needs fix_first_position
  std::optional<std::uint64_t> node_budget;  // >= 1 when present
};

enum class Verdict { feasible, infeasible_exhausted, budget_exceeded };

struct SearchOutcome {
  Verdict verdict = Verdict::infeasible_exhausted;
  std::optional<Seating> witness;  // present iff feasible
  std::uint64_t nodes_explored = 0;
};

// Depth-first search with couples in index order and candidate seats
// ascending; one node = one attempted placement. Occupancy is a 64-bit
// mask, so m <= 63 (resource error beyond). budget_exceeded is reported
// whenever the search was cut short, never as infeasible.
SearchOutcome solve(const Instance& inst, const SolverConfig& cfg = {});

// All valid seatings in lexicographic order, or the x_1 = 0 rotation-class
// representatives. Full count = m * reduced count.
std::vector<Seating> enumerate_all(const Instance& inst, bool up_to_rotation);

// Exhaustive yes/no; equals solve under unlimited budget.
bool is_feasible(const Instance& inst);

}  // namespace kings

#endif
