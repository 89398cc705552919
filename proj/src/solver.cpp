#include "kings/solver.hpp"

#include <functional>
#include <stdexcept>
#include <string>

#include "kings/errors.hpp"

namespace kings {

namespace {

constexpr int kMaxSeats = 63;

struct Search {
  const Instance& inst;
  long long m;
  bool fix_first;
  bool mirror_prune;
  std::optional<std::uint64_t> budget;

  std::uint64_t occupied = 0;
  std::vector<int> positions;
  std::uint64_t nodes = 0;
  bool budget_hit = false;

  // Returns false once the caller wants no more solutions (or the budget
  // ran out); used to unwind the recursion immediately.
  std::function<bool(const std::vector<int>&)> on_solution;

  explicit Search(const Instance& i) : inst(i), m(i.m()), positions(static_cast<std::size_t>(i.n()), 0) {}

  bool mirror_skips(int value) const {
    // With x_1 = 0, reflect-then-rotate maps solutions onto solutions and
    // sends x_2 = v to mu(v) = d_1 - d_2 - v mod m. Exploring only
    // v <= mu(v) still reaches one member of every mirror pair.
    long long mu = (inst.distances()[0] - inst.distances()[1] - value) % m;
    if (mu < 0) mu += m;
    return mu < value;
  }

  bool dfs(int depth) {
    if (depth == inst.n()) return on_solution(positions);
    const int d = inst.distances()[static_cast<std::size_t>(depth)];
    const int last = (depth == 0 && fix_first) ? 0 : static_cast<int>(m) - 1;
    for (int seat = 0; seat <= last; ++seat) {
      if (depth == 1 && mirror_prune && mirror_skips(seat)) continue;
      if (budget && nodes >= *budget) {
        budget_hit = true;
        return false;
      }
      ++nodes;
      int spouse = seat + d;
      if (spouse >= m) spouse -= static_cast<int>(m);
      const std::uint64_t mask = (1ULL << seat) | (1ULL << spouse);
      if ((occupied & mask) != 0) continue;
      occupied |= mask;
      positions[static_cast<std::size_t>(depth)] = seat;
      const bool keep_going = dfs(depth + 1);
      occupied &= ~mask;
      if (!keep_going) return false;
    }
    return true;
  }
};

void require_searchable(const Instance& inst) {
  if (inst.m() > kMaxSeats)
    throw resource_error("search supports at most " + std::to_string(kMaxSeats) + " seats, got " +
                         std::to_string(inst.m()));
}

}  // namespace

SearchOutcome solve(const Instance& inst, const SolverConfig& cfg) {
  require_searchable(inst);
  if (cfg.node_budget && *cfg.node_budget == 0) throw std::domain_error("node budget must be >= 1");

  Search search(inst);
  search.fix_first = cfg.fix_first_position;
  search.mirror_prune = cfg.use_reflection_pruning && cfg.fix_first_position && inst.n() >= 2;
  search.budget = cfg.node_budget;

  SearchOutcome outcome;
  search.on_solution = [&](const std::vector<int>& pos) {
    outcome.witness = Seating(inst.m(), std::vector<long long>(pos.begin(), pos.end()));
    return false;
  };
  const bool exhausted = search.dfs(0);
  outcome.nodes_explored = search.nodes;
  if (outcome.witness)
    outcome.verdict = Verdict::feasible;
  else if (exhausted && !search.budget_hit)
    outcome.verdict = Verdict::infeasible_exhausted;
  else
    outcome.verdict = Verdict::budget_exceeded;
  return outcome;
}

std::vector<Seating> enumerate_all(const Instance& inst, bool up_to_rotation) {
  require_searchable(inst);
  Search search(inst);
  search.fix_first = up_to_rotation;
  search.mirror_prune = false;

  std::vector<Seating> found;
  search.on_solution = [&](const std::vector<int>& pos) {
    found.emplace_back(inst.m(), std::vector<long long>(pos.begin(), pos.end()));
    return true;
  };
  search.dfs(0);
  return found;
}

bool is_feasible(const Instance& inst) { return solve(inst).verdict == Verdict::feasible; }

}  // namespace kings
