#ifndef KINGS_EXPLORER_HPP
#define KINGS_EXPLORER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "kings/solver.hpp"

namespace kings {

struct SurveyEntry {
  std::vector<int> distances;  // sorted multiset
  Verdict verdict = Verdict::budget_exceeded;
  std::optional<Seating> witness;
  std::uint64_t nodes = 0;
};

// Per-multiset feasibility verdicts for one odd composite modulus. An
// infeasible entry would refute the invertible-distances conjecture; it is
// reported as data, never as a failure.
struct SurveyReport {
  long long m = 0;
  std::vector<SurveyEntry> entries;          // canonical enumeration order
  std::vector<SurveyEntry> counterexamples;  // the infeasible sublist
};

// All size-n multisets over the distances in [1, n] coprime to m, as
// sorted vectors in increasing lexicographic order, each exactly once.
std::vector<std::vector<int>> invertible_distance_multisets(long long m);

// One exhaustively decided entry per multiset. Unlimited search for m <= 15;
// beyond that a node budget is required and capped entries come back
// budget_exceeded (never infeasible). Entries may be solved in parallel, up
// to worker_thread_limit() threads; the report order is always canonical.
SurveyReport survey(long long m, std::optional<std::uint64_t> budget = std::nullopt);

// First infeasible multiset in canonical order, infeasibility proven by
// exhaustion, or absent.
std::optional<std::vector<int>> find_conjecture_counterexample(long long m);

// Parallelism cap: KINGS_TABLE_THREADS when set to a positive integer,
// otherwise the hardware concurrency (at least 1).
unsigned worker_thread_limit();

namespace detail {

// Survey core without the composite-modulus gate, so the same machinery can
// be pointed at prime m where the feasibility theorem applies.
SurveyReport survey_any_odd(long long m, std::optional<std::uint64_t> budget);

std::vector<std::vector<int>> invertible_distance_multisets_any_odd(long long m);

}  // namespace detail

}  // namespace kings

#endif
