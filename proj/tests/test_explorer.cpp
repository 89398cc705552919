#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "kings/explorer.hpp"
#include "kings/modring.hpp"

using namespace kings;

namespace {

// C(|pool| + n - 1, n), the stars-and-bars count of size-n multisets
std::uint64_t multiset_count(std::uint64_t pool, std::uint64_t n) {
  std::uint64_t numerator = 1, denominator = 1;
  for (std::uint64_t i = 1; i <= n; ++i) {
    numerator *= pool + n - i;
    denominator *= i;
  }
  return numerator / denominator;
}

}  // namespace

TEST_CASE("multiset enumeration for m = 9") {
  const auto sets = invertible_distance_multisets(9);
  CHECK(sets.size() == 15);
  CHECK(multiset_count(3, 4) == 15);

  CHECK(std::find(sets.begin(), sets.end(), std::vector<int>{1, 1, 1, 1}) != sets.end());
  for (const auto& s : sets) {
    CHECK(s.size() == 4);
    CHECK(std::is_sorted(s.begin(), s.end()));
    for (int d : s) {
      CHECK(d != 3);
      CHECK(inverse_mod(d, 9).has_value());
      CHECK((1 <= d && d <= 4));
    }
  }
  // strictly increasing lexicographic order implies no duplicates
  for (std::size_t i = 1; i < sets.size(); ++i) CHECK(sets[i - 1] < sets[i]);
}

TEST_CASE("multiset enumeration for m = 15") {
  const auto sets = invertible_distance_multisets(15);
  CHECK(sets.size() == 120);
  CHECK(multiset_count(4, 7) == 120);
  for (const auto& s : sets)
    for (int d : s) CHECK((d == 1 || d == 2 || d == 4 || d == 7));
  for (std::size_t i = 1; i < sets.size(); ++i) CHECK(sets[i - 1] < sets[i]);
}

TEST_CASE("the prime case is rejected") {
  CHECK_THROWS_AS(invertible_distance_multisets(7), std::domain_error);
  CHECK_THROWS_AS(survey(7), std::domain_error);
  CHECK_THROWS_AS(survey(10), std::domain_error);
  CHECK_THROWS_AS(find_conjecture_counterexample(11), std::domain_error);
}

TEST_CASE("survey(9) decides every entry exhaustively") {
  const SurveyReport report = survey(9);
  CHECK(report.m == 9);
  CHECK(report.entries.size() == 15);

  const auto sets = invertible_distance_multisets(9);
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    const SurveyEntry& e = report.entries[i];
    CHECK(e.distances == sets[i]);  // canonical order regardless of scheduling
    CHECK(e.verdict != Verdict::budget_exceeded);
    if (e.verdict == Verdict::feasible) {
      REQUIRE(e.witness.has_value());
      CHECK(is_valid(Instance(e.distances), *e.witness));
    } else {
      CHECK_FALSE(e.witness.has_value());
    }
  }

  // the counterexample sublist is exactly the infeasible entries
  const auto infeasible = static_cast<std::size_t>(
      std::count_if(report.entries.begin(), report.entries.end(),
                    [](const SurveyEntry& e) { return e.verdict == Verdict::infeasible_exhausted; }));
  CHECK(report.counterexamples.size() == infeasible);

  // replay: find_conjecture_counterexample agrees with the survey
  const auto first = find_conjecture_counterexample(9);
  if (report.counterexamples.empty())
    CHECK_FALSE(first.has_value());
  else
    CHECK(first.value() == report.counterexamples.front().distances);
}

TEST_CASE("a starved budget yields budget_exceeded, never infeasible") {
  const SurveyReport report = survey(9, 1);
  CHECK(report.entries.size() == 15);
  for (const auto& e : report.entries) CHECK(e.verdict != Verdict::infeasible_exhausted);
  CHECK(report.counterexamples.empty());
}

TEST_CASE("large m requires an explicit budget") {
  CHECK_THROWS_AS(survey(21), std::domain_error);
  const SurveyReport capped = survey(21, 50);
  for (const auto& e : capped.entries)
    if (e.verdict == Verdict::feasible) CHECK(is_valid(Instance(e.distances), *e.witness));
}

TEST_CASE("feasibility depends only on the multiset") {
  // permutations of a sorted tuple all share its verdict (n <= 3, m = 7)
  for (std::vector<int> tuple : {std::vector<int>{1, 2, 3}, {1, 1, 2}, {2, 3, 3}}) {
    std::vector<int> sorted = tuple;
    std::sort(sorted.begin(), sorted.end());
    const bool expected = is_feasible(Instance(sorted));
    do {
      CHECK(is_feasible(Instance(tuple)) == expected);
    } while (std::next_permutation(tuple.begin(), tuple.end()));
  }
  // and a composite spot check on m = 9
  std::vector<int> nine{1, 2, 4, 4};
  const bool expected = is_feasible(Instance(nine));
  do {
    CHECK(is_feasible(Instance(nine)) == expected);
  } while (std::next_permutation(nine.begin(), nine.end()));
}

TEST_CASE("the survey machinery on prime m finds no counterexamples") {
  for (long long p : {5LL, 7LL, 11LL}) {
    const SurveyReport report = detail::survey_any_odd(p, std::nullopt);
    CHECK(report.counterexamples.empty());
    for (const auto& e : report.entries) CHECK(e.verdict == Verdict::feasible);
  }
}

TEST_CASE("worker_thread_limit prefers the environment variable") {
  const unsigned before = worker_thread_limit();
  CHECK(before >= 1);
  setenv("KINGS_TABLE_THREADS", "3", 1);
  CHECK(worker_thread_limit() == 3);
  setenv("KINGS_TABLE_THREADS", "not-a-number", 1);
  CHECK(worker_thread_limit() == before);
  setenv("KINGS_TABLE_THREADS", "1", 1);
  const SurveyReport sequential = survey(9);
  unsetenv("KINGS_TABLE_THREADS");
  const SurveyReport parallel = survey(9);
  REQUIRE(sequential.entries.size() == parallel.entries.size());
  for (std::size_t i = 0; i < sequential.entries.size(); ++i) {
    CHECK(sequential.entries[i].distances == parallel.entries[i].distances);
    CHECK(sequential.entries[i].verdict == parallel.entries[i].verdict);
    CHECK(sequential.entries[i].witness == parallel.entries[i].witness);
    CHECK(sequential.entries[i].nodes == parallel.entries[i].nodes);
  }
}
