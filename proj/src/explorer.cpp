#include "kings/explorer.hpp"

#include <atomic>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "kings/modring.hpp"

namespace kings {

namespace {

void require_odd_composite(long long m) {
  if (m < 9 || m % 2 == 0 || is_prime(m))
    throw std::domain_error("survey targets odd composite m (the prime case is the theorem), got " +
                            std::to_string(m));
}

std::vector<int> invertible_distances(long long m) {
  const long long n = (m - 1) / 2;
  std::vector<int> pool;
  for (long long d = 1; d <= n; ++d)
    if (std::gcd(d, m) == 1) pool.push_back(static_cast<int>(d));
  return pool;
}

void emit_multisets(const std::vector<int>& pool, int slots, std::size_t from, std::vector<int>& prefix,
                    std::vector<std::vector<int>>& out) {
  if (slots == 0) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t i = from; i < pool.size(); ++i) {
    prefix.push_back(pool[i]);
    emit_multisets(pool, slots - 1, i, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

unsigned worker_thread_limit() {
  if (const char* env = std::getenv("KINGS_TABLE_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

std::vector<std::vector<int>> detail::invertible_distance_multisets_any_odd(long long m) {
  if (m < 3 || m % 2 == 0) throw std::domain_error("modulus must be odd and >= 3");
  const auto pool = invertible_distances(m);
  std::vector<std::vector<int>> multisets;
  std::vector<int> prefix;
  emit_multisets(pool, static_cast<int>((m - 1) / 2), 0, prefix, multisets);
  return multisets;
}

std::vector<std::vector<int>> invertible_distance_multisets(long long m) {
  require_odd_composite(m);
  return detail::invertible_distance_multisets_any_odd(m);
}

SurveyReport detail::survey_any_odd(long long m, std::optional<std::uint64_t> budget) {
  if (m > 15 && !budget)
    throw std::domain_error("m > 15 needs an explicit node budget; undecided entries come back budget_exceeded");

  const auto multisets = invertible_distance_multisets_any_odd(m);
  SurveyReport report;
  report.m = m;
  report.entries.resize(multisets.size());

  SolverConfig cfg;
  cfg.node_budget = budget;
  auto run_entry = [&](std::size_t i) {
    const Instance inst(multisets[i]);
    SearchOutcome outcome = solve(inst, cfg);
    report.entries[i] = SurveyEntry{multisets[i], outcome.verdict, std::move(outcome.witness), outcome.nodes_explored};
  };

  const unsigned threads = std::min<unsigned>(worker_thread_limit(), static_cast<unsigned>(multisets.size()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < multisets.size(); ++i) run_entry(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
      workers.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < multisets.size(); i = next.fetch_add(1)) run_entry(i);
      });
    for (auto& w : workers) w.join();
  }

  for (const auto& entry : report.entries)
    if (entry.verdict == Verdict::infeasible_exhausted) report.counterexamples.push_back(entry);
  return report;
}

SurveyReport survey(long long m, std::optional<std::uint64_t> budget) {
  require_odd_composite(m);
  return detail::survey_any_odd(m, budget);
}

std::optional<std::vector<int>> find_conjecture_counterexample(long long m) {
  require_odd_composite(m);
  for (const auto& distances : detail::invertible_distance_multisets_any_odd(m)) {
    if (solve(Instance(distances)).verdict == Verdict::infeasible_exhausted) return distances;
  }
  return std::nullopt;
}

}  // namespace kings
