#ifndef KINGS_SEATING_HPP
#define KINGS_SEATING_HPP

#include <optional>
#include <string>
#include <vector>

#include "kings/modring.hpp"

namespace kings {

// A problem instance: n couples around 2n+1 seats, couple i's spouses sit
// at clockwise offset d_i with 1 <= d_i <= n. Seats are numbered 0..m-1
// internally; display layers may shift to 1-based.
class Instance {
 public:
  explicit Instance(std::vector<int> distances);

  int n() const { return static_cast<int>(distances_.size()); }
  long long m() const { return 2LL * n() + 1; }
  const std::vector<int>& distances() const { return distances_; }

  bool operator==(const Instance&) const = default;

 private:
  std::vector<int> distances_;
};

// One seat position per couple, each reduced into [0, m).
class Seating {
 public:
  Seating(long long modulus, std::vector<long long> positions);

  long long modulus() const { return modulus_; }
  const std::vector<int>& positions() const { return positions_; }

  bool operator==(const Seating&) const = default;

 private:
  long long modulus_;
  std::vector<int> positions_;
};

// The k residue classes mod k over seats 0..m-1, for a divisor 1 < k < m.
struct OrbitDecomposition {
  long long m = 0;
  long long k = 0;
  std::vector<std::vector<int>> orbits;  // orbits[j] = seats congruent to j mod k, ascending
};

// The counting argument: k orbits of odd size m/k each need an empty seat,
// but only one seat is free in total.
struct OrbitCountingArgument {
  long long seats_per_orbit = 0;  // m/k, odd
  long long orbit_count = 0;      // k
  long long min_empty_per_orbit = 1;
  long long required_empty_seats = 0;  // k
  long long available_empty_seats = 1;

  std::string describe() const;
};

// Structural proof that an all-equal-distance instance with k | m has no
// valid seating. Presence of a witness guarantees infeasibility.
struct InfeasibilityWitness {
  long long k = 0;
  long long orbit_size = 0;   // m/k, odd
  long long orbit_count = 0;  // k, > 1
  OrbitCountingArgument explanation;
};

// [x_1..x_n, x_1+d_1..x_n+d_n] mod m, duplicates preserved.
std::vector<Residue> occupied_seats(const Instance& inst, const Seating& s);

// True iff the 2n occupied seats are pairwise distinct mod m.
bool is_valid(const Instance& inst, const Seating& s);

// Shift every position by c mod m.
Seating rotate(const Seating& s, long long c);

// x_i -> -x_i - d_i mod m; swaps each couple's two seats under negation of
// the circle, so validity is preserved. Involution.
Seating reflect(const Instance& inst, const Seating& s);

OrbitDecomposition orbit_decomposition(long long m, long long k);

// The all-distances-equal-k instance for odd composite m; k defaults to the
// smallest prime divisor and may be overridden by any divisor 1 < k < m.
Instance composite_counterexample(long long m, std::optional<long long> k_override = std::nullopt);

std::optional<InfeasibilityWitness> orbit_infeasibility_witness(const Instance& inst);

}  // namespace kings

#endif
