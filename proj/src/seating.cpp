#include "kings/seating.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kings {

namespace {

void require_conforms(const Instance& inst, const Seating& s) {
  if (s.modulus() != inst.m() || static_cast<int>(s.positions().size()) != inst.n())
    throw std::domain_error("seating does not conform to instance (n=" + std::to_string(inst.n()) +
                            ", m=" + std::to_string(inst.m()) + ")");
}

long long smallest_prime_divisor(long long m) {
  for (long long d = 3; d * d <= m; d += 2)
    if (m % d == 0) return d;
  return m;
}

}  // namespace

Instance::Instance(std::vector<int> distances) : distances_(std::move(distances)) {
  if (distances_.empty()) throw std::domain_error("instance needs at least one couple");
  int couples = n();
  for (int d : distances_)
    if (d < 1 || d > couples)
      throw std::domain_error("distance " + std::to_string(d) + " outside [1, " + std::to_string(couples) + "]");
}

Seating::Seating(long long modulus, std::vector<long long> positions) : modulus_(modulus) {
  if (modulus < 3 || modulus % 2 == 0) throw std::domain_error("seat count must be odd and >= 3");
  positions_.reserve(positions.size());
  for (long long p : positions) {
    long long r = p % modulus;
    if (r < 0) r += modulus;
    positions_.push_back(static_cast<int>(r));
  }
}

std::vector<Residue> occupied_seats(const Instance& inst, const Seating& s) {
  require_conforms(inst, s);
  const long long m = inst.m();
  std::vector<Residue> seats;
  seats.reserve(2 * inst.n());
  for (int x : s.positions()) seats.emplace_back(x, m);
  for (int i = 0; i < inst.n(); ++i) seats.emplace_back(s.positions()[i] + inst.distances()[i], m);
  return seats;
}

bool is_valid(const Instance& inst, const Seating& s) {
  const auto seats = occupied_seats(inst, s);
  std::vector<bool> seen(static_cast<std::size_t>(inst.m()), false);
  for (const Residue& r : seats) {
    auto idx = static_cast<std::size_t>(r.value());
    if (seen[idx]) return false;
    seen[idx] = true;
  }
  return true;
}

Seating rotate(const Seating& s, long long c) {
  std::vector<long long> shifted(s.positions().begin(), s.positions().end());
  for (long long& x : shifted) x += c;
  return Seating(s.modulus(), std::move(shifted));
}

Seating reflect(const Instance& inst, const Seating& s) {
  require_conforms(inst, s);
  std::vector<long long> mirrored;
  mirrored.reserve(s.positions().size());
  for (int i = 0; i < inst.n(); ++i) mirrored.push_back(-static_cast<long long>(s.positions()[i]) - inst.distances()[i]);
  return Seating(s.modulus(), std::move(mirrored));
}

OrbitDecomposition orbit_decomposition(long long m, long long k) {
  if (m < 3 || m % 2 == 0) throw std::domain_error("orbit decomposition needs odd m >= 3");
  if (k <= 1 || k >= m || m % k != 0)
    throw std::domain_error("k = " + std::to_string(k) + " is not a divisor of m = " + std::to_string(m) +
                            " with 1 < k < m");
  OrbitDecomposition dec;
  dec.m = m;
  dec.k = k;
  dec.orbits.assign(static_cast<std::size_t>(k), {});
  for (long long seat = 0; seat < m; ++seat) dec.orbits[static_cast<std::size_t>(seat % k)].push_back(static_cast<int>(seat));
  return dec;
}

Instance composite_counterexample(long long m, std::optional<long long> k_override) {
  if (m < 9 || m % 2 == 0 || is_prime(m))
    throw std::domain_error("composite counterexample needs odd composite m >= 9, got " + std::to_string(m));
  long long k = k_override.value_or(smallest_prime_divisor(m));
  if (k <= 1 || k >= m || m % k != 0)
    throw std::domain_error("k = " + std::to_string(k) + " does not divide m = " + std::to_string(m) +
                            " with 1 < k < m");
  // Any proper divisor of odd m is <= m/3 < n+1, so k is a legal distance.
  auto n = static_cast<std::size_t>((m - 1) / 2);
  return Instance(std::vector<int>(n, static_cast<int>(k)));
}

std::optional<InfeasibilityWitness> orbit_infeasibility_witness(const Instance& inst) {
  const auto& d = inst.distances();
  if (!std::all_of(d.begin(), d.end(), [&](int x) { return x == d[0]; })) return std::nullopt;
  const long long k = d[0];
  const long long m = inst.m();
  if (k <= 1 || k >= m || m % k != 0) return std::nullopt;

  InfeasibilityWitness w;
  w.k = k;
  w.orbit_size = m / k;
  w.orbit_count = k;
  w.explanation.seats_per_orbit = w.orbit_size;
  w.explanation.orbit_count = k;
  w.explanation.required_empty_seats = k;
  return w;
}

std::string OrbitCountingArgument::describe() const {
  std::ostringstream os;
  os << "every couple spans seats k apart, so each of the " << orbit_count << " orbits (seats congruent mod k) is "
     << "filled in pairs; an orbit of odd size " << seats_per_orbit << " must leave at least " << min_empty_per_orbit
     << " seat empty, requiring " << required_empty_seats << " empty seats, but only " << available_empty_seats
     << " seat is free";
  return os.str();
}

}  // namespace kings
