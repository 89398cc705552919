#include "kings/certificate.hpp"

#include <stdexcept>
#include <string>

#include "kings/errors.hpp"

namespace kings {

namespace {

void require_odd_prime(long long p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p))
    throw std::domain_error("certificate requires an odd prime, got " + std::to_string(p));
}

}  // namespace

Certificate certify(long long p) {
  require_odd_prime(p);
  const int n = static_cast<int>((p - 1) / 2);
  const Residue wilson = factorial_mod(static_cast<unsigned long long>(2 * n), p);
  const Residue two_power = pow_mod(2, static_cast<unsigned long long>(n), p);
  // (2n)!/2^n mod p, taken as (-1) * (2^n)^{-1}; 2^n is invertible mod p.
  const Residue coeff = wilson * two_power.inverse().value();
  return Certificate{p, n, wilson, two_power, coeff, fermat_sign(p), std::nullopt, true};
}

Certificate cross_check_expansion(long long p, const std::vector<int>& distances, std::size_t term_limit) {
  Certificate cert = certify(p);
  const Instance inst(distances);
  if (inst.m() != p)
    throw std::domain_error("expected " + std::to_string((p - 1) / 2) + " distances for p = " + std::to_string(p));

  const SparsePoly f = build_king_poly(inst, term_limit);
  const ExpVec target(static_cast<std::size_t>(cert.n), 2 * cert.n - 2);
  cert.expansion_coeff = Residue(f.coefficient(target), p);
  cert.consistent = (*cert.expansion_coeff == cert.coeff_value);
  return cert;
}

bool cn_hypothesis_check(const SparsePoly& f, const ExpVec& t, const std::vector<int>& grid_sizes) {
  if (static_cast<int>(t.size()) != f.nvars() || grid_sizes.size() != t.size())
    throw std::domain_error("degree bounds and grid sizes must match the variable count");
  if (f.is_zero()) return false;

  int degree_sum = 0;
  for (int ti : t) {
    if (ti < 0) return false;
    degree_sum += ti;
  }
  if (f.total_degree() != degree_sum) return false;
  if (f.coefficient(t) == 0) return false;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (grid_sizes[i] <= t[i]) return false;
  return true;
}

std::optional<std::vector<long long>> cn_verify_small(const SparsePoly& f,
                                                      const std::vector<std::vector<long long>>& grids) {
  if (static_cast<int>(grids.size()) != f.nvars())
    throw std::domain_error("need one grid per variable");

  unsigned long long points = 1;
  for (const auto& grid : grids) {
    if (grid.empty()) return std::nullopt;
    points *= grid.size();
    if (points > kGridPointLimit)
      throw resource_error("grid has more than " + std::to_string(kGridPointLimit) + " points");
  }

  const auto nvars = grids.size();
  std::vector<std::size_t> index(nvars, 0);
  std::vector<long long> point(nvars);
  while (true) {
    for (std::size_t v = 0; v < nvars; ++v) point[v] = grids[v][index[v]];
    if (f.evaluate(point) != 0) return point;
    // odometer, last coordinate fastest: lexicographic point order
    std::size_t v = nvars;
    while (v > 0) {
      --v;
      if (++index[v] < grids[v].size()) break;
      index[v] = 0;
      if (v == 0) return std::nullopt;
    }
  }
}

}  // namespace kings
