#ifndef KINGS_CERTIFICATE_HPP
#define KINGS_CERTIFICATE_HPP

#include <optional>
#include <vector>

#include "kings/algebra.hpp"
#include "kings/modring.hpp"

namespace kings {

// The +-1 value of the target-monomial coefficient of the table polynomial,
// derived from Wilson's theorem and the Fermat sign, optionally cross-checked
// against an honest expansion.
struct Certificate {
  long long p;          // odd prime modulus
  int n;                // couples, (p-1)/2
  Residue wilson_value;  // (2n)! mod p, always p-1
  Residue two_power;     // 2^n mod p, always 1 or p-1
  Residue coeff_value;   // (2n)!/2^n mod p, always 1 or p-1
  Sign sign;             // the Fermat sign of 2^n
  std::optional<Residue> expansion_coeff;  // present when an expansion ran
  bool consistent;       // expansion_coeff (when present) equals coeff_value
};

inline constexpr std::size_t kExpansionTermLimit = 4'000'000;

// coeff_value = wilson_value * (2^n)^{-1} mod p; never zero, so the grid
// argument applies for every odd prime.
Certificate certify(long long p);

// Builds the full table polynomial for the given distances and compares the
// coefficient of x_1^{2n-2}...x_n^{2n-2} against the closed form. An
// inconsistency is reported via consistent = false, never patched over.
// Feasible for p in {5, 7}; larger p may exceed the term limit.
Certificate cross_check_expansion(long long p, const std::vector<int>& distances,
                                  std::size_t term_limit = kExpansionTermLimit);

// deg(f) = sum t_i, the t-coefficient is nonzero, and every grid is larger
// than its t_i: the hypotheses under which a nonvanishing point must exist.
bool cn_hypothesis_check(const SparsePoly& f, const ExpVec& t, const std::vector<int>& grid_sizes);

inline constexpr std::size_t kGridPointLimit = 1'000'000;

// Exhaustive lexicographic scan of the grid product; returns the first point
// where f is nonzero, or absent if f vanishes on the whole grid.
std::optional<std::vector<long long>> cn_verify_small(const SparsePoly& f,
                                                      const std::vector<std::vector<long long>>& grids);

}  // namespace kings

#endif
