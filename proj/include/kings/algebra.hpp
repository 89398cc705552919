#ifndef KINGS_ALGEBRA_HPP
#define KINGS_ALGEBRA_HPP

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kings/seating.hpp"

namespace kings {

// Exponent vector of fixed length nvars; nonnegative entries for SparsePoly,
// any sign for LaurentPoly. std::map's lexicographic key order doubles as
// the canonical term order.
using ExpVec = std::vector<int>;

using BigInt = boost::multiprecision::cpp_int;

// Sparse multivariate polynomial over F_p, p prime. Coefficients are stored
// canonically in [0, p) and zero terms are never kept.
class SparsePoly {
 public:
  SparsePoly(long long p, int nvars);  // zero polynomial
  static SparsePoly constant(long long p, int nvars, long long c);
  static SparsePoly monomial(long long p, int nvars, ExpVec e, long long c);

  long long modulus() const { return p_; }
  int nvars() const { return nvars_; }
  const std::map<ExpVec, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Stored coefficient or 0; the query vector must have length nvars.
  long long coefficient(const ExpVec& e) const;

  // Max exponent sum over stored terms; the zero polynomial has no degree.
  int total_degree() const;

  // The homogeneous component of degree d; d must equal total_degree().
  SparsePoly top_homogeneous_part(int d) const;

  long long evaluate(const std::vector<long long>& point) const;

  // Adds c * x^e into this polynomial, reducing mod p and dropping zeros.
  void add_term(ExpVec e, long long c);

  // One term per line, "coeff e_1 ... e_n", lexicographic in the exponents.
  std::string dump() const;

  bool operator==(const SparsePoly&) const = default;

  friend SparsePoly operator+(const SparsePoly& f, const SparsePoly& g);
  friend SparsePoly operator-(const SparsePoly& f, const SparsePoly& g);
  friend SparsePoly operator*(const SparsePoly& f, const SparsePoly& g);

 private:
  long long p_;
  int nvars_;
  std::map<ExpVec, long long> terms_;
};

// Product with a cap on the intermediate term count; 0 means unlimited.
// Exceeding the cap raises resource_error.
SparsePoly mul_guarded(const SparsePoly& f, const SparsePoly& g, std::size_t term_limit);

// Laurent polynomial with exact integer coefficients; exponents may be
// negative and no reduction ever happens.
class LaurentPoly {
 public:
  explicit LaurentPoly(int nvars);
  static LaurentPoly constant(int nvars, BigInt c);
  static LaurentPoly monomial(int nvars, ExpVec e, BigInt c);

  int nvars() const { return nvars_; }
  const std::map<ExpVec, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  BigInt constant_term() const;

  void add_term(ExpVec e, BigInt c);

  bool operator==(const LaurentPoly&) const = default;

  friend LaurentPoly operator+(const LaurentPoly& f, const LaurentPoly& g);
  friend LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g);

 private:
  int nvars_;
  std::map<ExpVec, BigInt> terms_;
};

LaurentPoly mul_guarded(const LaurentPoly& f, const LaurentPoly& g, std::size_t term_limit);

// The fully expanded product over couple pairs i < j of
//   (x_i - x_j)(x_i + d_i - x_j)(x_i - x_j - d_j)(x_i + d_i - x_j - d_j)
// over F_m; nonzero exactly at valid seatings. Total degree is n(2n-2).
// m must be prime. Intended for n <= 4; term_limit 0 = unlimited.
SparsePoly build_king_poly(const Instance& inst, std::size_t term_limit = 0);

// Expanded prod_{i<j} (x_i - x_j)^4 over F_p: the top-degree part of the
// table polynomial for every distance vector.
SparsePoly build_vandermonde_fourth(int n, long long p);

// Exponents a_i of the Laurent product prod_{i != j} (1 - x_i/x_j)^{a_i}.
class DysonSpec {
 public:
  explicit DysonSpec(std::vector<int> a);
  const std::vector<int>& a() const { return a_; }
  int n() const { return static_cast<int>(a_.size()); }

 private:
  std::vector<int> a_;
};

// Constant term by full Laurent expansion over the integers; never consults
// the closed form. Intended for n <= 4, a_i <= 3; term_limit 0 = unlimited.
BigInt dyson_constant_term_bruteforce(const DysonSpec& spec, std::size_t term_limit = 0);

// The multinomial (sum a_i)! / prod a_i!.
BigInt dyson_closed_form(const DysonSpec& spec);

BigInt factorial_exact(unsigned long long k);

}  // namespace kings

#endif
