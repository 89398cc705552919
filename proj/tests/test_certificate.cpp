#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kings/certificate.hpp"
#include "kings/errors.hpp"
#include "kings/solver.hpp"

using namespace kings;

namespace {

std::vector<std::vector<int>> all_distance_tuples(int n) {
  std::vector<std::vector<int>> tuples{{}};
  for (int slot = 0; slot < n; ++slot) {
    std::vector<std::vector<int>> next;
    for (const auto& t : tuples)
      for (int d = 1; d <= n; ++d) {
        auto copy = t;
        copy.push_back(d);
        next.push_back(std::move(copy));
      }
    tuples = std::move(next);
  }
  return tuples;
}

}  // namespace

TEST_CASE("certify pins the textbook values") {
  const Certificate c5 = certify(5);
  CHECK(c5.n == 2);
  CHECK(c5.wilson_value.value() == 4);
  CHECK(c5.two_power.value() == 4);
  CHECK(c5.coeff_value.value() == 1);
  CHECK(c5.sign == Sign::minus);
  CHECK(c5.consistent);
  CHECK_FALSE(c5.expansion_coeff.has_value());

  const Certificate c7 = certify(7);
  CHECK(c7.wilson_value.value() == 6);
  CHECK(c7.two_power.value() == 1);
  CHECK(c7.coeff_value.value() == 6);
  CHECK(c7.sign == Sign::plus);

  const Certificate c3 = certify(3);
  CHECK(c3.coeff_value.value() == 1);

  CHECK_THROWS_AS(certify(9), std::domain_error);
  CHECK_THROWS_AS(certify(2), std::domain_error);
}

TEST_CASE("coeff_value is +-1 for every odd prime below 50, on three routes") {
  for (long long p = 3; p < 50; p += 2) {
    if (!is_prime(p)) continue;
    const Certificate cert = certify(p);
    CHECK((cert.coeff_value.value() == 1 || cert.coeff_value.value() == p - 1));
    CHECK(cert.wilson_value.value() == p - 1);
    CHECK((cert.two_power.value() == 1 || cert.two_power.value() == p - 1));

    // test-only oracle: the integer (2n)!/2^n reduced mod p
    const auto n = static_cast<unsigned long long>(cert.n);
    const BigInt exact = factorial_exact(2 * n) / (BigInt(1) << n);
    CHECK(BigInt(cert.coeff_value.value()) == exact % p);

    // sign law
    CHECK(cert.sign == fermat_sign(p));
    CHECK((cert.coeff_value.value() == 1) == (cert.two_power == cert.wilson_value));
  }
}

TEST_CASE("expansion cross-check, exhaustive for p = 5") {
  for (const auto& d : all_distance_tuples(2)) {
    const Certificate cert = cross_check_expansion(5, d);
    REQUIRE(cert.expansion_coeff.has_value());
    CHECK(cert.expansion_coeff->value() == 1);
    CHECK(cert.consistent);
  }
}

TEST_CASE("expansion cross-check, sampled for p = 7") {
  const auto tuples = all_distance_tuples(3);
  int sampled = 0;
  for (std::size_t i = 0; i < tuples.size(); i += 2, ++sampled) {  // 14 of 27
    const Certificate cert = cross_check_expansion(7, tuples[i]);
    REQUIRE(cert.expansion_coeff.has_value());
    CHECK(cert.expansion_coeff->value() == 6);  // 90 mod 7
    CHECK(cert.consistent);
  }
  CHECK(sampled >= 10);
}

TEST_CASE("cross-check validates its inputs") {
  CHECK_THROWS_AS(cross_check_expansion(5, {1, 2, 3}), std::domain_error);
  CHECK_THROWS_AS(cross_check_expansion(9, {1, 2, 3, 4}), std::domain_error);
  // a starved term limit is a resource error, never an inconsistency
  CHECK_THROWS_AS(cross_check_expansion(7, {1, 2, 3}, 5), resource_error);
}

TEST_CASE("cn_hypothesis_check") {
  const SparsePoly f = build_king_poly(Instance({1, 1}));
  CHECK(cn_hypothesis_check(f, {2, 2}, {5, 5}));
  CHECK_FALSE(cn_hypothesis_check(f, {2, 2}, {2, 2}));  // grids not larger than t_i
  CHECK_FALSE(cn_hypothesis_check(f, {3, 1}, {5, 5}));  // right degree sum, wrong monomial
  CHECK_FALSE(cn_hypothesis_check(f, {1, 1}, {5, 5}));  // degree sum mismatch

  const SparsePoly one = SparsePoly::constant(5, 2, 1);
  CHECK(cn_hypothesis_check(one, {0, 0}, {1, 1}));
  CHECK_FALSE(cn_hypothesis_check(SparsePoly(5, 2), {0, 0}, {1, 1}));
  CHECK_THROWS_AS(cn_hypothesis_check(f, {2, 2, 2}, {5, 5, 5}), std::domain_error);
}

TEST_CASE("cn_verify_small scans the grid in lexicographic order") {
  const SparsePoly f = build_king_poly(Instance({1, 2}));
  const std::vector<std::vector<long long>> full{{0, 1, 2, 3, 4}, {0, 1, 2, 3, 4}};
  const auto witness = cn_verify_small(f, full);
  REQUIRE(witness.has_value());
  CHECK(is_valid(Instance({1, 2}), Seating(5, *witness)));
  // lexicographically first: no earlier point evaluates nonzero
  for (long long a = 0; a <= (*witness)[0]; ++a)
    for (long long b = 0; b < 5; ++b) {
      if (a == (*witness)[0] && b >= (*witness)[1]) break;
      CHECK(f.evaluate({a, b}) == 0);
    }

  CHECK_FALSE(cn_verify_small(SparsePoly(5, 2), full).has_value());
  const SparsePoly x1 = SparsePoly::monomial(5, 1, {1}, 1);
  CHECK_FALSE(cn_verify_small(x1, {{0}}).has_value());
  CHECK(cn_verify_small(x1, {{0, 1}}).value() == std::vector<long long>{1});

  CHECK_THROWS_AS(cn_verify_small(f, {{0}}), std::domain_error);
  const std::vector<long long> big(2000, 0);
  CHECK_THROWS_AS(cn_verify_small(f, {big, big}), resource_error);
}

TEST_CASE("cn round trip: hypotheses hold and the witness seats the couples") {
  for (long long p : {5LL, 7LL}) {
    const int n = static_cast<int>((p - 1) / 2);
    std::vector<long long> field;
    for (long long v = 0; v < p; ++v) field.push_back(v);
    const std::vector<std::vector<long long>> grids(static_cast<std::size_t>(n), field);
    const std::vector<int> grid_sizes(static_cast<std::size_t>(n), static_cast<int>(p));
    const ExpVec target(static_cast<std::size_t>(n), 2 * n - 2);

    const auto tuples = all_distance_tuples(n);
    for (std::size_t i = 0; i < tuples.size(); i += (n == 2 ? 1 : 3)) {
      const Instance inst(tuples[i]);
      const SparsePoly f = build_king_poly(inst);
      CHECK(cn_hypothesis_check(f, target, grid_sizes));
      const auto witness = cn_verify_small(f, grids);
      REQUIRE(witness.has_value());
      CHECK(is_valid(inst, Seating(p, *witness)));
    }
  }
}
