#include "kings/algebra.hpp"

#include <sstream>
#include <stdexcept>

#include "kings/errors.hpp"
#include "kings/modring.hpp"

namespace kings {

namespace {

long long mod_reduce(long long v, long long p) {
  long long r = v % p;
  if (r < 0) r += p;
  return r;
}

long long mod_mul(long long a, long long b, long long p) {
  return static_cast<long long>(
      static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b) % static_cast<unsigned __int128>(p));
}

void require_compatible(const SparsePoly& f, const SparsePoly& g) {
  if (f.modulus() != g.modulus() || f.nvars() != g.nvars())
    throw std::domain_error("polynomial operands disagree on modulus or variable count");
}

void require_compatible(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.nvars() != g.nvars()) throw std::domain_error("Laurent operands disagree on variable count");
}

void check_limit(std::size_t size, std::size_t limit) {
  if (limit != 0 && size > limit)
    throw resource_error("expansion exceeded the term limit of " + std::to_string(limit));
}

}  // namespace

// ---------------------------------------------------------------- SparsePoly

SparsePoly::SparsePoly(long long p, int nvars) : p_(p), nvars_(nvars) {
  if (!is_prime(p)) throw std::domain_error("coefficient modulus must be prime, got " + std::to_string(p));
  if (nvars < 1) throw std::domain_error("polynomial needs at least one variable");
}

SparsePoly SparsePoly::constant(long long p, int nvars, long long c) {
  SparsePoly f(p, nvars);
  f.add_term(ExpVec(static_cast<std::size_t>(nvars), 0), c);
  return f;
}

SparsePoly SparsePoly::monomial(long long p, int nvars, ExpVec e, long long c) {
  SparsePoly f(p, nvars);
  f.add_term(std::move(e), c);
  return f;
}

void SparsePoly::add_term(ExpVec e, long long c) {
  if (static_cast<int>(e.size()) != nvars_) throw std::domain_error("exponent vector length mismatch");
  for (int exp : e)
    if (exp < 0) throw std::domain_error("SparsePoly exponents must be nonnegative");
  c = mod_reduce(c, p_);
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(e), c);
  if (!inserted) {
    it->second = mod_reduce(it->second + c, p_);
    if (it->second == 0) terms_.erase(it);
  }
}

long long SparsePoly::coefficient(const ExpVec& e) const {
  if (static_cast<int>(e.size()) != nvars_) throw std::domain_error("exponent vector length mismatch");
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

int SparsePoly::total_degree() const {
  if (terms_.empty()) throw std::domain_error("the zero polynomial has no total degree");
  int best = 0;
  for (const auto& [e, c] : terms_) {
    int sum = 0;
    for (int exp : e) sum += exp;
    if (sum > best) best = sum;
  }
  return best;
}

SparsePoly SparsePoly::top_homogeneous_part(int d) const {
  if (d != total_degree())
    throw std::domain_error("requested degree " + std::to_string(d) + " is not the total degree");
  SparsePoly top(p_, nvars_);
  for (const auto& [e, c] : terms_) {
    int sum = 0;
    for (int exp : e) sum += exp;
    if (sum == d) top.terms_.emplace(e, c);
  }
  return top;
}

long long SparsePoly::evaluate(const std::vector<long long>& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw std::domain_error("evaluation point length mismatch");
  long long acc = 0;
  for (const auto& [e, c] : terms_) {
    long long term = c;
    for (int v = 0; v < nvars_; ++v)
      if (e[static_cast<std::size_t>(v)] != 0)
        term = mod_mul(term, pow_mod(point[static_cast<std::size_t>(v)],
                                     static_cast<unsigned long long>(e[static_cast<std::size_t>(v)]), p_)
                                 .value(),
                       p_);
    acc = mod_reduce(acc + term, p_);
  }
  return acc;
}

std::string SparsePoly::dump() const {
  std::ostringstream os;
  for (const auto& [e, c] : terms_) {
    os << c;
    for (int exp : e) os << ' ' << exp;
    os << '\n';
  }
  return os.str();
}

SparsePoly operator+(const SparsePoly& f, const SparsePoly& g) {
  require_compatible(f, g);
  SparsePoly sum = f;
  for (const auto& [e, c] : g.terms_) sum.add_term(e, c);
  return sum;
}

SparsePoly operator-(const SparsePoly& f, const SparsePoly& g) {
  require_compatible(f, g);
  SparsePoly diff = f;
  for (const auto& [e, c] : g.terms_) diff.add_term(e, g.p_ - c);
  return diff;
}

SparsePoly mul_guarded(const SparsePoly& f, const SparsePoly& g, std::size_t term_limit) {
  require_compatible(f, g);
  SparsePoly prod(f.modulus(), f.nvars());
  ExpVec e(static_cast<std::size_t>(f.nvars()), 0);
  for (const auto& [ef, cf] : f.terms()) {
    for (const auto& [eg, cg] : g.terms()) {
      for (std::size_t v = 0; v < e.size(); ++v) e[v] = ef[v] + eg[v];
      prod.add_term(e, mod_mul(cf, cg, f.modulus()));
      check_limit(prod.terms().size(), term_limit);
    }
  }
  return prod;
}

SparsePoly operator*(const SparsePoly& f, const SparsePoly& g) { return mul_guarded(f, g, 0); }

// --------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(int nvars) : nvars_(nvars) {
  if (nvars < 1) throw std::domain_error("polynomial needs at least one variable");
}

LaurentPoly LaurentPoly::constant(int nvars, BigInt c) {
  LaurentPoly f(nvars);
  f.add_term(ExpVec(static_cast<std::size_t>(nvars), 0), std::move(c));
  return f;
}

LaurentPoly LaurentPoly::monomial(int nvars, ExpVec e, BigInt c) {
  LaurentPoly f(nvars);
  f.add_term(std::move(e), std::move(c));
  return f;
}

void LaurentPoly::add_term(ExpVec e, BigInt c) {
  if (static_cast<int>(e.size()) != nvars_) throw std::domain_error("exponent vector length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(e), std::move(c));
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt LaurentPoly::constant_term() const {
  auto it = terms_.find(ExpVec(static_cast<std::size_t>(nvars_), 0));
  return it == terms_.end() ? BigInt(0) : it->second;
}

LaurentPoly operator+(const LaurentPoly& f, const LaurentPoly& g) {
  require_compatible(f, g);
  LaurentPoly sum = f;
  for (const auto& [e, c] : g.terms_) sum.add_term(e, c);
  return sum;
}

LaurentPoly mul_guarded(const LaurentPoly& f, const LaurentPoly& g, std::size_t term_limit) {
  require_compatible(f, g);
  LaurentPoly prod(f.nvars());
  ExpVec e(static_cast<std::size_t>(f.nvars()), 0);
  for (const auto& [ef, cf] : f.terms()) {
    for (const auto& [eg, cg] : g.terms()) {
      for (std::size_t v = 0; v < e.size(); ++v) e[v] = ef[v] + eg[v];
      prod.add_term(e, cf * cg);
      check_limit(prod.terms().size(), term_limit);
    }
  }
  return prod;
}

LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) { return mul_guarded(f, g, 0); }

// ------------------------------------------------------------------ builders

SparsePoly build_king_poly(const Instance& inst, std::size_t term_limit) {
  const long long p = inst.m();
  if (!is_prime(p)) throw std::domain_error("table polynomial needs prime seat count, got " + std::to_string(p));
  const int n = inst.n();
  const auto& d = inst.distances();

  SparsePoly f = SparsePoly::constant(p, n, 1);
  auto linear = [&](int i, int j, long long c) {
    // x_i - x_j + c
    SparsePoly factor(p, n);
    ExpVec e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    factor.add_term(e, 1);
    e[static_cast<std::size_t>(i)] = 0;
    e[static_cast<std::size_t>(j)] = 1;
    factor.add_term(e, -1);
    e[static_cast<std::size_t>(j)] = 0;
    factor.add_term(e, c);
    return factor;
  };

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      f = mul_guarded(f, linear(i, j, 0), term_limit);
      f = mul_guarded(f, linear(i, j, d[static_cast<std::size_t>(i)]), term_limit);
      f = mul_guarded(f, linear(i, j, -d[static_cast<std::size_t>(j)]), term_limit);
      f = mul_guarded(f, linear(i, j, d[static_cast<std::size_t>(i)] - d[static_cast<std::size_t>(j)]), term_limit);
    }
  }
  return f;
}

SparsePoly build_vandermonde_fourth(int n, long long p) {
  if (n < 1) throw std::domain_error("need n >= 1 couples");
  SparsePoly f = SparsePoly::constant(p, n, 1);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      SparsePoly diff(p, n);
      ExpVec e(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(i)] = 1;
      diff.add_term(e, 1);
      e[static_cast<std::size_t>(i)] = 0;
      e[static_cast<std::size_t>(j)] = 1;
      diff.add_term(e, -1);
      const SparsePoly square = diff * diff;
      f = f * square * square;
    }
  }
  return f;
}

// --------------------------------------------------------------------- Dyson

DysonSpec::DysonSpec(std::vector<int> a) : a_(std::move(a)) {
  if (a_.empty()) throw std::domain_error("Dyson spec needs n >= 1 exponents");
  for (int v : a_)
    if (v < 0) throw std::domain_error("Dyson exponents must be nonnegative");
}

BigInt dyson_constant_term_bruteforce(const DysonSpec& spec, std::size_t term_limit) {
  const int n = spec.n();
  LaurentPoly acc = LaurentPoly::constant(n, 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      // (1 - x_i/x_j)^{a_i} expanded by the binomial theorem.
      const int a = spec.a()[static_cast<std::size_t>(i)];
      LaurentPoly factor(n);
      BigInt binom = 1;
      for (int t = 0; t <= a; ++t) {
        ExpVec e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = t;
        e[static_cast<std::size_t>(j)] = -t;
        factor.add_term(std::move(e), (t % 2 == 0) ? binom : -binom);
        binom = binom * (a - t) / (t + 1);
      }
      acc = mul_guarded(acc, factor, term_limit);
    }
  }
  return acc.constant_term();
}

BigInt factorial_exact(unsigned long long k) {
  BigInt acc = 1;
  for (unsigned long long i = 2; i <= k; ++i) acc *= i;
  return acc;
}

BigInt dyson_closed_form(const DysonSpec& spec) {
  unsigned long long total = 0;
  for (int v : spec.a()) total += static_cast<unsigned long long>(v);
  BigInt value = factorial_exact(total);
  for (int v : spec.a()) value /= factorial_exact(static_cast<unsigned long long>(v));
  return value;
}

}  // namespace kings
