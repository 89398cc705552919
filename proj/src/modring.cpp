#include "kings/modring.hpp"

#include <stdexcept>
#include <string>

namespace kings {

namespace {

long long reduce(long long value, long long modulus) {
  long long r = value % modulus;
  if (r < 0) r += modulus;
  return r;
}

long long mul_mod(long long a, long long b, long long m) {
  return static_cast<long long>(
      static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b) % static_cast<unsigned __int128>(m));
}

void require_modulus(long long m) {
  if (m < 2) throw std::domain_error("modulus must be >= 2, got " + std::to_string(m));
}

void require_same_modulus(const Residue& a, const Residue& b) {
  if (a.modulus() != b.modulus())
    throw std::domain_error("residue arithmetic requires equal moduli (" + std::to_string(a.modulus()) + " vs " +
                            std::to_string(b.modulus()) + ")");
}

}  // namespace

Residue::Residue(long long value, long long modulus) : value_(0), modulus_(modulus) {
  require_modulus(modulus);
  value_ = reduce(value, modulus);
}

Residue operator+(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  return Residue(reduce(a.value_ + b.value_, a.modulus_), a.modulus_);
}

Residue operator-(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  return Residue(reduce(a.value_ - b.value_, a.modulus_), a.modulus_);
}

Residue operator*(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  return Residue(mul_mod(a.value_, b.value_, a.modulus_), a.modulus_);
}

Residue Residue::operator-() const { return Residue(-value_, modulus_); }

std::optional<Residue> Residue::inverse() const { return inverse_mod(value_, modulus_); }

bool is_prime(long long m) {
  require_modulus(m);
  if (m < 4) return true;
  if (m % 2 == 0) return false;
  for (long long d = 3; d * d <= m; d += 2)
    if (m % d == 0) return false;
  return true;
}

Residue factorial_mod(unsigned long long k, long long m) {
  require_modulus(m);
  // k >= m: the product 1*2*...*k contains the factor m.
  if (k >= static_cast<unsigned long long>(m)) return Residue(0, m);
  long long acc = 1;
  for (unsigned long long i = 2; i <= k; ++i) acc = mul_mod(acc, static_cast<long long>(i), m);
  return Residue(acc, m);
}

Residue pow_mod(long long base, unsigned long long exp, long long m) {
  require_modulus(m);
  long long b = reduce(base, m);
  long long acc = 1;
  while (exp > 0) {
    if (exp & 1) acc = mul_mod(acc, b, m);
    b = mul_mod(b, b, m);
    exp >>= 1;
  }
  return Residue(acc, m);
}

std::optional<Residue> inverse_mod(long long a, long long m) {
  require_modulus(m);
  // Extended Euclid on (a mod m, m); old_s tracks the Bezout coefficient of a.
  long long r0 = reduce(a, m), r1 = m;
  long long s0 = 1, s1 = 0;
  while (r1 != 0) {
    long long q = r0 / r1;
    long long r2 = r0 - q * r1;
    long long s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) return std::nullopt;
  return Residue(s0, m);
}

bool wilson_check(long long p) {
  if (p < 2 || !is_prime(p)) throw std::domain_error("wilson_check requires a prime, got " + std::to_string(p));
  return factorial_mod(static_cast<unsigned long long>(p - 1), p).value() == p - 1;
}

Sign fermat_sign(long long p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p))
    throw std::domain_error("fermat_sign requires an odd prime, got " + std::to_string(p));
  long long v = pow_mod(2, static_cast<unsigned long long>((p - 1) / 2), p).value();
  if (v == 1) return Sign::plus;
  if (v == p - 1) return Sign::minus;
  // Unreachable for odd primes by Fermat's little theorem.
  throw std::logic_error("fermat_sign: 2^((p-1)/2) mod " + std::to_string(p) + " is " + std::to_string(v));
}

}  // namespace kings
