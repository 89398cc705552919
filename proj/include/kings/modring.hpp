#ifndef KINGS_MODRING_HPP
#define KINGS_MODRING_HPP

#include <cstdint>
#include <optional>

namespace kings {

// A canonical residue value in [0, m). Negative inputs are reduced on
// construction so equality is plain field comparison.
class Residue {
 public:
  Residue(long long value, long long modulus);

  long long value() const { return value_; }
  long long modulus() const { return modulus_; }

  bool operator==(const Residue&) const = default;

  // Arithmetic requires equal moduli; mismatch is a domain error.
  friend Residue operator+(const Residue& a, const Residue& b);
  friend Residue operator-(const Residue& a, const Residue& b);
  friend Residue operator*(const Residue& a, const Residue& b);
  Residue operator-() const;

  std::optional<Residue> inverse() const;

 private:
  long long value_;
  long long modulus_;
};

// The Fermat sign of 2^((p-1)/2) mod p: always one of +1, -1.
enum class Sign : int { plus = +1, minus = -1 };

inline int to_int(Sign s) { return static_cast<int>(s); }

// Deterministic trial division; m < 2 is a domain error.
bool is_prime(long long m);

// k! mod m.
Residue factorial_mod(unsigned long long k, long long m);

// base^exp mod m by square-and-multiply; any integer base.
Residue pow_mod(long long base, unsigned long long exp, long long m);

// Modular inverse when gcd(a, m) = 1, absent otherwise.
std::optional<Residue> inverse_mod(long long a, long long m);

// (p-1)! == -1 (mod p); composite p is a domain error.
bool wilson_check(long long p);

// 2^((p-1)/2) mod p for odd prime p, reported as +1 or -1.
Sign fermat_sign(long long p);

}  // namespace kings

#endif
