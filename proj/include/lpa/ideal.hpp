#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace lpa {

/// Coefficient ring: ℤ, ℤ_n (n >= 2), or the zero ring produced by R/R.
class RingSpec {
 public:
  enum class Kind { Integers, Modular, Zero };

  static RingSpec integers() { return RingSpec(Kind::Integers, 0); }
  static RingSpec modular(std::uint64_t n);
  static RingSpec zero() { return RingSpec(Kind::Zero, 1); }

  Kind kind() const { return kind_; }
  /// n for ℤ_n, 0 for ℤ, 1 for the zero ring.
  std::uint64_t modulus() const { return modulus_; }
  bool is_zero() const { return kind_ == Kind::Zero; }

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  RingSpec(Kind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}
  Kind kind_;
  std::uint64_t modulus_;
};

/// Renders integers as products of named values: with {p:2, q:3} the
/// number 6 prints as "pq". Names are tried in insertion order.
class SymbolTable {
 public:
  void add(std::string name, std::uint64_t value);
  bool empty() const { return entries_.empty(); }
  std::string render(std::uint64_t value) const;

 private:
  std::vector<std::pair<std::string, std::uint64_t>> entries_;
};

/// "Z", "Z_6", "0".
std::string to_string(const RingSpec& r, const SymbolTable& symbols = {});

class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An ideal of ℤ or ℤ_n held by its canonical generator: for ℤ any
/// g >= 0 (gℤ); for ℤ_n a positive divisor of n, with n meaning {0}.
class PrincipalIdeal {
 public:
  /// Normalises gen: for ℤ_n it becomes gcd(gen, n) (so 0 maps to n).
  PrincipalIdeal(RingSpec ring, std::uint64_t gen);

  static PrincipalIdeal whole(const RingSpec& ring);
  static PrincipalIdeal zero(const RingSpec& ring);

  const RingSpec& ring() const { return ring_; }
  std::uint64_t generator() const { return gen_; }
  bool is_whole() const { return gen_ == 1; }
  bool is_zero() const;

  /// k ∈ I for an integer representative k.
  bool contains(std::int64_t k) const;

  friend bool operator==(const PrincipalIdeal&, const PrincipalIdeal&) = default;

 private:
  RingSpec ring_;
  std::uint64_t gen_;
};

/// "6Z", "Z", "0Z", "4Z_12".
std::string to_string(const PrincipalIdeal& i, const SymbolTable& symbols = {});

/// a ⊆ b.
bool ideal_leq(const PrincipalIdeal& a, const PrincipalIdeal& b);
/// a ∩ b (lcm of generators).
PrincipalIdeal ideal_meet(const PrincipalIdeal& a, const PrincipalIdeal& b);
/// a + b (gcd of generators).
PrincipalIdeal ideal_join(const PrincipalIdeal& a, const PrincipalIdeal& b);

/// r / i.
RingSpec quotient_ring(const RingSpec& r, const PrincipalIdeal& i);

/// Positive divisors of n in ascending order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

}  // namespace lpa
