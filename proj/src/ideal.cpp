#include "lpa/ideal.hpp"

#include <limits>
#include <numeric>

namespace lpa {

RingSpec RingSpec::modular(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("Z_n needs n >= 2");
  return RingSpec(Kind::Modular, n);
}

void SymbolTable::add(std::string name, std::uint64_t value) {
  if (name.empty()) throw std::invalid_argument("empty symbol name");
  if (value < 2) throw std::invalid_argument("symbol '" + name + "' needs a value >= 2");
  entries_.emplace_back(std::move(name), value);
}

std::string SymbolTable::render(std::uint64_t value) const {
  for (const auto& [name, v] : entries_)
    if (v == value) return name;
  if (value >= 2) {
    std::uint64_t rest = value;
    std::string product;
    for (const auto& [name, v] : entries_) {
      if (rest % v == 0) {
        rest /= v;
        product += name;
      }
    }
    if (rest == 1 && !product.empty()) return product;
  }
  return std::to_string(value);
}

std::string to_string(const RingSpec& r, const SymbolTable& symbols) {
  switch (r.kind()) {
    case RingSpec::Kind::Integers:
      return "Z";
    case RingSpec::Kind::Modular:
      return "Z_" + symbols.render(r.modulus());
    case RingSpec::Kind::Zero:
      return "0";
  }
  return "?";
}

PrincipalIdeal::PrincipalIdeal(RingSpec ring, std::uint64_t gen) : ring_(ring), gen_(gen) {
  switch (ring_.kind()) {
    case RingSpec::Kind::Integers:
      break;
    case RingSpec::Kind::Modular:
      gen_ = std::gcd(gen, ring_.modulus());
      break;
    case RingSpec::Kind::Zero:
      gen_ = 1;
      break;
  }
}

PrincipalIdeal PrincipalIdeal::whole(const RingSpec& ring) { return PrincipalIdeal(ring, 1); }

PrincipalIdeal PrincipalIdeal::zero(const RingSpec& ring) { return PrincipalIdeal(ring, 0); }

bool PrincipalIdeal::is_zero() const {
  switch (ring_.kind()) {
    case RingSpec::Kind::Integers:
      return gen_ == 0;
    case RingSpec::Kind::Modular:
      return gen_ == ring_.modulus();
    case RingSpec::Kind::Zero:
      return true;
  }
  return false;
}

bool PrincipalIdeal::contains(std::int64_t k) const {
  switch (ring_.kind()) {
    case RingSpec::Kind::Integers: {
      if (gen_ == 0) return k == 0;
      std::uint64_t magnitude = k < 0 ? 0 - static_cast<std::uint64_t>(k) : static_cast<std::uint64_t>(k);
      return magnitude % gen_ == 0;
    }
    case RingSpec::Kind::Modular: {
      const auto n = static_cast<std::int64_t>(ring_.modulus());
      const auto residue = static_cast<std::uint64_t>(((k % n) + n) % n);
      return residue % gen_ == 0;
    }
    case RingSpec::Kind::Zero:
      return true;
  }
  return false;
}

std::string to_string(const PrincipalIdeal& i, const SymbolTable& symbols) {
  const std::string ring = to_string(i.ring(), symbols);
  if (i.ring().is_zero()) return "0";
  if (i.is_whole()) return ring;
  if (i.is_zero()) return "0" + ring;
  return symbols.render(i.generator()) + ring;
}

namespace {

void require_same_ring(const PrincipalIdeal& a, const PrincipalIdeal& b) {
  if (!(a.ring() == b.ring()))
    throw RingMismatch("ideals of different rings: " + to_string(a.ring()) + " vs " +
                       to_string(b.ring()));
}

}  // namespace

bool ideal_leq(const PrincipalIdeal& a, const PrincipalIdeal& b) {
  require_same_ring(a, b);
  if (b.generator() == 0) return a.generator() == 0;
  return a.generator() % b.generator() == 0;
}

PrincipalIdeal ideal_meet(const PrincipalIdeal& a, const PrincipalIdeal& b) {
  require_same_ring(a, b);
  const std::uint64_t x = a.generator(), y = b.generator();
  if (x == 0 || y == 0) return PrincipalIdeal(a.ring(), 0);
  const std::uint64_t step = x / std::gcd(x, y);
  if (step > std::numeric_limits<std::uint64_t>::max() / y)
    throw std::overflow_error("ideal intersection generator overflows 64 bits");
  return PrincipalIdeal(a.ring(), step * y);
}

PrincipalIdeal ideal_join(const PrincipalIdeal& a, const PrincipalIdeal& b) {
  require_same_ring(a, b);
  return PrincipalIdeal(a.ring(), std::gcd(a.generator(), b.generator()));
}

RingSpec quotient_ring(const RingSpec& r, const PrincipalIdeal& i) {
  if (!(i.ring() == r)) throw RingMismatch("ideal does not belong to the ring");
  if (r.is_zero() || i.is_whole()) return RingSpec::zero();
  if (i.is_zero()) return r;
  return RingSpec::modular(i.generator());
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace lpa
