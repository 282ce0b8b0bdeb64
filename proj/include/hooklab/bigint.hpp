#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace hooklab {

using BigInt = boost::multiprecision::cpp_int;
/// Always normalized: denominator > 0 and gcd(|num|, den) = 1.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& value) { return value.str(); }

/// "p/q", or just "p" when q = 1.
std::string to_string(const Rational& value);

BigInt factorial(unsigned n);

/// Exact power with a per-base cache of every exponent seen so far.
class PowerCache {
 public:
  explicit PowerCache(unsigned base);

  unsigned base() const noexcept { return base_; }
  const BigInt& operator()(std::size_t exponent);

 private:
  unsigned base_;
  std::vector<BigInt> powers_;
};

/// Factorials 0!..max!, computed once.
class FactorialTable {
 public:
  explicit FactorialTable(unsigned max);

  const BigInt& operator()(unsigned n) const;

 private:
  std::vector<BigInt> values_;
};

}  // namespace hooklab
