#include "hooklab/bigint.hpp"

#include "hooklab/errors.hpp"

namespace hooklab {

std::string to_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BigInt factorial(unsigned n) {
  BigInt result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

PowerCache::PowerCache(unsigned base) : base_(base), powers_{BigInt(1)} {}

const BigInt& PowerCache::operator()(std::size_t exponent) {
  while (powers_.size() <= exponent) powers_.push_back(powers_.back() * base_);
  return powers_[exponent];
}

FactorialTable::FactorialTable(unsigned max) {
  values_.reserve(max + 1);
  values_.emplace_back(1);
  for (unsigned i = 1; i <= max; ++i) values_.push_back(values_.back() * i);
}

const BigInt& FactorialTable::operator()(unsigned n) const {
  if (n >= values_.size()) throw DomainError("factorial table too small for " + std::to_string(n));
  return values_[n];
}

}  // namespace hooklab
