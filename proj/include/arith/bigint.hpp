#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace arith {

using BigInt = mpz_class;
using BigRational = mpq_class;
using BigVector = std::vector<BigInt>;
using BigMatrix = std::vector<BigVector>;

/// gcd of all entries; 0 for an empty span.
BigInt gcd_of(std::span<const BigInt> values);

bool fits_int64(const BigInt& v);
std::int64_t to_int64(const BigInt& v);  // throws Error(TooLarge)
BigInt from_int64(std::int64_t v);

/// floor(a / b) and ceil(a / b) for b > 0.
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt ceil_div(const BigInt& a, const BigInt& b);

BigInt factorial(unsigned long n);

std::string to_string(const BigInt& v);
std::string to_string(const BigRational& v);
std::string to_string(std::span<const BigInt> values);  // "(a,b,c)"

BigVector make_vector(std::initializer_list<long> values);

}  // namespace arith
