#include "arith/bigint.hpp"

#include <limits>

#include "arith/error.hpp"

namespace arith {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::GcdNotOne: return "GcdNotOne";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::InvalidStructure: return "InvalidStructure";
    case ErrorKind::TooFewVertices: return "TooFewVertices";
    case ErrorKind::DegenerateRep: return "DegenerateRep";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Input: return "Input";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

BigInt gcd_of(std::span<const BigInt> values) {
  BigInt g = 0;
  for (const auto& v : values) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

bool fits_int64(const BigInt& v) {
  static_assert(sizeof(long) == sizeof(std::int64_t));
  return v.fits_slong_p();
}

std::int64_t to_int64(const BigInt& v) {
  if (!fits_int64(v)) {
    throw Error(ErrorKind::TooLarge, "integer " + v.get_str() + " does not fit in 64 bits");
  }
  return v.get_si();
}

BigInt from_int64(std::int64_t v) { return BigInt(static_cast<long>(v)); }

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt factorial(unsigned long n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const BigRational& v) { return v.get_str(); }

std::string to_string(std::span<const BigInt> values) {
  std::string s = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ',';
    s += values[i].get_str();
  }
  return s + ")";
}

BigVector make_vector(std::initializer_list<long> values) {
  BigVector out;
  out.reserve(values.size());
  for (long v : values) out.emplace_back(v);
  return out;
}

}  // namespace arith
