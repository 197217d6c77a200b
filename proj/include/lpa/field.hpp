#ifndef LPA_FIELD_HPP
#define LPA_FIELD_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace lpa {

using Rational = boost::multiprecision::cpp_rational;

/// Identifies a coefficient field: the rationals (p == 0) or a prime field GF(p).
struct FieldId {
  std::uint64_t p = 0;

  static FieldId rationals() { return FieldId{0}; }
  static FieldId prime(std::uint64_t p);  // throws if p is not prime

  bool is_rational() const { return p == 0; }
  bool operator==(const FieldId&) const = default;

  std::string str() const;
  /// Parses a field selector: "q" or "f<p>" (e.g. "f5").
  static FieldId parse(std::string_view text);
};

bool is_prime_u64(std::uint64_t n);

/// An exact scalar in Q or GF(p). Arithmetic never mixes fields; mixing throws.
class FieldElement {
 public:
  FieldElement() = default;  // zero over Q

  static FieldElement zero(FieldId f);
  static FieldElement one(FieldId f);
  static FieldElement from_int(FieldId f, long long n);
  static FieldElement from_rational(const Rational& q);  // field = Q
  static FieldElement residue(std::uint64_t r, std::uint64_t p);

  /// Parses "n" or "n/d" (d != 0; in GF(p) the quotient is n * d^-1).
  static FieldElement parse(FieldId f, std::string_view text);

  FieldId field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;  // throws std::domain_error on zero
  FieldElement operator/(const FieldElement& o) const;

  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  /// Canonical text: lowest-terms "n" or "n/d" over Q, residue 0..p-1 over GF(p).
  std::string str() const;

  const Rational& rational_value() const;    // Q only
  std::uint64_t residue_value() const;       // GF(p) only

 private:
  FieldId field_;
  Rational q_;           // used when field_.p == 0
  std::uint64_t r_ = 0;  // used when field_.p > 0

  void require_same_field(const FieldElement& o) const;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

}  // namespace lpa

#endif
