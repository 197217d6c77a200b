#ifndef LPA_LAURENT_HPP
#define LPA_LAURENT_HPP

#include <map>
#include <string>
#include <vector>

#include "lpa/field.hpp"

namespace lpa {

/// Exact Laurent polynomial in one variable over Q or GF(p).
class LaurentPoly {
 public:
  explicit LaurentPoly(FieldId f = FieldId::rationals()) : field_(f) {}

  static LaurentPoly zero(FieldId f) { return LaurentPoly(f); }
  static LaurentPoly one(FieldId f) { return term(f, 0, FieldElement::one(f)); }
  static LaurentPoly variable(FieldId f) {
    return term(f, 1, FieldElement::one(f));
  }
  static LaurentPoly term(FieldId f, int exponent, const FieldElement& coeff);

  FieldId field() const { return field_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<int, FieldElement>& coeffs() const { return coeffs_; }
  FieldElement coeff(int exponent) const;
  int min_exponent() const;  // throws on zero
  int max_exponent() const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& o) const;
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  /// x -> x^-1.
  LaurentPoly substitute_inverse() const;

  std::string str() const;

 private:
  FieldId field_;
  std::map<int, FieldElement> coeffs_;  // exponent -> nonzero coefficient
};

/// Ideal membership p in <q> for K[x,x^-1]; equivalently exact divisibility
/// up to a unit x^k.
bool laurent_divides(const LaurentPoly& q, const LaurentPoly& p);

/// A gcd of a and b in K[x,x^-1] (monic polynomial with nonzero constant
/// term; zero when both arguments are zero).
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Square matrix over K[x,x^-1].
class LaurentMatrix {
 public:
  LaurentMatrix(FieldId f, int n)
      : field_(f), n_(n), a_(static_cast<std::size_t>(n) * n, LaurentPoly(f)) {}

  static LaurentMatrix identity(FieldId f, int n);

  FieldId field() const { return field_; }
  int size() const { return n_; }
  LaurentPoly& at(int i, int j) { return a_.at(idx(i, j)); }
  const LaurentPoly& at(int i, int j) const { return a_.at(idx(i, j)); }

  LaurentMatrix operator+(const LaurentMatrix& o) const;
  LaurentMatrix operator-(const LaurentMatrix& o) const;
  LaurentMatrix operator*(const LaurentMatrix& o) const;
  bool operator==(const LaurentMatrix& o) const;
  bool operator!=(const LaurentMatrix& o) const { return !(*this == o); }
  bool is_zero() const;

  std::string str() const;

 private:
  FieldId field_;
  int n_;
  std::vector<LaurentPoly> a_;

  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * n_ + j;
  }
};

/// gcd of all entries (the generator of the ideal of K[x,x^-1] generated by
/// the entries of m).
LaurentPoly entries_gcd(const LaurentMatrix& m);

/// Membership of c in the two-sided ideal of M_n(K[x,x^-1]) generated by m:
/// every entry of c divisible by the entries-gcd of m.
bool matrix_ideal_contains(const LaurentMatrix& m, const LaurentMatrix& c);

}  // namespace lpa

#endif
