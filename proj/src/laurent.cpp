#include "lpa/laurent.hpp"

#include <stdexcept>

namespace lpa {

LaurentPoly LaurentPoly::term(FieldId f, int exponent,
                              const FieldElement& coeff) {
  LaurentPoly p(f);
  if (!coeff.is_zero()) p.coeffs_.emplace(exponent, coeff);
  return p;
}

FieldElement LaurentPoly::coeff(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? FieldElement::zero(field_) : it->second;
}

int LaurentPoly::min_exponent() const {
  if (is_zero()) throw std::domain_error("zero Laurent polynomial");
  return coeffs_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (is_zero()) throw std::domain_error("zero Laurent polynomial");
  return coeffs_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly out(field_);
  out.coeffs_ = coeffs_;
  for (const auto& [e, c] : o.coeffs_) {
    auto [it, inserted] = out.coeffs_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) out.coeffs_.erase(it);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(field_);
  for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e, -c);
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  return *this + (-o);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly out(field_);
  for (const auto& [e1, c1] : coeffs_) {
    for (const auto& [e2, c2] : o.coeffs_) {
      FieldElement c = c1 * c2;
      if (c.is_zero()) continue;
      auto [it, inserted] = out.coeffs_.try_emplace(e1 + e2, c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) out.coeffs_.erase(it);
      }
    }
  }
  return out;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  return coeffs_ == o.coeffs_;
}

LaurentPoly LaurentPoly::substitute_inverse() const {
  LaurentPoly out(field_);
  for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(-e, c);
  return out;
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : coeffs_) {
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-';
    std::string mag = neg ? cs.substr(1) : cs;
    std::string mono;
    if (e == 0) {
      mono = mag;
    } else {
      mono = (mag == "1" ? "" : mag + "*");
      mono += e == 1 ? "x" : "x^" + std::to_string(e);
    }
    if (out.empty()) {
      out = (neg ? "-" : "") + mono;
    } else {
      out += (neg ? " - " : " + ") + mono;
    }
  }
  return out;
}

namespace {

// Dense polynomial c[0..deg], c[deg] != 0 unless empty.
using Poly = std::vector<FieldElement>;

Poly to_poly(const LaurentPoly& p) {
  Poly out;
  if (p.is_zero()) return out;
  int lo = p.min_exponent();
  int hi = p.max_exponent();
  out.assign(hi - lo + 1, FieldElement::zero(p.field()));
  for (const auto& [e, c] : p.coeffs()) out[e - lo] = c;
  return out;
}

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Remainder of a modulo b (b nonempty). Each round cancels the leading
// coefficient exactly, so trim always shrinks a.
Poly poly_mod(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    FieldElement q = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] -= q * b[i];
    }
    trim(a);
  }
  return a;
}

LaurentPoly from_poly(FieldId f, const Poly& p) {
  LaurentPoly out(f);
  for (std::size_t i = 0; i < p.size(); ++i) {
    out = out + LaurentPoly::term(f, static_cast<int>(i), p[i]);
  }
  return out;
}

}  // namespace

bool laurent_divides(const LaurentPoly& q, const LaurentPoly& p) {
  if (p.is_zero()) return true;
  if (q.is_zero()) return false;
  Poly pa = to_poly(p);
  Poly qa = to_poly(q);
  return poly_mod(pa, qa).empty();
}

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return LaurentPoly::zero(a.field());
  if (a.is_zero()) return laurent_gcd(b, a);
  Poly x = to_poly(a);
  Poly y = b.is_zero() ? Poly{} : to_poly(b);
  while (!y.empty()) {
    Poly r = poly_mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  // Normalize monic.
  FieldElement lead = x.back();
  for (auto& c : x) c = c / lead;
  return from_poly(a.field(), x);
}

LaurentMatrix LaurentMatrix::identity(FieldId f, int n) {
  LaurentMatrix m(f, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::one(f);
  return m;
}

LaurentMatrix LaurentMatrix::operator+(const LaurentMatrix& o) const {
  LaurentMatrix out(field_, n_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
  return out;
}

LaurentMatrix LaurentMatrix::operator-(const LaurentMatrix& o) const {
  LaurentMatrix out(field_, n_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
  return out;
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& o) const {
  LaurentMatrix out(field_, n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      LaurentPoly s(field_);
      for (int k = 0; k < n_; ++k) s = s + at(i, k) * o.at(k, j);
      out.at(i, j) = s;
    }
  }
  return out;
}

bool LaurentMatrix::operator==(const LaurentMatrix& o) const {
  return n_ == o.n_ && a_ == o.a_;
}

bool LaurentMatrix::is_zero() const {
  for (const auto& p : a_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

std::string LaurentMatrix::str() const {
  std::string out;
  for (int i = 0; i < n_; ++i) {
    out += "[ ";
    for (int j = 0; j < n_; ++j) {
      if (j) out += ", ";
      out += at(i, j).str();
    }
    out += " ]\n";
  }
  return out;
}

LaurentPoly entries_gcd(const LaurentMatrix& m) {
  LaurentPoly g = LaurentPoly::zero(m.field());
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) {
      g = laurent_gcd(g, m.at(i, j));
    }
  }
  return g;
}

bool matrix_ideal_contains(const LaurentMatrix& m, const LaurentMatrix& c) {
  LaurentPoly g = entries_gcd(m);
  for (int i = 0; i < c.size(); ++i) {
    for (int j = 0; j < c.size(); ++j) {
      if (!laurent_divides(g, c.at(i, j))) return false;
    }
  }
  return true;
}

}  // namespace lpa
