#include "lpa/field.hpp"

#include <ostream>
#include <stdexcept>

namespace lpa {

namespace {

std::uint64_t mod_u64(long long n, std::uint64_t p) {
  long long m = n % static_cast<long long>(p);
  if (m < 0) m += static_cast<long long>(p);
  return static_cast<std::uint64_t>(m);
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

// Extended Euclid; p prime, 0 < a < p.
std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  long long t = 0, new_t = 1;
  long long r = static_cast<long long>(p), new_r = static_cast<long long>(a);
  while (new_r != 0) {
    long long q = r / new_r;
    long long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<long long>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                          19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                          19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

FieldId FieldId::prime(std::uint64_t p) {
  if (!is_prime_u64(p)) {
    throw std::invalid_argument("field characteristic must be prime, got " +
                                std::to_string(p));
  }
  return FieldId{p};
}

std::string FieldId::str() const {
  return is_rational() ? std::string("q") : "f" + std::to_string(p);
}

FieldId FieldId::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.size() >= 2 && (text[0] == 'f' || text[0] == 'F')) {
    std::uint64_t p = 0;
    for (char c : text.substr(1)) {
      if (c < '0' || c > '9') {
        throw std::invalid_argument("bad field selector: " + std::string(text));
      }
      p = p * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return prime(p);
  }
  throw std::invalid_argument("bad field selector: " + std::string(text) +
                              " (expected q or f<p>)");
}

FieldElement FieldElement::zero(FieldId f) {
  FieldElement x;
  x.field_ = f;
  return x;
}

FieldElement FieldElement::one(FieldId f) { return from_int(f, 1); }

FieldElement FieldElement::from_int(FieldId f, long long n) {
  FieldElement x;
  x.field_ = f;
  if (f.is_rational()) {
    x.q_ = Rational(n);
  } else {
    x.r_ = mod_u64(n, f.p);
  }
  return x;
}

FieldElement FieldElement::from_rational(const Rational& q) {
  FieldElement x;
  x.field_ = FieldId::rationals();
  x.q_ = q;
  return x;
}

FieldElement FieldElement::residue(std::uint64_t r, std::uint64_t p) {
  FieldElement x;
  x.field_ = FieldId::prime(p);
  x.r_ = r % p;
  return x;
}

FieldElement FieldElement::parse(FieldId f, std::string_view text) {
  auto parse_int = [](std::string_view s) -> long long {
    if (s.empty()) throw std::invalid_argument("empty numeric literal");
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
      neg = s[0] == '-';
      i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("bad numeric literal");
    long long v = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') {
        throw std::invalid_argument("bad numeric literal: " + std::string(s));
      }
      v = v * 10 + (s[i] - '0');
    }
    return neg ? -v : v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return from_int(f, parse_int(text));
  long long num = parse_int(text.substr(0, slash));
  long long den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::domain_error("zero denominator in scalar literal");
  return from_int(f, num) / from_int(f, den);
}

bool FieldElement::is_zero() const {
  return field_.is_rational() ? q_.is_zero() : r_ == 0;
}

bool FieldElement::is_one() const {
  return field_.is_rational() ? q_ == 1 : r_ == 1 % field_.p;
}

void FieldElement::require_same_field(const FieldElement& o) const {
  if (!(field_ == o.field_)) {
    throw std::invalid_argument("field mismatch: " + field_.str() + " vs " +
                                o.field_.str());
  }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same_field(o);
  FieldElement x;
  x.field_ = field_;
  if (field_.is_rational()) {
    x.q_ = q_ + o.q_;
  } else {
    x.r_ = r_ + o.r_ >= field_.p ? r_ + o.r_ - field_.p : r_ + o.r_;
  }
  return x;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  return *this + (-o);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same_field(o);
  FieldElement x;
  x.field_ = field_;
  if (field_.is_rational()) {
    x.q_ = q_ * o.q_;
  } else {
    x.r_ = mulmod(r_, o.r_, field_.p);
  }
  return x;
}

FieldElement FieldElement::operator-() const {
  FieldElement x;
  x.field_ = field_;
  if (field_.is_rational()) {
    x.q_ = -q_;
  } else {
    x.r_ = r_ == 0 ? 0 : field_.p - r_;
  }
  return x;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  FieldElement x;
  x.field_ = field_;
  if (field_.is_rational()) {
    x.q_ = 1 / q_;
  } else {
    x.r_ = invmod(r_, field_.p);
  }
  return x;
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  return *this * o.inverse();
}

bool FieldElement::operator==(const FieldElement& o) const {
  require_same_field(o);
  return field_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

std::string FieldElement::str() const {
  if (field_.is_rational()) {
    return q_.str();
  }
  return std::to_string(r_);
}

const Rational& FieldElement::rational_value() const {
  if (!field_.is_rational()) {
    throw std::logic_error("rational_value on GF(p) element");
  }
  return q_;
}

std::uint64_t FieldElement::residue_value() const {
  if (field_.is_rational()) {
    throw std::logic_error("residue_value on rational element");
  }
  return r_;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) {
  return os << x.str();
}

}  // namespace lpa
