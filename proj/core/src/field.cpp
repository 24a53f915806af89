#include "hpt/field.hpp"

#include <stdexcept>

namespace hpt {

namespace {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

/* Modular inverse by extended Euclid; p prime, 0 < a < p. */
long long mod_inverse(long long a, long long p) {
  long long old_r = a, r = p;
  long long old_s = 1, s = 0;
  while (r != 0) {
    long long q = old_r / r;
    long long t = old_r - q * r; old_r = r; r = t;
    t = old_s - q * s; old_s = s; s = t;
  }
  long long inv = old_s % p;
  return inv < 0 ? inv + p : inv;
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Field::Field(long long p) : kind_(FieldKind::prime), p_(p) {
  if (p > (1LL << 31) || !is_prime(p))
    throw std::invalid_argument("field characteristic must be a prime < 2^31, got " + std::to_string(p));
}

Scalar Field::normalize(const Scalar& a) const {
  if (kind_ == FieldKind::rationals) return a;
  /* Prime field: residues are integers in [0, p). An incoming value may be a
     genuine rational (e.g. parsed "1/2"); fold the denominator in by inversion. */
  Integer num = numerator(a), den = denominator(a);
  Integer p(p_);
  num %= p;
  if (num < 0) num += p;
  if (den != 1) {
    Integer d = den % p;
    if (d < 0) d += p;
    if (d == 0) throw std::invalid_argument("denominator vanishes in F_" + std::to_string(p_));
    num = (num * Integer(mod_inverse(d.convert_to<long long>(), p_))) % p;
  }
  return Scalar(num);
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw std::invalid_argument("division by zero in " + name());
  if (kind_ == FieldKind::rationals) return 1 / a;
  long long v = numerator(normalize(a)).convert_to<long long>();
  return Scalar(mod_inverse(v, p_));
}

Scalar Field::parse(const std::string& text) const {
  std::string t = text;
  bool negative = false;
  if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
    negative = t[0] == '-';
    t = t.substr(1);
  }
  std::string num = t, den = "1";
  auto slash = t.find('/');
  if (slash != std::string::npos) {
    num = t.substr(0, slash);
    den = t.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den))
    throw std::invalid_argument("malformed coefficient '" + text + "'");
  Integer n(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in coefficient '" + text + "'");
  Scalar v(n, d);
  if (negative) v = -v;
  return normalize(v);
}

std::string Field::print(const Scalar& a) const {
  return a.str();
}

std::string Field::name() const {
  return kind_ == FieldKind::rationals ? "Q" : "Fp:" + std::to_string(p_);
}

Field Field::from_name(const std::string& name) {
  if (name == "Q") return Field();
  if (name.rfind("Fp:", 0) == 0) {
    const std::string digits = name.substr(3);
    if (!all_digits(digits) || digits.size() > 10)
      throw std::invalid_argument("malformed field name '" + name + "'");
    return Field(std::stoll(digits));
  }
  throw std::invalid_argument("unknown field '" + name + "' (expected Q or Fp:<prime>)");
}

}  // namespace hpt
