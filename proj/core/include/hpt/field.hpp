#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace hpt {

/* All coefficient arithmetic is exact; there are no tolerances anywhere. */
using Scalar = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

enum class FieldKind { rationals, prime };

/**
 * Coefficient field: the rationals, or a prime field F_p.
 *
 * Prime-field values are stored as integer scalars normalized to [0, p).
 * Every mutating operation renormalizes, so scalars taken from two
 * different fields never mix silently: maps and spaces carry their field
 * and operations check compatibility.
 */
class Field {
public:
  Field() : kind_(FieldKind::rationals), p_(0) {}
  explicit Field(long long p);

  FieldKind kind() const { return kind_; }
  long long characteristic() const { return kind_ == FieldKind::prime ? p_ : 0; }

  bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar from_int(long long v) const { return normalize(Scalar(v)); }

  Scalar normalize(const Scalar& a) const;
  Scalar add(const Scalar& a, const Scalar& b) const { return normalize(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return normalize(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return normalize(a * b); }
  Scalar neg(const Scalar& a) const { return normalize(-a); }
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  bool is_zero(const Scalar& a) const { return a.is_zero(); }
  bool eq(const Scalar& a, const Scalar& b) const { return a == b; }

  /** Parse "a" or "a/b" (decimal, optional leading '-'). Throws std::invalid_argument. */
  Scalar parse(const std::string& text) const;
  /** Inverse of parse: "a" or "a/b" with positive denominator. */
  std::string print(const Scalar& a) const;

  /** "Q" or "Fp:p", the CLI spelling. */
  std::string name() const;
  /** Parse a field name as accepted by the CLI. Throws std::invalid_argument. */
  static Field from_name(const std::string& name);

private:
  FieldKind kind_;
  long long p_;
};

}  // namespace hpt
