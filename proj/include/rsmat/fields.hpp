#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>

#include "rsmat/errors.hpp"

namespace rsmat {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Identifies one of the supported coefficient fields: GF(2), GF(p) for an
/// odd prime p, or the rationals. prime(2) normalizes to binary so there is
/// exactly one representation per field.
class FieldSpec {
 public:
  enum class Kind { binary, prime, rational };

  static FieldSpec binary() { return FieldSpec(Kind::binary, 2); }

  static FieldSpec prime(std::int64_t p) {
    if (p < 2 || p > max_modulus || !is_prime(p))
      fail(errc::non_prime_modulus, "modulus " + std::to_string(p) + " is not a prime in [2, 2^31-1]");
    if (p == 2) return binary();
    return FieldSpec(Kind::prime, p);
  }

  static FieldSpec rationals() { return FieldSpec(Kind::rational, 0); }

  /// Parses a field tag: "gf2", "gf<p>" (e.g. "gf3"), or "q".
  static FieldSpec from_tag(const std::string& tag) {
    if (tag == "q") return rationals();
    if (tag.size() > 2 && tag.compare(0, 2, "gf") == 0) {
      std::int64_t p = 0;
      for (std::size_t i = 2; i < tag.size(); ++i) {
        char c = tag[i];
        if (c < '0' || c > '9') fail(errc::parse_error, "bad field tag '" + tag + "'");
        if (p > max_modulus / 10 + 1) fail(errc::non_prime_modulus, "modulus in tag '" + tag + "' too large");
        p = p * 10 + (c - '0');
      }
      return prime(p);
    }
    fail(errc::parse_error, "bad field tag '" + tag + "' (expected gf2, gf<p>, or q)");
  }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ != Kind::rational; }

  /// Field size for finite kinds (2 for binary).
  std::int64_t modulus() const {
    if (!is_finite()) fail(errc::infinite_field, "rational field has no modulus");
    return p_;
  }

  std::string tag() const {
    switch (kind_) {
      case Kind::binary: return "gf2";
      case Kind::prime: return "gf" + std::to_string(p_);
      case Kind::rational: return "q";
    }
    return "?";
  }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }

  static constexpr std::int64_t max_modulus = (std::int64_t{1} << 31) - 1;

  static bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
      if (n % d == 0) return false;
    return true;
  }

 private:
  FieldSpec(Kind kind, std::int64_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::int64_t p_;  // modulus for finite kinds, 0 for rational
};

/// One exact field value. Finite-field values are residues in [0, p);
/// rational values are reduced fractions with positive denominator.
/// Operands of different specs never mix: arithmetic throws MixedFields.
class FieldElement {
 public:
  static FieldElement zero(const FieldSpec& spec) { return from_integer(spec, 0); }
  static FieldElement one(const FieldSpec& spec) { return from_integer(spec, 1); }

  static FieldElement from_integer(const FieldSpec& spec, std::int64_t v) {
    if (spec.is_finite()) return FieldElement(spec, reduce(v, spec.modulus()));
    return FieldElement(spec, Rational(v));
  }

  static FieldElement from_integer(const FieldSpec& spec, const Integer& v) {
    if (spec.is_finite()) {
      Integer r = v % spec.modulus();
      if (r < 0) r += spec.modulus();
      return FieldElement(spec, static_cast<std::int64_t>(r));
    }
    return FieldElement(spec, Rational(v));
  }

  /// Rational-field value from an exact fraction; reduces automatically.
  static FieldElement from_rational(Integer num, Integer den) {
    if (den == 0) fail(errc::division_by_zero, "zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return FieldElement(FieldSpec::rationals(), Rational(num, den));
  }

  /// Parses one element literal: an optionally signed integer, plus `a/b`
  /// fractions when the spec is rational. Finite-field integers of any size
  /// are reduced into [0, p).
  static FieldElement parse(const FieldSpec& spec, const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
      if (spec.is_finite())
        fail(errc::parse_error, "fraction '" + text + "' not valid over " + spec.tag());
      Integer num = parse_integer(text.substr(0, slash), text);
      Integer den = parse_integer(text.substr(slash + 1), text);
      if (den == 0) fail(errc::division_by_zero, "zero denominator in '" + text + "'");
      return from_rational(num, den);
    }
    return from_integer(spec, parse_integer(text, text));
  }

  const FieldSpec& spec() const { return spec_; }

  bool is_zero() const {
    if (spec_.is_finite()) return residue() == 0;
    return rational() == 0;
  }

  bool is_one() const {
    if (spec_.is_finite()) return residue() == 1;
    return rational() == 1;
  }

  /// Canonical residue; finite specs only.
  std::int64_t residue() const { return std::get<std::int64_t>(value_); }

  /// Exact fraction; rational spec only.
  const Rational& rational() const { return std::get<Rational>(value_); }

  bool is_integer() const {
    if (spec_.is_finite()) return true;
    return boost::multiprecision::denominator(rational()) == 1;
  }

  /// The value as a plain integer. Finite residues qualify directly;
  /// rationals must have denominator 1.
  Integer integer_value() const {
    if (spec_.is_finite()) return Integer(residue());
    if (!is_integer()) fail(errc::non_integer_entry, "entry " + str() + " is not an integer");
    return boost::multiprecision::numerator(rational());
  }

  std::string str() const {
    if (spec_.is_finite()) return std::to_string(residue());
    const Rational& r = rational();
    Integer num = boost::multiprecision::numerator(r);
    Integer den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
  }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same(a, b, "add");
    if (a.spec_.is_finite()) return FieldElement(a.spec_, (a.residue() + b.residue()) % a.spec_.modulus());
    return FieldElement(a.spec_, a.rational() + b.rational());
  }

  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same(a, b, "multiply");
    if (a.spec_.is_finite()) return FieldElement(a.spec_, (a.residue() * b.residue()) % a.spec_.modulus());
    return FieldElement(a.spec_, a.rational() * b.rational());
  }

  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    require_same(a, b, "divide");
    return a * b.inverse();
  }

  FieldElement operator-() const {
    if (spec_.is_finite()) return FieldElement(spec_, reduce(-residue(), spec_.modulus()));
    return FieldElement(spec_, -rational());
  }

  FieldElement inverse() const {
    if (is_zero()) fail(errc::division_by_zero, "inverse of zero");
    if (spec_.is_finite()) return FieldElement(spec_, mod_inverse(residue(), spec_.modulus()));
    return FieldElement(spec_, 1 / rational());
  }

  /// Elements of different specs compare unequal (comparison is a query,
  /// not an arithmetic operation, so it does not throw).
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.spec_ == b.spec_ && a.value_ == b.value_;
  }

 private:
  FieldElement(const FieldSpec& spec, std::int64_t residue) : spec_(spec), value_(residue) {}
  FieldElement(const FieldSpec& spec, Rational value) : spec_(spec), value_(std::move(value)) {}

  static std::int64_t reduce(std::int64_t v, std::int64_t p) {
    std::int64_t r = v % p;
    return r < 0 ? r + p : r;
  }

  // Extended Euclid; p prime and 0 < a < p, so the inverse exists.
  static std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t old_r = a, r = p;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
      std::int64_t q = old_r / r;
      std::int64_t tmp = old_r - q * r;
      old_r = r;
      r = tmp;
      tmp = old_s - q * s;
      old_s = s;
      s = tmp;
    }
    return reduce(old_s, p);
  }

  static Integer parse_integer(const std::string& text, const std::string& whole) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
      negative = text[i] == '-';
      ++i;
    }
    if (i == text.size()) fail(errc::parse_error, "bad element literal '" + whole + "'");
    Integer v = 0;
    for (; i < text.size(); ++i) {
      char c = text[i];
      if (c < '0' || c > '9') fail(errc::parse_error, "bad element literal '" + whole + "'");
      v = v * 10 + (c - '0');
    }
    return negative ? Integer(-v) : v;
  }

  static void require_same(const FieldElement& a, const FieldElement& b, const char* op) {
    if (!(a.spec_ == b.spec_))
      fail(errc::mixed_fields, std::string("cannot ") + op + " " + a.spec_.tag() + " and " + b.spec_.tag() + " elements");
  }

  FieldSpec spec_;
  std::variant<std::int64_t, Rational> value_;
};

}  // namespace rsmat
