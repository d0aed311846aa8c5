#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "rsmat/fields.hpp"

using rsmat::errc;
using rsmat::FieldElement;
using rsmat::FieldSpec;
using rsmat::Rational;

namespace {

std::vector<FieldElement> carrier(const FieldSpec& spec) {
  std::vector<FieldElement> out;
  for (std::int64_t v = 0; v < spec.modulus(); ++v) out.push_back(FieldElement::from_integer(spec, v));
  return out;
}

void check_axioms(const std::vector<FieldElement>& elems, const FieldSpec& spec) {
  const auto zero = FieldElement::zero(spec);
  const auto one = FieldElement::one(spec);
  REQUIRE_FALSE(zero == one);
  for (const auto& a : elems) {
    CHECK(a + zero == a);
    CHECK(a * one == a);
    CHECK(a + (-a) == zero);
    if (!a.is_zero()) CHECK(a * a.inverse() == one);
    for (const auto& b : elems) {
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      for (const auto& c : elems) {
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
      }
    }
  }
}

}  // namespace

TEST_CASE("field axioms hold exhaustively over small prime fields") {
  for (std::int64_t p : {2, 3, 5, 7}) {
    auto spec = FieldSpec::prime(p);
    INFO("p = " << p);
    check_axioms(carrier(spec), spec);
  }
}

TEST_CASE("field axioms hold on sampled rationals") {
  auto spec = FieldSpec::rationals();
  std::mt19937_64 rng(20240817);
  std::vector<FieldElement> sample;
  sample.push_back(FieldElement::zero(spec));
  sample.push_back(FieldElement::one(spec));
  while (sample.size() < 12) {
    std::int64_t num = static_cast<std::int64_t>(rng() % 101) - 50;
    std::int64_t den = static_cast<std::int64_t>(rng() % 50) + 1;
    sample.push_back(FieldElement::from_rational(num, den));
  }
  check_axioms(sample, spec);
}

TEST_CASE("binary addition and multiplication tables") {
  auto gf2 = FieldSpec::binary();
  auto z = FieldElement::zero(gf2);
  auto o = FieldElement::one(gf2);
  CHECK(o + o == z);
  CHECK(z + o == o);
  CHECK(o * o == o);
  CHECK(z * o == z);
  CHECK(-o == o);
}

TEST_CASE("multiplicative inverses match exhaustive search") {
  auto gf5 = FieldSpec::prime(5);
  auto two = FieldElement::from_integer(gf5, 2);
  // oracle: scan the carrier for the unique x with 2x = 1
  FieldElement found = FieldElement::zero(gf5);
  int hits = 0;
  for (const auto& x : carrier(gf5)) {
    if (two * x == FieldElement::one(gf5)) {
      found = x;
      ++hits;
    }
  }
  REQUIRE(hits == 1);
  CHECK(found.residue() == 3);
  CHECK(two.inverse() == found);

  auto q = FieldSpec::rationals();
  CHECK(FieldElement::from_rational(2, 3) * FieldElement::from_rational(3, 2) == FieldElement::one(q));
}

TEST_CASE("prime spec construction validates the modulus") {
  CHECK(FieldSpec::prime(2) == FieldSpec::binary());
  CHECK(FieldSpec::prime(2).tag() == "gf2");
  CHECK(FieldSpec::prime(3).tag() == "gf3");
  CHECK(FieldSpec::rationals().tag() == "q");
  CHECK_FALSE(FieldSpec::rationals().is_finite());
  for (std::int64_t bad : {0, 1, 4, 9, 15, 100}) {
    INFO("modulus " << bad);
    CHECK_THROWS_MATCHES(FieldSpec::prime(bad), rsmat::error,
                         Catch::Matchers::Predicate<rsmat::error>(
                             [](const rsmat::error& e) { return e.code() == errc::non_prime_modulus; }));
  }
}

TEST_CASE("field tags round-trip") {
  for (const char* tag : {"gf2", "gf3", "gf17", "gf65521", "q"}) {
    CHECK(FieldSpec::from_tag(tag).tag() == tag);
  }
  CHECK(FieldSpec::from_tag("gf2") == FieldSpec::binary());
  CHECK_THROWS_AS(FieldSpec::from_tag("gf4"), rsmat::error);
  CHECK_THROWS_AS(FieldSpec::from_tag("gf"), rsmat::error);
  CHECK_THROWS_AS(FieldSpec::from_tag("r"), rsmat::error);
  CHECK_THROWS_AS(FieldSpec::from_tag("gf3x"), rsmat::error);
}

TEST_CASE("elements of different fields never mix") {
  auto a = FieldElement::one(FieldSpec::binary());
  auto b = FieldElement::one(FieldSpec::prime(3));
  auto c = FieldElement::one(FieldSpec::rationals());
  CHECK_FALSE(a == b);
  for (auto op : {0, 1, 2, 3}) {
    auto apply = [&](const FieldElement& x, const FieldElement& y) {
      switch (op) {
        case 0: return x + y;
        case 1: return x - y;
        case 2: return x * y;
        default: return x / y;
      }
    };
    INFO("op " << op);
    CHECK_THROWS_MATCHES(apply(a, b), rsmat::error,
                         Catch::Matchers::Predicate<rsmat::error>(
                             [](const rsmat::error& e) { return e.code() == errc::mixed_fields; }));
    CHECK_THROWS_AS(apply(b, c), rsmat::error);
  }
}

TEST_CASE("inverse of zero is rejected") {
  for (auto spec : {FieldSpec::binary(), FieldSpec::prime(7), FieldSpec::rationals()}) {
    auto z = FieldElement::zero(spec);
    CHECK_THROWS_MATCHES(z.inverse(), rsmat::error,
                         Catch::Matchers::Predicate<rsmat::error>(
                             [](const rsmat::error& e) { return e.code() == errc::division_by_zero; }));
    CHECK_THROWS_AS(FieldElement::one(spec) / z, rsmat::error);
  }
}

TEST_CASE("values stay canonical through construction and arithmetic") {
  auto gf7 = FieldSpec::prime(7);
  CHECK(FieldElement::from_integer(gf7, 23).residue() == 2);
  CHECK(FieldElement::from_integer(gf7, -3).residue() == 4);
  CHECK(FieldElement::from_integer(gf7, -21).residue() == 0);

  CHECK(FieldElement::from_rational(4, 6).str() == "2/3");
  CHECK(FieldElement::from_rational(3, -6).str() == "-1/2");
  CHECK(FieldElement::from_rational(-4, -2).str() == "2");
  CHECK(FieldElement::from_rational(0, 5).str() == "0");

  // reduction is idempotent: re-parsing a printed value is a fixed point
  for (auto spec : {FieldSpec::prime(13), FieldSpec::rationals()}) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
      std::int64_t num = static_cast<std::int64_t>(rng() % 2001) - 1000;
      auto x = spec.is_finite() ? FieldElement::from_integer(spec, num)
                                : FieldElement::from_rational(num, static_cast<std::int64_t>(rng() % 40) + 1);
      auto reparsed = FieldElement::parse(spec, x.str());
      CHECK(reparsed == x);
      CHECK(reparsed.str() == x.str());
    }
  }
}

TEST_CASE("element literals parse strictly") {
  auto q = FieldSpec::rationals();
  CHECK(FieldElement::parse(q, "0").str() == "0");
  CHECK(FieldElement::parse(q, "1").str() == "1");
  CHECK(FieldElement::parse(q, "-3").str() == "-3");
  CHECK(FieldElement::parse(q, "7/2").str() == "7/2");
  CHECK(FieldElement::parse(q, "-6/4").str() == "-3/2");
  CHECK(FieldElement::parse(q, "+5").str() == "5");

  auto gf3 = FieldSpec::prime(3);
  CHECK(FieldElement::parse(gf3, "5").residue() == 2);
  CHECK(FieldElement::parse(gf3, "-1").residue() == 2);
  CHECK(FieldElement::parse(gf3, "123456789012345678901234567890").residue() ==
        FieldElement::from_integer(gf3, 0).residue());

  CHECK_THROWS_AS(FieldElement::parse(gf3, "1/2"), rsmat::error);
  CHECK_THROWS_AS(FieldElement::parse(q, "abc"), rsmat::error);
  CHECK_THROWS_AS(FieldElement::parse(q, ""), rsmat::error);
  CHECK_THROWS_AS(FieldElement::parse(q, "1.5"), rsmat::error);
  CHECK_THROWS_AS(FieldElement::parse(q, "3/"), rsmat::error);
  CHECK_THROWS_MATCHES(FieldElement::parse(q, "7/0"), rsmat::error,
                       Catch::Matchers::Predicate<rsmat::error>(
                           [](const rsmat::error& e) { return e.code() == errc::division_by_zero; }));
}

TEST_CASE("integer extraction guards non-integer rationals") {
  auto q = FieldSpec::rationals();
  CHECK(FieldElement::parse(q, "-8/2").integer_value() == -4);
  CHECK(FieldElement::from_integer(FieldSpec::prime(11), 25).integer_value() == 3);
  CHECK_THROWS_MATCHES(FieldElement::parse(q, "7/2").integer_value(), rsmat::error,
                       Catch::Matchers::Predicate<rsmat::error>(
                           [](const rsmat::error& e) { return e.code() == errc::non_integer_entry; }));
}
