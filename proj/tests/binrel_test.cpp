#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <vector>

#include "rsmat/binrel.hpp"

using namespace rsmat;

namespace {

const std::vector<std::vector<std::int64_t>> kTwoBlockRows = {{1, 0, 1, 0, 0}, {0, 1, 0, 1, 1}};
const std::vector<std::vector<std::int64_t>> kThreeBlockRows = {
    {1, 0, 0, 1, 1, 0}, {0, 1, 0, 1, 0, 1}, {0, 0, 1, 0, 1, 1}};

Partition two_block_partition() {
  Universe u = Universe::standard(5);
  return Partition(u, {ElementSet(u, {0, 2}), ElementSet(u, {1, 3, 4})});
}

ExactMatrix random_gf2_matrix(std::size_t m, std::size_t n, std::mt19937_64& rng) {
  auto gf2 = FieldSpec::binary();
  std::vector<FieldElement> entries;
  entries.reserve(m * n);
  for (std::size_t i = 0; i < m * n; ++i)
    entries.push_back(FieldElement::from_integer(gf2, static_cast<std::int64_t>(rng() % 2)));
  return ExactMatrix(gf2, m, n, std::move(entries));
}

// Relation of a partition: all pairs inside one block.
PairRelation block_relation(const Partition& P) {
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& b : P.blocks())
    for (std::size_t i : b.indices())
      for (std::size_t j : b.indices()) pairs.insert({i, j});
  return PairRelation(P.universe(), std::move(pairs));
}

ExactMatrix random_invertible_gf2(std::size_t s, std::mt19937_64& rng) {
  for (;;) {
    auto T = random_gf2_matrix(s, s, rng);
    if (rank(T) == s) return T;
  }
}

}  // namespace

TEST_CASE("rational matrix relation reproduces the non-transitive example") {
  auto q = FieldSpec::rationals();
  auto A = ExactMatrix::from_int_rows(q, {{1, -1, 1}, {1, -1, 1}});
  auto rel = relation_from_matrix(A);
  CHECK(rel.contains(0, 1));
  CHECK(rel.contains(1, 0));
  CHECK(rel.contains(1, 2));
  CHECK_FALSE(rel.contains(0, 2));
  for (std::size_t i = 0; i < 3; ++i) CHECK(rel.contains(i, i));
  CHECK_FALSE(is_equivalence(rel));
}

TEST_CASE("binary matrix relations recover the block structure") {
  auto gf2 = FieldSpec::binary();
  auto B = ExactMatrix::from_int_rows(gf2, kTwoBlockRows);
  auto rel = relation_from_matrix(B);
  CHECK(rel == block_relation(two_block_partition()));
  CHECK(is_equivalence(rel));

  auto diag = relation_from_matrix(ExactMatrix::identity(gf2, 4));
  CHECK(diag == PairRelation::diagonal(Universe::standard(4)));
  CHECK(is_equivalence(diag));
}

TEST_CASE("binary matrix relations are always equivalences") {
  std::mt19937_64 rng(1212);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t m = rng() % 4 + 1, n = rng() % 6 + 1;
    CHECK(is_equivalence(relation_from_matrix(random_gf2_matrix(m, n, rng))));
  }
}

TEST_CASE("column classes over the binary field form the recovered partition") {
  auto gf2 = FieldSpec::binary();
  auto B = ExactMatrix::from_int_rows(gf2, kTwoBlockRows);
  CHECK(partition_from_matrix_gf2(B) == two_block_partition());

  CHECK(partition_from_matrix_gf2(ExactMatrix::identity(gf2, 3)) ==
        Partition::discrete(Universe::standard(3)));

  auto same = ExactMatrix::from_int_rows(gf2, {{1, 1, 1}, {0, 0, 0}});
  CHECK(partition_from_matrix_gf2(same) == Partition::single_block(Universe::standard(3)));

  CHECK_THROWS_MATCHES(partition_from_matrix_gf2(ExactMatrix::from_int_rows(FieldSpec::prime(3), kTwoBlockRows)),
                       error, Catch::Matchers::Predicate<error>([](const error& e) {
                         return e.code() == errc::wrong_field;
                       }));
}

TEST_CASE("encoding then recovering returns the original partition") {
  for (std::size_t n = 1; n <= 5; ++n) {
    Universe u = Universe::standard(n);
    for (const auto& P : all_partitions(u))
      CHECK(partition_from_matrix_gf2(encode_matrix(P)) == P);
  }
}

TEST_CASE("dependence-matrix membership and its witnesses") {
  auto gf2 = FieldSpec::binary();
  auto B = ExactMatrix::from_int_rows(gf2, kTwoBlockRows);
  auto yes = is_binary_dependence(B);
  CHECK(yes.is_member);
  CHECK_FALSE(yes.witness.has_value());

  auto E4 = ExactMatrix::from_int_rows(gf2, kThreeBlockRows);
  auto no = is_binary_dependence(E4);
  REQUIRE_FALSE(no.is_member);
  REQUIRE(no.witness.has_value());
  auto witness_set = std::get<ElementSet>(*no.witness);
  // the witness is dependent while all its pairs are independent; the
  // highlighted triple has the same property and sits in the circuit family
  CHECK_FALSE(columns_independent_idx(E4, witness_set.indices()));
  CHECK(circuits(VectorMatroid(E4)).contains(witness_set));
  CHECK(witness_set.size() > 2);
  const auto& w = witness_set.indices();
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b)
      CHECK(columns_independent_idx(E4, {w[a], w[b]}));

  auto zero_col = is_binary_dependence(ExactMatrix::from_int_rows(gf2, {{1, 0}, {1, 0}}));
  REQUIRE_FALSE(zero_col.is_member);
  CHECK(std::get<std::size_t>(*zero_col.witness) == 1);

  std::vector<std::int64_t> wide(17, 1);
  CHECK_THROWS_MATCHES(is_binary_dependence(ExactMatrix::from_int_rows(gf2, {wide})), error,
                       Catch::Matchers::Predicate<error>(
                           [](const error& e) { return e.code() == errc::ground_too_large; }));
}

TEST_CASE("membership criterion agrees with the literal condition") {
  std::mt19937_64 rng(1313);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t m = rng() % 4 + 1, n = rng() % 6 + 1;
    auto A = random_gf2_matrix(m, n, rng);
    CHECK(is_binary_dependence(A).is_member == is_binary_dependence_literal(A));
  }
  // every 2-row Boolean matrix with up to 4 columns
  auto gf2 = FieldSpec::binary();
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (2 * n)); ++bits) {
      std::vector<FieldElement> entries;
      for (std::size_t k = 0; k < 2 * n; ++k)
        entries.push_back(FieldElement::from_integer(gf2, static_cast<std::int64_t>(bits >> k & 1)));
      ExactMatrix A(gf2, 2, n, std::move(entries));
      CHECK(is_binary_dependence(A).is_member == is_binary_dependence_literal(A));
    }
  }
}

TEST_CASE("the relation-to-family map matches the within-block pairs") {
  auto P = two_block_partition();
  CHECK(iso_f(P) == partition_circuits(P));

  CHECK(iso_f(Partition::discrete(Universe::standard(4))).is_empty());

  Universe u2 = Universe::standard(2);
  auto pair_family = iso_f(Partition::single_block(u2));
  REQUIRE(pair_family.size() == 1);
  CHECK(pair_family.sets().front() == ElementSet::full(u2));

  // distinct partitions map to distinct families
  for (std::size_t n = 1; n <= 4; ++n) {
    Universe u = Universe::standard(n);
    auto parts = all_partitions(u);
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t j = i + 1; j < parts.size(); ++j)
        CHECK_FALSE(iso_f(parts[i]) == iso_f(parts[j]));
  }
}

TEST_CASE("meets map to family intersections") {
  Universe u = Universe::standard(4);
  Partition P1(u, {ElementSet(u, {0, 1}), ElementSet(u, {2, 3})});
  Partition P2(u, {ElementSet(u, {0, 1, 2}), ElementSet(u, {3})});
  CHECK(verify_homomorphism(P1, P2));
  auto common = iso_f(P1).intersect(iso_f(P2));
  REQUIRE(common.size() == 1);
  CHECK(common.sets().front() == ElementSet(u, {0, 1}));

  auto P = two_block_partition();
  CHECK(verify_homomorphism(P, P));

  Universe u3 = Universe::standard(3);
  for (const auto& a : all_partitions(u3))
    for (const auto& b : all_partitions(u3)) CHECK(verify_homomorphism(a, b));

  CHECK_THROWS_MATCHES(verify_homomorphism(P, P1), error,
                       Catch::Matchers::Predicate<error>(
                           [](const error& e) { return e.code() == errc::universe_mismatch; }));
}

TEST_CASE("dependence matrices roundtrip to equal matroids") {
  auto gf2 = FieldSpec::binary();
  CHECK(roundtrip_matroid_equal(ExactMatrix::from_int_rows(gf2, kTwoBlockRows)));
  CHECK(roundtrip_matroid_equal(ExactMatrix::identity(gf2, 4)));

  CHECK_THROWS_MATCHES(roundtrip_matroid_equal(ExactMatrix::from_int_rows(gf2, kThreeBlockRows)),
                       error, Catch::Matchers::Predicate<error>([](const error& e) {
                         return e.code() == errc::not_binary_dependence;
                       }));

  // row-transformed encodings stay in the class and still roundtrip
  std::mt19937_64 rng(1414);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t n = rng() % 6 + 1;
    Universe u = Universe::standard(n);
    std::vector<std::size_t> rgs(n, 0);
    std::size_t maxv = 0;
    for (std::size_t i = 1; i < n; ++i) {
      rgs[i] = rng() % (maxv + 2);
      maxv = std::max(maxv, rgs[i]);
    }
    auto P = Partition::from_rgs(u, rgs);
    auto B = encode_matrix(P);
    auto T = random_invertible_gf2(B.rows(), rng);
    auto A = mat_mul(T, B);
    REQUIRE(is_binary_dependence(A).is_member);
    CHECK(roundtrip_matroid_equal(A));
    // equal matroids on equal labels induce the same relation
    CHECK(relation_from_matrix(A) == relation_from_matrix(B));
  }
}
