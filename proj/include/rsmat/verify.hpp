#pragma once

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rsmat/binrel.hpp"
#include "rsmat/io.hpp"
#include "rsmat/matroid.hpp"
#include "rsmat/roughsets.hpp"

namespace rsmat {

/// Sweep configuration. Unset fields fall back to per-sweep defaults sized
/// for the acceptance runs.
struct VerifyOptions {
  std::optional<std::size_t> max_n;
  std::optional<std::size_t> samples;
  std::uint64_t seed = 42;
};

struct VerifyReport {
  std::string id;
  std::size_t instances = 0;
  std::vector<std::string> failures;
  std::uint64_t seed = 0;
  double seconds = 0.0;

  bool ok() const { return failures.empty(); }
};

namespace detail {

// modulo reduction keeps sweeps identical across standard libraries
inline std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

inline ExactMatrix random_matrix(const FieldSpec& spec, std::size_t m, std::size_t n,
                                 std::mt19937_64& rng) {
  std::vector<FieldElement> entries;
  entries.reserve(m * n);
  auto p = static_cast<std::uint64_t>(spec.modulus());
  for (std::size_t i = 0; i < m * n; ++i)
    entries.push_back(
        FieldElement::from_integer(spec, static_cast<std::int64_t>(rand_below(rng, p))));
  return ExactMatrix(spec, m, n, std::move(entries));
}

inline Partition random_partition(const Universe& u, std::mt19937_64& rng) {
  std::vector<std::size_t> rgs(u.size(), 0);
  std::size_t used = 1;
  for (std::size_t i = 1; i < u.size(); ++i) {
    rgs[i] = rand_below(rng, used + 1);
    if (rgs[i] == used) ++used;
  }
  return Partition::from_rgs(u, rgs);
}

inline ExactMatrix random_invertible(const FieldSpec& spec, std::size_t s, std::mt19937_64& rng) {
  for (;;) {
    auto T = random_matrix(spec, s, s, rng);
    if (rank(T) == s) return T;
  }
}

/// Random member of the binary dependence class: an encoded random partition
/// left-multiplied by an invertible transform (null space unchanged, so the
/// induced matroid and relation survive).
inline ExactMatrix random_binary_dependence(std::size_t n, std::mt19937_64& rng) {
  auto P = random_partition(Universe::standard(n), rng);
  auto B = encode_matrix(P);
  auto T = random_invertible(FieldSpec::binary(), B.rows(), rng);
  return mat_mul(T, B);
}

inline std::string describe_partition(const Partition& P) {
  std::ostringstream out;
  for (std::size_t bi = 0; bi < P.blocks().size(); ++bi) {
    if (bi) out << " | ";
    std::vector<std::string> ls = P.blocks()[bi].labels();
    for (std::size_t k = 0; k < ls.size(); ++k) {
      if (k) out << ' ';
      out << ls[k];
    }
  }
  return out.str();
}

inline std::string describe_matrix(const ExactMatrix& A) {
  std::ostringstream out;
  out << A.spec().tag() << ' ' << A.rows() << 'x' << A.cols() << " [";
  for (std::size_t i = 0; i < A.rows(); ++i) {
    if (i) out << "; ";
    for (std::size_t j = 0; j < A.cols(); ++j) {
      if (j) out << ' ';
      out << A.at(i, j).str();
    }
  }
  out << ']';
  return out.str();
}

class SweepClock {
 public:
  SweepClock() : start_(std::chrono::steady_clock::now()) {}
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// bound checks fire before any sweeping starts, not at the offending n
inline void require_enumerable_universe(std::size_t max_n) {
  if (max_n > PartitionEnumerator::max_universe)
    fail(errc::universe_too_large, "partition enumeration limited to " +
                                       std::to_string(PartitionEnumerator::max_universe) +
                                       " elements");
}

/// Circuit and independence axioms on the matroid of A; the matroids the
/// sweeps produce are all small enough for the full-subset scans.
inline bool matroid_axioms_ok(const VectorMatroid& M) {
  return circuit_axioms_hold(circuits(M)) && independence_axioms_hold(independent_sets(M));
}

}  // namespace detail

/// Circuits and bases of every encoded partition agree with the direct
/// partition-matroid reading, over GF(2), GF(3), and the rationals.
inline VerifyReport verify_theorem1(const VerifyOptions& opt = {}) {
  detail::SweepClock clock;
  VerifyReport rep;
  rep.id = "t1";
  rep.seed = opt.seed;
  std::size_t max_n = opt.max_n.value_or(6);
  detail::require_enumerable_universe(max_n);
  const FieldSpec specs[] = {FieldSpec::binary(), FieldSpec::prime(3), FieldSpec::rationals()};
  for (std::size_t n = 1; n <= max_n; ++n) {
    Universe u = Universe::standard(n);
    for (const auto& P : all_partitions(u)) {
      for (const auto& spec : specs) {
        ++rep.instances;
        auto B = encode_matrix(P, spec);
        VectorMatroid M(B);
        SetFamily C = circuits(M);
        std::string what;
        if (!(partition_circuits(P) == C)) what = "circuit families differ";
        else if (!(partition_bases(P) == bases(M))) what = "basis families differ";
        else if (!detail::matroid_axioms_ok(M)) what = "matroid axioms fail";
        if (!what.empty())
          rep.failures.push_back("t1 " + spec.tag() + " {" + detail::describe_partition(P) +
                                 "}: " + what);
      }
    }
  }
  rep.seconds = clock.elapsed();
  return rep;
}

/// Circuits from minimal null-space supports agree with the brute-force
/// circuit scan on seeded random matrices over GF(2) and GF(3).
inline VerifyReport verify_theorem2(const VerifyOptions& opt = {}) {
  detail::SweepClock clock;
  VerifyReport rep;
  rep.id = "t2";
  rep.seed = opt.seed;
  std::size_t max_n = opt.max_n.value_or(8);
  require_scannable_ground(max_n);
  std::size_t samples = opt.samples.value_or(200);
  std::mt19937_64 rng(opt.seed);
  auto run = [&](const FieldSpec& spec, std::size_t count) {
    for (std::size_t k = 0; k < count; ++k) {
      ++rep.instances;
      std::size_t m = 1 + detail::rand_below(rng, 6);
      std::size_t n = 1 + detail::rand_below(rng, max_n);
      auto A = detail::random_matrix(spec, m, n, rng);
      VectorMatroid M(A);
      SetFamily C = circuits(M);
      std::string what;
      if (!(circuits_via_nullspace(A) == C)) what = "null-space route differs from circuit scan";
      else if (!detail::matroid_axioms_ok(M)) what = "matroid axioms fail";
      if (!what.empty())
        rep.failures.push_back("t2 " + detail::describe_matrix(A) + ": " + what);
    }
  };
  run(FieldSpec::binary(), samples);
  run(FieldSpec::prime(3), samples / 2);
  rep.seconds = clock.elapsed();
  return rep;
}

/// Bases of every encoded partition, computed from minimal supports of the
/// all-ones solution set, agree with the transversal reading and with the
/// minimal sets whose upper approximation is the whole universe.
inline VerifyReport verify_theorem3(const VerifyOptions& opt = {}) {
  detail::SweepClock clock;
  VerifyReport rep;
  rep.id = "t3";
  rep.seed = opt.seed;
  std::size_t max_n = opt.max_n.value_or(6);
  detail::require_enumerable_universe(max_n);
  for (std::size_t n = 1; n <= max_n; ++n) {
    Universe u = Universe::standard(n);
    for (const auto& P : all_partitions(u)) {
      ++rep.instances;
      auto B = encode_matrix(P);
      SetFamily from_ones = bases_via_ones(B);
      SetFamily transversals = partition_bases(P);
      std::string what;
      if (!(from_ones == transversals)) what = "ones-solution route differs from transversals";
      else if (!(transversals == min_family(upper_full_sets(P))))
        what = "transversals differ from minimal upper-full sets";
      else if (!detail::matroid_axioms_ok(VectorMatroid(B))) what = "matroid axioms fail";
      if (!what.empty())
        rep.failures.push_back("t3 {" + detail::describe_partition(P) + "}: " + what);
    }
  }
  rep.seconds = clock.elapsed();
  return rep;
}

/// The circuit-family map on partitions is injective and turns meets of
/// partitions into intersections of families, for all pairs.
inline VerifyReport verify_theorem4(const VerifyOptions& opt = {}) {
  detail::SweepClock clock;
  VerifyReport rep;
  rep.id = "t4";
  rep.seed = opt.seed;
  std::size_t max_n = opt.max_n.value_or(5);
  detail::require_enumerable_universe(max_n);
  for (std::size_t n = 1; n <= max_n; ++n) {
    Universe u = Universe::standard(n);
    std::vector<Partition> parts = all_partitions(u);
    std::vector<SetFamily> images;
    images.reserve(parts.size());
    for (const auto& P : parts) images.push_back(iso_f(P));
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t j = i + 1; j < parts.size(); ++j) {
        ++rep.instances;
        if (images[i] == images[j])
          rep.failures.push_back("t4 images collide: {" + detail::describe_partition(parts[i]) +
                                 "} vs {" + detail::describe_partition(parts[j]) + "}");
      }
    for (const auto& P1 : parts)
      for (const auto& P2 : parts) {
        ++rep.instances;
        if (!verify_homomorphism(P1, P2))
          rep.failures.push_back("t4 meet not preserved: {" + detail::describe_partition(P1) +
                                 "} with {" + detail::describe_partition(P2) + "}");
      }
  }
  rep.seconds = clock.elapsed();
  return rep;
}

/// Remaining propositions: approximation laws, the partition-matroid
/// readings, relation recovery and equivalence over GF(2), membership and
/// roundtrips in the binary dependence class, and agreement of the
/// circuit-size membership criterion with the literal subset condition.
inline VerifyReport verify_props(const VerifyOptions& opt = {}) {
  detail::SweepClock clock;
  VerifyReport rep;
  rep.id = "props";
  rep.seed = opt.seed;
  std::size_t max_n = opt.max_n.value_or(6);
  detail::require_enumerable_universe(max_n);
  std::size_t samples = opt.samples.value_or(500);
  std::mt19937_64 rng(opt.seed);
  auto gf2 = FieldSpec::binary();

  // approximation laws: inclusion and complement duality, exhaustive
  std::size_t law_n = std::min<std::size_t>(max_n, 7);
  for (std::size_t n = 1; n <= law_n; ++n) {
    Universe u = Universe::standard(n);
    for (const auto& P : all_partitions(u)) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        ++rep.instances;
        auto X = ElementSet::from_mask(u, mask);
        auto low = lower_approx(P, X);
        auto up = upper_approx(P, X);
        auto co = X.complement();
        bool ok = low.is_subset_of(X) && X.is_subset_of(up) &&
                  lower_approx(P, co) == up.complement() &&
                  upper_approx(P, co) == low.complement();
        if (!ok)
          rep.failures.push_back("props laws {" + detail::describe_partition(P) + "} X={" +
                                 format_set(X) + "}");
      }
    }
  }

  // partition-matroid readings, self-contained
  std::size_t pm_n = std::min<std::size_t>(max_n, 5);
  for (std::size_t n = 1; n <= pm_n; ++n) {
    Universe u = Universe::standard(n);
    for (const auto& P : all_partitions(u)) {
      ++rep.instances;
      VectorMatroid M(encode_matrix(P));
      bool ok = partition_circuits(P) == circuits(M) &&
                partition_bases(P) == min_family(upper_full_sets(P));
      if (!ok)
        rep.failures.push_back("props matroid reading {" + detail::describe_partition(P) + "}");
    }
  }

  // exhaustive recovery sweep: encoded partitions are members of the binary
  // dependence class, their relations are equivalences matching the blocks,
  // and decoding inverts encoding
  for (std::size_t n = 1; n <= max_n; ++n) {
    Universe u = Universe::standard(n);
    for (const auto& P : all_partitions(u)) {
      ++rep.instances;
      auto B = encode_matrix(P);
      std::string what;
      if (!(partition_from_matrix_gf2(B) == P)) what = "decode does not invert encode";
      else if (!is_binary_dependence(B).is_member) what = "encoded matrix not in the class";
      else {
        auto rel = relation_from_matrix(B);
        if (!is_equivalence(rel)) what = "relation not an equivalence";
        else {
          for (std::size_t i = 0; i < n && what.empty(); ++i)
            for (std::size_t j = 0; j < n && what.empty(); ++j)
              if (rel.contains(i, j) != (P.block_of(i) == P.block_of(j)))
                what = "relation disagrees with blocks";
        }
      }
      if (!what.empty())
        rep.failures.push_back("props {" + detail::describe_partition(P) + "}: " + what);
    }
  }

  // random members of the class: membership, matroid roundtrip, and the
  // relation's invariance under matroid-preserving transforms
  for (std::size_t k = 0; k < samples; ++k) {
    ++rep.instances;
    std::size_t n = 1 + detail::rand_below(rng, 8);
    auto A = detail::random_binary_dependence(n, rng);
    std::string what;
    if (!is_binary_dependence(A).is_member) what = "constructed member rejected";
    else if (!roundtrip_matroid_equal(A)) what = "matroid roundtrip differs";
    else {
      auto P = partition_from_matrix_gf2(A);
      if (!(relation_from_matrix(A) == relation_from_matrix(encode_matrix(P))))
        what = "relation changes under matroid-preserving transform";
    }
    if (!what.empty())
      rep.failures.push_back("props " + detail::describe_matrix(A) + ": " + what);
  }

  // random GF(2) matrices: relations are always equivalences and the
  // membership criterion matches the literal subset condition
  for (std::size_t k = 0; k < samples; ++k) {
    ++rep.instances;
    std::size_t m = 1 + detail::rand_below(rng, 6);
    std::size_t n = 1 + detail::rand_below(rng, 8);
    auto A = detail::random_matrix(gf2, m, n, rng);
    std::string what;
    if (!is_equivalence(relation_from_matrix(A))) what = "relation not an equivalence";
    else if (is_binary_dependence(A).is_member != is_binary_dependence_literal(A))
      what = "membership criterion differs from literal condition";
    if (!what.empty())
      rep.failures.push_back("props " + detail::describe_matrix(A) + ": " + what);
  }

  // all two-row Boolean matrices with up to four columns, exhaustive
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (2 * n)); ++bits) {
      ++rep.instances;
      std::vector<FieldElement> entries;
      for (std::size_t i = 0; i < 2 * n; ++i)
        entries.push_back(FieldElement::from_integer(
            gf2, static_cast<std::int64_t>((bits >> i) & 1)));
      ExactMatrix A(gf2, 2, n, std::move(entries));
      if (is_binary_dependence(A).is_member != is_binary_dependence_literal(A))
        rep.failures.push_back("props " + detail::describe_matrix(A) +
                               ": membership criterion differs from literal condition");
    }
  }

  rep.seconds = clock.elapsed();
  return rep;
}

inline std::vector<VerifyReport> verify_all(const VerifyOptions& opt = {}) {
  return {verify_theorem1(opt), verify_theorem2(opt), verify_theorem3(opt), verify_theorem4(opt),
          verify_props(opt)};
}

/// One summary line, then one indented line per counterexample.
inline std::string format_report(const VerifyReport& rep) {
  std::ostringstream out;
  out << "verify " << rep.id << ": instances=" << rep.instances
      << " failures=" << rep.failures.size() << " seed=" << rep.seed << " time=" << std::fixed
      << std::setprecision(2) << rep.seconds << "s\n";
  for (const auto& f : rep.failures) out << "  FAIL " << f << '\n';
  return out.str();
}

}  // namespace rsmat
