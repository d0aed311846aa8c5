#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rsmat/io.hpp"
#include "rsmat/verify.hpp"

using ordered_json = nlohmann::ordered_json;

namespace {

using namespace rsmat;

ordered_json set_json(const ElementSet& s) {
  ordered_json arr = ordered_json::array();
  std::vector<std::string> labels = s.labels();
  for (const auto& l : labels) arr.push_back(l);
  return arr;
}

ordered_json family_json(const SetFamily& F) {
  ordered_json arr = ordered_json::array();
  for (const auto& s : F.sets()) arr.push_back(set_json(s));
  return arr;
}

ordered_json matrix_json(const ExactMatrix& A) {
  ordered_json labels = ordered_json::array();
  for (const auto& l : A.col_labels()) labels.push_back(l);
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < A.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < A.cols(); ++j) row.push_back(A.at(i, j).str());
    rows.push_back(row);
  }
  return {{"field", A.spec().tag()}, {"labels", labels}, {"rows", rows}};
}

ordered_json relation_json(const PairRelation& R) {
  ordered_json arr = ordered_json::array();
  for (const auto& [a, b] : R.pairs())
    arr.push_back(ordered_json::array({R.universe().label(a), R.universe().label(b)}));
  return {{"pairs", arr}};
}

ordered_json report_json(const VerifyReport& r) {
  ordered_json fails = ordered_json::array();
  for (const auto& f : r.failures) fails.push_back(f);
  return {{"id", r.id},
          {"instances", r.instances},
          {"failures", fails},
          {"seed", r.seed},
          {"seconds", r.seconds}};
}

void emit(const std::string& format, const std::string& plain, const ordered_json& doc) {
  if (format == "structured")
    std::cout << doc.dump() << '\n';
  else
    std::cout << plain;
}

int run_approx(const std::string& path, const std::string& literal, const std::string& which,
               const std::string& format) {
  Partition P = parse_partition_text(read_text_file(path));
  ElementSet X = parse_set_literal(P.universe(), literal);
  ElementSet result = which == "lower" ? lower_approx(P, X) : upper_approx(P, X);
  std::string plain = result.is_empty() ? std::string() : format_set(result) + "\n";
  emit(format, plain, {{"set", set_json(result)}});
  return 0;
}

int run_family_output(const SetFamily& F, const std::string& format) {
  emit(format, format_family(F), {{"family", family_json(F)}});
  return 0;
}

int run_is_bdm(const ExactMatrix& A, const std::string& format) {
  BdmVerdict v = is_binary_dependence(A);
  if (v.is_member) {
    emit(format, "member\n", {{"member", true}});
    return 0;
  }
  if (std::holds_alternative<std::size_t>(*v.witness)) {
    const std::string& label = A.label(std::get<std::size_t>(*v.witness));
    emit(format, "non-member\nwitness zero column: " + label + "\n",
         {{"member", false}, {"witness", {{"zero_column", label}}}});
  } else {
    const ElementSet& s = std::get<ElementSet>(*v.witness);
    emit(format, "non-member\nwitness set: " + format_set(s) + "\n",
         {{"member", false}, {"witness", {{"set", set_json(s)}}}});
  }
  return 0;
}

int run_compute(const std::string& what, const std::string& path,
                const std::optional<FieldSpec>& field, const std::optional<std::string>& literal,
                const std::string& format) {
  std::string text = read_text_file(path);
  FileKind kind = sniff_file_kind(text);

  auto need_literal = [&]() -> const std::string& {
    if (!literal) fail(errc::parse_error, "indep-check needs --set");
    return *literal;
  };

  if (kind == FileKind::matrix) {
    ExactMatrix A = parse_matrix_text(text, field);
    if (what == "circuits") return run_family_output(circuits(VectorMatroid(A)), format);
    if (what == "bases") return run_family_output(bases(VectorMatroid(A)), format);
    if (what == "nullspace-min") return run_family_output(circuits_via_nullspace(A), format);
    if (what == "ones-min") return run_family_output(bases_via_ones(A), format);
    if (what == "relation") {
      PairRelation R = relation_from_matrix(A);
      emit(format, format_relation(R), relation_json(R));
      return 0;
    }
    if (what == "is-bdm") return run_is_bdm(A, format);
    if (what == "indep-check") {
      Universe g(A.col_labels());
      ElementSet S = parse_set_literal(g, need_literal());
      bool ok = columns_independent_idx(A, S.indices());
      emit(format, ok ? "independent\n" : "dependent\n", {{"independent", ok}});
      return 0;
    }
    fail(errc::parse_error, "encode needs a partition input");
  }

  Partition P = parse_partition_text(text);
  FieldSpec enc = field.value_or(FieldSpec::binary());
  if (what == "circuits") return run_family_output(partition_circuits(P), format);
  if (what == "bases") return run_family_output(partition_bases(P), format);
  if (what == "nullspace-min")
    return run_family_output(circuits_via_nullspace(encode_matrix(P, enc)), format);
  if (what == "ones-min") return run_family_output(bases_via_ones(encode_matrix(P, enc)), format);
  if (what == "relation") {
    PairRelation R = relation_from_matrix(encode_matrix(P, enc));
    emit(format, format_relation(R), relation_json(R));
    return 0;
  }
  if (what == "is-bdm") return run_is_bdm(encode_matrix(P, enc), format);
  if (what == "indep-check") {
    ElementSet S = parse_set_literal(P.universe(), need_literal());
    bool ok = partition_independent(P, S);
    emit(format, ok ? "independent\n" : "dependent\n", {{"independent", ok}});
    return 0;
  }
  ExactMatrix B = encode_matrix(P, enc);
  emit(format, format_matrix(B), {{"matrix", matrix_json(B)}});
  return 0;
}

int run_verify(const std::string& theorem, const VerifyOptions& opt, const std::string& format) {
  std::vector<VerifyReport> reports;
  if (theorem == "all")
    reports = verify_all(opt);
  else if (theorem == "t1")
    reports = {verify_theorem1(opt)};
  else if (theorem == "t2")
    reports = {verify_theorem2(opt)};
  else if (theorem == "t3")
    reports = {verify_theorem3(opt)};
  else if (theorem == "t4")
    reports = {verify_theorem4(opt)};
  else
    reports = {verify_props(opt)};

  std::size_t failures = 0;
  for (const auto& r : reports) failures += r.failures.size();
  if (format == "structured") {
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    std::cout << ordered_json{{"reports", arr}}.dump() << '\n';
  } else {
    for (const auto& r : reports) std::cout << format_report(r);
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact rough-set approximations, vector matroids, and theorem sweeps"};
  app.require_subcommand(1);
  auto format_check = CLI::IsMember({"plain", "structured"});

  auto* approx = app.add_subcommand("approx", "lower or upper approximation of a set");
  std::string ap_file, ap_set, ap_which, ap_format = "plain";
  approx->add_option("partition-file", ap_file, "partition file")->required();
  approx->add_option("set", ap_set, "comma-separated element labels")->required();
  approx->add_option("which", ap_which, "lower or upper")
      ->required()
      ->check(CLI::IsMember({"lower", "upper"}));
  approx->add_option("--format", ap_format, "output mode")->check(format_check);

  auto* compute = app.add_subcommand("compute", "one computation on a matrix or partition file");
  std::string co_what, co_file, co_field, co_set, co_format = "plain";
  compute->add_option("what", co_what, "computation to run")
      ->required()
      ->check(CLI::IsMember({"circuits", "bases", "indep-check", "nullspace-min", "ones-min",
                             "relation", "is-bdm", "encode"}));
  compute->add_option("input-file", co_file, "matrix or partition file")->required();
  auto* co_field_opt = compute->add_option("--field", co_field, "field tag: gf2, gf<p>, or q");
  auto* co_set_opt = compute->add_option("--set", co_set, "comma-separated element labels");
  compute->add_option("--format", co_format, "output mode")->check(format_check);

  auto* verify = app.add_subcommand("verify", "exhaustive and seeded randomized theorem sweeps");
  std::string ve_id, ve_format = "plain";
  std::size_t ve_max_n = 0, ve_samples = 0;
  std::uint64_t ve_seed = 42;
  verify->add_option("theorem", ve_id, "sweep to run")
      ->required()
      ->check(CLI::IsMember({"t1", "t2", "t3", "t4", "props", "all"}));
  auto* ve_max_opt = verify->add_option("--max-n", ve_max_n, "exhaustive universe bound");
  auto* ve_samples_opt = verify->add_option("--samples", ve_samples, "random sample count");
  verify->add_option("--seed", ve_seed, "random generator seed");
  verify->add_option("--format", ve_format, "output mode")->check(format_check);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*approx) return run_approx(ap_file, ap_set, ap_which, ap_format);
    if (*compute) {
      std::optional<FieldSpec> field;
      if (co_field_opt->count()) field = FieldSpec::from_tag(co_field);
      std::optional<std::string> literal;
      if (co_set_opt->count()) literal = co_set;
      return run_compute(co_what, co_file, field, literal, co_format);
    }
    VerifyOptions opt;
    if (ve_max_opt->count()) opt.max_n = ve_max_n;
    if (ve_samples_opt->count()) opt.samples = ve_samples;
    opt.seed = ve_seed;
    return run_verify(ve_id, opt, ve_format);
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
