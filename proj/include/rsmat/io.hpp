#pragma once

#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rsmat/binrel.hpp"
#include "rsmat/errors.hpp"
#include "rsmat/fields.hpp"
#include "rsmat/linalg.hpp"
#include "rsmat/roughsets.hpp"
#include "rsmat/sets.hpp"

namespace rsmat {

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

/// Lines of `text` with blank (all-whitespace) lines dropped.
inline std::vector<std::string> nonblank_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") != std::string::npos) out.push_back(line);
  }
  return out;
}

}  // namespace detail

/// Matrix text format:
///   field <tag>
///   labels <id> <id> ...      (optional; defaults to x1..xn)
///   <row of element literals, whitespace-separated>
///   ...
/// Row lengths must agree exactly. `field_override` replaces the declared
/// tag before any entry is parsed, so literals must be valid in the
/// overriding field.
inline ExactMatrix parse_matrix_text(const std::string& text,
                                     std::optional<FieldSpec> field_override = std::nullopt) {
  auto lines = detail::nonblank_lines(text);
  if (lines.empty()) fail(errc::parse_error, "empty matrix input");
  auto head = detail::split_ws(lines[0]);
  if (head.size() != 2 || head[0] != "field")
    fail(errc::parse_error, "matrix input must start with 'field <tag>'");
  FieldSpec spec = field_override ? *field_override : FieldSpec::from_tag(head[1]);

  std::size_t first_row = 1;
  std::vector<std::string> labels;
  if (lines.size() > 1) {
    auto second = detail::split_ws(lines[1]);
    if (!second.empty() && second[0] == "labels") {
      labels.assign(second.begin() + 1, second.end());
      if (labels.empty()) fail(errc::parse_error, "labels line lists no labels");
      first_row = 2;
    }
  }
  if (first_row >= lines.size()) fail(errc::parse_error, "matrix input has no rows");

  std::vector<FieldElement> entries;
  std::size_t cols = 0;
  std::size_t rows = 0;
  for (std::size_t i = first_row; i < lines.size(); ++i) {
    auto toks = detail::split_ws(lines[i]);
    if (rows == 0) {
      cols = toks.size();
    } else if (toks.size() != cols) {
      fail(errc::parse_error, "row " + std::to_string(rows + 1) + " has " +
                                  std::to_string(toks.size()) + " entries, expected " +
                                  std::to_string(cols));
    }
    for (const auto& t : toks) entries.push_back(FieldElement::parse(spec, t));
    ++rows;
  }
  return ExactMatrix(spec, rows, cols, std::move(entries), std::move(labels));
}

/// Inverse of parse_matrix_text; always emits the labels line.
inline std::string format_matrix(const ExactMatrix& A) {
  std::ostringstream out;
  out << "field " << A.spec().tag() << '\n';
  out << "labels";
  for (const auto& l : A.col_labels()) out << ' ' << l;
  out << '\n';
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) {
      if (j) out << ' ';
      out << A.at(i, j).str();
    }
    out << '\n';
  }
  return out.str();
}

/// Partition text format:
///   universe <id> <id> ...
///   block <id> <id> ...
///   ...
/// Blocks must be nonempty, disjoint, and cover the universe.
inline Partition parse_partition_text(const std::string& text) {
  auto lines = detail::nonblank_lines(text);
  if (lines.empty()) fail(errc::parse_error, "empty partition input");
  auto head = detail::split_ws(lines[0]);
  if (head.size() < 2 || head[0] != "universe")
    fail(errc::parse_error, "partition input must start with 'universe <id> ...'");
  Universe u(std::vector<std::string>(head.begin() + 1, head.end()));

  std::vector<ElementSet> blocks;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto toks = detail::split_ws(lines[i]);
    if (toks.empty() || toks[0] != "block")
      fail(errc::parse_error, "expected 'block <id> ...', got '" + lines[i] + "'");
    blocks.push_back(ElementSet::from_labels(u, std::vector<std::string>(toks.begin() + 1, toks.end())));
  }
  return Partition(u, std::move(blocks));
}

/// Inverse of parse_partition_text; blocks in canonical order.
inline std::string format_partition(const Partition& P) {
  std::ostringstream out;
  out << "universe";
  for (const auto& l : P.universe().labels()) out << ' ' << l;
  out << '\n';
  for (const auto& b : P.blocks()) {
    out << "block";
    std::vector<std::string> labels = b.labels();
    for (const auto& l : labels) out << ' ' << l;
    out << '\n';
  }
  return out.str();
}

/// Comma-separated labels; whitespace around each label is ignored and an
/// all-whitespace literal denotes the empty set.
inline ElementSet parse_set_literal(const Universe& u, const std::string& literal) {
  auto trim = [](const std::string& s) -> std::string {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
  };
  std::vector<std::string> fields;
  std::string current;
  for (char c : literal) {
    if (c == ',') {
      fields.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  fields.push_back(current);
  if (fields.size() == 1 && trim(fields[0]).empty()) return ElementSet::empty(u);
  std::vector<std::string> labels;
  for (const auto& f : fields) {
    std::string t = trim(f);
    if (t.empty()) fail(errc::parse_error, "empty label in set literal '" + literal + "'");
    labels.push_back(t);
  }
  return ElementSet::from_labels(u, labels);
}

/// Space-separated labels in ascending index order; empty set formats as "".
inline std::string format_set(const ElementSet& s) {
  std::ostringstream out;
  bool first = true;
  std::vector<std::string> labels = s.labels();
  for (const auto& l : labels) {
    if (!first) out << ' ';
    out << l;
    first = false;
  }
  return out.str();
}

/// One set per line, canonical family order.
inline std::string format_family(const SetFamily& F) {
  std::ostringstream out;
  for (const auto& s : F.sets()) out << format_set(s) << '\n';
  return out.str();
}

/// One ordered pair per line, `<a> <b>`, in lexicographic index order.
inline std::string format_relation(const PairRelation& R) {
  std::ostringstream out;
  for (const auto& [a, b] : R.pairs())
    out << R.universe().label(a) << ' ' << R.universe().label(b) << '\n';
  return out.str();
}

enum class FileKind { matrix, partition };

/// Classifies an input file by its first token: `field` or `universe`.
inline FileKind sniff_file_kind(const std::string& text) {
  auto lines = detail::nonblank_lines(text);
  if (!lines.empty()) {
    auto toks = detail::split_ws(lines[0]);
    if (!toks.empty() && toks[0] == "field") return FileKind::matrix;
    if (!toks.empty() && toks[0] == "universe") return FileKind::partition;
  }
  fail(errc::parse_error, "input must start with 'field' (matrix) or 'universe' (partition)");
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::parse_error, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace rsmat
