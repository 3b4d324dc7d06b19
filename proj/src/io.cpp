#include "lieder/io.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace lieder {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

std::size_t parse_count(std::string_view token, std::size_t line) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string_view::npos) {
    throw ParseError(line, "expected a nonnegative integer, got '" + std::string(token) + "'");
  }
  return std::stoull(std::string(token));
}

std::size_t parse_index(std::string_view token, std::size_t dim, std::size_t line) {
  const std::size_t i = parse_count(token, line);
  if (i < 1 || i > dim) {
    throw ParseError(line, "basis index " + std::string(token) + " outside 1.." + std::to_string(dim));
  }
  return i - 1;
}

template <class Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    const auto line = text.substr(start, end == std::string_view::npos ? text.size() - start : end - start);
    ++number;
    auto tokens = split_ws(strip_comment(line));
    if (!tokens.empty()) fn(tokens, number);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
}

Scalar parse_scalar_at(std::string_view token, FieldSpec field, std::size_t line) {
  try {
    return Scalar::parse(token, field);
  } catch (const ParseError& e) {
    throw ParseError(line, e.what());
  } catch (const DivisionByZero&) {
    throw ParseError(line, "scalar '" + std::string(token) + "' divides by zero in " + field.to_string());
  }
}

}  // namespace

LieAlgebra parse_algebra(std::string_view text) {
  std::optional<FieldSpec> field;
  std::optional<std::size_t> dim;
  struct Entry {
    Vector value;
    std::size_t line;
  };
  std::map<std::pair<std::size_t, std::size_t>, Entry> entries;

  for_each_line(text, [&](const std::vector<std::string_view>& tokens, std::size_t line) {
    const auto keyword = tokens.front();
    if (keyword == "field") {
      if (field) throw ParseError(line, "duplicate field line");
      if (tokens.size() != 2) throw ParseError(line, "expected 'field Q' or 'field GF(p)'");
      try {
        field = FieldSpec::parse(tokens[1]);
      } catch (const Error& e) {
        throw ParseError(line, e.what());
      }
    } else if (keyword == "dim") {
      if (dim) throw ParseError(line, "duplicate dim line");
      if (tokens.size() != 2) throw ParseError(line, "expected 'dim n'");
      dim = parse_count(tokens[1], line);
    } else if (keyword == "b") {
      if (!field || !dim) throw ParseError(line, "bracket line before 'field' and 'dim'");
      if (tokens.size() < 4 || tokens[3] != ":") throw ParseError(line, "expected 'b i j : c*k ...'");
      const std::size_t i = parse_index(tokens[1], *dim, line);
      const std::size_t j = parse_index(tokens[2], *dim, line);
      Vector value = zero_vector(*dim, *field);
      for (std::size_t t = 4; t < tokens.size(); ++t) {
        const auto term = tokens[t];
        const auto star = term.find('*');
        if (star == std::string_view::npos) {
          value[parse_index(term, *dim, line)] += Scalar::one(*field);
        } else {
          value[parse_index(term.substr(star + 1), *dim, line)] +=
              parse_scalar_at(term.substr(0, star), *field, line);
        }
      }
      if (i == j && !is_zero(value)) {
        throw ParseError(line, "[e_" + std::to_string(i + 1) + ",e_" + std::to_string(i + 1) + "] must be zero");
      }
      if (entries.count({i, j})) throw ParseError(line, "bracket listed twice");
      entries.emplace(std::make_pair(i, j), Entry{std::move(value), line});
    } else {
      throw ParseError(line, "unknown keyword '" + std::string(keyword) + "'");
    }
  });
  if (!field) throw ParseError(0, "missing 'field' line");
  if (!dim) throw ParseError(0, "missing 'dim' line");

  LieAlgebra algebra(*field, *dim);
  for (const auto& [key, entry] : entries) {
    const auto [i, j] = key;
    if (i == j) continue;
    const auto mirror = entries.find({j, i});
    if (mirror != entries.end()) {
      if (add(entry.value, mirror->second.value) != zero_vector(*dim, *field)) {
        throw ParseError(std::max(entry.line, mirror->second.line),
                         "conflicting entries for [e_" + std::to_string(i + 1) + ",e_" +
                             std::to_string(j + 1) + "] and [e_" + std::to_string(j + 1) + ",e_" +
                             std::to_string(i + 1) + "]");
      }
    }
    algebra.set_bracket(i, j, entry.value);
  }
  return algebra;
}

std::string format_algebra(const LieAlgebra& algebra) {
  std::ostringstream out;
  if (!algebra.name().empty()) out << "# " << algebra.name() << "\n";
  out << "field " << algebra.field().to_string() << "\n";
  out << "dim " << algebra.dim() << "\n";
  for (std::size_t i = 0; i < algebra.dim(); ++i) {
    for (std::size_t j = i + 1; j < algebra.dim(); ++j) {
      const auto& v = algebra.structure(i, j);
      if (is_zero(v)) continue;
      out << "b " << i + 1 << " " << j + 1 << " :";
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (!v[k].is_zero()) out << " " << v[k] << "*" << k + 1;
      }
      out << "\n";
    }
  }
  return out.str();
}

Matrix parse_derivation(std::string_view text, FieldSpec field) {
  std::optional<std::size_t> dim;
  std::vector<Vector> rows;
  for_each_line(text, [&](const std::vector<std::string_view>& tokens, std::size_t line) {
    if (!dim) {
      if (tokens.size() != 2 || tokens[0] != "dim") throw ParseError(line, "expected 'dim n'");
      dim = parse_count(tokens[1], line);
      return;
    }
    if (rows.size() == *dim) throw ParseError(line, "more than " + std::to_string(*dim) + " rows");
    if (tokens.size() != *dim) {
      throw ParseError(line, "expected " + std::to_string(*dim) + " entries, got " + std::to_string(tokens.size()));
    }
    Vector row;
    for (auto t : tokens) row.push_back(parse_scalar_at(t, field, line));
    rows.push_back(std::move(row));
  });
  if (!dim) throw ParseError(0, "missing 'dim' line");
  if (rows.size() != *dim) {
    throw ParseError(0, "expected " + std::to_string(*dim) + " rows, got " + std::to_string(rows.size()));
  }
  return Matrix::from_rows(rows, *dim, field);
}

std::string format_derivation(const Matrix& m) {
  std::ostringstream out;
  out << "dim " << m.rows() << "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m.at(r, c);
    out << "\n";
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace lieder
