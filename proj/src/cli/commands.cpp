#include "commands.hpp"

#include <bit>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "lieder/io.hpp"

namespace lieder::cli {

namespace {

Json make_document(const std::string& command, Json inputs) {
  Json doc;
  doc["schema"] = 1;
  doc["tool"] = "lieder";
  doc["version"] = kToolVersion;
  doc["command"] = command;
  doc["inputs"] = std::move(inputs);
  doc["status"] = "ok";
  doc["results"] = Json::object();
  return doc;
}

Json algebra_inputs(const LoadedAlgebra& loaded) {
  return Json{{"algebra", loaded.algebra.name()},
              {"field", loaded.algebra.field().to_string()},
              {"dim", loaded.algebra.dim()},
              {"digest", loaded.digest}};
}

std::string format_vector(std::span<const Scalar> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].to_string();
  }
  return out + ")";
}

std::string format_subspace(const Subspace& s, const std::string& indent) {
  std::string out;
  if (s.is_zero()) return indent + "(zero subspace)\n";
  for (std::size_t i = 0; i < s.dim(); ++i) out += indent + format_vector(s.basis_vector(i)) + "\n";
  return out;
}

std::string format_matrix(const Matrix& m, const std::string& indent) {
  std::vector<std::size_t> width(m.cols(), 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) width[c] = std::max(width[c], m.at(r, c).to_string().size());
  }
  std::ostringstream out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << indent << "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out << (c ? " " : "") << std::setw(static_cast<int>(width[c])) << m.at(r, c).to_string();
    }
    out << "]\n";
  }
  return out.str();
}

std::string length_text(const std::optional<std::size_t>& len) {
  return len ? std::to_string(*len) : std::string("not solvable");
}

Json length_json(const std::optional<std::size_t>& len) { return len ? Json(*len) : Json(nullptr); }

std::vector<std::size_t> parse_index_list(std::string_view list, std::size_t dim) {
  std::vector<std::size_t> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const auto comma = list.find(',', start);
    const std::string token(list.substr(start, comma == std::string_view::npos ? list.size() - start : comma - start));
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
      throw InvalidParameter("bad basis index '" + token + "'");
    }
    const std::size_t i = std::stoull(token);
    if (i < 1 || i > dim) throw InvalidParameter("basis index " + token + " outside 1.." + std::to_string(dim));
    out.push_back(i - 1);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::size_t parse_count(std::string_view token, const std::string& what) {
  const std::string s(token);
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw InvalidParameter("bad " + what + " '" + s + "'");
  }
  return std::stoull(s);
}

Json witness_json(const CharacteristicWitness& w) {
  return Json{{"derivation", matrix_to_json(w.derivation)},
              {"vector", vector_to_json(w.vector)},
              {"image", vector_to_json(w.image)}};
}

bool witness_verifies(const LieAlgebra& algebra, const Subspace& ideal, const CharacteristicWitness& w) {
  return is_derivation(algebra, w.derivation) && ideal.contains(w.vector) &&
         w.derivation.apply(w.vector) == w.image && !ideal.contains(w.image);
}

}  // namespace

std::uint64_t default_budget() {
  if (const char* env = std::getenv(kBudgetEnv)) {
    const std::string s(env);
    if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos) return std::stoull(s);
  }
  return kDefaultBudget;
}

LoadedAlgebra load_algebra(const AlgebraSource& source, bool require_valid) {
  LieAlgebra algebra(FieldSpec::rationals(), 0);
  if (std::filesystem::is_regular_file(source.spec)) {
    if (source.field) throw InvalidParameter("--field applies to catalog names, not files");
    algebra = parse_algebra(read_file(source.spec));
    algebra.set_name(std::filesystem::path(source.spec).filename().string());
  } else {
    std::optional<FieldSpec> field;
    if (source.field) field = FieldSpec::parse(*source.field);
    algebra = catalog_algebra(source.spec, field);
  }
  if (require_valid) {
    const auto report = validate(algebra);
    if (!report.ok()) throw ParseError(0, "not a Lie algebra: " + report.message);
  }
  LieAlgebra unnamed = algebra;
  unnamed.set_name("");
  std::string digest = fnv1a_hex(format_algebra(unnamed));
  return LoadedAlgebra{std::move(algebra), std::move(digest)};
}

IdealHandle resolve_ideal(const LieAlgebra& algebra, std::string_view selector, std::uint64_t budget) {
  const std::size_t n = algebra.dim();
  const FieldSpec f = algebra.field();
  if (selector == "full") return IdealHandle(algebra, Subspace::full(n, f));
  if (selector == "center") return IdealHandle(algebra, center(algebra));
  if (selector == "radical") return solvable_radical(algebra, budget);
  const auto colon = selector.find(':');
  const auto head = selector.substr(0, colon);
  const auto arg = colon == std::string_view::npos ? std::string_view() : selector.substr(colon + 1);
  if (head == "derived" && colon != std::string_view::npos) {
    const std::size_t k = parse_count(arg, "derived index");
    const auto series = derived_series(algebra, Subspace::full(n, f));
    return IdealHandle(algebra, series[std::min(k, series.size() - 1)]);
  }
  if ((head == "span" || head == "closure") && colon != std::string_view::npos) {
    std::vector<Vector> vectors;
    for (auto i : parse_index_list(arg, n)) vectors.push_back(unit_vector(n, i, f));
    const Subspace s = Subspace::span(vectors, n, f);
    if (head == "closure") return ideal_closure(algebra, s);
    return IdealHandle(algebra, s);
  }
  throw InvalidParameter("unknown ideal selector '" + std::string(selector) +
                         "' (full|derived:k|span:i,j|closure:i,j|center|radical)");
}

DerivationMap resolve_derivation(const LieAlgebra& algebra, std::string_view selector) {
  const std::size_t n = algebra.dim();
  if (selector.substr(0, 3) == "ad:") {
    const auto i = parse_index_list(selector.substr(3), n);
    if (i.size() != 1) throw InvalidParameter("ad:i takes one basis index");
    return ad(algebra, algebra.basis_vector(i.front()));
  }
  if (selector.substr(0, 4) == "der:") {
    const auto basis = derivation_algebra(algebra);
    const std::size_t i = parse_count(selector.substr(4), "derivation index");
    if (i < 1 || i > basis.size()) {
      throw InvalidParameter("der:" + std::to_string(i) + " outside 1.." + std::to_string(basis.size()));
    }
    return DerivationMap(algebra, basis[i - 1]);
  }
  if (selector == "dt") {
    const std::string& name = algebra.name();
    if (name.rfind("jacobson:", 0) != 0) throw InvalidParameter("'dt' is only defined for jacobson:p");
    const auto p = parse_count(std::string_view(name).substr(9), "prime");
    return jacobson(static_cast<std::uint32_t>(p)).d_dt;
  }
  const std::string path(selector);
  if (!std::filesystem::is_regular_file(path)) {
    throw InvalidParameter("unknown derivation '" + path + "' (ad:i|der:i|dt|file)");
  }
  return DerivationMap(algebra, parse_derivation(read_file(path), algebra.field()));
}

Json vector_to_json(std::span<const Scalar> v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

Json subspace_to_json(const Subspace& s) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) rows.push_back(vector_to_json(s.basis_vector(i)));
  return Json{{"dim", s.dim()}, {"basis", std::move(rows)}};
}

Subspace subspace_from_json(const Json& j, std::size_t n, FieldSpec field) {
  std::vector<Vector> rows;
  for (const auto& row : j.at("basis")) {
    Vector v;
    for (const auto& entry : row) v.push_back(Scalar::parse(entry.get<std::string>(), field));
    rows.push_back(std::move(v));
  }
  return Subspace::span(rows, n, field);
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(vector_to_json(m.row(r)));
  return rows;
}

Output cmd_validate(const AlgebraSource& source) {
  const auto loaded = load_algebra(source, false);
  const auto report = validate(loaded.algebra);
  Output out;
  out.document = make_document("validate", algebra_inputs(loaded));
  auto& results = out.document["results"];
  results["valid"] = report.ok();
  if (report.ok()) {
    out.text = loaded.algebra.name() + ": valid Lie algebra over " + loaded.algebra.field().to_string() +
               ", dim " + std::to_string(loaded.algebra.dim()) + "\n";
    return out;
  }
  const bool jacobi = report.violation == ValidationReport::Violation::Jacobi;
  results["violation"] = Json{{"kind", jacobi ? "jacobi" : "antisymmetry"},
                              {"indices", report.indices},
                              {"message", report.message}};
  out.document["status"] = "violation";
  out.exit_code = kExitViolation;
  out.text = loaded.algebra.name() + ": INVALID: " + report.message + "\n";
  return out;
}

Output cmd_series(const AlgebraSource& source, const std::string& ideal, std::uint64_t budget) {
  const auto loaded = load_algebra(source);
  const auto& algebra = loaded.algebra;
  const auto handle = resolve_ideal(algebra, ideal, budget);
  const auto series = derived_series(algebra, handle.space());
  const auto length = derived_length(algebra, handle.space());

  Json inputs = algebra_inputs(loaded);
  inputs["ideal"] = ideal;
  Output out;
  out.document = make_document("series", std::move(inputs));
  Json terms = Json::array();
  std::ostringstream text;
  text << "derived series of " << ideal << " in " << algebra.name() << " (" << algebra.field().to_string()
       << ")\n";
  for (std::size_t k = 0; k < series.size(); ++k) {
    terms.push_back(subspace_to_json(series[k]));
    text << "  I^(" << k << ")  dim " << series[k].dim() << "\n" << format_subspace(series[k], "      ");
  }
  text << "derived length: " << length_text(length) << "\n";
  auto& results = out.document["results"];
  Json dims = Json::array();
  for (const auto& s : series) dims.push_back(s.dim());
  results["dims"] = std::move(dims);
  results["terms"] = std::move(terms);
  results["solvable"] = length.has_value();
  results["derived_length"] = length_json(length);
  out.text = text.str();
  return out;
}

Output cmd_der(const AlgebraSource& source) {
  const auto loaded = load_algebra(source);
  const auto& algebra = loaded.algebra;
  const std::size_t n = algebra.dim();
  const FieldSpec f = algebra.field();
  const auto basis = derivation_algebra(algebra);

  // Inner derivations as vectors in F^(n*n), to count dim ad(L).
  std::vector<Vector> inner;
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix m = adjoint(algebra, algebra.basis_vector(i));
    Vector flat;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) flat.push_back(m.at(r, c));
    }
    inner.push_back(std::move(flat));
  }
  const std::size_t inner_dim = Subspace::span(inner, n * n, f).dim();

  Output out;
  out.document = make_document("der", algebra_inputs(loaded));
  auto& results = out.document["results"];
  results["dim"] = basis.size();
  results["inner_dim"] = inner_dim;
  results["outer_dim"] = basis.size() - inner_dim;
  Json mats = Json::array();
  std::ostringstream text;
  text << "Der(" << algebra.name() << "): dim " << basis.size() << " (inner " << inner_dim << ", outer "
       << basis.size() - inner_dim << ")\n";
  for (std::size_t i = 0; i < basis.size(); ++i) {
    mats.push_back(matrix_to_json(basis[i]));
    text << "  der:" << i + 1 << "\n" << format_matrix(basis[i], "    ");
  }
  results["basis"] = std::move(mats);
  out.text = text.str();
  return out;
}

Output cmd_radical(const AlgebraSource& source, std::uint64_t budget, bool exhaustive) {
  const auto loaded = load_algebra(source);
  const auto& algebra = loaded.algebra;
  const bool char0 = !algebra.field().is_prime_field();
  RadicalSearch search;
  search.budget = budget;
  search.strategy = exhaustive ? RadicalSearch::Strategy::Exhaustive : RadicalSearch::Strategy::Pruned;
  const auto radical = char0 ? radical_char0(algebra) : radical_bruteforce(algebra, search);
  const auto length = derived_length(algebra, radical.space());

  Json inputs = algebra_inputs(loaded);
  inputs["budget"] = budget;
  Output out;
  out.document = make_document("radical", std::move(inputs));
  auto& results = out.document["results"];
  results["method"] = to_string(char0 ? RadicalReport::Method::KillingChar0
                                      : RadicalReport::Method::BruteForceMembership);
  results["radical"] = subspace_to_json(radical.space());
  results["derived_length"] = length_json(length);
  std::ostringstream text;
  text << "S(" << algebra.name() << "): dim " << radical.dim() << " of " << algebra.dim() << ", derived length "
       << length_text(length) << " [" << results["method"].get<std::string>() << "]\n"
       << format_subspace(radical.space(), "  ");
  out.text = text.str();
  return out;
}

Output cmd_characteristic(const AlgebraSource& source, std::uint64_t budget, bool exhaustive) {
  const auto loaded = load_algebra(source);
  const auto& algebra = loaded.algebra;
  RadicalSearch search;
  search.budget = budget;
  search.strategy = exhaustive ? RadicalSearch::Strategy::Exhaustive : RadicalSearch::Strategy::Pruned;
  const auto report = analyze_radical(algebra, search);
  const FieldSpec f = algebra.field();
  const bool hypotheses = !f.is_prime_field() || below_log2(report.derived_len, f.characteristic());

  Json inputs = algebra_inputs(loaded);
  inputs["budget"] = budget;
  Output out;
  out.document = make_document("characteristic", std::move(inputs));
  auto& results = out.document["results"];
  results["method"] = to_string(report.method);
  results["radical"] = subspace_to_json(report.radical.space());
  results["derived_length"] = report.derived_len;
  results["characteristic"] = report.characteristic;
  results["theorem_hypotheses_met"] = hypotheses;
  std::ostringstream text;
  text << "S(" << algebra.name() << "): dim " << report.radical.dim() << " of " << algebra.dim()
       << ", derived length " << report.derived_len << "\n"
       << format_subspace(report.radical.space(), "  ") << "characteristic: "
       << (report.characteristic ? "yes" : "no") << "\n"
       << "hypotheses (char 0 or s(S) < log2 p): " << (hypotheses ? "met" : "not met") << "\n";
  if (report.witness) {
    const bool verified = witness_verifies(algebra, report.radical.space(), *report.witness);
    Json w = witness_json(*report.witness);
    w["verified"] = verified;
    results["witness"] = std::move(w);
    text << "witness: D v = " << format_vector(report.witness->image) << " escapes S for v = "
         << format_vector(report.witness->vector) << (verified ? " (verified)" : " (NOT VERIFIED)") << "\n"
         << format_matrix(report.witness->derivation, "  ");
    if (!verified) out.exit_code = kExitViolation;
  }
  if (hypotheses && !report.characteristic) {
    out.exit_code = kExitViolation;
    text << "VIOLATION: radical is not characteristic although the hypotheses hold\n";
  }
  if (out.exit_code != kExitOk) out.document["status"] = "violation";
  out.text = text.str();
  return out;
}

Output cmd_dclosure(const AlgebraSource& source, const std::string& derivation, const std::string& ideal,
                    std::size_t k, std::uint64_t budget) {
  const auto loaded = load_algebra(source);
  const auto& algebra = loaded.algebra;
  const auto handle = resolve_ideal(algebra, ideal, budget);
  const auto d = resolve_derivation(algebra, derivation);
  const auto closure = d_closure(algebra, handle, d, k);
  const auto n = derived_length(algebra, handle.space());
  const FieldSpec f = algebra.field();

  Json inputs = algebra_inputs(loaded);
  inputs["ideal"] = ideal;
  inputs["derivation"] = derivation;
  inputs["k"] = k;
  Output out;
  out.document = make_document("dclosure", std::move(inputs));
  auto& results = out.document["results"];
  results["ideal_derived_length"] = length_json(n);
  results["stabilized_at"] = closure.stabilized_at ? Json(*closure.stabilized_at) : Json(nullptr);

  std::ostringstream text;
  text << "D-closures of " << ideal << " (dim " << handle.dim() << ", derived length " << length_text(n)
       << ") in " << algebra.name() << " under " << derivation << "\n";
  Json terms = Json::array();
  bool violated = false;
  for (std::size_t m = 0; m <= k; ++m) {
    const Subspace& jm = closure.terms[std::min(m, closure.terms.size() - 1)];
    const auto len = derived_length(algebra, jm);
    Json term{{"m", m}, {"dim", jm.dim()}, {"derived_length", length_json(len)}};
    text << "  J_" << m << ": dim " << std::setw(3) << jm.dim() << ", derived length " << length_text(len);
    if (n && *n >= 1 && m >= 1) {
      if (m == 1) {
        const bool hyp = !f.is_prime_field() || below_log2(*n, f.characteristic());
        const bool holds = len && *len <= 2 * *n;
        term["solvability_bound"] = Json{{"bound", 2 * *n}, {"hypotheses_met", hyp}, {"holds", holds}};
        text << ", 2n = " << 2 * *n << (hyp ? "" : " (hypotheses not met)");
        violated = violated || (hyp && !holds);
      }
      if (!f.is_prime_field()) {
        const auto bound = bound_f(*n, m);
        const bool holds = len && *len <= bound;
        term["degree_bound"] = Json{{"bound", bound}, {"holds", holds}};
        text << ", f_n(" << m << ") = " << bound;
        violated = violated || !holds;
      }
    }
    text << "\n";
    terms.push_back(std::move(term));
  }
  if (closure.stabilized_at) text << "stabilized at m = " << *closure.stabilized_at << "\n";
  results["terms"] = std::move(terms);
  results["closure"] = subspace_to_json(closure.ideal.space());
  if (violated) {
    out.exit_code = kExitViolation;
    out.document["status"] = "violation";
    text << "VIOLATION: an observed derived length exceeds its bound\n";
  }
  out.text = text.str();
  return out;
}

Output cmd_bounds(std::size_t n, std::size_t k_max) {
  if (n == 0) throw InvalidParameter("--n must be at least 1");
  const auto table = bound_table(n, k_max);
  const auto poly = bound_polynomial(n);
  bool matches = true;
  for (std::size_t k = 0; k <= k_max; ++k) {
    matches = matches && evaluate_polynomial(poly, k) == mpq_class(mpz_class(std::to_string(table.values[k])));
  }
  const auto crossover = doubling_crossover(n, 56);
  const auto crossover_half = doubling_crossover(n, 56, true);

  Output out;
  out.document = make_document("bounds", Json{{"n", n}, {"kmax", k_max}});
  auto& results = out.document["results"];
  results["base_rule"] = table.base_rule;
  results["values"] = table.values;
  Json coeffs = Json::array();
  for (const auto& c : poly) coeffs.push_back(c.get_str());
  results["polynomial"] = coeffs;
  results["polynomial_matches_table"] = matches;
  results["below_2^k_n_from"] = crossover ? Json(*crossover) : Json(nullptr);
  results["below_2^(k-1)_n_from"] = crossover_half ? Json(*crossover_half) : Json(nullptr);

  std::ostringstream text;
  text << "f_" << n << ": " << table.base_rule << "\n";
  for (std::size_t k = 0; k <= k_max; ++k) text << "  k = " << std::setw(3) << k << "  " << table.values[k] << "\n";
  text << "interpolant (ascending):";
  for (const auto& c : poly) text << " " << c.get_str();
  text << (matches ? "  [matches table]" : "  [MISMATCH]") << "\n";
  if (crossover) text << "f_n(k) < 2^k n for " << *crossover << " <= k <= 56\n";
  if (crossover_half) text << "f_n(k) < 2^(k-1) n for " << *crossover_half << " <= k <= 56\n";
  if (!matches) {
    out.exit_code = kExitViolation;
    out.document["status"] = "violation";
  }
  out.text = text.str();
  return out;
}

Output cmd_counterexample(std::uint64_t p, bool bruteforce, std::uint64_t budget) {
  if (p < 3 || !is_prime(p)) throw InvalidParameter("--p must be an odd prime");
  const auto current = jacobson(static_cast<std::uint32_t>(p));
  const auto& algebra = current.algebra;
  const Subspace& claimed = current.radical.space();

  // Maximality of the claimed radical: search F^n / claimed for vectors that
  // generate solvable ideals.
  RadicalSearch seeded;
  seeded.budget = budget;
  seeded.seed = claimed;
  const bool maximal = radical_bruteforce(algebra, seeded).space() == claimed;
  std::optional<bool> brute_agrees;
  if (bruteforce) {
    RadicalSearch full_search;
    full_search.budget = budget;
    full_search.strategy = RadicalSearch::Strategy::Exhaustive;
    brute_agrees = radical_bruteforce(algebra, full_search).space() == claimed;
  }

  const auto length = derived_length(algebra, claimed);
  const std::size_t expected_length = static_cast<std::size_t>(std::bit_width(p));  // floor(log2 p) + 1
  const auto verdict = is_characteristic(algebra, current.radical);
  const bool witness_ok = verdict.witness && witness_verifies(algebra, claimed, *verdict.witness);
  const bool dt_escapes = !subspace_leq(apply_map(current.d_dt.matrix(), claimed), claimed);
  const auto j1 = d_closure(algebra, current.radical, current.d_dt, 1);
  const auto j1_length = derived_length(algebra, j1.ideal.space());
  const std::size_t depth = admissible_depth(p);
  const bool hypotheses = length && below_log2(*length, p);

  const bool ok = claimed.dim() == 3 * (p - 1) && maximal && brute_agrees.value_or(true) && length &&
                  *length == expected_length && !verdict.characteristic && witness_ok && dt_escapes &&
                  !hypotheses;

  Output out;
  out.document = make_document("counterexample", Json{{"p", p}, {"budget", budget}, {"bruteforce", bruteforce}});
  auto& results = out.document["results"];
  results["algebra"] = algebra.name();
  results["dim"] = algebra.dim();
  results["radical"] = subspace_to_json(claimed);
  results["radical_maximal"] = maximal;
  results["bruteforce_agrees"] = brute_agrees ? Json(*brute_agrees) : Json(nullptr);
  results["derived_length"] = length_json(length);
  results["expected_derived_length"] = expected_length;
  results["characteristic"] = verdict.characteristic;
  if (verdict.witness) {
    Json w = witness_json(*verdict.witness);
    w["verified"] = witness_ok;
    results["witness"] = std::move(w);
  }
  results["d_dt_escapes"] = dt_escapes;
  results["j1_dim"] = j1.ideal.dim();
  results["j1_derived_length"] = length_json(j1_length);
  results["admissible_depth"] = depth;
  results["theorem_hypotheses_met"] = hypotheses;
  if (!ok) {
    out.exit_code = kExitViolation;
    out.document["status"] = "violation";
  }

  std::ostringstream text;
  text << algebra.name() << " = sl2 (x) F[t]/(t^" << p << ") over GF(" << p << "), dim " << algebra.dim() << "\n"
       << "radical S (x) tF[t]: dim " << claimed.dim() << " of " << algebra.dim()
       << (maximal ? ", maximal solvable (verified)" : ", NOT maximal") << "\n";
  if (brute_agrees) text << "exhaustive search agrees: " << (*brute_agrees ? "yes" : "NO") << "\n";
  text << "derived length: " << length_text(length) << " (floor(log2 p)+1 = " << expected_length << ")\n"
       << "characteristic: " << (verdict.characteristic ? "yes" : "no") << "\n";
  if (verdict.witness) {
    text << "witness: D v = " << format_vector(verdict.witness->image) << "\n         v   = "
         << format_vector(verdict.witness->vector) << (witness_ok ? " (verified)" : " (NOT VERIFIED)") << "\n";
  }
  text << "1 (x) d/dt moves S out of itself: " << (dt_escapes ? "yes" : "no") << "; S + D(S): dim " << j1.ideal.dim()
       << ", derived length " << length_text(j1_length) << "\n"
       << "admissible depth of " << p << ": " << depth << " (s(S) < log2 p "
       << (hypotheses ? "holds" : "fails") << ")\n"
       << (ok ? "all checks passed\n" : "CHECK FAILED\n");
  out.text = text.str();
  return out;
}

Json campaign_to_json(const CampaignResult& result) {
  Json records = Json::array();
  for (const auto& rec : result.records) {
    Json obs = Json::array();
    for (const auto& o : rec.observations) {
      obs.push_back(Json{{"label", o.label}, {"applicable", o.applicable}, {"holds", o.holds}, {"detail", o.detail}});
    }
    records.push_back(Json{{"index", rec.index},
                           {"seed", rec.seed},
                           {"description", rec.description},
                           {"algebra_dim", rec.algebra_dim},
                           {"ideal_dim", rec.ideal_dim},
                           {"ideal_length", rec.ideal_length},
                           {"observations", std::move(obs)}});
  }
  return Json{{"checks", result.checks},
              {"applicable", result.applicable},
              {"violations", result.violations},
              {"records", std::move(records)}};
}

Output cmd_check(const CampaignOptions& options) {
  const auto result = run_campaign(options);
  Output out;
  out.document = make_document("check", Json{{"suite", to_string(options.suite)},
                                             {"seed", options.seed},
                                             {"count", options.count},
                                             {"field", options.field.to_string()},
                                             {"kmax", options.k_max}});
  out.document["results"] = campaign_to_json(result);
  std::ostringstream text;
  text << "suite " << to_string(options.suite) << " over " << options.field.to_string() << ", seed " << options.seed
       << ": " << options.count << " instances, " << result.checks << " checks, " << result.applicable
       << " with hypotheses met, " << result.violations << " violations\n";
  for (const auto& rec : result.records) {
    for (const auto& o : rec.observations) {
      if (o.applicable && !o.holds) {
        text << "  VIOLATION #" << rec.index << " (seed " << rec.seed << ") " << rec.description << ": " << o.label
             << " -- " << o.detail << "\n";
      }
    }
  }
  if (!result.ok()) {
    out.exit_code = kExitViolation;
    out.document["status"] = "violation";
  }
  out.text = text.str();
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact derived series, derivations and solvable radicals of Lie algebras over Q and GF(p)", "lieder"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kToolVersion);

  bool json = false;
  std::optional<std::string> field;
  std::uint64_t budget = default_budget();
  app.add_flag("--json", json, "Print the report document as JSON");
  app.add_option("--field", field, "Field for catalog names: Q or GF(p)");
  app.add_option("--budget", budget, "Brute-force radical budget (default $LIEDER_BUDGET or 1000000)");

  std::string algebra;
  std::string ideal = "full";
  std::string derivation;
  std::size_t k = 3;
  std::size_t n = 1;
  std::size_t k_max = 12;
  std::uint64_t p = 5;
  bool exhaustive = false;
  bool bruteforce = false;
  std::string suite = "solvability";
  std::uint64_t seed = 0;
  std::size_t count = 100;
  std::size_t check_k_max = CampaignOptions{}.k_max;

  auto algebra_arg = [&](CLI::App* sub) {
    sub->add_option("algebra", algebra, "Algebra file or catalog name (abelian:n, heisenberg, affine, sl2, borel:n, jacobson:p, joined by +)")
        ->required();
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check antisymmetry and the Jacobi identity");
  algebra_arg(validate_cmd);

  auto* series_cmd = app.add_subcommand("series", "Derived series and derived length of an ideal");
  algebra_arg(series_cmd);
  series_cmd->add_option("--ideal", ideal, "full|derived:k|span:i,j|closure:i,j|center|radical");

  auto* der_cmd = app.add_subcommand("der", "Basis of the derivation algebra");
  algebra_arg(der_cmd);

  auto* radical_cmd = app.add_subcommand("radical", "Solvable radical");
  algebra_arg(radical_cmd);
  radical_cmd->add_flag("--exhaustive", exhaustive, "Visit every projective point over GF(p)");

  auto* char_cmd = app.add_subcommand("characteristic", "Is the solvable radical stable under Der(L)?");
  algebra_arg(char_cmd);
  char_cmd->add_flag("--exhaustive", exhaustive, "Visit every projective point over GF(p)");

  auto* dclosure_cmd = app.add_subcommand("dclosure", "D-closures J_0..J_k of an ideal and their bounds");
  algebra_arg(dclosure_cmd);
  dclosure_cmd->add_option("--derivation", derivation, "ad:i|der:i|dt|file")->required();
  dclosure_cmd->add_option("--ideal", ideal, "full|derived:k|span:i,j|closure:i,j|center|radical");
  dclosure_cmd->add_option("--k", k, "Number of closure steps")->check(CLI::Range(0, 64));

  auto* bounds_cmd = app.add_subcommand("bounds", "Table, interpolant and crossovers of f_n(k)");
  bounds_cmd->add_option("--n", n, "Derived length n")->check(CLI::Range(1, 8));
  bounds_cmd->add_option("--kmax", k_max, "Last k of the table")->check(CLI::Range(0, 40));

  auto* counter_cmd = app.add_subcommand("counterexample", "Non-characteristic radical of sl2 (x) F[t]/(t^p)");
  counter_cmd->add_option("--p", p, "Odd prime")->check(CLI::Range(3, 97));
  counter_cmd->add_flag("--bruteforce", bruteforce, "Also run the exhaustive radical search");

  auto* check_cmd = app.add_subcommand("check", "Randomized campaign on solvable instances");
  check_cmd->add_option("--suite", suite, "solvability|degree|power|key");
  check_cmd->add_option("--seed", seed, "Campaign seed");
  check_cmd->add_option("--count", count, "Number of instances");
  check_cmd->add_option("--kmax", check_k_max, "Largest k for the degree and key suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::string command;
  try {
    const AlgebraSource source{algebra, field};
    Output result;
    if (validate_cmd->parsed()) {
      command = "validate";
      result = cmd_validate(source);
    } else if (series_cmd->parsed()) {
      command = "series";
      result = cmd_series(source, ideal, budget);
    } else if (der_cmd->parsed()) {
      command = "der";
      result = cmd_der(source);
    } else if (radical_cmd->parsed()) {
      command = "radical";
      result = cmd_radical(source, budget, exhaustive);
    } else if (char_cmd->parsed()) {
      command = "characteristic";
      result = cmd_characteristic(source, budget, exhaustive);
    } else if (dclosure_cmd->parsed()) {
      command = "dclosure";
      result = cmd_dclosure(source, derivation, ideal, k, budget);
    } else if (bounds_cmd->parsed()) {
      command = "bounds";
      result = cmd_bounds(n, k_max);
    } else if (counter_cmd->parsed()) {
      command = "counterexample";
      result = cmd_counterexample(p, bruteforce, budget);
    } else {
      command = "check";
      CampaignOptions options;
      options.suite = parse_suite(suite);
      options.seed = seed;
      options.count = count;
      options.k_max = check_k_max;
      if (field) options.field = FieldSpec::parse(*field);
      result = cmd_check(options);
    }
    if (json) {
      out << result.document.dump(2) << "\n";
    } else {
      out << result.text;
    }
    return result.exit_code;
  } catch (const BudgetExceeded& e) {
    if (json) {
      Json doc = make_document(command, Json::object());
      doc["status"] = "budget";
      doc["results"] = Json{{"required", e.required()}, {"budget", e.budget()}, {"message", e.what()}};
      out << doc.dump(2) << "\n";
    }
    err << "lieder: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    if (json) {
      Json doc = make_document(command, Json::object());
      doc["status"] = "error";
      doc["results"] = Json{{"message", e.what()}};
      out << doc.dump(2) << "\n";
    }
    err << "lieder: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace lieder::cli
