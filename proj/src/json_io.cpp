#include "lieb/json_io.hpp"
#include "lieb/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace lieb {

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return Rational::from_string(j.get<std::string>());
  fail(errc::parse_error, "expected a rational as integer or \"p/q\" string");
}

json rational_to_json(const Rational& r) { return r.str(); }

AlgebraDoc algebra_doc_from_json(const json& j) {
  AlgebraDoc doc;
  if (!j.is_object()) fail(errc::parse_error, "algebra document must be an object");
  doc.name = j.value("name", std::string("anonymous"));
  if (!j.contains("dim")) fail(errc::parse_error, "algebra document needs \"dim\"");
  doc.dim = j.at("dim").get<int>();
  if (j.contains("basis")) doc.basis = j.at("basis").get<std::vector<std::string>>();
  for (const auto& e : j.value("brackets", json::array())) {
    AlgebraDoc::Entry entry;
    entry.i = e.at("i").get<int>() - 1;
    entry.j = e.at("j").get<int>() - 1;
    for (const auto& [key, val] : e.at("result").items()) {
      int k = 0;
      try {
        k = std::stoi(key) - 1;
      } catch (...) {
        fail(errc::parse_error, "bracket result key must be a basis index");
      }
      entry.result.emplace_back(k, rational_from_json(val));
    }
    doc.brackets.push_back(std::move(entry));
  }
  return doc;
}

json algebra_doc_to_json(const LieAlgebra& L) {
  json j;
  j["name"] = L.name();
  j["dim"] = L.dim();
  j["basis"] = L.basis_names();
  json brackets = json::array();
  for (const auto& [key, result] : L.entries()) {
    json e;
    e["i"] = key.first + 1;
    e["j"] = key.second + 1;
    json res = json::object();
    for (const auto& [k, c] : result) res[std::to_string(k + 1)] = c.str();
    e["result"] = res;
    brackets.push_back(e);
  }
  j["brackets"] = brackets;
  return j;
}

GradationDoc gradation_doc_from_json(const json& j) {
  GradationDoc doc;
  const json& g = j.at("group");
  int rank = g.at("rank").get<int>();
  if (g.contains("moduli"))
    for (const auto& m : g.at("moduli")) doc.group.moduli.push_back(m.get<long>());
  else
    doc.group.moduli.assign(rank, 0);
  if (static_cast<int>(doc.group.moduli.size()) != rank)
    fail(errc::parse_error, "gradation group rank does not match moduli length");
  for (const auto& row : j.at("degrees")) {
    Degree d;
    for (const auto& x : row) d.push_back(rational_from_json(x));
    doc.degrees.push_back(std::move(d));
  }
  return doc;
}

json gradation_to_json(const Gradation& G) {
  json j;
  j["group"]["rank"] = G.group().rank();
  j["group"]["moduli"] = G.group().moduli;
  json degrees = json::array();
  for (const auto& d : G.degrees()) degrees.push_back(degree_to_json(d));
  j["degrees"] = degrees;
  return j;
}

json degree_to_json(const Degree& d) {
  json row = json::array();
  for (const auto& x : d) row.push_back(x.str());
  return row;
}

MultiVector multivector_from_json(AlgebraPtr alg, const json& j) {
  MultiVector v(alg);
  const json& terms = j.contains("terms") ? j.at("terms") : j;
  for (const auto& [key, val] : terms.items()) {
    Tuple t;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) {
      try {
        t.push_back(std::stoi(part) - 1);
      } catch (...) {
        fail(errc::parse_error, "bad multivector index tuple: " + key);
      }
    }
    v.add_term(std::move(t), rational_from_json(val));
  }
  return v;
}

json terms_to_json(const MultiVector& v) {
  json terms = json::object();
  for (const auto& [t, c] : v.terms()) {
    std::string key;
    for (size_t i = 0; i < t.size(); ++i) {
      if (i) key += ",";
      key += std::to_string(t[i] + 1);
    }
    terms[key] = c.str();
  }
  return terms;
}

json multivector_to_json(const MultiVector& v) {
  json j;
  j["terms"] = terms_to_json(v);
  return j;
}

namespace {

/// Splits a symbol like "e12" or "JpKp" into declared basis names, longest
/// match first with backtracking; falls back to the letter+digit convention
/// ("e123" -> e1 ^ e2 ^ e3) when all names are one letter plus one digit.
bool segment_names(const std::string& token, const std::vector<std::string>& names, Tuple& out) {
  if (token.empty()) return true;
  for (size_t len = token.size(); len >= 1; --len) {
    std::string head = token.substr(0, len);
    for (size_t i = 0; i < names.size(); ++i) {
      if (names[i] == head) {
        out.push_back(static_cast<int>(i));
        if (segment_names(token.substr(len), names, out)) return true;
        out.pop_back();
      }
    }
  }
  return false;
}

bool digit_convention(const std::string& token, const std::vector<std::string>& names, Tuple& out) {
  for (const auto& n : names)
    if (n.size() != 2) return false;
  char letter = names[0][0];
  for (const auto& n : names)
    if (n[0] != letter || !std::isdigit(static_cast<unsigned char>(n[1]))) return false;
  if (token.empty() || token[0] != letter) return false;
  for (size_t i = 1; i < token.size(); ++i) {
    std::string name = {letter, token[i]};
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) return false;
    out.push_back(static_cast<int>(it - names.begin()));
  }
  return !out.empty();
}

} // namespace

MultiVector parse_multivector(AlgebraPtr alg, const std::string& text) {
  MultiVector v(alg);
  const auto& names = alg->basis_names();
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size()) fail(errc::parse_error, "empty multivector expression");
  bool first = true;
  while (pos < text.size()) {
    skip_ws();
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '-') sign = -1;
      ++pos;
      skip_ws();
    } else if (!first) {
      fail(errc::parse_error, "expected '+' or '-' between terms");
    }
    first = false;
    // optional coefficient
    Rational coeff(1);
    size_t start = pos;
    while (pos < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
      ++pos;
    bool have_coeff = pos > start;
    if (have_coeff) coeff = Rational::from_string(text.substr(start, pos - start));
    skip_ws();
    bool explicit_star = false;
    if (pos < text.size() && text[pos] == '*') {
      explicit_star = true;
      ++pos;
      skip_ws();
    }
    // symbol
    start = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                 text[pos] == '_' || text[pos] == '\''))
      ++pos;
    std::string symbol = text.substr(start, pos - start);
    if (symbol.empty()) {
      if (have_coeff && !explicit_star) {
        v.add_term({}, sign < 0 ? -coeff : coeff); // scalar term
        skip_ws();
        continue;
      }
      fail(errc::parse_error, "expected a basis symbol in multivector expression");
    }
    Tuple t;
    if (!segment_names(symbol, names, t)) {
      t.clear();
      if (!digit_convention(symbol, names, t))
        fail(errc::parse_error, "cannot resolve symbol '" + symbol + "' against the basis");
    }
    v.add_term(std::move(t), sign < 0 ? -coeff : coeff);
    skip_ws();
  }
  return v;
}

json subspace_to_json(const Subspace& s) {
  json j;
  j["ambient"] = s.ambient();
  j["dim"] = s.dim();
  j["basis"] = matrix_to_json(s.basis());
  return j;
}

json matrix_to_json(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

json form_to_json(const MultiLinearForm& f, const std::vector<std::string>& axis_labels) {
  json j;
  j["arity"] = f.arity();
  j["grade"] = f.grade();
  j["labels"] = axis_labels;
  std::function<json(int, size_t, size_t)> build = [&](int depth, size_t offset, size_t stride) -> json {
    json arr = json::array();
    size_t inner = stride / static_cast<size_t>(f.dim());
    for (int i = 0; i < f.dim(); ++i) {
      if (depth + 1 == f.arity())
        arr.push_back(f.data()[offset + static_cast<size_t>(i)].str());
      else
        arr.push_back(build(depth + 1, offset + static_cast<size_t>(i) * inner, inner));
    }
    return arr;
  };
  size_t total = f.size();
  j["tensor"] = f.arity() == 0 ? json::array() : build(0, 0, total);
  return j;
}

std::vector<std::string> lambda_basis_labels(const LieAlgebra& L, int m) {
  std::vector<std::string> labels;
  for (const Tuple& t : all_tuples(L.dim(), m)) {
    std::string s;
    for (int i : t) s += L.basis_names()[i];
    if (s.empty()) s = "1";
    labels.push_back(s);
  }
  return labels;
}

} // namespace lieb
