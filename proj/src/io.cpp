#include "acn/io.hpp"

#include "acn/expr.hpp"

#include <fstream>
#include <sstream>

namespace acn::io {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw ValidationError("document field '" + where + "': " + what);
}

const json& need(const json& j, const char* key) {
  if (!j.contains(key)) throw ValidationError("document is missing required field '" + std::string(key) + "'");
  return j.at(key);
}

std::vector<std::string> string_list(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array of strings");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) bad(where, "expected an array of strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

std::vector<std::vector<std::string>> string_matrix(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array of rows");
  std::vector<std::vector<std::string>> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(string_list(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

Scalar parse_entry(const TablePtr& table, const std::string& text, const std::string& where) {
  try {
    return expr::parse(table, text);
  } catch (const ParseError& e) {
    throw ParseError("document field '" + where + "': " + e.what());
  }
}

SVec parse_vec(const TablePtr& table, const std::vector<std::string>& xs, std::size_t dim,
               const std::string& where) {
  if (xs.size() != dim) bad(where, "expected " + std::to_string(dim) + " entries");
  SVec v(dim);
  for (std::size_t i = 0; i < dim; ++i)
    v[i] = parse_entry(table, xs[i], where + "[" + std::to_string(i) + "]");
  return v;
}

SMat parse_mat(const TablePtr& table, const std::vector<std::vector<std::string>>& rows,
               std::size_t dim, const std::string& where) {
  if (rows.size() != dim) bad(where, "expected " + std::to_string(dim) + " rows");
  SMat m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (rows[i].size() != dim) bad(where, "row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < dim; ++j)
      m(i, j) = parse_entry(table, rows[i][j],
                            where + "[" + std::to_string(i) + "][" + std::to_string(j) + "]");
  }
  return m;
}

std::string fraction_expr(const Fraction& f, const std::string& where) {
  auto s = f.as_scalar();
  if (!s) bad(where, "value is not polynomial; cannot serialize");
  return expr::to_string(*s);
}

} // namespace

InputDocument document_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("document root must be a JSON object");
  InputDocument doc;
  doc.symbols = string_list(need(j, "symbols"), "symbols");
  if (j.contains("relations")) {
    const json& rels = j.at("relations");
    if (!rels.is_array()) bad("relations", "expected an array");
    for (std::size_t i = 0; i < rels.size(); ++i) {
      const json& r = rels[i];
      std::string where = "relations[" + std::to_string(i) + "]";
      if (!r.is_object() || !r.contains("symbol") || !r.contains("square"))
        bad(where, "expected {symbol, square}");
      doc.relations.emplace_back(r.at("symbol").get<std::string>(), r.at("square").get<std::string>());
    }
  }
  const json& dim = need(j, "dim");
  if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0) bad("dim", "expected a positive integer");
  doc.dim = dim.get<std::size_t>();
  doc.basis = string_list(need(j, "basis"), "basis");
  if (doc.basis.size() != doc.dim) bad("basis", "expected dim names");

  if (j.contains("brackets")) {
    const json& br = j.at("brackets");
    if (!br.is_object()) bad("brackets", "expected an object keyed by \"i,j\"");
    for (const auto& [key, value] : br.items()) {
      std::size_t i = 0, jj = 0;
      char comma = 0;
      std::istringstream is(key);
      if (!(is >> i >> comma >> jj) || comma != ',' || !is.eof() || i < 1 || jj < 1 || i > doc.dim ||
          jj > doc.dim || i >= jj)
        bad("brackets", "key \"" + key + "\" is not \"i,j\" with 1 <= i < j <= dim");
      doc.brackets[{i, jj}] = string_list(value, "brackets[\"" + key + "\"]");
    }
  }

  doc.metric = string_matrix(need(j, "metric"), "metric");
  doc.phi = string_matrix(need(j, "phi"), "phi");
  doc.xi = string_list(need(j, "xi"), "xi");
  doc.eta = string_list(need(j, "eta"), "eta");

  if (j.contains("section")) {
    const json& s = j.at("section");
    if (!s.is_object()) bad("section", "expected an object");
    SectionSpec sec;
    sec.n1 = string_list(need(s, "n1"), "section.n1");
    sec.n2 = string_list(need(s, "n2"), "section.n2");
    sec.tangent = string_matrix(need(s, "tangent"), "section.tangent");
    if (s.contains("induce")) {
      const json& ind = s.at("induce");
      if (!ind.is_object()) bad("section.induce", "expected an object");
      InduceSpec spec;
      std::string kase = need(ind, "case").get<std::string>();
      if (kase == "orthogonal")
        spec.kase = DecompositionCase::orthogonal;
      else if (kase == "nonorthogonal")
        spec.kase = DecompositionCase::non_orthogonal;
      else
        bad("section.induce.case", "expected \"orthogonal\" or \"nonorthogonal\"");
      if (ind.contains("epsilon")) {
        if (!ind.at("epsilon").is_number_integer()) bad("section.induce.epsilon", "expected +1 or -1");
        spec.epsilon = ind.at("epsilon").get<int>();
        if (spec.epsilon != 1 && spec.epsilon != -1) bad("section.induce.epsilon", "expected +1 or -1");
      }
      if (ind.contains("branch")) {
        std::string b = ind.at("branch").get<std::string>();
        if (b == "lambda1")
          spec.branch = Branch::lambda1;
        else if (b == "lambda2")
          spec.branch = Branch::lambda2;
        else
          bad("section.induce.branch", "expected \"lambda1\" or \"lambda2\"");
      }
      if (ind.contains("t0")) spec.t0 = ind.at("t0").get<std::string>();
      if (ind.contains("t2")) spec.t2 = ind.at("t2").get<std::string>();
      if (ind.contains("k")) spec.k = ind.at("k").get<std::string>();
      sec.induce = std::move(spec);
    }
    doc.section = std::move(sec);
  }
  return doc;
}

json document_to_json(const InputDocument& doc) {
  json j;
  j["symbols"] = doc.symbols;
  json rels = json::array();
  for (const auto& [sym, square] : doc.relations) rels.push_back({{"symbol", sym}, {"square", square}});
  j["relations"] = rels;
  j["dim"] = doc.dim;
  j["basis"] = doc.basis;
  json br = json::object();
  for (const auto& [key, val] : doc.brackets)
    br[std::to_string(key.first) + "," + std::to_string(key.second)] = val;
  j["brackets"] = br;
  j["metric"] = doc.metric;
  j["phi"] = doc.phi;
  j["xi"] = doc.xi;
  j["eta"] = doc.eta;
  if (doc.section) {
    json s;
    s["n1"] = doc.section->n1;
    s["n2"] = doc.section->n2;
    s["tangent"] = doc.section->tangent;
    if (doc.section->induce) {
      const InduceSpec& ind = *doc.section->induce;
      json ij;
      ij["case"] = ind.kase == DecompositionCase::orthogonal ? "orthogonal" : "nonorthogonal";
      ij["epsilon"] = ind.epsilon;
      ij["branch"] = ind.branch == Branch::lambda1 ? "lambda1" : "lambda2";
      if (ind.t0) ij["t0"] = *ind.t0;
      if (ind.t2) ij["t2"] = *ind.t2;
      if (ind.k) ij["k"] = *ind.k;
      s["induce"] = ij;
    }
    j["section"] = s;
  }
  return j;
}

InputDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ParseError("JSON syntax error in " + path + ": " + e.what());
  }
  return document_from_json(j);
}

BuiltDocument build(const InputDocument& doc) {
  auto table = SymbolTable::create(doc.symbols);
  for (const auto& [symv, square] : doc.relations)
    table->add_square_rule(symv, parse_entry(table, square, "relations." + symv));
  TablePtr tp = table;

  LieAlgebraFrame frame(tp, doc.basis);
  for (const auto& [key, entries] : doc.brackets) {
    std::string where = "brackets[\"" + std::to_string(key.first) + "," + std::to_string(key.second) + "\"]";
    frame.set_bracket(key.first - 1, key.second - 1, promote(parse_vec(tp, entries, doc.dim, where)));
  }
  NordenMetric metric(promote(parse_mat(tp, doc.metric, doc.dim, "metric")));
  AlmostContactData acd;
  acd.phi = promote(parse_mat(tp, doc.phi, doc.dim, "phi"));
  acd.xi = promote(parse_vec(tp, doc.xi, doc.dim, "xi"));
  acd.eta = promote(parse_vec(tp, doc.eta, doc.dim, "eta"));

  BuiltDocument out{tp, AmbientSpace(std::move(frame), std::move(metric), std::move(acd)),
                    std::nullopt, std::nullopt};
  if (doc.section) {
    NormalSection sec;
    sec.n1 = promote(parse_vec(tp, doc.section->n1, doc.dim, "section.n1"));
    sec.n2 = promote(parse_vec(tp, doc.section->n2, doc.dim, "section.n2"));
    for (std::size_t r = 0; r < doc.section->tangent.size(); ++r) {
      std::string where = "section.tangent[" + std::to_string(r) + "]";
      FVec t = promote(parse_vec(tp, doc.section->tangent[r], doc.dim, where));
      // coordinate basis vectors keep their ambient names
      std::string name = "u" + std::to_string(r + 1);
      std::size_t nonzero = 0, last = 0;
      for (std::size_t i = 0; i < doc.dim; ++i)
        if (!t[i].is_zero()) {
          ++nonzero;
          last = i;
        }
      if (nonzero == 1 && t[last] == Fraction(1)) name = doc.basis[last];
      sec.tangent_names.push_back(name);
      sec.tangent.push_back(std::move(t));
    }
    out.section = std::move(sec);
    out.induce = doc.section->induce;
  }
  return out;
}

InputDocument document_from_bundle(const catalog::ExampleBundle& bundle) {
  InputDocument doc;
  const TablePtr& t = bundle.table;
  doc.symbols = t->symbols();
  for (std::size_t i = 0; i < t->size(); ++i)
    if (t->has_rule(i))
      doc.relations.emplace_back(t->name(i),
                                 expr::to_string(Scalar::from_raw_terms(t, t->rule(i).replacement)));
  const AmbientSpace& sp = bundle.ambient;
  doc.dim = sp.dim();
  doc.basis = sp.frame.names();
  for (std::size_t i = 0; i < doc.dim; ++i)
    for (std::size_t j = i + 1; j < doc.dim; ++j) {
      const FVec& v = sp.frame.bracket(i, j);
      if (v.is_zero()) continue;
      std::vector<std::string> entries;
      for (std::size_t l = 0; l < doc.dim; ++l)
        entries.push_back(fraction_expr(v[l], "bracket"));
      doc.brackets[{i + 1, j + 1}] = std::move(entries);
    }
  auto mat_strings = [&](const FMat& m, const std::string& where) {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      std::vector<std::string> row;
      for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(fraction_expr(m(i, j), where));
      rows.push_back(std::move(row));
    }
    return rows;
  };
  auto vec_strings = [&](const FVec& v, const std::string& where) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(fraction_expr(v[i], where));
    return out;
  };
  doc.metric = mat_strings(sp.metric.matrix(), "metric");
  doc.phi = mat_strings(sp.acd.phi, "phi");
  doc.xi = vec_strings(sp.acd.xi, "xi");
  doc.eta = vec_strings(sp.acd.eta, "eta");

  SectionSpec sec;
  sec.n1 = vec_strings(bundle.section.n1, "section.n1");
  sec.n2 = vec_strings(bundle.section.n2, "section.n2");
  for (const auto& tv : bundle.section.tangent) sec.tangent.push_back(vec_strings(tv, "section.tangent"));
  InduceSpec ind;
  ind.kase = bundle.kind;
  if (bundle.kind == DecompositionCase::orthogonal) {
    ind.t0 = expr::to_string(*bundle.t0);
    ind.t2 = expr::to_string(*bundle.t2);
  } else {
    ind.k = expr::to_string(*bundle.k);
  }
  sec.induce = ind;
  doc.section = std::move(sec);
  return doc;
}

json report_to_json(const Report& rep) {
  json items = json::array();
  for (const auto& it : rep.items) {
    json e;
    e["name"] = it.name;
    e["pass"] = it.pass;
    if (!it.detail.empty()) e["detail"] = it.detail;
    items.push_back(e);
  }
  return json{{"items", items}, {"ok", rep.all_pass()}};
}

} // namespace acn::io
