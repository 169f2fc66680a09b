#include "CLI11.hpp"

#include "acn/catalog.hpp"
#include "acn/expr.hpp"
#include "acn/io.hpp"

#include <iostream>
#include <sstream>
#include <string>

using namespace acn;
using acn::io::json;

namespace {

std::string coeff_str(const Fraction& f) {
  std::string s = expr::to_string(f);
  bool bare = s.find(' ') == std::string::npos && s.find('/') == std::string::npos;
  return bare ? s : "(" + s + ")";
}

std::string combination(const FVec& v, const std::vector<std::string>& names) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (v[i] == Fraction(1))
      os << names[i];
    else
      os << coeff_str(v[i]) << "*" << names[i];
  }
  return first ? "0" : os.str();
}

json vec_json(const FVec& v) {
  json out = json::array();
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(expr::to_string(v[i]));
  return out;
}

json mat_json(const FMat& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(expr::to_string(m(i, j)));
    out.push_back(row);
  }
  return out;
}

void print_report(std::ostream& os, const Report& rep) {
  for (const auto& it : rep.items) {
    os << "  " << (it.pass ? "[ok]   " : "[FAIL] ") << it.name;
    if (!it.detail.empty()) os << "  -- " << it.detail;
    os << "\n";
  }
}

/// Human block plus a fenced machine block in one stream, or bare JSON.
int emit(const std::string& format, const std::string& human, const json& machine, int code) {
  if (format == "json") {
    std::cout << machine.dump(2) << "\n";
  } else {
    std::cout << human;
    std::cout << "```json\n" << machine.dump(2) << "\n```\n";
  }
  return code;
}

int cmd_check(const std::string& file, const std::string& format) {
  io::BuiltDocument built = io::build(io::load_document(file));
  Report jac = check_jacobi(built.space.frame);
  Report ax = check_acn_axioms(built.space);
  bool ok = jac.all_pass() && ax.all_pass();

  std::ostringstream os;
  os << "structure checks for " << file << "\n";
  os << "Jacobi identity:\n";
  print_report(os, jac);
  os << "almost contact / Norden axioms:\n";
  print_report(os, ax);
  os << (ok ? "all checks passed\n" : "CHECKS FAILED\n");

  json machine{{"command", "check"},
               {"jacobi", io::report_to_json(jac)},
               {"axioms", io::report_to_json(ax)},
               {"ok", ok}};
  return emit(format, os.str(), machine, ok ? 0 : 1);
}

int cmd_tensors(const std::string& file, const std::string& which, const std::string& format) {
  io::BuiltDocument built = io::build(io::load_document(file));
  const auto& names = built.space.frame.names();
  const std::size_t n = built.space.dim();
  ConnectionTable conn = koszul_connection(built.space.frame, built.space.metric);

  std::ostringstream os;
  json machine{{"command", "tensors"}, {"which", which}};
  json comps = json::object();
  bool any = false;

  if (which == "connection") {
    os << "Levi-Civita connection (nonzero nabla_{e_i} e_j):\n";
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const FVec& g = conn.gamma(i, j);
        if (g.is_zero()) continue;
        any = true;
        os << "  nabla_{" << names[i] << "} " << names[j] << " = " << combination(g, names) << "\n";
        comps[std::to_string(i + 1) + "," + std::to_string(j + 1)] = vec_json(g);
      }
  } else if (which == "curvature") {
    CurvatureData r = curvature(conn, built.space.frame, built.space.metric);
    os << "curvature (nonzero lowered components R(i,j,k,l)):\n";
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < n; ++l) {
            const Fraction& c = r.lowered(i, j, k, l);
            if (c.is_zero()) continue;
            any = true;
            std::string key = std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                              std::to_string(k + 1) + "," + std::to_string(l + 1);
            os << "  R(" << names[i] << "," << names[j] << "," << names[k] << "," << names[l]
               << ") = " << expr::to_string(c) << "\n";
            comps[key] = expr::to_string(c);
          }
  } else { // f
    Tensor3<Fraction> f = f_tensor_from_connection(conn, built.space.metric, built.space.acd,
                                                   built.space.frame);
    Tensor3<Fraction> f2 = f_tensor_lie(built.space.frame, built.space.metric, built.space.acd.phi);
    machine["routes_agree"] = (f == f2);
    os << "tensor F(x,y,z) = g((nabla_x phi) y, z) (nonzero components):\n";
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          const Fraction& c = f(i, j, k);
          if (c.is_zero()) continue;
          any = true;
          std::string key =
              std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1);
          os << "  F(" << names[i] << "," << names[j] << "," << names[k]
             << ") = " << expr::to_string(c) << "\n";
          comps[key] = expr::to_string(c);
        }
  }
  if (!any) os << "  all components zero\n";
  machine["nonzero"] = comps;
  return emit(format, os.str(), machine, 0);
}

json class_json(const SectionClass& c) {
  json out{{"rank", c.rank},          {"type", to_string(c.type)},
           {"holomorphic", c.holomorphic}, {"xi_section", c.xi_section},
           {"totally_real", c.totally_real}, {"xi_orthogonal", c.xi_orthogonal}};
  if (c.signature)
    out["signature"] = json::array({c.signature->first, c.signature->second});
  else
    out["signature"] = "indeterminate";
  return out;
}

int cmd_sub(const std::string& file, const std::string& format) {
  io::BuiltDocument built = io::build(io::load_document(file));
  if (!built.section) throw ValidationError("document has no 'section' block");
  const NormalSection& sec = *built.section;
  const AmbientSpace& sp = built.space;

  std::ostringstream os;
  json machine{{"command", "sub"}};

  SectionClass cls = classify_section(sp, sec);
  os << "normal section classification:\n";
  os << "  rank " << cls.rank << ", type " << to_string(cls.type) << "\n";
  os << "  holomorphic=" << cls.holomorphic << " xi_section=" << cls.xi_section
     << " totally_real=" << cls.totally_real << " xi_orthogonal=" << cls.xi_orthogonal << "\n";
  machine["classification"] = class_json(cls);

  if (!built.induce) {
    os << "no induction requested; classification only\n";
    return emit(format, os.str(), machine, 0);
  }
  if (cls.xi_section)
    throw SectionError("induction requires xi outside the section; this section is a xi-section");
  if (!(cls.totally_real && cls.type == SectionType::hybrid && cls.rank == 2))
    throw SectionError(
        "induction requires a non-degenerate totally real section of hybrid type; this one is not");

  Decomposition dec = decompose(sp, sec);
  if (dec.kind != built.induce->kase)
    throw SectionError(std::string("requested the ") +
                       (built.induce->kase == DecompositionCase::orthogonal ? "orthogonal"
                                                                            : "nonorthogonal") +
                       " case but the section is of the other case");

  const auto& tnames = sec.tangent_names;
  os << "decomposition:\n";
  os << "  a = " << expr::to_string(dec.a) << ", b = " << expr::to_string(dec.b) << "\n";
  os << "  xi0 = " << combination(dec.xi0, tnames) << "\n";
  os << "  xi1 = " << combination(dec.xi1, tnames) << "\n";
  os << "  xi2 = " << combination(dec.xi2, tnames) << "\n";
  machine["decomposition"] = json{{"case", dec.kind == DecompositionCase::orthogonal ? "orthogonal" : "nonorthogonal"},
                                  {"a", expr::to_string(dec.a)},
                                  {"b", expr::to_string(dec.b)},
                                  {"xi0", vec_json(dec.xi0)},
                                  {"xi1", vec_json(dec.xi1)},
                                  {"xi2", vec_json(dec.xi2)},
                                  {"eta1", vec_json(dec.eta1)},
                                  {"eta2", vec_json(dec.eta2)},
                                  {"phi_tan", mat_json(dec.phi_tan)}};

  Report ids = check_decomposition_identities(sp, dec);
  os << "identity suite:\n";
  print_report(os, ids);
  machine["identities"] = io::report_to_json(ids);

  InducedStructure ind;
  if (built.induce->kase == DecompositionCase::orthogonal) {
    if (!built.induce->t0 || !built.induce->t2)
      throw PreconditionError("orthogonal induction needs t0 and t2 expressions");
    ind = induce_orthogonal(dec, expr::parse(built.table, *built.induce->t0),
                            expr::parse(built.table, *built.induce->t2));
  } else {
    if (!built.induce->k)
      throw PreconditionError("non-orthogonal induction needs a k expression with k^2 = a^2 - b^2");
    ind = induce_nonorthogonal(dec, built.induce->branch, built.induce->epsilon,
                               expr::parse(built.table, *built.induce->k));
  }
  os << "induced structure (branch " << to_string(ind.branch) << "):\n";
  os << "  xi  = " << combination(ind.acd.xi, tnames) << "\n";
  os << "  eta = [";
  for (std::size_t i = 0; i < ind.acd.eta.size(); ++i)
    os << (i ? ", " : "") << expr::to_string(ind.acd.eta[i]);
  os << "]\n";
  json indj{{"branch", to_string(ind.branch)},
            {"xi", vec_json(ind.acd.xi)},
            {"eta", vec_json(ind.acd.eta)},
            {"phi", mat_json(ind.acd.phi)}};
  if (ind.lambda) {
    indj["lambda"] = expr::to_string(*ind.lambda);
    indj["mu"] = expr::to_string(*ind.mu);
    os << "  lambda = " << expr::to_string(*ind.lambda) << ", mu = " << expr::to_string(*ind.mu)
       << "\n";
  }
  Report ax = check_acn_axioms(NordenMetric(dec.metric_tan), ind.acd);
  os << "induced axioms:\n";
  print_report(os, ax);
  indj["axioms"] = io::report_to_json(ax);
  machine["induced"] = indj;

  ConnectionTable conn = koszul_connection(sp.frame, sp.metric);
  GaussWeingartenData gw = gauss_weingarten(sp, sec, conn);
  os << "Gauss-Weingarten data:\n";
  os << "  gamma = [";
  for (std::size_t i = 0; i < gw.gamma.size(); ++i)
    os << (i ? ", " : "") << expr::to_string(gw.gamma[i]);
  os << "]\n";
  machine["gauss_weingarten"] =
      json{{"A1", mat_json(gw.a1)}, {"A2", mat_json(gw.a2)}, {"gamma", vec_json(gw.gamma)}};

  AmbientSpace sub = induced_geometry(sp, sec, ind);
  Tensor3<Fraction> f = f_tensor_lie(sub.frame, sub.metric, sub.acd.phi);
  bool f0 = is_class_F0(f);
  os << "induced F tensor:\n";
  json fj = json::object();
  bool any = false;
  for (std::size_t i = 0; i < f.dim(); ++i)
    for (std::size_t j = 0; j < f.dim(); ++j)
      for (std::size_t k = 0; k < f.dim(); ++k) {
        if (f(i, j, k).is_zero()) continue;
        any = true;
        os << "  F(" << tnames[i] << "," << tnames[j] << "," << tnames[k]
           << ") = " << expr::to_string(f(i, j, k)) << "\n";
        fj[std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1)] =
            expr::to_string(f(i, j, k));
      }
  if (!any) os << "  all components zero\n";
  os << "  class F0: " << (f0 ? "certified" : "no") << "\n";
  machine["induced_f"] = fj;
  machine["class_F0"] = f0;

  bool ok = ids.all_pass() && ax.all_pass();
  machine["ok"] = ok;
  return emit(format, os.str(), machine, ok ? 0 : 1);
}

int cmd_verify(int epsilon, const std::string& branch, const std::string& format) {
  Report rep = catalog::verify_examples(epsilon,
                                        branch == "lambda2" ? Branch::lambda2 : Branch::lambda1);
  std::ostringstream os;
  os << "catalog verification (epsilon=" << epsilon << ", branch=" << branch << "):\n";
  print_report(os, rep);
  os << (rep.all_pass() ? "all golden values reproduced\n" : "GOLDEN VALUE MISMATCH\n");
  json machine{{"command", "verify-examples"},
               {"epsilon", epsilon},
               {"branch", branch},
               {"report", io::report_to_json(rep)},
               {"ok", rep.all_pass()}};
  return emit(format, os.str(), machine, rep.all_pass() ? 0 : 1);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact symbolic toolkit for left-invariant almost contact structures with Norden "
               "metric and their codimension-2 submanifolds"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "human";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"human", "json"}));

  std::string file, which = "f", branch = "lambda1";
  int epsilon = 1;

  CLI::App* check = app.add_subcommand("check", "verify Jacobi and structure axioms of a document");
  check->fallthrough();
  check->add_option("file", file, "input JSON document")->required();

  CLI::App* tensors = app.add_subcommand("tensors", "print connection, curvature or F");
  tensors->fallthrough();
  tensors->add_option("file", file, "input JSON document")->required();
  tensors->add_option("--which", which, "tensor to print")
      ->check(CLI::IsMember({"f", "connection", "curvature"}));

  CLI::App* sub = app.add_subcommand("sub", "run the codimension-2 submanifold pipeline");
  sub->fallthrough();
  sub->add_option("file", file, "input JSON document (must contain a section block)")->required();

  CLI::App* verify = app.add_subcommand("verify-examples", "reproduce the built-in catalog values");
  verify->fallthrough();
  verify->add_option("--epsilon", epsilon, "sign choice for the induced structure")
      ->check(CLI::IsMember({1, -1}));
  verify->add_option("--branch", branch, "lambda/mu branch")
      ->check(CLI::IsMember({"lambda1", "lambda2"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(file, format);
    if (tensors->parsed()) return cmd_tensors(file, which, format);
    if (sub->parsed()) return cmd_sub(file, format);
    return cmd_verify(epsilon, branch, format);
  } catch (const SectionError& e) {
    std::cerr << "section error: " << e.what() << "\n";
    return 4;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 1;
  }
}
