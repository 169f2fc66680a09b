#include "acn/submanifold.hpp"

#include "acn/expr.hpp"

#include <sstream>

namespace acn {

namespace {

FMat columns(const std::vector<FVec>& vs, std::size_t n) {
  FMat m(n, vs.size());
  for (std::size_t j = 0; j < vs.size(); ++j) {
    if (vs[j].size() != n) throw ValidationError("tangent vector has wrong dimension");
    for (std::size_t i = 0; i < n; ++i) m(i, j) = vs[j][i];
  }
  return m;
}

FVec to_tangent(const FMat& tangent_cols, const FVec& ambient, const char* what) {
  auto x = solve(tangent_cols, ambient);
  if (!x) throw SectionError(std::string(what) + " is not tangent to the submanifold");
  return *x;
}

bool in_span2(const FVec& v1, const FVec& v2, const FVec& w) {
  FMat m(v1.size(), 2);
  for (std::size_t i = 0; i < v1.size(); ++i) {
    m(i, 0) = v1[i];
    m(i, 1) = v2[i];
  }
  return solve(m, w).has_value();
}

/// Tangent count, g-orthogonality to the normals, independence.
FMat validated_tangent_frame(const AmbientSpace& space, const NormalSection& sec) {
  const std::size_t n = space.dim();
  if (sec.tangent.size() != n - 2)
    throw SectionError("tangent frame must have dimension " + std::to_string(n - 2));
  for (const auto& t : sec.tangent)
    if (!space.metric.inner(t, sec.n1).is_zero() || !space.metric.inner(t, sec.n2).is_zero())
      throw SectionError("tangent frame is not orthogonal to the normal section");
  FMat cols = columns(sec.tangent, n);
  if (rank(cols) != n - 2) throw SectionError("tangent frame is linearly dependent");
  return cols;
}

void require_hybrid_normalization(const AmbientSpace& space, const NormalSection& sec) {
  const auto& g = space.metric;
  if (!(g.inner(sec.n1, sec.n1) == Fraction(1)) || !(g.inner(sec.n2, sec.n2) == Fraction(-1)) ||
      !g.inner(sec.n1, sec.n2).is_zero())
    throw SectionError("normal section is not normalized to g(N1,N1)=1, g(N2,N2)=-1, g(N1,N2)=0");
}

void require_totally_real(const AmbientSpace& space, const NormalSection& sec) {
  const auto& g = space.metric;
  FVec pn1 = space.acd.phi * sec.n1;
  FVec pn2 = space.acd.phi * sec.n2;
  if (!g.inner(sec.n1, pn1).is_zero() || !g.inner(sec.n2, pn2).is_zero() ||
      !g.inner(sec.n1, pn2).is_zero() || !g.inner(sec.n2, pn1).is_zero())
    throw SectionError("normal section is not totally real");
}

FMat outer(const FVec& v, const FVec& w) {
  FMat m(v.size(), w.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j) m(i, j) = v[i] * w[j];
  return m;
}

FVec covector_after(const FVec& eta, const FMat& a) {
  FVec out(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i) out[j] += eta[i] * a(i, j);
  return out;
}

} // namespace

std::string to_string(SectionType t) {
  switch (t) {
    case SectionType::pure: return "pure";
    case SectionType::hybrid: return "hybrid";
    default: return "indeterminate";
  }
}

std::string to_string(InducedBranchTag t) {
  switch (t) {
    case InducedBranchTag::k_general_lambda1: return "k_general_lambda1";
    case InducedBranchTag::k_general_lambda2: return "k_general_lambda2";
    case InducedBranchTag::k_eq_plus1: return "k_eq_plus1";
    case InducedBranchTag::k_eq_minus1: return "k_eq_minus1";
    default: return "orthogonal";
  }
}

SectionClass classify_section(const AmbientSpace& space, const NormalSection& sec) {
  const std::size_t n = space.dim();
  if (sec.n1.size() != n || sec.n2.size() != n) throw ValidationError("normal dimension mismatch");
  {
    FMat m(n, 2);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, 0) = sec.n1[i];
      m(i, 1) = sec.n2[i];
    }
    if (rank(m) != 2) throw PreconditionError("degenerate section: N1 and N2 are parallel");
  }
  const auto& g = space.metric;
  FMat gram(2, 2);
  gram(0, 0) = g.inner(sec.n1, sec.n1);
  gram(0, 1) = gram(1, 0) = g.inner(sec.n1, sec.n2);
  gram(1, 1) = g.inner(sec.n2, sec.n2);
  RankSignature rs = sym_rank_and_signature(gram);

  SectionClass out;
  out.rank = rs.rank;
  out.signature = rs.signature;
  if (rs.rank == 2 && rs.signature) {
    out.type = (*rs.signature == std::make_pair(1, 1)) ? SectionType::hybrid : SectionType::pure;
  } else {
    out.type = SectionType::indeterminate;
  }

  FVec pn1 = space.acd.phi * sec.n1;
  FVec pn2 = space.acd.phi * sec.n2;
  out.holomorphic = in_span2(sec.n1, sec.n2, pn1) && in_span2(sec.n1, sec.n2, pn2);
  out.xi_section = in_span2(sec.n1, sec.n2, space.acd.xi);
  out.totally_real = g.inner(sec.n1, pn1).is_zero() && g.inner(sec.n2, pn2).is_zero() &&
                     g.inner(sec.n1, pn2).is_zero() && g.inner(sec.n2, pn1).is_zero();
  out.xi_orthogonal =
      g.inner(space.acd.xi, sec.n1).is_zero() && g.inner(space.acd.xi, sec.n2).is_zero();
  return out;
}

Decomposition decompose(const AmbientSpace& space, const NormalSection& sec) {
  const std::size_t n = space.dim();
  require_hybrid_normalization(space, sec);
  require_totally_real(space, sec);
  if (in_span2(sec.n1, sec.n2, space.acd.xi))
    throw SectionError("xi lies in the normal section; this splitting does not apply");
  FMat cols = validated_tangent_frame(space, sec);

  Decomposition dec;
  dec.table = space.table();
  dec.section = sec;
  dec.tangent_cols = cols;

  const auto& g = space.metric;
  const FVec& xi = space.acd.xi;
  dec.a = g.inner(xi, sec.n1);
  dec.b = -g.inner(xi, sec.n2);
  dec.kind = (dec.a.is_zero() && dec.b.is_zero()) ? DecompositionCase::orthogonal
                                                  : DecompositionCase::non_orthogonal;

  FVec xi0_amb = xi - dec.a * sec.n1 - dec.b * sec.n2;
  dec.xi0 = to_tangent(cols, xi0_amb, "xi0");
  dec.xi1 = to_tangent(cols, space.acd.phi * sec.n1, "phi(N1)");
  dec.xi2 = to_tangent(cols, -(space.acd.phi * sec.n2), "-phi(N2)");

  const std::size_t m = sec.tangent.size();
  dec.eta0 = FVec(m);
  dec.eta1 = FVec(m);
  dec.eta2 = FVec(m);
  dec.phi_tan = FMat(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    const FVec& t = sec.tangent[j];
    FVec pt = space.acd.phi * t;
    dec.eta1[j] = g.inner(pt, sec.n1);
    dec.eta2[j] = -g.inner(pt, sec.n2);
    for (std::size_t i = 0; i < n; ++i) dec.eta0[j] += space.acd.eta[i] * t[i];
    FVec tan = to_tangent(cols, pt - dec.eta1[j] * sec.n1 - dec.eta2[j] * sec.n2, "phi(X) tangential part");
    for (std::size_t i = 0; i < m; ++i) dec.phi_tan(i, j) = tan[i];
  }

  dec.metric_tan = FMat(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) dec.metric_tan(i, j) = g.inner(sec.tangent[i], sec.tangent[j]);
  return dec;
}

Report check_decomposition_identities(const AmbientSpace& space, const Decomposition& dec) {
  Report rep;
  const std::size_t m = dec.section.tangent.size();
  const bool orth = dec.kind == DecompositionCase::orthogonal;
  const std::string tag = orth ? "eq13." : "";
  const FMat& g = dec.metric_tan;
  const FMat& phi = dec.phi_tan;
  const Fraction& a = dec.a;
  const Fraction& b = dec.b;

  auto dual = [&](const FVec& xi_vec) { return g * xi_vec; };
  rep.add(tag + "eta0_duality", dec.eta0 == dual(dec.xi0));
  rep.add(tag + "eta1_duality", dec.eta1 == dual(dec.xi1));
  rep.add(tag + "eta2_duality", dec.eta2 == dual(dec.xi2));

  // g(phi x, phi y) = -g + eta0 eta0 - eta1 eta1 + eta2 eta2
  FMat lhs = phi.transpose() * g * phi;
  FMat rhs = -g + outer(dec.eta0, dec.eta0) - outer(dec.eta1, dec.eta1) + outer(dec.eta2, dec.eta2);
  rep.add(tag + "restricted_compatibility", lhs == rhs);

  // phi^2 = -id + xi0 eta0 - xi1 eta1 + xi2 eta2
  FMat phi2 = phi * phi;
  FMat phi2_rhs = -FMat::identity(m) + outer(dec.xi0, dec.eta0) - outer(dec.xi1, dec.eta1) +
                  outer(dec.xi2, dec.eta2);
  rep.add(tag + "phi_tan_squared", phi2 == phi2_rhs);

  // eta_i o phi
  FVec e0p = covector_after(dec.eta0, phi);
  FVec e1p = covector_after(dec.eta1, phi);
  FVec e2p = covector_after(dec.eta2, phi);
  rep.add(tag + "eta0_after_phi", e0p == (-a) * dec.eta1 + b * dec.eta2);
  rep.add(tag + "eta1_after_phi", e1p == a * dec.eta0);
  rep.add(tag + "eta2_after_phi", e2p == b * dec.eta0);

  // phi xi_i
  rep.add(tag + "phi_of_xi0", phi * dec.xi0 == (-a) * dec.xi1 + b * dec.xi2);
  rep.add(tag + "phi_of_xi1", phi * dec.xi1 == a * dec.xi0);
  rep.add(tag + "phi_of_xi2", phi * dec.xi2 == b * dec.xi0);

  // inner products of the xi_i
  auto ip = [&](const FVec& x, const FVec& y) {
    Fraction out;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) out += x[i] * g(i, j) * y[j];
    return out;
  };
  Fraction one(1);
  rep.add(tag + "norm_xi0", ip(dec.xi0, dec.xi0) == one - a * a + b * b);
  rep.add(tag + "norm_xi1", ip(dec.xi1, dec.xi1) == a * a - one);
  rep.add(tag + "norm_xi2", ip(dec.xi2, dec.xi2) == one + b * b);
  rep.add(tag + "xi0_xi1_orthogonal", ip(dec.xi0, dec.xi1).is_zero());
  rep.add(tag + "xi0_xi2_orthogonal", ip(dec.xi0, dec.xi2).is_zero());
  rep.add(tag + "xi1_xi2_product", ip(dec.xi1, dec.xi2) == a * b);

  (void)space;
  return rep;
}

InducedStructure induce_nonorthogonal(const Decomposition& dec, Branch branch, int epsilon,
                                      const Scalar& k) {
  if (epsilon != 1 && epsilon != -1) throw ValidationError("epsilon must be +1 or -1");
  if (dec.a.is_zero()) throw PreconditionError("non-orthogonal induction requires a != 0");
  Fraction kf{k};
  if (kf.is_zero()) throw PreconditionError("k must be nonzero");
  if (!(kf * kf == dec.a * dec.a - dec.b * dec.b))
    throw PreconditionError("k^2 != a^2 - b^2 in the declared ring");

  Fraction one(1);
  Fraction den = (branch == Branch::lambda1) ? kf * (kf + one) : kf * (kf - one);
  if (den.is_zero())
    throw PreconditionError(std::string("branch denominator k(k") +
                            (branch == Branch::lambda1 ? "+" : "-") + "1) vanishes");
  Fraction eps(epsilon);
  Fraction lambda = eps / den;
  Fraction mu = (branch == Branch::lambda1) ? eps * (one + kf * kf + kf) / den
                                            : eps * (one + kf * kf - kf) / den;

  InducedStructure ind;
  ind.epsilon = epsilon;
  ind.k = k;
  ind.lambda = lambda;
  ind.mu = mu;
  if ((kf - one).is_zero())
    ind.branch = InducedBranchTag::k_eq_plus1;
  else if ((kf + one).is_zero())
    ind.branch = InducedBranchTag::k_eq_minus1;
  else
    ind.branch = (branch == Branch::lambda1) ? InducedBranchTag::k_general_lambda1
                                             : InducedBranchTag::k_general_lambda2;

  Fraction ca = dec.a / kf;
  Fraction cb = -(dec.b / kf);
  ind.acd.xi = cb * dec.xi1 + ca * dec.xi2;
  ind.acd.eta = cb * dec.eta1 + ca * dec.eta2;
  FMat phi3 = dec.phi_tan * dec.phi_tan * dec.phi_tan;
  ind.acd.phi = lambda * phi3 + mu * dec.phi_tan;
  return ind;
}

InducedStructure induce_orthogonal(const Decomposition& dec, const Scalar& t0, const Scalar& t2) {
  if (dec.kind != DecompositionCase::orthogonal)
    throw PreconditionError("decomposition is not of the orthogonal case (a = b = 0)");
  if (!(t0 * t0 + t2 * t2 == Scalar(1)))
    throw PreconditionError("t0^2 + t2^2 != 1 under the declared rules");

  InducedStructure ind;
  ind.branch = InducedBranchTag::orthogonal;
  ind.t0 = t0;
  ind.t2 = t2;
  Fraction f0{t0}, f2{t2};
  ind.acd.xi = f0 * dec.xi0 - f2 * dec.xi2;
  ind.acd.eta = f0 * dec.eta0 - f2 * dec.eta2;
  ind.acd.phi = dec.phi_tan + f0 * (outer(dec.xi2, dec.eta1) + outer(dec.xi1, dec.eta2)) +
                f2 * (outer(dec.xi1, dec.eta0) + outer(dec.xi0, dec.eta1));
  return ind;
}

GaussWeingartenData gauss_weingarten(const AmbientSpace& space, const NormalSection& sec,
                                     const ConnectionTable& ambient_conn) {
  require_hybrid_normalization(space, sec);
  FMat cols = validated_tangent_frame(space, sec);
  const std::size_t m = sec.tangent.size();
  const auto& g = space.metric;

  GaussWeingartenData out;
  out.a1 = FMat(m, m);
  out.a2 = FMat(m, m);
  out.gamma = FVec(m);
  for (std::size_t j = 0; j < m; ++j) {
    const FVec& t = sec.tangent[j];
    FVec d1 = ambient_conn.covariant(t, sec.n1);
    FVec d2 = ambient_conn.covariant(t, sec.n2);

    Fraction gamma1 = -g.inner(d1, sec.n2); // N2-component of nabla_X N1
    Fraction gamma2 = g.inner(d2, sec.n1);  // N1-component of nabla_X N2
    if (!(gamma1 == gamma2))
      throw PreconditionError("gamma extracted from nabla N1 and nabla N2 disagree");
    out.gamma[j] = gamma1;

    FVec tan1 = to_tangent(cols, d1 - g.inner(d1, sec.n1) * sec.n1 - gamma1 * sec.n2, "nabla N1");
    FVec tan2 = to_tangent(cols, d2 + g.inner(d2, sec.n2) * sec.n2 - gamma2 * sec.n1, "nabla N2");
    for (std::size_t i = 0; i < m; ++i) {
      out.a1(i, j) = -tan1[i];
      out.a2(i, j) = -tan2[i];
    }
  }

  // Gauss consistency: normal part of nabla_X Y = g(A1 X, Y) N1 - g(A2 X, Y) N2.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      FVec d = ambient_conn.covariant(sec.tangent[i], sec.tangent[j]);
      Fraction c1 = g.inner(d, sec.n1);  // N1-component (g(N1,N1)=1)
      Fraction c2 = -g.inner(d, sec.n2); // N2-component (g(N2,N2)=-1)
      Fraction g1, g2;                   // g(A1 t_i, t_j), g(A2 t_i, t_j)
      for (std::size_t p = 0; p < m; ++p) {
        Fraction gpj = g.inner(sec.tangent[p], sec.tangent[j]);
        g1 += out.a1(p, i) * gpj;
        g2 += out.a2(p, i) * gpj;
      }
      if (!(c1 == g1) || !(c2 == -g2))
        throw PreconditionError("Gauss normal-part reconstruction failed");
    }
  return out;
}

AmbientSpace induced_geometry(const AmbientSpace& space, const NormalSection& sec,
                              const InducedStructure& ind) {
  FMat cols = validated_tangent_frame(space, sec);
  const std::size_t m = sec.tangent.size();

  std::vector<std::string> names = sec.tangent_names;
  if (names.size() != m) {
    names.clear();
    for (std::size_t i = 0; i < m; ++i) names.push_back("u" + std::to_string(i + 1));
  }
  LieAlgebraFrame frame(space.table(), names);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      FVec amb = space.frame.bracket(sec.tangent[i], sec.tangent[j]);
      auto coords = solve(cols, amb);
      if (!coords)
        throw PreconditionError("tangent space is not a subalgebra: [" + names[i] + "," + names[j] +
                                "] escapes the tangent span");
      frame.set_bracket(i, j, *coords);
    }

  FMat gt(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) gt(i, j) = space.metric.inner(sec.tangent[i], sec.tangent[j]);
  return AmbientSpace(std::move(frame), NordenMetric(std::move(gt)), ind.acd);
}

} // namespace acn
