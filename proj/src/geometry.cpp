#include "acn/geometry.hpp"

#include "acn/expr.hpp"

#include <sstream>

namespace acn {

namespace {

FVec zero_vec(std::size_t n) { return FVec(n); }

std::string triple_name(const LieAlgebraFrame& fr, std::size_t i, std::size_t j, std::size_t k) {
  return "(" + fr.names()[i] + "," + fr.names()[j] + "," + fr.names()[k] + ")";
}

} // namespace

LieAlgebraFrame::LieAlgebraFrame(TablePtr table, std::vector<std::string> names)
    : table_(std::move(table)), names_(std::move(names)) {
  if (names_.empty()) throw ValidationError("frame needs at least one basis vector");
  c_.assign(names_.size() * names_.size(), zero_vec(names_.size()));
}

void LieAlgebraFrame::set_bracket(std::size_t i, std::size_t j, const FVec& value) {
  const std::size_t n = dim();
  if (i >= n || j >= n || value.size() != n) throw ValidationError("bracket index/size out of range");
  if (i == j) {
    if (!value.is_zero()) throw ValidationError("[e_i, e_i] must be zero");
    return;
  }
  c_[i * n + j] = value;
  c_[j * n + i] = -value;
}

const FVec& LieAlgebraFrame::bracket(std::size_t i, std::size_t j) const {
  return c_.at(i * dim() + j);
}

FVec LieAlgebraFrame::bracket(const FVec& x, const FVec& y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw PreconditionError("bracket: dimension mismatch");
  FVec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      Fraction c = x[i] * y[j];
      out += c * bracket(i, j);
    }
  }
  return out;
}

Report check_jacobi(const LieAlgebraFrame& frame) {
  Report rep;
  const std::size_t n = frame.dim();
  bool any = false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        FVec sum = frame.bracket(frame.bracket(i, j), unit(frame, k)) +
                   frame.bracket(frame.bracket(j, k), unit(frame, i)) +
                   frame.bracket(frame.bracket(k, i), unit(frame, j));
        if (!sum.is_zero()) {
          any = true;
          std::ostringstream os;
          os << "cyclic sum at " << triple_name(frame, i, j, k) << " = [";
          for (std::size_t l = 0; l < n; ++l) os << (l ? ", " : "") << expr::to_string(sum[l]);
          os << "]";
          rep.add("jacobi" + triple_name(frame, i, j, k), false, os.str());
        }
      }
  if (!any) rep.add("jacobi", true, "all triples vanish");
  return rep;
}

NordenMetric::NordenMetric(FMat g) : g_(std::move(g)) {
  if (!g_.is_symmetric()) throw ValidationError("metric must be symmetric");
  g_inv_ = mat_inverse(g_); // throws PreconditionError when singular
}

Fraction NordenMetric::inner(const FVec& x, const FVec& y) const {
  if (x.size() != dim() || y.size() != dim()) throw PreconditionError("inner: dimension mismatch");
  Fraction out;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) out += x[i] * g_(i, j) * y[j];
  }
  return out;
}

AmbientSpace::AmbientSpace(LieAlgebraFrame f, NordenMetric m, AlmostContactData d)
    : frame(std::move(f)), metric(std::move(m)), acd(std::move(d)) {
  const std::size_t n = frame.dim();
  if (metric.dim() != n || acd.phi.rows() != n || acd.phi.cols() != n || acd.xi.size() != n ||
      acd.eta.size() != n)
    throw ValidationError("ambient space component dimensions disagree");
  if (n % 2 == 0) throw ValidationError("almost contact structures live in odd dimension");
}

Report check_acn_axioms(const AmbientSpace& space) { return check_acn_axioms(space.metric, space.acd); }

Report check_acn_axioms(const NordenMetric& metric, const AlmostContactData& acd) {
  Report rep;
  const std::size_t n = metric.dim();
  const FMat& phi = acd.phi;
  const FVec& xi = acd.xi;
  const FVec& eta = acd.eta;
  const FMat& g = metric.matrix();

  // phi^2 = -I + xi (x) eta
  FMat phi2 = phi * phi;
  FMat expected = -FMat::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) expected(i, j) += xi[i] * eta[j];
  rep.add("phi_squared", phi2 == expected);

  // eta(xi) = 1
  Fraction pairing;
  for (std::size_t i = 0; i < n; ++i) pairing += eta[i] * xi[i];
  rep.add("eta_of_xi", pairing == Fraction(1));

  // consequences, reported separately
  rep.add("phi_of_xi", (phi * xi).is_zero());
  FVec eta_phi(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) eta_phi[j] += eta[i] * phi(i, j);
  rep.add("eta_after_phi", eta_phi.is_zero());

  // g(phi x, phi y) = -g(x,y) + eta(x) eta(y)
  FMat lhs = phi.transpose() * g * phi;
  FMat rhs = -g;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rhs(i, j) += eta[i] * eta[j];
  rep.add("norden_compatibility", lhs == rhs);

  // eta = g(., xi)
  FVec g_xi = g * xi;
  rep.add("eta_equals_g_xi", g_xi == eta);
  return rep;
}

NordenMetric associated_metric(const AmbientSpace& space) {
  const std::size_t n = space.dim();
  FMat gt = space.metric.matrix() * space.acd.phi;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gt(i, j) += space.acd.eta[i] * space.acd.eta[j];
  return NordenMetric(gt);
}

ConnectionTable::ConnectionTable(std::size_t n, std::vector<FVec> gamma)
    : n_(n), g_(std::move(gamma)) {
  if (g_.size() != n_ * n_) throw ValidationError("connection table has wrong size");
}

FVec ConnectionTable::covariant(const FVec& x, const FVec& y) const {
  if (x.size() != n_ || y.size() != n_) throw PreconditionError("covariant: dimension mismatch");
  FVec out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (y[j].is_zero()) continue;
      out += (x[i] * y[j]) * gamma(i, j);
    }
  }
  return out;
}

ConnectionTable koszul_connection(const LieAlgebraFrame& frame, const NordenMetric& metric) {
  const std::size_t n = frame.dim();
  if (metric.dim() != n) throw PreconditionError("koszul: metric dimension mismatch");
  std::vector<FVec> gamma(n * n, FVec(n));
  const Fraction half(Rational(1, 2));
  for (std::size_t i = 0; i < n; ++i) {
    FVec ei = unit(frame, i);
    for (std::size_t j = 0; j < n; ++j) {
      FVec ej = unit(frame, j);
      FVec w(n);
      for (std::size_t k = 0; k < n; ++k) {
        FVec ek = unit(frame, k);
        w[k] = metric.inner(frame.bracket(i, j), ek) + metric.inner(frame.bracket(ek, ei), ej) +
               metric.inner(frame.bracket(ek, ej), ei);
      }
      gamma[i * n + j] = half * (metric.inverse() * w);
    }
  }
  return ConnectionTable(n, std::move(gamma));
}

CurvatureData curvature(const ConnectionTable& conn, const LieAlgebraFrame& frame,
                        const NordenMetric& metric) {
  const std::size_t n = frame.dim();
  CurvatureData out;
  out.n = n;
  out.vec.assign(n * n * n, FVec(n));
  out.lowered = Tensor4<Fraction>(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        FVec r = conn.covariant(unit(frame, i), conn.gamma(j, k)) -
                 conn.covariant(unit(frame, j), conn.gamma(i, k)) -
                 conn.covariant(frame.bracket(i, j), unit(frame, k));
        for (std::size_t l = 0; l < n; ++l)
          out.lowered(i, j, k, l) = metric.inner(r, unit(frame, l));
        out.vec[(i * n + j) * n + k] = std::move(r);
      }
  return out;
}

Tensor3<Fraction> f_tensor_from_connection(const ConnectionTable& conn, const NordenMetric& metric,
                                           const AlmostContactData& acd,
                                           const LieAlgebraFrame& frame) {
  const std::size_t n = frame.dim();
  Tensor3<Fraction> f(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      FVec phi_ej = acd.phi.col(j);
      FVec nabla_phi = conn.covariant(unit(frame, i), phi_ej) - acd.phi * conn.gamma(i, j);
      for (std::size_t k = 0; k < n; ++k) f(i, j, k) = metric.inner(nabla_phi, unit(frame, k));
    }
  return f;
}

Tensor3<Fraction> f_tensor_lie(const LieAlgebraFrame& frame, const NordenMetric& metric,
                               const FMat& phi) {
  const std::size_t n = frame.dim();
  if (phi.rows() != n || phi.cols() != n) throw PreconditionError("f_tensor_lie: phi dimension");
  Tensor3<Fraction> f(n);
  const Fraction half(Rational(1, 2));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        FVec ex = unit(frame, x), ey = unit(frame, y), ez = unit(frame, z);
        FVec phi_y = phi.col(y), phi_z = phi.col(z);
        Fraction t1 = metric.inner(frame.bracket(ex, phi_y) - phi * frame.bracket(ex, ey), ez);
        Fraction t2 = metric.inner(phi * frame.bracket(ez, ex) - frame.bracket(phi_z, ex), ey);
        Fraction t3 = metric.inner(frame.bracket(ez, phi_y) - frame.bracket(phi_z, ey), ex);
        f(x, y, z) = half * (t1 + t2 + t3);
      }
  return f;
}

bool is_class_F0(const Tensor3<Fraction>& f) { return f.is_zero(); }

FVec unit(const LieAlgebraFrame& frame, std::size_t i) {
  FVec e(frame.dim());
  e[i] = Fraction(1);
  return e;
}

AmbientSpace change_basis(const AmbientSpace& space, const SMat& new_in_old,
                          std::vector<std::string> new_names) {
  const std::size_t n = space.dim();
  if (new_in_old.rows() != n || new_in_old.cols() != n || new_names.size() != n)
    throw ValidationError("change_basis: shape mismatch");
  FMat s = promote(new_in_old);
  FMat s_inv_t = mat_inverse(s).transpose(); // throws when singular

  // Vectors transform by S^-T (columns), covectors by S, bilinear forms by S . S^T.
  LieAlgebraFrame frame(space.table(), std::move(new_names));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      FVec old_coords = space.frame.bracket(s.row(i), s.row(j));
      frame.set_bracket(i, j, s_inv_t * old_coords);
    }
  NordenMetric metric(s * space.metric.matrix() * s.transpose());
  AlmostContactData acd;
  acd.phi = s_inv_t * space.acd.phi * s.transpose();
  acd.xi = s_inv_t * space.acd.xi;
  acd.eta = s * space.acd.eta;
  return AmbientSpace(std::move(frame), std::move(metric), std::move(acd));
}

Tensor3<Fraction> transport_tensor3(const Tensor3<Fraction>& f, const SMat& new_in_old) {
  const std::size_t n = f.dim();
  FMat s = promote(new_in_old);
  Tensor3<Fraction> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Fraction acc;
        for (std::size_t a = 0; a < n; ++a) {
          if (s(i, a).is_zero()) continue;
          for (std::size_t b = 0; b < n; ++b) {
            if (s(j, b).is_zero()) continue;
            for (std::size_t c = 0; c < n; ++c) acc += s(i, a) * s(j, b) * s(k, c) * f(a, b, c);
          }
        }
        out(i, j, k) = acc;
      }
  return out;
}

} // namespace acn
