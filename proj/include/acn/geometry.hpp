#pragma once

#include "acn/linalg.hpp"
#include "acn/scalar.hpp"

#include <string>
#include <vector>

namespace acn {

/// One named identity outcome inside a Report.
struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::vector<CheckItem> items;
  bool all_pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
  void add(std::string name, bool pass, std::string detail = "") {
    items.push_back({std::move(name), pass, std::move(detail)});
  }
  void merge(const Report& other, const std::string& prefix = "") {
    for (const auto& it : other.items) items.push_back({prefix + it.name, it.pass, it.detail});
  }
};

/// Lie algebra presented by a frame: n basis vectors and the bracket table
/// c[i][j] = [e_i, e_j] as coordinate vectors. Antisymmetry is maintained by
/// construction; the Jacobi identity is checked on demand.
class LieAlgebraFrame {
public:
  LieAlgebraFrame(TablePtr table, std::vector<std::string> names);

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const TablePtr& table() const { return table_; }

  void set_bracket(std::size_t i, std::size_t j, const FVec& value);
  const FVec& bracket(std::size_t i, std::size_t j) const;
  /// Bilinear extension to arbitrary coordinate vectors.
  FVec bracket(const FVec& x, const FVec& y) const;

private:
  TablePtr table_;
  std::vector<std::string> names_;
  std::vector<FVec> c_; // row-major n*n of coordinate vectors
};

/// i-th coordinate basis vector of a frame.
FVec unit(const LieAlgebraFrame& frame, std::size_t i);

/// Cyclic-sum check of [[e_i,e_j],e_k]; failures name the triple.
Report check_jacobi(const LieAlgebraFrame& frame);

/// Symmetric invertible frame metric with its cached exact inverse.
class NordenMetric {
public:
  explicit NordenMetric(FMat g);
  std::size_t dim() const { return g_.rows(); }
  const FMat& matrix() const { return g_; }
  const FMat& inverse() const { return g_inv_; }
  Fraction inner(const FVec& x, const FVec& y) const;

private:
  FMat g_;
  FMat g_inv_;
};

/// (phi, xi, eta) frame data; phi acts on columns, eta holds eta(e_i).
/// Validity of the almost contact axioms is not enforced at construction.
struct AlmostContactData {
  FMat phi;
  FVec xi;
  FVec eta;
};

/// A Lie algebra frame carrying a Norden metric and almost contact data.
struct AmbientSpace {
  LieAlgebraFrame frame;
  NordenMetric metric;
  AlmostContactData acd;

  AmbientSpace(LieAlgebraFrame f, NordenMetric m, AlmostContactData d);
  std::size_t dim() const { return frame.dim(); }
  const TablePtr& table() const { return frame.table(); }
};

/// Frame-level verification of the structure axioms:
///   phi^2 = -I + xi (x) eta,  eta(xi) = 1,  g(phi.,phi.) = -g + eta (x) eta,
/// plus the standard consequences phi(xi) = 0, eta o phi = 0, eta = g(.,xi),
/// each reported as its own item.
Report check_acn_axioms(const NordenMetric& metric, const AlmostContactData& acd);
Report check_acn_axioms(const AmbientSpace& space);

/// The associated metric g~(x,y) = g(x, phi y) + eta(x) eta(y).
NordenMetric associated_metric(const AmbientSpace& space);

/// Levi-Civita connection on a left-invariant frame: Gamma[i][j] = nabla_{e_i} e_j.
class ConnectionTable {
public:
  ConnectionTable(std::size_t n, std::vector<FVec> gamma);
  std::size_t dim() const { return n_; }
  const FVec& gamma(std::size_t i, std::size_t j) const { return g_.at(i * n_ + j); }
  /// nabla_x y for coordinate vectors with constant coefficients.
  FVec covariant(const FVec& x, const FVec& y) const;

private:
  std::size_t n_;
  std::vector<FVec> g_;
};

/// Koszul formula with the derivative terms dropped (metric coefficients are
/// constants on a left-invariant frame):
///   2 g(nabla_{e_i} e_j, e_k) = g([e_i,e_j],e_k) + g([e_k,e_i],e_j) + g([e_k,e_j],e_i).
ConnectionTable koszul_connection(const LieAlgebraFrame& frame, const NordenMetric& metric);

struct CurvatureData {
  /// R(e_i,e_j)e_k as a coordinate vector.
  std::vector<FVec> vec; // index (i*n + j)*n + k
  /// Lowered tensor R(i,j,k,l) = g(R(e_i,e_j)e_k, e_l).
  Tensor4<Fraction> lowered;
  std::size_t n = 0;
  const FVec& r(std::size_t i, std::size_t j, std::size_t k) const {
    return vec.at((i * n + j) * n + k);
  }
};

/// R(x,y)z = nabla_x nabla_y z - nabla_y nabla_x z - nabla_{[x,y]} z.
CurvatureData curvature(const ConnectionTable& conn, const LieAlgebraFrame& frame,
                        const NordenMetric& metric);

/// F(x,y,z) = g((nabla_x phi) y, z) computed from a connection table.
Tensor3<Fraction> f_tensor_from_connection(const ConnectionTable& conn, const NordenMetric& metric,
                                           const AlmostContactData& acd,
                                           const LieAlgebraFrame& frame);

/// F by the bracket-only route
///   F(x,y,z) = 1/2 { g([x,phi y] - phi[x,y], z) + g(phi[z,x] - [phi z,x], y)
///                    + g([z,phi y] - [phi z,y], x) },
/// equal to the connection route whenever phi is g-self-adjoint (true for
/// every valid structure).
Tensor3<Fraction> f_tensor_lie(const LieAlgebraFrame& frame, const NordenMetric& metric,
                               const FMat& phi);

/// True iff every component has zero normal form (class F0 certificate).
bool is_class_F0(const Tensor3<Fraction>& f);

/// Rewrites the whole structure in a new frame. Row i of new_in_old gives the
/// coordinates of the new basis vector E_i in the old frame.
AmbientSpace change_basis(const AmbientSpace& space, const SMat& new_in_old,
                          std::vector<std::string> new_names);

/// Transports a lowered (0,3)-tensor to the new frame (same row convention).
Tensor3<Fraction> transport_tensor3(const Tensor3<Fraction>& f, const SMat& new_in_old);

} // namespace acn
