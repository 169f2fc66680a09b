#pragma once

#include "acn/submanifold.hpp"

#include <optional>
#include <string>

namespace acn::catalog {

/// A built-in construction together with the closed-form values the generic
/// pipeline must reproduce exactly.
struct ExampleBundle {
  std::string name;
  TablePtr table;
  AmbientSpace ambient;
  NormalSection section;
  DecompositionCase kind = DecompositionCase::orthogonal;

  // expected decomposition fragments
  Fraction exp_a, exp_b;
  FVec exp_xi0, exp_xi1, exp_xi2;
  FVec exp_eta1, exp_eta2;
  FMat exp_phi_tan;

  // induction parameters (defaults used by the golden comparisons)
  std::optional<Scalar> k;
  std::optional<Scalar> t0, t2;

  // expected induced structure at those defaults
  FVec exp_ind_xi, exp_ind_eta;
  FMat exp_ind_phi;
  std::optional<Fraction> exp_lambda, exp_mu;

  // expected shape operators and normal-connection form, when stated
  std::optional<GaussWeingartenData> exp_gw;

  // expected F tensor of the induced geometry, on the tangent frame
  Tensor3<Fraction> exp_f;

  std::string class_label;
  std::string class_note;
  bool f0_certifiable = false;
  std::vector<std::string> assumptions;

  explicit ExampleBundle(AmbientSpace amb) : ambient(std::move(amb)) {}
};

/// Note attached to every class label that is carried as metadata only.
extern const char* const kUnverifiedClassNote;

/// Symbols a, m (free), s with s^2 -> 3, t0/t2 with t2^2 -> 1 - t0^2.
TablePtr make_table();

/// The 5-dimensional solvable example: frame {X1..X4, xi}, metric
/// diag(1,1,-1,-1,1), phi X_i = X_{2+i}, and the bracket table in a, m.
AmbientSpace build_G(const TablePtr& table);

/// The O(3,2) change-of-basis matrix (block rotation by pi/6 in the
/// {X2, xi} plane, expressed in the permuted ordering below).
SMat transition_T(const TablePtr& table);

/// Source ordering of the basis change: (X1, X2, xi, X3, X4) as rows in
/// X-coordinates.
SMat basis_permutation(const TablePtr& table);

/// Rows of the E-basis in X-coordinates: S = T^t * P.
SMat basis_change_rows(const TablePtr& table);

/// diag(1,1,1,-1,-1): the metric in the permuted ordering, and also in the
/// E-basis.
SMat signature_form_C(const TablePtr& table);

/// build_G transported to the E-basis via basis_change_rows.
AmbientSpace build_G_E(const TablePtr& table);

/// Submanifold with tangent {X1, X4, xi} and normals N1 = X2, N2 = X3
/// (orthogonal case; induced structure on the whole t0/t2 circle; F = 0).
ExampleBundle example_H3();

/// Submanifold with tangent {E1, E2, E5} and normals N1 = E3, N2 = E4
/// (non-orthogonal case; a = sqrt(3)/2, b = 0, k = sqrt(3)/2).
ExampleBundle example_H();

/// Bracket-closure of the subalgebras b1, b2, b3 (X-basis) and b (E-basis),
/// plus the classification of the normal sections alpha_1, alpha_2, alpha_3
/// and {E3, E4}.
Report list_subalgebras();

/// Runs both example bundles through the generic pipeline and compares every
/// stored expected value. Non-default epsilon/branch runs skip the golden
/// comparisons that depend on them and still verify the axioms.
Report verify_examples(int epsilon = +1, Branch branch = Branch::lambda1);

} // namespace acn::catalog
