#pragma once

#include "acn/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace acn {

/// A 2-plane of normals plus a spanning set for the tangent space, all in
/// ambient frame coordinates. Tangent names are used for induced frames.
struct NormalSection {
  FVec n1;
  FVec n2;
  std::vector<FVec> tangent;
  std::vector<std::string> tangent_names;
};

enum class SectionType { pure, hybrid, indeterminate };

/// Classification of a 2-section per the rank/signature of g restricted to
/// it and its interaction with phi and xi.
struct SectionClass {
  std::size_t rank = 0; // 2 nondegenerate, 1 weakly isotropic, 0 strongly isotropic
  SectionType type = SectionType::indeterminate;
  std::optional<std::pair<int, int>> signature;
  bool holomorphic = false;  // phi(alpha) == alpha
  bool xi_section = false;   // xi in alpha
  bool totally_real = false; // phi(alpha) orthogonal to alpha
  bool xi_orthogonal = false; // g(xi, N1) = g(xi, N2) = 0, i.e. xi is tangent
};

std::string to_string(SectionType t);

SectionClass classify_section(const AmbientSpace& space, const NormalSection& sec);

enum class DecompositionCase { non_orthogonal, orthogonal };

/// The tangential/normal splitting of xi and phi along a totally real
/// hybrid section: xi = xi0 + a N1 + b N2, phi x = phi_tan x + eta1(x) N1 +
/// eta2(x) N2, phi N1 = xi1, phi N2 = -xi2. Tangential objects are expressed
/// in the section's tangent frame.
struct Decomposition {
  DecompositionCase kind = DecompositionCase::orthogonal;
  Fraction a;
  Fraction b;
  FVec xi0, xi1, xi2;    // tangent coordinates
  FVec eta0, eta1, eta2; // covector values on the tangent frame
  FMat phi_tan;

  // context carried for the downstream stages
  NormalSection section;
  FMat tangent_cols;   // ambient x tangent matrix, columns = tangent vectors
  FMat metric_tan;     // restricted metric on the tangent frame
  TablePtr table;
};

Decomposition decompose(const AmbientSpace& space, const NormalSection& sec);

/// Exact verification of the derived identities of the splitting: the
/// eta_i/g(.,xi_i) dualities, the restricted compatibility, phi_tan^2, the
/// eta o phi and phi xi relations with coefficients a, b, and the inner
/// products g(xi0,xi0)=1-a^2+b^2, g(xi1,xi1)=a^2-1, g(xi2,xi2)=1+b^2,
/// g(xi1,xi2)=ab (their a=b=0 forms in the orthogonal case).
Report check_decomposition_identities(const AmbientSpace& space, const Decomposition& dec);

enum class Branch { lambda1, lambda2 };
enum class InducedBranchTag { k_general_lambda1, k_general_lambda2, k_eq_plus1, k_eq_minus1, orthogonal };

std::string to_string(InducedBranchTag t);

/// Almost contact structure induced on the submanifold, with the parameters
/// that produced it.
struct InducedStructure {
  AlmostContactData acd;
  InducedBranchTag branch = InducedBranchTag::orthogonal;
  int epsilon = +1;
  std::optional<Fraction> lambda, mu;
  std::optional<Scalar> k;
  std::optional<Scalar> t0, t2;
};

/// Non-orthogonal case: xi = -(b/k) xi1 + (a/k) xi2, eta likewise, and
/// phi = lambda phi_tan^3 + mu phi_tan with lambda = eps/(k(k+1)) and
/// mu = eps(1+k^2+k)/(k(k+1)) (branch lambda1) or the (k-1) variants
/// (branch lambda2). k must satisfy k^2 = a^2 - b^2 and the branch
/// denominator must not vanish.
InducedStructure induce_nonorthogonal(const Decomposition& dec, Branch branch, int epsilon,
                                      const Scalar& k);

/// Orthogonal case: xi = t0 xi0 - t2 xi2, eta = t0 eta0 - t2 eta2,
/// phi x = phi_tan x + t0 {eta1(x) xi2 + eta2(x) xi1} + t2 {eta0(x) xi1 + eta1(x) xi0},
/// with t0^2 + t2^2 = 1 required to hold in the ring.
InducedStructure induce_orthogonal(const Decomposition& dec, const Scalar& t0, const Scalar& t2);

/// Shape operators and the normal-connection 1-form of the section:
///   nabla_x N1 = -A1 x + gamma(x) N2,   nabla_x N2 = -A2 x + gamma(x) N1.
/// gamma is extracted from both lines; a mismatch (possible only when the
/// section normalization g(N1,N1)=-g(N2,N2)=1 fails) is an error.
struct GaussWeingartenData {
  FMat a1, a2; // tangent endomorphisms
  FVec gamma;  // covector on the tangent frame
};

GaussWeingartenData gauss_weingarten(const AmbientSpace& space, const NormalSection& sec,
                                     const ConnectionTable& ambient_conn);

/// Packages the submanifold as a space of its own: restricted brackets
/// (tangent space must be a subalgebra), restricted metric, induced
/// structure. Ready for f_tensor_lie / is_class_F0.
AmbientSpace induced_geometry(const AmbientSpace& space, const NormalSection& sec,
                              const InducedStructure& ind);

} // namespace acn
