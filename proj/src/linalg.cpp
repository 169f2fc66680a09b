#include "acn/linalg.hpp"

namespace acn {

FVec promote(const SVec& v) {
  FVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Fraction(v[i]);
  return r;
}

FMat promote(const SMat& m) {
  FMat r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Fraction(m(i, j));
  return r;
}

Tensor3<Fraction> promote(const Tensor3<Scalar>& t) {
  Tensor3<Fraction> r(t.dim());
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = 0; j < t.dim(); ++j)
      for (std::size_t k = 0; k < t.dim(); ++k) r(i, j, k) = Fraction(t(i, j, k));
  return r;
}

FMat mat_inverse(const FMat& m) {
  if (m.rows() != m.cols()) throw PreconditionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  FMat a = m;
  FMat inv = FMat::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) throw PreconditionError("singular matrix");
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    }
    Fraction d = a(col, col).inv();
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= d;
      inv(col, j) *= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col).is_zero()) continue;
      Fraction f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

std::size_t rank(FMat m) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    Fraction d = m(r, col).inv();
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= d;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, col).is_zero()) continue;
      Fraction f = m(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

std::optional<FVec> solve(const FMat& a, const FVec& b) {
  if (a.rows() != b.size()) throw PreconditionError("solve: shape mismatch");
  const std::size_t n = a.rows(), m = a.cols();
  FMat aug(n, m + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) aug(i, j) = a(i, j);
    aug(i, m) = b[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < m && r < n; ++col) {
    std::size_t piv = r;
    while (piv < n && aug(piv, col).is_zero()) ++piv;
    if (piv == n) continue;
    if (piv != r)
      for (std::size_t j = 0; j <= m; ++j) std::swap(aug(piv, j), aug(r, j));
    Fraction d = aug(r, col).inv();
    for (std::size_t j = 0; j <= m; ++j) aug(r, j) *= d;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || aug(i, col).is_zero()) continue;
      Fraction f = aug(i, col);
      for (std::size_t j = 0; j <= m; ++j) aug(i, j) -= f * aug(r, j);
    }
    pivot_col.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < n; ++i)
    if (!aug(i, m).is_zero()) return std::nullopt;
  FVec x(m);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = aug(i, m);
  return x;
}

RankSignature sym_rank_and_signature(const FMat& m) {
  if (!m.is_symmetric()) throw PreconditionError("sym_rank_and_signature: matrix not symmetric");
  const std::size_t n = m.rows();
  FMat a = m;
  std::vector<bool> done(n, false);
  std::vector<Fraction> pivots;
  for (;;) {
    // Prefer a nonzero diagonal entry; otherwise create one by a congruence
    // row/column addition (characteristic zero: a_ii becomes 2*a_ij).
    std::optional<std::size_t> p;
    for (std::size_t i = 0; i < n && !p; ++i)
      if (!done[i] && !a(i, i).is_zero()) p = i;
    if (!p) {
      std::optional<std::pair<std::size_t, std::size_t>> off;
      for (std::size_t i = 0; i < n && !off; ++i)
        for (std::size_t j = i + 1; j < n && !off; ++j)
          if (!done[i] && !done[j] && !a(i, j).is_zero()) off = {i, j};
      if (!off) break;
      auto [i, j] = *off;
      for (std::size_t k = 0; k < n; ++k) a(i, k) += a(j, k);
      for (std::size_t k = 0; k < n; ++k) a(k, i) += a(k, j);
      p = i;
    }
    const std::size_t pi = *p;
    Fraction d = a(pi, pi);
    pivots.push_back(d);
    for (std::size_t rr = 0; rr < n; ++rr) {
      if (rr == pi || done[rr] || a(rr, pi).is_zero()) continue;
      Fraction f = a(rr, pi) / d;
      for (std::size_t k = 0; k < n; ++k) a(rr, k) -= f * a(pi, k);
      for (std::size_t k = 0; k < n; ++k) a(k, rr) -= f * a(k, pi);
    }
    done[pi] = true;
  }
  RankSignature out;
  out.rank = pivots.size();
  int plus = 0, minus = 0;
  for (const auto& d : pivots) {
    auto s = d.sign();
    if (!s || *s == 0) return out; // signature stays nullopt
    (*s > 0 ? plus : minus)++;
  }
  out.signature = std::make_pair(plus, minus);
  return out;
}

} // namespace acn
