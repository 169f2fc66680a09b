#pragma once

#include "acn/scalar.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace acn {

/// Dense coordinate vector.
template <class T>
class Vec {
public:
  Vec() = default;
  explicit Vec(std::size_t n) : v_(n) {}
  Vec(std::initializer_list<T> xs) : v_(xs) {}
  explicit Vec(std::vector<T> xs) : v_(std::move(xs)) {}

  std::size_t size() const { return v_.size(); }
  T& operator[](std::size_t i) { return v_.at(i); }
  const T& operator[](std::size_t i) const { return v_.at(i); }

  Vec operator-() const {
    Vec r(size());
    for (std::size_t i = 0; i < size(); ++i) r[i] = -v_[i];
    return r;
  }
  Vec& operator+=(const Vec& o) {
    require_same_size(o);
    for (std::size_t i = 0; i < size(); ++i) v_[i] += o[i];
    return *this;
  }
  Vec& operator-=(const Vec& o) {
    require_same_size(o);
    for (std::size_t i = 0; i < size(); ++i) v_[i] -= o[i];
    return *this;
  }
  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(const T& c, const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
  }
  friend bool operator==(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!(a[i] == b[i])) return false;
    return true;
  }
  bool is_zero() const {
    for (const auto& x : v_)
      if (!x.is_zero()) return false;
    return true;
  }

private:
  std::vector<T> v_;
  void require_same_size(const Vec& o) const {
    if (size() != o.size()) throw PreconditionError("vector size mismatch");
  }
};

/// Dense row-major matrix, possibly rectangular.
template <class T>
class Mat {
public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), v_(rows * cols) {}
  Mat(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
      if (r.size() != cols_) throw PreconditionError("ragged matrix initializer");
      for (const auto& x : r) v_.push_back(x);
    }
  }
  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return v_.at(i * cols_ + j); }
  const T& operator()(std::size_t i, std::size_t j) const { return v_.at(i * cols_ + j); }

  Mat transpose() const {
    Mat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }
  Vec<T> row(std::size_t i) const {
    Vec<T> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }
  Vec<T> col(std::size_t j) const {
    Vec<T> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) r[i] = (*this)(i, j);
    return r;
  }

  Mat operator-() const {
    Mat r(rows_, cols_);
    for (std::size_t k = 0; k < v_.size(); ++k) r.v_[k] = -v_[k];
    return r;
  }
  Mat& operator+=(const Mat& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < v_.size(); ++k) v_[k] += o.v_[k];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < v_.size(); ++k) v_[k] -= o.v_[k];
    return *this;
  }
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(const T& c, const Mat& m) {
    Mat r(m.rows_, m.cols_);
    for (std::size_t k = 0; k < m.v_.size(); ++k) r.v_[k] = c * m.v_[k];
    return r;
  }
  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw PreconditionError("matrix product shape mismatch");
    Mat r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
      }
    return r;
  }
  friend Vec<T> operator*(const Mat& m, const Vec<T>& x) {
    if (m.cols_ != x.size()) throw PreconditionError("matrix-vector shape mismatch");
    Vec<T> r(m.rows_);
    for (std::size_t i = 0; i < m.rows_; ++i)
      for (std::size_t j = 0; j < m.cols_; ++j) r[i] += m(i, j) * x[j];
    return r;
  }
  friend bool operator==(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t k = 0; k < a.v_.size(); ++k)
      if (!(a.v_[k] == b.v_[k])) return false;
    return true;
  }
  bool is_zero() const {
    for (const auto& x : v_)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_symmetric() const {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return rows_ == cols_;
  }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> v_;
  void require_same_shape(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw PreconditionError("matrix shape mismatch");
  }
};

/// Plain cubic coordinate array T(i,j,k); no symmetry is enforced.
template <class T>
class Tensor3 {
public:
  Tensor3() = default;
  explicit Tensor3(std::size_t n) : n_(n), v_(n * n * n) {}
  std::size_t dim() const { return n_; }
  T& operator()(std::size_t i, std::size_t j, std::size_t k) { return v_.at((i * n_ + j) * n_ + k); }
  const T& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return v_.at((i * n_ + j) * n_ + k);
  }
  friend bool operator==(const Tensor3& a, const Tensor3& b) { return a.n_ == b.n_ && a.v_ == b.v_; }
  bool is_zero() const {
    for (const auto& x : v_)
      if (!x.is_zero()) return false;
    return true;
  }

private:
  std::size_t n_ = 0;
  std::vector<T> v_;
};

/// Plain quartic coordinate array T(i,j,k,l).
template <class T>
class Tensor4 {
public:
  Tensor4() = default;
  explicit Tensor4(std::size_t n) : n_(n), v_(n * n * n * n) {}
  std::size_t dim() const { return n_; }
  T& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return v_.at(((i * n_ + j) * n_ + k) * n_ + l);
  }
  const T& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return v_.at(((i * n_ + j) * n_ + k) * n_ + l);
  }
  friend bool operator==(const Tensor4& a, const Tensor4& b) { return a.n_ == b.n_ && a.v_ == b.v_; }
  bool is_zero() const {
    for (const auto& x : v_)
      if (!x.is_zero()) return false;
    return true;
  }

private:
  std::size_t n_ = 0;
  std::vector<T> v_;
};

using SVec = Vec<Scalar>;
using FVec = Vec<Fraction>;
using SMat = Mat<Scalar>;
using FMat = Mat<Fraction>;

FVec promote(const SVec& v);
FMat promote(const SMat& m);
Tensor3<Fraction> promote(const Tensor3<Scalar>& t);

/// Exact inverse over the fraction field. Throws PreconditionError when the
/// matrix is singular (zero determinant normal form).
FMat mat_inverse(const FMat& m);

/// Column rank by Gaussian elimination with first-nonzero pivoting.
std::size_t rank(FMat m);

/// One solution x of A x = b, or nullopt when the system is inconsistent.
std::optional<FVec> solve(const FMat& a, const FVec& b);

struct RankSignature {
  std::size_t rank = 0;
  /// (n_plus, n_minus) when every pivot's sign is determinable.
  std::optional<std::pair<int, int>> signature;
};

/// Rank and, when decidable, signature of a symmetric matrix via symmetric
/// (congruence) elimination. Indeterminate signs yield signature == nullopt.
RankSignature sym_rank_and_signature(const FMat& m);

} // namespace acn
