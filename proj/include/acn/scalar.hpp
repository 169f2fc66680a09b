#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace acn {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Base class for all library errors.
class Error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad expression text, bad document fields, bad table setup.
class ValidationError : public Error {
  using Error::Error;
};

/// Expression or document text that does not parse.
class ParseError : public ValidationError {
  using ValidationError::ValidationError;
};

/// A computation whose mathematical precondition fails (singular matrix,
/// division by zero, mismatched symbol tables, vanishing branch denominator).
class PreconditionError : public Error {
  using Error::Error;
};

/// A normal section of the wrong type for the requested operation.
class SectionError : public Error {
  using Error::Error;
};

/// Exponent vector, one entry per symbol of the owning table. Values are
/// keyed by exponent vector; a value with no table uses empty vectors.
using ExpVec = std::vector<std::uint32_t>;
using TermMap = std::map<ExpVec, Rational>;

class Scalar;

/// Rewrite rule sym^2 -> replacement, with the replacement free of sym and of
/// every later symbol. positive_root records which square root the symbol
/// denotes when the replacement is a constant (used only for sign queries).
struct SquareRule {
  TermMap replacement;
  bool positive_root = true;
};

/// Ordered symbol list plus a triangular system of square-rewrite rules.
/// Declare all rules before doing arithmetic with the table's values.
class SymbolTable : public std::enable_shared_from_this<SymbolTable> {
public:
  static std::shared_ptr<SymbolTable> create(std::vector<std::string> symbols);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& symbols() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  const std::string& name(std::size_t idx) const { return names_.at(idx); }

  bool has_rule(std::size_t idx) const { return idx < rules_.size() && rules_[idx].has_value(); }
  const SquareRule& rule(std::size_t idx) const;

  /// Installs sym^2 -> rhs. The rhs may only use symbols that precede sym.
  void add_square_rule(const std::string& symbol, const Scalar& rhs, bool positive_root = true);

  /// Free-text assumptions (sign conditions etc.) carried as metadata only.
  void add_assumption(std::string text) { assumptions_.push_back(std::move(text)); }
  const std::vector<std::string>& assumptions() const { return assumptions_; }

private:
  SymbolTable() = default;
  std::vector<std::string> names_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::vector<std::optional<SquareRule>> rules_;
  std::vector<std::string> assumptions_;
};

using TablePtr = std::shared_ptr<const SymbolTable>;

/// Multivariate polynomial over the rationals in the table's symbols, kept in
/// normal form w.r.t. the table's square rules (ruled symbols appear with
/// exponent 0 or 1). A Scalar without a table is a plain rational constant
/// and combines with values of any table.
class Scalar {
public:
  Scalar() = default;
  Scalar(int v) : Scalar(Rational(v)) {}
  Scalar(const Rational& v);

  static Scalar constant(const TablePtr& table, const Rational& v);
  static Scalar symbol(const TablePtr& table, std::string_view name);
  /// Builds from arbitrary (possibly denormalized) terms and normalizes.
  static Scalar from_raw_terms(const TablePtr& table, TermMap terms);

  const TablePtr& table() const { return table_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// The rational value when is_constant(), otherwise nullopt.
  std::optional<Rational> constant_value() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar pow(unsigned e) const;
  /// Division by a nonzero rational constant.
  Scalar divided_by(const Rational& q) const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Evaluates the bound symbols at rational values; unbound symbols remain.
  /// Binding a ruled symbol is allowed only when its rule reduces to a
  /// rational under the same bindings and the value satisfies it.
  Scalar substitute(const std::map<std::string, Rational>& bindings) const;


private:
  TablePtr table_;
  TermMap terms_;
};

/// Sign of a scalar when it is decidable: zero, a rational constant, or
/// p + q*v with p, q rational and v a ruled positive square root of a
/// positive non-square rational. Returns nullopt otherwise.
std::optional<int> sign_of(const Scalar& s);

/// Quotient of two Scalars. Kept with a denominator free of ruled symbols
/// (conjugate rationalization) and with rational denominators folded away,
/// so a Fraction whose denominator is 1 is exactly a Scalar. Equality is the
/// cross-multiplied test; the ring is assumed to be an integral domain for
/// the declared rule sets.
class Fraction {
public:
  Fraction() : num_(), den_(Scalar(1)) {}
  Fraction(int v) : num_(Scalar(v)), den_(Scalar(1)) {}
  Fraction(const Rational& v) : num_(Scalar(v)), den_(Scalar(1)) {}
  Fraction(Scalar num) : num_(std::move(num)), den_(Scalar(1)) {}
  Fraction(Scalar num, Scalar den);

  const Scalar& num() const { return num_; }
  const Scalar& den() const { return den_; }
  const TablePtr& table() const { return num_.table() ? num_.table() : den_.table(); }

  bool is_zero() const { return num_.is_zero(); }
  /// The underlying Scalar when the denominator reduced to 1.
  std::optional<Scalar> as_scalar() const;
  std::optional<Rational> constant_value() const;

  Fraction operator-() const;
  Fraction inv() const;
  Fraction& operator+=(const Fraction& o);
  Fraction& operator-=(const Fraction& o);
  Fraction& operator*=(const Fraction& o);
  Fraction& operator/=(const Fraction& o);
  friend Fraction operator+(Fraction a, const Fraction& b) { return a += b; }
  friend Fraction operator-(Fraction a, const Fraction& b) { return a -= b; }
  friend Fraction operator*(Fraction a, const Fraction& b) { return a *= b; }
  friend Fraction operator/(Fraction a, const Fraction& b) { return a /= b; }

  friend bool operator==(const Fraction& a, const Fraction& b);
  friend bool operator!=(const Fraction& a, const Fraction& b) { return !(a == b); }

  std::optional<int> sign() const;

private:
  Scalar num_;
  Scalar den_;
  void simplify();
};

} // namespace acn
