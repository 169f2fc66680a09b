#include "acn/scalar.hpp"

#include <algorithm>
#include <utility>

namespace acn {

namespace {

void add_term(TermMap& m, const ExpVec& e, const Rational& c) {
  if (c == 0) return;
  auto it = m.find(e);
  if (it == m.end()) {
    m.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) m.erase(it);
  }
}

ExpVec exp_sum(const ExpVec& a, const ExpVec& b) {
  ExpVec r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

TermMap mul_raw(const TermMap& a, const TermMap& b) {
  TermMap out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) add_term(out, exp_sum(ea, eb), Rational(ca * cb));
  return out;
}

TermMap pow_raw(const TermMap& base, std::uint32_t e) {
  TermMap acc{{ExpVec{}, Rational(1)}};
  for (std::uint32_t i = 0; i < e; ++i) acc = mul_raw(acc, base);
  return acc;
}

/// Rewrites squares of ruled symbols away, highest symbol first.
TermMap normalize_terms(TermMap terms, const SymbolTable* table) {
  {
    TermMap clean;
    for (const auto& [e, c] : terms) add_term(clean, e, c);
    terms = std::move(clean);
  }
  if (table == nullptr) return terms;
  for (;;) {
    // Highest ruled symbol that still occurs squared somewhere.
    std::optional<std::size_t> target;
    for (const auto& [e, c] : terms)
      for (std::size_t i = e.size(); i-- > 0;)
        if (e[i] >= 2 && table->has_rule(i) && (!target || i > *target)) target = i;
    if (!target) return terms;

    const std::size_t v = *target;
    const TermMap& repl = table->rule(v).replacement;
    TermMap next;
    for (const auto& [e, c] : terms) {
      if (v < e.size() && e[v] >= 2) {
        ExpVec base = e;
        const std::uint32_t q = e[v] / 2;
        base[v] = e[v] % 2;
        TermMap piece = mul_raw(TermMap{{base, c}}, pow_raw(repl, q));
        for (const auto& [pe, pc] : piece) add_term(next, pe, pc);
      } else {
        add_term(next, e, c);
      }
    }
    terms = std::move(next);
  }
}

TablePtr unify_tables(const TablePtr& a, const TablePtr& b, const char* op) {
  if (a && b && a != b) throw PreconditionError(std::string(op) + ": operands use different symbol tables");
  return a ? a : b;
}

/// Resizes constant-only exponent keys to the table's width.
TermMap lift_terms(const TermMap& terms, std::size_t width) {
  TermMap out;
  for (const auto& [e, c] : terms) {
    ExpVec le = e;
    le.resize(width, 0);
    out.emplace(std::move(le), c);
  }
  return out;
}

Rational rational_gcd(const Rational& a, const Rational& b) {
  using boost::multiprecision::gcd;
  using boost::multiprecision::lcm;
  Integer n = gcd(boost::multiprecision::numerator(a), boost::multiprecision::numerator(b));
  Integer d = lcm(boost::multiprecision::denominator(a), boost::multiprecision::denominator(b));
  return Rational(n, d);
}

bool is_perfect_square(const Rational& q) {
  if (q < 0) return false;
  using boost::multiprecision::sqrt;
  Integer n = boost::multiprecision::numerator(q);
  Integer d = boost::multiprecision::denominator(q);
  Integer rn = sqrt(n), rd = sqrt(d);
  return rn * rn == n && rd * rd == d;
}

} // namespace

std::shared_ptr<SymbolTable> SymbolTable::create(std::vector<std::string> symbols) {
  auto t = std::shared_ptr<SymbolTable>(new SymbolTable());
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (symbols[i].empty()) throw ValidationError("symbol names must be non-empty");
    if (!t->index_.emplace(symbols[i], i).second)
      throw ValidationError("duplicate symbol name: " + symbols[i]);
  }
  t->names_ = std::move(symbols);
  t->rules_.resize(t->names_.size());
  return t;
}

std::optional<std::size_t> SymbolTable::index_of(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const SquareRule& SymbolTable::rule(std::size_t idx) const {
  if (!has_rule(idx)) throw ValidationError("no square rule for symbol index " + std::to_string(idx));
  return *rules_[idx];
}

void SymbolTable::add_square_rule(const std::string& symbol, const Scalar& rhs, bool positive_root) {
  auto idx = index_of(symbol);
  if (!idx) throw ValidationError("square rule for unknown symbol: " + symbol);
  if (has_rule(*idx)) throw ValidationError("symbol already has a square rule: " + symbol);
  if (rhs.table() && rhs.table().get() != this)
    throw PreconditionError("square rule replacement built against a different table");
  TermMap terms = normalize_terms(lift_terms(rhs.terms(), size()), this);
  for (const auto& [e, c] : terms)
    for (std::size_t i = *idx; i < e.size(); ++i)
      if (e[i] != 0)
        throw ValidationError("square rule for '" + symbol + "' mentions symbol '" + names_[i] +
                              "' of equal or higher order (rules must be triangular)");
  rules_[*idx] = SquareRule{std::move(terms), positive_root};
}

Scalar::Scalar(const Rational& v) {
  if (v != 0) terms_.emplace(ExpVec{}, v);
}

Scalar Scalar::constant(const TablePtr& table, const Rational& v) {
  Scalar s;
  s.table_ = table;
  if (v != 0) s.terms_.emplace(ExpVec(table ? table->size() : 0, 0), v);
  return s;
}

Scalar Scalar::symbol(const TablePtr& table, std::string_view name) {
  if (!table) throw ValidationError("symbol requires a table");
  auto idx = table->index_of(name);
  if (!idx) throw ValidationError("unknown symbol: " + std::string(name));
  ExpVec e(table->size(), 0);
  e[*idx] = 1;
  Scalar s;
  s.table_ = table;
  s.terms_.emplace(std::move(e), Rational(1));
  return s;
}

Scalar Scalar::from_raw_terms(const TablePtr& table, TermMap terms) {
  Scalar s;
  s.table_ = table;
  s.terms_ = normalize_terms(lift_terms(terms, table ? table->size() : 0), table.get());
  return s;
}

bool Scalar::is_constant() const {
  for (const auto& [e, c] : terms_)
    for (auto x : e)
      if (x != 0) return false;
  return true;
}

std::optional<Rational> Scalar::constant_value() const {
  if (!is_constant()) return std::nullopt;
  if (terms_.empty()) return Rational(0);
  return terms_.begin()->second;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  TablePtr t = unify_tables(table_, o.table_, "add");
  std::size_t w = t ? t->size() : 0;
  TermMap out = lift_terms(terms_, w);
  for (const auto& [e, c] : lift_terms(o.terms_, w)) add_term(out, e, c);
  table_ = t;
  terms_ = std::move(out); // sums of normal forms are normal
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar operator*(const Scalar& a, const Scalar& b) {
  TablePtr t = unify_tables(a.table_, b.table_, "mul");
  std::size_t w = t ? t->size() : 0;
  Scalar r;
  r.table_ = t;
  r.terms_ = normalize_terms(mul_raw(lift_terms(a.terms_, w), lift_terms(b.terms_, w)), t.get());
  return r;
}

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

Scalar Scalar::pow(unsigned e) const {
  Scalar acc = table_ ? Scalar::constant(table_, 1) : Scalar(1);
  for (unsigned i = 0; i < e; ++i) acc *= *this;
  return acc;
}

Scalar Scalar::divided_by(const Rational& q) const {
  if (q == 0) throw PreconditionError("division by zero rational");
  Scalar r = *this;
  for (auto& [e, c] : r.terms_) c /= q;
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.table_ && b.table_ && a.table_ != b.table_) return false;
  std::size_t w = std::max(a.table_ ? a.table_->size() : 0, b.table_ ? b.table_->size() : 0);
  return lift_terms(a.terms_, w) == lift_terms(b.terms_, w);
}

namespace {

/// Pure evaluation, no rule-consistency checks (those happen once, on entry).
Scalar substitute_unchecked(const Scalar& s, const std::vector<std::optional<Rational>>& bound);

} // namespace

Scalar Scalar::substitute(const std::map<std::string, Rational>& bindings) const {
  if (!table_) {
    if (!bindings.empty()) throw ValidationError("substitute: value has no symbols");
    return *this;
  }
  std::vector<std::optional<Rational>> bound(table_->size());
  for (const auto& [name, value] : bindings) {
    auto idx = table_->index_of(name);
    if (!idx) throw ValidationError("substitute: unknown symbol " + name);
    bound[*idx] = value;
  }
  // A bound ruled symbol must satisfy its rule, and the rule must reduce to
  // a rational under the same bindings so that this is checkable.
  for (std::size_t i = 0; i < bound.size(); ++i) {
    if (!bound[i] || !table_->has_rule(i)) continue;
    Scalar rhs =
        substitute_unchecked(Scalar::from_raw_terms(table_, table_->rule(i).replacement), bound);
    auto rhs_val = rhs.constant_value();
    if (!rhs_val)
      throw PreconditionError("substitute: rule for '" + table_->name(i) +
                              "' does not reduce to a rational under these bindings");
    if (Rational(*bound[i] * *bound[i]) != *rhs_val)
      throw PreconditionError("substitute: value for ruled symbol '" + table_->name(i) +
                              "' violates its square rule");
  }
  return substitute_unchecked(*this, bound);
}

namespace {

Scalar substitute_unchecked(const Scalar& s, const std::vector<std::optional<Rational>>& bound) {
  TermMap out;
  for (const auto& [e, c] : s.terms()) {
    Rational coeff = c;
    ExpVec rest(e.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (bound[i]) {
        for (std::uint32_t k = 0; k < e[i]; ++k) coeff *= *bound[i];
      } else {
        rest[i] = e[i];
      }
    }
    add_term(out, rest, coeff);
  }
  return Scalar::from_raw_terms(s.table(), out);
}

} // namespace

std::optional<int> sign_of(const Scalar& s) {
  if (s.is_zero()) return 0;
  if (auto v = s.constant_value()) return *v > 0 ? 1 : -1;

  // p + q*v with v a ruled positive root of a positive non-square rational.
  const auto& table = s.table();
  Rational p(0), q(0);
  std::optional<std::size_t> v;
  for (const auto& [e, c] : s.terms()) {
    std::size_t nnz = 0, idx = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) {
        ++nnz;
        idx = i;
      }
    if (nnz == 0) {
      p = c;
    } else if (nnz == 1 && e[idx] == 1 && table->has_rule(idx)) {
      if (v && *v != idx) return std::nullopt;
      v = idx;
      q = c;
    } else {
      return std::nullopt;
    }
  }
  if (!v) return std::nullopt;
  const SquareRule& rule = table->rule(*v);
  if (!rule.positive_root) return std::nullopt;
  Scalar rhs = Scalar::from_raw_terms(s.table(), rule.replacement);
  auto d = rhs.constant_value();
  if (!d || *d <= 0 || is_perfect_square(*d)) return std::nullopt;
  // sign of p + q*sqrt(d), q != 0
  if (p == 0) return q > 0 ? 1 : -1;
  int sp = p > 0 ? 1 : -1, sq = q > 0 ? 1 : -1;
  if (sp == sq) return sp;
  Rational lhs = p * p, rhs2 = q * q * *d;
  if (lhs == rhs2) return std::nullopt; // cannot happen for a non-square d
  return lhs > rhs2 ? sp : sq;
}

Fraction::Fraction(Scalar num, Scalar den) : num_(std::move(num)), den_(std::move(den)) {
  unify_tables(num_.table(), den_.table(), "fraction");
  if (den_.is_zero()) throw PreconditionError("fraction with zero denominator");
  simplify();
}

void Fraction::simplify() {
  if (num_.is_zero()) {
    num_ = Scalar(0);
    den_ = Scalar(1);
    return;
  }
  const TablePtr& t = den_.table();
  if (t) {
    // Multiply by conjugates until the denominator is free of ruled symbols.
    for (;;) {
      std::optional<std::size_t> v;
      for (const auto& [e, c] : den_.terms())
        for (std::size_t i = e.size(); i-- > 0;)
          if (e[i] != 0 && t->has_rule(i) && (!v || i > *v)) v = i;
      if (!v) break;
      TermMap p, q; // den = p + v*q with p, q free of v
      for (const auto& [e, c] : den_.terms()) {
        if (e[*v] != 0) {
          ExpVec r = e;
          r[*v] = 0;
          q.emplace(std::move(r), c);
        } else {
          p.emplace(e, c);
        }
      }
      Scalar sp = Scalar::from_raw_terms(t, p);
      Scalar sq = Scalar::from_raw_terms(t, q);
      Scalar conj = sp - Scalar::symbol(t, t->name(*v)) * sq;
      num_ *= conj;
      den_ *= conj;
      if (den_.is_zero())
        throw PreconditionError("denominator became zero while rationalizing (rule set is not a domain)");
    }
  }
  if (auto c = den_.constant_value()) {
    num_ = num_.divided_by(*c);
    den_ = Scalar(1);
    return;
  }
  // Normalize by the denominator's rational content and sign.
  Rational content(0);
  for (const auto& [e, c] : den_.terms()) content = rational_gcd(content, c);
  if (den_.terms().rbegin()->second < 0) content = -content;
  if (content != 0 && content != 1) {
    num_ = num_.divided_by(content);
    den_ = den_.divided_by(content);
  }
  if (num_ == den_) {
    num_ = Scalar(1);
    den_ = Scalar(1);
  } else if (num_ == -den_) {
    num_ = Scalar(-1);
    den_ = Scalar(1);
  }
}

std::optional<Scalar> Fraction::as_scalar() const {
  if (den_ == Scalar(1)) return num_;
  return std::nullopt;
}

std::optional<Rational> Fraction::constant_value() const {
  if (auto s = as_scalar()) return s->constant_value();
  return std::nullopt;
}

Fraction Fraction::operator-() const {
  Fraction r = *this;
  r.num_ = -r.num_;
  return r;
}

Fraction Fraction::inv() const {
  if (num_.is_zero()) throw PreconditionError("inverse of zero");
  Fraction r;
  r.num_ = den_;
  r.den_ = num_;
  r.simplify();
  return r;
}

Fraction& Fraction::operator+=(const Fraction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  simplify();
  return *this;
}

Fraction& Fraction::operator-=(const Fraction& o) { return *this += -o; }

Fraction& Fraction::operator*=(const Fraction& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  simplify();
  return *this;
}

Fraction& Fraction::operator/=(const Fraction& o) { return *this *= o.inv(); }

bool operator==(const Fraction& a, const Fraction& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::optional<int> Fraction::sign() const {
  auto sn = sign_of(num_);
  auto sd = sign_of(den_);
  if (!sn || !sd || *sd == 0) return sn && *sn == 0 ? std::optional<int>(0) : std::nullopt;
  return *sn * *sd;
}

} // namespace acn
