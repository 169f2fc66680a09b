#pragma once

#include "acn/expr.hpp"
#include "acn/scalar.hpp"

#include <random>
#include <vector>

namespace acn::testing {

/// Symbols and rules used throughout: a, m free; s = sqrt(3); t2^2 = 1 - t0^2.
inline TablePtr standard_table() {
  auto t = SymbolTable::create({"a", "m", "s", "t0", "t2"});
  t->add_square_rule("s", Scalar(3));
  t->add_square_rule("t2", Scalar(1) - Scalar::symbol(t, "t0").pow(2));
  return t;
}

/// a, b free; k^2 = a^2 - b^2.
inline TablePtr symbolic_k_table() {
  auto t = SymbolTable::create({"a", "b", "k"});
  t->add_square_rule("k", Scalar::symbol(t, "a").pow(2) - Scalar::symbol(t, "b").pow(2));
  return t;
}

inline Rational random_rational(std::mt19937& rng, int span = 6) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, 4);
  return Rational(num(rng), den(rng));
}

inline Scalar random_scalar(std::mt19937& rng, const TablePtr& table, int max_terms = 4,
                            unsigned max_exp = 3) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<unsigned> exp_dist(1, max_exp);
  std::uniform_int_distribution<int> sparse(0, 3);
  TermMap terms;
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    ExpVec e(table->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (sparse(rng) == 0) e[i] = exp_dist(rng);
    Rational c = random_rational(rng);
    if (c != 0) terms[e] += c;
  }
  return Scalar::from_raw_terms(table, terms);
}

inline Scalar sym(const TablePtr& t, std::string_view name) { return Scalar::symbol(t, name); }

} // namespace acn::testing
