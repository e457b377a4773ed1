// Sparse univariate polynomials (t-nomials) over a finite field:
// canonicalization, evaluation, exhaustive root enumeration over the unit
// group, and distinct-root counting mod p.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tnomial/finite_field.hpp"

namespace tnomial {

struct Term {
  std::uint64_t exponent = 0;
  Element coeff;
};

// Terms are kept sorted strictly ascending by exponent with nonzero
// coefficients; the constructor sorts, merges duplicates and drops zero
// terms, and rejects the zero polynomial and exponents above q-1.
class SparsePolynomial {
 public:
  SparsePolynomial(FieldPtr field, std::vector<Term> terms);

  const FieldPtr& field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  std::uint64_t degree() const { return terms_.back().exponent; }
  std::uint64_t lowest_exponent() const { return terms_.front().exponent; }
  std::vector<std::uint64_t> exponents() const;

  bool is_canonical() const { return lowest_exponent() == 0; }
  // Degree < q-1, the hypothesis of the root-count bounds.
  bool strict_convention() const { return degree() < field_->q() - 1; }

  // True when 0 was a root of the pre-canonicalization polynomial.
  bool zero_root_recorded() const { return zero_root_recorded_; }

 private:
  friend SparsePolynomial canonicalize(const SparsePolynomial& f);

  FieldPtr field_;
  std::vector<Term> terms_;
  bool zero_root_recorded_ = false;
};

struct RootSet {
  FieldPtr field;
  std::vector<Element> roots;  // nonzero, sorted by code
  bool includes_zero = false;  // 0 was a root of the original polynomial

  std::size_t count() const { return roots.size(); }
};

// Convenience constructor from (exponent, integer coefficient) pairs; the
// integers embed via the prime subfield.
SparsePolynomial make_polynomial(FieldPtr field,
                                 const std::vector<std::pair<std::uint64_t, std::int64_t>>& terms);

// Divides out x^{e_1} so the lowest exponent becomes 0 and records whether a
// zero root was removed. Roots in the unit group are unchanged.
SparsePolynomial canonicalize(const SparsePolynomial& f);

Element evaluate(const SparsePolynomial& f, Element a);

// Exact enumeration of all roots in the unit group. Uses dlog-table batch
// powering when the table is in budget, per-point square-and-multiply
// otherwise; enumeration itself is capped by the prime/extension budgets.
RootSet roots_in_units(const SparsePolynomial& f);

// Over a prime field: number of distinct roots in all of F_p, plus whether
// the polynomial is squarefree (gcd(f, f') constant). When deg f >= p the
// gcd runs on f mod (x^p - x); that dense path is gated by
// budgets().dense_gcd_p_max.
std::pair<std::uint64_t, bool> distinct_root_count_mod_p(const SparsePolynomial& f);

// Parses "c1*x^e1 + c2*x^e2 + ...": integer coefficients (reduced mod p),
// '*' optional, bare "x" meaning x^1, constants allowed. Throws ParseError
// with the offending position.
SparsePolynomial parse_polynomial(FieldPtr field, std::string_view text);

std::string to_string(const SparsePolynomial& f);

}  // namespace tnomial
