// Coset-structure invariants of root sets in the unit group: delta, the
// exact largest coset contained in a root set, the divisor-based upper bound
// on it, minimum coset covers, and the combined bounds report.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tnomial/sparse_poly.hpp"

namespace tnomial {

// gcd(e_1, ..., e_t, q-1); exponent set of a canonical polynomial (e_1 = 0).
std::uint64_t delta(const std::vector<std::uint64_t>& exponents, std::uint64_t q);

struct Coset {
  std::uint64_t subgroup_order = 1;    // d, with H_d the unique order-d subgroup
  std::uint64_t rep_index = 0;         // least dlog index in the coset
  std::vector<Element> members;        // in dlog-index order
};

// The (q-1)/d cosets of the order-d subgroup H_d = <g^{(q-1)/d}>.
std::vector<Coset> subgroup_cosets(const FieldPtr& field, std::uint64_t d);

// Maximum cardinality of any coset (of any subgroup) contained in Z;
// 0 for an empty root set.
std::uint64_t C_exact(const RootSet& Z);

// max{k : k | q-1 and every exponent is congruent mod k to another one}.
std::uint64_t D_bound(const std::vector<std::uint64_t>& exponents, std::uint64_t q);

enum class CoverMethod { exact, greedy };

struct CosetCover {
  std::size_t size = 0;
  CoverMethod method = CoverMethod::exact;
  std::vector<Coset> cosets;
};

// Minimum-size cover of Z by cosets fully contained in Z (singletons always
// qualify). Exact branch-and-bound for |Z| <= budgets().exact_cover_max,
// greedy largest-remaining-coverage otherwise.
CosetCover min_coset_cover(const RootSet& Z);

struct BoundValue {
  double real = 0;          // double-precision rendering
  std::uint64_t floor = 0;  // exact integer floor
};

struct CosetReport {
  std::uint64_t q = 0;
  std::uint64_t t = 0;
  std::uint64_t delta = 1;
  std::uint64_t C_exact = 0;
  std::uint64_t D_bound = 1;
  std::uint64_t root_count = 0;
  bool includes_zero = false;
  bool strict_convention = true;

  // (t-1)(q-1)/t as a reduced fraction plus rendered/floored values.
  std::uint64_t ks_num = 0, ks_den = 1;
  double ks_real = 0;
  std::uint64_t ks_floor = 0;

  BoundValue bcr;                     // 2((q-1)/delta)^{(t-2)/(t-1)}
  std::optional<std::uint64_t> ko;        // t = 3 only
  std::optional<std::uint64_t> ko_sqrt;   // t = 3, square q, delta = 1 only
  std::optional<BoundValue> kelley;       // absent when Z is empty

  std::size_t cover_size = 0;
  CoverMethod cover_method = CoverMethod::exact;

  std::vector<std::pair<std::string, std::string>> skipped;  // bound -> reason
};

// Evaluates every applicable bound for a canonical t-nomial, t >= 2.
CosetReport bounds_report(const SparsePolynomial& f);

// Exact integer forms of the two fractional-power inequalities.
// R^{t-1} <= 2^{t-1} (q-1)^{t-2} C:
bool kelley_inequality_holds(std::uint64_t R, std::uint64_t t, std::uint64_t q, std::uint64_t C);
// size^{t-1} <= 2^{t-1} ((q-1)/delta)^{t-2}:
bool bcr_cover_inequality_holds(std::uint64_t size, std::uint64_t t, std::uint64_t q,
                                std::uint64_t delta);

}  // namespace tnomial
