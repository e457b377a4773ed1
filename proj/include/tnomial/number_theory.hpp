// Big-integer verification of the splitting-field machinery around
// x^n - x - 1: the closed-form resultant of h_n and h_n', an independent
// Sylvester/Bareiss resultant, the least prime where h_n splits completely,
// and the discriminant inequality chains, all with guarded transcendental
// comparisons.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tnomial {

using BigInt = mpz_class;

// Dense integer polynomial, coefficients ascending, leading nonzero.
struct BigPoly {
  std::vector<BigInt> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  BigPoly derivative() const;
  static BigPoly h_trinomial(std::uint64_t n);  // x^n - x - 1
};

// (-1)^{(n+2)(n-1)/2} (n^n + (-1)^n (n-1)^{n-1}), the printed closed form
// for Res(h_n, h_n').
BigInt swan_resultant(std::uint64_t n);

// Sylvester-matrix determinant via fraction-free Bareiss elimination.
BigInt sylvester_resultant(const BigPoly& f, const BigPoly& g);

// Least prime p in [n+2, p_max] such that x^n - x - 1 has n distinct roots
// in F_p, by direct root counting.
std::optional<std::uint64_t> least_split_prime(std::uint64_t n, std::uint64_t p_max);

// Guarded comparison outcome: values within the relative guard band are
// never silently passed.
enum class Verdict { pass, boundary, fail };

const char* verdict_name(Verdict v);

// Checks "lhs < rhs" (strict) or "lhs <= rhs" with a relative guard band.
Verdict guarded_less(double lhs, double rhs, bool strict, double rel_eps = 1e-12);

// n^{2n}/(n!)^2 >= (pi e^2/4)^n / (2 pi n) > 5.8^n / (6.3 n).
struct MinkowskiChain {
  std::uint64_t n = 0;
  mpq_class exact;     // n^{2n}/(n!)^2
  double middle = 0;   // (pi e^2/4)^n / (2 pi n)
  double lower = 0;    // 5.8^n / (6.3 n)
  Verdict first_link = Verdict::pass;
  Verdict second_link = Verdict::pass;
};

MinkowskiChain minkowski_chain(std::uint64_t n);

// sum_{i=0}^{n-1} i! * n^{n-1-i}, the exponent bounding d_L by a power of d_K.
BigInt splitting_exponent_sum(std::uint64_t n);

struct InequalityRow {
  std::uint64_t n = 0;
  std::string name;
  double lhs = 0, rhs = 0;
  double slack = 0;  // rhs - lhs
  Verdict verdict = Verdict::pass;
};

struct InequalityReport {
  std::vector<InequalityRow> rows;
  bool any_fail = false;
  std::vector<std::string> boundary_cases;
};

// Evaluates, for n up to n_max: the resultant-magnitude bound
// n^n + (n-1)^{n-1} <= e^{n ln n + 4/27} (n >= 3), Stirling's
// n! < e sqrt(n) (n/e)^n (n >= 1, equality at n = 1), the factorial-sum
// bound < 4.31 n^{n-1/2}, and both Minkowski chain links.
InequalityReport proof_inequalities(std::uint64_t n_max);

}  // namespace tnomial
