// Constructors and verifiers for the explicit extremal families: the
// Frobenius-power family r_{t,u,p} over F_{p^{(t-1)u}}, the trace-kernel
// family g_{t,u,p} over F_{p^{tu}}, the integer trinomial x^n - x - 1 reduced
// mod p, and the cyclotomic quotient (x^{q-1}-1)/(x^{(q-1)/t}-1).
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tnomial/coset_analysis.hpp"
#include "tnomial/sparse_poly.hpp"

namespace tnomial {

enum class FamilyKind { r, g, h, cyclotomic };

const char* family_kind_name(FamilyKind k);

struct FamilyInstance {
  FamilyKind kind;
  std::uint64_t t = 0, u = 0, p = 0, n = 0;  // parameters as applicable
  FieldPtr field;
  SparsePolynomial poly;
  std::optional<std::uint64_t> expected_count;  // closed-form root count
};

// 1 + x + x^{p^u} + ... + x^{p^{(t-2)u}} over F_{p^{(t-1)u}}; the t = 2 case
// degenerates to the binomial 1 + x.
FamilyInstance make_r(std::uint64_t t, std::uint64_t u, std::uint64_t p);

// 1 + x + x^{1+p^u} + ... + x^{1+p^u+...+p^{(t-2)u}} over F_{p^{tu}}.
FamilyInstance make_g(std::uint64_t t, std::uint64_t u, std::uint64_t p);

// x^n - x - 1 over F_p, requiring p >= n + 2.
FamilyInstance make_h(std::uint64_t n, std::uint64_t p);

// (x^{q-1}-1)/(x^{(q-1)/t}-1) = 1 + x^{(q-1)/t} + ... over F_q, t | q-1.
FamilyInstance make_cyclotomic_quotient(std::uint64_t q, std::uint64_t t);

// The explicit roots of g_{t,u,p}: images a^{p^u - 1} of the nonzero elements
// whose trace to F_{p^u} vanishes. Asserts the kernel size and that every
// image really is a root.
RootSet trace_zero_roots(std::uint64_t t, std::uint64_t u, std::uint64_t p);

struct FamilyVerification {
  FamilyKind kind;
  std::uint64_t t = 0, u = 0, p = 0, n = 0, q = 0;
  std::string polynomial;
  std::uint64_t observed_count = 0;
  std::optional<std::uint64_t> expected_count;
  std::uint64_t delta = 0, C = 0, D = 0;
  std::size_t cover_size = 0;
  CoverMethod cover_method = CoverMethod::exact;
  bool trace_roots_match = false;  // g only
  bool pass = false;
  std::vector<std::string> failures;
};

// Enumerates the roots and checks the closed-form count and the claimed
// delta / C / D values for the instance's kind.
FamilyVerification verify_family(const FamilyInstance& inst);

// Divisibility witness for the r-family: x^q == x in F_p[x]/<r_{t,u,p}>,
// checked by dense modular exponentiation. Gated by
// budgets().frobenius_deg_max on the quotient degree.
bool frobenius_divisibility_witness(std::uint64_t t, std::uint64_t u, std::uint64_t p);

}  // namespace tnomial
