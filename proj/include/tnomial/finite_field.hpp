// Exact arithmetic in F_p and F_{p^k}: field construction with a
// deterministic modulus, unit-group generator, discrete-log tables, and the
// divisor/factorization helpers the coset machinery needs.
//
// Elements are stored as a packed code in [0, q): the value of the power-basis
// coordinate vector (c_0, ..., c_{k-1}) as sum c_i * p^i. Code order is the
// canonical enumeration order of the field.
#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "tnomial/config.hpp"
#include "tnomial/errors.hpp"

namespace tnomial {

struct Element {
  std::uint64_t code = 0;

  friend bool operator==(Element a, Element b) { return a.code == b.code; }
  friend bool operator!=(Element a, Element b) { return a.code != b.code; }
  friend bool operator<(Element a, Element b) { return a.code < b.code; }
};

// An immutable finite field F_{p^k}. Construction validates primality of p
// and picks the deterministic modulus; the generator and dlog tables are
// computed once on first use and frozen, so shared const access is safe
// across threads.
class Field {
 public:
  static std::shared_ptr<const Field> make(std::uint64_t p, std::uint32_t k);

  std::uint64_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  std::uint64_t q() const { return q_; }
  std::uint64_t unit_count() const { return q_ - 1; }
  bool is_prime_field() const { return k_ == 1; }

  // Monic modulus as coefficients [c_0, ..., c_{k-1}, 1]; empty for k == 1.
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }

  Element zero() const { return Element{0}; }
  Element one() const { return Element{1}; }
  bool is_zero(Element a) const { return a.code == 0; }

  // Embeds an integer via its residue mod p (the prime subfield).
  Element from_int(std::int64_t v) const;

  std::vector<std::uint64_t> coords(Element a) const;
  Element from_coords(const std::vector<std::uint64_t>& c) const;

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  Element inv(Element a) const;  // throws std::domain_error on 0

  // Square-and-multiply; negative exponents invert first. The exponent is
  // reduced mod q-1 for nonzero bases.
  Element pow(Element a, std::int64_t e) const;

  // First element in code order whose multiplicative order is exactly q-1.
  Element unit_generator() const;

  // Prime factorization of q-1 (ascending, distinct primes with exponents).
  const std::vector<std::pair<std::uint64_t, std::uint32_t>>& unit_order_factors() const;

  // Discrete-log tables: unit_from_index(i) = g^i and dlog_index(g^i) = i.
  // Built on demand for q <= budgets().dlog_table_max, else CapabilityError.
  bool dlog_in_budget() const { return q_ <= budgets().dlog_table_max; }
  std::uint64_t dlog_index(Element a) const;
  Element unit_from_index(std::uint64_t i) const;

  // Raw tables for hot loops: exp has q-1 entries (codes), log has q entries
  // (log[code] = index; log[0] is a sentinel).
  const std::vector<std::uint32_t>& exp_table() const;
  const std::vector<std::uint32_t>& log_table() const;

  std::string describe() const;  // "F_49 = F_7^2 (modulus ...)"

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

 private:
  Field(std::uint64_t p, std::uint32_t k);

  void check_element(Element a) const;
  void ensure_generator() const;
  void ensure_dlog() const;

  std::uint64_t p_ = 0;
  std::uint32_t k_ = 1;
  std::uint64_t q_ = 0;
  std::vector<std::uint64_t> modulus_;  // size k+1 when k >= 2

  mutable std::once_flag gen_once_;
  mutable Element generator_;
  mutable std::vector<std::pair<std::uint64_t, std::uint32_t>> order_factors_;

  mutable std::once_flag dlog_once_;
  mutable std::vector<std::uint32_t> exp_;
  mutable std::vector<std::uint32_t> log_;
};

using FieldPtr = std::shared_ptr<const Field>;

// Deterministic 64-bit Miller-Rabin.
bool is_prime(std::uint64_t n);

// Trial-division factorization, (prime, exponent) pairs ascending.
std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n);

// All divisors of n, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

}  // namespace tnomial
