// Process-wide resource budgets. Operations that enumerate a field or build
// lookup tables check these and raise CapabilityError when exceeded.
#pragma once

#include <cstddef>
#include <cstdint>

namespace tnomial {

struct Budgets {
  std::uint64_t dlog_table_max = 1ull << 24;  // largest q for exp/log tables
  std::uint64_t prime_enum_max = 10'000'000;  // root enumeration cap, prime fields
  std::uint64_t ext_enum_max = 1'000'000;     // root enumeration cap, extension fields
  std::uint64_t search_p_max = 10'000;        // extremal search default prime cap
  std::uint64_t brute_p_max = 60;             // full-coefficient-space oracle cap
  std::size_t exact_cover_max = 64;           // |Z| cap for exact minimum coset cover
  std::uint64_t frobenius_deg_max = 4096;     // quotient-ring witness degree cap
  std::uint64_t dense_gcd_p_max = 100'000;    // dense squarefree gcd degree cap
};

// Mutable process-wide defaults; the CLI adjusts these from flags before
// dispatching a command.
Budgets& budgets();

}  // namespace tnomial
