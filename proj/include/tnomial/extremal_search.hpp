// Symmetry-reduced exhaustive search over prime fields for trinomials
// gamma + x^{e2} + x^{e3} with gcd(e2, e3, p-1) = 1 and many roots, the
// full-coefficient-space brute oracle, and the JSON-lines search log used
// for checkpoint/resume.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tnomial {

// Exponent range convention: strict keeps e3 <= p-2 (degree < p-1); extended
// allows e3 = p-1, which the smallest primes need.
enum class Convention { strict, extended };

const char* convention_name(Convention c);
std::optional<Convention> convention_from_name(const std::string& name);

struct Witness {
  std::uint64_t gamma = 0, e2 = 0, e3 = 0;
};

std::string witness_text(const Witness& w);  // "3+x+x^2"

struct ExtremalRecord {
  std::uint64_t p = 0;
  Convention convention = Convention::strict;
  std::vector<std::uint32_t> achieved;  // sorted distinct root counts over all gamma
  std::uint32_t max_count = 0;
  std::optional<Witness> witness;  // lexicographically least (e2, e3, gamma) attaining max
  // Least witness per achieved count, sorted by count; the p_n table needs a
  // witness for n even when the prime's maximum is larger.
  std::vector<std::pair<std::uint32_t, Witness>> count_witnesses;
  std::uint64_t orbits_searched = 0;
  double wall_s = 0;

  bool achieves(std::uint32_t n) const;
  std::optional<Witness> witness_for(std::uint32_t n) const;
};

// One-pass value-histogram search over orbit representatives of admissible
// exponent pairs. The emitted witness is re-verified by direct evaluation.
ExtremalRecord max_roots_for_prime(std::uint64_t p, Convention conv, unsigned workers = 1);

struct BruteResult {
  std::vector<std::uint32_t> achieved;
  std::uint32_t max_count = 0;
};

// Exhaustive search over ALL trinomials c1 + c2 x^{e2} + c3 x^{e3} with
// nonzero coefficients and gcd(e2, e3, p-1) = 1 (c3 scaled to 1, which
// preserves root sets). Gated to small p; the independent check that the
// normalized family reaches the same counts.
BruteResult brute_oracle_max(std::uint64_t p, Convention conv);

// Append-only JSON-lines log keyed by (p, convention); re-runs skip primes
// already present. An empty path keeps the log in memory only.
class SearchLog {
 public:
  explicit SearchLog(std::string path);

  const ExtremalRecord* find(std::uint64_t p, Convention c) const;
  void append(const ExtremalRecord& rec);
  std::size_t size() const { return entries_.size(); }
  const std::map<std::pair<std::uint64_t, int>, ExtremalRecord>& entries() const {
    return entries_;
  }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::map<std::pair<std::uint64_t, int>, ExtremalRecord> entries_;
};

using ProgressFn = std::function<void(const ExtremalRecord&, bool /*from_log*/)>;

// Processes every prime in [pmin, pmax] in ascending order, consulting and
// extending the log; returns the records in prime order.
std::vector<ExtremalRecord> search_range(std::uint64_t pmin, std::uint64_t pmax, Convention conv,
                                         unsigned workers, SearchLog* log,
                                         const ProgressFn& progress = {});

// Least prime p <= p_max whose achieved set contains n.
std::optional<std::uint64_t> least_prime_with_exactly_n(std::uint32_t n, std::uint64_t p_max,
                                                        Convention conv, SearchLog* log,
                                                        unsigned workers = 1);

// Primes in [lo, hi], ascending (simple sieve).
std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi);

}  // namespace tnomial
