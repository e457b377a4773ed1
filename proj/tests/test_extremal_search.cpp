#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <random>

#include "tnomial/extremal_search.hpp"
#include "tnomial/finite_field.hpp"

using namespace tnomial;

namespace {

std::uint64_t powp(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

// gamma-histogram of the pair (a, b) over F_p by direct evaluation.
std::map<std::uint64_t, std::uint32_t> direct_histogram(std::uint64_t p, std::uint64_t a,
                                                        std::uint64_t b) {
  std::map<std::uint64_t, std::uint32_t> h;
  for (std::uint64_t x = 1; x < p; ++x) {
    std::uint64_t s = (powp(x, a, p) + powp(x, b, p)) % p;
    std::uint64_t gamma = s == 0 ? 0 : p - s;
    if (gamma) ++h[gamma];
  }
  return h;
}

}  // namespace

TEST_CASE("smallest primes") {
  ExtremalRecord p3e = max_roots_for_prime(3, Convention::extended);
  CHECK(p3e.max_count == 1);
  REQUIRE(p3e.witness.has_value());
  CHECK(witness_text(*p3e.witness) == "1+x+x^2");

  ExtremalRecord p3s = max_roots_for_prime(3, Convention::strict);
  CHECK(p3s.achieved.empty());  // no admissible pair with e3 <= p-2 = 1
  CHECK(p3s.max_count == 0);

  ExtremalRecord p5 = max_roots_for_prime(5, Convention::strict);
  CHECK(p5.achieves(2));
  CHECK(p5.max_count == 2);
  REQUIRE(p5.witness.has_value());
  CHECK(witness_text(*p5.witness) == "3+x+x^2");

  ExtremalRecord p2 = max_roots_for_prime(2, Convention::strict);
  CHECK(p2.achieved.empty());

  ExtremalRecord p11 = max_roots_for_prime(11, Convention::strict);
  CHECK(p11.max_count == 3);
  ExtremalRecord p7 = max_roots_for_prime(7, Convention::strict);
  CHECK(p7.max_count == 2);
}

TEST_CASE("oracle equivalence on small primes") {
  for (std::uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull}) {
    for (Convention conv : {Convention::strict, Convention::extended}) {
      ExtremalRecord rec = max_roots_for_prime(p, conv);
      BruteResult brute = brute_oracle_max(p, conv);
      INFO("p=", p, " conv=", convention_name(conv));
      CHECK(rec.achieved == brute.achieved);
      CHECK(rec.max_count == brute.max_count);
    }
  }
}

TEST_CASE("orbit soundness: gamma-histograms agree across an orbit") {
  std::mt19937_64 rng(2024);
  for (std::uint64_t p : {13ull, 61ull, 127ull, 199ull}) {
    const std::uint64_t M = p - 1;
    for (int trial = 0; trial < 20; ++trial) {
      std::uint64_t a = 1 + rng() % (M - 1), b = 1 + rng() % (M - 1);
      if (a == b) continue;
      if (std::gcd(a, std::gcd(b, M)) != 1) continue;
      std::uint64_t m;
      do {
        m = 1 + rng() % (M - 1);
      } while (std::gcd(m, M) != 1);
      std::uint64_t ia = m * a % M, ib = m * b % M;
      if (ia == 0) ia = M;
      if (ib == 0) ib = M;

      auto h1 = direct_histogram(p, a, b);
      auto h2 = direct_histogram(p, ia, ib);
      // multiset comparison of the counts
      std::vector<std::uint32_t> v1, v2;
      for (auto& [g, c] : h1) v1.push_back(c);
      for (auto& [g, c] : h2) v2.push_back(c);
      std::sort(v1.begin(), v1.end());
      std::sort(v2.begin(), v2.end());
      CHECK(v1 == v2);
    }
  }
}

TEST_CASE("witness validity for primes up to 100") {
  for (std::uint64_t p : primes_in(3, 100)) {
    ExtremalRecord rec = max_roots_for_prime(p, Convention::strict);
    for (const auto& [count, w] : rec.count_witnesses) {
      INFO("p=", p, " count=", count);
      CHECK(w.gamma != 0);
      CHECK(w.gamma < p);
      CHECK(std::gcd(w.e2, std::gcd(w.e3, p - 1)) == 1);
      std::uint32_t direct = 0;
      for (std::uint64_t x = 1; x < p; ++x) {
        if ((w.gamma + powp(x, w.e2, p) + powp(x, w.e3, p)) % p == 0) ++direct;
      }
      CHECK(direct == count);
    }
  }
}

TEST_CASE("least prime with exactly n roots") {
  CHECK(least_prime_with_exactly_n(1, 30, Convention::extended, nullptr) == 3);
  CHECK(least_prime_with_exactly_n(1, 30, Convention::strict, nullptr) == 5);
  CHECK(least_prime_with_exactly_n(2, 30, Convention::strict, nullptr) == 5);
  CHECK(least_prime_with_exactly_n(3, 30, Convention::strict, nullptr) == 11);
  CHECK(least_prime_with_exactly_n(4, 30, Convention::strict, nullptr) == 23);
  CHECK(least_prime_with_exactly_n(4, 30, Convention::extended, nullptr) == 23);
  CHECK_FALSE(least_prime_with_exactly_n(9, 100, Convention::strict, nullptr).has_value());
}

TEST_CASE("worker count does not change the record") {
  // p large enough that the worker pool actually spawns
  ExtremalRecord serial = max_roots_for_prime(641, Convention::strict, 1);
  ExtremalRecord parallel = max_roots_for_prime(641, Convention::strict, 3);
  CHECK(serial.achieved == parallel.achieved);
  CHECK(serial.max_count == parallel.max_count);
  CHECK(serial.orbits_searched == parallel.orbits_searched);
  REQUIRE(serial.witness.has_value());
  REQUIRE(parallel.witness.has_value());
  CHECK(serial.witness->gamma == parallel.witness->gamma);
  CHECK(serial.witness->e2 == parallel.witness->e2);
  CHECK(serial.witness->e3 == parallel.witness->e3);
  CHECK(serial.count_witnesses.size() == parallel.count_witnesses.size());
}

TEST_CASE("search log: resume and idempotence") {
  std::string path = "test_search_log.jsonl";
  std::remove(path.c_str());
  {
    SearchLog log(path);
    auto recs = search_range(3, 50, Convention::strict, 1, &log);
    std::vector<std::uint64_t> ps;
    for (const auto& r : recs) ps.push_back(r.p);
    CHECK(ps == std::vector<std::uint64_t>{3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47});
  }
  {
    // second run recomputes nothing
    SearchLog log(path);
    std::size_t computed = 0;
    search_range(3, 50, Convention::strict, 1, &log,
                 [&](const ExtremalRecord&, bool from_log) { computed += !from_log; });
    CHECK(computed == 0);
  }
  {
    // a truncated trailing line is tolerated and recomputed
    std::ofstream out(path, std::ios::app);
    out << "{\"p\": 53, \"conven";
  }
  {
    SearchLog log(path);
    CHECK(log.find(53, Convention::strict) == nullptr);
    CHECK(log.find(47, Convention::strict) != nullptr);
    std::size_t computed = 0;
    search_range(3, 53, Convention::strict, 1, &log,
                 [&](const ExtremalRecord&, bool from_log) { computed += !from_log; });
    CHECK(computed == 1);  // just 53
  }
  std::remove(path.c_str());
}

TEST_CASE("record json round trip preserves count witnesses") {
  std::string path = "test_roundtrip_log.jsonl";
  std::remove(path.c_str());
  ExtremalRecord rec = max_roots_for_prime(23, Convention::strict);
  {
    SearchLog log(path);
    log.append(rec);
  }
  SearchLog log(path);
  const ExtremalRecord* back = log.find(23, Convention::strict);
  REQUIRE(back != nullptr);
  CHECK(back->achieved == rec.achieved);
  CHECK(back->max_count == rec.max_count);
  CHECK(back->count_witnesses.size() == rec.count_witnesses.size());
  for (std::size_t i = 0; i < rec.count_witnesses.size(); ++i) {
    CHECK(back->count_witnesses[i].first == rec.count_witnesses[i].first);
    CHECK(back->count_witnesses[i].second.gamma == rec.count_witnesses[i].second.gamma);
  }
  std::remove(path.c_str());
}

TEST_CASE("search budget") {
  std::uint64_t saved = budgets().search_p_max;
  budgets().search_p_max = 100;
  CHECK_THROWS_AS(max_roots_for_prime(101, Convention::strict), CapabilityError);
  budgets().search_p_max = saved;
}

TEST_CASE("brute oracle gate") {
  CHECK_THROWS_AS(brute_oracle_max(61, Convention::strict), CapabilityError);
  CHECK_THROWS_AS(brute_oracle_max(4, Convention::strict), std::invalid_argument);
}
