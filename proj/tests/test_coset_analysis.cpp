#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "tnomial/coset_analysis.hpp"
#include "tnomial/families.hpp"

using namespace tnomial;

namespace {

std::set<std::uint64_t> coset_codes(const Coset& c) {
  std::set<std::uint64_t> s;
  for (Element e : c.members) s.insert(e.code);
  return s;
}

// Test-only oracle: smallest number of contained cosets covering Z, by
// depth-first search over candidate subsets (candidates rebuilt from
// subgroup_cosets, not from the cover code under test).
std::size_t oracle_min_cover(const FieldPtr& F, const RootSet& Z) {
  std::set<std::uint64_t> zset;
  for (Element r : Z.roots) zset.insert(r.code);
  std::vector<std::set<std::uint64_t>> cands;
  for (std::uint64_t d : divisors(F->unit_count())) {
    for (const Coset& c : subgroup_cosets(F, d)) {
      std::set<std::uint64_t> cs = coset_codes(c);
      if (std::includes(zset.begin(), zset.end(), cs.begin(), cs.end())) cands.push_back(cs);
    }
  }
  std::size_t best = Z.roots.size();  // singletons always work
  std::function<void(std::set<std::uint64_t>, std::size_t, std::size_t)> dfs =
      [&](std::set<std::uint64_t> uncovered, std::size_t used, std::size_t start) {
        if (uncovered.empty()) {
          best = std::min(best, used);
          return;
        }
        if (used + 1 >= best) return;
        std::uint64_t pivot = *uncovered.begin();
        for (std::size_t i = start; i < cands.size(); ++i) {
          if (!cands[i].count(pivot)) continue;
          std::set<std::uint64_t> rest;
          std::set_difference(uncovered.begin(), uncovered.end(), cands[i].begin(),
                              cands[i].end(), std::inserter(rest, rest.begin()));
          dfs(std::move(rest), used + 1, 0);
        }
      };
  dfs(zset, 0, 0);
  return best;
}

}  // namespace

TEST_CASE("delta") {
  CHECK(delta({0, 1, 3}, 8) == 1);
  CHECK(delta({0, 2, 4}, 7) == 2);
  CHECK(delta({0, 1, 34}, 173) == 1);
  CHECK(delta({0, 4, 8}, 13) == 4);
}

TEST_CASE("subgroup cosets of F_7") {
  auto F = Field::make(7, 1);
  auto cs = subgroup_cosets(F, 2);
  REQUIRE(cs.size() == 3);
  std::vector<std::set<std::uint64_t>> sets;
  for (const Coset& c : cs) sets.push_back(coset_codes(c));
  CHECK(std::count(sets.begin(), sets.end(), std::set<std::uint64_t>{1, 6}) == 1);
  CHECK(std::count(sets.begin(), sets.end(), std::set<std::uint64_t>{2, 5}) == 1);
  CHECK(std::count(sets.begin(), sets.end(), std::set<std::uint64_t>{3, 4}) == 1);
  // representative of {2,5} is the element of least dlog index, namely 2
  for (const Coset& c : cs) {
    if (coset_codes(c) == std::set<std::uint64_t>{2, 5}) {
      CHECK(F->unit_from_index(c.rep_index) == Element{2});
    }
  }

  auto f5 = Field::make(5, 1);
  CHECK(subgroup_cosets(f5, 4).size() == 1);
  CHECK(subgroup_cosets(f5, 1).size() == 4);
  CHECK_THROWS_AS(subgroup_cosets(f5, 3), std::invalid_argument);
}

TEST_CASE("C_exact") {
  auto f7 = Field::make(7, 1);
  RootSet all_units = roots_in_units(parse_polynomial(f7, "x^6 - 1"));
  CHECK(C_exact(all_units) == 6);

  RootSet Z = roots_in_units(parse_polynomial(f7, "1 + x^2 + x^4"));
  std::vector<Element> expect{Element{2}, Element{3}, Element{4}, Element{5}};
  CHECK(Z.roots == expect);
  CHECK(C_exact(Z) == 2);

  auto f9 = Field::make(3, 2);
  RootSet r_roots = roots_in_units(parse_polynomial(f9, "1 + x + x^3"));
  CHECK(r_roots.count() == 3);
  CHECK(C_exact(r_roots) == 1);

  CHECK(C_exact(RootSet{f7, {}, false}) == 0);
}

TEST_CASE("D_bound") {
  CHECK(D_bound({0, 1, 3}, 8) == 1);     // g_{3,1,2} exponents
  CHECK(D_bound({0, 1, 4}, 27) == 1);    // g_{3,1,3}
  CHECK(D_bound({0, 1, 10}, 11) == 1);   // h_{10,11} exponents {0,1,n}
  CHECK(D_bound({0, 2, 4}, 7) == 2);
  CHECK(D_bound({0, 4}, 13) == 4);       // binomial: D = gcd(e, q-1)
  CHECK_THROWS_AS(D_bound({0}, 7), std::invalid_argument);
}

TEST_CASE("min coset cover: known instances") {
  auto f7 = Field::make(7, 1);
  RootSet Z = roots_in_units(parse_polynomial(f7, "1 + x^2 + x^4"));
  CosetCover cover = min_coset_cover(Z);
  CHECK(cover.method == CoverMethod::exact);
  CHECK(cover.size == 2);

  // a single full coset: roots of 1 + x^3 over F_7
  RootSet one = roots_in_units(parse_polynomial(f7, "1 + x^3"));
  CHECK(one.count() == 3);
  CHECK(min_coset_cover(one).size == 1);

  // C = 1 forces singletons
  auto f9 = Field::make(3, 2);
  RootSet r_roots = roots_in_units(parse_polynomial(f9, "1 + x + x^3"));
  CosetCover singles = min_coset_cover(r_roots);
  CHECK(singles.size == 3);
  for (const Coset& c : singles.cosets) CHECK(c.subgroup_order == 1);
}

TEST_CASE("cyclotomic quotient (13,4): exact cover beats the t-1 decomposition") {
  // The root set is the complement of the order-3 subgroup; one coset of the
  // order-6 subgroup plus one coset of the order-3 subgroup covers it, so the
  // minimum is 2 even though the defining decomposition uses t-1 = 3 cosets.
  FamilyInstance cyc = make_cyclotomic_quotient(13, 4);
  RootSet Z = roots_in_units(cyc.poly);
  CHECK(Z.count() == 9);
  CosetCover cover = min_coset_cover(Z);
  CHECK(cover.method == CoverMethod::exact);
  CHECK(cover.size == 2);
  CHECK(oracle_min_cover(cyc.field, Z) == 2);
}

TEST_CASE("min coset cover matches the brute oracle on random root sets") {
  std::mt19937_64 rng(424242);
  std::vector<FieldPtr> fields{Field::make(13, 1), Field::make(31, 1), Field::make(2, 4),
                               Field::make(3, 3), Field::make(43, 1)};
  for (const FieldPtr& F : fields) {
    std::uniform_int_distribution<std::uint64_t> dist(1, F->q() - 1);
    for (int trial = 0; trial < 30; ++trial) {
      std::set<std::uint64_t> codes;
      std::size_t want = 1 + rng() % 9;
      while (codes.size() < want) codes.insert(dist(rng));
      std::vector<Element> roots;
      for (std::uint64_t c : codes) roots.push_back(Element{c});
      RootSet Z{F, roots, false};
      CosetCover cover = min_coset_cover(Z);
      CHECK(cover.method == CoverMethod::exact);
      CHECK(cover.size == oracle_min_cover(F, Z));
      // the emitted cosets really cover Z and lie inside it
      std::set<std::uint64_t> covered;
      for (const Coset& c : cover.cosets) {
        for (Element e : c.members) {
          CHECK(codes.count(e.code));
          covered.insert(e.code);
        }
      }
      CHECK(covered == codes);
    }
  }
}

TEST_CASE("C_exact is invariant under unit translation") {
  std::mt19937_64 rng(99);
  auto F = Field::make(31, 1);
  std::uniform_int_distribution<std::uint64_t> dist(1, 30);
  for (int trial = 0; trial < 50; ++trial) {
    std::set<std::uint64_t> codes;
    while (codes.size() < 6) codes.insert(dist(rng));
    std::vector<Element> roots;
    for (std::uint64_t c : codes) roots.push_back(Element{c});
    RootSet Z{F, roots, false};

    Element u{dist(rng)};
    std::vector<Element> translated;
    for (Element r : Z.roots) translated.push_back(F->mul(u, r));
    std::sort(translated.begin(), translated.end());
    RootSet uZ{F, translated, false};
    CHECK(C_exact(Z) == C_exact(uZ));
  }
}

TEST_CASE("bounds_report") {
  auto f47 = Field::make(47, 1);
  CosetReport rep = bounds_report(canonicalize(parse_polynomial(f47, "1 + 4x - 5x^8")));
  CHECK(rep.root_count == 5);
  CHECK(rep.delta == 1);
  REQUIRE(rep.ko.has_value());
  CHECK(*rep.ko == 7);  // floor(1/2 + sqrt(46)) = 7
  CHECK_FALSE(rep.ko_sqrt.has_value());
  CHECK(rep.strict_convention);

  auto f9 = Field::make(3, 2);
  CosetReport rep9 = bounds_report(parse_polynomial(f9, "1 + x + x^3"));
  CHECK(rep9.root_count == 3);
  REQUIRE(rep9.ko_sqrt.has_value());
  CHECK(*rep9.ko_sqrt == 3);  // attained
  CHECK(rep9.root_count == *rep9.ko_sqrt);

  auto f5 = Field::make(5, 1);
  CosetReport rep5 = bounds_report(parse_polynomial(f5, "1 + x"));
  CHECK(rep5.ks_num == 2);
  CHECK(rep5.ks_den == 1);
  CHECK(rep5.ks_floor == 2);
  CHECK(rep5.t == 2);
  CHECK(rep5.bcr.floor == 2);  // 2 * anything^0

  CHECK_THROWS_AS(bounds_report(parse_polynomial(f5, "3")), std::invalid_argument);
  CHECK_THROWS_AS(bounds_report(parse_polynomial(f5, "x + x^2")), std::invalid_argument);

  // no roots: kelley skipped, C = 0 recorded
  CosetReport norep = bounds_report(parse_polynomial(f5, "1 + x^4"));  // x^4 = 1 on units
  CHECK(norep.root_count == 0);
  CHECK(norep.C_exact == 0);
  CHECK_FALSE(norep.kelley.has_value());
}

TEST_CASE("exact inequality helpers") {
  CHECK(kelley_inequality_holds(5, 3, 47, 1));        // 25 <= 4*46
  CHECK_FALSE(kelley_inequality_holds(20, 3, 47, 1)); // 400 > 184
  CHECK(bcr_cover_inequality_holds(2, 3, 7, 2));      // 4 <= 4*3
  CHECK(bcr_cover_inequality_holds(2, 2, 1000, 1));   // t = 2: 2 <= 2
  CHECK_FALSE(bcr_cover_inequality_holds(3, 2, 1000, 1));
}

TEST_CASE("randomized: C <= D and cover consistency") {
  std::mt19937_64 rng(31337);
  std::vector<FieldPtr> fields{Field::make(61, 1), Field::make(2, 6), Field::make(5, 2),
                               Field::make(97, 1)};
  for (const FieldPtr& F : fields) {
    const std::uint64_t q = F->q();
    std::uniform_int_distribution<std::uint64_t> edist(1, q - 2);
    std::uniform_int_distribution<std::uint64_t> cdist(1, q - 1);
    for (int trial = 0; trial < 60; ++trial) {
      std::size_t t = 2 + rng() % 4;
      std::vector<Term> terms{Term{0, Element{cdist(rng)}}};
      std::set<std::uint64_t> used{0};
      while (terms.size() < t) {
        std::uint64_t e = edist(rng);
        if (used.insert(e).second) terms.push_back(Term{e, Element{cdist(rng)}});
      }
      SparsePolynomial f(F, terms);
      RootSet Z = roots_in_units(f);
      std::uint64_t C = C_exact(Z);
      std::uint64_t D = D_bound(f.exponents(), q);
      CHECK(C <= D);
      if (!Z.roots.empty() && Z.roots.size() <= 20) {
        CosetCover cover = min_coset_cover(Z);
        std::uint64_t dd = delta(f.exponents(), q);
        CHECK(bcr_cover_inequality_holds(cover.size, f.term_count(), q, dd));
      }
    }
  }
}
