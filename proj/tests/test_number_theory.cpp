#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tnomial/extremal_search.hpp"
#include "tnomial/families.hpp"
#include "tnomial/number_theory.hpp"

using namespace tnomial;

TEST_CASE("swan closed form") {
  CHECK(swan_resultant(2) == 5);
  CHECK(swan_resultant(3) == -23);
  CHECK(swan_resultant(4) == -283);
  CHECK_THROWS_AS(swan_resultant(1), std::invalid_argument);
}

TEST_CASE("sylvester resultant basics") {
  // Res(x - a, x - b) = a - b
  BigPoly f{{-7, 1}};
  BigPoly g{{-3, 1}};
  CHECK(sylvester_resultant(f, g) == 4);  // a = 7, b = 3

  BigPoly f2{{-1, -1, 1}};  // x^2 - x - 1
  BigPoly g2{{-1, 2}};      // 2x - 1
  CHECK(sylvester_resultant(f2, g2) == -5);

  BigPoly h3 = BigPoly::h_trinomial(3);
  CHECK(abs(sylvester_resultant(h3, h3.derivative())) == 23);

  // constant cases
  BigPoly c{{5}};
  BigPoly lin{{1, 2, 3}};
  CHECK(sylvester_resultant(c, lin) == 25);  // 5^deg(g) = 5^2
}

TEST_CASE("swan formula vs sylvester determinant, n = 2..20") {
  for (std::uint64_t n = 2; n <= 20; ++n) {
    BigPoly h = BigPoly::h_trinomial(n);
    BigInt formula = swan_resultant(n);
    BigInt det = sylvester_resultant(h, h.derivative());
    INFO("n=", n);
    CHECK(abs(formula) == abs(det));
  }
  // signs disagree at n = 2 under the standard Sylvester layout
  CHECK(swan_resultant(2) == 5);
  BigPoly h2 = BigPoly::h_trinomial(2);
  CHECK(sylvester_resultant(h2, h2.derivative()) == -5);
}

TEST_CASE("resultant vanishes mod p exactly at repeated roots") {
  for (std::uint64_t n = 2; n <= 8; ++n) {
    for (std::uint64_t p : primes_in(n + 2, 100)) {
      BigInt r = swan_resultant(n);
      bool res_vanishes = mpz_divisible_ui_p(r.get_mpz_t(), static_cast<unsigned long>(p)) != 0;
      auto [count, squarefree] = distinct_root_count_mod_p(make_h(n, p).poly);
      (void)count;
      INFO("n=", n, " p=", p);
      CHECK(res_vanishes == !squarefree);
    }
  }
}

TEST_CASE("least split prime") {
  CHECK(least_split_prime(2, 100) == 11);
  CHECK(least_split_prime(3, 100) == 59);
  CHECK_FALSE(least_split_prime(3, 50).has_value());
  // p = 5 has a double root, p = 7 none: the first success really is 11
  auto [c5, d5] = distinct_root_count_mod_p(make_h(2, 5).poly);
  CHECK(c5 == 1);
  CHECK_FALSE(d5);
  auto [c7, d7] = distinct_root_count_mod_p(make_h(2, 7).poly);
  CHECK(c7 == 0);
}

TEST_CASE("minkowski chain") {
  MinkowskiChain m1 = minkowski_chain(1);
  CHECK(m1.exact == 1);
  CHECK(m1.middle == doctest::Approx(0.923631).epsilon(1e-5));
  CHECK(m1.lower == doctest::Approx(0.920635).epsilon(1e-5));
  CHECK(m1.first_link == Verdict::pass);
  CHECK(m1.second_link == Verdict::pass);

  MinkowskiChain m2 = minkowski_chain(2);
  CHECK(m2.exact == 4);  // 2^4 / (2!)^2

  for (std::uint64_t n = 1; n <= 30; ++n) {
    MinkowskiChain m = minkowski_chain(n);
    INFO("n=", n);
    CHECK(m.first_link == Verdict::pass);
    CHECK(m.second_link == Verdict::pass);
  }
}

TEST_CASE("splitting exponent sum") {
  CHECK(splitting_exponent_sum(1) == 1);
  CHECK(splitting_exponent_sum(2) == 3);
  CHECK(splitting_exponent_sum(5) == 854);
  for (std::uint64_t n = 1; n <= 30; ++n) {
    BigInt s = splitting_exponent_sum(n);
    double bound = 4.31 * std::exp((static_cast<double>(n) - 0.5) * std::log(static_cast<double>(n)));
    INFO("n=", n);
    CHECK(guarded_less(s.get_d(), bound, true) == Verdict::pass);
  }
}

TEST_CASE("guarded comparison") {
  CHECK(guarded_less(1.0, 2.0, true) == Verdict::pass);
  CHECK(guarded_less(2.0, 1.0, true) == Verdict::fail);
  CHECK(guarded_less(1.0, 1.0, true) == Verdict::boundary);
  CHECK(guarded_less(1.0, 1.0 + 1e-15, false) == Verdict::boundary);
  CHECK(guarded_less(1.0, 1.0 + 1e-9, false) == Verdict::pass);
}

TEST_CASE("proof inequality suite") {
  InequalityReport rep = proof_inequalities(30);
  CHECK_FALSE(rep.any_fail);
  REQUIRE(rep.boundary_cases.size() == 1);
  CHECK(rep.boundary_cases[0] == "stirling at n = 1");

  bool saw_tight = false;
  for (const InequalityRow& row : rep.rows) {
    if (row.name == "resultant_magnitude" && row.n == 3) {
      // 31 <= e^{3 ln 3 + 4/27} ~ 31.31: the tight case
      CHECK(row.slack == doctest::Approx(0.31).epsilon(0.2));
      saw_tight = true;
    }
    if (row.name == "stirling" && row.n == 1) {
      CHECK(row.verdict == Verdict::boundary);
    } else {
      CHECK(row.verdict == Verdict::pass);
    }
  }
  CHECK(saw_tight);
  CHECK_THROWS_AS(proof_inequalities(2), std::invalid_argument);
}
