#include "tnomial/number_theory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tnomial/extremal_search.hpp"
#include "tnomial/families.hpp"
#include "tnomial/sparse_poly.hpp"

namespace tnomial {

namespace {

BigInt upow(std::uint64_t base, std::uint64_t e) {
  BigInt b = static_cast<unsigned long>(base);
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

BigInt factorial(std::uint64_t n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

}  // namespace

BigPoly BigPoly::derivative() const {
  BigPoly d;
  if (coeffs.size() <= 1) {
    return d;
  }
  d.coeffs.resize(coeffs.size() - 1);
  for (std::size_t i = 1; i < coeffs.size(); ++i) {
    d.coeffs[i - 1] = coeffs[i] * static_cast<unsigned long>(i);
  }
  while (!d.coeffs.empty() && d.coeffs.back() == 0) d.coeffs.pop_back();
  return d;
}

BigPoly BigPoly::h_trinomial(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("h_n needs n >= 2");
  BigPoly h;
  h.coeffs.assign(n + 1, 0);
  h.coeffs[0] = -1;
  h.coeffs[1] = -1;
  h.coeffs[n] = 1;
  return h;
}

BigInt swan_resultant(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("swan_resultant needs n >= 2");
  BigInt value = upow(n, n);
  BigInt second = upow(n - 1, n - 1);
  if (n % 2 == 0) {
    value += second;
  } else {
    value -= second;
  }
  // sign (-1)^{(n+2)(n-1)/2}
  std::uint64_t exponent = (n + 2) * (n - 1) / 2;
  return exponent % 2 == 0 ? value : -value;
}

BigInt sylvester_resultant(const BigPoly& f, const BigPoly& g) {
  const int m = f.degree(), n = g.degree();
  if (m < 0 || n < 0) throw std::invalid_argument("resultant of zero polynomial");
  if (m == 0 && n == 0) return 1;
  if (m == 0) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), f.coeffs[0].get_mpz_t(), static_cast<unsigned long>(n));
    return r;
  }
  if (n == 0) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), g.coeffs[0].get_mpz_t(), static_cast<unsigned long>(m));
    return r;
  }

  const int N = m + n;
  std::vector<std::vector<BigInt>> M(N, std::vector<BigInt>(N, 0));
  for (int row = 0; row < n; ++row) {
    for (int j = 0; j <= m; ++j) M[row][row + j] = f.coeffs[m - j];
  }
  for (int row = 0; row < m; ++row) {
    for (int j = 0; j <= n; ++j) M[n + row][row + j] = g.coeffs[n - j];
  }

  // Bareiss fraction-free elimination: every division is exact.
  int sign = 1;
  BigInt prev = 1;
  for (int k = 0; k < N - 1; ++k) {
    if (M[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < N; ++i) {
        if (M[i][k] != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return 0;
      std::swap(M[k], M[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < N; ++i) {
      for (int j = k + 1; j < N; ++j) {
        M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
      }
      M[i][k] = 0;
    }
    prev = M[k][k];
  }
  return sign == 1 ? M[N - 1][N - 1] : -M[N - 1][N - 1];
}

std::optional<std::uint64_t> least_split_prime(std::uint64_t n, std::uint64_t p_max) {
  if (n < 2) throw std::invalid_argument("least_split_prime needs n >= 2");
  for (std::uint64_t p : primes_in(n + 2, p_max)) {
    FamilyInstance h = make_h(n, p);
    auto [count, all_distinct] = distinct_root_count_mod_p(h.poly);
    if (count == n && all_distinct) return p;
  }
  return std::nullopt;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::boundary: return "boundary";
    case Verdict::fail: return "fail";
  }
  return "?";
}

Verdict guarded_less(double lhs, double rhs, bool strict, double rel_eps) {
  double band = rel_eps * std::max({std::fabs(lhs), std::fabs(rhs), 1.0});
  if (lhs < rhs - band) return Verdict::pass;
  if (lhs > rhs + band) return Verdict::fail;
  // Within the band: equality up to the guard. A strict claim is only
  // "boundary"; a non-strict claim still cannot be certified, so report it
  // the same way rather than silently passing.
  (void)strict;
  return Verdict::boundary;
}

MinkowskiChain minkowski_chain(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("minkowski_chain needs n >= 1");
  MinkowskiChain out;
  out.n = n;
  BigInt num = upow(n, 2 * n);
  BigInt den = factorial(n);
  den *= den;
  out.exact = mpq_class(num) / mpq_class(den);
  out.exact.canonicalize();

  const double pi = std::numbers::pi;
  const double e = std::numbers::e;
  double nn = static_cast<double>(n);
  out.middle = std::pow(pi * e * e / 4.0, nn) / (2.0 * pi * nn);
  out.lower = std::pow(5.8, nn) / (6.3 * nn);

  out.first_link = guarded_less(out.middle, out.exact.get_d(), false);
  out.second_link = guarded_less(out.lower, out.middle, true);
  return out;
}

BigInt splitting_exponent_sum(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("splitting_exponent_sum needs n >= 1");
  BigInt sum = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    sum += factorial(i) * upow(n, n - 1 - i);
  }
  return sum;
}

InequalityReport proof_inequalities(std::uint64_t n_max) {
  if (n_max < 3) throw std::invalid_argument("proof_inequalities needs n_max >= 3");
  InequalityReport rep;
  auto push = [&rep](std::uint64_t n, const std::string& name, double lhs, double rhs,
                     Verdict v) {
    rep.rows.push_back(InequalityRow{n, name, lhs, rhs, rhs - lhs, v});
    if (v == Verdict::fail) rep.any_fail = true;
    if (v == Verdict::boundary) {
      rep.boundary_cases.push_back(name + " at n = " + std::to_string(n));
    }
  };

  for (std::uint64_t n = 1; n <= n_max; ++n) {
    double nn = static_cast<double>(n);

    if (n >= 3) {
      // n^n + (n-1)^{n-1} <= e^{n ln n + 4/27}
      BigInt lhs = upow(n, n) + upow(n - 1, n - 1);
      double rhs = std::exp(nn * std::log(nn) + 4.0 / 27.0);
      push(n, "resultant_magnitude", lhs.get_d(), rhs, guarded_less(lhs.get_d(), rhs, false));
    }

    {
      // Stirling: n! < e sqrt(n) (n/e)^n; equality at n = 1.
      BigInt lhs = factorial(n);
      double rhs = std::numbers::e * std::sqrt(nn) *
                   std::exp(nn * (std::log(nn) - 1.0));
      push(n, "stirling", lhs.get_d(), rhs, guarded_less(lhs.get_d(), rhs, true));
    }

    {
      // sum i! n^{n-1-i} < 4.31 n^{n-1/2}
      BigInt lhs = splitting_exponent_sum(n);
      double rhs = 4.31 * std::exp((nn - 0.5) * std::log(nn));
      push(n, "factorial_sum", lhs.get_d(), rhs, guarded_less(lhs.get_d(), rhs, true));
    }

    {
      MinkowskiChain chain = minkowski_chain(n);
      push(n, "minkowski_first", chain.middle, chain.exact.get_d(), chain.first_link);
      push(n, "minkowski_second", chain.lower, chain.middle, chain.second_link);
    }
  }
  return rep;
}

}  // namespace tnomial
