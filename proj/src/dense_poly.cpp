#include "tnomial/dense_poly.hpp"

#include <cassert>
#include <stdexcept>

#include "tnomial/finite_field.hpp"

namespace tnomial::densepoly {

namespace {

std::uint64_t mulp(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powp(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulp(r, a, p);
    a = mulp(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invp(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::domain_error("inverse of 0 mod p");
  return powp(a % p, p - 2, p);
}

}  // namespace

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly add(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t s = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
    r[i] = s >= p ? s - p : s;
  }
  return trim(std::move(r));
}

Poly sub(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t x = i < a.size() ? a[i] : 0;
    std::uint64_t y = i < b.size() ? b[i] : 0;
    r[i] = x >= y ? x - y : x + p - y;
  }
  return trim(std::move(r));
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = (r[i + j] + static_cast<unsigned __int128>(a[i]) * b[j]) % p;
    }
  }
  return trim(std::move(r));
}

Poly rem(Poly a, const Poly& m, std::uint64_t p) {
  a = trim(std::move(a));
  Poly mm = trim(m);
  if (mm.empty()) throw std::domain_error("remainder by zero polynomial");
  std::uint64_t lead_inv = invp(mm.back(), p);
  while (a.size() >= mm.size()) {
    std::uint64_t c = mulp(a.back(), lead_inv, p);
    std::size_t shift = a.size() - mm.size();
    if (c != 0) {
      for (std::size_t i = 0; i < mm.size(); ++i) {
        std::uint64_t sub_v = mulp(c, mm[i], p);
        std::uint64_t& tgt = a[shift + i];
        tgt = tgt >= sub_v ? tgt - sub_v : tgt + p - sub_v;
      }
    }
    a.pop_back();
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

Poly mul_mod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
  return rem(mul(a, b, p), m, p);
}

Poly pow_mod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
  Poly r{1 % p};
  base = rem(std::move(base), m, p);
  while (e) {
    if (e & 1) r = mul_mod(r, base, m, p);
    base = mul_mod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

Poly pow_x_mod(std::uint64_t e, const Poly& m, std::uint64_t p) {
  return pow_mod(Poly{0, 1}, e, m, p);
}

Poly derivative(const Poly& a, std::uint64_t p) {
  if (a.size() <= 1) return {};
  Poly r(a.size() - 1, 0);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mulp(a[i], i % p, p);
  return trim(std::move(r));
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {  // make monic
    std::uint64_t s = invp(a.back(), p);
    for (auto& c : a) c = mulp(c, s, p);
  }
  return a;
}

bool is_irreducible(const Poly& f, std::uint64_t p) {
  Poly g = trim(f);
  int n = degree(g);
  if (n < 1) return false;
  if (n == 1) return true;
  // Rabin: x^(p^n) == x mod f, and gcd(x^(p^(n/l)) - x, f) = 1 for primes l|n.
  const Poly x{0, 1};
  Poly h = x;
  std::vector<Poly> frob_steps(n + 1);  // x^(p^i) mod f
  frob_steps[0] = x;
  for (int i = 1; i <= n; ++i) {
    h = pow_mod(h, p, g, p);
    frob_steps[i] = h;
  }
  if (trim(sub(frob_steps[n], x, p)).size() != 0) return false;
  for (auto [l, e] : factorize(static_cast<std::uint64_t>(n))) {
    (void)e;
    Poly d = sub(frob_steps[n / l], x, p);
    if (degree(gcd(d, g, p)) != 0) return false;
  }
  return true;
}

std::uint64_t eval(const Poly& a, std::uint64_t x, std::uint64_t p) {
  std::uint64_t r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = (mulp(r, x, p) + a[i]) % p;
  return r;
}

}  // namespace tnomial::densepoly
