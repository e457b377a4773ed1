#include "tnomial/finite_field.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "tnomial/dense_poly.hpp"

namespace tnomial {

namespace {

constexpr std::uint64_t kMaxFieldSize = 1ull << 48;

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

}  // namespace

Budgets& budgets() {
  static Budgets b;
  return b;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t s : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % s == 0) return n == s;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powp(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulp(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> fs;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      std::uint32_t e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      fs.emplace_back(d, e);
    }
  }
  if (n > 1) fs.emplace_back(n, 1);
  return fs;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("divisors: n must be positive");
  std::vector<std::uint64_t> ds{1};
  for (auto [prime, exp] : factorize(n)) {
    std::size_t base = ds.size();
    std::uint64_t pe = 1;
    for (std::uint32_t e = 1; e <= exp; ++e) {
      pe *= prime;
      for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pe);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

Field::Field(std::uint64_t p, std::uint32_t k) : p_(p), k_(k) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p));
  if (k == 0) throw std::invalid_argument("extension degree must be >= 1");
  unsigned __int128 q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxFieldSize) throw CapabilityError("field size p^k exceeds the supported regime (2^48)");
  }
  q_ = static_cast<std::uint64_t>(q);

  if (k_ >= 2) {
    // Deterministic modulus: the monic irreducible of degree k whose
    // coefficient tuple (c_0, ..., c_{k-1}) is lexicographically least.
    // Enumerate tuples with c_0 most significant; c_0 = 0 gives the root 0,
    // so start past that block.
    std::uint64_t span = q_ / p_;  // p^(k-1)
    for (std::uint64_t idx = span; idx < q_; ++idx) {
      densepoly::Poly cand(k_ + 1, 0);
      cand[k_] = 1;
      // Digits of idx base p, c_0 most significant.
      std::uint64_t rest = idx, w = span;
      for (std::uint32_t i = 0; i < k_; ++i) {
        cand[i] = rest / w;
        rest %= w;
        w /= p_;
      }
      if (cand[0] == 0) continue;
      if (densepoly::is_irreducible(cand, p_)) {
        modulus_ = std::move(cand);
        break;
      }
    }
    if (modulus_.empty()) throw std::logic_error("no irreducible modulus found");  // cannot happen
  }
}

std::shared_ptr<const Field> Field::make(std::uint64_t p, std::uint32_t k) {
  return std::shared_ptr<const Field>(new Field(p, k));
}

void Field::check_element(Element a) const {
  if (a.code >= q_) throw std::invalid_argument("element code out of range for " + describe());
}

Element Field::from_int(std::int64_t v) const {
  std::int64_t m = static_cast<std::int64_t>(p_);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return Element{static_cast<std::uint64_t>(r)};
}

std::vector<std::uint64_t> Field::coords(Element a) const {
  check_element(a);
  std::vector<std::uint64_t> c(k_, 0);
  std::uint64_t code = a.code;
  for (std::uint32_t i = 0; i < k_; ++i) {
    c[i] = code % p_;
    code /= p_;
  }
  return c;
}

Element Field::from_coords(const std::vector<std::uint64_t>& c) const {
  if (c.size() != k_) throw std::invalid_argument("coordinate vector must have length k");
  std::uint64_t code = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] >= p_) throw std::invalid_argument("coordinate not reduced mod p");
    code = code * p_ + c[i];
  }
  return Element{code};
}

Element Field::add(Element a, Element b) const {
  check_element(a);
  check_element(b);
  if (k_ == 1) {
    std::uint64_t s = a.code + b.code;
    return Element{s >= p_ ? s - p_ : s};
  }
  if (p_ == 2) return Element{a.code ^ b.code};
  std::uint64_t code = 0, mult = 1, x = a.code, y = b.code;
  for (std::uint32_t i = 0; i < k_; ++i) {
    std::uint64_t s = x % p_ + y % p_;
    if (s >= p_) s -= p_;
    code += s * mult;
    mult *= p_;
    x /= p_;
    y /= p_;
  }
  return Element{code};
}

Element Field::neg(Element a) const {
  check_element(a);
  if (k_ == 1) return Element{a.code == 0 ? 0 : p_ - a.code};
  if (p_ == 2) return a;
  std::uint64_t code = 0, mult = 1, x = a.code;
  for (std::uint32_t i = 0; i < k_; ++i) {
    std::uint64_t d = x % p_;
    code += (d == 0 ? 0 : p_ - d) * mult;
    mult *= p_;
    x /= p_;
  }
  return Element{code};
}

Element Field::sub(Element a, Element b) const { return add(a, neg(b)); }

Element Field::mul(Element a, Element b) const {
  check_element(a);
  check_element(b);
  if (k_ == 1) return Element{mulp(a.code, b.code, p_)};
  if (a.code == 0 || b.code == 0) return Element{0};
  // Schoolbook product of coordinate vectors, reduced by the monic modulus.
  // k <= 48 since q <= 2^48.
  std::array<std::uint64_t, 96> prod{};
  std::array<std::uint64_t, 48> ca{}, cb{};
  std::uint64_t x = a.code, y = b.code;
  for (std::uint32_t i = 0; i < k_; ++i) {
    ca[i] = x % p_;
    cb[i] = y % p_;
    x /= p_;
    y /= p_;
  }
  for (std::uint32_t i = 0; i < k_; ++i) {
    if (ca[i] == 0) continue;
    for (std::uint32_t j = 0; j < k_; ++j) {
      prod[i + j] = (prod[i + j] + static_cast<unsigned __int128>(ca[i]) * cb[j]) % p_;
    }
  }
  for (std::uint32_t i = 2 * k_ - 2; i >= k_; --i) {
    std::uint64_t c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (std::uint32_t j = 0; j < k_; ++j) {
      std::uint64_t m = modulus_[j];
      if (m == 0) continue;
      std::uint64_t sub_v = mulp(c, m, p_);
      std::uint64_t& tgt = prod[i - k_ + j];
      tgt = tgt >= sub_v ? tgt - sub_v : tgt + p_ - sub_v;
    }
  }
  std::uint64_t code = 0;
  for (std::uint32_t i = k_; i-- > 0;) code = code * p_ + prod[i];
  return Element{code};
}

Element Field::pow(Element a, std::int64_t e) const {
  check_element(a);
  if (a.code == 0) {
    if (e == 0) return one();
    if (e < 0) throw std::domain_error("pow: negative exponent of 0");
    return zero();
  }
  std::uint64_t n = unit_count();
  std::int64_t r = e % static_cast<std::int64_t>(n);
  if (r < 0) r += static_cast<std::int64_t>(n);
  std::uint64_t exp_v = static_cast<std::uint64_t>(r);
  Element result = one(), base = a;
  while (exp_v) {
    if (exp_v & 1) result = mul(result, base);
    base = mul(base, base);
    exp_v >>= 1;
  }
  return result;
}

Element Field::inv(Element a) const {
  check_element(a);
  if (a.code == 0) throw std::domain_error("inv(0) in " + describe());
  if (q_ == 2) return a;
  return pow(a, static_cast<std::int64_t>(unit_count() - 1));
}

void Field::ensure_generator() const {
  std::call_once(gen_once_, [this] {
    order_factors_ = factorize(unit_count());
    for (std::uint64_t code = 1; code < q_; ++code) {
      Element cand{code};
      bool ok = true;
      for (auto [l, e] : order_factors_) {
        (void)e;
        if (pow(cand, static_cast<std::int64_t>(unit_count() / l)) == one()) {
          ok = false;
          break;
        }
      }
      if (ok) {
        generator_ = cand;
        return;
      }
    }
    throw std::logic_error("no generator found");  // cannot happen
  });
}

Element Field::unit_generator() const {
  ensure_generator();
  return generator_;
}

const std::vector<std::pair<std::uint64_t, std::uint32_t>>& Field::unit_order_factors() const {
  ensure_generator();
  return order_factors_;
}

void Field::ensure_dlog() const {
  if (!dlog_in_budget()) {
    throw CapabilityError("dlog table for q = " + std::to_string(q_) +
                          " exceeds budget; use direct powering instead");
  }
  std::call_once(dlog_once_, [this] {
    ensure_generator();
    exp_.assign(unit_count(), 0);
    log_.assign(q_, 0);
    Element x = one();
    for (std::uint64_t i = 0; i < unit_count(); ++i) {
      exp_[i] = static_cast<std::uint32_t>(x.code);
      log_[x.code] = static_cast<std::uint32_t>(i);
      x = mul(x, generator_);
    }
    if (x != one()) throw std::logic_error("generator order mismatch");
  });
}

std::uint64_t Field::dlog_index(Element a) const {
  check_element(a);
  if (a.code == 0) throw std::domain_error("dlog of 0");
  ensure_dlog();
  return log_[a.code];
}

Element Field::unit_from_index(std::uint64_t i) const {
  ensure_dlog();
  return Element{exp_[i % unit_count()]};
}

const std::vector<std::uint32_t>& Field::exp_table() const {
  ensure_dlog();
  return exp_;
}

const std::vector<std::uint32_t>& Field::log_table() const {
  ensure_dlog();
  return log_;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "F_" << q_;
  if (k_ > 1) {
    os << " = F_" << p_ << "^" << k_ << " (modulus";
    for (std::size_t i = 0; i < modulus_.size(); ++i) {
      os << (i ? " " : " [") << modulus_[i];
    }
    os << "])";
  }
  return os.str();
}

}  // namespace tnomial
