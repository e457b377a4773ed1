#include "tnomial/sparse_poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "tnomial/dense_poly.hpp"

namespace tnomial {

SparsePolynomial::SparsePolynomial(FieldPtr field, std::vector<Term> terms)
    : field_(std::move(field)) {
  if (!field_) throw std::invalid_argument("polynomial needs a field");
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
  for (const Term& t : terms) {
    if (t.coeff.code >= field_->q()) throw std::invalid_argument("coefficient outside field");
    if (!terms_.empty() && terms_.back().exponent == t.exponent) {
      terms_.back().coeff = field_->add(terms_.back().coeff, t.coeff);
    } else {
      terms_.push_back(t);
    }
    if (!terms_.empty() && field_->is_zero(terms_.back().coeff)) terms_.pop_back();
  }
  if (terms_.empty()) throw std::invalid_argument("zero polynomial");
  if (terms_.back().exponent > field_->q() - 1) {
    throw std::invalid_argument("exponent " + std::to_string(terms_.back().exponent) +
                                " exceeds q-1 = " + std::to_string(field_->q() - 1));
  }
}

std::vector<std::uint64_t> SparsePolynomial::exponents() const {
  std::vector<std::uint64_t> es;
  es.reserve(terms_.size());
  for (const Term& t : terms_) es.push_back(t.exponent);
  return es;
}

SparsePolynomial make_polynomial(
    FieldPtr field, const std::vector<std::pair<std::uint64_t, std::int64_t>>& terms) {
  std::vector<Term> ts;
  ts.reserve(terms.size());
  for (auto [e, c] : terms) ts.push_back(Term{e, field->from_int(c)});
  return SparsePolynomial(field, std::move(ts));
}

SparsePolynomial canonicalize(const SparsePolynomial& f) {
  std::uint64_t shift = f.lowest_exponent();
  if (shift == 0) return f;
  std::vector<Term> ts = f.terms();
  for (Term& t : ts) t.exponent -= shift;
  SparsePolynomial g(f.field(), std::move(ts));
  g.zero_root_recorded_ = true;
  return g;
}

Element evaluate(const SparsePolynomial& f, Element a) {
  const Field& F = *f.field();
  Element acc = F.zero();
  for (const Term& t : f.terms()) {
    acc = F.add(acc, F.mul(t.coeff, F.pow(a, static_cast<std::int64_t>(t.exponent))));
  }
  return acc;
}

namespace {

void check_enum_budget(const Field& F) {
  std::uint64_t cap = F.is_prime_field() ? budgets().prime_enum_max : budgets().ext_enum_max;
  if (F.q() > cap) {
    throw CapabilityError("field size " + std::to_string(F.q()) +
                          " exceeds the root enumeration budget " + std::to_string(cap));
  }
}

// Batch evaluation over all units via the dlog tables: with c_j = g^{l_j},
// f(g^i) = sum_j exp[(l_j + e_j * i) mod (q-1)]; the per-term index advances
// by e_j mod (q-1) each step.
std::vector<Element> unit_roots_by_table(const SparsePolynomial& f) {
  const Field& F = *f.field();
  const auto& exp = F.exp_table();
  const std::uint64_t n = F.unit_count();
  const std::size_t t = f.term_count();
  std::vector<std::uint64_t> idx(t), step(t);
  for (std::size_t j = 0; j < t; ++j) {
    idx[j] = F.dlog_index(f.terms()[j].coeff);
    step[j] = f.terms()[j].exponent % n;
  }
  std::vector<Element> roots;
  const bool prime = F.is_prime_field();
  const std::uint64_t p = F.p();
  for (std::uint64_t i = 0; i < n; ++i) {
    if (prime) {
      std::uint64_t acc = 0;
      for (std::size_t j = 0; j < t; ++j) {
        acc += exp[idx[j]];
        if (acc >= p) acc -= p;
      }
      if (acc == 0) roots.push_back(Element{exp[i]});
    } else {
      Element acc = F.zero();
      for (std::size_t j = 0; j < t; ++j) acc = F.add(acc, Element{exp[idx[j]]});
      if (F.is_zero(acc)) roots.push_back(Element{exp[i]});
    }
    for (std::size_t j = 0; j < t; ++j) {
      idx[j] += step[j];
      if (idx[j] >= n) idx[j] -= n;
    }
  }
  return roots;
}

std::vector<Element> unit_roots_by_powering(const SparsePolynomial& f) {
  const Field& F = *f.field();
  std::vector<Element> roots;
  for (std::uint64_t code = 1; code < F.q(); ++code) {
    Element x{code};
    if (F.is_zero(evaluate(f, x))) roots.push_back(x);
  }
  return roots;
}

// Degree <= 1 over a prime field: scan x ascending, updating c0 + c1*x by a
// single modular add per step. No tables, which matters when a grid walks
// every prime up to the enumeration budget.
std::vector<Element> unit_roots_linear_scan(const SparsePolynomial& f) {
  const Field& F = *f.field();
  const std::uint64_t p = F.p();
  std::uint64_t c0 = 0, c1 = 0;
  for (const Term& t : f.terms()) (t.exponent == 0 ? c0 : c1) = t.coeff.code;
  std::vector<Element> roots;
  std::uint64_t v = c0;
  for (std::uint64_t x = 1; x < p; ++x) {
    v += c1;
    if (v >= p) v -= p;
    if (v == 0) roots.push_back(Element{x});
  }
  return roots;
}

}  // namespace

RootSet roots_in_units(const SparsePolynomial& f) {
  const Field& F = *f.field();
  check_enum_budget(F);
  std::vector<Element> roots;
  if (F.is_prime_field() && f.degree() <= 1) {
    roots = unit_roots_linear_scan(f);
  } else if (F.dlog_in_budget()) {
    roots = unit_roots_by_table(f);
  } else {
    roots = unit_roots_by_powering(f);
  }
  std::sort(roots.begin(), roots.end());
  return RootSet{f.field(), std::move(roots), f.zero_root_recorded() || f.lowest_exponent() > 0};
}

std::pair<std::uint64_t, bool> distinct_root_count_mod_p(const SparsePolynomial& f) {
  const Field& F = *f.field();
  if (!F.is_prime_field()) {
    throw std::invalid_argument("distinct_root_count_mod_p needs a prime field");
  }
  const std::uint64_t p = F.p();
  check_enum_budget(F);

  std::uint64_t count = 0;
  // f(0): the constant term (x^0 = 1 at x = 0).
  if (f.lowest_exponent() != 0) ++count;
  RootSet units = roots_in_units(f);
  count += units.count();

  // Squarefreeness via dense gcd(f, f'). The exponent invariant keeps the
  // degree below p, so no reduction mod x^p - x is ever needed; the dense
  // walk is still gated because the degree can approach p.
  if (f.degree() > budgets().dense_gcd_p_max) {
    throw CapabilityError("dense squarefreeness check gated to degree <= " +
                          std::to_string(budgets().dense_gcd_p_max));
  }
  densepoly::Poly dense(f.degree() + 1, 0);
  for (const Term& t : f.terms()) dense[t.exponent] = t.coeff.code;
  densepoly::Poly d = densepoly::derivative(dense, p);
  bool all_distinct = densepoly::degree(densepoly::gcd(dense, d, p)) == 0;
  return {count, all_distinct};
}

namespace {

struct Scanner {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  std::uint64_t integer(const char* what) {
    skip_ws();
    std::size_t start = pos;
    std::uint64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      std::uint64_t d = static_cast<std::uint64_t>(s[pos] - '0');
      if (v > (UINT64_MAX - d) / 10) throw ParseError("integer overflow", start);
      v = v * 10 + d;
      ++pos;
    }
    if (pos == start) throw ParseError(std::string("expected ") + what, pos);
    return v;
  }
};

}  // namespace

SparsePolynomial parse_polynomial(FieldPtr field, std::string_view text) {
  Scanner sc{text};
  std::vector<Term> terms;
  bool first = true;
  while (!sc.eof()) {
    std::int64_t sign = 1;
    char c = sc.peek();
    if (c == '+' || c == '-') {
      sign = c == '-' ? -1 : 1;
      ++sc.pos;
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms", sc.pos);
    }
    first = false;

    std::uint64_t coeff_mag = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
      coeff_mag = sc.integer("coefficient");
      have_coeff = true;
      if (sc.peek() == '*') ++sc.pos;
    }
    std::uint64_t exponent = 0;
    if (sc.peek() == 'x' || sc.peek() == 'X') {
      ++sc.pos;
      exponent = 1;
      if (sc.peek() == '^') {
        ++sc.pos;
        exponent = sc.integer("exponent");
      }
    } else if (!have_coeff) {
      throw ParseError("expected coefficient or 'x'", sc.pos);
    }

    Element coeff = field->from_int(sign);
    // coeff_mag may exceed int64; reduce mod p first.
    Element mag = field->from_int(static_cast<std::int64_t>(coeff_mag % field->p()));
    coeff = field->mul(coeff, mag);
    terms.push_back(Term{exponent, coeff});
  }
  if (terms.empty()) throw ParseError("empty polynomial", 0);
  try {
    return SparsePolynomial(std::move(field), std::move(terms));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), text.size());
  }
}

std::string to_string(const SparsePolynomial& f) {
  const Field& F = *f.field();
  std::ostringstream os;
  bool first = true;
  for (const Term& t : f.terms()) {
    if (!first) os << " + ";
    first = false;
    if (F.is_prime_field()) {
      if (t.coeff.code != 1 || t.exponent == 0) os << t.coeff.code;
      if (t.coeff.code != 1 && t.exponent > 0) os << "*";
    } else {
      auto cs = F.coords(t.coeff);
      os << "[";
      for (std::size_t i = 0; i < cs.size(); ++i) os << (i ? "," : "") << cs[i];
      os << "]";
      if (t.exponent > 0) os << "*";
    }
    if (t.exponent >= 1) os << "x";
    if (t.exponent >= 2) os << "^" << t.exponent;
  }
  return os.str();
}

}  // namespace tnomial
