#include "tnomial/families.hpp"

#include <algorithm>

#include "tnomial/dense_poly.hpp"

namespace tnomial {

namespace {

constexpr std::uint64_t kMaxExponentBase = 1ull << 48;

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t e, const char* what) {
  unsigned __int128 r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    r *= base;
    if (r > kMaxExponentBase) throw CapabilityError(std::string(what) + ": p^k out of range");
  }
  return static_cast<std::uint64_t>(r);
}

FieldPtr make_family_field(std::uint64_t p, std::uint64_t k, const char* what) {
  std::uint64_t q = checked_pow(p, k, what);
  std::uint64_t cap = k == 1 ? budgets().prime_enum_max : budgets().ext_enum_max;
  if (q > cap) {
    throw CapabilityError(std::string(what) + ": q = " + std::to_string(q) +
                          " exceeds the enumeration budget " + std::to_string(cap));
  }
  return Field::make(p, static_cast<std::uint32_t>(k));
}

}  // namespace

const char* family_kind_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::r: return "r";
    case FamilyKind::g: return "g";
    case FamilyKind::h: return "h";
    case FamilyKind::cyclotomic: return "cyclotomic";
  }
  return "?";
}

FamilyInstance make_r(std::uint64_t t, std::uint64_t u, std::uint64_t p) {
  if (t < 2 || u < 1) throw std::invalid_argument("make_r needs t >= 2 and u >= 1");
  if (!is_prime(p)) throw std::invalid_argument("make_r: p must be prime");
  FieldPtr F = make_family_field(p, (t - 1) * u, "r family");
  std::vector<Term> terms;
  terms.push_back(Term{0, F->one()});
  terms.push_back(Term{1, F->one()});
  std::uint64_t pu = checked_pow(p, u, "r family");
  std::uint64_t e = 1;
  for (std::uint64_t i = 1; i + 1 <= t - 1; ++i) {  // exponents p^{iu}, i = 1..t-2
    e *= pu;
    terms.push_back(Term{e, F->one()});
  }
  std::uint64_t expected = checked_pow(p, (t - 2) * u, "r family");
  return FamilyInstance{FamilyKind::r, t, u, p, 0, F,
                        SparsePolynomial(F, std::move(terms)), expected};
}

FamilyInstance make_g(std::uint64_t t, std::uint64_t u, std::uint64_t p) {
  if (t < 2 || u < 1) throw std::invalid_argument("make_g needs t >= 2 and u >= 1");
  if (!is_prime(p)) throw std::invalid_argument("make_g: p must be prime");
  FieldPtr F = make_family_field(p, t * u, "g family");
  std::uint64_t pu = checked_pow(p, u, "g family");
  std::vector<Term> terms;
  terms.push_back(Term{0, F->one()});
  std::uint64_t e = 0, piu = 1;
  for (std::uint64_t j = 2; j <= t; ++j) {  // e_j = 1 + p^u + ... + p^{(j-2)u}
    e += piu;
    piu *= pu;
    terms.push_back(Term{e, F->one()});
  }
  std::uint64_t expected = (checked_pow(p, (t - 1) * u, "g family") - 1) / (pu - 1);
  return FamilyInstance{FamilyKind::g, t, u, p, 0, F,
                        SparsePolynomial(F, std::move(terms)), expected};
}

FamilyInstance make_h(std::uint64_t n, std::uint64_t p) {
  if (n < 2) throw std::invalid_argument("make_h needs n >= 2");
  if (!is_prime(p)) throw std::invalid_argument("make_h: p must be prime");
  if (p < n + 2) {
    throw std::invalid_argument("make_h requires p >= n + 2 (got p = " + std::to_string(p) +
                                ", n = " + std::to_string(n) + ")");
  }
  FieldPtr F = make_family_field(p, 1, "h family");
  std::vector<Term> terms{Term{0, F->from_int(-1)}, Term{1, F->from_int(-1)}, Term{n, F->one()}};
  return FamilyInstance{FamilyKind::h, 0, 0, p, n, F,
                        SparsePolynomial(F, std::move(terms)), std::nullopt};
}

FamilyInstance make_cyclotomic_quotient(std::uint64_t q, std::uint64_t t) {
  if (t < 2) throw std::invalid_argument("cyclotomic quotient needs t >= 2");
  auto fs = factorize(q);
  if (fs.size() != 1) throw std::invalid_argument("q must be a prime power");
  std::uint64_t p = fs[0].first, k = fs[0].second;
  if ((q - 1) % t != 0) {
    throw std::invalid_argument("t = " + std::to_string(t) + " does not divide q-1 = " +
                                std::to_string(q - 1));
  }
  FieldPtr F = make_family_field(p, k, "cyclotomic quotient");
  std::uint64_t step = (q - 1) / t;
  std::vector<Term> terms;
  for (std::uint64_t i = 0; i < t; ++i) terms.push_back(Term{i * step, F->one()});
  std::uint64_t expected = (t - 1) * step;
  return FamilyInstance{FamilyKind::cyclotomic, t, 0, p, 0, F,
                        SparsePolynomial(F, std::move(terms)), expected};
}

RootSet trace_zero_roots(std::uint64_t t, std::uint64_t u, std::uint64_t p) {
  FamilyInstance inst = make_g(t, u, p);
  const Field& F = *inst.field;
  const std::uint64_t q = F.q();
  const std::uint64_t n = q - 1;
  const std::uint64_t pu = checked_pow(p, u, "trace");
  const auto& exp = F.exp_table();

  // Frobenius multipliers p^{ju} mod (q-1); the trace of g^i is
  // sum_j exp[(i * p^{ju}) mod (q-1)].
  std::vector<std::uint64_t> mult(t);
  for (std::uint64_t j = 0; j < t; ++j) {
    mult[j] = j == 0 ? 1 : static_cast<std::uint64_t>(
                               (static_cast<unsigned __int128>(mult[j - 1]) * pu) % n);
  }

  std::uint64_t kernel_size = 1;  // a = 0 always has zero trace
  std::vector<char> is_root_image(q, 0);
  const std::uint64_t image_step = (pu - 1) % n;
  for (std::uint64_t i = 0; i < n; ++i) {
    Element acc = F.zero();
    for (std::uint64_t j = 0; j < t; ++j) {
      acc = F.add(acc, Element{exp[(static_cast<unsigned __int128>(i) * mult[j]) % n]});
    }
    if (F.is_zero(acc)) {
      ++kernel_size;
      is_root_image[exp[(i * static_cast<unsigned __int128>(image_step)) % n]] = 1;
    }
  }
  std::uint64_t expected_kernel = checked_pow(p, (t - 1) * u, "trace");
  if (kernel_size != expected_kernel) {
    throw std::logic_error("trace kernel has " + std::to_string(kernel_size) +
                           " elements, expected " + std::to_string(expected_kernel));
  }

  std::vector<Element> roots;
  for (std::uint64_t code = 1; code < q; ++code) {
    if (is_root_image[code]) roots.push_back(Element{code});
  }
  if (roots.size() != *inst.expected_count) {
    throw std::logic_error("trace images give " + std::to_string(roots.size()) +
                           " distinct values, expected " + std::to_string(*inst.expected_count));
  }
  for (Element r : roots) {
    if (!F.is_zero(evaluate(inst.poly, r))) {
      throw std::logic_error("trace image is not a root of g");
    }
  }
  return RootSet{inst.field, std::move(roots), false};
}

FamilyVerification verify_family(const FamilyInstance& inst) {
  FamilyVerification out;
  out.kind = inst.kind;
  out.t = inst.t;
  out.u = inst.u;
  out.p = inst.p;
  out.n = inst.n;
  out.q = inst.field->q();
  out.polynomial = to_string(inst.poly);
  out.expected_count = inst.expected_count;

  RootSet Z = roots_in_units(inst.poly);
  out.observed_count = Z.count();
  std::vector<std::uint64_t> es = inst.poly.exponents();
  out.delta = delta(es, out.q);
  out.C = C_exact(Z);
  out.D = D_bound(es, out.q);
  CosetCover cover = min_coset_cover(Z);
  out.cover_size = cover.size;
  out.cover_method = cover.method;

  auto expect = [&out](bool ok, const std::string& msg) {
    if (!ok) out.failures.push_back(msg);
  };

  if (inst.expected_count) {
    expect(out.observed_count == *inst.expected_count,
           "root count " + std::to_string(out.observed_count) + " != expected " +
               std::to_string(*inst.expected_count));
  }
  switch (inst.kind) {
    case FamilyKind::r:
      expect(out.delta == 1, "delta != 1");
      expect(out.C == 1, "C != 1");
      break;
    case FamilyKind::g: {
      expect(out.delta == 1, "delta != 1");
      std::uint64_t half_t = inst.t / 2;
      expect(out.C <= out.D, "C > D");
      expect(out.D <= half_t, "D > floor(t/2)");
      RootSet traced = trace_zero_roots(inst.t, inst.u, inst.p);
      out.trace_roots_match = traced.roots == Z.roots;
      expect(out.trace_roots_match, "trace-zero roots differ from enumeration");
      break;
    }
    case FamilyKind::h:
      expect(out.delta == 1, "delta != 1");
      expect(out.D == 1, "D != 1");
      expect(out.C <= 1, "C > 1");
      break;
    case FamilyKind::cyclotomic: {
      std::uint64_t claimed_delta = (out.q - 1) / inst.t;
      expect(out.delta == claimed_delta, "delta != (q-1)/t");
      expect(out.cover_size <= inst.t - 1, "cover larger than the t-1 coset decomposition");
      break;
    }
  }
  out.pass = out.failures.empty();
  return out;
}

bool frobenius_divisibility_witness(std::uint64_t t, std::uint64_t u, std::uint64_t p) {
  if (t < 2 || u < 1 || !is_prime(p)) throw std::invalid_argument("bad r-family parameters");
  std::uint64_t deg = checked_pow(p, (t - 2) * u, "frobenius witness");  // deg r_{t,u,p}
  if (deg > budgets().frobenius_deg_max) {
    throw CapabilityError("quotient degree " + std::to_string(deg) + " exceeds the witness gate " +
                          std::to_string(budgets().frobenius_deg_max));
  }
  std::uint64_t q = checked_pow(p, (t - 1) * u, "frobenius witness");
  densepoly::Poly r(deg + 1, 0);
  r[0] = 1;
  r[1] = (r[1] + 1) % p;  // t = 2 degenerates to 1 + x
  std::uint64_t pu = checked_pow(p, u, "frobenius witness");
  std::uint64_t e = 1;
  for (std::uint64_t i = 1; i + 1 <= t - 1; ++i) {  // exponents p^{iu}, i = 1..t-2
    e *= pu;
    r[e] = (r[e] + 1) % p;
  }
  densepoly::Poly r_trimmed = densepoly::trim(r);
  densepoly::Poly xq = densepoly::pow_x_mod(q, r_trimmed, p);
  densepoly::Poly x = densepoly::rem(densepoly::Poly{0, 1}, r_trimmed, p);
  return xq == x;
}

}  // namespace tnomial
