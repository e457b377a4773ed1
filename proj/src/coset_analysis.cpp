#include "tnomial/coset_analysis.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <unordered_map>

namespace tnomial {

std::uint64_t delta(const std::vector<std::uint64_t>& exponents, std::uint64_t q) {
  std::uint64_t g = q - 1;
  for (std::uint64_t e : exponents) g = std::gcd(g, e);
  return g;
}

std::vector<Coset> subgroup_cosets(const FieldPtr& field, std::uint64_t d) {
  const std::uint64_t n = field->unit_count();
  if (d == 0 || n % d != 0) {
    throw std::invalid_argument("subgroup order " + std::to_string(d) + " does not divide q-1");
  }
  const std::uint64_t m = n / d;  // number of cosets
  std::vector<Coset> cosets(m);
  for (std::uint64_t r = 0; r < m; ++r) {
    cosets[r].subgroup_order = d;
    cosets[r].rep_index = r;
    cosets[r].members.reserve(d);
    for (std::uint64_t j = 0; j < d; ++j) {
      cosets[r].members.push_back(field->unit_from_index(r + j * m));
    }
  }
  return cosets;
}

std::uint64_t C_exact(const RootSet& Z) {
  if (Z.roots.empty()) return 0;
  if (Z.roots.size() == 1) return 1;  // a lone root is a coset of the trivial subgroup
  const Field& F = *Z.field;
  const std::uint64_t n = F.unit_count();
  std::vector<std::uint64_t> idx;
  idx.reserve(Z.roots.size());
  for (Element r : Z.roots) idx.push_back(F.dlog_index(r));

  std::vector<std::uint64_t> ds = divisors(n);
  for (auto it = ds.rbegin(); it != ds.rend(); ++it) {
    const std::uint64_t d = *it;
    if (d > Z.roots.size()) continue;
    if (d == 1) return 1;  // any single root is a coset of the trivial subgroup
    const std::uint64_t m = n / d;
    std::unordered_map<std::uint64_t, std::uint64_t> bucket;
    bucket.reserve(idx.size() * 2);
    for (std::uint64_t i : idx) {
      if (++bucket[i % m] == d) return d;
    }
  }
  return 1;
}

std::uint64_t D_bound(const std::vector<std::uint64_t>& exponents, std::uint64_t q) {
  if (exponents.size() < 2) throw std::invalid_argument("D_bound needs t >= 2 exponents");
  std::vector<std::uint64_t> ds = divisors(q - 1);
  for (auto it = ds.rbegin(); it != ds.rend(); ++it) {
    const std::uint64_t k = *it;
    bool all_matched = true;
    for (std::size_t i = 0; i < exponents.size() && all_matched; ++i) {
      bool matched = false;
      for (std::size_t j = 0; j < exponents.size(); ++j) {
        if (j == i) continue;
        std::uint64_t diff = exponents[i] > exponents[j] ? exponents[i] - exponents[j]
                                                         : exponents[j] - exponents[i];
        if (diff % k == 0) {
          matched = true;
          break;
        }
      }
      all_matched = matched;
    }
    if (all_matched) return k;
  }
  return 1;  // k = 1 always qualifies
}

namespace {

struct Candidate {
  std::uint64_t d;          // subgroup order = member count
  std::uint64_t rep_index;  // least dlog index
  std::vector<std::uint32_t> positions;  // root positions covered
};

// All cosets (of any subgroup of the unit group) fully contained in Z,
// described by positions into the sorted root-index array.
std::vector<Candidate> contained_cosets(const Field& F, const std::vector<std::uint64_t>& idx) {
  const std::uint64_t n = F.unit_count();
  std::vector<Candidate> cands;
  for (std::uint64_t d : divisors(n)) {
    if (d > idx.size()) break;
    const std::uint64_t m = n / d;
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> groups;
    for (std::uint32_t pos = 0; pos < idx.size(); ++pos) {
      groups[idx[pos] % m].push_back(pos);
    }
    for (auto& [r, positions] : groups) {
      if (positions.size() == d) {
        cands.push_back(Candidate{d, r, std::move(positions)});
      }
    }
  }
  return cands;
}

struct ExactCoverSolver {
  const std::vector<std::uint64_t>& masks;  // candidate masks, size-descending
  std::uint64_t universe;
  std::size_t max_size;
  std::size_t best_size;
  std::vector<std::size_t> best, current;

  void run(std::uint64_t uncovered) {
    if (uncovered == 0) {
      if (current.size() < best_size) {
        best_size = current.size();
        best = current;
      }
      return;
    }
    std::size_t lower = current.size() + (std::popcount(uncovered) + max_size - 1) / max_size;
    if (lower >= best_size) return;
    std::uint64_t pivot = uncovered & (~uncovered + 1);  // lowest uncovered root
    for (std::size_t i = 0; i < masks.size(); ++i) {
      if (!(masks[i] & pivot)) continue;
      current.push_back(i);
      run(uncovered & ~masks[i]);
      current.pop_back();
    }
  }
};

Coset materialize(const Field& F, const Candidate& c, const std::vector<std::uint64_t>& idx) {
  Coset coset;
  coset.subgroup_order = c.d;
  std::vector<std::uint64_t> member_idx;
  member_idx.reserve(c.positions.size());
  for (std::uint32_t pos : c.positions) member_idx.push_back(idx[pos]);
  std::sort(member_idx.begin(), member_idx.end());
  coset.rep_index = member_idx.empty() ? 0 : member_idx.front();
  for (std::uint64_t i : member_idx) coset.members.push_back(F.unit_from_index(i));
  return coset;
}

}  // namespace

CosetCover min_coset_cover(const RootSet& Z) {
  CosetCover out;
  if (Z.roots.empty()) return out;
  const Field& F = *Z.field;
  std::vector<std::uint64_t> idx;
  idx.reserve(Z.roots.size());
  for (Element r : Z.roots) idx.push_back(F.dlog_index(r));
  std::sort(idx.begin(), idx.end());

  std::vector<Candidate> cands = contained_cosets(F, idx);
  // Deterministic order: larger cosets first, then least representative.
  std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    if (a.d != b.d) return a.d > b.d;
    return a.rep_index < b.rep_index;
  });

  const std::size_t n = idx.size();
  if (n <= budgets().exact_cover_max && n <= 64) {
    std::vector<std::uint64_t> masks;
    masks.reserve(cands.size());
    for (const Candidate& c : cands) {
      std::uint64_t m = 0;
      for (std::uint32_t pos : c.positions) m |= 1ull << pos;
      masks.push_back(m);
    }
    // Prune dominated candidates: any cover using a strict subset can swap in
    // its superset at equal size.
    std::vector<std::size_t> keep;
    std::vector<std::uint64_t> kept_masks;
    for (std::size_t i = 0; i < masks.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < masks.size() && !dominated; ++j) {
        if (i == j) continue;
        if ((masks[i] | masks[j]) == masks[j] && masks[i] != masks[j]) dominated = true;
      }
      if (!dominated) {
        keep.push_back(i);
        kept_masks.push_back(masks[i]);
      }
    }
    std::uint64_t universe = n == 64 ? ~0ull : (1ull << n) - 1;
    ExactCoverSolver solver{kept_masks, universe, cands[keep.front()].positions.size(),
                            n + 1,      {},       {}};
    solver.run(universe);
    out.method = CoverMethod::exact;
    out.size = solver.best.size();
    for (std::size_t i : solver.best) out.cosets.push_back(materialize(F, cands[keep[i]], idx));
  } else {
    // Greedy: largest remaining coverage, ties by least representative index.
    std::vector<char> covered(n, 0);
    std::size_t remaining = n;
    std::vector<char> used(cands.size(), 0);
    while (remaining > 0) {
      std::size_t best = cands.size();
      std::size_t best_gain = 0;
      for (std::size_t i = 0; i < cands.size(); ++i) {
        if (used[i]) continue;
        std::size_t gain = 0;
        for (std::uint32_t pos : cands[i].positions) gain += !covered[pos];
        if (gain > best_gain ||
            (gain == best_gain && gain > 0 && cands[i].rep_index < cands[best].rep_index)) {
          best = i;
          best_gain = gain;
        }
      }
      used[best] = 1;
      for (std::uint32_t pos : cands[best].positions) {
        if (!covered[pos]) {
          covered[pos] = 1;
          --remaining;
        }
      }
      out.cosets.push_back(materialize(F, cands[best], idx));
    }
    out.method = CoverMethod::greedy;
    out.size = out.cosets.size();
  }
  return out;
}

namespace {

mpz_class upow(std::uint64_t base, std::uint64_t e) {
  mpz_class b = static_cast<unsigned long>(base);
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

// Largest F with F^n <= x.
std::uint64_t integer_nth_root(const mpz_class& x, std::uint64_t nth) {
  mpz_class r;
  mpz_root(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(nth));
  return mpz_get_ui(r.get_mpz_t());
}

}  // namespace

bool kelley_inequality_holds(std::uint64_t R, std::uint64_t t, std::uint64_t q, std::uint64_t C) {
  return upow(R, t - 1) <= upow(2, t - 1) * upow(q - 1, t - 2) * mpz_class(static_cast<unsigned long>(C));
}

bool bcr_cover_inequality_holds(std::uint64_t size, std::uint64_t t, std::uint64_t q,
                                std::uint64_t delta) {
  return upow(size, t - 1) <= upow(2, t - 1) * upow((q - 1) / delta, t - 2);
}

CosetReport bounds_report(const SparsePolynomial& f) {
  if (f.term_count() < 2) {
    throw std::invalid_argument("bounds_report needs a t-nomial with t >= 2");
  }
  if (!f.is_canonical()) {
    throw std::invalid_argument("bounds_report needs a canonical polynomial (e_1 = 0)");
  }
  const Field& F = *f.field();
  const std::uint64_t q = F.q();
  const std::uint64_t t = f.term_count();

  CosetReport rep;
  rep.q = q;
  rep.t = t;
  rep.strict_convention = f.strict_convention();

  std::vector<std::uint64_t> es = f.exponents();
  rep.delta = delta(es, q);
  rep.D_bound = D_bound(es, q);

  RootSet Z = roots_in_units(f);
  rep.root_count = Z.count();
  rep.includes_zero = Z.includes_zero;
  rep.C_exact = C_exact(Z);

  CosetCover cover = min_coset_cover(Z);
  rep.cover_size = cover.size;
  rep.cover_method = cover.method;

  // Karpinski-Shparlinski: (t-1)(q-1)/t.
  std::uint64_t num = (t - 1) * (q - 1), den = t;
  std::uint64_t g = std::gcd(num, den);
  rep.ks_num = num / g;
  rep.ks_den = den / g;
  rep.ks_real = static_cast<double>(num) / static_cast<double>(den);
  rep.ks_floor = num / den;

  // BCR coset-count bound: 2((q-1)/delta)^{(t-2)/(t-1)}.
  const std::uint64_t reduced = (q - 1) / rep.delta;
  rep.bcr.real = 2.0 * std::pow(static_cast<double>(reduced),
                                static_cast<double>(t - 2) / static_cast<double>(t - 1));
  rep.bcr.floor = integer_nth_root(upow(2, t - 1) * upow(reduced, t - 2), t - 1);

  // Kelley-Owen, trinomials only: delta * floor(1/2 + sqrt((q-1)/delta)).
  if (t == 3) {
    std::uint64_t m = reduced;
    mpz_class mm = static_cast<unsigned long>(m);
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), mm.get_mpz_t());
    std::uint64_t s64 = mpz_get_ui(s.get_mpz_t());
    // floor(1/2 + sqrt(m)) = s + 1 exactly when m >= s^2 + s + 1.
    std::uint64_t half_round = m >= s64 * s64 + s64 + 1 ? s64 + 1 : s64;
    rep.ko = rep.delta * half_round;
    mpz_class qq = static_cast<unsigned long>(q);
    mpz_class qs;
    mpz_sqrt(qs.get_mpz_t(), qq.get_mpz_t());
    bool square_q = qs * qs == qq;
    if (square_q && rep.delta == 1) {
      rep.ko_sqrt = mpz_get_ui(qs.get_mpz_t());
    } else {
      rep.skipped.emplace_back("ko_sqrt_bound",
                               square_q ? "delta != 1" : "q is not a square");
    }
  } else {
    rep.skipped.emplace_back("ko_bound", "t != 3");
    rep.skipped.emplace_back("ko_sqrt_bound", "t != 3");
  }

  // Kelley: 2(q-1)^{(t-2)/(t-1)} C^{1/(t-1)}; undefined without roots.
  if (rep.C_exact > 0) {
    BoundValue kv;
    kv.real = 2.0 *
              std::pow(static_cast<double>(q - 1),
                       static_cast<double>(t - 2) / static_cast<double>(t - 1)) *
              std::pow(static_cast<double>(rep.C_exact), 1.0 / static_cast<double>(t - 1));
    kv.floor = integer_nth_root(
        upow(2, t - 1) * upow(q - 1, t - 2) * mpz_class(static_cast<unsigned long>(rep.C_exact)),
        t - 1);
    rep.kelley = kv;
  } else {
    rep.skipped.emplace_back("kelley_bound", "no roots in the unit group (C = 0)");
  }
  return rep;
}

}  // namespace tnomial
