#include "tnomial/extremal_search.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <numeric>
#include <thread>

#include "tnomial/config.hpp"
#include "tnomial/errors.hpp"
#include "tnomial/finite_field.hpp"

namespace tnomial {

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

// Direct root count of gamma + x^e2 + x^e3 over the units of F_p, without
// dlog tables; the independent witness check.
std::uint32_t direct_root_count(std::uint64_t p, const Witness& w) {
  std::uint32_t count = 0;
  for (std::uint64_t x = 1; x < p; ++x) {
    std::uint64_t v = (w.gamma + powp(x, w.e2, p) + powp(x, w.e3, p)) % p;
    if (v == 0) ++count;
  }
  return count;
}

// Per-count least witnesses, indexed by root count. Doubles as the achieved
// set (have[c] != 0).
struct CountWitnesses {
  std::vector<char> have;
  std::vector<Witness> wit;

  explicit CountWitnesses(std::uint64_t p) : have(p, 0), wit(p) {}

  void offer(std::uint32_t c, std::uint64_t a, std::uint64_t b, std::uint64_t gamma) {
    Witness& w = wit[c];
    if (!have[c] || std::tie(a, b, gamma) < std::tie(w.e2, w.e3, w.gamma)) {
      have[c] = 1;
      w = Witness{gamma, a, b};
    }
  }

  void merge(const CountWitnesses& o) {
    for (std::size_t c = 0; c < o.have.size(); ++c) {
      if (o.have[c]) offer(static_cast<std::uint32_t>(c), o.wit[c].e2, o.wit[c].e3, o.wit[c].gamma);
    }
  }
};

}  // namespace

const char* convention_name(Convention c) {
  return c == Convention::strict ? "strict" : "extended";
}

std::optional<Convention> convention_from_name(const std::string& name) {
  if (name == "strict") return Convention::strict;
  if (name == "extended") return Convention::extended;
  return std::nullopt;
}

std::string witness_text(const Witness& w) {
  auto power = [](std::uint64_t e) {
    return e == 1 ? std::string("x") : "x^" + std::to_string(e);
  };
  return std::to_string(w.gamma) + "+" + power(w.e2) + "+" + power(w.e3);
}

bool ExtremalRecord::achieves(std::uint32_t n) const {
  return std::binary_search(achieved.begin(), achieved.end(), n);
}

std::optional<Witness> ExtremalRecord::witness_for(std::uint32_t n) const {
  for (const auto& [count, w] : count_witnesses) {
    if (count == n) return w;
  }
  return std::nullopt;
}

ExtremalRecord max_roots_for_prime(std::uint64_t p, Convention conv, unsigned workers) {
  if (!is_prime(p)) throw std::invalid_argument("max_roots_for_prime: p must be prime");
  if (p > budgets().search_p_max) {
    throw CapabilityError("p = " + std::to_string(p) + " exceeds the search budget " +
                          std::to_string(budgets().search_p_max));
  }
  auto t0 = std::chrono::steady_clock::now();
  ExtremalRecord rec;
  rec.p = p;
  rec.convention = conv;
  if (p == 2) return rec;  // no admissible trinomial

  const std::uint64_t M = p - 1;
  // Exponents live in [1, e_max]; the value M stands for p-1 (== 0 mod M).
  const std::uint64_t e_max = conv == Convention::strict ? M - 1 : M;
  if (e_max < 2) {
    rec.wall_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rec;
  }

  FieldPtr F = Field::make(p, 1);
  const std::vector<std::uint32_t>& exp = F->exp_table();

  std::vector<std::uint64_t> multipliers;
  for (std::uint64_t m = 2; m < M; ++m) {
    if (std::gcd(m, M) == 1) multipliers.push_back(m);
  }

  if (workers == 0) workers = 1;
  // Small primes are not worth the thread spawn.
  if (M * M / 2 < 200'000) workers = 1;

  std::atomic<std::uint64_t> next_a{1};
  std::mutex merge_mu;
  CountWitnesses global(p);
  std::uint64_t total_orbits = 0;

  auto worker_fn = [&] {
    std::vector<std::uint32_t> hist(p, 0), stamp(p, 0);
    std::uint32_t gen = 0;
    CountWitnesses local(p);
    std::uint64_t orbits = 0;

    for (std::uint64_t a = next_a.fetch_add(1); a < e_max; a = next_a.fetch_add(1)) {
      for (std::uint64_t b = a + 1; b <= e_max; ++b) {
        if (std::gcd(a, std::gcd(b, M)) != 1) continue;  // delta filter

        // Orbit representative test: (a, b) survives only if no coprime
        // multiplier maps it to a lexicographically smaller sorted pair.
        bool representative = true;
        for (std::uint64_t m : multipliers) {
          std::uint64_t ia = mulp(m, a, M);
          if (ia == 0) ia = M;
          std::uint64_t ib = mulp(m, b, M);
          if (ib == 0) ib = M;
          std::uint64_t lo = std::min(ia, ib), hi = std::max(ia, ib);
          if (lo < a || (lo == a && hi < b)) {
            representative = false;
            break;
          }
        }
        if (!representative) continue;
        ++orbits;

        // Value histogram: for x = g^i, gamma = -(x^a + x^b) solves
        // gamma + x^a + x^b = 0; one pass gives every gamma's root count.
        ++gen;
        const std::uint64_t sa = a % M, sb = b % M;
        std::uint64_t ja = 0, jb = 0;
        for (std::uint64_t i = 0; i < M; ++i) {
          std::uint64_t s = exp[ja] + exp[jb];
          if (s >= p) s -= p;
          std::uint64_t gamma = s == 0 ? 0 : p - s;
          if (gamma != 0) {
            if (stamp[gamma] != gen) {
              stamp[gamma] = gen;
              hist[gamma] = 1;
            } else {
              ++hist[gamma];
            }
          }
          ja += sa;
          if (ja >= M) ja -= M;
          jb += sb;
          if (jb >= M) jb -= M;
        }
        for (std::uint64_t gamma = 1; gamma < p; ++gamma) {
          std::uint32_t c = stamp[gamma] == gen ? hist[gamma] : 0;
          local.offer(c, a, b, gamma);
        }
      }
    }

    std::lock_guard<std::mutex> lock(merge_mu);
    global.merge(local);
    total_orbits += orbits;
  };

  if (workers == 1) {
    worker_fn();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker_fn);
    for (auto& th : pool) th.join();
  }

  for (std::uint64_t c = 0; c < p; ++c) {
    if (global.have[c]) {
      rec.achieved.push_back(static_cast<std::uint32_t>(c));
      rec.count_witnesses.emplace_back(static_cast<std::uint32_t>(c), global.wit[c]);
    }
  }
  rec.orbits_searched = total_orbits;
  if (!rec.achieved.empty()) {
    rec.max_count = rec.achieved.back();
    if (rec.max_count >= 1) {
      rec.witness = rec.witness_for(rec.max_count);
      // Re-verify by direct evaluation before the record leaves the search.
      const Witness& w = *rec.witness;
      if (w.gamma == 0 || std::gcd(w.e2, std::gcd(w.e3, M)) != 1 ||
          direct_root_count(p, w) != rec.max_count) {
        throw std::logic_error("witness failed independent re-verification at p = " +
                               std::to_string(p));
      }
    }
  }
  rec.wall_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

BruteResult brute_oracle_max(std::uint64_t p, Convention conv) {
  if (!is_prime(p) || p < 3) throw std::invalid_argument("brute_oracle_max: p must be an odd prime");
  if (p > budgets().brute_p_max) {
    throw CapabilityError("brute oracle gated to p <= " + std::to_string(budgets().brute_p_max));
  }
  const std::uint64_t M = p - 1;
  const std::uint64_t e_max = conv == Convention::strict ? M - 1 : M;
  FieldPtr F = Field::make(p, 1);
  const auto& exp = F->exp_table();

  std::vector<char> achieved_flags(p, 0);
  std::uint32_t max_count = 0;
  std::vector<std::uint32_t> hist(p, 0), stamp(p, 0);
  std::uint32_t gen = 0;

  for (std::uint64_t a = 1; a < e_max; ++a) {
    for (std::uint64_t b = a + 1; b <= e_max; ++b) {
      if (std::gcd(a, std::gcd(b, M)) != 1) continue;
      const std::uint64_t sa = a % M, sb = b % M;
      for (std::uint64_t c2 = 1; c2 < p; ++c2) {
        ++gen;
        std::uint64_t ja = 0, jb = 0;
        for (std::uint64_t i = 0; i < M; ++i) {
          std::uint64_t s = mulp(c2, exp[ja], p) + exp[jb];
          if (s >= p) s -= p;
          std::uint64_t c1 = s == 0 ? 0 : p - s;
          if (c1 != 0) {
            if (stamp[c1] != gen) {
              stamp[c1] = gen;
              hist[c1] = 1;
            } else {
              ++hist[c1];
            }
          }
          ja += sa;
          if (ja >= M) ja -= M;
          jb += sb;
          if (jb >= M) jb -= M;
        }
        for (std::uint64_t c1 = 1; c1 < p; ++c1) {
          std::uint32_t c = stamp[c1] == gen ? hist[c1] : 0;
          achieved_flags[c] = 1;
          max_count = std::max(max_count, c);
        }
      }
    }
  }

  BruteResult out;
  out.max_count = max_count;
  for (std::uint64_t c = 0; c < p; ++c) {
    if (achieved_flags[c]) out.achieved.push_back(static_cast<std::uint32_t>(c));
  }
  return out;
}

namespace {

nlohmann::json record_to_json(const ExtremalRecord& rec) {
  nlohmann::json j;
  j["p"] = rec.p;
  j["convention"] = convention_name(rec.convention);
  j["achieved"] = rec.achieved;
  j["max_count"] = rec.max_count;
  if (rec.witness) {
    j["witness"] = {rec.witness->gamma, rec.witness->e2, rec.witness->e3};
  } else {
    j["witness"] = nullptr;
  }
  nlohmann::json cw = nlohmann::json::array();
  for (const auto& [c, w] : rec.count_witnesses) {
    cw.push_back({c, w.gamma, w.e2, w.e3});
  }
  j["count_witnesses"] = std::move(cw);
  j["orbits"] = rec.orbits_searched;
  j["wall_s"] = rec.wall_s;
  return j;
}

std::optional<ExtremalRecord> record_from_json(const nlohmann::json& j) {
  ExtremalRecord rec;
  auto conv = convention_from_name(j.at("convention").get<std::string>());
  if (!conv) return std::nullopt;
  rec.convention = *conv;
  rec.p = j.at("p").get<std::uint64_t>();
  rec.achieved = j.at("achieved").get<std::vector<std::uint32_t>>();
  rec.max_count = j.at("max_count").get<std::uint32_t>();
  if (!j.at("witness").is_null()) {
    auto w = j.at("witness").get<std::vector<std::uint64_t>>();
    if (w.size() != 3) return std::nullopt;
    rec.witness = Witness{w[0], w[1], w[2]};
  }
  for (const auto& entry : j.value("count_witnesses", nlohmann::json::array())) {
    auto v = entry.get<std::vector<std::uint64_t>>();
    if (v.size() != 4) return std::nullopt;
    rec.count_witnesses.emplace_back(static_cast<std::uint32_t>(v[0]), Witness{v[1], v[2], v[3]});
  }
  rec.orbits_searched = j.value("orbits", 0ull);
  rec.wall_s = j.value("wall_s", 0.0);
  return rec;
}

}  // namespace

SearchLog::SearchLog(std::string path) : path_(std::move(path)) {
  if (path_.empty()) return;
  std::ifstream in(path_);
  if (!in) return;  // fresh log
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      auto rec = record_from_json(nlohmann::json::parse(line));
      if (rec) entries_[{rec->p, static_cast<int>(rec->convention)}] = *rec;
    } catch (const nlohmann::json::exception&) {
      // Tolerate a truncated trailing line from an interrupted run.
      continue;
    }
  }
}

const ExtremalRecord* SearchLog::find(std::uint64_t p, Convention c) const {
  auto it = entries_.find({p, static_cast<int>(c)});
  return it == entries_.end() ? nullptr : &it->second;
}

void SearchLog::append(const ExtremalRecord& rec) {
  auto key = std::make_pair(rec.p, static_cast<int>(rec.convention));
  if (entries_.count(key)) return;  // idempotent
  entries_[key] = rec;
  if (path_.empty()) return;
  std::ofstream out(path_, std::ios::app);
  if (!out) throw std::runtime_error("cannot open search log for append: " + path_);
  out << record_to_json(rec).dump() << "\n";
  out.flush();
  if (!out) throw std::runtime_error("write to search log failed: " + path_);
}

std::vector<ExtremalRecord> search_range(std::uint64_t pmin, std::uint64_t pmax, Convention conv,
                                         unsigned workers, SearchLog* log,
                                         const ProgressFn& progress) {
  std::vector<ExtremalRecord> out;
  for (std::uint64_t p : primes_in(std::max<std::uint64_t>(pmin, 3), pmax)) {
    if (log) {
      if (const ExtremalRecord* hit = log->find(p, conv)) {
        out.push_back(*hit);
        if (progress) progress(*hit, true);
        continue;
      }
    }
    ExtremalRecord rec = max_roots_for_prime(p, conv, workers);
    if (log) log->append(rec);
    out.push_back(rec);
    if (progress) progress(rec, false);
  }
  return out;
}

std::optional<std::uint64_t> least_prime_with_exactly_n(std::uint32_t n, std::uint64_t p_max,
                                                        Convention conv, SearchLog* log,
                                                        unsigned workers) {
  for (std::uint64_t p : primes_in(3, p_max)) {
    const ExtremalRecord* cached = log ? log->find(p, conv) : nullptr;
    if (cached) {
      if (cached->achieves(n)) return p;
      continue;
    }
    ExtremalRecord rec = max_roots_for_prime(p, conv, workers);
    if (log) log->append(rec);
    if (rec.achieves(n)) return p;
  }
  return std::nullopt;
}

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> ps;
  if (hi < 2) return ps;
  std::vector<char> sieve(hi + 1, 1);
  sieve[0] = sieve[1] = 0;
  for (std::uint64_t i = 2; i * i <= hi; ++i) {
    if (!sieve[i]) continue;
    for (std::uint64_t j = i * i; j <= hi; j += i) sieve[j] = 0;
  }
  for (std::uint64_t i = std::max<std::uint64_t>(lo, 2); i <= hi; ++i) {
    if (sieve[i]) ps.push_back(i);
  }
  return ps;
}

}  // namespace tnomial
