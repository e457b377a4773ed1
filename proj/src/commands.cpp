#include "tnomial/commands.hpp"

#include <functional>
#include <iostream>
#include <sstream>

#include "tnomial/reference_data.hpp"

namespace tnomial {

using nlohmann::json;

namespace {

Envelope run(const std::string& name, json input,
             const std::function<json(std::string& status)>& body) {
  Envelope env;
  env.command = name;
  env.input = std::move(input);
  try {
    env.payload = body(env.status);
  } catch (const CapabilityError& e) {
    env.status = "capability-error";
    env.payload = json{{"error", e.what()}};
  } catch (const ParseError& e) {
    env.status = "failure";
    env.payload = json{{"error", e.what()}, {"position", e.position()}};
  } catch (const std::exception& e) {
    env.status = "failure";
    env.payload = json{{"error", e.what()}};
  }
  return env;
}

std::vector<FamilyInstance> family_grid(const std::string& kind, std::uint64_t qmax) {
  std::vector<FamilyInstance> out;
  if (kind == "r" || kind == "g") {
    bool is_r = kind == "r";
    for (std::uint64_t t = 2; t <= 5; ++t) {
      for (std::uint64_t u = 1; u <= 2; ++u) {
        std::uint64_t exp = is_r ? (t - 1) * u : t * u;
        // primes with p^exp <= qmax
        for (std::uint64_t p = 2;; ++p) {
          if (!is_prime(p)) continue;
          unsigned __int128 q = 1;
          bool over = false;
          for (std::uint64_t i = 0; i < exp && !over; ++i) {
            q *= p;
            if (q > qmax) over = true;
          }
          if (over) break;
          out.push_back(is_r ? make_r(t, u, p) : make_g(t, u, p));
        }
      }
    }
  } else if (kind == "h") {
    for (std::uint64_t n = 2; n <= 5; ++n) {
      for (std::uint64_t p : primes_in(n + 2, std::min<std::uint64_t>(qmax, 200))) {
        out.push_back(make_h(n, p));
      }
    }
  } else if (kind == "cyclo") {
    for (std::uint64_t q : std::vector<std::uint64_t>{7, 13, 31, 61, 127, 8, 9, 27, 25, 49}) {
      if (q > qmax) continue;
      for (std::uint64_t t : divisors(q - 1)) {
        if (t >= 2 && t <= 8 && t != q - 1) out.push_back(make_cyclotomic_quotient(q, t));
      }
    }
  } else {
    throw std::invalid_argument("unknown family kind: " + kind);
  }
  return out;
}

}  // namespace

Envelope cmd_analyze(const AnalyzeArgs& args) {
  json input{{"p", args.p}, {"k", args.k}, {"polynomial", args.polynomial}};
  return run("analyze", input, [&](std::string&) -> json {
    FieldPtr F = Field::make(args.p, args.k);
    SparsePolynomial parsed = parse_polynomial(F, args.polynomial);
    SparsePolynomial f = canonicalize(parsed);

    json payload;
    payload["field"] = field_json(*F);
    payload["canonical_polynomial"] = to_string(f);
    payload["provenance"] = "computed";

    if (f.term_count() < 2) {
      // Monomial c*x^e: after canonicalization a nonzero constant; the only
      // possible root is 0.
      throw CapabilityError("monomial input: root structure is trivial (0 is a root iff e_1 > 0); "
                            "coset bounds need t >= 2");
    }
    RootSet Z = roots_in_units(f);
    payload["roots"] = rootset_json(Z, 1000);
    payload["coset_report"] = coset_report_json(bounds_report(f));
    return payload;
  });
}

Envelope cmd_search(const SearchArgs& args) {
  json input{{"pmin", args.pmin},
             {"pmax", args.pmax},
             {"convention", convention_name(args.convention)},
             {"workers", args.workers},
             {"log", args.log_path}};
  return run("search", input, [&](std::string&) -> json {
    SearchLog log(args.log_path);
    std::size_t computed = 0, reused = 0;
    json records = json::array();
    search_range(args.pmin, args.pmax, args.convention, args.workers, &log,
                 [&](const ExtremalRecord& rec, bool from_log) {
                   (from_log ? reused : computed) += 1;
                   records.push_back(extremal_record_json(rec));
                   if (args.echo_progress) {
                     std::cerr << "p=" << rec.p << " max=" << rec.max_count
                               << (from_log ? " (log)" : "") << "\n";
                   }
                 });
    json payload;
    payload["records"] = std::move(records);
    payload["computed"] = computed;
    payload["from_log"] = reused;
    payload["provenance"] = "computed";
    return payload;
  });
}

Envelope cmd_table(const TableArgs& args) {
  json input{{"n_max", args.n_max},
             {"pmax", args.pmax},
             {"convention", convention_name(args.convention)},
             {"log", args.log_path}};
  return run("table", input, [&](std::string&) -> json {
    SearchLog log(args.log_path);
    std::vector<ExtremalRecord> records =
        search_range(3, args.pmax, args.convention, args.workers, &log);

    std::ostringstream csv;
    csv << "n,p_n,witness,provenance\n";
    json rows = json::array();
    for (std::uint32_t n = 1; n <= args.n_max; ++n) {
      const ExtremalRecord* hit = nullptr;
      for (const ExtremalRecord& rec : records) {
        if (rec.achieves(n)) {
          hit = &rec;
          break;
        }
      }
      json row;
      row["n"] = n;
      if (hit) {
        auto w = hit->witness_for(n);
        if (w) {
          // re-verify through the polynomial machinery before emitting
          FieldPtr F = Field::make(hit->p, 1);
          SparsePolynomial wp = make_polynomial(
              F, {{0, static_cast<std::int64_t>(w->gamma)}, {w->e2, 1}, {w->e3, 1}});
          if (roots_in_units(wp).count() != n) {
            throw std::logic_error("table witness for n = " + std::to_string(n) +
                                   " failed re-verification");
          }
        }
        row["p_n"] = hit->p;
        row["witness"] = w ? witness_text(*w) : "";
        row["provenance"] = "computed";
        csv << n << "," << hit->p << "," << (w ? witness_text(*w) : "") << ",computed\n";
      } else {
        row["p_n"] = nullptr;
        row["witness"] = "";
        row["provenance"] = "not-found";
        csv << n << ",,,not-found\n";
      }
      rows.push_back(std::move(row));
    }
    json payload;
    payload["rows"] = std::move(rows);
    payload["csv"] = csv.str();
    payload["provenance"] = "computed";
    return payload;
  });
}

Envelope cmd_verify_family(const VerifyFamilyArgs& args) {
  json input{{"kind", args.kind}, {"grid", args.grid}};
  if (args.t) input["t"] = args.t;
  if (args.u) input["u"] = args.u;
  if (args.p) input["p"] = args.p;
  if (args.n) input["n"] = args.n;
  if (args.q) input["q"] = args.q;
  return run("verify-family", input, [&](std::string& status) -> json {
    std::vector<FamilyInstance> instances;
    if (args.grid) {
      std::uint64_t qmax = args.grid_qmax ? args.grid_qmax : budgets().ext_enum_max;
      instances = family_grid(args.kind, qmax);
    } else if (args.kind == "r") {
      instances.push_back(make_r(args.t, args.u, args.p));
    } else if (args.kind == "g") {
      instances.push_back(make_g(args.t, args.u, args.p));
    } else if (args.kind == "h") {
      instances.push_back(make_h(args.n, args.p));
    } else if (args.kind == "cyclo") {
      instances.push_back(make_cyclotomic_quotient(args.q, args.t));
    } else {
      throw std::invalid_argument("unknown family kind: " + args.kind);
    }

    json results = json::array();
    bool all_pass = true;
    for (const FamilyInstance& inst : instances) {
      FamilyVerification v = verify_family(inst);
      json vj = family_verification_json(v);
      if (args.witness && inst.kind == FamilyKind::r) {
        std::uint64_t deg = inst.poly.degree();
        if (deg <= budgets().frobenius_deg_max) {
          bool ok = frobenius_divisibility_witness(inst.t, inst.u, inst.p);
          vj["frobenius_witness"] = ok;
          if (!ok) {
            v.pass = false;
            vj["pass"] = false;
          }
        } else {
          vj["frobenius_witness"] = nullptr;
        }
      }
      all_pass = all_pass && v.pass;
      results.push_back(std::move(vj));
    }
    json payload;
    payload["results"] = std::move(results);
    payload["instances"] = instances.size();
    payload["all_pass"] = all_pass;
    payload["provenance"] = "computed";
    if (!all_pass) status = "failure";
    return payload;
  });
}

Envelope cmd_least_split(const LeastSplitArgs& args) {
  json input{{"n", args.n}, {"pmax", args.pmax}};
  return run("least-split", input, [&](std::string&) -> json {
    auto p = least_split_prime(args.n, args.pmax);
    json payload;
    payload["n"] = args.n;
    payload["pmax"] = args.pmax;
    if (p) {
      payload["p"] = *p;
    } else {
      payload["p"] = nullptr;
      payload["note"] = "no prime <= pmax splits x^n - x - 1 completely";
    }
    payload["provenance"] = "computed";
    return payload;
  });
}

Envelope cmd_check_inequalities(const InequalitiesArgs& args) {
  json input{{"n_max", args.n_max}};
  return run("check-inequalities", input, [&](std::string& status) -> json {
    InequalityReport rep = proof_inequalities(args.n_max);
    json payload = inequality_report_json(rep);
    json swan = json::array();
    for (std::uint64_t n = 2; n <= std::min<std::uint64_t>(args.n_max, 20); ++n) {
      BigPoly h = BigPoly::h_trinomial(n);
      BigInt formula = swan_resultant(n);
      BigInt det = sylvester_resultant(h, h.derivative());
      swan.push_back({{"n", n},
                      {"formula", formula.get_str()},
                      {"sylvester", det.get_str()},
                      {"magnitude_equal", abs(formula) == abs(det)},
                      {"sign_equal", formula == det}});
    }
    payload["swan_resultants"] = std::move(swan);
    if (rep.any_fail) status = "failure";
    return payload;
  });
}

Envelope cmd_figure(const FigureArgs& args) {
  json input{{"paper_data", args.paper_data},
             {"log", args.log_path},
             {"convention", convention_name(args.convention)},
             {"format", args.format}};
  return run("figure", input, [&](std::string&) -> json {
    std::vector<FigurePoint> points;
    if (args.paper_data) {
      points = reference_figure_points();
    } else {
      if (args.log_path.empty()) {
        throw std::invalid_argument("figure needs --paper-data or --log PATH");
      }
      SearchLog log(args.log_path);
      points = figure_points_from_log(log, args.convention);
      if (points.size() < 2) {
        throw std::invalid_argument("search log has too few achieved counts for a figure");
      }
    }
    json payload;
    payload["points"] = points.size();
    payload["format"] = args.format;
    if (args.format == "svg") {
      payload["content"] = figure_svg(points);
    } else if (args.format == "csv") {
      payload["content"] = figure_csv(points);
    } else {
      throw std::invalid_argument("unknown figure format: " + args.format);
    }
    payload["provenance"] = args.paper_data ? "paper-constant" : "computed";
    return payload;
  });
}

}  // namespace tnomial
