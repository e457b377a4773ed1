#include "tnomial/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "tnomial/reference_data.hpp"

namespace tnomial {

using nlohmann::json;

json envelope_json(const Envelope& env) {
  json j;
  j["command"] = env.command;
  j["dataset_version"] = kReferenceDatasetVersion;
  j["input"] = env.input;
  j["payload"] = env.payload;
  j["schema_version"] = kSchemaVersion;
  j["status"] = env.status;
  j["version"] = kToolVersion;
  if (env.wall_s) j["wall_s"] = *env.wall_s;
  return j;
}

int exit_code_for_status(const std::string& status) {
  if (status == "ok") return 0;
  if (status == "capability-error") return 2;
  return 1;
}

json field_json(const Field& F) {
  json j;
  j["p"] = F.p();
  j["k"] = F.k();
  j["q"] = F.q();
  j["modulus"] = F.modulus();
  return j;
}

json element_json(const Field& F, Element e) {
  if (F.is_prime_field()) return e.code;
  return F.coords(e);
}

json polynomial_json(const SparsePolynomial& f) {
  json terms = json::array();
  for (const Term& t : f.terms()) {
    terms.push_back({t.exponent, f.field()->coords(t.coeff)});
  }
  json j;
  j["terms"] = std::move(terms);
  j["t"] = f.term_count();
  j["degree"] = f.degree();
  j["text"] = to_string(f);
  return j;
}

json rootset_json(const RootSet& Z, std::size_t list_limit) {
  json j;
  j["count_units"] = Z.count();
  j["includes_zero"] = Z.includes_zero;
  j["count_total"] = Z.count() + (Z.includes_zero ? 1 : 0);
  if (Z.count() <= list_limit) {
    json list = json::array();
    for (Element r : Z.roots) list.push_back(element_json(*Z.field, r));
    j["elements"] = std::move(list);
  } else {
    j["elements_omitted"] = true;
  }
  return j;
}

json coset_report_json(const CosetReport& rep) {
  json j;
  j["q"] = rep.q;
  j["t"] = rep.t;
  j["delta"] = rep.delta;
  j["C_exact"] = rep.C_exact;
  j["D_bound"] = rep.D_bound;
  j["root_count"] = rep.root_count;
  j["includes_zero"] = rep.includes_zero;
  j["strict_convention"] = rep.strict_convention;
  j["cover"] = {{"size", rep.cover_size},
                {"method", rep.cover_method == CoverMethod::exact ? "exact" : "greedy"}};

  // Fixed-order bound table with attained/slack annotation.
  json bounds = json::array();
  auto annotate = [&rep](json& b, std::uint64_t floor_v) {
    b["floor"] = floor_v;
    b["attained"] = rep.root_count == floor_v;
    b["slack"] = floor_v >= rep.root_count ? floor_v - rep.root_count : 0;
    b["violated"] = rep.root_count > floor_v;
  };
  {
    json b;
    b["name"] = "karpinski_shparlinski";
    b["applicable"] = true;
    b["rational"] = {{"num", rep.ks_num}, {"den", rep.ks_den}};
    b["real"] = rep.ks_real;
    annotate(b, rep.ks_floor);
    bounds.push_back(std::move(b));
  }
  {
    json b;
    b["name"] = "bcr_coset_count";
    b["applicable"] = true;
    b["real"] = rep.bcr.real;
    b["floor"] = rep.bcr.floor;
    b["cover_size"] = rep.cover_size;
    b["cover_within_bound"] = rep.cover_size <= rep.bcr.floor;
    bounds.push_back(std::move(b));
  }
  {
    json b;
    b["name"] = "ko_trinomial";
    if (rep.ko) {
      b["applicable"] = true;
      annotate(b, *rep.ko);
      b["real"] = static_cast<double>(*rep.ko);
    } else {
      b["applicable"] = false;
    }
    bounds.push_back(std::move(b));
  }
  {
    json b;
    b["name"] = "ko_sqrt";
    if (rep.ko_sqrt) {
      b["applicable"] = true;
      annotate(b, *rep.ko_sqrt);
      b["real"] = static_cast<double>(*rep.ko_sqrt);
    } else {
      b["applicable"] = false;
    }
    bounds.push_back(std::move(b));
  }
  {
    json b;
    b["name"] = "kelley";
    if (rep.kelley) {
      b["applicable"] = true;
      b["real"] = rep.kelley->real;
      annotate(b, rep.kelley->floor);
    } else {
      b["applicable"] = false;
    }
    bounds.push_back(std::move(b));
  }
  j["bounds"] = std::move(bounds);

  json skipped = json::object();
  for (const auto& [name, reason] : rep.skipped) skipped[name] = reason;
  j["skipped"] = std::move(skipped);
  return j;
}

json family_verification_json(const FamilyVerification& v) {
  json j;
  j["kind"] = family_kind_name(v.kind);
  json params = json::object();
  if (v.t) params["t"] = v.t;
  if (v.u) params["u"] = v.u;
  if (v.p) params["p"] = v.p;
  if (v.n) params["n"] = v.n;
  params["q"] = v.q;
  j["parameters"] = std::move(params);
  j["polynomial"] = v.polynomial;
  j["observed_count"] = v.observed_count;
  if (v.expected_count) {
    j["expected_count"] = *v.expected_count;
  } else {
    j["expected_count"] = nullptr;
  }
  j["delta"] = v.delta;
  j["C_exact"] = v.C;
  j["D_bound"] = v.D;
  j["cover"] = {{"size", v.cover_size},
                {"method", v.cover_method == CoverMethod::exact ? "exact" : "greedy"}};
  if (v.kind == FamilyKind::g) j["trace_roots_match"] = v.trace_roots_match;
  j["pass"] = v.pass;
  j["failures"] = v.failures;
  j["provenance"] = "computed";
  return j;
}

json extremal_record_json(const ExtremalRecord& rec) {
  json j;
  j["p"] = rec.p;
  j["convention"] = convention_name(rec.convention);
  j["achieved"] = rec.achieved;
  j["max_count"] = rec.max_count;
  if (rec.witness) {
    j["witness"] = {{"gamma", rec.witness->gamma},
                    {"e2", rec.witness->e2},
                    {"e3", rec.witness->e3},
                    {"text", witness_text(*rec.witness)}};
  } else {
    j["witness"] = nullptr;
  }
  j["orbits_searched"] = rec.orbits_searched;
  j["provenance"] = "computed";
  return j;
}

json minkowski_chain_json(const MinkowskiChain& chain) {
  json j;
  j["n"] = chain.n;
  j["exact"] = chain.exact.get_str();
  j["exact_real"] = chain.exact.get_d();
  j["middle"] = chain.middle;
  j["lower"] = chain.lower;
  j["first_link"] = verdict_name(chain.first_link);
  j["second_link"] = verdict_name(chain.second_link);
  return j;
}

json inequality_report_json(const InequalityReport& rep) {
  json rows = json::array();
  for (const InequalityRow& r : rep.rows) {
    rows.push_back({{"n", r.n},
                    {"name", r.name},
                    {"lhs", r.lhs},
                    {"rhs", r.rhs},
                    {"slack", r.slack},
                    {"verdict", verdict_name(r.verdict)}});
  }
  json j;
  j["rows"] = std::move(rows);
  j["any_fail"] = rep.any_fail;
  j["boundary_cases"] = rep.boundary_cases;
  j["provenance"] = "computed";
  return j;
}

std::vector<FigurePoint> reference_figure_points() {
  std::vector<FigurePoint> pts;
  for (const ReferenceTrinomial& row : kReferenceTrinomials) {
    pts.push_back(FigurePoint{row.p, row.n, "paper-constant"});
  }
  std::sort(pts.begin(), pts.end(),
            [](const FigurePoint& a, const FigurePoint& b) { return a.x < b.x; });
  return pts;
}

std::vector<FigurePoint> figure_points_from_log(const SearchLog& log, Convention conv) {
  // Least prime per count; the log map iterates in ascending (p, conv) order.
  std::map<std::uint32_t, std::uint64_t> least;
  for (const auto& [key, rec] : log.entries()) {
    if (rec.convention != conv) continue;
    for (std::uint32_t c : rec.achieved) {
      if (c == 0) continue;
      auto it = least.find(c);
      if (it == least.end() || rec.p < it->second) least[c] = rec.p;
    }
  }
  std::vector<FigurePoint> pts;
  for (const auto& [n, p] : least) pts.push_back(FigurePoint{p, n, "computed"});
  std::sort(pts.begin(), pts.end(),
            [](const FigurePoint& a, const FigurePoint& b) { return a.x < b.x; });
  return pts;
}

std::string figure_csv(const std::vector<FigurePoint>& points) {
  std::ostringstream os;
  os << "x,n_points,curve_low,curve_high,provenance\n";
  char buf[64];
  for (const FigurePoint& pt : points) {
    double lx = std::log(static_cast<double>(pt.x));
    os << pt.x << "," << pt.n << ",";
    std::snprintf(buf, sizeof buf, "%.6f", kFigureCurveLow * lx);
    os << buf << ",";
    std::snprintf(buf, sizeof buf, "%.6f", kFigureCurveHigh * lx);
    os << buf << "," << pt.provenance << "\n";
  }
  return os.str();
}

std::string figure_svg(const std::vector<FigurePoint>& points) {
  if (points.empty()) return "<svg xmlns=\"http://www.w3.org/2000/svg\"/>\n";
  const double W = 800, H = 400, margin = 40;
  double max_lx = 0, max_y = 0;
  for (const FigurePoint& pt : points) {
    max_lx = std::max(max_lx, std::log(static_cast<double>(pt.x)));
    max_y = std::max(max_y, static_cast<double>(pt.n));
  }
  max_y = std::max(max_y, kFigureCurveHigh * max_lx);
  auto X = [&](double lx) { return margin + (W - 2 * margin) * lx / max_lx; };
  auto Y = [&](double y) { return H - margin - (H - 2 * margin) * y / max_y; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
     << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // axes
  os << "<line x1=\"" << margin << "\" y1=\"" << H - margin << "\" x2=\"" << W - margin
     << "\" y2=\"" << H - margin << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\""
     << H - margin << "\" stroke=\"black\"/>\n";
  // bounding curves sampled on the log axis
  for (double c : {kFigureCurveLow, kFigureCurveHigh}) {
    os << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
    for (int i = 0; i <= 100; ++i) {
      double lx = max_lx * i / 100.0;
      os << X(lx) << "," << Y(c * lx) << " ";
    }
    os << "\"/>\n";
  }
  // data polyline in traversal order
  os << "<polyline fill=\"none\" stroke=\"gray\" stroke-width=\"1\" points=\"";
  for (const FigurePoint& pt : points) {
    os << X(std::log(static_cast<double>(pt.x))) << "," << Y(pt.n) << " ";
  }
  os << "\"/>\n";
  for (const FigurePoint& pt : points) {
    os << "<circle cx=\"" << X(std::log(static_cast<double>(pt.x))) << "\" cy=\"" << Y(pt.n)
       << "\" r=\"3\" fill=\"gray\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace tnomial
