// Report envelope and JSON/CSV/SVG rendering of the library's result types.
// Envelopes are byte-stable for identical inputs: object keys serialize
// sorted and wall time is opt-in.
#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "tnomial/coset_analysis.hpp"
#include "tnomial/extremal_search.hpp"
#include "tnomial/families.hpp"
#include "tnomial/number_theory.hpp"

namespace tnomial {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

struct Envelope {
  std::string command;
  nlohmann::json input = nlohmann::json::object();
  nlohmann::json payload = nlohmann::json::object();
  std::string status = "ok";  // ok | capability-error | failure
  std::optional<double> wall_s;
};

nlohmann::json envelope_json(const Envelope& env);

// ok -> 0, failure -> 1, capability-error -> 2.
int exit_code_for_status(const std::string& status);

nlohmann::json field_json(const Field& F);
nlohmann::json element_json(const Field& F, Element e);
nlohmann::json polynomial_json(const SparsePolynomial& f);
nlohmann::json rootset_json(const RootSet& Z, std::size_t list_limit);
nlohmann::json coset_report_json(const CosetReport& rep);
nlohmann::json family_verification_json(const FamilyVerification& v);
nlohmann::json extremal_record_json(const ExtremalRecord& rec);
nlohmann::json inequality_report_json(const InequalityReport& rep);
nlohmann::json minkowski_chain_json(const MinkowskiChain& chain);

struct FigurePoint {
  std::uint64_t x = 0;      // prime
  std::uint32_t n = 0;      // root count achieved first at x
  std::string provenance;   // computed | paper-constant
};

// The 16 reference points, ordered by p ascending (the published traversal).
std::vector<FigurePoint> reference_figure_points();

// Least prime per achieved count from a search log, ordered by p ascending.
std::vector<FigurePoint> figure_points_from_log(const SearchLog& log, Convention conv);

// CSV columns: x, n_points, curve_low = 0.91 ln x, curve_high = 1.77 ln x,
// provenance.
std::string figure_csv(const std::vector<FigurePoint>& points);

// Minimal polyline rendering, log-x scale.
std::string figure_svg(const std::vector<FigurePoint>& points);

}  // namespace tnomial
