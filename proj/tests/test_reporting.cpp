#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <sstream>

#include "tnomial/commands.hpp"
#include "tnomial/reference_data.hpp"

using namespace tnomial;

TEST_CASE("envelope is byte-stable and carries no wall time by default") {
  AnalyzeArgs args{47, 1, "1 + 4x - 5x^8"};
  Envelope a = cmd_analyze(args);
  Envelope b = cmd_analyze(args);
  CHECK(envelope_json(a).dump(2) == envelope_json(b).dump(2));
  CHECK_FALSE(envelope_json(a).contains("wall_s"));
  CHECK(envelope_json(a)["version"] == kToolVersion);
  CHECK(envelope_json(a)["schema_version"] == kSchemaVersion);
}

TEST_CASE("analyze: appendix row n = 5") {
  Envelope env = cmd_analyze(AnalyzeArgs{47, 1, "1 + 4x - 5x^8"});
  CHECK(env.status == "ok");
  CHECK(exit_code_for_status(env.status) == 0);
  const auto& payload = env.payload;
  CHECK(payload["roots"]["count_units"] == 5);
  CHECK(payload["coset_report"]["delta"] == 1);
  CHECK(payload["coset_report"]["C_exact"] == 1);
  bool saw_ko = false;
  for (const auto& b : payload["coset_report"]["bounds"]) {
    if (b["name"] == "ko_trinomial") {
      CHECK(b["applicable"] == true);
      CHECK(b["floor"] == 7);
      saw_ko = true;
    }
  }
  CHECK(saw_ko);
}

TEST_CASE("analyze: cyclotomic quotient over F_7") {
  Envelope env = cmd_analyze(AnalyzeArgs{7, 1, "1 + x^2 + x^4"});
  CHECK(env.status == "ok");
  CHECK(env.payload["roots"]["count_units"] == 4);
  CHECK(env.payload["coset_report"]["delta"] == 2);
  CHECK(env.payload["coset_report"]["cover"]["size"] == 2);
  CHECK(env.payload["roots"]["elements"] == nlohmann::json::array({2, 3, 4, 5}));
}

TEST_CASE("analyze: monomial is a capability error") {
  Envelope env = cmd_analyze(AnalyzeArgs{5, 1, "x^3"});
  CHECK(env.status == "capability-error");
  CHECK(exit_code_for_status(env.status) == 2);
}

TEST_CASE("analyze: parse failure carries the position") {
  Envelope env = cmd_analyze(AnalyzeArgs{5, 1, "1 + ?"});
  CHECK(env.status == "failure");
  CHECK(exit_code_for_status(env.status) == 1);
  CHECK(env.payload.contains("position"));
}

TEST_CASE("figure: reference points, ordering, band") {
  std::vector<FigurePoint> pts = reference_figure_points();
  REQUIRE(pts.size() == 16);
  CHECK(pts.front().x == 3);
  CHECK(pts.front().n == 1);
  // non-monotonic tail: 8581 (n = 16) comes before 10867 (n = 13)
  CHECK(pts[12].x == 8581);
  CHECK(pts[12].n == 16);
  CHECK(pts[13].x == 10867);
  CHECK(pts[13].n == 13);
  CHECK(pts.back().x == 71237);

  for (const FigurePoint& pt : pts) {
    double lx = std::log(static_cast<double>(pt.x));
    CHECK(kFigureCurveLow * lx <= pt.n);
    CHECK(pt.n <= kFigureCurveHigh * lx + 0.5);
  }

  std::string csv = figure_csv(pts);
  std::istringstream is(csv);
  std::string line;
  std::getline(is, line);
  CHECK(line == "x,n_points,curve_low,curve_high,provenance");
  std::size_t rows = 0;
  while (std::getline(is, line)) ++rows;
  CHECK(rows == 16);

  Envelope env = cmd_figure(FigureArgs{true, "", Convention::strict, "csv"});
  CHECK(env.status == "ok");
  CHECK(env.payload["content"].get<std::string>() == csv);
  CHECK(env.payload["provenance"] == "paper-constant");

  Envelope svg = cmd_figure(FigureArgs{true, "", Convention::strict, "svg"});
  CHECK(svg.status == "ok");
  CHECK(svg.payload["content"].get<std::string>().find("<svg") == 0);
}

TEST_CASE("figure: log mode needs data") {
  Envelope env = cmd_figure(FigureArgs{false, "", Convention::strict, "csv"});
  CHECK(env.status == "failure");

  std::string path = "test_fig_log.jsonl";
  std::remove(path.c_str());
  {
    SearchLog log(path);
    search_range(3, 30, Convention::extended, 1, &log);
  }
  Envelope ok = cmd_figure(FigureArgs{false, path, Convention::extended, "csv"});
  CHECK(ok.status == "ok");
  std::string content = ok.payload["content"].get<std::string>();
  CHECK(content.find("3,1,") != std::string::npos);   // p_1 = 3 extended
  CHECK(content.find("5,2,") != std::string::npos);   // p_2 = 5
  CHECK(content.find("11,3,") != std::string::npos);  // p_3 = 11
  CHECK(content.find("23,4,") != std::string::npos);  // p_4 = 23
  std::remove(path.c_str());
}

TEST_CASE("table matches the reference for small n") {
  TableArgs args;
  args.n_max = 4;
  args.pmax = 25;
  args.convention = Convention::extended;
  Envelope env = cmd_table(args);
  REQUIRE(env.status == "ok");
  std::string csv = env.payload["csv"].get<std::string>();
  std::istringstream is(csv);
  std::string line;
  std::getline(is, line);
  CHECK(line == "n,p_n,witness,provenance");
  std::vector<std::string> rows;
  while (std::getline(is, line)) rows.push_back(line);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].rfind("1,3,", 0) == 0);
  CHECK(rows[1].rfind("2,5,", 0) == 0);
  CHECK(rows[2].rfind("3,11,", 0) == 0);
  CHECK(rows[3].rfind("4,23,", 0) == 0);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(rows[i].find(",computed") != std::string::npos);
  }

  // every emitted table witness is re-parseable and has exactly n roots
  for (const auto& row : env.payload["rows"]) {
    std::uint64_t p = row["p_n"].get<std::uint64_t>();
    std::uint32_t n = row["n"].get<std::uint32_t>();
    auto F = Field::make(p, 1);
    SparsePolynomial w = parse_polynomial(F, row["witness"].get<std::string>());
    CHECK(roots_in_units(w).count() == n);
  }
}

TEST_CASE("verify-family command") {
  VerifyFamilyArgs args;
  args.kind = "g";
  args.t = 3;
  args.u = 1;
  args.p = 3;
  Envelope env = cmd_verify_family(args);
  CHECK(env.status == "ok");
  CHECK(env.payload["all_pass"] == true);
  CHECK(env.payload["results"][0]["observed_count"] == 4);

  VerifyFamilyArgs bad;
  bad.kind = "nope";
  CHECK(cmd_verify_family(bad).status == "failure");
}

TEST_CASE("least-split command") {
  LeastSplitArgs args{2, 100};
  Envelope env = cmd_least_split(args);
  CHECK(env.status == "ok");
  CHECK(env.payload["p"] == 11);

  Envelope miss = cmd_least_split(LeastSplitArgs{3, 50});
  CHECK(miss.status == "ok");
  CHECK(miss.payload["p"].is_null());
}

TEST_CASE("check-inequalities command") {
  Envelope env = cmd_check_inequalities(InequalitiesArgs{10});
  CHECK(env.status == "ok");
  CHECK(env.payload["any_fail"] == false);
  CHECK(env.payload["swan_resultants"].size() == 9);  // n = 2..10
  for (const auto& row : env.payload["swan_resultants"]) {
    CHECK(row["magnitude_equal"] == true);
  }
}

TEST_CASE("search command populates the log") {
  std::string path = "test_cmd_search.jsonl";
  std::remove(path.c_str());
  SearchArgs args;
  args.pmin = 3;
  args.pmax = 20;
  args.log_path = path;
  Envelope env = cmd_search(args);
  CHECK(env.status == "ok");
  CHECK(env.payload["computed"] == 7);  // 3 5 7 11 13 17 19
  Envelope env2 = cmd_search(args);
  CHECK(env2.payload["computed"] == 0);
  CHECK(env2.payload["from_log"] == 7);
  std::remove(path.c_str());
}
