// tnomial: root and coset structure of sparse polynomials over finite
// fields, extremal trinomial search, and the supporting number-theoretic
// checks. Every subcommand prints a JSON report envelope; table and figure
// can emit raw CSV/SVG for piping.
#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "tnomial/commands.hpp"

namespace {

int emit(tnomial::Envelope env, bool timing, double wall_s) {
  if (timing) env.wall_s = wall_s;
  std::cout << tnomial::envelope_json(env).dump(2) << "\n";
  return tnomial::exit_code_for_status(env.status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sparse polynomial root counting and coset analysis over finite fields"};
  app.require_subcommand(1);

  bool timing = false;
  std::uint64_t budget = 0;
  app.add_flag("--timing", timing, "include wall time in the report envelope (breaks byte-stability)");
  app.add_option("--budget", budget,
                 "override the enumeration budgets (field elements / search prime cap)");

  tnomial::AnalyzeArgs analyze_args;
  auto* analyze = app.add_subcommand("analyze", "roots and coset bounds of a t-nomial");
  analyze->add_option("-p,--characteristic", analyze_args.p, "prime p")->required();
  analyze->add_option("-k,--extension", analyze_args.k, "extension degree k (default 1)");
  analyze->add_option("polynomial", analyze_args.polynomial, "e.g. \"1 + 4x - 5x^8\"")->required();

  tnomial::SearchArgs search_args;
  std::string search_conv = "strict";
  auto* search = app.add_subcommand("search", "extremal trinomial search over a prime range");
  search->add_option("--pmin", search_args.pmin, "first prime (default 3)");
  search->add_option("--pmax", search_args.pmax, "last prime")->required();
  search->add_option("--workers", search_args.workers, "worker threads (default 1)");
  search->add_option("--convention", search_conv, "strict | extended (default strict)");
  search->add_option("--log", search_args.log_path, "JSON-lines checkpoint log");
  search->add_flag("--progress", search_args.echo_progress, "progress lines on stderr");

  tnomial::TableArgs table_args;
  std::string table_conv = "strict";
  std::string table_format = "csv";
  auto* table = app.add_subcommand("table", "least prime p_n admitting exactly n roots");
  table->add_option("--n-max", table_args.n_max, "largest n")->required();
  table->add_option("--pmax", table_args.pmax, "search ceiling")->required();
  table->add_option("--workers", table_args.workers, "worker threads");
  table->add_option("--convention", table_conv, "strict | extended");
  table->add_option("--log", table_args.log_path, "JSON-lines checkpoint log");
  table->add_option("--format", table_format, "csv | json (default csv)");

  tnomial::VerifyFamilyArgs vf_args;
  auto* vf = app.add_subcommand("verify-family", "verify an explicit family instance or grid");
  vf->add_option("--kind", vf_args.kind, "r | g | h | cyclo")->required();
  vf->add_option("--t", vf_args.t, "term count t");
  vf->add_option("--u", vf_args.u, "Frobenius step u");
  vf->add_option("--p", vf_args.p, "prime p");
  vf->add_option("--n", vf_args.n, "degree n (h family)");
  vf->add_option("--q", vf_args.q, "field size q (cyclotomic family)");
  vf->add_flag("--grid", vf_args.grid, "all instances within budget");
  vf->add_option("--qmax", vf_args.grid_qmax, "grid field-size cap (default: budget)");

  tnomial::LeastSplitArgs ls_args;
  auto* ls = app.add_subcommand("least-split", "least prime where x^n - x - 1 splits completely");
  ls->add_option("--n", ls_args.n, "degree n >= 2")->required();
  ls->add_option("--pmax", ls_args.pmax, "search ceiling")->required();

  tnomial::InequalitiesArgs ineq_args;
  auto* ineq = app.add_subcommand("check-inequalities", "discriminant-chain inequality suite");
  ineq->add_option("--nmax", ineq_args.n_max, "largest n (default 30)");

  tnomial::FigureArgs fig_args;
  std::string fig_conv = "strict";
  std::string fig_output = "-";
  auto* fig = app.add_subcommand("figure", "emit the n-vs-ln p point data with both log curves");
  fig->add_flag("--paper-data", fig_args.paper_data, "use the embedded reference dataset");
  fig->add_option("--log", fig_args.log_path, "derive points from a search log");
  fig->add_option("--convention", fig_conv, "strict | extended (log mode)");
  fig->add_option("--format", fig_args.format, "csv | svg (default csv)");
  fig->add_option("--output", fig_output, "output file, '-' for raw stdout (default)");

  CLI11_PARSE(app, argc, argv);

  if (budget > 0) {
    tnomial::budgets().prime_enum_max = budget;
    tnomial::budgets().ext_enum_max = budget;
    tnomial::budgets().search_p_max = std::max(tnomial::budgets().search_p_max, budget);
  }

  auto parse_conv = [](const std::string& name) {
    auto c = tnomial::convention_from_name(name);
    if (!c) throw CLI::ValidationError("--convention", "must be 'strict' or 'extended'");
    return *c;
  };

  auto t0 = std::chrono::steady_clock::now();
  tnomial::Envelope env;
  bool raw_emitted = false;
  int raw_rc = 0;

  if (*analyze) {
    env = tnomial::cmd_analyze(analyze_args);
  } else if (*search) {
    search_args.convention = parse_conv(search_conv);
    env = tnomial::cmd_search(search_args);
  } else if (*table) {
    table_args.convention = parse_conv(table_conv);
    env = tnomial::cmd_table(table_args);
    if (table_format == "csv" && env.status == "ok") {
      std::cout << env.payload["csv"].get<std::string>();
      raw_emitted = true;
      raw_rc = 0;
    }
  } else if (*vf) {
    env = tnomial::cmd_verify_family(vf_args);
  } else if (*ls) {
    env = tnomial::cmd_least_split(ls_args);
  } else if (*ineq) {
    env = tnomial::cmd_check_inequalities(ineq_args);
  } else if (*fig) {
    fig_args.convention = parse_conv(fig_conv);
    env = tnomial::cmd_figure(fig_args);
    if (env.status == "ok") {
      const std::string content = env.payload["content"].get<std::string>();
      if (fig_output == "-") {
        std::cout << content;
        raw_emitted = true;
      } else {
        std::ofstream out(fig_output, std::ios::binary);
        if (!out) {
          std::cerr << "cannot write " << fig_output << "\n";
          return 1;
        }
        out << content;
        env.payload.erase("content");
        env.payload["output"] = fig_output;
      }
    }
  }

  double wall_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (raw_emitted) return raw_rc;
  return emit(std::move(env), timing, wall_s);
}
