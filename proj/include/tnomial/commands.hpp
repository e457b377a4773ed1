// Command implementations behind the CLI: each builds a ReportEnvelope and
// maps library errors to envelope status (exceptions never escape).
#pragma once

#include <cstdint>
#include <string>

#include "tnomial/report.hpp"

namespace tnomial {

struct AnalyzeArgs {
  std::uint64_t p = 0;
  std::uint32_t k = 1;
  std::string polynomial;
};
Envelope cmd_analyze(const AnalyzeArgs& args);

struct SearchArgs {
  std::uint64_t pmin = 3;
  std::uint64_t pmax = 0;
  Convention convention = Convention::strict;
  unsigned workers = 1;
  std::string log_path;
  bool echo_progress = false;  // one line per prime on stderr
};
Envelope cmd_search(const SearchArgs& args);

struct TableArgs {
  std::uint32_t n_max = 0;
  std::uint64_t pmax = 0;
  Convention convention = Convention::strict;
  unsigned workers = 1;
  std::string log_path;
};
// payload.csv holds the n,p_n,witness table; rows also appear structured.
Envelope cmd_table(const TableArgs& args);

struct VerifyFamilyArgs {
  std::string kind;  // r | g | h | cyclo
  std::uint64_t t = 0, u = 0, p = 0, n = 0, q = 0;
  bool grid = false;
  std::uint64_t grid_qmax = 0;  // 0 = enumeration budget
  bool witness = true;          // r family: run the quotient-ring witness when in gate
};
Envelope cmd_verify_family(const VerifyFamilyArgs& args);

struct LeastSplitArgs {
  std::uint64_t n = 0;
  std::uint64_t pmax = 0;
};
Envelope cmd_least_split(const LeastSplitArgs& args);

struct InequalitiesArgs {
  std::uint64_t n_max = 30;
};
Envelope cmd_check_inequalities(const InequalitiesArgs& args);

struct FigureArgs {
  bool paper_data = false;
  std::string log_path;
  Convention convention = Convention::strict;
  std::string format = "csv";  // csv | svg
};
// payload.content holds the rendered file body.
Envelope cmd_figure(const FigureArgs& args);

}  // namespace tnomial
