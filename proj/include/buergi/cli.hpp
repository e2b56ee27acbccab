#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "buergi/kunstweg.hpp"
#include "buergi/numeric.hpp"
#include "buergi/sine_table.hpp"

namespace buergi::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitConfig = 2;

enum class Command { fig4, iterate, table, compare, eigen, prost, export_history };
enum class OutputFormat { csv, tsv, sexagesimal };
enum class TableMethod { automatic, kunstweg, recurrence, ptolemy, reference };

struct RunConfig {
  Command command = Command::fig4;
  std::size_t n = 9;
  std::vector<Integer> seed;  // empty: linear ramp
  std::optional<int> iterations;
  std::optional<int> target_digits;
  int precision = 9;
  int step = 60;
  std::string radius = "60";
  OutputFormat format = OutputFormat::csv;
  std::optional<std::string> output_path;
  int places = 7;  // sexagesimal places
  bool ascii = false;
  TableMethod method = TableMethod::automatic;
  int alpha = 0;  // arcminutes
  int beta = 0;
  bool interpolate = false;
};

// Throws ConfigurationError when the config breaks its invariants.
void validate(const RunConfig& config);

// Every number of Buergi's worked example (n = 9, four steps).
struct Fig4Golden {
  // Result columns 1..5 including the leading zero.
  std::vector<std::vector<long>> columns;
  // Auxiliary columns, top to bottom.
  std::vector<std::vector<long>> auxiliaries;
};
const Fig4Golden& fig4_golden();

int cmd_fig4(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_iterate(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_table(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_compare(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_eigen(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_prost(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_export(const RunConfig& config, std::ostream& out, std::ostream& err);

// Dispatches on config.command; maps library errors to kExitConfig.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// `D°M′`, or `DdegM'` with ascii.
std::string angle_display(int arcminutes, bool ascii);

// CSV/TSV columns: angle_arcmin, angle_display, sine_decimal,
// sine_sexagesimal. Values are rounded to table.precision() decimal places
// before either notation is printed.
void write_table(std::ostream& out, const SineTable& table, OutputFormat format,
                 int places, bool ascii);

// Builds the table a `table` command asks for.
SineTable build_table(const RunConfig& config);

// Full command line entry point (argv[0] is the program name).
int main_entry(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err);

}  // namespace buergi::cli
