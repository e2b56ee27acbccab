#include "buergi/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "buergi/classical.hpp"
#include "buergi/errors.hpp"
#include "buergi/prosthaphaeresis.hpp"
#include "buergi/sexagesimal.hpp"
#include "buergi/tablegen.hpp"

namespace buergi::cli {
namespace {

using kunstweg::DyadicVector;

Real parse_radius(const std::string& text) {
  Real radius;
  try {
    radius = Real(text);
  } catch (const std::exception&) {
    throw ConfigurationError("radius '" + text + "' is not a number");
  }
  if (radius <= 0) throw ConfigurationError("radius must be positive");
  return radius;
}

DyadicVector seed_for(const RunConfig& config) {
  if (config.seed.empty()) return DyadicVector::linear_ramp(config.n);
  return DyadicVector(config.seed);
}

std::string join(const std::vector<Integer>& values, bool leading_zero) {
  std::string out = leading_zero ? "0" : "";
  for (const auto& v : values) {
    if (!out.empty()) out += ',';
    out += v.str();
  }
  return out;
}

// Output stream for commands that honour --output.
class Sink {
 public:
  Sink(const std::optional<std::string>& path, std::ostream& fallback)
      : out_(&fallback) {
    if (path) {
      file_.open(*path, std::ios::binary | std::ios::trunc);
      if (!file_) throw std::ios_base::failure("cannot open '" + *path + "'");
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }
  void finish() {
    out_->flush();
    if (!*out_) throw std::ios_base::failure("write failed");
  }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

// Angle j * 90deg / n in degrees.
std::string part_angle(std::size_t j, std::size_t n) {
  return to_fixed(Real(90 * static_cast<long>(j)) / Real(static_cast<long>(n)), 4);
}

}  // namespace

void validate(const RunConfig& config) {
  if (config.n == 0) throw ConfigurationError("--n must be positive");
  if (!config.seed.empty() && config.seed.size() != config.n) {
    throw ConfigurationError("seed length must equal n");
  }
  if (config.iterations && *config.iterations <= 0) {
    throw ConfigurationError("--iterations must be positive");
  }
  if (config.target_digits && *config.target_digits <= 0) {
    throw ConfigurationError("--target-digits must be positive");
  }
  if (config.iterations && config.target_digits) {
    throw ConfigurationError("give either --iterations or --target-digits");
  }
  if (config.precision <= 0) throw ConfigurationError("--precision must be positive");
  check_precision(config.precision);
  if (config.step <= 0) throw ConfigurationError("--step must be positive");
  if (config.places <= 0) throw ConfigurationError("--places must be positive");
  parse_radius(config.radius);
}

const Fig4Golden& fig4_golden() {
  static const Fig4Golden golden{
      {
          {0, 2, 4, 6, 7, 8, 9, 10, 11, 12},
          {0, 63, 124, 181, 232, 276, 312, 339, 356, 362},
          {0, 2064, 4065, 5942, 7638, 9102, 10290, 11166, 11703, 11884},
          {0, 67912, 133760, 195543, 251384, 299587, 338688, 367499, 385144,
           391086},
          {0, 2235060, 4402208, 6435596, 8273441, 9859902, 11146776, 12094962,
           12675649, 12871192},
      },
      {
          {63, 61, 57, 51, 44, 36, 27, 17, 6},
          {2064, 2001, 1877, 1696, 1464, 1188, 876, 537, 181},
          {67912, 65848, 61783, 55841, 48203, 39101, 28811, 17645, 5942},
          {2235060, 2167148, 2033388, 1837845, 1586461, 1286874, 948186,
           580687, 195543},
      },
  };
  return golden;
}

int cmd_fig4(const RunConfig& config, std::ostream& out, std::ostream& err) {
  kunstweg::IterateOptions options;
  options.keep_history = true;
  const auto run = kunstweg::iterate(DyadicVector::buergi_seed(),
                                     kunstweg::MaxIterations{4}, options);
  const Fig4Golden& golden = fig4_golden();

  // Dyadic scale stays 0 throughout the worked example; any other outcome is
  // itself a mismatch.
  int matched = 0;
  int total = 0;
  std::vector<std::string> diffs;
  auto check = [&](const std::string& label, const std::vector<long>& expected,
                   const std::vector<Integer>& actual, unsigned scale) {
    for (std::size_t i = 0; i < expected.size(); ++i) {
      ++total;
      const Integer got = i < actual.size() ? actual[i] : Integer(-1);
      if (scale == 0 && got == expected[i]) {
        ++matched;
      } else {
        diffs.push_back(label + " row " + std::to_string(i) + ": expected " +
                        std::to_string(expected[i]) + ", got " + got.str() +
                        (scale ? " (scaled)" : ""));
      }
    }
  };
  for (std::size_t c = 0; c < golden.columns.size(); ++c) {
    std::vector<Integer> column{0};
    for (const auto& x : run.columns[c].numerators()) column.push_back(x);
    check("Col. " + std::to_string(c + 1), golden.columns[c], column,
          run.columns[c].scale_exp());
  }
  for (std::size_t c = 0; c < golden.auxiliaries.size(); ++c) {
    check("Aux. " + std::to_string(c + 1), golden.auxiliaries[c],
          run.auxiliaries[c].numerators, run.auxiliaries[c].scale_exp);
  }

  const std::string deg = config.ascii ? "deg" : "°";
  out << "Buergi's table, right angle in 9 parts (decimal system)\n\n";

  // Side-by-side layout: result cells on even rows, auxiliary cells on the
  // half rows between them.
  constexpr int kWidth = 11;
  out << std::setw(7) << "angle";
  for (std::size_t c = 0; c < run.columns.size(); ++c) {
    out << std::setw(kWidth) << ("Col. " + std::to_string(c + 1));
    if (c < run.auxiliaries.size()) out << std::setw(kWidth) << "";
  }
  out << '\n';
  for (std::size_t row = 0; row <= 18; ++row) {
    const bool half = row % 2 == 1;
    const std::size_t j = row / 2;  // result index (0..9); aux index j (0..8)
    std::ostringstream label;
    label << (half ? 5 * static_cast<int>(row) : 10 * static_cast<int>(j)) << deg;
    // setw counts bytes; the degree sign is two.
    out << std::setw(config.ascii ? 7 : 8) << label.str();
    for (std::size_t c = 0; c < run.columns.size(); ++c) {
      if (half) {
        out << std::setw(kWidth) << "";
      } else {
        out << std::setw(kWidth)
            << (j == 0 ? std::string("0") : run.columns[c].numerators()[j - 1].str());
      }
      if (c < run.auxiliaries.size()) {
        out << std::setw(kWidth)
            << (half ? run.auxiliaries[c].numerators[j].str() : std::string());
      }
    }
    out << '\n';
  }
  out << '\n';

  for (std::size_t c = 0; c < run.columns.size(); ++c) {
    out << "Col. " << c + 1 << ": " << join(run.columns[c].numerators(), true) << '\n';
    if (c < run.auxiliaries.size()) {
      out << "Aux. " << c + 1 << ": " << join(run.auxiliaries[c].numerators, false)
          << '\n';
    }
  }

  const DyadicVector& last = run.columns.back();
  const auto eight = kunstweg::normalize_fixed(last, 8);
  const auto nine = kunstweg::normalize_fixed(last, 9);
  out << "\nnormalized Col. 5: ";
  for (std::size_t j = 0; j < nine.size(); ++j) out << (j ? "," : "") << nine[j];
  out << "\nratios: sin 10" << deg << " = " << last.numerators()[0] << " : "
      << last.bottom() << " = " << eight[0] << ", sin 80" << deg << " = "
      << last.numerators()[7] << " : " << last.bottom() << " = " << nine[7]
      << '\n';

  out << "check: " << matched << " of " << total << " values match\n";
  if (!diffs.empty()) {
    for (const auto& d : diffs) err << d << '\n';
    return kExitMismatch;
  }
  return kExitOk;
}

int cmd_iterate(const RunConfig& config, std::ostream& out, std::ostream&) {
  const DyadicVector seed = seed_for(config);
  kunstweg::StopRule stop = kunstweg::TargetDigits{config.precision};
  if (config.iterations) stop = kunstweg::MaxIterations{*config.iterations};
  if (config.target_digits) stop = kunstweg::TargetDigits{*config.target_digits};

  kunstweg::IterateOptions options;
  options.report_digits = std::min(config.precision + kGuardDigits, kMaxPrecision);
  const auto run = kunstweg::iterate(seed, stop, options);
  const auto values = kunstweg::normalize(run.state, config.precision);
  const auto reference = kunstweg::reference_sine_vector(
      seed.size(), config.precision + kGuardDigits, kMaxPrecision);

  out << "n = " << seed.size() << ", iterations = " << run.report.iterations
      << ", scale = 2^-" << run.state.scale_exp() << '\n';
  out << "j,angle_deg,numerator,normalized,reference,abs_error\n";
  for (std::size_t j = 0; j < seed.size(); ++j) {
    out << j + 1 << ',' << part_angle(j + 1, seed.size()) << ','
        << run.state.numerators()[j] << ',' << to_fixed(values[j], config.precision)
        << ',' << to_fixed(reference[j], config.precision) << ','
        << to_scientific(boost::multiprecision::abs(values[j] - reference[j]))
        << '\n';
  }
  out << "max residual: " << to_scientific(run.report.normalized_residual)
      << ", digits correct: " << run.report.digits_correct << '\n';
  return kExitOk;
}

SineTable build_table(const RunConfig& config) {
  TableMethod method = config.method;
  if (method == TableMethod::automatic) {
    method = config.step == 1 ? TableMethod::recurrence : TableMethod::kunstweg;
  }
  switch (method) {
    case TableMethod::recurrence:
      if (config.step != 1) {
        throw ConfigurationError("the recurrence method produces 1' steps only");
      }
      return tablegen::minute_table(tablegen::sin1_minute_seed(config.precision),
                                    config.precision);
    case TableMethod::ptolemy:
      return classical::ptolemy_sine_table(parse_radius(config.radius),
                                           config.step, config.precision);
    case TableMethod::reference:
      return tablegen::reference_table(config.step, config.precision);
    case TableMethod::kunstweg:
    case TableMethod::automatic:
      break;
  }
  return tablegen::kunstweg_table(config.step, config.precision);
}

std::string angle_display(int arcminutes, bool ascii) {
  return std::to_string(arcminutes / 60) + (ascii ? "deg" : "°") +
         std::to_string(arcminutes % 60) + (ascii ? "'" : "′");
}

void write_table(std::ostream& out, const SineTable& table, OutputFormat format,
                 int places, bool ascii) {
  // Both notations render the value the table vouches for, i.e. rounded to
  // its precision, so no digit claims more accuracy than the method has.
  auto shown = [&](const SineEntry& entry) {
    return round_to_places(entry.value, table.precision());
  };
  if (format == OutputFormat::sexagesimal) {
    for (const auto& entry : table.entries()) {
      out << angle_display(entry.angle, ascii) << "  "
          << sexagesimal::format_sexagesimal(shown(entry), places) << '\n';
    }
    return;
  }
  const char sep = format == OutputFormat::csv ? ',' : '\t';
  out << "angle_arcmin" << sep << "angle_display" << sep << "sine_decimal" << sep
      << "sine_sexagesimal\n";
  for (const auto& entry : table.entries()) {
    out << entry.angle << sep << angle_display(entry.angle, ascii) << sep
        << to_fixed(shown(entry), table.precision()) << sep
        << sexagesimal::format_sexagesimal(shown(entry), places) << '\n';
  }
}

int cmd_table(const RunConfig& config, std::ostream& out, std::ostream&) {
  const SineTable table = build_table(config);
  Sink sink(config.output_path, out);
  write_table(sink.stream(), table, config.format, config.places, config.ascii);
  sink.finish();
  return kExitOk;
}

int cmd_compare(const RunConfig& config, std::ostream& out, std::ostream&) {
  const int step = config.step;
  const SineTable kunst = tablegen::kunstweg_table(step, config.precision);
  const SineTable ptolemy =
      classical::ptolemy_sine_table(parse_radius(config.radius), step, config.precision);
  const auto kunst_stats = tablegen::table_error_report(kunst, config.precision);
  const auto ptolemy_stats = tablegen::table_error_report(ptolemy, config.precision);

  Real cross_max = 0;
  Real cross_sq = 0;
  int cross_angle = 0;
  for (std::size_t i = 0; i < kunst.size(); ++i) {
    const Real d =
        boost::multiprecision::abs(kunst.entries()[i].value - ptolemy.entries()[i].value);
    if (d > cross_max) {
      cross_max = d;
      cross_angle = kunst.entries()[i].angle;
    }
    cross_sq += d * d;
  }
  const Real cross_rms = boost::multiprecision::sqrt(cross_sq / Real(kunst.size()));

  const Real kunst_budget = pow10(-config.precision);
  const bool kunst_ok = kunst_stats.max_abs_error < kunst_budget;
  const bool ptolemy_ok = ptolemy_stats.max_abs_error < classical::kPtolemyErrorBudget;

  out << "step " << step << "', precision " << config.precision << ", radius "
      << config.radius << '\n';
  out << "table,max_abs_error,angle_of_max,rms,budget,status\n";
  out << "kunstweg," << to_scientific(kunst_stats.max_abs_error) << ','
      << angle_display(kunst_stats.angle_of_max, config.ascii) << ','
      << to_scientific(kunst_stats.rms) << ',' << to_scientific(kunst_budget) << ','
      << (kunst_ok ? "ok" : "FAIL") << '\n';
  out << "ptolemy," << to_scientific(ptolemy_stats.max_abs_error) << ','
      << angle_display(ptolemy_stats.angle_of_max, config.ascii) << ','
      << to_scientific(ptolemy_stats.rms) << ','
      << to_scientific(classical::kPtolemyErrorBudget) << ','
      << (ptolemy_ok ? "ok" : "FAIL") << '\n';
  out << "kunstweg-vs-ptolemy," << to_scientific(cross_max) << ','
      << angle_display(cross_angle, config.ascii) << ',' << to_scientific(cross_rms)
      << ",,\n";
  return kunst_ok && ptolemy_ok ? kExitOk : kExitMismatch;
}

int cmd_eigen(const RunConfig& config, std::ostream& out, std::ostream&) {
  const DyadicVector seed = seed_for(config);
  const int iterations = config.iterations.value_or(12);
  kunstweg::IterateOptions options;
  options.report_digits = std::min(config.precision + kGuardDigits, kMaxPrecision);
  const auto run =
      kunstweg::iterate(seed, kunstweg::MaxIterations{iterations}, options);
  const Real& mu = run.report.closed_form_eigenvalue;

  out << "n = " << seed.size() << '\n';
  out << "closed form csc^2(pi/4n)/4 = " << to_fixed(mu, config.precision) << '\n';
  out << "k,bottom_ratio,relative_error,residual,digits_correct\n";
  for (int k = 0; k < run.report.iterations; ++k) {
    const Real& estimate = run.report.eigenvalue_estimates[static_cast<std::size_t>(k)];
    out << k + 1 << ',' << to_fixed(estimate, config.precision) << ','
        << to_scientific(boost::multiprecision::abs(estimate / mu - 1)) << ','
        << to_scientific(run.report.residuals[static_cast<std::size_t>(k)]) << ','
        << run.report.digits_history[static_cast<std::size_t>(k)] << '\n';
  }
  return kExitOk;
}

int cmd_prost(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const SineTable table = build_table(config);
  prosthaphaeresis::ProstOptions options;
  options.interpolate = config.interpolate;
  const auto result =
      prosthaphaeresis::prost_multiply(config.alpha, config.beta, table, options);
  const int digits = config.precision + kGuardDigits;
  const Real exact = kunstweg::reference_sine(config.alpha, digits, kMaxPrecision) *
                     kunstweg::reference_sine(config.beta, digits, kMaxPrecision);
  const Real error = boost::multiprecision::abs(result.product_estimate - exact);
  const int p = config.precision;

  out << "sin " << angle_display(config.alpha, config.ascii) << " * sin "
      << angle_display(config.beta, config.ascii) << " = 1/2 [sin "
      << angle_display(std::abs(result.lookup_angles[0]), config.ascii) << " - "
      << (result.lookup_angles[1] < 0 ? "(-sin " : "sin ")
      << angle_display(std::abs(result.lookup_angles[1]), config.ascii)
      << (result.lookup_angles[1] < 0 ? ")" : "") << "]\n";
  out << "lookups: " << to_fixed(result.table_lookups[0], p) << ", "
      << to_fixed(result.table_lookups[1], p) << '\n';
  out << "estimate: " << to_fixed(result.product_estimate, p) << '\n';
  out << "direct product: " << to_fixed(exact, p) << '\n';
  out << "error: " << to_scientific(error) << " (bound "
      << to_scientific(result.absolute_error_bound) << ")\n";
  if (error > result.absolute_error_bound) {
    err << "estimate outside its error bound\n";
    return kExitMismatch;
  }
  return kExitOk;
}

int cmd_export(const RunConfig& config, std::ostream& out, std::ostream&) {
  if (config.format == OutputFormat::sexagesimal) {
    throw ConfigurationError("export supports csv and tsv only");
  }
  kunstweg::IterateOptions options;
  options.keep_history = true;
  const auto run = kunstweg::iterate(
      seed_for(config), kunstweg::MaxIterations{config.iterations.value_or(4)},
      options);
  const char sep = config.format == OutputFormat::csv ? ',' : '\t';
  Sink sink(config.output_path, out);
  std::ostream& os = sink.stream();
  os << "column" << sep << "kind" << sep << "index" << sep << "numerator" << sep
     << "scale_exp\n";
  for (std::size_t c = 0; c < run.columns.size(); ++c) {
    const auto& column = run.columns[c];
    for (std::size_t j = 0; j < column.size(); ++j) {
      os << c + 1 << sep << "result" << sep << j + 1 << sep << column.numerators()[j]
         << sep << column.scale_exp() << '\n';
    }
    if (c < run.auxiliaries.size()) {
      const auto& aux = run.auxiliaries[c];
      for (std::size_t j = 0; j < aux.size(); ++j) {
        os << c + 1 << sep << "auxiliary" << sep << j + 1 << sep
           << aux.numerators[j] << sep << aux.scale_exp << '\n';
      }
    }
  }
  sink.finish();
  return kExitOk;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    switch (config.command) {
      case Command::fig4: return cmd_fig4(config, out, err);
      case Command::iterate: return cmd_iterate(config, out, err);
      case Command::table: return cmd_table(config, out, err);
      case Command::compare: return cmd_compare(config, out, err);
      case Command::eigen: return cmd_eigen(config, out, err);
      case Command::prost: return cmd_prost(config, out, err);
      case Command::export_history: return cmd_export(config, out, err);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::ios_base::failure& e) {
    err << "I/O error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}

int main_entry(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Sine tables by Buergi's Kunstweg and the classical chord method",
               "buergi"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::vector<std::string> seed_text;
  std::string format_text = "csv";
  std::string method_text = "auto";
  std::optional<int> n;

  const std::map<std::string, OutputFormat> formats{
      {"csv", OutputFormat::csv},
      {"tsv", OutputFormat::tsv},
      {"sexagesimal", OutputFormat::sexagesimal}};
  const std::map<std::string, TableMethod> methods{
      {"auto", TableMethod::automatic},       {"kunstweg", TableMethod::kunstweg},
      {"recurrence", TableMethod::recurrence}, {"ptolemy", TableMethod::ptolemy},
      {"reference", TableMethod::reference}};

  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--n", n, "Number of parts of the right angle");
    sub->add_option("--seed", seed_text, "Comma-separated non-negative integers")
        ->delimiter(',');
  };
  auto add_precision = [&](CLI::App* sub) {
    sub->add_option("--precision", config.precision, "Decimal places");
  };
  auto add_table = [&](CLI::App* sub) {
    sub->add_option("--step", config.step, "Table step in arcminutes");
    sub->add_option("--method", method_text,
                    "auto, kunstweg, recurrence, ptolemy or reference");
    sub->add_option("--radius", config.radius, "Chord radius for ptolemy");
  };

  auto* fig4 = app.add_subcommand("fig4", "Reproduce the n = 9 worked example");
  fig4->callback([&] { config.command = Command::fig4; });

  auto* iterate = app.add_subcommand("iterate", "Run the iteration and report");
  add_seed(iterate);
  add_precision(iterate);
  iterate->add_option("--iterations", config.iterations);
  iterate->add_option("--target-digits", config.target_digits);
  iterate->callback([&] { config.command = Command::iterate; });

  auto* table = app.add_subcommand("table", "Generate a sine table");
  add_precision(table);
  add_table(table);
  table->add_option("--format", format_text, "csv, tsv or sexagesimal");
  table->add_option("--places", config.places, "Sexagesimal places");
  table->add_option("--output", config.output_path, "Output file (default stdout)");
  table->callback([&] { config.command = Command::table; });

  auto* compare = app.add_subcommand("compare", "Kunstweg vs Ptolemy vs reference");
  add_precision(compare);
  compare->add_option("--step", config.step, "Grid step in arcminutes");
  compare->add_option("--radius", config.radius, "Chord radius");
  compare->callback([&] { config.command = Command::compare; });

  auto* eigen = app.add_subcommand("eigen", "Dominant eigenvalue diagnostics");
  add_seed(eigen);
  add_precision(eigen);
  eigen->add_option("--iterations", config.iterations);
  eigen->callback([&] { config.command = Command::eigen; });

  auto* prost = app.add_subcommand("prost", "Multiply two sines by prosthaphaeresis");
  add_precision(prost);
  add_table(prost);
  prost->add_option("--alpha", config.alpha, "First angle in arcminutes")->required();
  prost->add_option("--beta", config.beta, "Second angle in arcminutes")->required();
  prost->add_flag("--interpolate", config.interpolate, "Interpolate off-grid lookups");
  prost->callback([&] { config.command = Command::prost; });

  auto* history = app.add_subcommand("export", "Export every column of a run");
  add_seed(history);
  history->add_option("--iterations", config.iterations);
  history->add_option("--format", format_text, "csv or tsv");
  history->add_option("--output", config.output_path, "Output file (default stdout)");
  history->callback([&] { config.command = Command::export_history; });

  app.add_flag("--ascii", config.ascii, "ASCII degree and minute marks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    for (const auto& text : seed_text) {
      if (text.empty() ||
          !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); })) {
        throw ConfigurationError("seed entry '" + text + "' is not a non-negative integer");
      }
      config.seed.emplace_back(text);
    }
    if (n) {
      if (*n <= 0) throw ConfigurationError("--n must be positive");
      config.n = static_cast<std::size_t>(*n);
    } else if (!config.seed.empty()) {
      config.n = config.seed.size();
    }
    auto format = formats.find(format_text);
    if (format == formats.end()) throw ConfigurationError("unknown format " + format_text);
    config.format = format->second;
    auto method = methods.find(method_text);
    if (method == methods.end()) throw ConfigurationError("unknown method " + method_text);
    config.method = method->second;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return run(config, out, err);
}

}  // namespace buergi::cli
