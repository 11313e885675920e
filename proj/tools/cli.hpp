#ifndef FHLAB_TOOLS_CLI_HPP_
#define FHLAB_TOOLS_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fhlab::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kInvalidInput = 2,
  kPrecisionUnreachable = 3,
};

/// Settings shared by every command. Sources, lowest priority first:
/// built-in defaults, FHLAB_DIGITS, the --config file, command-line flags.
struct RunConfig {
  int digits = 40;
  std::vector<int> n_list{8, 16, 32};
  std::vector<double> lambdas{0.3};
  std::vector<double> alphas{0.5};
  std::uint64_t seed = 1;
  long samples = 100000;
  std::string format = "csv";
  std::string out;
  std::string regime = "inside";
  int nu = 1;
  double step = 1e-6;
  int kmax = -1;
  bool timing = true;
  bool inject_fault = false;
};

/// Parses flat `key=value` lines (blank lines and `#` comments ignored) into
/// `config`. Keys are the long flag names without dashes. Throws InvalidInput.
void apply_config_text(const std::string& text, RunConfig& config);
void apply_setting(const std::string& key, const std::string& value, RunConfig& config);

std::vector<double> parse_double_list(const std::string& text);
std::vector<int> parse_int_list(const std::string& text);

/// One output table: column names plus rows of preformatted numeric literals
/// (an empty cell is emitted as an empty CSV field and as JSON null).
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

void write_csv(const Table& table, std::ostream& os);
void write_json(const Table& table, std::ostream& os);

/// Runs the command line; output goes to `out` (or the --out file),
/// diagnostics to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fhlab::cli

#endif  // FHLAB_TOOLS_CLI_HPP_
