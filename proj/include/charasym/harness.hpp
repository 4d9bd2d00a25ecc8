#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace charasym {

// Bad command-line input or an invalid configuration; the CLI exits with 2.
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

enum class Command { Eval, AsmCount, AsymptGue, Suite };

std::string command_name(Command c);

struct RunConfig {
  Command command = Command::Eval;
  // eval
  std::string family = "schur";  // schur, schur_q, symplectic, symplectic_q, jacobi
  std::string lambda;            // "3,1,0"; padded with zeros up to N
  std::vector<std::string> x;    // rationals such as "3", "-1/2", "0.25"
  long N = 0;                    // signature length; 0 means len(lambda)
  std::string q = "1/2", a = "0", b = "0";
  // asm count
  long n = 0;
  // asympt gue
  std::string profile = "halfstair";
  double h_re = 0, h_im = 0;
  // suite
  std::string suite;
  int precision_bits = 0;  // 0: the default precision (CHARASYM_PRECISION or 128)
  uint64_t seed = 20240229;
  std::string output_path;  // empty: stdout
  std::string format = "json";

  void validate() const;  // UsageError
  nlohmann::ordered_json to_json() const;
};

// One row of a convergence ladder or a comparison table.
struct LadderRow {
  std::string series;
  long size = 0;      // N, n or L
  double param = 0;   // h, s, y, x, ...
  double value = 0;
  double reference = 0;
  double error = 0;
};

struct CheckResult {
  int criterion = 0;
  std::string name;
  bool pass = false;
  std::string summary;           // one line with the decisive numbers
  nlohmann::ordered_json data;   // every number behind the verdict
  std::vector<LadderRow> ladder;
};

struct SuiteReport {
  std::string name;
  std::vector<CheckResult> checks;
  bool passed() const;
};

const std::vector<std::string>& suite_names();
std::vector<int> suite_criteria(const std::string& suite);  // UsageError for unknown names

// Runs one acceptance criterion (1..11). Tolerances and grids are fixed here;
// the seed only feeds the sampling check.
CheckResult run_criterion(int id, uint64_t seed);
SuiteReport run_suite(const std::string& name, uint64_t seed);

struct RunOutput {
  nlohmann::ordered_json result;
  std::vector<LadderRow> ladder;
  bool ok = true;  // false when a suite check failed
};

// Dispatches to the library; library errors propagate as charasym::Error.
RunOutput run(const RunConfig& config);

// Full artifact text: config echo and versions, then the result. CSV output
// carries the same header as '#' comment lines above the column header.
std::string render(const RunConfig& config, const RunOutput& out);

std::string library_version();

}  // namespace charasym
