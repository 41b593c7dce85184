#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polysieve/integer.hpp"

namespace polysieve::cli {

enum class Subcommand { rho, prop1, kernel, sieve, sharpness, corollary, suite };
enum class WeightMode { ones, file, random };
enum class OutputFormat { json, csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  Subcommand subcommand = Subcommand::suite;
  std::vector<Integer> polynomial{Integer(1), Integer(0), Integer(0)};
  std::uint64_t order = 20;   // Q, or D for corollary
  std::int64_t start = 0;     // M
  std::uint64_t length = 50;  // N
  WeightMode weights = WeightMode::ones;
  std::string weights_file;
  std::uint64_t seed = 1;
  OutputFormat output = OutputFormat::json;
  std::uint64_t budget = 10'000'000;
  std::string frequency = "0";  // c for the kernel subcommand
  std::uint64_t n = 2;          // sharpness exponent
  std::uint64_t q = 5;          // sharpness prime
  bool timing = true;
};

/// args excludes the program name. Throws UsageError.
RunConfig parse_config(const std::vector<std::string>& args);

const char* subcommand_name(Subcommand s);

/// Writes the report to `out`, diagnostics to `err`; returns the exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_config followed by run, mapping usage errors to exit status 2.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polysieve::cli
