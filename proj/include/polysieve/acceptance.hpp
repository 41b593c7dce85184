#pragma once

/**
 * @file acceptance.hpp
 * @brief The end-to-end verification corpus. Every criterion carries its
 * tolerance and runtime limit as constants; nothing here is tuned at run time.
 */

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "polysieve/polynomial.hpp"
#include "polysieve/sieve.hpp"

namespace polysieve::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  std::string statement;      // which identity or bound is exercised
  bool ok = false;            // checks passed and runtime within limit
  bool checks_ok = false;
  double seconds = 0.0;
  double time_limit = 0.0;    // 0 when the criterion has no runtime limit
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  std::string statement;
  double time_limit;
  std::function<bool(std::string& detail)> body;
};

const std::vector<Criterion>& criteria();
CriterionResult run(const Criterion& c);
/// Runs every criterion, writing one PASS/FAIL line per criterion to `log`
/// when it is non-null.
std::vector<CriterionResult> run_all(std::ostream* log = nullptr);
std::string format_line(const CriterionResult& r);

/// Integer-weight instances: degrees 1-4, |coefficients| <= 10, Q <= 40,
/// N <= 60, |M| <= 10^6. Deterministic for a given seed.
std::vector<SieveInstance> sieve_corpus(std::size_t count = 200, std::uint64_t seed = 20080101);
/// Degrees 1-4 with coefficients in [-20, 20].
std::vector<IntPolynomial> root_corpus(std::size_t count = 50, std::uint64_t seed = 424242);

}  // namespace polysieve::acceptance
