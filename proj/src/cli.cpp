#include "polysieve/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "polysieve/acceptance.hpp"
#include "polysieve/arith.hpp"
#include "polysieve/characters.hpp"
#include "polysieve/errors.hpp"
#include "polysieve/farey.hpp"
#include "polysieve/polyroots.hpp"
#include "polysieve/sharpness.hpp"
#include "polysieve/sieve.hpp"

namespace polysieve::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kRatioCeiling = 10.0;

Integer parse_integer(const std::string& text, const std::string& what) {
  std::size_t pos = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) pos = 1;
  if (pos == text.size() || text.find_first_not_of("0123456789", pos) != std::string::npos)
    throw UsageError("malformed " + what + ": '" + text + "'");
  return Integer(text[0] == '+' ? text.substr(1) : text);
}

std::vector<Integer> parse_polynomial(const std::string& text) {
  std::vector<Integer> coeffs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) coeffs.push_back(parse_integer(item, "polynomial coefficient"));
  if (text.empty() || coeffs.empty() || text.back() == ',') throw UsageError("malformed polynomial: '" + text + "'");
  if (coeffs.size() > 1 && coeffs.front() == 0) throw UsageError("polynomial has a zero leading coefficient");
  return coeffs;
}

// Integers that fit in 64 bits are written as numbers, larger ones as strings.
Json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return polysieve::to_string(v);
}

std::string rational_string(const Rational& r) {
  return polysieve::to_string(boost::multiprecision::numerator(r)) + "/" +
         polysieve::to_string(boost::multiprecision::denominator(r));
}

Json finite(double x) {
  if (!std::isfinite(x)) throw ResourceError("non-finite value produced");
  return x;
}

Json check(const std::string& name, const std::string& ref, bool ok) {
  return Json{{"name", name}, {"paper_ref", ref}, {"ok", ok}};
}

std::string join(const std::vector<Integer>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + polysieve::to_string(v[i]);
  return s;
}

std::vector<std::complex<double>> load_weights(const RunConfig& c) {
  std::vector<std::complex<double>> w(c.length, 0.0);
  switch (c.weights) {
    case WeightMode::ones:
      std::fill(w.begin(), w.end(), 1.0);
      break;
    case WeightMode::random: {
      std::mt19937_64 rng(c.seed);
      for (auto& x : w) x = static_cast<double>(static_cast<std::int64_t>(rng() % 21) - 10);
      break;
    }
    case WeightMode::file: {
      std::ifstream in(c.weights_file);
      if (!in) throw UsageError("cannot open weight file '" + c.weights_file + "'");
      std::string line;
      std::size_t line_no = 0;
      while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::stringstream ss(line);
        std::string fi, fre, fim;
        std::getline(ss, fi, ',');
        std::getline(ss, fre, ',');
        std::getline(ss, fim, ',');
        try {
          const long long i = std::stoll(fi);
          const double re = std::stod(fre);
          const double im = fim.empty() ? 0.0 : std::stod(fim);
          const long long first = c.start + 1;
          if (i < first || i >= first + static_cast<long long>(c.length))
            throw UsageError("weight index " + std::to_string(i) + " outside the interval");
          if (!std::isfinite(re) || !std::isfinite(im)) throw UsageError("non-finite weight");
          w[static_cast<std::size_t>(i - first)] = {re, im};
        } catch (const std::logic_error&) {
          throw UsageError("malformed weight file line " + std::to_string(line_no));
        }
      }
      break;
    }
  }
  return w;
}

SieveInstance make_instance(const RunConfig& c) {
  return SieveInstance(IntPolynomial(c.polynomial), c.order, c.start, c.length, load_weights(c));
}

Json inputs_json(const RunConfig& c) {
  Json in;
  switch (c.subcommand) {
    case Subcommand::rho:
    case Subcommand::prop1:
      in = {{"poly", join(c.polynomial)}, {"Q", c.order}};
      break;
    case Subcommand::kernel:
      in = {{"c", c.frequency}, {"Q", c.order}};
      break;
    case Subcommand::sieve:
    case Subcommand::corollary: {
      in = {{"poly", join(c.polynomial)}, {c.subcommand == Subcommand::sieve ? "Q" : "D", c.order},
            {"M", c.start},           {"N", c.length}};
      const char* mode = c.weights == WeightMode::ones ? "ones" : c.weights == WeightMode::file ? "file" : "random";
      in["weights"] = mode;
      if (c.weights == WeightMode::file) in["weights_file"] = c.weights_file;
      if (c.weights == WeightMode::random) in["seed"] = c.seed;
      in["budget"] = c.budget;
      break;
    }
    case Subcommand::sharpness:
      in = {{"n", c.n}, {"q", c.q}};
      break;
    case Subcommand::suite:
      in = Json::object();
      break;
  }
  return in;
}

void run_rho(const RunConfig& c, Json& results, Json& checks) {
  const IntPolynomial poly(c.polynomial);
  const auto profile = rho_profile(poly, c.order);
  Json table = Json::array();
  for (std::uint64_t m = 1; m <= c.order; ++m) table.push_back(profile.rho[m]);
  results["rho"] = table;
  results["partial_sum"] = finite(profile.partial_sum.value);
  if (profile.partial_sum.exact) results["partial_sum_exact"] = rational_string(*profile.partial_sum.exact);

  bool prime_ok = true, spacing_ok = true;
  for (std::uint64_t p = 2; p <= c.order; ++p) {
    if (!is_prime(p) || mod_u64(poly.leading(), p) == 0) continue;
    if (poly.degree() >= 1) prime_ok &= profile.rho[p] <= poly.degree();
    for (std::uint64_t pm = p, m = 1; pm <= c.order; pm *= p, ++m)
      spacing_ok &= spacing_check(poly, p, static_cast<unsigned>(m));
  }
  checks.push_back(check("root count at primes", "rho(p) <= k for p not dividing c0", prime_ok));
  checks.push_back(check("root spacing", "k+2 roots per window of length p^a(m,k)", spacing_ok));
}

void run_prop1(const RunConfig& c, Json& results, Json& checks) {
  const IntPolynomial poly(c.polynomial);
  const auto sum = prop1_sum(poly, c.order);
  const auto majorant = euler_majorant(poly, c.order);
  results["sum"] = finite(sum.value);
  results["euler_majorant"] = finite(majorant.value);
  results["envelope_exponent"] = envelope_exponent(poly);
  if (sum.exact) results["sum_exact"] = rational_string(*sum.exact);
  if (majorant.exact) results["euler_majorant_exact"] = rational_string(*majorant.exact);
  checks.push_back(check("partial sum below Euler product", "sum rho(m)/m <= prod_p sum rho(p^m)/p^m",
                         series_less_equal(sum, majorant)));
}

void run_kernel(const RunConfig& c, Json& results, Json& checks) {
  const Integer freq = parse_integer(c.frequency, "frequency");
  const std::int64_t k = kernel_exact(freq, c.order);
  const std::uint64_t bound = gcd_sum_bound(freq, c.order);
  results["kernel"] = k;
  results["gcd_sum_bound"] = bound;
  results["farey_size"] = farey_size(c.order);
  checks.push_back(check("kernel gcd bound", "|sum_q c_q(c)| <= sum_q (c, q)",
                         static_cast<std::uint64_t>(k < 0 ? -k : k) <= bound));
}

void run_sieve(const RunConfig& c, Json& results, Json& checks) {
  const auto inst = make_instance(c);
  const auto r = theorem1_report(inst, EvalBudget{c.budget});
  results["lhs"] = finite(r.lhs);
  results["lhs_exact"] = r.lhs_exact ? integer_json(*r.lhs_exact) : Json(nullptr);
  results["norm2"] = finite(r.norm2);
  results["envelope_exponent"] = r.envelope_exponent;
  results["log_factor"] = finite(r.log_factor);
  results["log_guarded"] = r.log_guarded;
  results["envelope"] = finite(r.rhs_envelope);
  results["ratio"] = finite(r.ratio);
  if (r.row_sup) results["row_sup"] = {{"index", r.row_sup->index}, {"value", r.row_sup->value}};
  results["row_sup_majorant"] = {{"index", r.row_sup_bound.index}, {"value", finite(r.row_sup_bound.value)}};
  if (r.chain_ok)
    checks.push_back(check("bound chain", "lhs <= row_sup ||a||^2 <= divisor majorant ||a||^2", *r.chain_ok));
  checks.push_back(check("envelope ratio", "lhs <= 10 Q (N+Q) (log Q)^(omega(c0)+theta(k)) ||a||^2",
                         r.ratio <= kRatioCeiling));
}

void run_corollary(const RunConfig& c, Json& results, Json& checks) {
  const auto inst = make_instance(c);
  const auto r = corollary_report(inst, EvalBudget{c.budget});
  results["lhs"] = finite(r.lhs);
  results["norm2"] = finite(r.norm2);
  results["envelope_exponent"] = r.envelope_exponent;
  results["log_factor"] = finite(r.log_factor);
  results["log_guarded"] = r.log_guarded;
  results["envelope"] = finite(r.rhs_envelope);
  results["ratio"] = finite(r.ratio);
  checks.push_back(check("character-sum envelope ratio",
                         "primitive character form <= 10 D (N+D) (log D)^(omega(c0)+theta(k)) ||a||^2",
                         r.ratio <= kRatioCeiling));
}

void run_sharpness(const RunConfig& c, Json& results, Json& checks) {
  const std::string ex1_ref = "sum_p |sum_i e(p i^n / q)|^2 = (n-1) q (q-1)";
  try {
    const auto r = ex1_check(c.n, c.q);
    results["ex1_lhs"] = r.lhs;
    results["ex1_rhs"] = r.rhs;
    results["ok"] = r.ok;
    checks.push_back(check("complete power-sum energy", ex1_ref, r.ok));
  } catch (const Ex1Inapplicable& e) {
    const std::int64_t lhs = power_sum_energy(c.n, c.q);
    results["ex1_lhs"] = lhs;
    results["ex1_rhs"] = e.general_value();
    results["ok"] = lhs == e.general_value();
    checks.push_back(check("complete power-sum energy, general gcd", "(gcd(n, q-1) - 1) q (q-1)",
                           lhs == e.general_value()));
  }
  if (c.q > c.n) {
    results["max_complete_sum"] = finite(max_complete_sum(c.n, c.q));
    results["weil_bound"] = finite(static_cast<double>(c.n - 1) * std::sqrt(static_cast<double>(c.q)));
    results["max_incomplete_sum"] = finite(max_incomplete_sum(c.n, c.q));
    checks.push_back(check("Weil bound", "|complete sum| <= (n-1) sqrt q", weil_check(c.n, c.q)));
    checks.push_back(
        check("incomplete-sum bound", "|incomplete sum| <= 2 (n-1) sqrt q log q", incomplete_check(c.n, c.q)));
  }
}

void run_suite(Json& results, Json& checks) {
  Json rows = Json::array();
  for (const auto& r : acceptance::run_all(nullptr)) {
    rows.push_back({{"id", r.id}, {"name", r.name}, {"ok", r.ok}, {"detail", r.detail}});
    checks.push_back(check(r.name, r.statement, r.ok));
  }
  results["criteria"] = rows;
}

// Flattens nested objects into dotted keys; arrays of scalars are joined by ';'.
void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
  } else if (j.is_array()) {
    bool scalar = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
    if (scalar) {
      std::string s;
      for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ";" : "") + j[i].dump();
      rows.emplace_back(prefix, s);
    } else {
      for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), rows);
    }
  } else {
    rows.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

}  // namespace

const char* subcommand_name(Subcommand s) {
  switch (s) {
    case Subcommand::rho: return "rho";
    case Subcommand::prop1: return "prop1";
    case Subcommand::kernel: return "kernel";
    case Subcommand::sieve: return "sieve";
    case Subcommand::sharpness: return "sharpness";
    case Subcommand::corollary: return "corollary";
    case Subcommand::suite: return "suite";
  }
  return "";
}

RunConfig parse_config(const std::vector<std::string>& args) {
  RunConfig c;
  CLI::App app{"Large sieve verification for polynomial amplitudes", "polysieve"};
  app.require_subcommand(1);

  std::optional<std::string> poly_text;
  std::string weights_text = "ones", output_text = "json";
  std::int64_t length = static_cast<std::int64_t>(c.length);

  auto add_output = [&](CLI::App* s) {
    s->add_option("--output", output_text, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    s->add_flag("--no-timing", [&](std::int64_t) { c.timing = false; }, "report wall_ms as 0");
  };
  auto add_poly = [&](CLI::App* s) {
    s->add_option("--poly", poly_text, "coefficients c0,...,ck in descending powers")->required();
  };
  auto add_interval = [&](CLI::App* s, const char* order_flag) {
    add_poly(s);
    s->add_option(order_flag, c.order)->required()->check(CLI::PositiveNumber);
    s->add_option("--M", c.start, "interval is M+1..M+N");
    s->add_option("--N", length)->required();
    s->add_option("--weights", weights_text, "ones, random, or a CSV file of i,re,im rows");
    s->add_option("--seed", c.seed, "seed for --weights random");
    s->add_option("--budget", c.budget, "cap on evaluated terms")->check(CLI::PositiveNumber);
    add_output(s);
  };

  auto* rho = app.add_subcommand("rho", "root counts rho(m) for m <= Q");
  add_poly(rho);
  rho->add_option("--Q", c.order)->required()->check(CLI::PositiveNumber);
  add_output(rho);

  auto* prop1 = app.add_subcommand("prop1", "sum of rho(m)/m against its Euler product");
  add_poly(prop1);
  prop1->add_option("--Q", c.order)->required()->check(CLI::PositiveNumber);
  add_output(prop1);

  auto* kernel = app.add_subcommand("kernel", "Farey kernel at frequency c");
  kernel->add_option("--c", c.frequency)->required();
  kernel->add_option("--Q", c.order)->required()->check(CLI::PositiveNumber);
  add_output(kernel);

  auto* sieve = app.add_subcommand("sieve", "the Farey quadratic form and its envelope");
  add_interval(sieve, "--Q");
  auto* corollary = app.add_subcommand("corollary", "the primitive-character form and its envelope");
  add_interval(corollary, "--D");

  auto* sharp = app.add_subcommand("sharpness", "power sums of T^n modulo a prime");
  sharp->add_option("--n", c.n)->required()->check(CLI::Range(2, 1'000'000));
  sharp->add_option("--q", c.q)->required()->check(CLI::PositiveNumber);
  add_output(sharp);

  auto* suite = app.add_subcommand("suite", "run the acceptance corpus");
  add_output(suite);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw UsageError(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  const std::pair<CLI::App*, Subcommand> subs[] = {{rho, Subcommand::rho},         {prop1, Subcommand::prop1},
                                                   {kernel, Subcommand::kernel},   {sieve, Subcommand::sieve},
                                                   {sharp, Subcommand::sharpness}, {corollary, Subcommand::corollary},
                                                   {suite, Subcommand::suite}};
  for (const auto& [app_ptr, sub] : subs) {
    if (app_ptr->parsed()) c.subcommand = sub;
  }

  if (poly_text) c.polynomial = parse_polynomial(*poly_text);
  if (c.subcommand == Subcommand::kernel) parse_integer(c.frequency, "frequency");
  if (length < 1) throw UsageError("--N must be at least 1");
  c.length = static_cast<std::uint64_t>(length);
  c.output = output_text == "csv" ? OutputFormat::csv : OutputFormat::json;
  if (weights_text == "ones") {
    c.weights = WeightMode::ones;
  } else if (weights_text == "random") {
    c.weights = WeightMode::random;
  } else {
    c.weights = WeightMode::file;
    c.weights_file = weights_text;
  }
  return c;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  Json results = Json::object();
  Json checks = Json::array();
  try {
    switch (config.subcommand) {
      case Subcommand::rho: run_rho(config, results, checks); break;
      case Subcommand::prop1: run_prop1(config, results, checks); break;
      case Subcommand::kernel: run_kernel(config, results, checks); break;
      case Subcommand::sieve: run_sieve(config, results, checks); break;
      case Subcommand::corollary: run_corollary(config, results, checks); break;
      case Subcommand::sharpness: run_sharpness(config, results, checks); break;
      case Subcommand::suite: run_suite(results, checks); break;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  const double wall_ms =
      config.timing ? std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count() : 0.0;

  Json report;
  report["subcommand"] = subcommand_name(config.subcommand);
  report["inputs"] = inputs_json(config);
  report["results"] = results;
  report["checks"] = checks;
  report["wall_ms"] = std::round(wall_ms * 1000.0) / 1000.0;

  if (config.output == OutputFormat::json) {
    out << report.dump(2) << '\n';
  } else {
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(report, "", rows);
    out << "key,value\n";
    for (const auto& [k, v] : rows) out << csv_field(k) << ',' << csv_field(v) << '\n';
  }

  bool ok = true;
  for (const auto& ch : checks) ok &= ch["ok"].get<bool>();
  return ok ? kExitOk : kExitCheckFailed;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_config(args);
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  return run(config, out, err);
}

}  // namespace polysieve::cli
