#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "stieltjes/hypergeom.hpp"
#include "stieltjes/oracle.hpp"
#include "stieltjes/stieltjes.hpp"
#include "stieltjes/trigintegrals.hpp"

using namespace stieltjes;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTolerance = 3;

struct Settings {
  int k = 0;
  int max_k = 3;
  std::string a = "1";
  long terms = series::kDefaultTerms;
  std::string accel = "asymptotic-tail";
  long bits = series::kDefaultBits;
  std::string format = "json";
  unsigned threads = 0;
  bool no_timing = false;
  bool diagnostics = false;
};

struct OutputRecord {
  std::string quantity;
  int k = 0;
  std::string a;
  std::string value;
  std::string error_estimate;
  std::size_t terms_used = 0;
  std::string method;
  long precision_bits = 0;
  long long wall_time_ms = 0;
  // --diagnostics only
  std::optional<long> n;
  std::optional<std::string> slope;
};

const std::vector<std::string> kColumns = {"quantity", "k",      "a",          "value",       "error_estimate",
                                           "terms_used", "method", "precision_bits", "wall_time_ms"};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

Real parse_a(const std::string& s) {
  if (s == "1") return Real(1);
  if (s == "1/2" || s == "0.5") return Real(1) / 2;
  throw UsageError("--a must be 1 or 1/2");
}

std::string canonical_a(const std::string& s) { return s == "1" ? "1" : "1/2"; }

series::Acceleration parse_accel(const std::string& s) {
  if (s == "none") return series::Acceleration::none;
  if (s == "paper-1-4") return series::Acceleration::paper_1_4;
  if (s == "asymptotic-tail") return series::Acceleration::asymptotic_tail;
  throw UsageError("--accel must be none, paper-1-4 or asymptotic-tail");
}

std::string short_error(const Real& e) { return e.rounded(kMinPrecisionBits).to_shortest_string(); }

std::string quantity_name(int k, const std::string& a) {
  return "gamma_" + std::to_string(k) + (a == "1" ? "" : "(1/2)");
}

series::StieltjesRequest make_request(const Settings& s, int k) {
  series::StieltjesRequest r;
  r.k = k;
  r.a = parse_a(s.a);
  r.n_terms = s.terms;
  r.acceleration = parse_accel(s.accel);
  r.precision_bits = s.bits;
  r.threads = s.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : s.threads;
  return r;
}

// log2 of successive differences over N/4, N/2, N: the observed convergence order.
std::string slope_estimate(series::StieltjesRequest r) {
  const long n = r.n_terms;
  r.n_terms = n / 4;
  const Real v1 = series::compute(r).value;
  r.n_terms = n / 2;
  const Real v2 = series::compute(r).value;
  r.n_terms = n;
  const Real v3 = series::compute(r).value;
  const Real d1 = abs(v2 - v1), d2 = abs(v3 - v2);
  if (d1.is_zero() || d2.is_zero()) return "nan";
  return (log2(d2 / d1)).rounded(kMinPrecisionBits).to_string(4);
}

OutputRecord run_one(const Settings& s, int k) {
  const auto req = make_request(s, k);
  req.validate();
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = series::compute(req);
  const auto t1 = std::chrono::steady_clock::now();
  OutputRecord out;
  out.quantity = quantity_name(k, canonical_a(s.a));
  out.k = k;
  out.a = canonical_a(s.a);
  out.value = r.value.to_shortest_string();
  out.error_estimate = short_error(r.error_estimate);
  out.terms_used = r.terms_used;
  out.method = std::string(to_string(r.method));
  out.precision_bits = s.bits;
  out.wall_time_ms =
      s.no_timing ? 0 : std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  if (s.diagnostics) {
    out.n = s.terms;
    PrecisionGuard g(s.bits);
    out.slope = s.terms >= 4 * 64 ? slope_estimate(req) : "nan";
  }
  return out;
}

json to_json(const OutputRecord& r) {
  json j;
  j["quantity"] = r.quantity;
  j["k"] = r.k;
  j["a"] = r.a;
  j["value"] = r.value;
  j["error_estimate"] = r.error_estimate;
  j["terms_used"] = r.terms_used;
  j["method"] = r.method;
  j["precision_bits"] = r.precision_bits;
  j["wall_time_ms"] = r.wall_time_ms;
  if (r.n) j["n"] = *r.n;
  if (r.slope) j["slope"] = *r.slope;
  return j;
}

void emit(const std::vector<OutputRecord>& records, const std::string& format, bool diagnostics) {
  if (format == "json") {
    for (const auto& r : records) std::cout << to_json(r).dump() << "\n";
    return;
  }
  for (std::size_t i = 0; i < kColumns.size(); ++i) std::cout << (i ? "," : "") << kColumns[i];
  if (diagnostics) std::cout << ",n,slope";
  std::cout << "\n";
  for (const auto& r : records) {
    std::cout << r.quantity << ',' << r.k << ',' << r.a << ',' << r.value << ',' << r.error_estimate << ','
              << r.terms_used << ',' << r.method << ',' << r.precision_bits << ',' << r.wall_time_ms;
    if (diagnostics) std::cout << ',' << r.n.value_or(0) << ',' << r.slope.value_or("nan");
    std::cout << "\n";
  }
}

void add_compute_flags(CLI::App* app, Settings& s) {
  app->add_option("--a", s.a, "Hurwitz parameter: 1 or 1/2")->check(CLI::IsMember({"1", "1/2", "0.5"}));
  app->add_option("--terms", s.terms, "number of series terms N")->check(CLI::PositiveNumber);
  app->add_option("--accel", s.accel, "none, paper-1-4 or asymptotic-tail")
      ->check(CLI::IsMember({"none", "paper-1-4", "asymptotic-tail"}));
  app->add_option("--bits", s.bits, "working precision in bits")->check(CLI::Range(kMinPrecisionBits, 1L << 20));
  app->add_option("--format", s.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app->add_option("--threads", s.threads, "worker threads (0: all cores)");
  app->add_flag("--no-timing", s.no_timing, "report wall_time_ms as 0");
  app->add_flag("--diagnostics", s.diagnostics, "append N and the observed convergence slope");
}

int cmd_verify(const std::string& suite, const std::string& tol_text, long bits, const std::string& format) {
  PrecisionGuard g(bits);
  const Real tol = Real::parse(tol_text, bits);
  if (!(tol > Real(0))) throw UsageError("--tol must be positive");
  const auto report = oracle::verify(suite, tol);
  std::size_t failed = 0;
  json failures = json::array();
  for (const auto& c : report.checks) {
    json j;
    j["suite"] = c.suite;
    j["name"] = c.name;
    j["status"] = c.status;
    j["achieved"] = short_error(c.achieved);
    j["tolerance"] = short_error(c.tolerance);
    if (!c.detail.empty()) j["detail"] = c.detail;
    if (format == "json") {
      std::cout << j.dump() << "\n";
    } else {
      std::cout << (c.passed ? "PASS " : "FAIL ") << c.suite << "  " << c.name << "  achieved "
                << c.achieved.to_string(3) << "  tol " << c.tolerance.to_string(3) << "  " << c.status;
      if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
      std::cout << "\n";
    }
    if (!c.passed) {
      ++failed;
      failures.push_back(j);
    }
  }
  json summary;
  summary["checks"] = report.checks.size();
  summary["failed"] = failed;
  summary["failures"] = failures;
  std::cout << summary.dump() << "\n";
  return failed == 0 ? kExitOk : kExitFailed;
}

int cmd_coeffs(int order, long bits, bool fit) {
  PrecisionGuard g(bits);
  const std::vector<hypergeom::NamedFamily> named = {hypergeom::NamedFamily::F23_32, hypergeom::NamedFamily::F34_52,
                                                     hypergeom::NamedFamily::F45_52};
  if (fit) {
    std::vector<hypergeom::CoefficientFit> fits;
    std::vector<Real> grid;
    for (int i = 0; i < 2 * order + 4; ++i) grid.push_back(Real(2500 + 317 * i));
    for (auto nf : named) fits.push_back(hypergeom::fit_exponential_coefficients(hypergeom::family(nf), grid, order));
    hypergeom::write_coefficient_table(std::cout, fits);
    return kExitOk;
  }
  for (auto nf : named) {
    const auto f = hypergeom::family(nf);
    const auto e = hypergeom::asym_expansion(f, order);
    for (std::size_t k = 0; k < e.exp_coeffs.size(); ++k) {
      json j;
      j["family"] = f.name();
      j["theta"] = e.theta.to_shortest_string();
      j["k"] = k;
      j["value"] = e.exp_coeffs[k].to_shortest_string();
      std::cout << j.dump() << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stieltjes constants through hypergeometric series, with independent oracles"};
  app.require_subcommand(1);
  Settings s;

  auto* st = app.add_subcommand("stieltjes", "compute one constant gamma_k(a)");
  st->add_option("--k", s.k, "index k (<= J_MAX = " + std::to_string(trig::kJMax) + ")");
  add_compute_flags(st, s);

  auto* table = app.add_subcommand("table", "gamma_0 .. gamma_K");
  table->add_option("--max-k", s.max_k, "largest k");
  add_compute_flags(table, s);

  std::string suite = "all", tol = "1e-10", vformat = "text";
  long vbits = series::kDefaultBits;
  auto* ver = app.add_subcommand("verify", "run identity suites against brute-force oracles");
  std::vector<std::string> suites = oracle::suite_names();
  suites.push_back("all");
  ver->add_option("--suite", suite, "suite name or all")->check(CLI::IsMember(suites));
  ver->add_option("--tol", tol, "absolute tolerance");
  ver->add_option("--bits", vbits, "working precision in bits")->check(CLI::Range(kMinPrecisionBits, 1L << 20));
  ver->add_option("--format", vformat, "text or json")->check(CLI::IsMember({"text", "json"}));

  int order = 6;
  bool fit = false;
  long cbits = 192;
  auto* co = app.add_subcommand("coeffs", "exponential-expansion coefficients A_k");
  co->add_option("--order", order, "number of coefficients")->check(CLI::Range(1, hypergeom::kExponentialDepth));
  co->add_option("--bits", cbits, "working precision in bits")->check(CLI::Range(kMinPrecisionBits, 1L << 20));
  co->add_flag("--fit", fit, "least-squares fit from Taylor values, written as a versioned table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*st) {
      emit({run_one(s, s.k)}, s.format, s.diagnostics);
      return kExitOk;
    }
    if (*table) {
      if (s.max_k < 0) throw UsageError("--max-k must be nonnegative");
      if (s.max_k > trig::kJMax)
        throw RecursionDepthExceeded("max-k = " + std::to_string(s.max_k) + " exceeds J_MAX = " +
                                     std::to_string(trig::kJMax));
      std::vector<OutputRecord> rows;
      for (int k = 0; k <= s.max_k; ++k) rows.push_back(run_one(s, k));
      emit(rows, s.format, s.diagnostics);
      return kExitOk;
    }
    if (*ver) return cmd_verify(suite, tol, vbits, vformat);
    if (*co) return cmd_coeffs(order, cbits, fit);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidParameters& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const RecursionDepthExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ToleranceNotMet& e) {
    std::cerr << "tolerance not met: " << e.what() << " (achieved " << e.achieved_error().to_string(3) << ")\n";
    return kExitTolerance;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitTolerance;
  }
  return kExitUsage;
}
