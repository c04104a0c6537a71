// hecke: certify non-vanishing of central Hecke L-values in weights k = 0 mod 4.
//
//   hecke certify --weight 12 [--eps 1e-10] [--json]
//   hecke rk --weight 12 --n 1 [--eps 1e-10] [--json]
//   hecke check-bounds [--json]
//   hecke report --weights 12:40:4 [--triangle] [--json] [--eps 1e-10]
//
// Exit codes: 0 success, 1 usage or domain error, 2 inconclusive.

#include <cstdio>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hecke/kernel.hpp"
#include "hecke/report.hpp"
#include "hecke/types.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInconclusive = 2;

std::string fmt(double x, int digits = 15) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

void check_weight(int k) {
  if (k % 4 != 0 || k < 12 || k > 40) {
    throw hecke::DomainError("--weight must satisfy k = 0 mod 4 and 12 <= k <= 40, got " +
                             std::to_string(k));
  }
}

void print_certificate(const hecke::report::CertificateEntry& c) {
  std::cout << "weight " << c.k << ": rho = " << fmt(c.rho) << " +/- " << fmt(c.rho_abs_err, 3)
            << ", |rho - 1| bound " << fmt(c.per_k_bound, 6) << ", global bound "
            << fmt(c.global_bound, 6) << ", nonvanishing " << (c.nonvanishing ? "yes" : "no")
            << ", sign " << (c.sign > 0 ? "+1" : c.sign < 0 ? "-1" : "undetermined") << "\n";
}

int cmd_certify(int k, double eps, bool json) {
  check_weight(k);
  hecke::report::Report r;
  r.weight = k;
  r.certificate = hecke::report::project(hecke::kernel::certify(k, eps));
  if (json) {
    std::cout << nlohmann::json(r).dump(2) << "\n";
  } else {
    print_certificate(r.certificate);
  }
  return r.certificate.nonvanishing ? kExitOk : kExitInconclusive;
}

int cmd_rk(int k, int n, double eps, bool json) {
  check_weight(k);
  const hecke::kernel::KernelCoefficient c = hecke::kernel::r_k(k, n, eps);
  if (json) {
    nlohmann::json j = {{"schema_version", hecke::report::kSchemaVersion},
                        {"weight", k},
                        {"n", n},
                        {"rho", {{"value", c.rho.value}, {"abs_err", c.rho.abs_err}}},
                        {"value", {{"value", c.value.value}, {"abs_err", c.value.abs_err}}},
                        {"log_prefactor", c.log_prefactor},
                        {"terms_used", c.terms_used},
                        {"tail_bound", c.tail_bound}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "r_" << k << "(" << n << ") = " << fmt(c.value.value) << " +/- "
              << fmt(c.value.abs_err, 3) << "\n"
              << "rho = " << fmt(c.rho.value) << " +/- " << fmt(c.rho.abs_err, 3) << "\n"
              << "log prefactor = " << fmt(c.log_prefactor) << "\n"
              << "terms = " << c.terms_used << ", tail bound = " << fmt(c.tail_bound, 3) << "\n";
  }
  return kExitOk;
}

int cmd_check_bounds(bool json) {
  const double global = hecke::kernel::global_bound();
  bool ok = global < 1.0;
  nlohmann::json rows = nlohmann::json::array();
  double previous = 2.0;
  if (!json) {
    std::cout << "global bound 2 (2pi/7) (2pi/8)^5 zeta(6)^2 = " << fmt(global) << "\n"
              << "1 - global bound = " << fmt(1.0 - global) << "\n\n"
              << "   k  (2pi)^(k/2)(k/2)!/k!  factorial majorant  zeta(k/2)^2      per-k bound\n";
  }
  for (int k = 12; k <= 40; k += 4) {
    const hecke::kernel::BoundChain c = hecke::kernel::bound_chain(k);
    const bool chain_ok = c.factorial_factor <= c.factorial_majorant &&
                          c.factorial_majorant <= c.weight_free_majorant &&
                          c.zeta_half_k_sq <= c.zeta_6_sq && c.per_k <= c.global;
    const bool monotone = c.per_k < previous;
    ok = ok && chain_ok && monotone;
    previous = c.per_k;
    if (json) {
      rows.push_back({{"k", k},
                      {"factorial_factor", c.factorial_factor},
                      {"factorial_majorant", c.factorial_majorant},
                      {"zeta_half_k_sq", c.zeta_half_k_sq},
                      {"per_k_bound", c.per_k},
                      {"chain_holds", chain_ok},
                      {"monotone", monotone}});
    } else {
      char line[160];
      std::snprintf(line, sizeof line, "%4d  %21.15g  %18.12g  %15.13g  %15.10g%s\n", k,
                    c.factorial_factor, c.factorial_majorant, c.zeta_half_k_sq, c.per_k,
                    chain_ok && monotone ? "" : "  <-- FAILS");
      std::cout << line;
    }
  }
  if (json) {
    nlohmann::json j = {{"schema_version", hecke::report::kSchemaVersion},
                        {"global_bound", global},
                        {"margin", 1.0 - global},
                        {"per_k", rows},
                        {"ok", ok}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "\nall bounds " << (ok ? "hold" : "FAIL") << "\n";
  }
  return ok ? kExitOk : kExitInconclusive;
}

int cmd_report(const std::string& range, bool triangle, bool json, double eps) {
  const std::vector<int> weights = hecke::report::parse_weight_range(range);
  hecke::report::ReportOptions options;
  options.eps = eps;
  options.triangle = triangle;
  std::vector<std::future<hecke::report::Report>> jobs;
  for (int k : weights) {
    jobs.push_back(std::async(std::launch::async,
                              [k, options] { return hecke::report::build_report(k, options); }));
  }
  bool all_nonvanishing = true;
  for (auto& job : jobs) {
    const hecke::report::Report r = job.get();
    all_nonvanishing = all_nonvanishing && r.certificate.nonvanishing;
    if (json) {
      std::cout << nlohmann::json(r).dump() << "\n";
      continue;
    }
    print_certificate(r.certificate);
    for (const auto& v : r.l_values) {
      std::cout << "  L(f_" << v.form_index << ", " << r.weight / 2 << ") = " << fmt(v.value)
                << " +/- " << fmt(v.abs_err, 3) << "\n";
    }
    if (r.triangle) {
      std::cout << "  r_k(1) = " << fmt(r.triangle->lhs) << ", sum L/||f||^2 = "
                << fmt(r.triangle->rhs) << ", ratio = " << fmt(r.triangle->ratio) << "\n"
                << "  unfolded r_k(1) = " << fmt(r.triangle->unfolded_lhs)
                << ", ratio = " << fmt(r.triangle->unfolded_ratio) << "\n";
    }
  }
  return all_nonvanishing ? kExitOk : kExitInconclusive;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified non-vanishing of central Hecke L-values"};
  app.require_subcommand(1);

  int weight = 0;
  int n = 1;
  double eps = 1e-10;
  bool json = false;
  bool triangle = false;
  std::string range;

  auto* certify = app.add_subcommand("certify", "certify r_k(1) != 0 for one weight");
  certify->add_option("--weight", weight, "weight k (k = 0 mod 4, 12 <= k <= 40)")->required();
  certify->add_option("--eps", eps, "target absolute error on rho");
  certify->add_flag("--json", json, "emit JSON");

  auto* rk = app.add_subcommand("rk", "kernel coefficient r_k(n)");
  rk->add_option("--weight", weight, "weight k")->required();
  rk->add_option("--n", n, "coefficient index")->required()->check(CLI::PositiveNumber);
  rk->add_option("--eps", eps, "target absolute error on rho");
  rk->add_flag("--json", json, "emit JSON");

  auto* bounds = app.add_subcommand("check-bounds", "verify the global and per-weight bounds");
  bounds->add_flag("--json", json, "emit JSON");

  auto* report = app.add_subcommand("report", "batch reports over a weight range");
  report->add_option("--weights", range, "start:stop:step, inclusive")->required();
  report->add_flag("--triangle", triangle, "run the triangle check for k <= 28");
  report->add_flag("--json", json, "emit one JSON report per line");
  report->add_option("--eps", eps, "target absolute error");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*certify) return cmd_certify(weight, eps, json);
    if (*rk) return cmd_rk(weight, n, eps, json);
    if (*bounds) return cmd_check_bounds(json);
    if (*report) return cmd_report(range, triangle, json, eps);
  } catch (const hecke::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kExitInconclusive;
  }
  return kExitUsage;
}
