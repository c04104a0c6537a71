#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hecke/kernel.hpp"
#include "hecke/petersson.hpp"
#include "hecke/types.hpp"

namespace hecke::report {

inline constexpr const char* kSchemaVersion = "1";

struct LValueEntry {
  int form_index = 0;
  double value = 0.0;
  double abs_err = 0.0;

  bool operator==(const LValueEntry&) const = default;
};

struct CertificateEntry {
  int k = 0;
  double rho = 0.0;
  double rho_abs_err = 0.0;
  double per_k_bound = 0.0;
  double global_bound = 0.0;
  bool nonvanishing = false;
  int sign = 0;

  bool operator==(const CertificateEntry&) const = default;
};

struct TriangleEntry {
  double lhs = 0.0;
  double lhs_abs_err = 0.0;
  double rhs = 0.0;
  double rhs_abs_err = 0.0;
  double ratio = 0.0;
  double unfolded_lhs = 0.0;
  double unfolded_ratio = 0.0;

  bool operator==(const TriangleEntry&) const = default;
};

struct Report {
  std::string schema_version = kSchemaVersion;
  int weight = 0;
  CertificateEntry certificate;
  std::vector<LValueEntry> l_values;
  std::optional<TriangleEntry> triangle;
  std::map<std::string, std::int64_t> timings_ms;

  bool operator==(const Report&) const = default;
};

CertificateEntry project(const kernel::Certificate& cert);
TriangleEntry project(const petersson::TriangleResult& tri);

struct ReportOptions {
  double eps = 1e-10;
  bool l_values = true;
  bool triangle = false;
};

/// Certificate, central L-values and (for k <= 28, on request) the triangle
/// check for one weight.
Report build_report(int k, const ReportOptions& options);

/// Inclusive "start:stop:step" range of weights; every weight must satisfy
/// k = 0 mod 4 and 12 <= k <= 40.
std::vector<int> parse_weight_range(const std::string& spec);

void to_json(nlohmann::json& j, const LValueEntry& e);
void from_json(const nlohmann::json& j, LValueEntry& e);
void to_json(nlohmann::json& j, const CertificateEntry& e);
void from_json(const nlohmann::json& j, CertificateEntry& e);
void to_json(nlohmann::json& j, const TriangleEntry& e);
void from_json(const nlohmann::json& j, TriangleEntry& e);
void to_json(nlohmann::json& j, const Report& r);
void from_json(const nlohmann::json& j, Report& r);

/// Serialized report without timings, for reproducibility comparisons.
std::string deterministic_dump(const Report& r);

}  // namespace hecke::report
