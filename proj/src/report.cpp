#include "hecke/report.hpp"

#include <charconv>
#include <chrono>

#include "hecke/lfunction.hpp"

namespace hecke::report {

CertificateEntry project(const kernel::Certificate& cert) {
  CertificateEntry e;
  e.k = cert.k;
  e.rho = cert.rho.value;
  e.rho_abs_err = cert.rho.abs_err;
  e.per_k_bound = cert.per_k_bound;
  e.global_bound = cert.global_bound;
  e.nonvanishing = cert.nonvanishing;
  e.sign = static_cast<int>(cert.sign);
  return e;
}

TriangleEntry project(const petersson::TriangleResult& tri) {
  TriangleEntry e;
  e.lhs = tri.lhs.value;
  e.lhs_abs_err = tri.lhs.abs_err;
  e.rhs = tri.rhs.value;
  e.rhs_abs_err = tri.rhs.abs_err;
  e.ratio = tri.ratio;
  e.unfolded_lhs = tri.unfolded_lhs.value;
  e.unfolded_ratio = tri.unfolded_ratio;
  return e;
}

namespace {

template <class F>
auto timed(std::int64_t& ms, F&& f) {
  const auto start = std::chrono::steady_clock::now();
  auto result = f();
  ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                             start)
           .count();
  return result;
}

}  // namespace

Report build_report(int k, const ReportOptions& options) {
  Report r;
  r.weight = k;
  r.certificate = project(timed(r.timings_ms["certify"], [&] { return kernel::certify(k, options.eps); }));
  if (options.l_values) {
    const auto values = timed(r.timings_ms["l_values"],
                              [&] { return lfunction::central_values(k, options.eps); });
    for (std::size_t i = 0; i < values.size(); ++i) {
      r.l_values.push_back({static_cast<int>(i), values[i].value.value, values[i].value.abs_err});
    }
  }
  if (options.triangle && k <= 28) {
    r.triangle = project(timed(r.timings_ms["triangle"],
                               [&] { return petersson::triangle_check(k, options.eps); }));
  }
  return r;
}

std::vector<int> parse_weight_range(const std::string& spec) {
  int parts[3] = {0, 0, 0};
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    const std::size_t end = i < 2 ? spec.find(':', pos) : spec.size();
    if (end == std::string::npos || end == pos) {
      throw DomainError("weight range must look like start:stop:step, got '" + spec + "'");
    }
    const char* first = spec.data() + pos;
    const char* last = spec.data() + end;
    const auto [ptr, ec] = std::from_chars(first, last, parts[i]);
    if (ec != std::errc() || ptr != last) {
      throw DomainError("weight range must look like start:stop:step, got '" + spec + "'");
    }
    pos = end + 1;
  }
  const auto [start, stop, step] = parts;
  if (step <= 0 || stop < start) throw DomainError("weight range needs step > 0 and start <= stop");
  std::vector<int> weights;
  for (int k = start; k <= stop; k += step) {
    if (k % 4 != 0 || k < 12 || k > 40) {
      throw DomainError("weight " + std::to_string(k) +
                        " in range violates k = 0 mod 4, 12 <= k <= 40");
    }
    weights.push_back(k);
  }
  return weights;
}

void to_json(nlohmann::json& j, const LValueEntry& e) {
  j = {{"form_index", e.form_index}, {"value", e.value}, {"abs_err", e.abs_err}};
}

void from_json(const nlohmann::json& j, LValueEntry& e) {
  j.at("form_index").get_to(e.form_index);
  j.at("value").get_to(e.value);
  j.at("abs_err").get_to(e.abs_err);
}

void to_json(nlohmann::json& j, const CertificateEntry& e) {
  j = {{"k", e.k},
       {"rho", {{"value", e.rho}, {"abs_err", e.rho_abs_err}}},
       {"per_k_bound", e.per_k_bound},
       {"global_bound", e.global_bound},
       {"nonvanishing", e.nonvanishing},
       {"sign", e.sign}};
}

void from_json(const nlohmann::json& j, CertificateEntry& e) {
  j.at("k").get_to(e.k);
  j.at("rho").at("value").get_to(e.rho);
  j.at("rho").at("abs_err").get_to(e.rho_abs_err);
  j.at("per_k_bound").get_to(e.per_k_bound);
  j.at("global_bound").get_to(e.global_bound);
  j.at("nonvanishing").get_to(e.nonvanishing);
  j.at("sign").get_to(e.sign);
}

void to_json(nlohmann::json& j, const TriangleEntry& e) {
  j = {{"lhs", {{"value", e.lhs}, {"abs_err", e.lhs_abs_err}}},
       {"rhs", {{"value", e.rhs}, {"abs_err", e.rhs_abs_err}}},
       {"ratio", e.ratio},
       {"unfolded_lhs", e.unfolded_lhs},
       {"unfolded_ratio", e.unfolded_ratio}};
}

void from_json(const nlohmann::json& j, TriangleEntry& e) {
  j.at("lhs").at("value").get_to(e.lhs);
  j.at("lhs").at("abs_err").get_to(e.lhs_abs_err);
  j.at("rhs").at("value").get_to(e.rhs);
  j.at("rhs").at("abs_err").get_to(e.rhs_abs_err);
  j.at("ratio").get_to(e.ratio);
  j.at("unfolded_lhs").get_to(e.unfolded_lhs);
  j.at("unfolded_ratio").get_to(e.unfolded_ratio);
}

void to_json(nlohmann::json& j, const Report& r) {
  j = {{"schema_version", r.schema_version},
       {"weight", r.weight},
       {"certificate", r.certificate},
       {"l_values", r.l_values},
       {"timings_ms", r.timings_ms}};
  if (r.triangle) j["triangle"] = *r.triangle;
}

void from_json(const nlohmann::json& j, Report& r) {
  j.at("schema_version").get_to(r.schema_version);
  j.at("weight").get_to(r.weight);
  j.at("certificate").get_to(r.certificate);
  j.at("l_values").get_to(r.l_values);
  j.at("timings_ms").get_to(r.timings_ms);
  if (j.contains("triangle")) {
    r.triangle = j.at("triangle").get<TriangleEntry>();
  } else {
    r.triangle.reset();
  }
}

std::string deterministic_dump(const Report& r) {
  nlohmann::json j = r;
  j.erase("timings_ms");
  return j.dump();
}

}  // namespace hecke::report
