#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(HECKE_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::vector<nlohmann::json> json_lines(const std::string& text) {
  std::vector<nlohmann::json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) out.push_back(nlohmann::json::parse(line));
  }
  return out;
}

}  // namespace

TEST_CASE("certify") {
  const auto ok = run("certify --weight 12");
  CHECK(ok.status == 0);
  CHECK(ok.out.find("nonvanishing yes") != std::string::npos);
  CHECK(ok.out.find("sign +1") != std::string::npos);

  const auto js = run("certify --weight 12 --json");
  REQUIRE(js.status == 0);
  const auto j = nlohmann::json::parse(js.out);
  CHECK(j.at("schema_version") == "1");
  CHECK(j.at("certificate").at("sign") == 1);
  CHECK(j.at("certificate").at("nonvanishing") == true);

  CHECK(run("certify --weight 14").status == 1);
  CHECK(run("certify --weight 44").status == 1);
  CHECK(run("certify").status == 1);
  CHECK(run("certify --weight twelve").status == 1);
  CHECK(run("certify --weight 12 --eps 1e-20").status == 2);
}

TEST_CASE("rk") {
  const auto one = run("rk --weight 12 --n 1");
  CHECK(one.status == 0);
  CHECK(one.out.find("rho = 0.8743979255") != std::string::npos);

  const auto two = run("rk --weight 12 --n 2 --json");
  REQUIRE(two.status == 0);
  const auto j = nlohmann::json::parse(two.out);
  CHECK(j.at("value").at("value").get<double>() == doctest::Approx(-18.651438767741345).epsilon(1e-9));
  CHECK(j.at("value").at("abs_err").get<double>() > 0.0);

  CHECK(run("rk --weight 13 --n 1").status == 1);
  CHECK(run("rk --weight 12 --n 0").status == 1);
}

TEST_CASE("check-bounds") {
  const auto r = run("check-bounds");
  CHECK(r.status == 0);
  CHECK(r.out.find("0.4447403868") != std::string::npos);
  const auto js = run("check-bounds --json");
  REQUIRE(js.status == 0);
  const auto j = nlohmann::json::parse(js.out);
  CHECK(j.at("margin").get<double>() == doctest::Approx(0.4446).epsilon(1e-3 / 0.4446));
  const auto& rows = j.at("per_k");
  REQUIRE(rows.size() == 8);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].at("per_k_bound").get<double>() < rows[i - 1].at("per_k_bound").get<double>());
  }
}

TEST_CASE("report") {
  const auto r = run("report --weights 12:24:4 --json");
  REQUIRE(r.status == 0);
  const auto lines = json_lines(r.out);
  REQUIRE(lines.size() == 4);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    CHECK(lines[i].at("weight") == 12 + 4 * static_cast<int>(i));
    CHECK(lines[i].at("certificate").at("nonvanishing") == true);
  }

  const auto tri = run("report --weights 12:12:4 --triangle --json");
  REQUIRE(tri.status == 0);
  const auto tl = json_lines(tri.out);
  REQUIRE(tl.size() == 1);
  CHECK(tl[0].at("triangle").contains("ratio"));

  const auto text = run("report --weights 12:16:4");
  CHECK(text.status == 0);
  CHECK(text.out.find("16") != std::string::npos);

  CHECK(run("report --weights 14:14:1").status == 1);
  CHECK(run("report --weights 12-24").status == 1);
  CHECK(run("report").status == 1);
}

TEST_CASE("report output is deterministic apart from timings") {
  auto strip = [](const std::string& out) {
    auto lines = json_lines(out);
    std::string s;
    for (auto& l : lines) {
      l.erase("timings_ms");
      s += l.dump() + "\n";
    }
    return s;
  };
  const auto a = run("report --weights 12:28:4 --triangle --json");
  const auto b = run("report --weights 12:28:4 --triangle --json");
  REQUIRE(a.status == 0);
  CHECK(strip(a.out) == strip(b.out));
}

TEST_CASE("usage") {
  CHECK(run("--help").status == 0);
  CHECK(run("frobnicate").status == 1);
  CHECK(run("").status == 1);
}
