// End-to-end checks of the command line tool: output formats, routing,
// determinism and exit codes. Drives the real binary via popen.
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    std::cerr << "FAILED: " << what << "\n";
  }
}

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(SYMCONE_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string line;
  while (std::getline(is, line)) out.push_back(line);
  return out;
}

}  // namespace

int main() {
  // JSON series output with exact big-integer coefficients as strings.
  {
    const auto r = run("series --kind B --n 3 --a 2,4 --N 9");
    check(r.exit_code == 0, "series exits 0");
    const auto doc = nlohmann::json::parse(r.output);
    check(doc["truncation"] == 9, "series truncation field");
    const std::vector<std::string> want = {"1", "1", "1", "1", "5",
                                           "5", "9", "9", "13", "13"};
    check(doc["coefficients"] == nlohmann::json(want), "series coefficients");
  }

  // Byte-identical reruns, also under different worker counts.
  {
    const std::string args = "series --kind D --n 3 --a 0,1 --N 12";
    const auto a = run(args);
    const auto b = run(args);
    const auto c = run("--threads 1 " + args);
    const auto d = run("--threads 4 " + args);
    check(a.exit_code == 0 && a.output == b.output, "series rerun is byte-identical");
    check(c.output == d.output && a.output == c.output,
          "series output independent of worker count");
  }

  // CSV and text formats.
  {
    const auto r = run("series --kind B --n 2 --a 1 --N 3 --format csv");
    const auto ls = lines(r.output);
    check(ls.size() == 5 && ls[0] == "degree,coefficient" && ls[1] == "0,1" &&
              ls[4] == "3,7",
          "series csv rows");
    const auto t = run("series --kind B --n 2 --a 1 --N 3 --format text");
    check(t.output == "1 + 3 t + 5 t^2 + 7 t^3 + O(t^4)\n", "series text form");
  }

  // Rational sum as a JSON term list.
  {
    const auto r = run("genfunc --kind B --n 2 --a 1");
    check(r.exit_code == 0, "genfunc exits 0");
    const auto doc = nlohmann::json::parse(r.output);
    check(doc.is_array() && doc.size() == 2, "genfunc term count");
    check(doc[0]["numerator"] == nlohmann::json({0, 0}), "genfunc identity numerator");
    check(doc[1]["numerator"] == nlohmann::json({-1, 1}), "genfunc signed numerator");
    check(doc[1]["denominators"] == nlohmann::json({{-1, 1}, {0, 1}}),
          "genfunc signed denominators");
  }

  // Statistics table defaults to CSV with the documented header.
  {
    const auto r = run("stats --m 2");
    const auto ls = lines(r.output);
    check(r.exit_code == 0 && ls.size() == 9, "stats row count");
    check(ls[0] == "element,descents,des,maj,comaj,cobin", "stats csv header");
    check(ls[1] == "1 2,,0,0,0,0", "stats identity row");
    check(ls[4] == "-1 -2,1 2,2,1,3,5", "stats double-descent row");
    const auto j = run("stats --m 1 --format json");
    const auto doc = nlohmann::json::parse(j.output);
    check(doc.is_array() && doc.size() == 2 && doc[1]["element"] == "-1",
          "stats json variant");
  }

  // --out writes the payload to a file and keeps stdout empty.
  {
    const std::string path = "/tmp/symcone_cli_test_series.json";
    std::remove(path.c_str());
    const auto r = run("series --kind B --n 2 --a 1 --N 2 --out " + path);
    check(r.exit_code == 0 && r.output.empty(), "--out silences stdout");
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    const auto doc = nlohmann::json::parse(ss.str());
    check(doc["coefficients"].size() == 3, "--out file payload");
    std::remove(path.c_str());
  }

  // Verification suites print one PASS line per check and exit 0.
  {
    const auto r = run("verify oracle --kind A --n 3 --a -1,1,1 --N 6");
    check(r.exit_code == 0, "verify oracle exits 0");
    const auto ls = lines(r.output);
    check(ls.size() == 3 && ls.back() == "all checks passed", "verify oracle summary");
    check(ls[0].find("PASS") != std::string::npos &&
              ls[1].find("PASS") != std::string::npos,
          "verify oracle rows marked PASS");
    const auto t = run("verify triangulation --kind B --n 2 --a 1 --bound 3");
    check(t.exit_code == 0 && t.output.find("16 points") != std::string::npos,
          "verify triangulation reports the point count");
  }

  // Exit code contract: 2 for unusable input, 3 for impossible expansions.
  {
    check(run("series --kind E --n 2 --a 1 --N 3").exit_code == 2, "unknown kind -> 2");
    check(run("series --kind D --n 2 --a 1 --N 3").exit_code == 2, "bad rank -> 2");
    check(run("series --kind B --n 3 --a 4,2 --N 3").exit_code == 2,
          "unnormalized weights -> 2");
    check(run("series --kind B --n 2 --a 1").exit_code == 2, "missing flag -> 2");
    check(run("frobnicate").exit_code == 2, "unknown subcommand -> 2");
    check(run("series --kind D --n 3 --a 1,1 --N 3").exit_code == 3,
          "non-salient cone -> 3");
    check(run("series --kind B --n 2 --a 1 --N 5 --weights 1,0").exit_code == 3,
          "degenerate grading -> 3");
    check(run("--help").exit_code == 0, "--help -> 0");
  }

  if (failures) {
    std::cerr << failures << " check(s) failed\n";
    return 1;
  }
  std::cout << "all cli checks passed\n";
  return 0;
}
