#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <json.hpp>

#include "ptrig/constants.hpp"

using nlohmann::json;
using ptrig::constants_for;
using ptrig::PParam;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(PTRIG_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  std::FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  char buf[4096];
  size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, n);
  const int st = pclose(f);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t nl = s.find('\n', pos);
    if (nl == std::string::npos) nl = s.size();
    out.push_back(s.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return out;
}

// value of a "key = value" report line; fails the test if the key is absent
std::string field(const std::string& out, const std::string& key) {
  for (const auto& ln : lines_of(out)) {
    if (ln.rfind(key + " = ", 0) == 0) return ln.substr(key.size() + 3);
  }
  FAIL("missing field: " << key);
  return "";
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (true) {
    size_t c = line.find(',', pos);
    if (c == std::string::npos) {
      out.push_back(line.substr(pos));
      break;
    }
    out.push_back(line.substr(pos, c - pos));
    pos = c + 1;
  }
  return out;
}

std::string f17(double v) {
  char b[40];
  std::snprintf(b, sizeof b, "%.17g", v);
  return b;
}

}  // namespace

TEST_CASE("constants command, text and json") {
  const auto r3 = run("constants --p 3");
  REQUIRE(r3.code == 0);
  const double a = std::strtod(field(r3.out, "a").c_str(), nullptr);
  const double b = std::strtod(field(r3.out, "b").c_str(), nullptr);
  CHECK(std::abs(a - b) < 1e-12);
  CHECK(std::abs(std::strtod(field(r3.out, "residual_ratio").c_str(), nullptr)) <
        1e-12);

  const auto r2 = run("constants --p 2 --json");
  REQUIRE(r2.code == 0);
  const json j2 = json::parse(r2.out);
  CHECK(j2["b"] == "inf");
  CHECK(j2["b_infinite"] == true);
  CHECK(std::abs(j2["a"].get<double>() - 1.5707963267948966) < 1e-14);

  const auto r6 = run("constants --p 6 --json");
  REQUIRE(r6.code == 0);
  const json j6 = json::parse(r6.out);
  for (const char* k : {"p", "a", "b", "k", "l", "picard_r", "band_halfwidth",
                        "real_period", "complex_period"}) {
    REQUIRE(j6.contains(k));
    CHECK(j6[k].is_number());
  }
  CHECK(std::abs(j6["a"].get<double>() - 1.927621296659998131) < 1e-14);
  CHECK(j6["b_infinite"] == false);

  CHECK(run("constants --p 1").code == 2);
}

TEST_CASE("eval command") {
  const auto r0 = run("eval --p 4 --x 0");
  REQUIRE(r0.code == 0);
  CHECK(field(r0.out, "s") == "0");
  CHECK(field(r0.out, "c") == "1");
  CHECK(field(r0.out, "t") == "0");
  CHECK(field(r0.out, "status") == "ok");

  const auto rod = run("eval --p 3 --x 10");
  REQUIRE(rod.code == 0);
  CHECK(field(rod.out, "status") == "out_of_domain");
  CHECK(field(rod.out, "s") == "nan");

  const auto rz = run("eval --p 4 --z 0.5,0.25");
  REQUIRE(rz.code == 0);
  CHECK(field(rz.out, "status") == "ok");
  CHECK(std::strtod(field(rz.out, "pythagorean_residual").c_str(), nullptr) < 1e-9);

  const auto rj = run("eval --p 4 --z 0.5,0.25 --json");
  REQUIRE(rj.code == 0);
  const json j = json::parse(rj.out);
  CHECK(j["status"] == "ok");
  CHECK(j["pythagorean_residual"].get<double>() < 1e-9);

  CHECK(run("eval --p 4").code == 2);
  CHECK(run("eval --p 4 --z nonsense").code == 2);
  CHECK(run("eval --p 4 --x 1 --z 0.5,0.25").code == 2);
  CHECK(run("eval --p 0 --x 1").code == 2);
}

TEST_CASE("table command") {
  const auto rs = run("table --p 2 --from 0 --to 6.283 --step 0.0628");
  REQUIRE(rs.code == 0);
  const auto ls = lines_of(rs.out);
  REQUIRE(ls.size() >= 2);
  CHECK(ls[0] == "x,s,c,t,status");
  for (size_t i = 1; i < ls.size(); ++i) {
    const auto cols = split_csv(ls[i]);
    REQUIRE(cols.size() == 5);
    const double x = std::strtod(cols[0].c_str(), nullptr);
    const double s = std::strtod(cols[1].c_str(), nullptr);
    CHECK(std::abs(s - std::sin(x)) < 1e-10);
    CHECK(cols[4] == "ok");
  }

  const auto& c4 = constants_for(PParam::make(4));
  const auto rp = run("table --p 4 --from 0 --to " + f17(4.0 * c4.a) + " --step " +
                      f17(4.0 * c4.a / 100.0));
  REQUIRE(rp.code == 0);
  const auto lp = lines_of(rp.out);
  REQUIRE(lp.size() == 102);  // header + 101 samples
  const auto first = split_csv(lp[1]);
  const auto last = split_csv(lp[101]);
  CHECK(std::abs(std::strtod(first[1].c_str(), nullptr) -
                 std::strtod(last[1].c_str(), nullptr)) < 1e-10);
  CHECK(std::abs(std::strtod(first[2].c_str(), nullptr) -
                 std::strtod(last[2].c_str(), nullptr)) < 1e-10);

  const auto& c3 = constants_for(PParam::make(3));
  const auto rd = run("table --p 3 --from -2 --to 4 --step 0.5");
  REQUIRE(rd.code == 0);
  for (size_t i = 1; i < lines_of(rd.out).size(); ++i) {
    const auto cols = split_csv(lines_of(rd.out)[i]);
    const double x = std::strtod(cols[0].c_str(), nullptr);
    const bool inside = x > -c3.b && x < c3.a + c3.b;
    if (inside) {
      CHECK(cols[4] != "out_of_domain");
    } else {
      CHECK(cols[4] == "out_of_domain");
      CHECK(cols[1] == "nan");
    }
  }

  CHECK(run("table --p 4 --from 1 --to 0 --step 0.1").code == 2);
  CHECK(run("table --p 4 --from 0 --to 1 --step -1").code == 2);
}

TEST_CASE("grid command") {
  const auto& c4 = constants_for(PParam::make(4));
  const std::string re_spec =
      f17(c4.k) + ":" + f17(3.0 * c4.k) + ":5";  // samples k, 1.5k, 2k, 2.5k, 3k
  const auto rc = run("grid --p 4 --re " + re_spec + " --im -0.2:0.2:3 --func c");
  REQUIRE(rc.code == 0);
  const auto lc = lines_of(rc.out);
  REQUIRE(lc.size() == 16);  // header + 5*3
  CHECK(lc[0] == "re,im,val_re,val_im,status");
  // im outer ascending, re inner ascending
  CHECK(std::strtod(split_csv(lc[1])[1].c_str(), nullptr) == -0.2);
  CHECK(std::strtod(split_csv(lc[1])[0].c_str(), nullptr) ==
        std::strtod(f17(c4.k).c_str(), nullptr));
  // middle row is im = 0; |c| is smallest at the sample nearest 2k
  double best = 1e9;
  int best_i = -1;
  for (int i = 0; i < 5; ++i) {
    const auto cols = split_csv(lc[6 + i]);
    const double vr = std::strtod(cols[2].c_str(), nullptr);
    const double vi = std::strtod(cols[3].c_str(), nullptr);
    const double m = std::hypot(vr, vi);
    if (m < best) {
      best = m;
      best_i = i;
    }
  }
  CHECK(best_i == 2);

  const auto rt = run("grid --p 4 --re " + re_spec + " --im -0.2:0.2:3 --func t");
  REQUIRE(rt.code == 0);
  const auto lt = lines_of(rt.out);
  const auto pole = split_csv(lt[6 + 2]);  // im = 0, re = 2k
  CHECK(pole[4] == "at_pole_of_t");
  CHECK(pole[2] == "inf");

  const std::string im_out = f17(1.05 * c4.band_halfwidth) + ":" +
                             f17(1.2 * c4.band_halfwidth) + ":2";
  const auto rr = run("grid --p 4 --re 0:1:3 --im " + im_out + " --func s");
  REQUIRE(rr.code == 0);
  for (size_t i = 1; i < lines_of(rr.out).size(); ++i) {
    const auto cols = split_csv(lines_of(rr.out)[i]);
    CHECK(cols[4] == "rejected_outside_domain");
    CHECK(cols[2] == "nan");
  }

  const auto rj = run("grid --p 3 --re -1:1:4 --im -0.5:0.5:3 --func s --json");
  REQUIRE(rj.code == 0);
  const json j = json::parse(rj.out);
  CHECK(j["rows"].size() == 12);

  CHECK(run("grid --p 4 --re 0:1 --im 0:1:3 --func s").code == 2);
  CHECK(run("grid --p 4 --re 0:1:1 --im 0:1:3 --func s").code == 2);
  CHECK(run("grid --p 4 --re 0:1:3 --im 0:1:3 --func q").code == 2);
}

TEST_CASE("coeffs command") {
  const auto r2 = run("coeffs --p 2 --n 6");
  REQUIRE(r2.code == 0);
  std::vector<int> a_idx, b_idx;
  std::vector<double> a_val;
  bool in_b = false;
  for (const auto& ln : lines_of(r2.out)) {
    if (ln == "# n a_n") continue;
    if (ln == "# n b_n") {
      in_b = true;
      continue;
    }
    if (ln.empty()) continue;
    int idx;
    double v;
    REQUIRE(std::sscanf(ln.c_str(), "%d %lf", &idx, &v) == 2);
    (in_b ? b_idx : a_idx).push_back(idx);
    if (!in_b) a_val.push_back(v);
  }
  CHECK(a_idx == std::vector<int>{1, 3, 5});
  CHECK(b_idx == std::vector<int>{0, 2, 4});
  CHECK(a_val[0] == 1.0);
  CHECK(std::abs(a_val[1] + 1.0 / 6.0) < 1e-16);
  CHECK(std::abs(a_val[2] - 1.0 / 120.0) < 1e-17);

  const auto r3 = run("coeffs --p 3 --n 8 --json");
  REQUIRE(r3.code == 0);
  const json j3 = json::parse(r3.out);
  std::vector<int> ai;
  for (const auto& pair : j3["a"]) ai.push_back(pair[0].get<int>());
  CHECK(ai == std::vector<int>{1, 4, 7});

  const auto r4 = run("coeffs --p 4 --n 9 --json");
  const json j4 = json::parse(r4.out);
  std::vector<int> bi;
  for (const auto& pair : j4["b"]) bi.push_back(pair[0].get<int>());
  CHECK(bi == std::vector<int>{0, 4, 8});

  CHECK(run("coeffs --p 4 --n 1").code == 2);
}

TEST_CASE("output redirection and determinism") {
  const auto direct = run("constants --p 5");
  const auto again = run("constants --p 5");
  CHECK(direct.out == again.out);

  const std::string tmp = "/tmp/ptrig_cli_test_out.csv";
  std::remove(tmp.c_str());
  const auto rf = run("table --p 3 --from -1 --to 1 --step 0.25 --out " + tmp);
  REQUIRE(rf.code == 0);
  CHECK(rf.out.empty());
  std::FILE* f = std::fopen(tmp.c_str(), "rb");
  REQUIRE(f != nullptr);
  std::string content;
  char buf[4096];
  size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, f)) > 0) content.append(buf, n);
  std::fclose(f);
  std::remove(tmp.c_str());
  const auto rs = run("table --p 3 --from -1 --to 1 --step 0.25");
  CHECK(content == rs.out);

  CHECK(run("table --p 3 --from -1 --to 1 --step 0.25 --out /nonexistent_dir_zz/x.csv")
            .code == 3);
}

TEST_CASE("verify command exit codes") {
  CHECK(run("verify --p 1").code == 2);
  CHECK(run("verify --p 3,,4").code == 2);
  CHECK(run("verify --p abc").code == 2);
  CHECK(run("nonsense").code == 2);
  CHECK(run("--help").code == 0);

  const auto r = run("verify --p 3,6 --tol 1e-9");
  INFO(r.out);
  CHECK(r.code == 0);
  CHECK(r.out.find(" 0 failed") != std::string::npos);

  const auto r2 = run("verify --p 2");
  INFO(r2.out);
  CHECK(r2.code == 0);
}
