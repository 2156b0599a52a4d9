#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ecag/chars.hpp"
#include "ecag/cli.hpp"
#include "ecag/code.hpp"
#include "ecag/errors.hpp"
#include "ecag/json_io.hpp"
#include "ecag/ssp.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace ecag;

namespace {

struct CliResult {
  int status;
  std::string out;
  std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& content)
      : path("/tmp/ecag_test_" + name) {
    std::ofstream f(path);
    f << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

const char* kF5Curve = R"({"field": {"p": 5, "m": 1}, "a": [[0],[0],[0],[1],[1]]})";

}  // namespace

TEST_CASE("curve info") {
  TempFile curve("c1.json", kF5Curve);
  auto res = cli({"curve", "info", "--curve", curve.path});
  REQUIRE(res.status == 0);
  auto j = Json::parse(res.out);
  CHECK(j["N"] == 9);
  CHECK(j["n1"] == 9);
  CHECK(j["n2"] == 1);
  CHECK(j["case"] == "i");
  CHECK(j["q"] == 5);
}

TEST_CASE("config errors map to exit 1, caps to 3") {
  TempFile bad("c2.json", "{ not json");
  CHECK(cli({"curve", "info", "--curve", bad.path}).status == 1);
  CHECK(cli({"curve", "info", "--curve", "/nonexistent/x.json"}).status == 1);
  CHECK(cli({"definitely-not-a-command"}).status == 1);

  TempFile singular("c3.json", R"({"field": {"p": 5, "m": 1}, "a": [[0],[0],[0],[0],[0]]})");
  CHECK(cli({"curve", "info", "--curve", singular.path}).status == 2);

  TempFile huge("c4.json", R"({"field": {"p": 2, "m": 21}, "a": [[0],[0],[0],[0],[0]]})");
  CHECK(cli({"curve", "info", "--curve", huge.path}).status == 3);
}

TEST_CASE("chars phi matches the library") {
  TempFile curve("c5.json", kF5Curve);
  auto res = cli({"chars", "phi", "--curve", curve.path, "--exclude", "O", "--k", "2"});
  REQUIRE(res.status == 0);
  auto j = Json::parse(res.out);

  auto c = curve_from_json(Json::parse(kF5Curve));
  auto gs = GroupStructure::from_curve(c);
  std::vector<CurvePoint> D(gs.points().begin() + 1, gs.points().end());
  auto prof = char_sum_profile(gs, D);
  CHECK(j["phi"].get<double>() == doctest::Approx(prof.phi).epsilon(1e-12));
  CHECK(j["S"] == count_chars_order_gt(gs.group(), 2));
  CHECK(j["n"] == 8);
}

TEST_CASE("ssp count single target and histogram") {
  TempFile curve("c6.json", kF5Curve);
  auto c = curve_from_json(Json::parse(kF5Curve));
  auto gs = GroupStructure::from_curve(c);
  auto P0 = gs.points()[1];
  std::string p0 = point_to_string(*c->field(), P0);

  auto res = cli({"ssp", "count", "--curve", curve.path, "--exclude", "O;" + p0, "--k", "3", "--b", p0});
  REQUIRE(res.status == 0);
  auto j = Json::parse(res.out);

  auto D = all_points_except(gs, P0);
  auto table = count_subset_sums(gs, D.points, 3);
  CHECK(j["N"].get<std::string>() == table.at(3, gs.index_of(P0)).str());

  auto hist = cli({"ssp", "count", "--curve", curve.path, "--exclude", "O;" + p0, "--k", "3"});
  REQUIRE(hist.status == 0);
  auto jh = Json::parse(hist.out);
  REQUIRE(jh["counts"].size() == 9);
  BigInt total = 0;
  for (const auto& entry : jh["counts"]) total += BigInt(entry["N"].get<std::string>());
  CHECK(total == binomial(BigInt(7), 3));
}

TEST_CASE("bound eval emits exact rationals") {
  TempFile curve("c7.json", kF5Curve);
  auto res = cli({"bound", "eval", "--curve", curve.path, "--exclude", "O", "--k", "3"});
  REQUIRE(res.status == 0);
  auto j = Json::parse(res.out);
  CHECK(j["main_term"].get<std::string>() == "56/9");  // C(8,3)/9
  CHECK(j["rhs_total"].get<std::string>().find('/') != std::string::npos);
  CHECK(j["k"] == 3);

  auto c = curve_from_json(Json::parse(kF5Curve));
  auto gs = GroupStructure::from_curve(c);
  std::vector<CurvePoint> D(gs.points().begin() + 1, gs.points().end());
  auto rep = eval_bound(gs.group(), char_sum_profile(gs, D), 8, 3);
  CHECK(j["rhs_total"].get<std::string>() == rational_to_string(rep.rhs_total));
  CHECK(j["certified_positive"] == rep.certified_positive);
}

TEST_CASE("code build and mindist") {
  TempFile curve("c8.json", kF5Curve);
  auto c = curve_from_json(Json::parse(kF5Curve));
  auto gs = GroupStructure::from_curve(c);
  std::string p0 = point_to_string(*c->field(), gs.points()[1]);

  auto res = cli({"code", "build", "--curve", curve.path, "--k", "3", "--P", p0, "--exclude", "auto"});
  REQUIRE(res.status == 0);
  CHECK(res.out.substr(0, 3) == "[7,");
  auto body = res.out.substr(res.out.find('\n') + 1);
  auto j = Json::parse(body);
  CHECK(j["n"] == 7);
  CHECK(j["k"] == 3);
  CHECK(j["gen_matrix"].size() == 3);

  auto dist = cli({"code", "mindist", "--curve", curve.path, "--k", "3", "--P", p0, "--method", "both"});
  REQUIRE(dist.status == 0);
  auto jd = Json::parse(dist.out);
  CHECK(jd["d_ssp"] == jd["d_brute"]);

  auto code = build_code(c, all_points_except(gs, gs.points()[1]), 3, gs.points()[1]);
  CHECK(jd["d"].get<long>() == min_distance_ssp(gs, code));
}

TEST_CASE("sieve check subcommand") {
  auto res = cli({"sieve", "check", "--k", "4", "--trials", "40"});
  CHECK(res.status == 0);
  CHECK(res.out.find("pass") == 0);
}

TEST_CASE("scan determinism modulo timing") {
  auto strip_wall = [](const std::string& csv) {
    std::istringstream in(csv);
    std::string line, out;
    while (std::getline(in, line)) {
      auto last = line.rfind(',');
      out += line.substr(0, last) + "\n";
    }
    return out;
  };
  std::vector<std::string> args = {"scan", "mds", "--q-range", "5..5", "--n-policy", "max",
                                   "--k-min", "1", "--k-max", "6", "--seed", "7", "--jobs", "2"};
  auto a = cli(args);
  auto b = cli(args);
  REQUIRE(a.status == 0);
  CHECK(strip_wall(a.out) == strip_wall(b.out));
  CHECK(a.out.find("q,curve_id,N_points,n1,n2,n,k,minN,certified,d,is_mds,wall_ms") == 0);
}

TEST_CASE("point literal round trip") {
  auto f9 = Field::make(3, 2);
  auto pt = CurvePoint::affine(f9->from_coeffs({1, 2}), f9->from_coeffs({0, 1}));
  CHECK(point_from_string(*f9, point_to_string(*f9, pt)) == pt);
  CHECK(point_from_string(*f9, "O").infinity);
  CHECK_THROWS_AS(point_from_string(*f9, "1:2"), Error);
}
