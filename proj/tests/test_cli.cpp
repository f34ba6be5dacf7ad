#include <doctest.h>

#include <cstdlib>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "thom/golden.hpp"
#include "thom/poly_text.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = thomcli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

const std::string kData = THOM_TEST_DATA;

}  // namespace

TEST_CASE("solve prints the published polynomial") {
  auto r = run({"solve", "--pair", "2,3", "--type", "B1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "Tp = -3*c1^3 + 4*c1*c2"));
  CHECK(contains(r.out, "p [B1 @ a^3] 8x1 + 2x2 + 24x3 + 72x4 + 6x5 + 216x6 + 22x7 + 66x8 + 6x9 = 2"));
  CHECK(contains(r.out, "golden: PASS"));
  auto fold = run({"solve", "--pair", "2,2", "--type", "Fold"});
  CHECK(fold.code == 0);
  CHECK(contains(fold.out, "Tp (cbar) = cb1"));
  CHECK(run({"solve", "--pair", "2,3", "--type", "S1"}).code == 0);
}

TEST_CASE("solve exit codes") {
  auto p3 = run({"solve", "--pair", "2,3", "--type", "P3"});
  CHECK(p3.code == thomcli::kSolverError);
  CHECK(contains(p3.err, "modulus direction"));
  CHECK(run({"solve", "--pair", "2,2", "--type", "Butterfly"}).code == thomcli::kSolverError);
  CHECK(run({"solve", "--pair", "2,2", "--type", "Nope"}).code == thomcli::kUnknownName);
  CHECK(run({"solve", "--pair", "2,2", "--type", "Goose"}).code == thomcli::kMismatch);
  auto under = run({"solve", "--pair", "2,2", "--type", "Gulls", "--constraints", "Regular,Fold,Cusp"});
  CHECK(under.code == thomcli::kSolverError);
  CHECK(contains(under.err, "kernel dimension"));
  CHECK(run({"solve", "--pair", "2-3", "--type", "B1"}).code == thomcli::kUsage);
  CHECK(run({"solve", "--type", "B1"}).code == thomcli::kUsage);
  CHECK(run({}).code == thomcli::kUsage);
}

TEST_CASE("solve JSON round-trips") {
  auto r = run({"solve", "--pair", "2,3", "--type", "H2", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["golden"] == "PASS");
  CHECK(j["tp_cbar"] == "cb2^2 + cb1*cb3 + 2*cb4");
  auto tp = thom::parse_poly(j["tp"].get<std::string>(), thom::chern_table(2, 3));
  CHECK(tp == thom::golden_tp("H2", std::pair{2, 3}));
  CHECK(j["report"]["unknowns"] == 16);
  CHECK(j["report"]["equations"].size() == 18);
}

TEST_CASE("solve LaTeX row") {
  auto r = run({"solve", "--pair", "2,2", "--type", "Cusp", "--format", "latex"});
  CHECK(r.code == 0);
  CHECK(r.out == "Cusp & {\\bar{c}_{1}}^{2} + \\bar{c}_{2} \\\\\n");
}

TEST_CASE("verify") {
  auto t5 = run({"verify", "--tables", "5"});
  CHECK(t5.code == 0);
  CHECK(contains(t5.out, "11 rows, 11 passed, 0 failed"));
  auto t10 = run({"verify", "--tables", "10"});
  CHECK(t10.code == 0);
  CHECK(contains(t10.out, "4 rows, 4 passed"));
  CHECK(run({"verify", "--tables", "7..11"}).code == 0);
  auto t4 = run({"verify", "--tables", "4"});
  CHECK(t4.code == thomcli::kMismatch);
  CHECK(contains(t4.out, "FAIL  table 4  Goose"));
  CHECK(contains(t4.out, "solved - published = Tp(Gulls)"));
  CHECK(run({"verify", "--tables", "12"}).code == thomcli::kUnknownName);
  auto all1 = run({"verify", "--tables", "all"}), all2 = run({"verify"});
  CHECK(all1.out == all2.out);
}

TEST_CASE("enumerate") {
  auto h2 = run({"enumerate", "--pipeline", "p4-surface", "--type", "H2", "--d1", "2", "--d2", "2"});
  CHECK(h2.code == 0);
  CHECK(contains(h2.out, "value: 16"));
  auto lips = run({"enumerate", "--pipeline", "p3-surface", "--type", "Lips/Beaks"});
  CHECK(contains(lips.out, "formula: 8*d - 4*xi1"));
  auto d = run({"enumerate", "--pipeline", "p4-primal", "--type", "D", "--d", "3"});
  CHECK(contains(d.out, "value: 90"));
  auto ord = run({"enumerate", "--pipeline", "p3-surface", "--type", "Sharksfin", "--chars", "d=4,eps0=1,C=7,T=2"});
  CHECK(contains(ord.out, "formula: C"));
  CHECK(contains(ord.out, "value: 7"));
  auto xi = run({"enumerate", "--pipeline", "p3-surface", "--type", "Lips/Beaks", "--chars", "d=4,xi1=0,xi2=0,xi01=24"});
  CHECK(contains(xi.out, "value: 32"));
}

TEST_CASE("enumerate errors") {
  CHECK(run({"enumerate", "--pipeline", "p5", "--type", "H2"}).code == thomcli::kUnknownName);
  CHECK(run({"enumerate", "--pipeline", "p4-surface", "--type", "Nope"}).code == thomcli::kUnknownName);
  CHECK(run({"enumerate", "--pipeline", "p3-surface", "--type", "Gulls", "--chars", "d=x"}).code ==
        thomcli::kBadInput);
  CHECK(run({"enumerate", "--pipeline", "p3-surface", "--type", "Gulls", "--chars", "d"}).code ==
        thomcli::kBadInput);
  CHECK(run({"enumerate", "--pipeline", "p3-surface", "--type", "Gulls", "--chars", "d=1,q=2"}).code ==
        thomcli::kBadInput);
  CHECK(run({"enumerate", "--pipeline", "p3-surface", "--type", "Gulls", "--chars", "d=1"}).code ==
        thomcli::kBadInput);
  CHECK(run({"enumerate", "--pipeline", "p3-surface", "--type", "Gulls", "--d1", "2", "--d2", "2"}).code ==
        thomcli::kBadInput);
}

TEST_CASE("enumerate JSON record") {
  auto r = run({"enumerate", "--pipeline", "p4-primal", "--type", "C", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["locus"] == "C");
  CHECK(j["pipeline"] == "p4-primal");
  CHECK(j["characters"] == nlohmann::json::array({"d"}));
  auto f = thom::parse_poly(j["formula"].get<std::string>(), thom::char_table("primal"));
  CHECK(f == thom::golden_poly(*thom::find_golden_formula("11", "C")));
}

TEST_CASE("registry commands") {
  auto dump = run({"registry", "--dump"});
  CHECK(dump.code == 0);
  CHECK(nlohmann::json::parse(dump.out).size() == 28);
  auto bad = run({"registry", "--load", kData + "/corrupt_b1.json", "--validate"});
  CHECK(bad.code == thomcli::kBadInput);
  CHECK(contains(bad.err, "normal_weights"));
  auto good = run({"registry", "--load", kData + "/extra_type.json", "--validate"});
  CHECK(good.code == 0);
  auto merged = run({"registry", "--load", kData + "/extra_type.json"});
  CHECK(contains(merged.out, "Fold (1,1) codim 1"));
  CHECK(run({"registry", "--load", kData + "/missing.json"}).code == thomcli::kBadInput);
  CHECK(run({"registry"}).code == thomcli::kUsage);
}

TEST_CASE("extra registry is usable by solve") {
  auto r = run({"--registry", kData + "/extra_type.json", "solve", "--pair", "1,1", "--type", "Fold"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "Tp = -c1 + cp1"));
  CHECK(contains(r.out, "golden: none"));
  std::string path = kData + "/extra_type.json";
  setenv("THOMCALC_REGISTRY", path.c_str(), 1);
  auto env = run({"solve", "--pair", "1,1", "--type", "Fold"});
  unsetenv("THOMCALC_REGISTRY");
  CHECK(env.code == 0);
  CHECK(run({"solve", "--pair", "1,1", "--type", "Fold"}).code == thomcli::kUnknownName);
  auto bad = run({"--registry", kData + "/corrupt_b1.json", "verify", "--tables", "5"});
  CHECK(bad.code == thomcli::kBadInput);
  CHECK(contains(bad.err, "B1 normal_weights"));
}
