#include "towercalc/cli/commands.hpp"
#include "towercalc/cli/document.hpp"
#include "towercalc/cli/generate.hpp"
#include "towercalc/complex/constructions.hpp"
#include "towercalc/complex/homology.hpp"
#include "towercalc/errors.hpp"
#include "towercalc/fracture/fracture.hpp"
#include "towercalc/sections/model_checks.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace towercalc;
using namespace towercalc::cli;
using complex::group_at;
using complex::homology;
using exactalg::FpAbelianGroup;

namespace {

const std::string fixtures = TOWERCALC_FIXTURES;
const std::string golden = TOWERCALC_GOLDEN;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Options with_files(std::vector<std::string> files) {
  Options o;
  for (auto& f : files) o.files.push_back(fixtures + "/" + f);
  return o;
}

}  // namespace

TEST(Load, Fixtures) {
  const auto s = std::get<ComplexDocument>(load(fixtures + "/sphere_2.json"));
  EXPECT_EQ(s.name, "sphere_2");
  EXPECT_EQ(s.complex, complex::sphere(2));
  const auto m = std::get<ComplexDocument>(load(fixtures + "/moore_6.json"));
  EXPECT_EQ(m.complex, complex::moore(6, 0));
  EXPECT_EQ(group_at(homology(m.complex), 0), FpAbelianGroup::cyclic(6));
  EXPECT_TRUE(std::holds_alternative<sections::TowerSection>(load(fixtures + "/times_2_tower.json")));
  EXPECT_TRUE(
      std::holds_alternative<sections::CospanSection>(load(fixtures + "/fracture_cospan_6.json")));
}

TEST(Load, Rejections) {
  try {
    load(fixtures + "/bad_d2.json");
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.location(), "degree 2");
  }
  EXPECT_THROW(load(fixtures + "/missing.json"), ParseError);
  EXPECT_THROW(document_from_json(Json::parse("[1, 2]")), ParseError);
  try {
    complex_from_json(Json::parse(
        R"({"min_degree": 0, "degrees": [{"generators": 1}, {"generators": 1}], "differentials": [[[3]]]})"));
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.location(), "/differentials/0/0/0");
  }
  EXPECT_THROW(complex_from_json(Json::parse(
                   R"({"min_degree": 0, "degrees": [{"generators": 1}], "differentials": [[]]})")),
               ValidationError);
  try {
    // Z/2 -> Z sending the generator to 1 is not well defined.
    tower_from_json(Json::parse(R"({"levels": [
        {"min_degree": 0, "degrees": [{"generators": 1}], "differentials": []},
        {"min_degree": 0, "degrees": [{"generators": 1, "relations": [["2"]]}], "differentials": []}],
      "maps": [[[["1"]]]]})"));
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.location(), "/maps/0");
  }
}

TEST(Generate, ProfileBoundsAndRoundTrip) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const ComplexDocument doc = generate(seed);
    const auto& x = doc.complex;
    EXPECT_LE(static_cast<long>(x.length()), 8);
    EXPECT_TRUE(x.is_free());
    for (const auto& p : x.degrees()) EXPECT_LE(p.generators, 4u);
    for (const auto& d : x.differentials())
      for (const auto& e : d.entries()) EXPECT_LE(abs(e), 5);
    for (long p : fracture::homology_torsion_primes(x)) EXPECT_TRUE(p == 2 || p == 3 || p == 5) << p;
    const Json j = complex_to_json(doc);
    EXPECT_EQ(complex_from_json(Json::parse(j.dump())).complex, x);
    EXPECT_EQ(complex_to_json(generate(seed)).dump(), j.dump());
  }
}

TEST(Generate, GoldenSeedZero) {
  EXPECT_EQ(complex_to_json(generate(0)).dump(2) + "\n", slurp(golden + "/generate_seed_0.json"));
}

TEST(Documents, TowerAndCospanRoundTrip) {
  const auto t = sections::postnikov_tower(complex::direct_sum(complex::moore(2, 1), complex::sphere(0)), 3);
  const auto back = tower_from_json(Json::parse(tower_to_json(t).dump()));
  EXPECT_EQ(back.levels(), t.levels());
  EXPECT_EQ(back.tags(), t.tags());
  EXPECT_EQ(back.stabilization(), t.stabilization());
  for (long i = 0; i < t.top(); ++i) EXPECT_TRUE(complex::equal_maps(back.map(i), t.map(i)));

  const auto s = std::get<sections::CospanSection>(load(fixtures + "/fracture_cospan_6.json"));
  const auto again = cospan_from_json(Json::parse(cospan_to_json(s).dump()));
  EXPECT_EQ(again.x1, s.x1);
  EXPECT_EQ(again.x2, s.x2);
  EXPECT_EQ(again.tags, s.tags);
}

TEST(Run, VerdictsAndExitCodes) {
  Options f = with_files({"moore_6.json"});
  f.primes_j = std::vector<long>{2};
  f.primes_k = std::vector<long>{3};
  const auto r = run("fracture", f);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.exit_code(), 0);
  EXPECT_EQ(r.results["reassembly"]["H_0"], "Z/6");

  const auto m = run("milnor", with_files({"times_2_tower.json"}));
  EXPECT_FALSE(m.passed());
  EXPECT_EQ(m.exit_code(), 1);
  EXPECT_NE(m.machine().find("NotStabilizedWithin(4)"), std::string::npos);
  EXPECT_NE(m.machine().find("\"verdict\": \"fail\""), std::string::npos);

  const auto h = run("homology", with_files({"moore_6.json"}));
  EXPECT_EQ(h.results["homology"]["H_0"], "Z/6");

  Options small = with_files({"moore_6.json"});
  small.primes_j = std::vector<long>{2};
  EXPECT_THROW(run("fracture", small), PartitionTooSmall);
  EXPECT_THROW(run("truncate", with_files({"moore_6.json"})), std::invalid_argument);
  EXPECT_THROW(run("homology", with_files({"times_2_tower.json"})), ValidationError);
  EXPECT_THROW(run("nonsense", {}), std::invalid_argument);
}

TEST(Run, BatchesAreDeterministic) {
  Options o;
  o.seed = 7;
  o.count = 50;
  const auto a = run("hypercomplete", o);
  EXPECT_EQ(a.results["summary"], "50/50 pass");
  EXPECT_EQ(a.machine(), run("hypercomplete", o).machine());
  EXPECT_EQ(a.machine().find("time"), std::string::npos);
  o.count = 10;
  EXPECT_TRUE(run("uct", o).passed());
  EXPECT_TRUE(run("fracture", o).passed());
  EXPECT_TRUE(run("milnor", o).passed());
}

TEST(Run, EverySubcommandOnFixtures) {
  Options one = with_files({"moore_6.json"});
  one.k = 0;
  for (const char* c : {"homology", "cover", "layer", "tower", "hypercomplete", "milnor", "hofib",
                        "section"})
    EXPECT_TRUE(run(c, one).passed()) << c;
  one.n = 0;
  EXPECT_TRUE(run("truncate", one).passed());
  // P_0 alone cannot be declared stable: the Moore complex reaches degree 1.
  EXPECT_FALSE(run("milnor", one).passed());
  Options two = with_files({"moore_6.json", "sphere_2.json"});
  two.n = 1;
  EXPECT_TRUE(run("homcx", two).passed());
  EXPECT_TRUE(run("uct", two).passed());
  EXPECT_TRUE(run("section", with_files({"fracture_cospan_6.json"})).passed());
  Options g;
  g.seed = 0;
  EXPECT_TRUE(run("generate", g).passed());
}
