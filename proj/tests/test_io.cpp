#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "a3stab/io.hpp"

#include <algorithm>
#include <fstream>

using namespace a3stab;

namespace {
using cd = std::complex<double>;

int count(const std::string& s, const std::string& needle) {
  int n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}
}  // namespace

TEST_CASE("parse_complex") {
  CHECK(parse_complex("1+2i") == cd(1, 2));
  CHECK(parse_complex(" 1 - 2i ") == cd(1, -2));
  CHECK(parse_complex("i") == cd(0, 1));
  CHECK(parse_complex("-i") == cd(0, -1));
  CHECK(parse_complex("2.5i") == cd(0, 2.5));
  CHECK(parse_complex("-3") == cd(-3, 0));
  CHECK(parse_complex("1+2j") == cd(1, 2));
  CHECK(parse_complex("1e-3-1e2i") == cd(1e-3, -100));
  for (const char* bad : {"", "abc", "1+", "1+2", "i2", "1++2i", "1 2i"}) {
    CAPTURE(std::string(bad));
    CHECK_THROWS_AS(parse_complex(bad), InputError);
  }
}

TEST_CASE("parse_charge") {
  const auto z = parse_charge("0,1,i");
  CHECK(z == CentralCharge(0, 1, cd(0, 1)));
  CHECK_THROWS_AS(parse_charge("1,2"), InputError);
  CHECK_THROWS_AS(parse_charge("1,2,3,4"), InputError);
  CHECK(parse_complex(format_complex(cd(0.25, -1.5))) == cd(0.25, -1.5));
}

TEST_CASE("json round trips") {
  const StabPoint p{'K', {1.5, 0.25, 2}, {0.1, -0.3, 1.7}};
  const StabPoint q = point_from_json(to_json(p));
  CHECK(q.chart == 'K');
  CHECK(q.m == p.m);
  CHECK(q.phi == p.phi);
  CHECK_THROWS_AS(point_from_json(json{{"chart", "Z"}, {"m", {1, 1, 1}}, {"phi", {0, 0, 0}}}), InputError);

  ChargePath path = ChargePath::line(CentralCharge(1, cd(0, 1), -1), CentralCharge(cd(2, 2), 0.5, cd(0, -1)));
  path.resolution = 321;
  const ChargePath back = path_from_json(path_to_json(path));
  CHECK(back.resolution == 321);
  REQUIRE(back.vertices.size() == 2);
  CHECK((back.vertices[1] - path.vertices[1]).norm() == 0);
  const auto bare = path_from_json(json::parse(R"([[1, "i", {"re": 0, "im": -1}], ["1+i", 0, 2]])"));
  CHECK(bare.vertices[0] == CentralCharge(1, cd(0, 1), cd(0, -1)));
  CHECK_THROWS_AS(path_from_json(json::parse("[[1, 2]]")), InputError);
  CHECK_THROWS_AS(path_from_json(json::parse("{\"points\": []}")), InputError);

  LiftTrace tr;
  tr.events.push_back({0, p, std::nullopt});
  tr.events.push_back({0.5, StabPoint{'I', {1, 1, 1}, {0, 0.2, 0.4}}, Facet{0, 2}});
  tr.status = TraceStatus::HitHyperplane;
  tr.hyperplane = 4;
  tr.t_stop = 0.75;
  const LiftTrace tb = trace_from_json(to_json(tr));
  CHECK(tb.status == TraceStatus::HitHyperplane);
  CHECK(tb.hyperplane == 4);
  CHECK(tb.t_stop == 0.75);
  CHECK(tb.crossings() == 1);
  REQUIRE(tb.events[1].crossed);
  CHECK(*tb.events[1].crossed == Facet{0, 2});
  CHECK_THROWS_AS(trace_from_json(json::object()), InputError);
}

TEST_CASE("bundled example paths") {
  std::ifstream f(reference_dir().parent_path() / "paths" / "loop_L6.json");
  REQUIRE(f);
  const ChargePath loop = path_from_json(json::parse(f));
  CHECK(loop.vertices.front() == loop.vertices.back());
  const StabPoint start = surjectivity_lift(loop.at(0)).point;
  const auto tr = lift_path(loop, start);
  CHECK(tr.status == TraceStatus::Complete);
  CHECK(find_point(fiber(loop.at(0), {-3, 4}), tr.end()) >= 0);
}

TEST_CASE("tables agree with the bundled references") {
  const json exc = table_exc();
  REQUIRE(exc["rows"].size() == 12);
  for (int i = 0; i < 12; ++i) CHECK(exc["rows"][i]["label"] == std::string(1, char('A' + i)));
  CHECK(diff_exc(load_reference("table1.json")).empty());
  CHECK(diff_alpha_ineq(load_reference("table2.json")).empty());
  CHECK(diff_graph(load_reference("mutation_graph.json")).empty());

  const json ineq = table_ineq();
  CHECK(ineq["rows"][3]["label"] == "D");
  CHECK(ineq["rows"][3]["ineq13"] == "S3<S123-1");
  CHECK(ineq["rows"][10]["ineq12"] == "");
  CHECK(inequality(chart('A'), {0, 2}) == "S1<S3+1");

  const json alpha = table_alpha();
  CHECK(alpha["rows"][10]["alpha12"].is_null());
}

TEST_CASE("diffs catch tampering") {
  json t1 = load_reference("table1.json");
  t1["rows"][0]["k12"] = 0;
  CHECK(!diff_exc(t1).empty());
  json t2 = load_reference("table2.json");
  t2["rows"][3]["ineq13"] = "S3<S123";
  CHECK(!diff_alpha_ineq(t2).empty());
  json g = load_reference("mutation_graph.json");
  g["R1"].erase(0);
  CHECK(!diff_graph(g).empty());
  json t3 = load_reference("table3.json");
  t3["cells"][0]["covering"] = "B";
  CHECK(!diff_facets(t3, 10, 1).empty());
}

TEST_CASE("boundary table") {
  const json t3 = load_reference("table3.json");
  CHECK(t3.contains("provenance"));
  const auto cfgs = facet_configs(t3);
  CHECK(cfgs.size() >= 40);
  const auto first = std::find_if(cfgs.begin(), cfgs.end(), [](const FacetConfig& c) { return c.label == "(A,B) [I]"; });
  REQUIRE(first != cfgs.end());
  CHECK(first->covering == 'I');
  CHECK(first->chart == 'A');
  const json f = table_facets(10, 1);
  CHECK(f["census"]["uncovered"] == 0);
  for (const auto& r : f["rows"]) CHECK(r["ok"] == true);
  CHECK(diff_facets(t3, 10, 1).empty());
  const std::string csv = table_csv(f);
  CHECK(csv.find("r1c1") != std::string::npos);
}

TEST_CASE("graph output") {
  const std::string dot = mutation_graph_dot();
  CHECK(dot.find("A -> B [label=\"R1\", style=solid]") != std::string::npos);
  CHECK(dot.find("A -> L [label=\"R2\", style=dotted]") != std::string::npos);
  CHECK(dot.find("I -> I [label=\"R2\", style=dotted, self_equivalent=true]") != std::string::npos);
  CHECK(count(dot, "self_equivalent=true") == 4);
  const json g = mutation_graph_json();
  CHECK(g["R1"].size() == 12);
  CHECK(g["R2"].size() == 12);
}

TEST_CASE("pictures") {
  const std::string generic = svg_rays(CentralCharge(cd(1, 1), cd(-0.5, 1), cd(0.2, -1)));
  CHECK(count(generic, "class=\"ray\"") == 6);
  const std::string left = svg_rays(CentralCharge(cd(-20, -20), cd(20, 20), cd(-30, 10)));
  CHECK(left.find(">S3=S123<") != std::string::npos);
  CHECK(left.find(">S12=0<") != std::string::npos);
  CHECK(count(left, "class=\"ray\"") == 4);

  const double eps = 1e-3;
  const CentralCharge za(1, cd(-2, -eps), cd(0, 1)), zb(1, cd(-2, eps), cd(0, 1));
  const auto tr = lift_path(ChargePath::line(za, zb), from_central_charge('A', za, {0, 0, 0}));
  CHECK(count(svg_timeline(tr), "class=\"crossing\"") == 1);
  const json j = to_json(tr);
  CHECK(j["crossings"] == 1);
  CHECK(j["status"] == "Complete");
  CHECK(count(trace_csv(tr), "\n") == 4);
}
