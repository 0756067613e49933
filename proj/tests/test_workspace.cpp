#include "doctest.h"
#include "qhom/workspace.hpp"

#include "fixtures.hpp"

using namespace qhom;

namespace {

Json l3_doc() {
  Json doc;
  doc["kind"] = "algebra";
  doc["name"] = "L3";
  doc["field"] = 2;
  doc["vertices"] = Json::array({"1", "2", "3"});
  doc["arrows"] = Json::array({Json::array({"alpha", "3", "2"}), Json::array({"beta", "2", "1"})});
  doc["relations"] = Json::array({Json::array({"alpha", "beta"})});
  return doc;
}

}  // namespace

TEST_CASE("documents define and resolve") {
  Workspace ws;
  ws.define(l3_doc());
  auto l3 = ws.algebra("L3");
  CHECK(l3->algebra().dim() == 5);

  ws.define(Json{{"kind", "module"},
                 {"name", "mymod"},
                 {"algebra", "L3"},
                 {"dims", {{"1", 1}, {"2", 1}}},
                 {"action", {{"beta", {{1}}}}}});
  Rep m = ws.resolve_module("mymod", std::static_pointer_cast<const Cat>(l3));
  CHECK(m.dims == std::vector<int>{1, 1, 0});
  CHECK(is_iso(m, projective_rep(std::static_pointer_cast<const Cat>(l3), 1)));

  SUBCASE("standard names resolve") {
    Rep p2 = ws.resolve_module("P(2)", std::static_pointer_cast<const Cat>(l3));
    CHECK(is_iso(p2, m));
    Rep i1 = ws.resolve_module("I(1)", std::static_pointer_cast<const Cat>(l3));
    CHECK(is_iso(i1, m));
  }
  SUBCASE("bad references fail with input errors") {
    CHECK_THROWS_AS(ws.resolve_module("nope", std::static_pointer_cast<const Cat>(l3)), Error);
    CHECK_THROWS_AS(ws.algebra("nope"), Error);
    CHECK_THROWS_AS(ws.define(l3_doc()), Error);  // duplicate name
  }
  SUBCASE("invalid modules are rejected on load") {
    // beta then alpha must act as zero; force a violation
    Json bad{{"kind", "module"},
             {"name", "bad"},
             {"algebra", "L3"},
             {"dims", {{"1", 1}, {"2", 1}, {"3", 1}}},
             {"action", {{"alpha", {{1}}}, {"beta", {{1}}}}}};
    CHECK_THROWS_AS(ws.define(bad), Error);
  }
  SUBCASE("linear combination relations are rejected at parse time") {
    Json bad;
    bad["kind"] = "algebra";
    bad["name"] = "badalg";
    bad["field"] = 2;
    bad["vertices"] = Json::array({"1"});
    bad["arrows"] = Json::array({Json::array({"x", "1", "1"}), Json::array({"y", "1", "1"})});
    Json combo;
    combo["combo"] = "x+y";  // a linear combination, not a path
    bad["relations"] = Json::array({Json::array({combo, "y"})});
    CHECK_THROWS_AS(ws.define(bad), Error);
  }
}

TEST_CASE("module and triple documents round trip") {
  Workspace ws;
  ws.define(l3_doc());
  ws.define(Json{{"kind", "split"}, {"name", "T"}, {"algebra", "L3"}, {"r_vertices", {"1"}}});
  const TriangularSplit& sp = ws.split("T");
  auto lam = std::static_pointer_cast<const Cat>(sp.lambda);

  for (const auto& m : enumerate_indecomposables(lam, 3)) {
    Json doc = Workspace::module_doc(m);
    Rep back = ws.module_from_doc(doc);
    CHECK(back == m);

    Rep t = sp.module_to_triple(m);
    Json tdoc = Workspace::triple_doc(t);
    Rep tback = ws.module_from_doc(tdoc);
    CHECK(is_iso(tback, t));
  }
}

TEST_CASE("reports are deterministic and re-verify") {
  Workspace ws;
  ws.define(l3_doc());
  Json cls_doc;
  cls_doc["kind"] = "class";
  cls_doc["name"] = "pXY";
  cls_doc["ambient"] = "L3";
  cls_doc["members"] = Json::array({"P(1)", "P(2)", "P(3)", "S(3)"});
  cls_doc["extension_closed"] = true;
  ws.define(cls_doc);
  const ObjectClass& cls = ws.object_class("pXY");
  Rep s2 = ws.resolve_module("S(2)", cls.ambient);

  ApproxResult r1 = special_precover(s2, cls);
  ApproxResult r2 = special_precover(s2, cls);
  Json a = ws.approx_report(r1, "pXY", PerpDegree::ExtOne);
  Json b = ws.approx_report(r2, "pXY", PerpDegree::ExtOne);
  CHECK(a.dump() == b.dump());  // byte-identical reports

  Json again = ws.verify_report(a);
  CHECK(again.at("exact").get<bool>());
  CHECK(again.at("arrow").get<bool>());
  CHECK(again.at("object_in_class").get<bool>());
  CHECK(again.at("end_in_perp").get<bool>());
}

TEST_CASE("the shipped workspaces load") {
  std::string root = QHOM_WORKSPACE_DIR;
  SUBCASE("counterexample") {
    Workspace ws;
    ws.load_directory(root + "/counterexample");
    CHECK(ws.has_algebra("L3"));
    CHECK(ws.has_comma("T"));
    CHECK(ws.object_class("pXY").members.size() == 4);
  }
  SUBCASE("selfinjective") {
    Workspace ws;
    ws.load_directory(root + "/selfinjective");
    CHECK(ws.has_comma("T2N2"));
    CHECK(ws.has_module("t0"));
    Rep t0 = ws.resolve_module("t0", nullptr);
    CHECK(t0.total_dim() == 1);
  }
  SUBCASE("cmfree") {
    Workspace ws;
    ws.load_directory(root + "/cmfree");
    CHECK(ws.has_algebra("CMF3"));
    CHECK(ws.has_comma("Tcm"));
  }
}

TEST_CASE("rational modules work through documents") {
  Workspace ws;
  Json aq;
  aq["kind"] = "algebra";
  aq["name"] = "kA2Q";
  aq["field"] = 0;
  aq["vertices"] = Json::array({"1", "2"});
  aq["arrows"] = Json::array({Json::array({"a", "2", "1"})});
  ws.define(aq);
  ws.define(Json{{"kind", "module"},
                 {"name", "mq"},
                 {"algebra", "kA2Q"},
                 {"dims", {{"1", 1}, {"2", 1}}},
                 {"action", {{"a", {{"2/3"}}}}}});
  Rep m = ws.resolve_module("mq", ws.ambient("kA2Q"));
  auto cat = ws.ambient("kA2Q");
  CHECK(hom_dim(projective_rep(cat, 1), m) == 1);
  CHECK(ext_dim(simple_rep(cat, 1), simple_rep(cat, 0), 1) == 1);
  // a rational module isomorphic to the projective
  CHECK(is_projective(m));
}
