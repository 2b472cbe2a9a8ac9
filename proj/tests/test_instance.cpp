#include <doctest.h>

#include "helpers.hpp"

#include "emf/corpus.hpp"
#include "emf/report.hpp"

using namespace emf;

TEST_CASE("serialize / parse round trip on the whole corpus") {
  for (const auto& [label, inst] : default_corpus()) {
    CAPTURE(label);
    Json doc = serialize_instance(inst);
    ProblemInstance back = parse_instance_json(doc);
    CHECK(instances_equal(inst, back));
    // Serialization is canonical: a second pass is byte-identical.
    CHECK(serialize_instance(back).dump(2) == doc.dump(2));
  }
}

TEST_CASE("reports are deterministic across context rebuilds") {
  ProblemInstance inst = generate_corpus("quadric", Json{{"nvars", 2}});
  InstanceContext a = build_context(inst);
  InstanceContext b = build_context(inst);
  CHECK(render_report(report_chern(a)) == render_report(report_chern(b)));
  CHECK(render_report(report_euler(inst, a, "both")) == render_report(report_euler(inst, b, "both")));
  CHECK(render_report(report_conjd(a)) == render_report(report_conjd(b)));
}

TEST_CASE("malformed documents raise parse errors") {
  CHECK_THROWS_AS(parse_instance_json(Json::parse("{}")), parse_error);
  Json zero_order = serialize_instance(generate_corpus("spinor", Json::object()));
  zero_order["field"]["order"] = 0;
  CHECK_THROWS_AS(parse_instance_json(zero_order), parse_error);
}

TEST_CASE("semantic violations raise validation errors") {
  ProblemInstance good = generate_corpus("spinor", Json::object());
  Json doc = serialize_instance(good);

  SUBCASE("reserved field-generator name") {
    Json bad = doc;
    bad["variables"] = Json::array({"z"});
    CHECK_THROWS(parse_instance_json(bad));
  }
  SUBCASE("potential not invariant under the group") {
    Json bad = doc;
    bad["potential"] = "x^3";
    CHECK_THROWS_AS(build_context(parse_instance_json(bad)), validation_error);
  }
  SUBCASE("matrices that do not factor the potential") {
    Json bad = doc;
    bad["objects"][0]["A"][0][0] = "x^2";
    CHECK_THROWS_AS(build_context(parse_instance_json(bad)), validation_error);
  }
  SUBCASE("unknown representation reference") {
    Json bad = doc;
    bad["objects"][0]["rho0"] = "no-such-rep";
    CHECK_THROWS(parse_instance_json(bad));
  }
}

TEST_CASE("non-isolated potentials are rejected at context build") {
  ProblemInstance inst = generate_corpus("quadric", Json{{"nvars", 2}});
  Json doc = serialize_instance(inst);
  doc["potential"] = "x^2*y^2";
  // The objects no longer factor it either, but isolation is checked on the
  // identity sector; either way the context must refuse.
  CHECK_THROWS_AS(build_context(parse_instance_json(doc)), validation_error);
}
