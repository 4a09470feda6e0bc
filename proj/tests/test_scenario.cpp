#include <catch2/catch_amalgamated.hpp>

#include <segcalc/scenario.hpp>

#include "test_util.hpp"

using namespace segcalc;

TEST_CASE("rationals round-trip through JSON") {
    CHECK(rational_to_json(Rational(7)) == json(7));
    CHECK(rational_to_json(Rational(-3)) == json(-3));
    CHECK(rational_from_json(json(42)) == Rational(42));
    CHECK(rational_from_json(json("2/3")) == Rational(2, 3));
    CHECK(rational_to_json(Rational(1, 2)) == json("1/2"));

    // Values outside int64 survive as strings.
    Rational big = Rational(factorial(25));
    json jb = rational_to_json(big);
    REQUIRE(jb.is_string());
    CHECK(rational_from_json(jb) == big);

    CHECK_THROWS_WITH(rational_from_json(json("x/y")), "invalid rational literal: x/y");
    CHECK_THROWS_WITH(rational_from_json(json(true)), "expected an integer or a rational string");
}

TEST_CASE("classes round-trip through JSON") {
    CycleClass c = pcls(5, {{2, 2}, {1, -8}, {0, 22}});
    json j = class_to_json(c);
    CHECK(j.at("basis") == "P^5");
    CHECK(j.at("render") == "2[P^2] - 8[P^1] + 22[P^0]");
    CHECK(class_from_json(j) == c);

    CycleClass with_fraction = pcls(2, {{1, 1}});
    with_fraction.add_term(0, Rational(3, 2));
    CHECK(class_from_json(class_to_json(with_fraction)) == with_fraction);

    CHECK_THROWS_WITH(class_from_json(json{{"basis", "Gr(2,4)"}, {"coeffs", json::object()}}),
                      "unknown basis: Gr(2,4)");
    CHECK_THROWS_WITH(class_from_json(json{{"basis", "P^2"}, {"coeffs", {{"5", 1}}}}),
                      "coefficient dimension out of range: 5");

    Basis q = SplitCenter::quadric_surface().chow_basis();
    CHECK_THROWS_WITH(class_to_json(CycleClass::generator(q, 0)),
                      "only standard projective classes are serialized");
}

TEST_CASE("center descriptors") {
    CHECK_FALSE(center_from_json(3, json("empty")).has_value());
    CHECK_THROWS_WITH(center_from_json(3, json("nothing")), "unknown center: nothing");

    auto lin = center_from_json(4, json{{"kind", "linear"}, {"dim", 2}});
    REQUIRE(lin.has_value());
    CHECK(lin->ambient_dim() == 4);
    CHECK(lin->dim() == 2);

    CHECK_THROWS_WITH(center_from_json(4, json{{"kind", "quadric_surface"}}),
                      "no resolving model available");
    auto quad = center_from_json(5, json{{"kind", "quadric_surface"}});
    REQUIRE(quad.has_value());
    CHECK(segre_smooth(*quad) == pcls(5, {{2, 2}, {1, -8}, {0, 22}}));

    auto ci = center_from_json(3, json{{"kind", "complete_intersection"}, {"degrees", {1, 2}}});
    REQUIRE(ci.has_value());
    CHECK(csm_smooth(*ci) == pcls(3, {{1, 2}, {0, 2}}));

    CHECK_THROWS_WITH(center_from_json(3, json{{"kind", "mystery"}}),
                      "unknown center kind: mystery");
}

TEST_CASE("a custom center descriptor can reproduce the built-in quadric") {
    json j = {
        {"kind", "custom"},
        {"normal_degrees", {2, 1, 1}},
        {"basis",
         {{"name", "quadric_surface"},
          {"dim", 2},
          {"elements",
           {{{"label", "[Q]"}, {"dim", 2}},
            {{"label", "[l1]"}, {"dim", 1}},
            {{"label", "[l2]"}, {"dim", 1}},
            {{"label", "[pt]"}, {"dim", 0}}}}}},
        {"h_action",
         {{"[Q]", {{"[l1]", 1}, {"[l2]", 1}}},
          {"[l1]", {{"[pt]", 1}}},
          {"[l2]", {{"[pt]", 1}}}}},
        {"pushforward", {{"[Q]", 2}, {"[l1]", 1}, {"[l2]", 1}, {"[pt]", 1}}},
    };
    auto c = center_from_json(5, j);
    REQUIRE(c.has_value());
    SplitCenter builtin = SplitCenter::quadric_surface();
    CHECK(segre_smooth(*c) == segre_smooth(builtin));
    CHECK(csm_smooth(*c) == csm_smooth(builtin));
    CHECK(union_segre(*c, {1, 1}) == union_segre(builtin, {1, 1}));

    // Without a unique top-dimensional element the fundamental class must be
    // spelled out.
    json two_tops = j;
    two_tops["basis"]["elements"] = {{{"label", "[A]"}, {"dim", 2}},
                                     {{"label", "[B]"}, {"dim", 2}}};
    two_tops["h_action"] = json::object();
    two_tops["pushforward"] = {{"[A]", 1}, {"[B]", 1}};
    CHECK_THROWS_WITH(center_from_json(5, two_tops),
                      "custom center needs an explicit fundamental class");
}

TEST_CASE("scenario parsing") {
    json j = {
        {"schema", "segcalc/1"},
        {"name", "two hyperplanes through the quadric"},
        {"ambient", 5},
        {"center", {{"kind", "quadric_surface"}}},
        {"components", {{"hypersurfaces", {1, 1}}}},
        {"operation", "union_segre"},
    };
    Scenario sc = parse_scenario(j);
    CHECK(sc.name == "two hyperplanes through the quadric");
    CHECK(sc.ambient == 5);
    REQUIRE(sc.center.has_value());
    REQUIRE(sc.hypersurfaces.has_value());
    CHECK(*sc.hypersurfaces == std::vector<int>{1, 1});
    CHECK(sc.op == "union_segre");

    json bad = j;
    bad["schema"] = "segcalc/2";
    CHECK_THROWS_WITH(parse_scenario(bad), "unsupported scenario schema (want segcalc/1)");
    json none = j;
    none.erase("schema");
    CHECK_THROWS_WITH(parse_scenario(none), "unsupported scenario schema (want segcalc/1)");

    json opobj = j;
    opobj["operation"] = {{"name", "approximation"}, {"r", 3}};
    Scenario sc2 = parse_scenario(opobj);
    CHECK(sc2.op == "approximation");
    CHECK(sc2.op_r == 3);
}

TEST_CASE("running a union scenario checks the expected class") {
    json j = {
        {"schema", "segcalc/1"},
        {"name", "repeated hyperplane pair"},
        {"ambient", 5},
        {"center", {{"kind", "quadric_surface"}}},
        {"components", {{"hypersurfaces", {1, 1}}}},
        {"operation", "union_segre"},
        {"expected", {{"coeffs", {{"4", 2}, {"3", -4}, {"2", 6}, {"1", -8}, {"0", 10}}}}},
    };
    ScenarioResult res = run_scenario(j);
    CHECK_FALSE(res.failed());
    REQUIRE(res.cls.has_value());
    CHECK(*res.cls == pcls(5, {{4, 2}, {3, -4}, {2, 6}, {1, -8}, {0, 10}}));
    REQUIRE(res.checks.size() == 1);
    CHECK(res.checks[0].name == "matches expected class");
    CHECK(res.to_json().at("status") == "pass");

    // A wrong expectation turns into a failed check, not an exception.
    json wrong = j;
    wrong["expected"]["coeffs"]["0"] = 11;
    ScenarioResult bad = run_scenario(wrong);
    CHECK(bad.failed());
    CHECK(bad.to_json().at("status") == "fail");
    CHECK(bad.to_text().find("FAIL") != std::string::npos);

    // A misspelled expectation key must not be silently ignored.
    json typo = j;
    typo["expected"] = json{{"coefficients", {{"0", 10}}}};
    CHECK_THROWS_WITH(run_scenario(typo), "unknown expected key: coefficients");
    json nonobj = j;
    nonobj["expected"] = json::array();
    CHECK_THROWS_WITH(run_scenario(nonobj), "expected must be an object");
}

TEST_CASE("running defect, recursion, and sequence scenarios") {
    json defect = {
        {"schema", "segcalc/1"},
        {"name", "defect in P^5"},
        {"ambient", 5},
        {"center", {{"kind", "quadric_surface"}}},
        {"components", {{"hypersurfaces", {1, 1, 1, 1, 1}}}},
        {"operation", "prop_fact"},
        {"expected", {{"coeffs", {{"0", -120}}}}},
    };
    ScenarioResult res = run_scenario(defect);
    CHECK_FALSE(res.failed());
    REQUIRE(res.cls.has_value());
    CHECK(*res.cls == pcls(5, {{0, -120}}));

    json rec = {
        {"schema", "segcalc/1"},
        {"name", "recursion past stabilization"},
        {"ambient", 5},
        {"center", {{"kind", "quadric_surface"}}},
        {"components", {{"hypersurfaces", {1}}}},
        {"operation", {{"name", "recursion"}, {"r", 6}}},
    };
    ScenarioResult rres = run_scenario(rec);
    CHECK_FALSE(rres.failed());
    REQUIRE(rres.checks.size() == 1);
    CHECK(rres.checks[0].pass);

    json euler = {
        {"schema", "segcalc/1"},
        {"name", "plane curve Euler characteristics"},
        {"ambient", 2},
        {"components", {{"hypersurfaces", {1}}}},
        {"operation", {{"name", "euler_sequence"}, {"r_max", 8}}},
        {"expected", {{"sequence", {2, 2, 0, -4, -10, -18, -28, -40}}}},
    };
    ScenarioResult eres = run_scenario(euler);
    CHECK_FALSE(eres.failed());
    CHECK(eres.sequence.size() == 8);

    json ident = {
        {"schema", "segcalc/1"},
        {"name", "divisibility at r=3"},
        {"operation", {{"name", "identities"}, {"r", 3}, {"truncation", 7}, {"with_y", true}}},
        {"expected", {{"divisible", true}}},
    };
    ScenarioResult ires = run_scenario(ident);
    CHECK_FALSE(ires.failed());
    // A caller-supplied truncation overrides the scenario's own.
    ScenarioResult ires2 = run_scenario(ident, 5u);
    CHECK_FALSE(ires2.failed());
}

TEST_CASE("scenario error paths") {
    json unknown = {
        {"schema", "segcalc/1"},
        {"name", "bad op"},
        {"ambient", 3},
        {"components", {{"hypersurfaces", {1}}}},
        {"operation", "transmogrify"},
    };
    CHECK_THROWS_WITH(run_scenario(unknown), "unknown operation: transmogrify");

    json lines_off_point = {
        {"schema", "segcalc/1"},
        {"name", "lines through a line"},
        {"ambient", 3},
        {"center", {{"kind", "linear"}, {"dim", 1}}},
        {"components", {{"lines", 2}}},
        {"operation", "union_segre"},
    };
    CHECK_THROWS_WITH(run_scenario(lines_off_point), "no resolving model available");

    json lines_wrong_ambient = {
        {"schema", "segcalc/1"},
        {"name", "lines outside P^3"},
        {"ambient", 4},
        {"center", {{"kind", "linear"}, {"dim", 0}}},
        {"components", {{"lines", 2}}},
        {"operation", "union_segre"},
    };
    CHECK_THROWS_WITH(run_scenario(lines_wrong_ambient), "no resolving model available");

    json no_ambient = {
        {"schema", "segcalc/1"},
        {"name", "missing ambient"},
        {"components", {{"hypersurfaces", {1}}}},
        {"operation", "union_segre"},
    };
    CHECK_THROWS_WITH(run_scenario(no_ambient), "scenario needs a positive ambient dimension");
}

TEST_CASE("lines scenarios run on the tower model") {
    json j = {
        {"schema", "segcalc/1"},
        {"name", "three lines through a point"},
        {"ambient", 3},
        {"center", {{"kind", "linear"}, {"dim", 0}}},
        {"components", {{"lines", 3}}},
        {"operation", "union_segre"},
        {"expected", {{"coeffs", {{"1", 3}, {"0", -8}}}}},
    };
    ScenarioResult res = run_scenario(j);
    CHECK_FALSE(res.failed());
    REQUIRE(res.cls.has_value());
    CHECK(*res.cls == pcls(3, {{1, 3}, {0, -8}}));

    json sub = j;
    sub["name"] = "two of the three lines";
    sub["components"] = {{"lines", 3}, {"subset", {1, 3}}};
    sub["expected"]["coeffs"] = {{"1", 2}, {"0", -5}};
    CHECK_FALSE(run_scenario(sub).failed());

    json empty_mode = j;
    empty_mode["name"] = "three lines, product scheme";
    empty_mode["center"] = "empty";
    empty_mode["expected"]["coeffs"] = {{"1", 3}, {"0", 0}};
    ScenarioResult eres = run_scenario(empty_mode);
    CHECK_FALSE(eres.failed());
}
