#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace segcalc;

TEST_CASE("projective basis shape", "[graded]") {
    Basis b = projective_basis(3);
    CHECK(b.name() == "P^3");
    CHECK(b.ambient_dim() == 3);
    CHECK(b.size() == 4);
    CHECK(b.element(2).label == "[P^2]");
    CHECK(b.element(2).dim == 2);
    CHECK(b.is_standard_projective());
    CHECK(b == projective_basis(3));
    CHECK(b != projective_basis(4));
    CHECK(*b.index_of("[P^1]") == 1);
    CHECK_FALSE(b.index_of("[P^9]").has_value());
}

TEST_CASE("basis validation", "[graded]") {
    CHECK_THROWS_WITH(Basis("b", 2, {{"x", 1}, {"x", 0}}), "duplicate basis label");
    CHECK_THROWS_WITH(Basis("b", 1, {{"x", 2}}), "basis element dimension out of range");
}

TEST_CASE("class arithmetic and normalization", "[graded]") {
    CycleClass a = pcls(3, {{2, 2}, {0, -5}});
    CycleClass b = pcls(3, {{2, -2}, {1, 7}});
    CycleClass sum = a + b;
    CHECK(sum == pcls(3, {{1, 7}, {0, -5}}));
    CHECK(sum.coeffs().size() == 2);  // the cancelled dimension-2 term is not stored
    CHECK((a - a).is_zero());
    CHECK(a * Rational(0) == CycleClass::zero(projective_basis(3)));
    CHECK(a * Rational(-3) == pcls(3, {{2, -6}, {0, 15}}));
    CHECK(Rational(2) * a == a + a);
    CHECK(a.coefficient_at_dim(2) == 2);
    CHECK(a.coefficient_at_dim(1) == 0);
    CHECK(a.has_integer_coefficients());
    CHECK_FALSE((a * Rational(1, 2)).has_integer_coefficients());
}

TEST_CASE("adding classes over different bases is rejected", "[graded]") {
    CycleClass a = pcls(3, {{1, 1}});
    CycleClass b = pcls(4, {{1, 1}});
    CHECK_THROWS_WITH(a + b, "incompatible bases");
}

TEST_CASE("rendering", "[graded]") {
    CHECK(pcls(5, {{2, 2}, {1, -8}, {0, 22}}).render() == "2[P^2] - 8[P^1] + 22[P^0]");
    CHECK(pcls(3, {{1, 1}, {0, -1}}).render() == "[P^1] - [P^0]");
    CHECK(pcls(3, {{0, -7}}).render() == "-7[P^0]");
    CHECK(CycleClass::zero(projective_basis(2)).render() == "0");
    CycleClass half = pcls(2, {{1, 3}}) * Rational(1, 2);
    CHECK(half.render() == "3/2[P^1]");
}

TEST_CASE("linear map application and grading shift", "[graded]") {
    LinearMap h = projective_h_action(3);
    CHECK(h.shifts_dim_by(-1));
    CHECK_FALSE(h.shifts_dim_by(0));
    CycleClass a = pcls(3, {{3, 1}, {1, 4}});
    CHECK(h.apply(a) == pcls(3, {{2, 1}, {0, 4}}));
    CHECK(h.apply(h.apply(h.apply(h.apply(a)))).is_zero());
}

TEST_CASE("capping with powers of the hyperplane class", "[graded]") {
    Basis p4 = projective_basis(4);
    CycleClass top = CycleClass::generator(p4, 4);
    for (unsigned k = 0; k <= 4; ++k)
        CHECK(cap_projective(HPoly::monomial(k), top) == CycleClass::generator(p4, 4 - k));
    CHECK(cap_projective(HPoly::monomial(5), top).is_zero());
}

TEST_CASE("capping is multiplicative in the polynomial", "[graded]") {
    CycleClass a = pcls(4, {{4, 1}, {3, -2}, {1, 5}});
    HPoly p({Rational(1), Rational(-3), Rational(2), Rational(0), Rational(7)});
    HPoly q({Rational(2), Rational(1), Rational(-1), Rational(4)});
    CycleClass both = cap_projective(p.times(q, 4), a);
    CycleClass sequential = cap_projective(p, cap_projective(q, a));
    CHECK(both == sequential);
}

TEST_CASE("capping truncates past the ambient dimension", "[graded]") {
    CycleClass a = pcls(2, {{2, 1}});
    HPoly p = HPoly::monomial(9, 13).plus(HPoly::one());
    CHECK(cap_projective(p, a) == a);
}

TEST_CASE("dimension-raising actions are rejected", "[graded]") {
    Basis p2 = projective_basis(2);
    std::vector<CycleClass> raising = {CycleClass::generator(p2, 1), CycleClass::generator(p2, 2),
                                       CycleClass::zero(p2)};
    LinearMap bad(p2, p2, raising);
    CHECK_THROWS_WITH(cap_hyperplane_polynomial(HPoly::one(), pcls(2, {{1, 1}}), bad),
                      "invalid hyperplane action");
}

TEST_CASE("binomial series coefficients", "[graded]") {
    HPoly p = HPoly::one_plus_pow(2, -1, 4);  // (1+2h)^(-1)
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(1) == -2);
    CHECK(p.coeff(2) == 4);
    CHECK(p.coeff(3) == -8);
    CHECK(p.coeff(4) == 16);
    HPoly q = HPoly::one_plus_pow(1, 3, 5);  // (1+h)^3 stops at degree 3
    CHECK(q.coeff(2) == 3);
    CHECK(q.coeff(3) == 1);
    CHECK(q.coeff(4) == 0);
    HPoly s = HPoly::one_plus_pow(1, -2, 3);  // (1+h)^(-2)
    CHECK(s.coeff(2) == 3);
    CHECK(s.coeff(3) == -4);
}

TEST_CASE("dual class is a graded sign flip and an involution", "[graded]") {
    CycleClass a = pcls(3, {{1, 1}, {0, -2}});
    CHECK(dual_class(a) == pcls(3, {{1, 1}, {0, 2}}));  // codims 2 and 3
    CycleClass b = pcls(4, {{4, 3}, {2, -1}, {1, 9}, {0, 5}});
    CHECK(dual_class(dual_class(b)) == b);
}

TEST_CASE("tensor twist", "[graded]") {
    // s(line, P^3)^v twisted by O(2): the step used by the two-component
    // closed form.
    CycleClass dual = pcls(3, {{1, 1}, {0, 2}});
    CHECK(tensor_class(dual, 2) == pcls(3, {{1, 1}, {0, -2}}));

    CycleClass a = pcls(4, {{3, 2}, {2, -5}, {0, 7}});
    CHECK(tensor_class(a, 0) == a);
    for (int d : {-2, -1, 1, 3})
        CHECK(tensor_class(tensor_class(a, d), -d) == a);  // degree twists compose
}

TEST_CASE("tensor twist requires the standard basis", "[graded]") {
    Basis odd("odd", 2, {{"x", 2}, {"y", 0}});
    CHECK_THROWS_AS(tensor_class(CycleClass::generator(odd, 0), 1), error);
}
