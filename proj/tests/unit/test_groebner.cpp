#include <doctest.h>

#include "srcdec/errors.hpp"
#include "srcdec/groebner.hpp"
#include "srcdec/ideal_ops.hpp"
#include "test_support.hpp"

using namespace srcdec;
using srcdec::testing::Ring;

TEST_CASE("basis of the bundled three-polynomial system") {
    Ring r("u < v < x < y");
    const auto g = r.gb({"u*x*y", "v*y^2 + y", "v*x^2 + y^2"});
    CHECK(g.basis() == r.basis({"u*v*x^2", "v^4*x^4 + v*x^2", "y - v^2*x^2"}));
    for (const auto& f : r.polys({"u*x*y", "v*y^2 + y", "v*x^2 + y^2"}))
        CHECK(normal_form(f, g).is_zero());
}

TEST_CASE("inconsistent generators give the unit ideal") {
    Ring r("x");
    const auto g = r.gb({"x", "x - 1"});
    CHECK(g.is_unit());
    CHECK(g.basis() == r.basis({"1"}));
}

TEST_CASE("a basis that is already reduced comes back unchanged") {
    Ring r("x < y < z");
    const auto g = r.gb({"y - x^2", "z - x^3"});
    CHECK(g.basis() == r.basis({"y - x^2", "z - x^3"}));
    const auto& b = g.basis();
    CHECK(normal_form(s_polynomial(b[0], b[1]), g).is_zero());
    CHECK(is_groebner_of(g, r.polys({"y - x^2", "z - x^3"})));
}

TEST_CASE("empty generator list is the zero ideal") {
    Ring r("x < y");
    const auto g = groebner_basis(IdealGens(r.ordering()));
    CHECK(g.is_zero_ideal());
    CHECK_FALSE(g.is_unit());
    CHECK(normal_form(r("x + y"), g) == r("x + y"));
}

TEST_CASE("normal form") {
    Ring r("u < v < x < y");
    const auto g1 = r.gb({"u*x*y", "v*y^2 + y", "v*x^2 + y^2"});
    CHECK(normal_form(r("u*x*y"), g1).is_zero());

    const auto unit = r.gb({"1"});
    CHECK(normal_form(r("x^3 + u"), unit).is_zero());

    Ring s("x");
    CHECK(normal_form(s("x"), s.gb({"x^2"})) == s("x"));
    CHECK(normal_form(s("x^3 + 2*x"), s.gb({"x^2"})) == s("2*x"));
}

TEST_CASE("membership") {
    Ring r("x < y");
    const auto g = r.gb({"x^2"});
    CHECK(is_member(r("x^2*y"), g));
    CHECK_FALSE(is_member(r("y"), g));

    Ring s("u < v < x < y");
    CHECK(is_member(s("v^4*x^4 + v*x^2"), s.gb({"x^2", "y"})));
}

TEST_CASE("ideal equality") {
    Ring r("x < y < z");
    CHECK(ideal_equal(r.gb({"x^2 - x"}), r.gb({"x^2 - x"})));
    CHECK_FALSE(ideal_equal(r.gb({"x"}), r.gb({"x^2"})));
    CHECK(ideal_equal(r.gb({"x", "y"}), r.gb({"x + y", "x - y"})));

    const auto c1 = r.ideal({"x^2 - x", "(y^2 - x)*(y - 1)", "(y - 1)*z"});
    const auto g = groebner_basis(c1);
    const auto t = r.triset({"x^2 - x", "(y^2 - x)*(y - 1)", "(y - 1)*z"});
    CHECK_FALSE(ideal_equal(g, sat_triset(t)));

    Ring other("y < x");
    CHECK_THROWS_AS(ideal_equal(r.gb({"x"}), other.gb({"x"})), StructuralError);
}

TEST_CASE("elimination keeps the basis elements over a variable prefix") {
    Ring r("x < y < z");
    const auto x_only = make_ordering({"x"});
    CHECK(eliminate(r.gb({"y - x^2", "z - x^3"}), x_only).is_zero_ideal());

    Ring s("x < y");
    const auto e = eliminate(s.gb({"x", "y"}), x_only);
    CHECK(e.basis() == Ring("x").basis({"x"}));

    CHECK_THROWS_AS(eliminate(s.gb({"x"}), make_ordering({"y"})), DomainError);
}

TEST_CASE("eliminating the tag variable yields a saturation") {
    Ring r("y < x < z < w");
    const auto g = r.gb({"y^2", "x^2*z + x*y", "1 - w*x^2"});
    const auto e = eliminate(g, make_ordering({"y", "x", "z"}));
    Ring s("y < x < z");
    CHECK(e.basis() == s.basis({"y^2", "y*z", "x*z + y", "z^2"}));
}

TEST_CASE("resource budget aborts large runs") {
    Ring r("x < y < z");
    ComputeContext ctx;
    ctx.gb.budget.max_total_terms = 5;
    CHECK_THROWS_AS(groebner_basis(r.ideal({"x^3 + y^2 + z", "x*y*z - 1", "z^2 - x - y"}), &ctx),
                    ResourceError);
}

TEST_CASE("pair selection strategies agree") {
    Ring r("x < y < z");
    const auto gens = r.ideal({"x^2 + y*z - 1", "x*y - z^2", "z^3 - x"});
    ComputeContext normal;
    ComputeContext sugar;
    sugar.gb.selection = PairSelection::Sugar;
    CHECK(groebner_basis(gens, &normal) == groebner_basis(gens, &sugar));
}

TEST_CASE("extending a basis matches recomputing from scratch") {
    Ring r("x < y < z");
    const auto base = r.gb({"x^2 - y", "y*z - 1"});
    const auto extra = r.polys({"z^2 - x"});
    CHECK(groebner_extend(base, extra) == r.gb({"x^2 - y", "y*z - 1", "z^2 - x"}));
}
