#include <doctest.h>

#include "srcdec/errors.hpp"
#include "srcdec/system_io.hpp"
#include "test_support.hpp"

using namespace srcdec;
using srcdec::testing::Ring;

TEST_CASE("parse the three-polynomial system") {
    const auto sys = parse_system("vars: u < v < x < y\nu*x*y\nv*y^2 + y\nv*x^2 + y^2");
    CHECK(sys.ordering->names() == std::vector<std::string>{"u", "v", "x", "y"});
    Ring r("u < v < x < y");
    CHECK(sys.gens.gens() == r.polys({"u*x*y", "v*y^2 + y", "v*x^2 + y^2"}));
    CHECK(sys.warnings.empty());
    CHECK_FALSE(sys.expected_pairs.has_value());
}

TEST_CASE("zero polynomial is dropped with a warning") {
    const auto sys = parse_system("vars: x\nx - x");
    CHECK(sys.gens.empty());
    REQUIRE(sys.warnings.size() == 1);
    CHECK(sys.warnings[0].find("line 2") != std::string::npos);
}

TEST_CASE("rational coefficients round-trip") {
    const auto sys = parse_system("vars: x < y\n2/3*x^2 - y");
    REQUIRE(sys.gens.gens().size() == 1);
    const auto& p = sys.gens.gens()[0];
    CHECK(p.size() == 2);
    CHECK(p.terms()[1].coeff == Rational(2, 3));
    const auto again = parse_system(render_system(sys.ordering, sys.gens.gens()));
    CHECK(again.gens.gens() == sys.gens.gens());
    CHECK(to_string_cleared(p) == "3*y - 2*x^2");
}

TEST_CASE("comments and metadata") {
    const auto sys = parse_system(
        "# name: demo\n# expected_pairs: 2\n# bench: extended\n\nvars: a < b  # ascending\n"
        "(a + b)^2 - 1   # a circle-ish thing\n\nb*a\n");
    CHECK(sys.name == "demo");
    CHECK(sys.expected_pairs == 2u);
    CHECK(sys.metadata.at("bench") == "extended");
    CHECK(sys.gens.gens().size() == 2);
}

TEST_CASE("parse errors carry line and column") {
    auto error_at = [](const char* text) -> std::pair<std::size_t, std::size_t> {
        try {
            parse_system(text);
        } catch (const ParseError& e) {
            return {e.line(), e.column()};
        }
        return {0, 0};
    };
    CHECK(error_at("vars: x < y\nx + z") == std::pair<std::size_t, std::size_t>{2, 5});
    CHECK(error_at("vars: x\nx $ 1") == std::pair<std::size_t, std::size_t>{2, 3});
    CHECK(error_at("x + 1\nvars: x").first == 1);
    CHECK(error_at("vars: x\n").first != 0);
    CHECK(error_at("vars: x < x\nx").first == 1);
    CHECK(error_at("vars: x\nvars: x\nx").first == 2);
    CHECK(error_at("vars: x\nx/0").first == 2);
    CHECK(error_at("vars: x\n1/0").first == 2);
    CHECK(error_at("vars: x\n(x + 1").first == 2);
    CHECK(error_at("vars: x\nx^-1").first == 2);
    CHECK(error_at("vars: x\nx^70000").first == 2);
    CHECK(error_at("# expected_pairs: many\nvars: x\nx").first == 1);
}

TEST_CASE("implicit multiplication is rejected") {
    CHECK_THROWS_AS(parse_system("vars: x < y\n2 x"), ParseError);
    CHECK_THROWS_AS(parse_system("vars: x < y\nx y"), ParseError);
}

TEST_CASE("unary minus and parentheses") {
    Ring r("x < y");
    CHECK(parse_polynomial("-(x - y)^2", r.ordering()) == r("-x^2 + 2*x*y - y^2"));
    CHECK(parse_polynomial("--x", r.ordering()) == r("x"));
    CHECK(parse_polynomial("+x - -y", r.ordering()) == r("x + y"));
}

TEST_CASE("remapping to another ordering") {
    Ring r("x < y");
    const auto target = parse_ordering("y < z < x");
    const auto p = remap(r("x^2*y - 1"), target);
    CHECK(p == Ring("y < z < x")("x^2*y - 1"));
    CHECK_THROWS_AS(remap(r("x"), parse_ordering("y < z")), DomainError);

    const auto sys = parse_system("vars: x < y\nx - y^2");
    const auto moved = with_ordering(sys, parse_ordering("y < x"));
    CHECK(same_ordering(moved.gens.ordering(), moved.ordering));
    CHECK(moved.gens.gens()[0] == Ring("y < x")("x - y^2"));
}

TEST_CASE("loading a corpus file fills in its name") {
    const auto sys = load_system(srcdec::testing::corpus_path("ex5_1.sys"));
    CHECK(sys.name == "ex5_1");
    CHECK(sys.expected_pairs == 3u);
    CHECK_THROWS_AS(load_system("/nonexistent/none.sys"), DomainError);
}
