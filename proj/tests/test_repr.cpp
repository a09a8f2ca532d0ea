#include "ellipcp/repr.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace ellipcp;

namespace {

CircleRep circle(std::initializer_list<std::pair<Int, Int>> terms) {
    CircleRep v;
    for (const auto& [n, m] : terms) v.add(n, m);
    return v;
}

TorusRep torus(std::initializer_list<std::pair<Character, Int>> terms) {
    TorusRep w;
    for (const auto& [chi, m] : terms) w.add(chi, m);
    return w;
}

CircleRep random_circle_rep(std::mt19937& rng, bool allow_empty = false) {
    std::uniform_int_distribution<Int> n_terms(allow_empty ? 0 : 1, 4), expo(-6, 6), mult(1, 5);
    CircleRep v;
    Int k = n_terms(rng);
    for (Int i = 0; i < k; ++i) v.add(expo(rng), mult(rng));
    return v;
}

}  // namespace

TEST_CASE("parse_circle_rep") {
    SECTION("the introductory example") {
        CHECK(parse_circle_rep("eps + 4z") == circle({{0, 1}, {1, 4}}));
    }
    SECTION("single term") { CHECK(parse_circle_rep("3z^5") == circle({{5, 3}})); }
    SECTION("repeated characters accumulate") {
        CHECK(parse_circle_rep("z^2 + z^2 + eps") == circle({{0, 1}, {2, 2}}));
    }
    SECTION("eps is a synonym for z^0") {
        CHECK(parse_circle_rep("eps") == parse_circle_rep("z^0"));
        CHECK(parse_circle_rep("2eps + z^0") == circle({{0, 3}}));
    }
    SECTION("negative exponents and whitespace") {
        CHECK(parse_circle_rep("  7 z^-3+ z ") == circle({{-3, 7}, {1, 1}}));
    }
    SECTION("syntax errors carry a position") {
        CHECK_THROWS_AS(parse_circle_rep(""), parse_error);
        CHECK_THROWS_AS(parse_circle_rep("4"), parse_error);
        CHECK_THROWS_AS(parse_circle_rep("z +"), parse_error);
        CHECK_THROWS_AS(parse_circle_rep("z ^"), parse_error);
        CHECK_THROWS_AS(parse_circle_rep("w^2"), parse_error);
        CHECK_THROWS_AS(parse_circle_rep("z z"), parse_error);
        try {
            parse_circle_rep("z + q");
        } catch (const parse_error& e) {
            CHECK(e.position == 4);
        }
    }
    SECTION("zero multiplicity rejected") {
        CHECK_THROWS_AS(parse_circle_rep("0z"), parse_error);
        CHECK_THROWS_AS(parse_circle_rep("z + 0eps"), parse_error);
    }
}

TEST_CASE("parse_torus_rep") {
    CHECK(parse_torus_rep("x^0y^1 + 4x^1y^1") ==
          torus({{Character{0, 1}, 1}, {Character{1, 1}, 4}}));
    CHECK(parse_torus_rep("2x^1y^1") == torus({{Character{1, 1}, 2}}));
    CHECK(parse_torus_rep("x^0y^0") == torus({{Character{0, 0}, 1}}));
    CHECK(parse_torus_rep("eps") == torus({{Character{0, 0}, 1}}));
    CHECK(parse_torus_rep("x") == torus({{Character{1, 0}, 1}}));
    CHECK(parse_torus_rep("y^-2 + 3xy") ==
          torus({{Character{0, -2}, 1}, {Character{1, 1}, 3}}));
    CHECK(parse_torus_rep("x^2 + x^2y^0") == torus({{Character{2, 0}, 2}}));
    CHECK_THROWS_AS(parse_torus_rep("3"), parse_error);
    CHECK_THROWS_AS(parse_torus_rep("xy + "), parse_error);
}

TEST_CASE("canonical printers round-trip") {
    CHECK(to_string(parse_circle_rep("z^2+eps+ z ^ 2+z")) == "eps + z + 2z^2");
    CHECK(to_string(CircleRep{}) == "0");
    CHECK(to_string(parse_torus_rep("4x^1y^1 + x^0y^1")) == "x^0y^1 + 4x^1y^1");

    std::mt19937 rng(101);
    for (int trial = 0; trial < 200; ++trial) {
        CircleRep v = random_circle_rep(rng);
        CHECK(parse_circle_rep(to_string(v)) == v);
    }
}

TEST_CASE("tensor_with_w") {
    SECTION("z^n lands on the character (n, 1)") {
        CHECK(tensor_with_w(circle({{0, 1}, {1, 4}})) ==
              torus({{Character{0, 1}, 1}, {Character{1, 1}, 4}}));
    }
    SECTION("empty representation") { CHECK(tensor_with_w(CircleRep{}) == TorusRep{}); }
    SECTION("negative exponents pass through") {
        CHECK(tensor_with_w(circle({{-2, 3}})) == torus({{Character{-2, 1}, 3}}));
    }
    SECTION("dimension is preserved") {
        std::mt19937 rng(55);
        for (int trial = 0; trial < 100; ++trial) {
            CircleRep v = random_circle_rep(rng, /*allow_empty=*/true);
            CHECK(tensor_with_w(v).dimension() == v.dimension());
        }
    }
}

TEST_CASE("fixed_dim") {
    auto diag2 = FiniteSubgroup::from_generators({TorsionPoint(Rational(1, 2), Rational(1, 2))});
    auto third = FiniteSubgroup::from_generators({TorsionPoint(Rational(1, 3), Rational(0))});

    SECTION("spec values") {
        CHECK(fixed_dim(torus({{Character{1, 1}, 1}, {Character{2, 0}, 2}}), diag2) == 3);
        CHECK(fixed_dim(torus({{Character{1, 1}, 1}, {Character{2, 0}, 2}}), FiniteSubgroup()) == 3);
        CHECK(fixed_dim(torus({{Character{1, 1}, 1}}), third) == 0);
    }
    SECTION("trivial subgroup fixes everything") {
        std::mt19937 rng(77);
        std::uniform_int_distribution<Int> expo(-4, 4), mult(1, 5);
        for (int trial = 0; trial < 50; ++trial) {
            TorusRep w;
            for (int i = 0; i < 3; ++i) w.add(Character{expo(rng), expo(rng)}, mult(rng));
            CHECK(fixed_dim(w, FiniteSubgroup()) == w.dimension());
        }
    }
    SECTION("monotone non-increasing as the subgroup grows") {
        std::mt19937 rng(78);
        std::uniform_int_distribution<Int> expo(-4, 4), mult(1, 4), ord(1, 10), num(0, 9);
        for (int trial = 0; trial < 100; ++trial) {
            TorusRep w;
            for (int i = 0; i < 3; ++i) w.add(Character{expo(rng), expo(rng)}, mult(rng));
            Int n1 = ord(rng), n2 = ord(rng);
            auto f = FiniteSubgroup::from_generators(
                {TorsionPoint(Rational(num(rng) % n1, n1), Rational(num(rng) % n1, n1))});
            auto g = FiniteSubgroup::from_generators(
                {TorsionPoint(Rational(num(rng) % n2, n2), Rational(num(rng) % n2, n2))});
            auto bigger = join(f, g);
            CHECK(fixed_dim(w, bigger) <= fixed_dim(w, f));
        }
    }
}
