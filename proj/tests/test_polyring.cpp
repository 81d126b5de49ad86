#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polyaut/errors.hpp"
#include "polyaut/polynomial.hpp"
#include "polyaut/polynomial_io.hpp"
#include "support/generators.hpp"

using namespace polyaut;
using polyaut::testing::random_nonzero_polynomial;
using polyaut::testing::random_polynomial;
using polyaut::testing::random_rational;

namespace {

Polynomial parse(const std::string& text, int arity) { return parse_polynomial(text, arity); }

}  // namespace

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(3, -9).denominator() == 3);
    CHECK(Rational(3, -9).numerator() == -1);
    CHECK(Rational::from_string("-4/6").to_string() == "-2/3");
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK(Rational(5, 7) / Rational(5, 7) == Rational(1));
    CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
}

TEST_CASE("rational arbitrary precision") {
    Rational big = Rational::from_string("123456789012345678901234567890");
    CHECK(big * big > big);
    CHECK((big * big / big) == big);
}

TEST_CASE("add: cancellation, identity, merge") {
    const Polynomial x1 = parse("x1", 2), x2 = parse("x2", 2);
    CHECK((x1 + x2) + (-x2) == x1);
    CHECK(x1 + Polynomial(2) == x1);
    CHECK(parse("x1^2", 2) + parse("x1^2", 2) == parse("2*x1^2", 2));
    CHECK_THROWS_AS(parse("x1", 2) + parse("x1", 3), std::invalid_argument);
}

TEST_CASE("mul: difference of squares, identity") {
    CHECK(parse("x1 + x2", 2) * parse("x1 - x2", 2) == parse("x1^2 - x2^2", 2));
    const Polynomial p = parse("2*x1*x2 - 1/3", 2);
    CHECK(p * Polynomial::constant(2, Rational(1)) == p);
}

TEST_CASE("mul: cube of a long linear form matches the naive trinomial-expansion oracle") {
    // (1/6 x4 + 1/6 x5 - 1/3 x6 - 1/6 x7 - 1/6 x8 + 1/3 x9 + x13)^3, the
    // first cubic-linear component of the dimension-13 example.
    const int n = 13;
    const int vars[] = {3, 4, 5, 6, 7, 8, 12};
    const Rational coeffs[] = {Rational(1, 6), Rational(1, 6),  Rational(-1, 3), Rational(-1, 6),
                               Rational(-1, 6), Rational(1, 3), Rational(1)};
    Polynomial linear(n);
    for (int t = 0; t < 7; ++t) linear += Polynomial::variable(n, vars[t]).scaled(coeffs[t]);

    // Oracle: expand sum_{a,b,c} c_a c_b c_c x_a x_b x_c term by term without
    // using Polynomial::operator*.
    std::vector<Polynomial::Term> expansion;
    for (int a = 0; a < 7; ++a) {
        for (int b = 0; b < 7; ++b) {
            for (int c = 0; c < 7; ++c) {
                std::vector<std::uint32_t> e(n, 0);
                ++e[static_cast<std::size_t>(vars[a])];
                ++e[static_cast<std::size_t>(vars[b])];
                ++e[static_cast<std::size_t>(vars[c])];
                expansion.push_back({Monomial(std::move(e)), coeffs[a] * coeffs[b] * coeffs[c]});
            }
        }
    }
    const Polynomial expected = Polynomial::from_terms(n, std::move(expansion));
    const Polynomial cubed = linear * linear * linear;
    CHECK(cubed == expected);
    CHECK(cubed == linear.pow(3));

    // 1/216 denominators really occur
    bool saw_216 = false;
    for (const auto& t : cubed.terms()) saw_216 = saw_216 || t.coefficient.denominator() == 216;
    CHECK(saw_216);
}

TEST_CASE("partial derivative basics") {
    CHECK(parse("x1^3", 1).partial_derivative(0) == parse("3*x1^2", 1));
    CHECK(parse("x2", 2).partial_derivative(0).is_zero());
    // Expanded Nagata F2 = x2 + x3^2*x1 + x3*x2^2, d/dx3 = 2*x3*x1 + x2^2
    const Polynomial f2 = parse("x2 + x3*(x3*x1 + x2^2)", 3);
    CHECK(f2.partial_derivative(2) == parse("2*x3*x1 + x2^2", 3));
    CHECK_THROWS_AS(f2.partial_derivative(3), std::invalid_argument);
}

TEST_CASE("exact divide") {
    CHECK(exact_divide(parse("x1^2 - x2^2", 2), parse("x1 - x2", 2)) == parse("x1 + x2", 2));
    const Polynomial p = parse("x1^3*x2 - 7", 2);
    CHECK(exact_divide(p, Polynomial::constant(2, Rational(1))) == p);
    CHECK(exact_divide(Polynomial(2), p).is_zero());
    CHECK_THROWS_AS(exact_divide(parse("x1 + 1", 1), parse("x1", 1)), InexactDivision);
    CHECK_THROWS_AS(exact_divide(p, Polynomial(2)), InexactDivision);
}

TEST_CASE("substitute") {
    const Polynomial p = parse("x1 + x2", 2);
    std::vector<Polynomial> swap = {parse("x2", 2), parse("x1", 2)};
    CHECK(p.substitute(swap) == p);

    // -2 y3^5 composed with the Nagata components gives -2 x3^5
    std::vector<Polynomial> nagata = {
        parse("x1 - 2*x2*(x3*x1 + x2^2) - x3*(x3*x1 + x2^2)^2", 3),
        parse("x2 + x3*(x3*x1 + x2^2)", 3),
        parse("x3", 3),
    };
    CHECK(parse("-2*x3^5", 3).substitute(nagata) == parse("-2*x3^5", 3));

    std::vector<Polynomial> id3 = {parse("x1", 3), parse("x2", 3), parse("x3", 3)};
    const Polynomial q = parse("x1^2*x3 - 5/7*x2", 3);
    CHECK(q.substitute(id3) == q);
    CHECK_THROWS_AS(q.substitute(swap), std::invalid_argument);
}

TEST_CASE("evaluate") {
    CHECK(parse("x1*x2", 2).evaluate({Rational(2), Rational(3)}) == Rational(6));
    CHECK(Polynomial(3).evaluate({Rational(5), Rational(-7), Rational(0)}) == Rational(0));
    CHECK_THROWS_AS(parse("x1", 2).evaluate({Rational(1)}), std::invalid_argument);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(12345);
    for (int round = 0; round < 60; ++round) {
        const int arity = 1 + static_cast<int>(rng() % 4);
        const Polynomial p = random_polynomial(rng, arity);
        const Polynomial q = random_polynomial(rng, arity);
        const Polynomial r = random_polynomial(rng, arity);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p - p).is_zero());
    }
}

TEST_CASE("Leibniz rule on random polynomials") {
    std::mt19937 rng(777);
    for (int round = 0; round < 40; ++round) {
        const int arity = 1 + static_cast<int>(rng() % 4);
        const int v = static_cast<int>(rng() % static_cast<unsigned>(arity));
        const Polynomial p = random_polynomial(rng, arity);
        const Polynomial q = random_polynomial(rng, arity);
        CHECK((p * q).partial_derivative(v) ==
              p * q.partial_derivative(v) + q * p.partial_derivative(v));
    }
}

TEST_CASE("substitution composes") {
    std::mt19937 rng(4242);
    const int n = 3;
    for (int round = 0; round < 20; ++round) {
        const Polynomial p = random_polynomial(rng, n, 3, 4);
        std::vector<Polynomial> g, h;
        for (int i = 0; i < n; ++i) {
            g.push_back(random_polynomial(rng, n, 2, 3));
            h.push_back(random_polynomial(rng, n, 2, 3));
        }
        std::vector<Polynomial> gh;
        for (int i = 0; i < n; ++i) gh.push_back(g[static_cast<std::size_t>(i)].substitute(h));
        CHECK(p.substitute(g).substitute(h) == p.substitute(gh));
    }
}

TEST_CASE("exact_divide undoes mul") {
    std::mt19937 rng(99);
    for (int round = 0; round < 40; ++round) {
        const int arity = 1 + static_cast<int>(rng() % 3);
        const Polynomial p = random_polynomial(rng, arity);
        const Polynomial q = random_nonzero_polynomial(rng, arity);
        CHECK(exact_divide(p * q, q) == p);
    }
}

TEST_CASE("evaluate is a ring homomorphism") {
    std::mt19937 rng(31337);
    for (int round = 0; round < 40; ++round) {
        const int arity = 1 + static_cast<int>(rng() % 3);
        const Polynomial p = random_polynomial(rng, arity);
        const Polynomial q = random_polynomial(rng, arity);
        std::vector<Rational> point;
        for (int v = 0; v < arity; ++v) point.push_back(random_rational(rng));
        CHECK((p + q).evaluate(point) == p.evaluate(point) + q.evaluate(point));
        CHECK((p * q).evaluate(point) == p.evaluate(point) * q.evaluate(point));
    }
    // evaluate commutes with substitute
    for (int round = 0; round < 20; ++round) {
        const int arity = 2;
        const Polynomial p = random_polynomial(rng, arity);
        std::vector<Polynomial> images = {random_polynomial(rng, arity), random_polynomial(rng, arity)};
        std::vector<Rational> point = {random_rational(rng), random_rational(rng)};
        std::vector<Rational> image_values = {images[0].evaluate(point), images[1].evaluate(point)};
        CHECK(p.substitute(images).evaluate(point) == p.evaluate(image_values));
    }
}

TEST_CASE("printing round-trips through the parser") {
    std::mt19937 rng(2024);
    for (int round = 0; round < 60; ++round) {
        const int arity = 1 + static_cast<int>(rng() % 4);
        const Polynomial p = random_polynomial(rng, arity, 5, 7);
        CHECK(parse_polynomial(to_string(p), arity) == p);
    }
    CHECK(to_string(Polynomial(3)) == "0");
    CHECK(to_string(parse("-2*x3^5", 3)) == "-2*x3^5");
    CHECK(to_string(parse("x2 + x3*(x3*x1 + x2^2)", 3)) == "x2^2*x3 + x1*x3^2 + x2");
}

TEST_CASE("parser rejects bad syntax with positions") {
    CHECK_THROWS_AS(parse("2x1", 2), ParseError);
    CHECK_THROWS_AS(parse("x1 +", 2), ParseError);
    CHECK_THROWS_AS(parse("x0", 2), ParseError);
    CHECK_THROWS_AS(parse("x3", 2), ParseError);
    CHECK_THROWS_AS(parse("x1 ^ x2", 2), ParseError);
    CHECK_THROWS_AS(parse("(x1", 2), ParseError);
    CHECK_THROWS_AS(parse("1/0", 2), ParseError);
    CHECK_THROWS_AS(parse("y1", 2), ParseError);
    try {
        parse("x1 * 2x2", 2);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 7);
    }
    // case-insensitive variables, rational literals, nested parens
    CHECK(parse("X1 + 1/2", 2) == parse("x1 + 1/2", 2));
    CHECK(parse("((x1))^2", 2) == parse("x1^2", 2));
    CHECK(parse("x1^0", 2) == parse("1", 2));
}
