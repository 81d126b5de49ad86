#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polyaut/errors.hpp"
#include "polyaut/groebner.hpp"
#include "polyaut/mapzoo.hpp"
#include "polyaut/polynomial_io.hpp"
#include "support/generators.hpp"

using namespace polyaut;
using polyaut::testing::random_monomial;
using polyaut::testing::random_polynomial;

namespace {

const PolynomialMap& fixture(const std::string& name) { return fixtures().at(name); }

/// Mechanical Buchberger postcondition: every S-polynomial of basis pairs
/// reduces to zero modulo the basis.
void check_spolynomials_reduce(const GroebnerBasis& basis) {
    const auto& gens = basis.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            const auto& ti = basis.ordered_terms(i).front();
            const auto& tj = basis.ordered_terms(j).front();
            const Monomial lcm = Monomial::lcm(ti.monomial, tj.monomial);
            const Polynomial spoly =
                gens[i].times_term(lcm.divided_by(ti.monomial), ti.coefficient.reciprocal()) -
                gens[j].times_term(lcm.divided_by(tj.monomial), tj.coefficient.reciprocal());
            CHECK(normal_form(spoly, basis).is_zero());
        }
    }
}

void check_reduced(const GroebnerBasis& basis) {
    const auto& gens = basis.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        CHECK(basis.ordered_terms(i).front().coefficient.is_one());
        for (std::size_t j = 0; j < gens.size(); ++j) {
            if (i == j) continue;
            for (const auto& t : gens[i].terms()) {
                CHECK(!basis.leading_monomial(j).divides(t.monomial));
            }
        }
    }
}

GroebnerBasis symmetric_functions_basis() {
    // <y1 - (x1 + x2), y2 - x1*x2> in Q[x1, x2, y1, y2], x-block eliminated
    std::vector<Polynomial> gens = {
        parse_polynomial("x3 - (x1 + x2)", 4),  // x3, x4 play the role of y1, y2
        parse_polynomial("x4 - x1*x2", 4),
    };
    return buchberger(gens, MonomialOrder::block_elimination(2));
}

}  // namespace

TEST_CASE("monomial order axioms on random monomials") {
    std::mt19937 rng(42);
    for (int arity : {2, 4, 6}) {
        const MonomialOrder orders[] = {MonomialOrder::grevlex(),
                                        MonomialOrder::block_elimination(arity / 2)};
        for (const auto& order : orders) {
            const Monomial one(arity);
            for (int round = 0; round < 60; ++round) {
                const Monomial a = random_monomial(rng, arity, 5);
                const Monomial b = random_monomial(rng, arity, 5);
                const Monomial w = random_monomial(rng, arity, 3);
                // total: compare agrees with equality
                CHECK((order.compare(a, b) == 0) == (a == b));
                CHECK(order.compare(a, b) == -order.compare(b, a));
                // multiplicative
                if (order.less(a, b)) CHECK(order.less(a.times(w), b.times(w)));
                // 1 is minimal
                CHECK(order.compare(one, a) <= 0);
            }
            // transitivity spot check
            for (int round = 0; round < 40; ++round) {
                Monomial m1 = random_monomial(rng, arity, 4);
                Monomial m2 = random_monomial(rng, arity, 4);
                Monomial m3 = random_monomial(rng, arity, 4);
                if (order.less(m2, m1)) std::swap(m1, m2);
                if (order.less(m3, m2)) {
                    std::swap(m2, m3);
                    if (order.less(m2, m1)) std::swap(m1, m2);
                }
                CHECK(!order.less(m2, m1));
                CHECK(!order.less(m3, m2));
                CHECK(!order.less(m3, m1));
            }
        }
    }
}

TEST_CASE("elimination order dominates on the eliminated block") {
    // any monomial containing x1 or x2 beats any pure y-monomial
    const MonomialOrder order = MonomialOrder::block_elimination(2);
    const Monomial x1 = Monomial({1, 0, 0, 0});
    const Monomial y_big = Monomial({0, 0, 7, 9});
    CHECK(order.compare(x1, y_big) > 0);
}

TEST_CASE("buchberger: single generator stays itself, made monic") {
    std::vector<Polynomial> gens = {parse_polynomial("2*x1^2 + 4*x2", 2)};
    const GroebnerBasis basis = buchberger(gens, MonomialOrder::grevlex());
    REQUIRE(basis.generators().size() == 1);
    CHECK(basis.generators()[0] == parse_polynomial("x1^2 + 2*x2", 2));
    CHECK(basis.reduced());
}

TEST_CASE("buchberger: symmetric-function elimination ideal, hand-checked") {
    const GroebnerBasis basis = symmetric_functions_basis();
    // Hand run: S(g1, g2) reduces to x2^2 - x2*y1 + y2 and the pair queue
    // empties by the coprime and chain criteria.
    REQUIRE(basis.generators().size() == 2);
    CHECK(basis.generators()[0] == parse_polynomial("x1 + x2 - x3", 4));
    CHECK(basis.generators()[1] == parse_polynomial("x2^2 - x2*x3 + x4", 4));
    check_spolynomials_reduce(basis);
    check_reduced(basis);
}

TEST_CASE("buchberger: an already reduced basis comes back unchanged up to scaling") {
    std::vector<Polynomial> gens = {parse_polynomial("3*x1^2 - x2", 2), parse_polynomial("2*x2^3 - 5", 2)};
    const GroebnerBasis basis = buchberger(gens, MonomialOrder::grevlex());
    REQUIRE(basis.generators().size() == 2);
    CHECK(basis.generators()[0] == parse_polynomial("x1^2 - 1/3*x2", 2));
    CHECK(basis.generators()[1] == parse_polynomial("x2^3 - 5/2", 2));
    check_spolynomials_reduce(basis);
}

TEST_CASE("buchberger postcondition on assorted ideals") {
    std::mt19937 rng(2718);
    for (int round = 0; round < 8; ++round) {
        std::vector<Polynomial> gens;
        const int count = 2 + static_cast<int>(rng() % 2);
        for (int g = 0; g < count; ++g) {
            gens.push_back(polyaut::testing::random_nonzero_polynomial(rng, 3, 3, 3));
        }
        const GroebnerBasis basis = buchberger(gens, MonomialOrder::grevlex());
        check_spolynomials_reduce(basis);
        check_reduced(basis);
    }
}

TEST_CASE("normal form: zero, generators, single step") {
    const GroebnerBasis basis = symmetric_functions_basis();
    CHECK(normal_form(Polynomial(4), basis).is_zero());
    for (const auto& g : basis.generators()) CHECK(normal_form(g, basis).is_zero());
    CHECK(normal_form(parse_polynomial("x1 + x2", 4), basis) == parse_polynomial("x3", 4));
}

TEST_CASE("normal form properties") {
    const GroebnerBasis basis = symmetric_functions_basis();
    std::mt19937 rng(555);
    for (int round = 0; round < 25; ++round) {
        const Polynomial g = random_polynomial(rng, 4, 4, 5);
        const Polynomial h = random_polynomial(rng, 4, 4, 5);
        const Polynomial nf_g = normal_form(g, basis);
        CHECK(normal_form(nf_g, basis) == nf_g);  // idempotent
        CHECK(normal_form(g + h, basis) == normal_form(nf_g + normal_form(h, basis), basis));
        // ideal elements vanish
        const Polynomial elem = basis.generators()[0] * random_polynomial(rng, 4, 2, 3) +
                                basis.generators()[1] * random_polynomial(rng, 4, 2, 3);
        CHECK(normal_form(elem, basis).is_zero());
    }
}

TEST_CASE("membership: components, symmetric polynomials, non-members") {
    std::vector<Polynomial> comps = {parse_polynomial("x1 + x2", 2), parse_polynomial("x1*x2", 2)};
    const PolynomialMap sym(std::move(comps), "symmetric2");
    const GroebnerBasis basis = subalgebra_basis(sym);

    const MembershipResult m1 = subalgebra_membership(sym.components[0], sym, &basis);
    CHECK(m1.is_member);
    CHECK(*m1.f_expression == parse_polynomial("x1", 2));  // y1

    const MembershipResult m2 = subalgebra_membership(parse_polynomial("x1*x2", 2), sym, &basis);
    CHECK(m2.is_member);
    CHECK(*m2.f_expression == parse_polynomial("x2", 2));  // y2

    // power sum p2 = y1^2 - 2 y2
    const MembershipResult m3 = subalgebra_membership(parse_polynomial("x1^2 + x2^2", 2), sym, &basis);
    CHECK(m3.is_member);
    CHECK(*m3.f_expression == parse_polynomial("x1^2 - 2*x2", 2));

    const MembershipResult bad = subalgebra_membership(parse_polynomial("x1", 2), sym, &basis);
    CHECK(!bad.is_member);
    CHECK(!bad.f_expression.has_value());
    CHECK(detail::uses_x_block(bad.normal_form, 2));
}

TEST_CASE("membership certificate: substituting F back reproduces the input") {
    const PolynomialMap& nagata = fixture("nagata");
    const GroebnerBasis basis = subalgebra_basis(nagata);
    std::mt19937 rng(808);
    for (int round = 0; round < 6; ++round) {
        // elements built from F are members by construction
        const Polynomial h = random_polynomial(rng, 3, 2, 3);
        const Polynomial g = h.substitute(nagata.components);
        const MembershipResult res = subalgebra_membership(g, nagata, &basis);
        REQUIRE(res.is_member);
        CHECK(res.f_expression->substitute(nagata.components) == g);
        CHECK(*res.f_expression == h);  // representation is unique for automorphisms
    }
}

TEST_CASE("membership reproduces the degree-15 entry of the Nagata table") {
    // a^3_{32} in x-coordinates, transcribed from the worked example, with
    // its expression -2 F1^2 F3^3 - 4 F1 F2 F3 - 2 F1.
    const char* entry_text =
        "-2*x1^4*x3^9 - 8*x1^3*x2^2*x3^8 - 12*x1^2*x2^4*x3^7 - 8*x1*x2^6*x3^6 - 2*x2^8*x3^5"
        " - 8*x1^3*x2*x3^7 - 24*x1^2*x2^3*x3^6 - 24*x1*x2^5*x3^5 - 8*x2^7*x3^4 + 8*x1^3*x3^6"
        " + 12*x1^2*x2^2*x3^5 - 4*x2^6*x3^3 + 20*x1^2*x2*x3^4 + 32*x1*x2^3*x3^3 + 12*x2^5*x3^2"
        " - 4*x1^2*x3^3 + 8*x1*x2^2*x3^2 + 10*x2^4*x3 + 4*x2^3 - 2*x1";
    const Polynomial entry = parse_polynomial(entry_text, 3);
    const Polynomial expected_f = parse_polynomial("-2*x1^2*x3^3 - 4*x1*x2*x3 - 2*x1", 3);

    const PolynomialMap& nagata = fixture("nagata");
    // cross-check the transcription before trusting it
    REQUIRE(expected_f.substitute(nagata.components) == entry);

    const MembershipResult res = subalgebra_membership(entry, nagata);
    REQUIRE(res.is_member);
    CHECK(*res.f_expression == expected_f);
}

TEST_CASE("invert_map") {
    const auto id = invert_map(identity_map(3));
    REQUIRE(id.has_value());
    for (int i = 0; i < 3; ++i) CHECK((*id)[static_cast<std::size_t>(i)] == Polynomial::variable(3, i));

    const auto toy = invert_map(fixture("toy2"));
    REQUIRE(toy.has_value());
    CHECK((*toy)[0] == parse_polynomial("x1", 2));           // G1 = y1
    CHECK((*toy)[1] == parse_polynomial("x2 - x1^2", 2));    // G2 = y2 - y1^2

    const PolynomialMap& nagata = fixture("nagata");
    const auto inv = invert_map(nagata);
    REQUIRE(inv.has_value());
    for (int i = 0; i < 3; ++i) {
        CHECK((*inv)[static_cast<std::size_t>(i)].substitute(nagata.components) ==
              Polynomial::variable(3, i));
    }

    // non-unit constant determinant folds back into the inverse
    std::vector<Polynomial> comps = {parse_polynomial("2*x1 + x2^2", 2), parse_polynomial("x2", 2)};
    const PolynomialMap scaled(std::move(comps), "scaled");
    const auto g = invert_map(scaled);
    REQUIRE(g.has_value());
    for (int i = 0; i < 2; ++i) {
        CHECK((*g)[static_cast<std::size_t>(i)].substitute(scaled.components) ==
              Polynomial::variable(2, i));
    }

    // x -> (x1 + x2, x1*x2) is not injective, x1 is no member
    std::vector<Polynomial> sym = {parse_polynomial("x1 + x2", 2), parse_polynomial("x1*x2", 2)};
    CHECK_THROWS_AS(invert_map(PolynomialMap(std::move(sym), "")), NotConstantJacobian);
}

TEST_CASE("budget and deadline") {
    CHECK_THROWS_AS(subalgebra_basis(fixture("nagata"), Budget::with_steps(3)), BudgetExceeded);
    try {
        subalgebra_basis(fixture("nagata"), Budget::with_steps(3));
    } catch (const BudgetExceeded& e) {
        CHECK(e.reason() == BudgetExceeded::Reason::steps);
    }

    Budget expired;
    expired.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
    CHECK_THROWS_AS(check_deadline(expired), BudgetExceeded);

    // the default budget is plenty for the Nagata ideal
    CHECK(subalgebra_basis(fixture("nagata")).reduced());
}
