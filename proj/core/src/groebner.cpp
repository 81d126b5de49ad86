#include "polyaut/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "polyaut/errors.hpp"

namespace polyaut {

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.arity() != b.arity()) throw std::invalid_argument("MonomialOrder: arity mismatch");
    if (kind_ == Kind::grevlex) return grevlex_compare_range(a, b, 0, a.arity());
    const int c = grevlex_compare_range(a, b, 0, split_);
    if (c != 0) return c;
    return grevlex_compare_range(a, b, split_, a.arity());
}

Budget Budget::unlimited() {
    Budget b;
    b.max_steps = UINT64_MAX;
    return b;
}

Budget Budget::with_steps(std::uint64_t steps) {
    Budget b;
    b.max_steps = steps;
    return b;
}

void check_deadline(const Budget& budget) {
    if (budget.deadline && std::chrono::steady_clock::now() > *budget.deadline) {
        throw BudgetExceeded(BudgetExceeded::Reason::deadline, "wall-clock timeout exceeded");
    }
}

namespace {

using Term = Polynomial::Term;
using TermVec = std::vector<Term>;  // descending under the active order

TermVec to_ordered(const Polynomial& p, const MonomialOrder& order) {
    TermVec terms = p.terms();
    std::sort(terms.begin(), terms.end(),
              [&order](const Term& a, const Term& b) { return order.less(b.monomial, a.monomial); });
    return terms;
}

Polynomial to_polynomial(int arity, TermVec terms) {
    return Polynomial::from_terms(arity, std::move(terms));
}

/// p[p_from..] - c * x^m * q, merged under `order`.
TermVec subtract_multiple(const TermVec& p, std::size_t p_from, const Rational& c, const Monomial& m,
                          const TermVec& q, const MonomialOrder& order) {
    TermVec out;
    out.reserve(p.size() - p_from + q.size());
    std::size_t i = p_from, j = 0;
    while (i < p.size() && j < q.size()) {
        const Monomial qm = q[j].monomial.times(m);
        const int cmp = order.compare(p[i].monomial, qm);
        if (cmp == 0) {
            Rational coeff = p[i].coefficient - c * q[j].coefficient;
            if (!coeff.is_zero()) out.push_back({p[i].monomial, std::move(coeff)});
            ++i, ++j;
        } else if (cmp > 0) {
            out.push_back(p[i]);
            ++i;
        } else {
            out.push_back({qm, -(c * q[j].coefficient)});
            ++j;
        }
    }
    for (; i < p.size(); ++i) out.push_back(p[i]);
    for (; j < q.size(); ++j) out.push_back({q[j].monomial.times(m), -(c * q[j].coefficient)});
    return out;
}

struct StepCounter {
    const Budget& budget;
    std::uint64_t used = 0;

    void tick() {
        if (++used > budget.max_steps) {
            throw BudgetExceeded(BudgetExceeded::Reason::steps,
                                 "Groebner step budget exceeded (" + std::to_string(budget.max_steps) + ")");
        }
        if ((used & 0x3ff) == 0) check_deadline(budget);
    }
};

/// Division remainder of `g` by the basis elements (monic leading
/// coefficients not assumed). Reduces topmost reducible terms first.
TermVec reduce_fully(TermVec g, const std::vector<TermVec>& basis, const MonomialOrder& order,
                     StepCounter* steps) {
    TermVec remainder;
    std::size_t head = 0;
    while (head < g.size()) {
        const Term& lead = g[head];
        bool reduced = false;
        for (const TermVec& b : basis) {
            if (b.empty()) continue;
            if (b.front().monomial.divides(lead.monomial)) {
                const Monomial shift = lead.monomial.divided_by(b.front().monomial);
                const Rational factor = lead.coefficient / b.front().coefficient;
                g = subtract_multiple(g, head, factor, shift, b, order);
                head = 0;
                if (steps) steps->tick();
                reduced = true;
                break;
            }
        }
        if (!reduced) remainder.push_back(g[head++]);
    }
    return remainder;
}

TermVec make_monic(TermVec p) {
    if (p.empty() || p.front().coefficient.is_one()) return p;
    const Rational inv = p.front().coefficient.reciprocal();
    for (auto& t : p) t.coefficient *= inv;
    return p;
}

struct PendingPair {
    std::uint64_t lcm_degree;
    Monomial lcm;
    std::size_t i, j;  // i < j
};

}  // namespace

GroebnerBasis::GroebnerBasis(std::vector<Polynomial> generators, MonomialOrder order, bool reduced)
    : generators_(std::move(generators)), order_(order), reduced_(reduced) {
    if (generators_.empty()) throw std::invalid_argument("GroebnerBasis: empty generator list");
    arity_ = generators_[0].arity();
    for (const auto& g : generators_) {
        if (g.arity() != arity_) throw std::invalid_argument("GroebnerBasis: generator arity mismatch");
        if (g.is_zero()) throw std::invalid_argument("GroebnerBasis: zero generator");
        ordered_.push_back(to_ordered(g, order_));
    }
}

const Monomial& GroebnerBasis::leading_monomial(std::size_t g) const {
    return ordered_[g].front().monomial;
}

const std::vector<Polynomial::Term>& GroebnerBasis::ordered_terms(std::size_t g) const {
    return ordered_[g];
}

Polynomial normal_form(const Polynomial& g, const GroebnerBasis& basis) {
    if (g.arity() != basis.arity()) throw std::invalid_argument("normal_form: arity mismatch");
    if (g.is_zero()) return g;
    std::vector<TermVec> ordered;
    ordered.reserve(basis.generators().size());
    for (std::size_t i = 0; i < basis.generators().size(); ++i) ordered.push_back(basis.ordered_terms(i));
    TermVec r = reduce_fully(to_ordered(g, basis.order()), ordered, basis.order(), nullptr);
    return to_polynomial(g.arity(), std::move(r));
}

GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const MonomialOrder& order,
                         const Budget& budget) {
    if (generators.empty()) throw std::invalid_argument("buchberger: empty generator list");
    const int arity = generators[0].arity();
    StepCounter steps{budget};

    std::vector<TermVec> basis;
    for (const auto& g : generators) {
        if (g.arity() != arity) throw std::invalid_argument("buchberger: generator arity mismatch");
        if (!g.is_zero()) basis.push_back(make_monic(to_ordered(g, order)));
    }
    if (basis.empty()) throw std::invalid_argument("buchberger: all generators are zero");

    // Normal selection strategy: pairs ordered by lcm total degree, then by
    // the term order on the lcm, then by index.
    auto pair_less = [&order](const PendingPair& a, const PendingPair& b) {
        if (a.lcm_degree != b.lcm_degree) return a.lcm_degree < b.lcm_degree;
        const int c = order.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };

    std::vector<PendingPair> queue;
    std::set<std::pair<std::size_t, std::size_t>> treated;
    auto push_pairs_for = [&](std::size_t fresh) {
        for (std::size_t i = 0; i < fresh; ++i) {
            Monomial l = Monomial::lcm(basis[i].front().monomial, basis[fresh].front().monomial);
            queue.push_back({l.degree(), std::move(l), i, fresh});
        }
        std::sort(queue.begin(), queue.end(), pair_less);
    };
    for (std::size_t g = 1; g < basis.size(); ++g) push_pairs_for(g);

    auto is_treated = [&treated](std::size_t a, std::size_t b) {
        return treated.count({std::min(a, b), std::max(a, b)}) > 0;
    };

    while (!queue.empty()) {
        PendingPair pair = queue.front();
        queue.erase(queue.begin());
        treated.insert({pair.i, pair.j});

        const Monomial& lt_i = basis[pair.i].front().monomial;
        const Monomial& lt_j = basis[pair.j].front().monomial;
        // Coprime criterion: lcm equals the product, S-polynomial reduces to 0.
        if (pair.lcm_degree == lt_i.degree() + lt_j.degree()) continue;
        // Chain criterion: a third element divides the lcm and both side
        // pairs were already handled.
        bool chained = false;
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == pair.i || k == pair.j) continue;
            chained = basis[k].front().monomial.divides(pair.lcm) && is_treated(pair.i, k) &&
                      is_treated(pair.j, k);
        }
        if (chained) continue;

        // S-polynomial of two monic elements.
        const Monomial mi = pair.lcm.divided_by(lt_i);
        const Monomial mj = pair.lcm.divided_by(lt_j);
        TermVec lifted_i;
        lifted_i.reserve(basis[pair.i].size());
        for (const auto& t : basis[pair.i]) lifted_i.push_back({t.monomial.times(mi), t.coefficient});
        TermVec spoly = subtract_multiple(lifted_i, 0, Rational(1), mj, basis[pair.j], order);
        steps.tick();

        TermVec h = reduce_fully(std::move(spoly), basis, order, &steps);
        if (h.empty()) continue;
        basis.push_back(make_monic(std::move(h)));
        push_pairs_for(basis.size() - 1);
    }

    // Minimalize: drop elements whose leading monomial another element divides.
    std::vector<bool> keep(basis.size(), true);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size() && keep[i]; ++j) {
            if (i == j || !keep[j]) continue;
            const Monomial& li = basis[i].front().monomial;
            const Monomial& lj = basis[j].front().monomial;
            if (lj.divides(li) && !(li == lj && j > i)) keep[i] = false;
        }
    }
    std::vector<TermVec> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (keep[i]) minimal.push_back(std::move(basis[i]));
    }

    // Tail-reduce every element against the others for the reduced basis.
    std::vector<TermVec> reduced(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<TermVec> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t j = 0; j < minimal.size(); ++j) {
            if (j != i) others.push_back(minimal[j]);
        }
        reduced[i] = make_monic(reduce_fully(minimal[i], others, order, &steps));
    }

    std::sort(reduced.begin(), reduced.end(), [&order](const TermVec& a, const TermVec& b) {
        return order.less(a.front().monomial, b.front().monomial);
    });

    std::vector<Polynomial> out;
    out.reserve(reduced.size());
    for (auto& terms : reduced) out.push_back(to_polynomial(arity, std::move(terms)));
    return GroebnerBasis(std::move(out), order, true);
}

namespace detail {

Polynomial embed_in_double_ring(const Polynomial& g, int n) {
    if (g.arity() != n) throw std::invalid_argument("embed_in_double_ring: arity mismatch");
    std::vector<Term> terms;
    terms.reserve(g.term_count());
    for (const auto& t : g.terms()) {
        std::vector<std::uint32_t> e(static_cast<std::size_t>(2 * n), 0);
        for (int v = 0; v < n; ++v) e[static_cast<std::size_t>(v)] = t.monomial.exponent(v);
        terms.push_back({Monomial(std::move(e)), t.coefficient});
    }
    return Polynomial::from_terms(2 * n, std::move(terms));
}

bool uses_x_block(const Polynomial& g, int n) {
    for (const auto& t : g.terms()) {
        for (int v = 0; v < n; ++v) {
            if (t.monomial.exponent(v) != 0) return true;
        }
    }
    return false;
}

Polynomial extract_y_polynomial(const Polynomial& g, int n) {
    if (g.arity() != 2 * n) throw std::invalid_argument("extract_y_polynomial: arity mismatch");
    if (uses_x_block(g, n)) throw std::logic_error("extract_y_polynomial: polynomial still uses x-variables");
    std::vector<Term> terms;
    terms.reserve(g.term_count());
    for (const auto& t : g.terms()) {
        std::vector<std::uint32_t> e(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < n; ++v) e[static_cast<std::size_t>(v)] = t.monomial.exponent(n + v);
        terms.push_back({Monomial(std::move(e)), t.coefficient});
    }
    return Polynomial::from_terms(n, std::move(terms));
}

}  // namespace detail

GroebnerBasis subalgebra_basis(const PolynomialMap& map, const Budget& budget) {
    const int n = map.n;
    std::vector<Polynomial> gens;
    gens.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Polynomial y_i = Polynomial::variable(2 * n, n + i);
        gens.push_back(y_i - detail::embed_in_double_ring(map.components[static_cast<std::size_t>(i)], n));
    }
    return buchberger(gens, MonomialOrder::block_elimination(n), budget);
}

MembershipResult subalgebra_membership(const Polynomial& g, const PolynomialMap& map,
                                       const GroebnerBasis* cached_basis, const Budget& budget) {
    if (g.arity() != map.n) throw std::invalid_argument("subalgebra_membership: arity mismatch");
    std::optional<GroebnerBasis> local;
    const GroebnerBasis& basis = cached_basis ? *cached_basis : local.emplace(subalgebra_basis(map, budget));
    Polynomial nf = normal_form(detail::embed_in_double_ring(g, map.n), basis);
    const bool member = !detail::uses_x_block(nf, map.n);
    std::optional<Polynomial> f_expr;
    if (member) f_expr = detail::extract_y_polynomial(nf, map.n);
    return MembershipResult{member, std::move(nf), std::move(f_expr)};
}

std::optional<std::vector<Polynomial>> invert_normalized(const PolynomialMap& normalized_map,
                                                         const GroebnerBasis& basis, const Budget& budget) {
    std::vector<Polynomial> inverse;
    inverse.reserve(static_cast<std::size_t>(normalized_map.n));
    for (int i = 0; i < normalized_map.n; ++i) {
        MembershipResult res =
            subalgebra_membership(Polynomial::variable(normalized_map.n, i), normalized_map, &basis, budget);
        if (!res.is_member) return std::nullopt;
        inverse.push_back(std::move(*res.f_expression));
    }
    return inverse;
}

std::optional<std::vector<Polynomial>> invert_map(const PolynomialMap& map, const Budget& budget) {
    const JacobianData data = jacobian_data(map);
    const PolynomialMap normalized = data.det.is_one() ? map : normalize_to_unit_jacobian(map);
    const GroebnerBasis basis = subalgebra_basis(normalized, budget);
    auto inverse_opt = invert_normalized(normalized, basis, budget);
    if (!inverse_opt) return std::nullopt;
    std::vector<Polynomial>& inverse = *inverse_opt;
    if (!data.det.is_one()) {
        // F = diag(c,1,...,1) o normalized, so the inverse pre-scales y_1.
        std::vector<Polynomial> images;
        images.reserve(static_cast<std::size_t>(map.n));
        images.push_back(Polynomial::variable(map.n, 0).scaled(data.det.reciprocal()));
        for (int i = 1; i < map.n; ++i) images.push_back(Polynomial::variable(map.n, i));
        for (auto& g : inverse) g = g.substitute(images);
    }
    return inverse;
}

}  // namespace polyaut
