#include "polyaut/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "polyaut/errors.hpp"

namespace polyaut {

Polynomial::Polynomial(int arity) : arity_(arity) {
    if (arity < 1) throw std::invalid_argument("Polynomial: arity must be positive");
}

Polynomial Polynomial::constant(int arity, const Rational& value) {
    Polynomial p(arity);
    if (!value.is_zero()) p.terms_.push_back({Monomial(arity), value});
    return p;
}

Polynomial Polynomial::variable(int arity, int var) {
    if (var < 0 || var >= arity) throw std::invalid_argument("Polynomial: variable index out of range");
    std::vector<std::uint32_t> e(static_cast<std::size_t>(arity), 0);
    e[static_cast<std::size_t>(var)] = 1;
    Polynomial p(arity);
    p.terms_.push_back({Monomial(std::move(e)), Rational(1)});
    return p;
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
    Polynomial p(m.arity());
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
}

Polynomial Polynomial::from_terms(int arity, std::vector<Term> terms) {
    Polynomial p(arity);
    for (const auto& t : terms) {
        if (t.monomial.arity() != arity) throw std::invalid_argument("Polynomial: term arity mismatch");
    }
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!terms_[0].monomial.is_unit()) throw std::logic_error("Polynomial: not a constant");
    return terms_[0].coefficient;
}

const Polynomial::Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw std::logic_error("Polynomial: zero polynomial has no leading term");
    return terms_[0];
}

void Polynomial::normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
        return grevlex_less(b.monomial, a.monomial);  // descending
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().monomial == t.monomial) {
            out.back().coefficient += t.coefficient;
            if (out.back().coefficient.is_zero()) out.pop_back();
        } else if (!t.coefficient.is_zero()) {
            out.push_back(std::move(t));
        }
    }
    terms_ = std::move(out);
}

void Polynomial::require_same_arity(const Polynomial& a, const Polynomial& b) {
    if (a.arity_ != b.arity_) throw std::invalid_argument("Polynomial: arity mismatch");
}

Polynomial Polynomial::operator-() const {
    Polynomial out(arity_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.monomial, -t.coefficient});
    return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial::require_same_arity(a, b);
    Polynomial out(a.arity_);
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        const auto& ta = a.terms_[i];
        const auto& tb = b.terms_[j];
        if (ta.monomial == tb.monomial) {
            Rational c = ta.coefficient + tb.coefficient;
            if (!c.is_zero()) out.terms_.push_back({ta.monomial, std::move(c)});
            ++i, ++j;
        } else if (grevlex_less(tb.monomial, ta.monomial)) {
            out.terms_.push_back(ta);
            ++i;
        } else {
            out.terms_.push_back(tb);
            ++j;
        }
    }
    for (; i < a.terms_.size(); ++i) out.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) out.terms_.push_back(b.terms_[j]);
    return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (-b);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) { return *this = *this + o; }
Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this = *this - o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial::require_same_arity(a, b);
    Polynomial out(a.arity_);
    if (a.is_zero() || b.is_zero()) return out;
    out.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            out.terms_.push_back({ta.monomial.times(tb.monomial), ta.coefficient * tb.coefficient});
        }
    }
    out.normalize();
    return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial out(arity_);
    if (c.is_zero()) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.monomial, t.coefficient * c});
    return out;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
    if (m.arity() != arity_) throw std::invalid_argument("Polynomial: arity mismatch");
    Polynomial out(arity_);
    if (c.is_zero()) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.monomial.times(m), t.coefficient * c});
    return out;  // multiplying by one term preserves the ordering
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial result = Polynomial::constant(arity_, Rational(1));
    Polynomial base = *this;
    unsigned e = exponent;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return result;
}

Polynomial Polynomial::partial_derivative(int var) const {
    if (var < 0 || var >= arity_) throw std::invalid_argument("Polynomial: variable index out of range");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        const std::uint32_t e = t.monomial.exponent(var);
        if (e == 0) continue;
        auto exps = t.monomial.exponents();
        exps[static_cast<std::size_t>(var)] = e - 1;
        out.push_back({Monomial(std::move(exps)), t.coefficient * Rational(static_cast<long>(e))});
    }
    return from_terms(arity_, std::move(out));
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) != arity_) {
        throw std::invalid_argument("Polynomial: substitute needs one image per variable");
    }
    if (images.empty()) throw std::invalid_argument("Polynomial: empty image list");
    const int target_arity = images[0].arity();
    for (const auto& g : images) {
        if (g.arity() != target_arity) throw std::invalid_argument("Polynomial: images must share one arity");
    }

    // Cache images[v]^e for every exponent e that actually occurs.
    std::vector<std::uint32_t> max_exp(static_cast<std::size_t>(arity_), 0);
    for (const auto& t : terms_) {
        for (int v = 0; v < arity_; ++v) {
            max_exp[static_cast<std::size_t>(v)] =
                std::max(max_exp[static_cast<std::size_t>(v)], t.monomial.exponent(v));
        }
    }
    std::vector<std::vector<Polynomial>> powers(static_cast<std::size_t>(arity_));
    for (int v = 0; v < arity_; ++v) {
        auto& pv = powers[static_cast<std::size_t>(v)];
        pv.push_back(Polynomial::constant(target_arity, Rational(1)));
        for (std::uint32_t e = 1; e <= max_exp[static_cast<std::size_t>(v)]; ++e) {
            pv.push_back(pv.back() * images[static_cast<std::size_t>(v)]);
        }
    }

    Polynomial acc(target_arity);
    for (const auto& t : terms_) {
        Polynomial prod = Polynomial::constant(target_arity, t.coefficient);
        for (int v = 0; v < arity_; ++v) {
            const std::uint32_t e = t.monomial.exponent(v);
            if (e > 0) prod = prod * powers[static_cast<std::size_t>(v)][e];
        }
        acc += prod;
    }
    return acc;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != arity_) {
        throw std::invalid_argument("Polynomial: evaluate needs one value per variable");
    }
    std::vector<std::uint32_t> max_exp(static_cast<std::size_t>(arity_), 0);
    for (const auto& t : terms_) {
        for (int v = 0; v < arity_; ++v) {
            max_exp[static_cast<std::size_t>(v)] =
                std::max(max_exp[static_cast<std::size_t>(v)], t.monomial.exponent(v));
        }
    }
    std::vector<std::vector<Rational>> powers(static_cast<std::size_t>(arity_));
    for (int v = 0; v < arity_; ++v) {
        auto& pv = powers[static_cast<std::size_t>(v)];
        pv.push_back(Rational(1));
        for (std::uint32_t e = 1; e <= max_exp[static_cast<std::size_t>(v)]; ++e) {
            pv.push_back(pv.back() * point[static_cast<std::size_t>(v)]);
        }
    }
    Rational acc(0);
    for (const auto& t : terms_) {
        Rational prod = t.coefficient;
        for (int v = 0; v < arity_; ++v) {
            const std::uint32_t e = t.monomial.exponent(v);
            if (e > 0) prod *= powers[static_cast<std::size_t>(v)][e];
        }
        acc += prod;
    }
    return acc;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.arity_ != b.arity_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (a.terms_[i].monomial != b.terms_[i].monomial) return false;
        if (a.terms_[i].coefficient != b.terms_[i].coefficient) return false;
    }
    return true;
}

Polynomial exact_divide(const Polynomial& p, const Polynomial& q) {
    if (p.arity() != q.arity()) throw std::invalid_argument("exact_divide: arity mismatch");
    if (q.is_zero()) throw InexactDivision("exact_divide: division by zero polynomial");
    Polynomial quotient(p.arity());
    if (p.is_zero()) return quotient;
    if (q.is_constant()) return p.scaled(q.constant_value().reciprocal());

    // Leading-term division loop; valid under any term order because an exact
    // divisor's leading term divides the dividend's leading term.
    Polynomial remainder = p;
    const auto& qlead = q.leading_term();
    std::vector<Polynomial::Term> qterms;
    while (!remainder.is_zero()) {
        const auto& rlead = remainder.leading_term();
        if (!qlead.monomial.divides(rlead.monomial)) {
            throw InexactDivision("exact_divide: leading monomial not divisible");
        }
        Monomial m = rlead.monomial.divided_by(qlead.monomial);
        Rational c = rlead.coefficient / qlead.coefficient;
        remainder -= q.times_term(m, c);
        qterms.push_back({std::move(m), std::move(c)});
    }
    return Polynomial::from_terms(p.arity(), std::move(qterms));
}

}  // namespace polyaut
