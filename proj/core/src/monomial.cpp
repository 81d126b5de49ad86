#include "polyaut/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace polyaut {

Monomial::Monomial(std::vector<std::uint32_t> exponents)
    : exps_(std::move(exponents)),
      degree_(std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0})) {}

Monomial Monomial::times(const Monomial& o) const {
    if (exps_.size() != o.exps_.size()) throw std::invalid_argument("Monomial: arity mismatch");
    Monomial out(*this);
    for (std::size_t v = 0; v < exps_.size(); ++v) out.exps_[v] += o.exps_[v];
    out.degree_ = degree_ + o.degree_;
    return out;
}

bool Monomial::divides(const Monomial& o) const {
    if (exps_.size() != o.exps_.size()) throw std::invalid_argument("Monomial: arity mismatch");
    for (std::size_t v = 0; v < exps_.size(); ++v) {
        if (exps_[v] > o.exps_[v]) return false;
    }
    return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
    if (!o.divides(*this)) throw std::invalid_argument("Monomial: not divisible");
    Monomial out(*this);
    for (std::size_t v = 0; v < exps_.size(); ++v) out.exps_[v] -= o.exps_[v];
    out.degree_ = degree_ - o.degree_;
    return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    if (a.exps_.size() != b.exps_.size()) throw std::invalid_argument("Monomial: arity mismatch");
    std::vector<std::uint32_t> e(a.exps_.size());
    for (std::size_t v = 0; v < e.size(); ++v) e[v] = std::max(a.exps_[v], b.exps_[v]);
    return Monomial(std::move(e));
}

bool grevlex_less(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const auto& ae = a.exponents();
    const auto& be = b.exponents();
    for (std::size_t v = ae.size(); v-- > 0;) {
        if (ae[v] != be[v]) return ae[v] > be[v];  // larger last exponent => smaller monomial
    }
    return false;
}

int grevlex_compare_range(const Monomial& a, const Monomial& b, int lo, int hi) {
    std::uint64_t da = 0, db = 0;
    const auto& ae = a.exponents();
    const auto& be = b.exponents();
    for (int v = lo; v < hi; ++v) {
        da += ae[static_cast<std::size_t>(v)];
        db += be[static_cast<std::size_t>(v)];
    }
    if (da != db) return da < db ? -1 : 1;
    for (int v = hi; v-- > lo;) {
        const auto ea = ae[static_cast<std::size_t>(v)];
        const auto eb = be[static_cast<std::size_t>(v)];
        if (ea != eb) return ea > eb ? -1 : 1;
    }
    return 0;
}

}  // namespace polyaut
