#include "polyaut/criterion.hpp"

#include <atomic>
#include <chrono>
#include <limits>
#include <map>
#include <stdexcept>
#include <tuple>

#include "polyaut/errors.hpp"
#include "polyaut/parallel.hpp"

namespace polyaut {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

}  // namespace

const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::computed: return "computed";
        case Provenance::by_symmetry: return "by-symmetry";
        case Provenance::by_trace: return "by-trace";
    }
    return "?";
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::automorphism: return "automorphism";
        case Verdict::not_automorphism: return "not-automorphism";
        case Verdict::inconclusive_budget: return "inconclusive-budget";
    }
    return "?";
}

std::size_t reduced_count(int n) {
    const std::size_t un = static_cast<std::size_t>(n);
    return un * un * (un + 1) / 2 - un;
}

std::vector<WronskianIndex> reduced_index_set(int n) {
    if (n < 1) throw std::invalid_argument("reduced_index_set: n must be positive");
    std::vector<WronskianIndex> out;
    out.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                Provenance prov;
                if (i > k) {
                    prov = Provenance::by_symmetry;  // mirror of (i, k, j)
                } else if (i == k && j == k) {
                    prov = Provenance::by_trace;
                } else {
                    prov = Provenance::computed;
                }
                out.push_back({k, i, j, prov});
            }
        }
    }
    return out;
}

Polynomial wronskian_entry(const DerivationTables& tables, int k, int i, int j) {
    const int n = tables.n();
    if (k < 1 || k > n || i < 1 || i > n || j < 1 || j > n) {
        throw std::invalid_argument("wronskian_entry: index out of range");
    }
    std::vector<Polynomial> replacement;
    replacement.reserve(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) replacement.push_back(tables.second(k - 1, i - 1, c));
    return tables.first().row_replaced_determinant(j - 1, replacement);
}

Polynomial product_form_entry(const DerivationTables& tables, const PolynomialMap& map, int k, int i,
                              int j) {
    const int n = tables.n();
    if (k < 1 || k > n || i < 1 || i > n || j < 1 || j > n) {
        throw std::invalid_argument("product_form_entry: index out of range");
    }
    Polynomial acc(n);
    const Polynomial& f_j = map.components[static_cast<std::size_t>(j - 1)];
    for (int r = 0; r < n; ++r) {
        const Polynomial& omega = tables.second(k - 1, i - 1, r);
        if (omega.is_zero()) continue;
        Polynomial df = f_j.partial_derivative(r);
        if (df.is_zero()) continue;
        acc += omega * df;
    }
    return acc;
}

Polynomial trace_reconstruct(int arity, const std::vector<Polynomial>& off_diagonal_entries) {
    Polynomial acc(arity);
    for (const auto& e : off_diagonal_entries) acc += e;
    return -acc;
}

namespace {

struct Pipeline {
    const PolynomialMap& input;
    CheckOptions options;
    CriterionReport report;

    // Computed-entry bookkeeping: position of each (k,i,j) in the plan.
    std::vector<WronskianIndex> plan;
    std::vector<std::size_t> computed_positions;        // positions in `plan`
    std::vector<Polynomial> computed_values;            // parallel to computed_positions
    std::map<std::tuple<int, int, int>, std::size_t> computed_slot;  // (k,i,j) -> slot

    explicit Pipeline(const PolynomialMap& map, const CheckOptions& opts) : input(map), options(opts) {}

    const Polynomial& value_of(int k, int i, int j) const {
        auto it = computed_slot.find({k, i, j});
        if (it == computed_slot.end()) throw std::logic_error("criterion: entry not computed");
        return computed_values[it->second];
    }

    void run_values(const DerivationTables& tables) {
        const int n = tables.n();
        if (options.no_reduction) {
            plan.clear();
            for (int k = 1; k <= n; ++k) {
                for (int i = 1; i <= n; ++i) {
                    for (int j = 1; j <= n; ++j) plan.push_back({k, i, j, Provenance::computed});
                }
            }
        } else {
            plan = reduced_index_set(n);
        }
        for (std::size_t p = 0; p < plan.size(); ++p) {
            if (plan[p].provenance == Provenance::computed) {
                computed_slot[{plan[p].k, plan[p].i, plan[p].j}] = computed_positions.size();
                computed_positions.push_back(p);
            }
        }
        computed_values.assign(computed_positions.size(), Polynomial(n));
        parallel_for(computed_positions.size(), options.parallelism, [&](std::size_t s) {
            check_deadline(options.budget);
            const WronskianIndex& idx = plan[computed_positions[s]];
            computed_values[s] = wronskian_entry(tables, idx.k, idx.i, idx.j);
        });

        if (options.no_reduction) verify_identities(n);
    }

    // In no-reduction mode every inner entry is available directly, so the
    // symmetry and trace identities can be asserted outright; a violation
    // would mean a table or determinant bug.
    void verify_identities(int n) const {
        for (int k = 1; k <= n; ++k) {
            for (int i = 1; i < k; ++i) {
                for (int j = 1; j <= n; ++j) {
                    if (value_of(k, i, j) != value_of(i, k, j)) {
                        throw std::logic_error("criterion: symmetry identity a^k_ij = a^i_kj failed");
                    }
                }
            }
            Polynomial trace(n);
            for (int i = 1; i <= n; ++i) trace += value_of(k, i, i);
            if (!trace.is_zero()) {
                throw std::logic_error("criterion: trace identity sum_i a^k_ii = 0 failed");
            }
        }
    }

    // Value of an arbitrary index, resolving symmetry mirrors and the trace
    // diagonal from computed entries.
    Polynomial resolve_value(int n, const WronskianIndex& idx) const {
        switch (idx.provenance) {
            case Provenance::computed:
                return value_of(idx.k, idx.i, idx.j);
            case Provenance::by_symmetry:
                return value_of(idx.i, idx.k, idx.j);
            case Provenance::by_trace: {
                std::vector<Polynomial> off;
                off.reserve(static_cast<std::size_t>(n - 1));
                for (int i = 1; i <= n; ++i) {
                    if (i == idx.k) continue;
                    off.push_back(i < idx.k ? value_of(idx.k, i, i) : value_of(i, idx.k, i));
                }
                return trace_reconstruct(n, off);
            }
        }
        throw std::logic_error("criterion: bad provenance");
    }
};

MembershipResult combine_trace_membership(int n, const std::vector<const MembershipResult*>& sources) {
    Polynomial nf(2 * n);
    bool member = true;
    for (const auto* src : sources) {
        nf += src->normal_form;
        member = member && src->is_member;
    }
    nf = -nf;  // sums of normal forms stay fully reduced
    std::optional<Polynomial> f_expr;
    if (member) f_expr = detail::extract_y_polynomial(nf, n);
    return MembershipResult{member, std::move(nf), std::move(f_expr)};
}

CriterionReport run_pipeline(const PolynomialMap& map, const CheckOptions& options, bool with_membership) {
    const auto t_total = Clock::now();
    CheckOptions opts = options;
    opts.with_membership = with_membership;

    Pipeline pipe(map, opts);
    CriterionReport& report = pipe.report;
    report.map_label = map.label;
    report.n = map.n;

    auto t_phase = Clock::now();
    JacobianData data = jacobian_data(map);
    report.jacobian_det = data.det;
    report.timings.jacobian_ms = elapsed_ms(t_phase);

    PolynomialMap normalized = map;
    if (!data.det.is_one()) {
        std::vector<Polynomial> comps = map.components;
        comps[0] = comps[0].scaled(data.det.reciprocal());
        normalized = PolynomialMap(std::move(comps), map.label);
        data = jacobian_data(normalized);
    }

    t_phase = Clock::now();
    const DerivationTables tables = build_tables(normalized, data);
    report.timings.tables_ms = elapsed_ms(t_phase);

    t_phase = Clock::now();
    try {
        pipe.run_values(tables);
    } catch (const BudgetExceeded&) {
        report.timings.wronskians_ms = elapsed_ms(t_phase);
        report.verdict = Verdict::inconclusive_budget;
        report.timings.total_ms = elapsed_ms(t_total);
        return report;
    }
    report.timings.wronskians_ms = elapsed_ms(t_phase);

    const int n = map.n;
    const std::size_t computed_total = pipe.computed_positions.size();

    std::vector<std::optional<MembershipResult>> memberships(computed_total);
    std::optional<std::size_t> first_fail_slot;
    std::optional<GroebnerBasis> basis;

    if (opts.with_membership) {
        t_phase = Clock::now();
        try {
            basis.emplace(subalgebra_basis(normalized, opts.budget));
        } catch (const BudgetExceeded&) {
            report.timings.basis_ms = elapsed_ms(t_phase);
            report.verdict = Verdict::inconclusive_budget;
            report.timings.total_ms = elapsed_ms(t_total);
            return report;
        }
        report.timings.basis_ms = elapsed_ms(t_phase);

        t_phase = Clock::now();
        std::atomic<std::size_t> first_fail{std::numeric_limits<std::size_t>::max()};
        try {
            parallel_for(computed_total, opts.parallelism, [&](std::size_t s) {
                if (opts.early_exit && s > first_fail.load(std::memory_order_relaxed)) return;
                check_deadline(opts.budget);
                MembershipResult r = subalgebra_membership(pipe.computed_values[s], normalized,
                                                           &*basis, opts.budget);
                if (!r.is_member) {
                    std::size_t cur = first_fail.load();
                    while (s < cur && !first_fail.compare_exchange_weak(cur, s)) {
                    }
                }
                memberships[s] = std::move(r);
            });
        } catch (const BudgetExceeded&) {
            report.timings.membership_ms = elapsed_ms(t_phase);
            report.verdict = Verdict::inconclusive_budget;
            report.timings.total_ms = elapsed_ms(t_total);
            return report;
        }
        report.timings.membership_ms = elapsed_ms(t_phase);

        // The flagged failure is the smallest failing slot; everything before
        // it is decided because slots are claimed in order.
        for (std::size_t s = 0; s < computed_total; ++s) {
            if (memberships[s] && !memberships[s]->is_member) {
                first_fail_slot = s;
                break;
            }
        }
    }

    // Assemble entries deterministically by (k, i, j).
    if (first_fail_slot) {
        const std::size_t fail_plan_pos = pipe.computed_positions[*first_fail_slot];
        report.verdict = Verdict::not_automorphism;
        report.first_failure = pipe.plan[fail_plan_pos];
        for (std::size_t s = 0; s <= *first_fail_slot; ++s) {
            const WronskianIndex& idx = pipe.plan[pipe.computed_positions[s]];
            report.entries.push_back({idx, pipe.computed_values[s], std::move(memberships[s])});
        }
        report.computed_count = report.entries.size();
        report.timings.total_ms = elapsed_ms(t_total);
        return report;
    }

    std::map<std::tuple<int, int, int>, const MembershipResult*> membership_of;
    if (opts.with_membership) {
        for (std::size_t s = 0; s < computed_total; ++s) {
            const WronskianIndex& idx = pipe.plan[pipe.computed_positions[s]];
            membership_of[{idx.k, idx.i, idx.j}] = &*memberships[s];
        }
    }

    for (const WronskianIndex& idx : pipe.plan) {
        WronskianEntryResult entry{idx, pipe.resolve_value(n, idx), std::nullopt};
        if (opts.with_membership) {
            switch (idx.provenance) {
                case Provenance::computed:
                    entry.membership = *membership_of.at({idx.k, idx.i, idx.j});
                    break;
                case Provenance::by_symmetry:
                    entry.membership = *membership_of.at({idx.i, idx.k, idx.j});
                    break;
                case Provenance::by_trace: {
                    std::vector<const MembershipResult*> sources;
                    for (int i = 1; i <= n; ++i) {
                        if (i == idx.k) continue;
                        sources.push_back(i < idx.k ? membership_of.at({idx.k, i, i})
                                                    : membership_of.at({i, idx.k, i}));
                    }
                    entry.membership = combine_trace_membership(n, sources);
                    break;
                }
            }
        }
        switch (idx.provenance) {
            case Provenance::computed: ++report.computed_count; break;
            case Provenance::by_symmetry: ++report.symmetry_count; break;
            case Provenance::by_trace: ++report.trace_count; break;
        }
        report.entries.push_back(std::move(entry));
    }

    if (opts.with_membership) {
        report.verdict = Verdict::automorphism;
        if (opts.compute_inverse) {
            t_phase = Clock::now();
            try {
                auto inverse = invert_normalized(normalized, *basis, opts.budget);
                if (!inverse) {
                    // Cannot happen when every entry (and thus every x_i for an
                    // automorphism) is a member, but keep the report honest.
                    report.verdict = Verdict::not_automorphism;
                } else if (!report.jacobian_det.is_one()) {
                    std::vector<Polynomial> images;
                    images.push_back(Polynomial::variable(n, 0).scaled(report.jacobian_det.reciprocal()));
                    for (int i = 1; i < n; ++i) images.push_back(Polynomial::variable(n, i));
                    for (auto& g : *inverse) g = g.substitute(images);
                    report.inverse = std::move(inverse);
                } else {
                    report.inverse = std::move(inverse);
                }
            } catch (const BudgetExceeded&) {
                report.verdict = Verdict::inconclusive_budget;
            }
            report.timings.inverse_ms = elapsed_ms(t_phase);
        }
    }

    report.timings.total_ms = elapsed_ms(t_total);
    return report;
}

}  // namespace

CriterionReport check_automorphism(const PolynomialMap& map, const CheckOptions& options) {
    return run_pipeline(map, options, true);
}

CriterionReport compute_wronskians(const PolynomialMap& map, const CheckOptions& options) {
    return run_pipeline(map, options, false);
}

}  // namespace polyaut
