#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyaut/groebner.hpp"
#include "polyaut/nambu.hpp"

namespace polyaut {

enum class Provenance { computed, by_symmetry, by_trace };
const char* provenance_name(Provenance p);

/// 1-based indices into the wronskian family a^k_{ij}.
struct WronskianIndex {
    int k, i, j;
    Provenance provenance;
};

/// All n^3 inner indices sorted by (k, i, j). Entries with i < k, plus the
/// off-diagonal (k, k, j), are marked computed; (k, i, j) with i > k mirrors
/// the computed (i, k, j); the diagonal (k, k, k) comes from the trace
/// identity. Computed entries number exactly n^2(n+1)/2 - n.
std::vector<WronskianIndex> reduced_index_set(int n);

/// n^2(n+1)/2 - n, the number of wronskians that must be evaluated.
std::size_t reduced_count(int n);

/// a^k_{ij}: determinant of the first-order table with row j replaced by the
/// second-order row (delta_k delta_i x_1, ..., delta_k delta_i x_n).
/// Indices are 1-based.
Polynomial wronskian_entry(const DerivationTables& tables, int k, int i, int j);

/// Independent route to the same entry: sum_r delta_k delta_i x_r * dF_j/dx_r.
/// Differentiates the map directly rather than reading the stored Jacobian.
Polynomial product_form_entry(const DerivationTables& tables, const PolynomialMap& map, int k, int i,
                              int j);

/// a^k_{kk} = -(sum of the off-diagonal a^k_{ii}).
Polynomial trace_reconstruct(int arity, const std::vector<Polynomial>& off_diagonal_entries);

enum class Verdict { automorphism, not_automorphism, inconclusive_budget };
const char* verdict_name(Verdict v);

struct CheckOptions {
    bool early_exit = true;
    int parallelism = 0;  // 0 = all hardware threads
    bool no_reduction = false;
    bool with_membership = true;
    bool compute_inverse = true;
    Budget budget{};
};

struct WronskianEntryResult {
    WronskianIndex index;
    Polynomial value;                            // in x-coordinates
    std::optional<MembershipResult> membership;  // absent in wronskians-only mode
};

struct PhaseTimings {
    double jacobian_ms = 0;
    double tables_ms = 0;
    double wronskians_ms = 0;
    double basis_ms = 0;
    double membership_ms = 0;
    double inverse_ms = 0;
    double total_ms = 0;
};

struct CriterionReport {
    std::string map_label;
    int n = 0;
    std::optional<Verdict> verdict;  // absent for wronskians-only runs
    Rational jacobian_det;
    std::vector<WronskianEntryResult> entries;  // sorted by (k, i, j)
    std::size_t computed_count = 0;
    std::size_t symmetry_count = 0;
    std::size_t trace_count = 0;
    std::optional<WronskianIndex> first_failure;
    std::optional<std::vector<Polynomial>> inverse;  // arity n, in y-variables
    PhaseTimings timings;
};

/// The full decision procedure: Jacobian data, normalization, derivation
/// tables, the reduced wronskian set, membership of every computed entry,
/// symmetry/trace reconstruction, and the inverse on a positive verdict.
/// Throws NotConstantJacobian / SingularJacobian when the precondition fails;
/// a blown budget yields verdict inconclusive_budget instead of throwing.
CriterionReport check_automorphism(const PolynomialMap& map, const CheckOptions& options = {});

/// Wronskian values only: no Groebner phase, no verdict.
CriterionReport compute_wronskians(const PolynomialMap& map, const CheckOptions& options = {});

}  // namespace polyaut
