#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polyaut/criterion.hpp"

namespace polyaut {

/// Machine-readable run report. Polynomial values use the canonical x1..xN
/// grammar so the document re-parses; entries are sorted by (k, i, j).
struct ReportDocument {
    std::string schema_version = "1";
    std::string map_label;
    int n = 0;
    std::optional<std::string> verdict;  // absent for wronskians-only documents
    std::string jacobian_det;

    struct Counts {
        std::size_t computed = 0;
        std::size_t by_symmetry = 0;
        std::size_t by_trace = 0;

        friend bool operator==(const Counts&, const Counts&) = default;
    } counts;

    struct Entry {
        int k = 0, i = 0, j = 0;
        std::string provenance;
        std::string value_in_x;
        std::optional<bool> member;               // absent without a membership phase
        std::optional<std::string> f_expression;  // absent unless member

        friend bool operator==(const Entry&, const Entry&) = default;
    };
    std::vector<Entry> entries;

    std::optional<std::vector<int>> first_failure;       // [k, i, j]
    std::optional<std::vector<std::string>> inverse;     // y-ring polynomials, x-grammar text
    std::optional<std::map<std::string, double>> timings_ms;

    friend bool operator==(const ReportDocument& a, const ReportDocument& b) = default;
    friend bool operator!=(const ReportDocument& a, const ReportDocument& b) = default;
};

ReportDocument make_report_document(const CriterionReport& report, bool include_timings);

std::string report_to_json(const ReportDocument& doc);
ReportDocument report_from_json(const std::string& json_text);

/// Human-readable table. f-expressions print in F-notation and the inverse
/// in y-notation so they can be eyeballed against hand calculations.
void print_human_report(std::ostream& os, const ReportDocument& doc);

}  // namespace polyaut
