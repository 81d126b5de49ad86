#include "polyaut/report.hpp"

#include <json.hpp>

#include <ostream>

#include "polyaut/polynomial_io.hpp"

namespace polyaut {

using nlohmann::ordered_json;

ReportDocument make_report_document(const CriterionReport& report, bool include_timings) {
    ReportDocument doc;
    doc.map_label = report.map_label;
    doc.n = report.n;
    if (report.verdict) doc.verdict = verdict_name(*report.verdict);
    doc.jacobian_det = report.jacobian_det.to_string();
    doc.counts.computed = report.computed_count;
    doc.counts.by_symmetry = report.symmetry_count;
    doc.counts.by_trace = report.trace_count;

    doc.entries.reserve(report.entries.size());
    for (const auto& e : report.entries) {
        ReportDocument::Entry entry;
        entry.k = e.index.k;
        entry.i = e.index.i;
        entry.j = e.index.j;
        entry.provenance = provenance_name(e.index.provenance);
        entry.value_in_x = to_string(e.value);
        if (e.membership) {
            entry.member = e.membership->is_member;
            if (e.membership->f_expression) entry.f_expression = to_string(*e.membership->f_expression);
        }
        doc.entries.push_back(std::move(entry));
    }

    if (report.first_failure) {
        doc.first_failure = std::vector<int>{report.first_failure->k, report.first_failure->i,
                                             report.first_failure->j};
    }
    if (report.inverse) {
        std::vector<std::string> inv;
        inv.reserve(report.inverse->size());
        for (const auto& g : *report.inverse) inv.push_back(to_string(g));
        doc.inverse = std::move(inv);
    }
    if (include_timings) {
        doc.timings_ms = std::map<std::string, double>{
            {"jacobian", report.timings.jacobian_ms},   {"tables", report.timings.tables_ms},
            {"wronskians", report.timings.wronskians_ms}, {"basis", report.timings.basis_ms},
            {"membership", report.timings.membership_ms}, {"inverse", report.timings.inverse_ms},
            {"total", report.timings.total_ms},
        };
    }
    return doc;
}

std::string report_to_json(const ReportDocument& doc) {
    ordered_json j;
    j["schema_version"] = doc.schema_version;
    j["map_label"] = doc.map_label;
    j["n"] = doc.n;
    j["verdict"] = doc.verdict ? ordered_json(*doc.verdict) : ordered_json(nullptr);
    j["jacobian_det"] = doc.jacobian_det;
    j["counts"] = {{"computed", doc.counts.computed},
                   {"by_symmetry", doc.counts.by_symmetry},
                   {"by_trace", doc.counts.by_trace}};
    ordered_json entries = ordered_json::array();
    for (const auto& e : doc.entries) {
        ordered_json je;
        je["k"] = e.k;
        je["i"] = e.i;
        je["j"] = e.j;
        je["provenance"] = e.provenance;
        je["value_in_x"] = e.value_in_x;
        je["member"] = e.member ? ordered_json(*e.member) : ordered_json(nullptr);
        je["f_expression"] = e.f_expression ? ordered_json(*e.f_expression) : ordered_json(nullptr);
        entries.push_back(std::move(je));
    }
    j["entries"] = std::move(entries);
    j["first_failure"] = doc.first_failure ? ordered_json(*doc.first_failure) : ordered_json(nullptr);
    j["inverse"] = doc.inverse ? ordered_json(*doc.inverse) : ordered_json(nullptr);
    j["timings_ms"] = doc.timings_ms ? ordered_json(*doc.timings_ms) : ordered_json(nullptr);
    return j.dump(2) + "\n";
}

ReportDocument report_from_json(const std::string& json_text) {
    const ordered_json j = ordered_json::parse(json_text);
    ReportDocument doc;
    doc.schema_version = j.at("schema_version").get<std::string>();
    doc.map_label = j.at("map_label").get<std::string>();
    doc.n = j.at("n").get<int>();
    if (!j.at("verdict").is_null()) doc.verdict = j.at("verdict").get<std::string>();
    doc.jacobian_det = j.at("jacobian_det").get<std::string>();
    doc.counts.computed = j.at("counts").at("computed").get<std::size_t>();
    doc.counts.by_symmetry = j.at("counts").at("by_symmetry").get<std::size_t>();
    doc.counts.by_trace = j.at("counts").at("by_trace").get<std::size_t>();
    for (const auto& je : j.at("entries")) {
        ReportDocument::Entry e;
        e.k = je.at("k").get<int>();
        e.i = je.at("i").get<int>();
        e.j = je.at("j").get<int>();
        e.provenance = je.at("provenance").get<std::string>();
        e.value_in_x = je.at("value_in_x").get<std::string>();
        if (!je.at("member").is_null()) e.member = je.at("member").get<bool>();
        if (!je.at("f_expression").is_null()) e.f_expression = je.at("f_expression").get<std::string>();
        doc.entries.push_back(std::move(e));
    }
    if (!j.at("first_failure").is_null()) doc.first_failure = j.at("first_failure").get<std::vector<int>>();
    if (!j.at("inverse").is_null()) doc.inverse = j.at("inverse").get<std::vector<std::string>>();
    if (!j.at("timings_ms").is_null()) {
        doc.timings_ms = j.at("timings_ms").get<std::map<std::string, double>>();
    }
    return doc;
}

namespace {

/// Re-renders canonical x-grammar text with another variable letter.
std::string with_variable_prefix(const std::string& canonical, int arity, std::string_view prefix) {
    return to_string(parse_polynomial(canonical, arity), prefix);
}

}  // namespace

void print_human_report(std::ostream& os, const ReportDocument& doc) {
    os << "map: " << (doc.map_label.empty() ? "(unlabeled)" : doc.map_label) << "  (n = " << doc.n
       << ")\n";
    os << "det(J_F) = " << doc.jacobian_det << "\n";
    if (doc.verdict) os << "verdict: " << *doc.verdict << "\n";
    os << "entries: " << doc.entries.size() << " total = " << doc.counts.computed << " computed + "
       << doc.counts.by_symmetry << " by-symmetry + " << doc.counts.by_trace << " by-trace\n";
    if (doc.first_failure) {
        const auto& f = *doc.first_failure;
        os << "first failing entry: a[k=" << f[0] << ",i=" << f[1] << ",j=" << f[2] << "]\n";
    }
    for (const auto& e : doc.entries) {
        os << "  a[k=" << e.k << ",i=" << e.i << ",j=" << e.j << "] (" << e.provenance << ")";
        if (e.member) os << (*e.member ? "  member" : "  NOT MEMBER");
        if (e.f_expression) {
            os << "  = " << with_variable_prefix(*e.f_expression, doc.n, "F");
        } else {
            os << "  value = " << e.value_in_x;
        }
        os << "\n";
    }
    if (doc.inverse) {
        os << "inverse:\n";
        for (std::size_t i = 0; i < doc.inverse->size(); ++i) {
            os << "  G" << (i + 1) << " = " << with_variable_prefix((*doc.inverse)[i], doc.n, "y")
               << "\n";
        }
    }
    if (doc.timings_ms) {
        os << "timings (ms):";
        for (const auto& [phase, ms] : *doc.timings_ms) os << "  " << phase << "=" << ms;
        os << "\n";
    }
}

}  // namespace polyaut
