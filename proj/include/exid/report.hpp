#pragma once
// Verification reports and their JSON serialization. Numbers are printed
// with %.17g so that identical runs produce byte-identical output.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace exid {

struct IdentityReport {
    std::string name;
    double lhs = 0.0;         // left-hand side (before any correction term)
    double rhs = 0.0;         // right-hand side
    double correction = 0.0;  // defect/correction term (I or J), 0 if none
    double abs_err = 0.0;
    double rel_err = 0.0;
    std::vector<std::pair<std::string, double>> params;  // ordered, deterministic
    bool passed = false;
    double excised_mass = 0.0;  // |weight| mass skipped by the singularity guard
    double tolerance = 0.0;
};

// Fills abs/rel error and the pass flag from the combined left-hand side
// (lhs plus whichever sign the correction enters with) against rhs.
inline void finalize_report(IdentityReport& r, double combined_lhs, double rhs,
                            double tolerance) {
    r.rhs = rhs;
    r.tolerance = tolerance;
    r.abs_err = std::abs(combined_lhs - rhs);
    r.rel_err = r.abs_err / std::max(std::abs(rhs), 1e-14);
    r.passed = r.rel_err <= tolerance;
}

namespace detail {

inline std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out.push_back('\\');
            out.push_back(c);
        } else {
            out.push_back(c);
        }
    }
    return out;
}

}  // namespace detail

inline void write_report_json(const IdentityReport& r, std::ostream& os) {
    os << "{\"name\":\"" << detail::json_escape(r.name) << "\""
       << ",\"lhs\":" << detail::fmt17(r.lhs) << ",\"rhs\":" << detail::fmt17(r.rhs)
       << ",\"correction\":" << detail::fmt17(r.correction)
       << ",\"abs_err\":" << detail::fmt17(r.abs_err)
       << ",\"rel_err\":" << detail::fmt17(r.rel_err) << ",\"params\":{";
    bool first = true;
    for (const auto& [k, v] : r.params) {
        if (!first) os << ",";
        first = false;
        os << "\"" << detail::json_escape(k) << "\":" << detail::fmt17(v);
    }
    os << "},\"passed\":" << (r.passed ? "true" : "false")
       << ",\"excised_mass\":" << detail::fmt17(r.excised_mass) << "}";
}

inline void write_reports_json(const std::vector<IdentityReport>& rs, std::ostream& os) {
    os << "[";
    for (std::size_t i = 0; i < rs.size(); ++i) {
        if (i) os << ",";
        os << "\n  ";
        write_report_json(rs[i], os);
    }
    os << "\n]\n";
}

}  // namespace exid
