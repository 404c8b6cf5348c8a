#ifndef AALPHA_REPORT_HPP
#define AALPHA_REPORT_HPP

// Analysis reports over a graph and an alpha grid, rendered as JSON, CSV, or
// plain text. JSON output is deterministic: fixed field order, numbers
// rounded to 12 significant digits, non-finite values mapped to null.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "aalpha/criteria.hpp"
#include "aalpha/graph.hpp"
#include "aalpha/state.hpp"

namespace aalpha {

using json = nlohmann::ordered_json;

inline constexpr const char* kReportSchemaVersion = "1";

namespace detail {

inline json num(double x) {
    if (!std::isfinite(x)) return nullptr;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

inline std::string num_str(double x) {
    if (!std::isfinite(x)) return x > 0 ? "inf" : (x < 0 ? "-inf" : "nan");
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

}  // namespace detail

inline json analysis_report(const std::string& graph_id, const Graph& g,
                            const std::vector<double>& grid, double tol = kPsdTol,
                            bool refine = false) {
    const SweepReport rep = sweep(g, grid, tol, refine);

    json doc;
    doc["schema_version"] = kReportSchemaVersion;

    double min_deg = weighted_degree(g, 0);
    for (std::size_t v = 1; v < g.n(); ++v) min_deg = std::min(min_deg, weighted_degree(g, v));
    json jg;
    jg["id"] = graph_id;
    jg["n"] = g.n();
    jg["d1"] = g.d1();
    jg["d2"] = g.d2();
    jg["edge_count"] = g.edges().size();
    jg["simple_unweighted"] = g.simple_unweighted();
    jg["total_degree"] = detail::num(total_degree(g));
    jg["frobenius_norm_sq"] = detail::num(frobenius_norm_sq(g));
    jg["min_degree"] = detail::num(min_deg);
    jg["connected"] = is_connected(g);
    jg["transpose_connected"] = is_connected(partial_transpose_graph(g));
    doc["graph"] = jg;

    json jv;
    jv["alpha_weyl"] = detail::num(rep.validity.alpha_weyl);
    jv["alpha_exact"] = detail::num(rep.validity.alpha_exact);
    jv["isolated_vertex_warning"] = rep.validity.isolated_vertex;
    doc["validity"] = jv;

    if (g.simple_unweighted()) {
        const auto thr = alpha_threshold_simple(g);
        doc["alpha_threshold_simple"] = thr ? detail::num(*thr) : json(nullptr);
    } else {
        doc["alpha_threshold_simple"] = nullptr;
    }

    json moments = json::array();
    for (double a : grid) {
        const AlphaState s = build_state(g, a);
        const double p2g = p2_graph(g, a), p2d = p2_direct(s);
        const double p3g = p3_graph(g, a), p3d = p3_direct(s);
        json m;
        m["alpha"] = detail::num(a);
        m["p2_graph"] = detail::num(p2g);
        m["p2_direct"] = detail::num(p2d);
        m["p2_delta"] = detail::num(p2g - p2d);
        m["p3_graph"] = detail::num(p3g);
        m["p3_direct"] = detail::num(p3d);
        m["p3_delta"] = detail::num(p3g - p3d);
        moments.push_back(m);
    }
    doc["moments"] = moments;

    json verdicts = json::array();
    for (std::size_t i = 0; i < rep.grid.size(); ++i) {
        for (std::size_t ci = 0; ci < std::size(kAllCriteria); ++ci) {
            const CriterionVerdict& v = rep.verdicts[ci][i];
            json jvd;
            jvd["alpha"] = detail::num(rep.grid[i]);
            jvd["criterion"] = to_string(v.criterion);
            jvd["outcome"] = to_string(v.outcome);
            jvd["lhs"] = detail::num(v.lhs);
            jvd["rhs"] = detail::num(v.rhs);
            jvd["state_valid"] = v.state_valid;
            verdicts.push_back(jvd);
        }
    }
    doc["verdicts"] = verdicts;

    json intervals = json::array();
    for (const OutcomeRun& run : rep.runs) {
        json ji;
        ji["criterion"] = to_string(run.criterion);
        ji["outcome"] = to_string(run.outcome);
        ji["alpha_lo"] = detail::num(run.alpha_lo);
        ji["alpha_hi"] = detail::num(run.alpha_hi);
        ji["refined"] = run.refined;
        intervals.push_back(ji);
    }
    doc["intervals"] = intervals;
    return doc;
}

// One row per (alpha, criterion), ready for plotting.
inline std::string report_to_csv(const json& doc) {
    std::ostringstream out;
    out << "alpha,criterion,outcome,lhs,rhs,state_valid\n";
    for (const json& v : doc.at("verdicts")) {
        out << (v.at("alpha").is_null() ? "" : detail::num_str(v.at("alpha").get<double>())) << ","
            << v.at("criterion").get<std::string>() << "," << v.at("outcome").get<std::string>()
            << "," << (v.at("lhs").is_null() ? "" : detail::num_str(v.at("lhs").get<double>()))
            << "," << (v.at("rhs").is_null() ? "" : detail::num_str(v.at("rhs").get<double>()))
            << "," << (v.at("state_valid").get<bool>() ? "true" : "false") << "\n";
    }
    return out.str();
}

inline std::string report_to_text(const json& doc) {
    std::ostringstream out;
    const json& g = doc.at("graph");
    out << "graph " << g.at("id").get<std::string>() << ": n=" << g.at("n").get<std::size_t>()
        << " (" << g.at("d1").get<std::size_t>() << "x" << g.at("d2").get<std::size_t>() << "), "
        << g.at("edge_count").get<std::size_t>() << " edges"
        << (g.at("simple_unweighted").get<bool>() ? ", unit weights" : ", weighted") << "\n";
    out << "  total degree " << detail::num_str(g.at("total_degree").get<double>())
        << ", frobenius norm squared " << detail::num_str(g.at("frobenius_norm_sq").get<double>())
        << "\n";
    const json& v = doc.at("validity");
    out << "validity: alpha >= " << detail::num_str(v.at("alpha_exact").get<double>())
        << " (weyl bound " << detail::num_str(v.at("alpha_weyl").get<double>()) << ")";
    if (v.at("isolated_vertex_warning").get<bool>()) out << "  [isolated vertex: bound vacuous]";
    out << "\n";
    if (!doc.at("alpha_threshold_simple").is_null()) {
        out << "ppt for alpha >= " << detail::num_str(doc.at("alpha_threshold_simple").get<double>())
            << " (unweighted-graph threshold)\n";
    }
    if (!doc.at("intervals").empty()) {
        out << "intervals:\n";
        for (const json& run : doc.at("intervals")) {
            out << "  " << run.at("criterion").get<std::string>() << " "
                << run.at("outcome").get<std::string>() << " on ["
                << detail::num_str(run.at("alpha_lo").get<double>()) << ", "
                << detail::num_str(run.at("alpha_hi").get<double>()) << "]"
                << (run.at("refined").get<bool>() ? " (refined)" : "") << "\n";
        }
    }
    out << "verdicts:\n";
    for (const json& jv : doc.at("verdicts")) {
        out << "  alpha=" << detail::num_str(jv.at("alpha").get<double>()) << "  "
            << jv.at("criterion").get<std::string>() << ": " << jv.at("outcome").get<std::string>();
        if (!jv.at("state_valid").get<bool>()) out << "  [not a state]";
        out << "\n";
    }
    return out.str();
}

}  // namespace aalpha

#endif  // AALPHA_REPORT_HPP
