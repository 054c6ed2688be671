#include "ecix/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "ecix/graph6.hpp"

namespace ecix {

namespace {

using nlohmann::json;

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') quoted += "\"\"";
        else quoted.push_back(c);
    }
    quoted += "\"";
    return quoted;
}

std::string direction_name(Direction d) { return d == Direction::Min ? "min" : "max"; }

std::string dominating_name(DominatingFilter d) {
    switch (d) {
        case DominatingFilter::Any: return "any";
        case DominatingFilter::Exactly0: return "exactly-0";
        case DominatingFilter::Exactly1: return "exactly-1";
        case DominatingFilter::AtLeast2: return "at-least-2";
    }
    return "?";
}

std::string filter_description(const ClassFilter& f) {
    std::string out = "n=" + std::to_string(f.n);
    if (f.pending) out += ", pending=" + std::to_string(*f.pending);
    if (f.edges) out += ", edges=" + std::to_string(*f.edges);
    if (f.dominating != DominatingFilter::Any) out += ", dominating=" + dominating_name(f.dominating);
    return out;
}

json filter_json(const ClassFilter& f) {
    json j;
    j["n"] = f.n;
    if (f.pending) j["pending"] = *f.pending;
    if (f.edges) j["edges"] = *f.edges;
    if (f.dominating != DominatingFilter::Any) j["dominating"] = dominating_name(f.dominating);
    return j;
}

}  // namespace

Format parse_format(const std::string& name) {
    if (name == "table") return Format::Table;
    if (name == "csv") return Format::Csv;
    if (name == "json-lines") return Format::JsonLines;
    throw std::invalid_argument("unknown output format '" + name + "' (table, csv, json-lines)");
}

std::string emit_report(const EciReport& report, Format format) {
    std::ostringstream out;
    switch (format) {
        case Format::Table: {
            out << "vertex  degree  eccentricity  product\n";
            for (const auto& row : report.rows) {
                out << std::setw(6) << row.vertex << "  " << std::setw(6) << row.degree << "  "
                    << std::setw(12) << row.eccentricity << "  " << std::setw(7) << row.product
                    << '\n';
            }
            out << "eci = " << report.total << '\n';
            break;
        }
        case Format::Csv: {
            out << "vertex,degree,eccentricity,product\n";
            for (const auto& row : report.rows)
                out << row.vertex << ',' << row.degree << ',' << row.eccentricity << ',' << row.product
                    << '\n';
            out << "total,,," << report.total << '\n';
            break;
        }
        case Format::JsonLines: {
            for (const auto& row : report.rows) {
                json j;
                j["vertex"] = row.vertex;
                j["degree"] = row.degree;
                j["eccentricity"] = row.eccentricity;
                j["product"] = row.product;
                out << j.dump() << '\n';
            }
            out << json{{"total", report.total}}.dump() << '\n';
            break;
        }
    }
    return out.str();
}

std::string emit_report(const ExtremalResult& result, Format format) {
    std::ostringstream out;
    switch (format) {
        case Format::Table: {
            out << direction_name(result.direction) << " ECI over " << filter_description(result.filter)
                << ": " << result.value << "  (" << result.class_size << " graphs, "
                << result.optima.size() << " optima)\n";
            for (const auto& g : result.optima) out << encode_graph6(g) << '\n';
            break;
        }
        case Format::Csv: {
            out << "direction,n,pending,edges,dominating,value,class_size,graph6\n";
            for (const auto& g : result.optima) {
                out << direction_name(result.direction) << ',' << result.filter.n << ','
                    << (result.filter.pending ? std::to_string(*result.filter.pending) : "") << ','
                    << (result.filter.edges ? std::to_string(*result.filter.edges) : "") << ','
                    << dominating_name(result.filter.dominating) << ',' << result.value << ','
                    << result.class_size << ',' << encode_graph6(g) << '\n';
            }
            break;
        }
        case Format::JsonLines: {
            json j;
            j["direction"] = direction_name(result.direction);
            j["filter"] = filter_json(result.filter);
            j["value"] = result.value;
            j["class_size"] = result.class_size;
            json optima = json::array();
            for (const auto& g : result.optima) optima.push_back(encode_graph6(g));
            j["optima"] = optima;
            out << j.dump() << '\n';
            break;
        }
    }
    return out.str();
}

std::string emit_report(const VerificationOutcome& outcome, Format format) {
    std::ostringstream out;
    switch (format) {
        case Format::Table: {
            out << outcome.statement << " n=" << outcome.n_min << ".." << outcome.n_max << ": "
                << verdict_name(outcome.verdict) << "  (" << outcome.graphs_examined << " graphs, "
                << outcome.cells_checked << " cells, " << std::fixed << std::setprecision(3)
                << outcome.seconds << " s)\n";
            for (const auto& ce : outcome.counterexamples) {
                out << "  " << (ce.g6.empty() ? "-" : ce.g6) << "  expected " << ce.expected
                    << ", observed " << ce.observed << "  [" << ce.detail << "]\n";
            }
            break;
        }
        case Format::Csv: {
            out << "statement,n_min,n_max,verdict,graph6,expected,observed,detail\n";
            out << outcome.statement << ',' << outcome.n_min << ',' << outcome.n_max << ','
                << verdict_name(outcome.verdict) << ",,,,\n";
            for (const auto& ce : outcome.counterexamples) {
                out << outcome.statement << ',' << outcome.n_min << ',' << outcome.n_max << ','
                    << verdict_name(outcome.verdict) << ',' << ce.g6 << ',' << ce.expected << ','
                    << ce.observed << ',' << csv_field(ce.detail) << '\n';
            }
            break;
        }
        case Format::JsonLines: {
            json j;
            j["statement"] = outcome.statement;
            j["n_min"] = outcome.n_min;
            j["n_max"] = outcome.n_max;
            j["verdict"] = verdict_name(outcome.verdict);
            json ces = json::array();
            for (const auto& ce : outcome.counterexamples) {
                ces.push_back(json{{"graph6", ce.g6},
                                   {"expected", ce.expected},
                                   {"observed", ce.observed},
                                   {"detail", ce.detail}});
            }
            j["counterexamples"] = ces;
            j["graphs_examined"] = outcome.graphs_examined;
            j["cells_checked"] = outcome.cells_checked;
            j["seconds"] = outcome.seconds;
            out << j.dump() << '\n';
            break;
        }
    }
    return out.str();
}

}  // namespace ecix
