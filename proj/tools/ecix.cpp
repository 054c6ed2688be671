// ecix — eccentric connectivity index explorer.
//
// Subcommands: compute, family, enumerate, extremal, verify.
// Exit codes: 0 success / pass / conjecture-holds, 1 usage or input error,
// 2 verification fail or conjecture-refuted.
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ecix/enumerate.hpp"
#include "ecix/extremal.hpp"
#include "ecix/families.hpp"
#include "ecix/graph6.hpp"
#include "ecix/report.hpp"

namespace {

struct Settings {
    std::string format = "table";
    std::string config_path;
    int jobs = 0;  // 0 = not set on the command line
};

// key=value lines; '#' starts a comment. Keys: budget, jobs, output-format.
std::map<std::string, std::string> read_config(const std::string& path) {
    std::map<std::string, std::string> out;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file " + path);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](const std::string& s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!key.empty()) out[key] = value;
    }
    return out;
}

struct Resolved {
    ecix::Format format = ecix::Format::Table;
    ecix::EnumOptions enum_options;
};

Resolved resolve(const Settings& settings, bool format_set) {
    Resolved r;
    std::map<std::string, std::string> config;
    if (!settings.config_path.empty()) config = read_config(settings.config_path);

    std::string format = settings.format;
    if (!format_set && config.count("output-format")) format = config.at("output-format");
    r.format = ecix::parse_format(format);

    if (settings.jobs > 0)
        r.enum_options.jobs = settings.jobs;
    else if (config.count("jobs"))
        r.enum_options.jobs = std::max(1, std::stoi(config.at("jobs")));

    // ECIX_BUDGET (read inside enumeration_budget) overrides the config value.
    if (config.count("budget") && std::getenv("ECIX_BUDGET") == nullptr)
        r.enum_options.budget = std::stoi(config.at("budget"));
    return r;
}

ecix::FamilySpec parse_family(const std::string& name, int n, std::optional<int> p, std::optional<int> x,
                              std::optional<int> d, std::optional<int> k, std::optional<int> i) {
    auto need = [&](std::optional<int> v, const char* flag) {
        if (!v) throw std::invalid_argument(std::string("family '") + name + "' requires " + flag);
        return *v;
    };
    if (name == "complete") return ecix::FamilySpec::complete(n);
    if (name == "path") return ecix::FamilySpec::path(n);
    if (name == "cycle") return ecix::FamilySpec::cycle(n);
    if (name == "wheel") return ecix::FamilySpec::wheel(n);
    if (name == "matching-reduced") return ecix::FamilySpec::matching_reduced(n);
    if (name == "complete-split") return ecix::FamilySpec::complete_split(n, need(x, "--x"));
    if (name == "pendant-star") return ecix::FamilySpec::pendant_star(n, need(p, "--p"));
    if (name == "clique-path") return ecix::FamilySpec::clique_path(n, need(d, "--d"));
    if (name == "clique-path-partial")
        return ecix::FamilySpec::clique_path_partial(n, need(d, "--d"), need(k, "--k"));
    if (name == "conjecture-exception")
        return ecix::FamilySpec::conjecture_exception(n, need(i, "--i"));
    throw std::invalid_argument(
        "unknown family '" + name +
        "' (complete, path, cycle, wheel, matching-reduced, complete-split, pendant-star, "
        "clique-path, clique-path-partial, conjecture-exception)");
}

int run_compute(const std::vector<std::string>& g6_args, ecix::Format format) {
    std::vector<std::string> inputs = g6_args;
    if (inputs.empty()) {
        std::string line;
        while (std::getline(std::cin, line))
            if (!line.empty()) inputs.push_back(line);
    }
    bool first = true;
    for (const auto& line : inputs) {
        const ecix::Graph g = ecix::decode_graph6(line);
        const ecix::EciReport report = ecix::eci_report(g);
        if (!first && format == ecix::Format::Table) std::cout << '\n';
        first = false;
        std::cout << ecix::emit_report(report, format);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"eccentric connectivity index explorer"};
    app.require_subcommand(1);

    Settings settings;
    auto* format_opt = app.add_option("--format", settings.format, "output format: table, csv, json-lines")
                           ->check(CLI::IsMember({"table", "csv", "json-lines"}));
    app.add_option("--config", settings.config_path, "config file with key=value lines");

    // compute
    auto* compute = app.add_subcommand("compute", "per-vertex ECI report for graph6 input");
    std::vector<std::string> g6_inputs;
    compute->add_option("--g6", g6_inputs, "graph6 string (repeatable; default: read stdin lines)");

    // family
    auto* family = app.add_subcommand("family", "construct a named family member");
    std::string family_name_arg;
    int family_n = 0;
    std::optional<int> opt_p, opt_x, opt_d, opt_k, opt_i;
    family->add_option("--name", family_name_arg, "family name")->required();
    family->add_option("--n", family_n, "order")->required();
    family->add_option("--p", opt_p, "pending count (pendant-star)");
    family->add_option("--x", opt_x, "clique size (complete-split)");
    family->add_option("--d", opt_d, "path length D (clique-path, clique-path-partial)");
    family->add_option("--k", opt_k, "clique vertices joined to u_2 (clique-path-partial)");
    family->add_option("--i", opt_i, "clique vertices on u_0,u_1,u_2 (conjecture-exception)");

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "connected graphs up to isomorphism");
    int enum_n = 0;
    std::optional<int> enum_pending;
    std::optional<std::int64_t> enum_edges;
    bool count_only = false;
    enumerate->add_option("--n", enum_n, "order")->required();
    enumerate->add_option("--pending", enum_pending, "exact pending-vertex count");
    enumerate->add_option("--edges", enum_edges, "exact edge count");
    enumerate->add_flag("--count-only", count_only, "print the class count only");

    // extremal
    auto* extremal = app.add_subcommand("extremal", "exhaustive min/max ECI over a class");
    int ext_n = 0;
    std::optional<int> ext_pending;
    std::optional<std::int64_t> ext_edges;
    std::string direction;
    extremal->add_option("--n", ext_n, "order")->required();
    extremal->add_option("--pending", ext_pending, "exact pending-vertex count");
    extremal->add_option("--edges", ext_edges, "exact edge count");
    extremal->add_option("--direction", direction, "min or max")
        ->required()
        ->check(CLI::IsMember({"min", "max"}));

    // verify
    auto* verify = app.add_subcommand("verify", "exhaustively check a known extremal statement");
    std::string statement;
    int n_min = 0, n_max = 0;
    verify->add_option("--statement", statement, "statement id")->required();
    verify->add_option("--n-min", n_min, "smallest order")->required();
    verify->add_option("--n-max", n_max, "largest order")->required();
    verify->add_option("--jobs", settings.jobs, "worker threads for the enumeration sweeps");

    // let --format/--config appear after the subcommand too
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        try {
            app.parse(argc, argv);
        } catch (const CLI::ParseError& e) {
            const int code = app.exit(e);
            return code == 0 ? 0 : 1;
        }
        const Resolved r = resolve(settings, format_opt->count() > 0);

        if (compute->parsed()) return run_compute(g6_inputs, r.format);

        if (family->parsed()) {
            const ecix::FamilySpec spec =
                parse_family(family_name_arg, family_n, opt_p, opt_x, opt_d, opt_k, opt_i);
            const ecix::Graph g = ecix::construct(spec);
            const std::uint64_t value = ecix::eci(g);
            const auto closed = ecix::closed_eci(spec);
            if (r.format == ecix::Format::Table) {
                std::cout << "family: " << ecix::family_name(spec) << '\n'
                          << "graph6: " << ecix::encode_graph6(g) << '\n'
                          << "eci: " << value << '\n';
                if (closed) std::cout << "closed_eci: " << *closed << '\n';
            } else if (r.format == ecix::Format::Csv) {
                std::cout << "family,graph6,eci,closed_eci\n"
                          << ecix::family_name(spec) << ',' << ecix::encode_graph6(g) << ',' << value
                          << ',' << (closed ? std::to_string(*closed) : "") << '\n';
            } else {
                std::cout << "{\"family\":\"" << ecix::family_name(spec) << "\",\"graph6\":\""
                          << ecix::encode_graph6(g) << "\",\"eci\":" << value;
                if (closed) std::cout << ",\"closed_eci\":" << *closed;
                std::cout << "}\n";
            }
            return 0;
        }

        if (enumerate->parsed()) {
            ecix::ClassFilter filter;
            filter.n = enum_n;
            filter.pending = enum_pending;
            filter.edges = enum_edges;
            if (count_only) {
                std::cout << ecix::count_connected(filter, r.enum_options) << '\n';
            } else {
                ecix::for_each_connected(
                    filter, [](const ecix::Graph& g) { std::cout << ecix::encode_graph6(g) << '\n'; },
                    r.enum_options);
            }
            return 0;
        }

        if (extremal->parsed()) {
            ecix::ClassFilter filter;
            filter.n = ext_n;
            filter.pending = ext_pending;
            filter.edges = ext_edges;
            const auto dir = direction == "min" ? ecix::Direction::Min : ecix::Direction::Max;
            const ecix::ExtremalResult result = ecix::search_extremal(filter, dir, r.enum_options);
            std::cout << ecix::emit_report(result, r.format);
            return 0;
        }

        if (verify->parsed()) {
            const ecix::VerificationOutcome outcome =
                ecix::verify(statement, n_min, n_max, r.enum_options);
            std::cout << ecix::emit_report(outcome, r.format);
            const bool ok = outcome.verdict == ecix::Verdict::Pass ||
                            outcome.verdict == ecix::Verdict::ConjectureHolds;
            return ok ? 0 : 2;
        }
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 1;
    }
    return 1;
}
