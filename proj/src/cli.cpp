#include "unitcode/cli.hpp"

#include "unitcode/gf_matrix.hpp"
#include "unitcode/linear_code.hpp"
#include "unitcode/unit_graph.hpp"
#include "unitcode/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace unitcode::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CliConfig {
    std::string subcommand;
    std::string target;  // modulus, or a..b range for verify
    unsigned q = 2;
    std::uint64_t budget = default_budget;
    std::string format;
    std::string out_path;
    bool weights = false;
};

std::uint64_t parse_count(std::string_view text, const char* what) {
    std::uint64_t value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end) {
        throw UsageError(std::string("invalid ") + what + " '" + std::string(text) + "'");
    }
    return value;
}

std::uint64_t parse_modulus(std::string_view text) {
    const auto n = parse_count(text, "modulus");
    if (n < 2) throw UsageError("modulus must be at least 2, got " + std::to_string(n));
    return n;
}

std::pair<std::uint64_t, std::uint64_t> parse_range(std::string_view text) {
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        const auto n = parse_modulus(text);
        return {n, n};
    }
    const auto lo = parse_modulus(text.substr(0, dots));
    const auto hi = parse_modulus(text.substr(dots + 2));
    if (lo > hi) throw UsageError("empty range '" + std::string(text) + "'");
    return {lo, hi};
}

std::string join(const auto& values, const char* sep = " ") {
    std::ostringstream s;
    bool first = true;
    for (const auto& v : values) {
        if (!first) s << sep;
        s << v;
        first = false;
    }
    return s.str();
}

// ---------------------------------------------------------------- commands

int cmd_graph(const CliConfig& cfg, std::ostream& out) {
    const auto format = cfg.format.empty() ? std::string("text") : cfg.format;
    if (format != "text" && format != "json" && format != "dot") {
        throw UsageError("format '" + cfg.format + "' not supported by graph (use text|json|dot)");
    }
    const auto graph = build_unit_graph(make_ring(parse_modulus(cfg.target)));
    if (format == "dot") {
        out << to_dot(graph);
        return success;
    }

    const auto degrees = degree_profile(graph);
    const auto comps = connected_components(graph);
    const auto colouring = bipartition(graph);
    const auto cut = edge_connectivity(graph);
    const auto& ring = graph.ring();

    if (format == "json") {
        json edges = json::array();
        for (const auto& e : graph.edges()) edges.push_back({e.u, e.v});
        json doc{{"modulus", ring.modulus()},
                 {"phi", ring.phi()},
                 {"units", std::vector<std::uint64_t>(ring.units().begin(), ring.units().end())},
                 {"vertices", graph.order()},
                 {"edges", graph.size()},
                 {"degrees", degrees},
                 {"components", comps.count},
                 {"bipartite", colouring.has_value()},
                 {"bipartition", colouring ? json(*colouring) : json(nullptr)},
                 {"lambda", cut.lambda},
                 {"witness", cut.witness_side},
                 {"edge_list", std::move(edges)}};
        out << doc.dump() << '\n';
        return success;
    }

    std::vector<std::string> degree_items;
    for (std::size_t v = 0; v < degrees.size(); ++v) degree_items.push_back(std::to_string(v) + ":" + std::to_string(degrees[v]));
    out << "modulus     " << ring.modulus() << '\n'
        << "units       " << join(ring.units()) << "  (phi " << ring.phi() << ")\n"
        << "|V|=" << graph.order() << '\n'
        << "|E|=" << graph.size() << '\n'
        << "degrees     " << join(degree_items) << '\n'
        << "components  " << comps.count << (comps.count == 1 ? " (connected)" : "") << '\n';
    if (colouring) {
        std::vector<std::size_t> side0;
        std::vector<std::size_t> side1;
        for (std::size_t v = 0; v < colouring->size(); ++v) ((*colouring)[v] == 0 ? side0 : side1).push_back(v);
        out << "bipartite   {" << join(side0, ",") << "} | {" << join(side1, ",") << "}\n";
    } else {
        out << "bipartite   no\n";
    }
    out << "lambda=" << cut.lambda << "  witness {" << join(cut.witness_side, ",") << "}\n";
    return success;
}

int cmd_matrix(const CliConfig& cfg, std::ostream& out) {
    const auto format = cfg.format.empty() || cfg.format == "text" ? std::string("matrix") : cfg.format;
    if (format != "matrix" && format != "json") {
        throw UsageError("format '" + cfg.format + "' not supported by matrix (use matrix|json)");
    }
    const auto h = incidence_matrix(build_unit_graph(make_ring(parse_modulus(cfg.target))));
    if (cfg.q == 2) {
        out << (format == "json" ? to_json(h).dump() + "\n" : to_text(h));
    } else {
        const auto lifted = lift_to_prime(h, cfg.q);
        out << (format == "json" ? to_json(lifted).dump() + "\n" : to_text(lifted));
    }
    return success;
}

int cmd_code(const CliConfig& cfg, std::ostream& out) {
    const auto format = cfg.format.empty() ? std::string("text") : cfg.format;
    if (format != "text" && format != "json") {
        throw UsageError("format '" + cfg.format + "' not supported by code (use text|json)");
    }
    const auto n = parse_modulus(cfg.target);
    auto code = code_from_incidence(build_unit_graph(make_ring(n)), cfg.q);
    const EnumerationOptions options{cfg.budget, 0};
    const auto d = minimum_distance(code, options);
    const auto mds = is_mds(code);

    if (format == "json") {
        json doc{{"modulus", n}, {"n", code.length()}, {"k", code.dimension()}, {"d", d}, {"q", cfg.q}, {"mds", mds}};
        if (cfg.weights) doc["weight_distribution"] = weight_distribution(code, options);
        out << doc.dump() << '\n';
        return success;
    }
    out << "modulus  " << n << '\n'
        << "code     [" << code.length() << ", " << code.dimension() << ", " << d << "]_" << cfg.q << '\n'
        << "mds      " << (mds ? "true" : "false") << '\n';
    if (cfg.weights) out << "weights  " << join(weight_distribution(code, options)) << '\n';
    return success;
}

int cmd_verify(const CliConfig& cfg, std::ostream& out) {
    const auto format = cfg.format.empty() ? std::string("text") : cfg.format;
    if (format != "text" && format != "json") {
        throw UsageError("format '" + cfg.format + "' not supported by verify (use text|json)");
    }
    const auto [lo, hi] = parse_range(cfg.target);
    VerifyOptions options;
    options.enumeration.budget = cfg.budget;
    if (cfg.q != 2) options.odd_q = cfg.q;

    SweepResult result;
    if (format == "json") {
        result = sweep(lo, hi, options, [&](const TheoremReport& r) { out << to_json(r).dump() << '\n' << std::flush; });
    } else {
        result = sweep(lo, hi, options);
        out << to_text_table(result);
    }
    if (!result.summary.all_pass()) return claim_failure;
    if (result.summary.skipped > 0) return resource_limit;
    return success;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Linear codes from incidence matrices of unit graphs G(Z_n)", "unitcode"};
    app.require_subcommand(1);

    CliConfig cfg;
    auto add_common = [&](CLI::App* sub, const char* target_help, bool with_field, bool with_budget) {
        sub->add_option("target", cfg.target, target_help)->required();
        if (with_field) sub->add_option("--q", cfg.q, "field characteristic: 2 or an odd prime below 256")->capture_default_str();
        if (with_budget) {
            sub->add_option("--budget", cfg.budget, "maximum number of codewords to enumerate")
                ->check(CLI::PositiveNumber)
                ->capture_default_str();
        }
        sub->add_option("--format", cfg.format, "output format (text|json|dot|matrix)");
        sub->add_option("--out", cfg.out_path, "write output to this file instead of stdout");
    };

    auto* graph = app.add_subcommand("graph", "unit graph facts: |V|, |E|, degrees, connectivity, bipartition, lambda");
    add_common(graph, "modulus n >= 2", false, false);
    auto* matrix = app.add_subcommand("matrix", "incidence matrix in canonical edge order");
    add_common(matrix, "modulus n >= 2", true, false);
    auto* code = app.add_subcommand("code", "parameters [n, k, d]_q of the code spanned by the incidence matrix");
    add_common(code, "modulus n >= 2", true, true);
    code->add_flag("--weights", cfg.weights, "include the weight distribution");
    auto* verify = app.add_subcommand("verify", "check the closed-form claims for a modulus or a range a..b");
    add_common(verify, "modulus n or inclusive range a..b", true, true);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return success;
    } catch (const CLI::ParseError& e) {
        std::ostringstream msg;
        app.exit(e, msg, msg);
        err << msg.str();
        return usage_error;
    }

    CLI::App* chosen = app.get_subcommands().front();
    cfg.subcommand = chosen->get_name();

    std::unique_ptr<std::ofstream> file;
    std::ostream* sink = &out;
    try {
        if (cfg.q != 2 && (cfg.q < 3 || cfg.q > 255 || !is_prime(cfg.q))) {
            throw UsageError("--q must be 2 or an odd prime below 256, got " + std::to_string(cfg.q));
        }
        if (!cfg.out_path.empty()) {
            file = std::make_unique<std::ofstream>(cfg.out_path, std::ios::binary);
            if (!*file) throw UsageError("cannot open '" + cfg.out_path + "' for writing");
            sink = file.get();
        }
        if (cfg.subcommand == "graph") return cmd_graph(cfg, *sink);
        if (cfg.subcommand == "matrix") return cmd_matrix(cfg, *sink);
        if (cfg.subcommand == "code") return cmd_code(cfg, *sink);
        return cmd_verify(cfg, *sink);
    } catch (const UsageError& e) {
        err << "unitcode " << cfg.subcommand << ": " << e.what() << '\n';
        return usage_error;
    } catch (const ResourceLimitError& e) {
        err << "unitcode " << cfg.subcommand << ": resource limit: " << e.what() << '\n';
        return resource_limit;
    }
}

}  // namespace unitcode::cli
