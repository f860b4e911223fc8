#include "unitcode/verify.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace unitcode {

using Values = std::vector<std::int64_t>;

std::optional<CodeParams> predict_params(std::uint64_t n, unsigned q) {
    if (q != 2) return std::nullopt;
    switch (classify(n)) {
        case Family::odd_prime:
            return CodeParams{(n - 1) * (n - 1) / 2, n - 1, n - 2};
        case Family::twice_odd_prime: {
            const auto p = n / 2;
            return CodeParams{p * (p - 1), 2 * p - 1, p - 1};
        }
        case Family::none:
            break;
    }
    return std::nullopt;
}

Family classify(std::uint64_t n) {
    if (n > 2 && is_prime(n)) return Family::odd_prime;
    if (twice_odd_prime(n)) return Family::twice_odd_prime;
    return Family::none;
}

const char* to_string(Family f) {
    switch (f) {
        case Family::odd_prime: return "odd_prime";
        case Family::twice_odd_prime: return "twice_odd_prime";
        case Family::none: break;
    }
    return "none";
}

const char* to_string(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::pass: return "pass";
        case ClaimStatus::fail: return "fail";
        case ClaimStatus::skipped: break;
    }
    return "skipped";
}

bool TheoremReport::has_failure() const {
    return error.has_value() ||
           std::any_of(claims.begin(), claims.end(), [](const Claim& c) { return c.status == ClaimStatus::fail; });
}

bool TheoremReport::has_skipped() const {
    return std::any_of(claims.begin(), claims.end(), [](const Claim& c) { return c.status == ClaimStatus::skipped; });
}

namespace {

template <typename T>
std::int64_t as_value(T x) {
    return static_cast<std::int64_t>(x);
}

Claim checked(std::string id, Values predicted, Values computed) {
    Claim c{std::move(id), std::move(predicted), std::move(computed), ClaimStatus::fail, {}};
    if (*c.computed == c.predicted) c.status = ClaimStatus::pass;
    return c;
}

Claim skipped(std::string id, Values predicted, std::string why) {
    return Claim{std::move(id), std::move(predicted), std::nullopt, ClaimStatus::skipped, std::move(why)};
}

template <typename Range>
Values to_values(const Range& r) {
    Values out;
    for (auto x : r) out.push_back(as_value(x));
    return out;
}

}  // namespace

TheoremReport verify_theorems(std::uint64_t n, const VerifyOptions& options) {
    if (n < 2) throw std::invalid_argument("modulus must be at least 2, got " + std::to_string(n));

    const auto ring = make_ring(n);
    const auto graph = build_unit_graph(ring);
    const auto comps = connected_components(graph);
    const auto colouring = bipartition(graph);
    const auto cut = edge_connectivity(graph);

    TheoremReport report;
    report.modulus = n;
    report.family = classify(n);
    report.applicable = report.family != Family::none;

    auto& facts = report.facts;
    facts.phi = ring.phi();
    facts.vertices = graph.order();
    facts.edges = graph.size();
    facts.components = comps.count;
    facts.bipartite = colouring.has_value();
    facts.lambda = cut.lambda;
    facts.odd_q = options.odd_q;

    auto binary = code_from_incidence(graph, 2);
    facts.dimension = binary.dimension();
    std::string distance_note;
    try {
        facts.distance = minimum_distance(binary, options.enumeration);
        facts.mds = is_mds(binary);
    } catch (const ResourceLimitError& e) {
        distance_note = std::string("skipped: budget (") + e.what() + ")";
    }

    if (facts.bipartite && comps.count == 1) {
        auto odd = code_from_incidence(graph, options.odd_q);
        facts.odd_dimension = odd.dimension();
        const auto count = odd.codeword_count();
        // The odd-q distance only feeds a claim, so non-applicable rows skip the enumeration.
        if (report.applicable && count && *count <= options.enumeration.budget) {
            facts.odd_distance = minimum_distance(odd, options.enumeration);
        }
    }

    if (!report.applicable) return report;

    auto& claims = report.claims;
    const auto regularity = check_regularity(graph);
    claims.push_back(checked(claim_id::regularity, to_values(regularity.expected), to_values(regularity.actual)));
    claims.push_back(checked(claim_id::connected, {1}, {as_value(comps.count)}));

    const auto predicted = *predict_params(n, 2);
    if (report.family == Family::odd_prime) {
        claims.push_back(checked(claim_id::edge_count_p, {as_value(n), as_value(*predicted_edge_count(n))},
                                 {as_value(facts.vertices), as_value(facts.edges)}));
        claims.push_back(checked(claim_id::edge_conn_p, {as_value(n - 2)}, {as_value(cut.lambda)}));
    } else {
        const auto p = n / 2;
        const auto degrees = degree_profile(graph);
        const auto [lo, hi] = std::minmax_element(degrees.begin(), degrees.end());
        claims.push_back(checked(claim_id::counts_2p, {as_value(2 * p), as_value(*predicted_edge_count(n))},
                                 {as_value(facts.vertices), as_value(facts.edges)}));
        claims.push_back(checked(claim_id::degree_2p, {as_value(p - 1), as_value(p - 1)}, {as_value(*lo), as_value(*hi)}));
        claims.push_back(checked(claim_id::bipartite_2p, {1}, {facts.bipartite ? 1 : 0}));
        claims.push_back(checked(claim_id::edge_conn_2p, {as_value(p - 1)}, {as_value(cut.lambda)}));
    }

    const char* params_id = report.family == Family::odd_prime ? claim_id::code_params_p : claim_id::code_params_2p;
    const Values predicted_params{as_value(predicted.length), as_value(predicted.dimension), as_value(predicted.distance)};
    if (facts.distance) {
        claims.push_back(checked(params_id, predicted_params,
                                 {as_value(facts.edges), as_value(facts.dimension), as_value(*facts.distance)}));
        claims.push_back(checked(claim_id::distance_is_lambda, {as_value(cut.lambda)}, {as_value(*facts.distance)}));
    } else {
        claims.push_back(skipped(params_id, predicted_params, distance_note));
        claims.push_back(skipped(claim_id::distance_is_lambda, {as_value(cut.lambda)}, distance_note));
    }

    if (facts.odd_dimension) {
        claims.push_back(checked(claim_id::odd_q_dimension, {as_value(facts.vertices - 1)},
                                 {as_value(*facts.odd_dimension)}));
        if (facts.odd_distance) {
            claims.push_back(checked(claim_id::odd_q_distance, {as_value(cut.lambda)}, {as_value(*facts.odd_distance)}));
        }
    }
    return report;
}

SweepResult sweep(std::uint64_t lo, std::uint64_t hi, const VerifyOptions& options, const RowCallback& on_row) {
    if (lo > hi) throw std::invalid_argument("empty range " + std::to_string(lo) + ".." + std::to_string(hi));

    SweepResult result;
    for (auto n = lo; n <= hi; ++n) {
        TheoremReport row;
        try {
            row = verify_theorems(n, options);
        } catch (const std::exception& e) {
            row = TheoremReport{};
            row.modulus = n;
            row.family = classify(n);
            row.applicable = row.family != Family::none;
            row.error = e.what();
        }
        auto& s = result.summary;
        ++s.rows;
        if (row.applicable || row.error) {
            s.applicable += row.applicable ? 1 : 0;
            if (row.has_failure()) {
                ++s.failed;
            } else if (row.has_skipped()) {
                ++s.skipped;
            } else {
                ++s.passed;
            }
        }
        if (on_row) on_row(row);
        result.rows.push_back(std::move(row));
        if (n == hi) break;  // hi may be the largest uint64
    }
    return result;
}

// ------------------------------------------------------------------- output

nlohmann::ordered_json to_json(const TheoremReport& report) {
    using json = nlohmann::ordered_json;
    const auto& f = report.facts;
    auto opt = [](const auto& o) { return o ? json(*o) : json(nullptr); };

    json facts{{"phi", f.phi},
               {"vertices", f.vertices},
               {"edges", f.edges},
               {"components", f.components},
               {"bipartite", f.bipartite},
               {"lambda", f.lambda},
               {"q", 2},
               {"dimension", f.dimension},
               {"distance", opt(f.distance)},
               {"mds", opt(f.mds)}};
    if (f.odd_dimension) {
        facts["odd_q"] = f.odd_q;
        facts["odd_dimension"] = *f.odd_dimension;
        facts["odd_distance"] = opt(f.odd_distance);
    }

    json claims = json::array();
    for (const auto& c : report.claims) {
        json entry{{"id", c.id}, {"predicted", c.predicted}, {"computed", opt(c.computed)}, {"status", to_string(c.status)}};
        if (!c.note.empty()) entry["note"] = c.note;
        claims.push_back(std::move(entry));
    }

    json out{{"modulus", report.modulus}, {"family", to_string(report.family)}, {"applicable", report.applicable}};
    if (report.error) {
        out["error"] = *report.error;
        return out;
    }
    out["facts"] = std::move(facts);
    out["claims"] = std::move(claims);
    return out;
}

namespace {

std::string render(const Values& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s + "]";
}

const char* verdict(const TheoremReport& r) {
    if (r.error) return "ERROR";
    if (!r.applicable) return "n/a";
    if (r.has_failure()) return "FAIL";
    if (r.has_skipped()) return "SKIP";
    return "PASS";
}

}  // namespace

std::string to_text_table(const SweepResult& result) {
    std::ostringstream out;
    out << std::setw(6) << "n" << "  " << std::left << std::setw(16) << "family" << std::right << std::setw(6) << "|V|"
        << std::setw(7) << "|E|" << std::setw(8) << "lambda" << std::setw(6) << "k" << std::setw(6) << "d" << "  "
        << std::left << std::setw(6) << "mds" << "result" << std::right << '\n';

    std::ostringstream details;
    for (const auto& r : result.rows) {
        out << std::setw(6) << r.modulus << "  " << std::left << std::setw(16) << to_string(r.family) << std::right;
        if (r.error) {
            out << "  error: " << *r.error << '\n';
            continue;
        }
        const auto& f = r.facts;
        out << std::setw(6) << f.vertices << std::setw(7) << f.edges << std::setw(8) << f.lambda << std::setw(6)
            << f.dimension << std::setw(6) << (f.distance ? std::to_string(*f.distance) : "-") << "  " << std::left
            << std::setw(6) << (f.mds ? (*f.mds ? "true" : "false") : "-") << verdict(r) << std::right << '\n';
        for (const auto& c : r.claims) {
            if (c.status == ClaimStatus::pass) continue;
            details << "  n=" << r.modulus << ' ' << c.id << ": predicted " << render(c.predicted);
            if (c.computed) details << ", computed " << render(*c.computed);
            details << " -> " << to_string(c.status);
            if (!c.note.empty()) details << " (" << c.note << ')';
            details << '\n';
        }
    }
    out << details.str();
    const auto& s = result.summary;
    out << "rows " << s.rows << ", applicable " << s.applicable << ", passed " << s.passed << ", failed " << s.failed
        << ", skipped " << s.skipped << '\n';
    return out.str();
}

}  // namespace unitcode
