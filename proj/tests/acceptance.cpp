// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include "unitcode/cli.hpp"
#include "unitcode/linear_code.hpp"
#include "unitcode/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace unitcode;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool condition, const std::string& what) {
        if (!condition && pass) {
            pass = false;
            detail = what;
        }
    }
};

struct Criterion {
    const char* id;
    const char* title;
    double time_limit_s;
    std::function<Outcome()> check;
};

struct CliRun {
    int code;
    std::string out;
};

CliRun cli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str()};
}

std::string bracket(std::uint64_t n, std::uint64_t k, std::uint64_t d) {
    return "[" + std::to_string(n) + ", " + std::to_string(k) + ", " + std::to_string(d) + "]";
}

UnitGraph graph(std::uint64_t n) { return build_unit_graph(make_ring(n)); }

Outcome golden_z5() {
    Outcome o;
    const auto run = cli({"code", "5", "--q", "2", "--format", "json"});
    o.require(run.code == 0, "exit code " + std::to_string(run.code));
    const auto j = nlohmann::json::parse(run.out);
    const auto got = bracket(j["n"], j["k"], j["d"]);
    o.require(got == "[8, 4, 3]", "code " + got);
    o.require(j["mds"] == false, "mds flagged");
    const auto h = incidence_matrix(graph(5));
    o.require(h.rows() == 5 && h.cols() == 8, "matrix shape");
    std::vector<std::size_t> weights;
    for (std::size_t r = 0; r < h.rows(); ++r) weights.push_back(h.row_weight(r));
    o.require(weights == std::vector<std::size_t>{4, 3, 3, 3, 3}, "row weights");
    o.detail = o.pass ? got + "_2 mds=false, H 5x8 rows (4,3,3,3,3)" : o.detail;
    return o;
}

Outcome golden_z6() {
    Outcome o;
    const auto run = cli({"code", "6", "--q", "2", "--format", "json"});
    o.require(run.code == 0, "exit code " + std::to_string(run.code));
    const auto j = nlohmann::json::parse(run.out);
    const std::uint64_t n = j["n"], k = j["k"], d = j["d"];
    o.require(bracket(n, k, d) == "[6, 5, 2]", "code " + bracket(n, k, d));
    o.require(j["mds"] == true && d == n - k + 1, "not MDS");
    if (o.pass) o.detail = "[6, 5, 2]_2 mds=true";
    return o;
}

Outcome prime_family() {
    Outcome o;
    for (std::uint64_t p : {3, 5, 7, 11, 13, 17, 19, 23}) {
        const auto g = graph(p);
        auto c = code_from_incidence(g, 2);
        const auto d = minimum_distance(c);
        const auto lambda = edge_connectivity(g).lambda;
        const auto got = bracket(g.size(), c.dimension(), d);
        const auto want = bracket((p - 1) * (p - 1) / 2, p - 1, p - 2);
        o.require(got == want, "p=" + std::to_string(p) + ": " + got + " != " + want);
        o.require(lambda == p - 2, "p=" + std::to_string(p) + ": lambda " + std::to_string(lambda));
    }
    if (o.pass) o.detail = "8 primes, largest [242, 22, 21]_2";
    return o;
}

Outcome twice_prime_family() {
    Outcome o;
    for (std::uint64_t p : {3, 5, 7, 11, 13}) {
        const auto g = graph(2 * p);
        auto c = code_from_incidence(g, 2);
        const auto d = minimum_distance(c);
        const auto got = bracket(g.size(), c.dimension(), d);
        const auto want = bracket(p * (p - 1), 2 * p - 1, p - 1);
        o.require(got == want, "p=" + std::to_string(p) + ": " + got + " != " + want);
        const auto degrees = degree_profile(g);
        o.require(std::all_of(degrees.begin(), degrees.end(), [&](auto x) { return x == p - 1; }),
                  "n=" + std::to_string(2 * p) + " not (p-1)-regular");
        o.require(check_regularity(g).pass, "n=" + std::to_string(2 * p) + " regularity");
        o.require(bipartition(g).has_value(), "n=" + std::to_string(2 * p) + " not bipartite");
    }
    if (o.pass) o.detail = "5 moduli, largest [156, 25, 12]_2";
    return o;
}

Outcome regularity_dichotomy() {
    Outcome o;
    for (std::uint64_t n = 2; n <= 50; ++n) {
        const auto v = check_regularity(graph(n));
        o.require(v.pass, "n=" + std::to_string(n) + " has " + std::to_string(v.offending.size()) + " offending vertices");
    }
    if (o.pass) o.detail = "n = 2..50";
    return o;
}

Outcome lambda_bridge() {
    Outcome o;
    std::size_t covered = 0;
    for (std::uint64_t n = 3; n <= 30; ++n) {
        const auto g = graph(n);
        const auto comps = connected_components(g);
        const auto free_dims = g.order() - comps.count;
        if (comps.count != 1 || free_dims > 24) continue;
        auto c = code_from_incidence(g, 2);
        const auto d = minimum_distance(c);
        const auto lambda = edge_connectivity(g).lambda;
        o.require(d == lambda, "n=" + std::to_string(n) + ": d=" + std::to_string(d) + " lambda=" + std::to_string(lambda));
        o.require(c.dimension() == free_dims, "n=" + std::to_string(n) + ": dimension " + std::to_string(c.dimension()));
        ++covered;
    }
    o.require(covered > 0, "no modulus covered");
    if (o.pass) o.detail = std::to_string(covered) + " moduli (n = 3..25)";
    return o;
}

Outcome odd_prime_z6() {
    Outcome o;
    auto c = code_from_incidence(graph(6), 3);
    o.require(c.dimension() == 5, "dimension " + std::to_string(c.dimension()));
    o.require(*c.codeword_count() == 243, "codeword count");
    const auto naive = minimum_distance_naive(c);
    const auto gray = minimum_distance(c);
    o.require(naive == 2 && gray == 2, "d naive=" + std::to_string(naive) + " gray=" + std::to_string(gray));
    if (o.pass) o.detail = "[6, 5, 2]_3 over 3^5 = 243 codewords";
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    std::size_t compared = 0;
    for (unsigned q : {2U, 3U}) {
        for (std::uint64_t n = 2; n <= 14; ++n) {
            auto c = code_from_incidence(graph(n), q);
            const auto count = c.codeword_count();
            if (!count || *count > naive_limit) continue;
            const auto gray = minimum_distance(c);
            const auto naive = minimum_distance_naive(c);
            o.require(gray == naive, "n=" + std::to_string(n) + " q=" + std::to_string(q) + ": " + std::to_string(gray) +
                                         " vs " + std::to_string(naive));
            ++compared;
        }
    }
    if (o.pass) o.detail = std::to_string(compared) + " (n, q) instances";
    return o;
}

Outcome automorphism() {
    Outcome o;
    std::mt19937_64 rng(0x756e6974);
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = std::uniform_int_distribution<std::uint64_t>(2, 50)(rng);
        const auto g = graph(n);
        const auto units = g.ring().units();
        const auto u = units[std::uniform_int_distribution<std::size_t>(0, units.size() - 1)(rng)];
        std::vector<Edge> mapped;
        for (const auto& e : g.edges()) {
            const auto a = u * e.u % n;
            const auto b = u * e.v % n;
            mapped.push_back({std::min(a, b), std::max(a, b)});
        }
        std::sort(mapped.begin(), mapped.end());
        o.require(std::equal(mapped.begin(), mapped.end(), g.edges().begin(), g.edges().end()),
                  "n=" + std::to_string(n) + " u=" + std::to_string(u));
    }
    if (o.pass) o.detail = "200 random (n, u) pairs";
    return o;
}

Outcome determinism() {
    Outcome o;
    const auto first = cli({"verify", "3..23", "--format", "json"});
    const auto second = cli({"verify", "3..23", "--format", "json"});
    o.require(first.code == 0 && second.code == 0, "nonzero exit");
    o.require(!first.out.empty() && first.out == second.out, "outputs differ");
    if (o.pass) o.detail = std::to_string(first.out.size()) + " identical bytes";
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"AC1", "Z_5 golden case", 1.0, golden_z5},
        {"AC2", "Z_6 golden case", 1.0, golden_z6},
        {"AC3", "odd-prime family sweep", 300.0, prime_family},
        {"AC4", "twice-odd-prime family sweep", 300.0, twice_prime_family},
        {"AC5", "degree dichotomy n in [2, 50]", 1.0, regularity_dichotomy},
        {"AC6", "minimum distance equals edge-connectivity", 0.0, lambda_bridge},
        {"AC7", "C_3 of G(Z_6)", 1.0, odd_prime_z6},
        {"AC8", "Gray-code vs naive minimum distance", 0.0, oracle_equivalence},
        {"AC9", "unit multiplication automorphism", 0.0, automorphism},
        {"AC10", "byte-identical verify output", 0.0, determinism},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = Clock::now();
        Outcome outcome;
        try {
            outcome = c.check();
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
        if (outcome.pass && c.time_limit_s > 0 && seconds >= c.time_limit_s) {
            outcome.pass = false;
            outcome.detail = "took " + std::to_string(seconds) + " s, limit " + std::to_string(c.time_limit_s) + " s";
        }
        failures += outcome.pass ? 0 : 1;
        std::printf("[%s] %-5s %-44s %8.3f s  %s\n", outcome.pass ? "PASS" : "FAIL", c.id, c.title, seconds,
                    outcome.detail.c_str());
    }
    std::printf("%zu criteria, %d failed\n", criteria.size(), failures);
    return failures == 0 ? 0 : 1;
}
