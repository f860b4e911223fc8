#pragma once

#include "unitcode/linear_code.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace unitcode {

/// Closed-form [length, dimension, distance] for C_q(H(G(Z_n))): known only for
/// q = 2 with n an odd prime or twice an odd prime.
std::optional<CodeParams> predict_params(std::uint64_t n, unsigned q);

enum class Family { none, odd_prime, twice_odd_prime };

Family classify(std::uint64_t n);
const char* to_string(Family f);

enum class ClaimStatus { pass, fail, skipped };

const char* to_string(ClaimStatus s);

/// One checked statement. `pass` iff computed is present and equals predicted.
struct Claim {
    std::string id;
    std::vector<std::int64_t> predicted;
    std::optional<std::vector<std::int64_t>> computed;
    ClaimStatus status = ClaimStatus::skipped;
    std::string note;  // reason when skipped
};

/// Exact facts about G(Z_n) and its codes, recorded whether or not a theorem applies.
struct ComputedFacts {
    std::uint64_t phi = 0;
    std::uint64_t vertices = 0;
    std::uint64_t edges = 0;
    std::uint64_t components = 0;
    bool bipartite = false;
    std::uint64_t lambda = 0;
    std::uint64_t dimension = 0;
    std::optional<std::uint64_t> distance;
    std::optional<bool> mds;
    unsigned odd_q = 3;
    std::optional<std::uint64_t> odd_dimension;  // only for bipartite graphs
    std::optional<std::uint64_t> odd_distance;   // only for applicable rows within budget
};

struct TheoremReport {
    std::uint64_t modulus = 0;
    Family family = Family::none;
    bool applicable = false;
    std::vector<Claim> claims;
    ComputedFacts facts;
    std::optional<std::string> error;  // set when the row could not be computed at all

    bool has_failure() const;
    bool has_skipped() const;
};

struct VerifyOptions {
    EnumerationOptions enumeration;
    /// Odd characteristic for the bipartite dimension/distance claims.
    unsigned odd_q = 3;
};

/// Claim ids, in the order they appear in a report.
namespace claim_id {
inline constexpr const char* regularity = "REGULARITY";
inline constexpr const char* connected = "CONNECTED";
inline constexpr const char* edge_count_p = "EDGE_COUNT_P";
inline constexpr const char* counts_2p = "COUNTS_2P";
inline constexpr const char* degree_2p = "DEGREE_2P";
inline constexpr const char* bipartite_2p = "BIPARTITE_2P";
inline constexpr const char* edge_conn_p = "EDGE_CONN_P";
inline constexpr const char* edge_conn_2p = "EDGE_CONN_2P";
inline constexpr const char* code_params_p = "CODE_PARAMS_P";
inline constexpr const char* code_params_2p = "CODE_PARAMS_2P";
inline constexpr const char* distance_is_lambda = "DISTANCE_EQ_LAMBDA";
inline constexpr const char* odd_q_dimension = "ODD_Q_DIMENSION";
inline constexpr const char* odd_q_distance = "ODD_Q_DISTANCE";
}  // namespace claim_id

/// Builds G(Z_n) and its codes and checks every closed-form claim that covers n.
/// Throws std::invalid_argument for n < 2. A binary distance that exceeds the
/// budget leaves its claims skipped rather than failing the report.
TheoremReport verify_theorems(std::uint64_t n, const VerifyOptions& options = {});

struct SweepSummary {
    std::size_t rows = 0;
    std::size_t applicable = 0;
    std::size_t passed = 0;   // applicable rows with every claim passing
    std::size_t failed = 0;   // applicable rows with at least one failing claim, or an error
    std::size_t skipped = 0;  // applicable rows with no failure but a skipped claim

    bool all_pass() const noexcept { return failed == 0; }
};

struct SweepResult {
    std::vector<TheoremReport> rows;
    SweepSummary summary;
};

using RowCallback = std::function<void(const TheoremReport&)>;

/// One report per n in [lo, hi], ascending. Errors are recorded in the row.
/// `on_row`, when set, sees each report as soon as it is complete.
SweepResult sweep(std::uint64_t lo, std::uint64_t hi, const VerifyOptions& options = {},
                  const RowCallback& on_row = {});

nlohmann::ordered_json to_json(const TheoremReport& report);

/// Fixed-width table with one line per report, failing claims spelled out
/// underneath, and a summary line.
std::string to_text_table(const SweepResult& result);

}  // namespace unitcode
