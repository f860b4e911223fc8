#pragma once

#include "unitcode/gf_matrix.hpp"
#include "unitcode/unit_graph.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace unitcode {

/// Raised when an exhaustive enumeration would exceed its codeword budget.
class ResourceLimitError : public std::runtime_error {
public:
    ResourceLimitError(std::optional<std::uint64_t> required, std::uint64_t budget, const std::string& what)
        : std::runtime_error(what), required_(required), budget_(budget) {}

    /// q^k, or nullopt when it does not fit in 64 bits.
    std::optional<std::uint64_t> required() const noexcept { return required_; }
    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::optional<std::uint64_t> required_;
    std::uint64_t budget_;
};

/// Raised when a derived quantity is requested before it was computed.
class StateError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline constexpr std::uint64_t default_budget = std::uint64_t{1} << 28;
inline constexpr std::uint64_t naive_limit = std::uint64_t{1} << 20;

struct EnumerationOptions {
    std::uint64_t budget = default_budget;
    /// 0 = UNITCODE_THREADS if set and positive, else hardware concurrency.
    unsigned threads = 0;
};

/// Resolves a requested worker count as documented on EnumerationOptions::threads.
unsigned worker_count(unsigned requested);

struct CodeParams {
    std::uint64_t length = 0;
    std::uint64_t dimension = 0;
    std::uint64_t distance = 0;

    bool operator==(const CodeParams&) const = default;
};

/// A linear code over GF(q) given by a basis of its row space.
class LinearCode {
public:
    /// Any spanning matrix; it is reduced to a basis on construction.
    explicit LinearCode(const BinMatrix& spanning);
    explicit LinearCode(const PrimeMatrix& spanning);

    std::size_t length() const noexcept;
    std::size_t dimension() const noexcept;
    unsigned characteristic() const noexcept;

    bool is_binary() const noexcept { return std::holds_alternative<BinMatrix>(generator_); }
    const BinMatrix& binary_generator() const { return std::get<BinMatrix>(generator_); }
    const PrimeMatrix& prime_generator() const { return std::get<PrimeMatrix>(generator_); }

    /// q^k, or nullopt on 64-bit overflow.
    std::optional<std::uint64_t> codeword_count() const noexcept;

    const std::optional<std::size_t>& cached_min_distance() const noexcept { return min_distance_; }
    const std::optional<std::vector<std::uint64_t>>& cached_weight_distribution() const noexcept {
        return weight_distribution_;
    }

private:
    friend std::size_t minimum_distance(LinearCode&, const EnumerationOptions&);
    friend const std::vector<std::uint64_t>& weight_distribution(LinearCode&, const EnumerationOptions&);

    std::variant<BinMatrix, PrimeMatrix> generator_;
    std::optional<std::size_t> min_distance_;
    std::optional<std::vector<std::uint64_t>> weight_distribution_;
};

/// C_q(H) for the incidence matrix H of g. q must be 2 or an odd prime below 256.
LinearCode code_from_incidence(const UnitGraph& g, unsigned q);

/// Exact minimum weight by Gray-code enumeration of all q^k codewords.
/// Cached in `code`. Throws ResourceLimitError when q^k exceeds the budget and
/// std::invalid_argument for a zero-dimensional code.
std::size_t minimum_distance(LinearCode& code, const EnumerationOptions& options = {});

/// A_0..A_n, cached in `code` (also fills the minimum-distance cache).
const std::vector<std::uint64_t>& weight_distribution(LinearCode& code, const EnumerationOptions& options = {});

/// Recomputes every codeword as a full message-generator product. Limited to
/// q^k <= 2^20; beyond that throws ResourceLimitError.
std::size_t minimum_distance_naive(const LinearCode& code);

/// d == n - k + 1. Throws StateError if the minimum distance is not cached.
bool is_mds(const LinearCode& code);

CodeParams params(const LinearCode& code);

/// Codeword visited at position `index` of the Gray-code order, one entry per coordinate.
std::vector<std::uint8_t> gray_codeword(const LinearCode& code, std::uint64_t index);

/// Running weights produced by the incremental enumerator over [begin, end).
std::vector<std::size_t> segment_weights(const LinearCode& code, std::uint64_t begin, std::uint64_t end);

}  // namespace unitcode
