#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace unitcode {

/// Greatest common divisor. Throws std::invalid_argument when both inputs are zero.
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

/// Trial-division primality test.
bool is_prime(std::uint64_t n);

/// The ring Z_n together with its unit group U(Z_n).
///
/// The unit list is materialized once for reporting; membership queries go
/// through gcd and never search the list.
class ResidueRing {
public:
    /// Throws std::invalid_argument for modulus < 2.
    explicit ResidueRing(std::uint64_t modulus);

    std::uint64_t modulus() const noexcept { return modulus_; }
    std::span<const std::uint64_t> units() const noexcept { return units_; }
    std::uint64_t phi() const noexcept { return units_.size(); }

    /// Throws std::invalid_argument unless 0 <= a < modulus.
    bool is_unit(std::uint64_t a) const;

    bool operator==(const ResidueRing&) const = default;

private:
    std::uint64_t modulus_;
    std::vector<std::uint64_t> units_;
};

ResidueRing make_ring(std::uint64_t n);

inline bool is_unit(std::uint64_t a, const ResidueRing& ring) { return ring.is_unit(a); }

}  // namespace unitcode
