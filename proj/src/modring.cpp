#include "unitcode/modring.hpp"

#include <stdexcept>
#include <string>

namespace unitcode {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    if (a == 0 && b == 0) {
        throw std::invalid_argument("gcd(0, 0) is undefined");
    }
    while (b != 0) {
        const auto r = a % b;
        a = b;
        b = r;
    }
    return a;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

ResidueRing::ResidueRing(std::uint64_t modulus) : modulus_(modulus) {
    if (modulus < 2) {
        throw std::invalid_argument("modulus must be at least 2, got " + std::to_string(modulus));
    }
    for (std::uint64_t a = 1; a < modulus; ++a) {
        if (gcd(a, modulus) == 1) units_.push_back(a);
    }
}

bool ResidueRing::is_unit(std::uint64_t a) const {
    if (a >= modulus_) {
        throw std::invalid_argument("residue " + std::to_string(a) + " out of range for Z_" +
                                    std::to_string(modulus_));
    }
    return gcd(a, modulus_) == 1;
}

ResidueRing make_ring(std::uint64_t n) { return ResidueRing(n); }

}  // namespace unitcode
