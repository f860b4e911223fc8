#include "unitcode/linear_code.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>
#include <string>
#include <thread>

namespace unitcode {

namespace {

std::optional<std::uint64_t> checked_power(std::uint64_t base, std::size_t exponent) {
    std::uint64_t result = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
        if (result > std::numeric_limits<std::uint64_t>::max() / base) return std::nullopt;
        result *= base;
    }
    return result;
}

std::string describe_size(unsigned q, std::size_t k, std::optional<std::uint64_t> count) {
    std::string s = std::to_string(q) + "^" + std::to_string(k);
    s += count ? " = " + std::to_string(*count) : std::string(" (exceeds 2^64)");
    return s;
}

std::uint64_t require_within(const LinearCode& code, std::uint64_t budget, const char* what) {
    const auto count = code.codeword_count();
    if (!count || *count > budget) {
        throw ResourceLimitError(count, budget,
                                 std::string(what) + ": enumeration of " +
                                     describe_size(code.characteristic(), code.dimension(), count) +
                                     " codewords exceeds budget " + std::to_string(budget));
    }
    return *count;
}

// Gray-code walk over message space. Position s of the walk holds the message
// g_i = (b_i - b_{i+1}) mod q, where b is s written in base q. Moving from
// s - 1 to s raises exactly one g_t by 1, t being the number of trailing
// (q - 1) digits of s - 1, so each step adds a single generator row.

class BinaryWalker {
public:
    BinaryWalker(const BinMatrix& generator, std::uint64_t start)
        : gen_(generator), word_(generator.words_per_row(), 0), index_(start) {
        const auto gray = start ^ (start >> 1);
        for (std::size_t i = 0; i < gen_.rows(); ++i) {
            if ((gray >> i) & 1U) xor_row(i);
        }
        weight_ = recount();
    }

    std::size_t weight() const noexcept { return weight_; }
    std::span<const Word> word() const noexcept { return word_; }

    void advance() {
        ++index_;
        const auto t = static_cast<std::size_t>(std::countr_zero(index_));
        const auto r = gen_.row(t);
        std::size_t weight = 0;
        for (std::size_t i = 0; i < word_.size(); ++i) {
            word_[i] ^= r[i];
            weight += static_cast<std::size_t>(std::popcount(word_[i]));
        }
        weight_ = weight;
    }

private:
    void xor_row(std::size_t i) {
        const auto r = gen_.row(i);
        for (std::size_t w = 0; w < word_.size(); ++w) word_[w] ^= r[w];
    }

    std::size_t recount() const {
        std::size_t weight = 0;
        for (auto w : word_) weight += static_cast<std::size_t>(std::popcount(w));
        return weight;
    }

    const BinMatrix& gen_;
    std::vector<Word> word_;
    std::uint64_t index_;
    std::size_t weight_ = 0;
};

class PrimeWalker {
public:
    PrimeWalker(const PrimeMatrix& generator, std::uint64_t start)
        : gen_(generator), q_(generator.characteristic()), digits_(generator.rows() + 1, 0),
          word_(generator.cols(), 0) {
        for (std::size_t i = 0; i < gen_.rows(); ++i) {
            digits_[i] = static_cast<unsigned>(start % q_);
            start /= q_;
        }
        for (std::size_t i = 0; i < gen_.rows(); ++i) {
            const unsigned coeff = (digits_[i] + q_ - digits_[i + 1]) % q_;
            const auto r = gen_.row(i);
            for (std::size_t j = 0; j < word_.size(); ++j) {
                word_[j] = static_cast<std::uint8_t>((word_[j] + coeff * r[j]) % q_);
            }
        }
        weight_ = static_cast<std::size_t>(std::count_if(word_.begin(), word_.end(), [](auto x) { return x != 0; }));
    }

    std::size_t weight() const noexcept { return weight_; }
    std::span<const std::uint8_t> word() const noexcept { return word_; }

    void advance() {
        std::size_t t = 0;
        while (digits_[t] == q_ - 1) digits_[t++] = 0;
        ++digits_[t];
        const auto r = gen_.row(t);
        std::size_t weight = 0;
        for (std::size_t j = 0; j < word_.size(); ++j) {
            unsigned x = word_[j] + r[j];
            if (x >= q_) x -= q_;
            word_[j] = static_cast<std::uint8_t>(x);
            weight += x != 0 ? 1 : 0;
        }
        weight_ = weight;
    }

private:
    const PrimeMatrix& gen_;
    unsigned q_;
    std::vector<unsigned> digits_;  // one spare slot so the top digit's successor reads 0
    std::vector<std::uint8_t> word_;
    std::size_t weight_ = 0;
};

template <typename Walker, typename Matrix, typename Visit>
void walk(const Matrix& generator, std::uint64_t begin, std::uint64_t end, Visit&& visit) {
    if (begin >= end) return;
    Walker walker(generator, begin);
    visit(walker.weight());
    for (auto s = begin + 1; s < end; ++s) {
        walker.advance();
        visit(walker.weight());
    }
}

template <typename Visit>
void walk_code(const LinearCode& code, std::uint64_t begin, std::uint64_t end, Visit&& visit) {
    if (code.is_binary()) {
        walk<BinaryWalker>(code.binary_generator(), begin, end, visit);
    } else {
        walk<PrimeWalker>(code.prime_generator(), begin, end, visit);
    }
}

// Splits [0, total) into contiguous segments, one per worker, and returns the
// per-segment histograms merged in segment order.
std::vector<std::uint64_t> parallel_histogram(const LinearCode& code, std::uint64_t total, unsigned threads) {
    constexpr std::uint64_t min_segment = std::uint64_t{1} << 16;
    const auto workers = static_cast<unsigned>(
        std::clamp<std::uint64_t>(total / min_segment, 1, std::max(1U, worker_count(threads))));

    std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(code.length() + 1, 0));
    auto run = [&](unsigned w) {
        const auto begin = total * w / workers;
        const auto end = total * (w + 1) / workers;
        auto& hist = partial[w];
        walk_code(code, begin, end, [&](std::size_t weight) { ++hist[weight]; });
    };

    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }

    auto merged = std::move(partial[0]);
    for (unsigned w = 1; w < workers; ++w) {
        for (std::size_t i = 0; i < merged.size(); ++i) merged[i] += partial[w][i];
    }
    return merged;
}

std::size_t first_positive_weight(const std::vector<std::uint64_t>& hist) {
    for (std::size_t i = 1; i < hist.size(); ++i) {
        if (hist[i] > 0) return i;
    }
    throw std::logic_error("weight distribution has no nonzero codeword");
}

}  // namespace

unsigned worker_count(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("UNITCODE_THREADS")) {
        char* end = nullptr;
        const auto value = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && value > 0) return static_cast<unsigned>(std::min<unsigned long>(value, 1024));
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

// --------------------------------------------------------------- LinearCode

LinearCode::LinearCode(const BinMatrix& spanning) : generator_(row_space_basis(spanning)) {}

LinearCode::LinearCode(const PrimeMatrix& spanning) : generator_(row_space_basis(spanning)) {}

std::size_t LinearCode::length() const noexcept {
    return std::visit([](const auto& g) { return g.cols(); }, generator_);
}

std::size_t LinearCode::dimension() const noexcept {
    return std::visit([](const auto& g) { return g.rows(); }, generator_);
}

unsigned LinearCode::characteristic() const noexcept {
    return is_binary() ? 2U : prime_generator().characteristic();
}

std::optional<std::uint64_t> LinearCode::codeword_count() const noexcept {
    return checked_power(characteristic(), dimension());
}

LinearCode code_from_incidence(const UnitGraph& g, unsigned q) {
    const auto h = incidence_matrix(g);
    if (q == 2) return LinearCode(h);
    return LinearCode(lift_to_prime(h, q));
}

// ------------------------------------------------------------- enumeration

std::size_t minimum_distance(LinearCode& code, const EnumerationOptions& options) {
    if (code.min_distance_) return *code.min_distance_;
    weight_distribution(code, options);
    return *code.min_distance_;
}

const std::vector<std::uint64_t>& weight_distribution(LinearCode& code, const EnumerationOptions& options) {
    if (code.weight_distribution_) return *code.weight_distribution_;
    if (code.dimension() == 0) throw std::invalid_argument("minimum distance of a zero-dimensional code");
    const auto total = require_within(code, options.budget, "minimum_distance");
    auto hist = parallel_histogram(code, total, options.threads);
    code.min_distance_ = first_positive_weight(hist);
    code.weight_distribution_ = std::move(hist);
    return *code.weight_distribution_;
}

std::size_t minimum_distance_naive(const LinearCode& code) {
    if (code.dimension() == 0) throw std::invalid_argument("minimum distance of a zero-dimensional code");
    const auto total = require_within(code, naive_limit, "minimum_distance_naive");
    const auto q = code.characteristic();
    const auto k = code.dimension();
    const auto n = code.length();

    // Entry (i, j) of the generator as an integer, read through the public accessor.
    auto entry = [&](std::size_t i, std::size_t j) -> unsigned {
        return code.is_binary() ? (code.binary_generator().get(i, j) ? 1U : 0U) : code.prime_generator().get(i, j);
    };

    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::vector<unsigned> message(k);
    for (std::uint64_t m = 1; m < total; ++m) {
        auto rest = m;
        for (std::size_t i = 0; i < k; ++i) {
            message[i] = static_cast<unsigned>(rest % q);
            rest /= q;
        }
        std::size_t weight = 0;
        for (std::size_t j = 0; j < n; ++j) {
            unsigned sum = 0;
            for (std::size_t i = 0; i < k; ++i) sum = (sum + message[i] * entry(i, j)) % q;
            weight += sum != 0 ? 1 : 0;
        }
        best = std::min(best, weight);
    }
    return best;
}

bool is_mds(const LinearCode& code) {
    const auto& d = code.cached_min_distance();
    if (!d) throw StateError("is_mds: minimum distance has not been computed");
    return *d + code.dimension() == code.length() + 1;
}

CodeParams params(const LinearCode& code) {
    const auto& d = code.cached_min_distance();
    if (!d) throw StateError("params: minimum distance has not been computed");
    return {code.length(), code.dimension(), *d};
}

std::vector<std::uint8_t> gray_codeword(const LinearCode& code, std::uint64_t index) {
    std::vector<std::uint8_t> out(code.length());
    if (code.is_binary()) {
        const BinaryWalker walker(code.binary_generator(), index);
        const auto word = walker.word();
        for (std::size_t j = 0; j < out.size(); ++j) out[j] = (word[j / word_bits] >> (j % word_bits)) & 1U;
    } else {
        const PrimeWalker walker(code.prime_generator(), index);
        std::copy(walker.word().begin(), walker.word().end(), out.begin());
    }
    return out;
}

std::vector<std::size_t> segment_weights(const LinearCode& code, std::uint64_t begin, std::uint64_t end) {
    std::vector<std::size_t> weights;
    walk_code(code, begin, end, [&](std::size_t w) { weights.push_back(w); });
    return weights;
}

}  // namespace unitcode
