#include "unitcode/gf_matrix.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <utility>

namespace unitcode {

namespace {

void require_odd_prime_char(unsigned q) {
    if (q < 3 || q > 255 || !is_prime(q)) {
        throw std::invalid_argument("characteristic must be an odd prime below 256, got " + std::to_string(q));
    }
}

unsigned inverse_mod(unsigned a, unsigned q) {
    // Fermat: a^(q-2) mod q
    unsigned result = 1;
    unsigned base = a % q;
    for (unsigned e = q - 2; e > 0; e >>= 1) {
        if (e & 1U) result = result * base % q;
        base = base * base % q;
    }
    return result;
}

}  // namespace

// ---------------------------------------------------------------- BinMatrix

BinMatrix::BinMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0) {}

bool BinMatrix::get(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("BinMatrix index out of range");
    return (data_[r * stride_ + c / word_bits] >> (c % word_bits)) & 1U;
}

void BinMatrix::set(std::size_t r, std::size_t c, bool value) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("BinMatrix index out of range");
    const Word mask = Word{1} << (c % word_bits);
    auto& w = data_[r * stride_ + c / word_bits];
    w = value ? (w | mask) : (w & ~mask);
}

std::size_t BinMatrix::row_weight(std::size_t r) const {
    std::size_t weight = 0;
    for (auto w : row(r)) weight += static_cast<std::size_t>(std::popcount(w));
    return weight;
}

std::size_t BinMatrix::col_weight(std::size_t c) const {
    std::size_t weight = 0;
    for (std::size_t r = 0; r < rows_; ++r) weight += get(r, c) ? 1 : 0;
    return weight;
}

void BinMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    auto ra = row(a);
    auto rb = row(b);
    for (std::size_t i = 0; i < stride_; ++i) std::swap(ra[i], rb[i]);
}

void BinMatrix::add_row(std::size_t dst, std::size_t src) {
    auto d = row(dst);
    const auto s = row(src);
    for (std::size_t i = 0; i < stride_; ++i) d[i] ^= s[i];
}

BinMatrix BinMatrix::identity(std::size_t n) {
    BinMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

// -------------------------------------------------------------- PrimeMatrix

PrimeMatrix::PrimeMatrix(std::size_t rows, std::size_t cols, unsigned characteristic)
    : rows_(rows), cols_(cols), q_(characteristic), data_(rows * cols, 0) {
    require_odd_prime_char(characteristic);
}

std::uint8_t PrimeMatrix::get(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("PrimeMatrix index out of range");
    return data_[r * cols_ + c];
}

void PrimeMatrix::set(std::size_t r, std::size_t c, unsigned value) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("PrimeMatrix index out of range");
    data_[r * cols_ + c] = static_cast<std::uint8_t>(value % q_);
}

std::size_t PrimeMatrix::row_weight(std::size_t r) const {
    std::size_t weight = 0;
    for (auto x : row(r)) weight += x != 0 ? 1 : 0;
    return weight;
}

void PrimeMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    auto ra = row(a);
    auto rb = row(b);
    for (std::size_t i = 0; i < cols_; ++i) std::swap(ra[i], rb[i]);
}

void PrimeMatrix::add_row(std::size_t dst, std::size_t src, unsigned factor) {
    factor %= q_;
    if (factor == 0) return;
    auto d = row(dst);
    const auto s = row(src);
    for (std::size_t i = 0; i < cols_; ++i) d[i] = static_cast<std::uint8_t>((d[i] + factor * s[i]) % q_);
}

void PrimeMatrix::scale_row(std::size_t r, unsigned factor) {
    for (auto& x : row(r)) x = static_cast<std::uint8_t>(x * factor % q_);
}

// ----------------------------------------------------------------- builders

BinMatrix incidence_matrix(const UnitGraph& g) {
    BinMatrix h(g.order(), g.size());
    const auto edges = g.edges();
    for (std::size_t j = 0; j < edges.size(); ++j) {
        h.set(edges[j].u, j, true);
        h.set(edges[j].v, j, true);
    }
    return h;
}

PrimeMatrix lift_to_prime(const BinMatrix& m, unsigned q) {
    PrimeMatrix lifted(m.rows(), m.cols(), q);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (m.get(r, c)) lifted.set(r, c, 1);
        }
    }
    return lifted;
}

// -------------------------------------------------------------- elimination

namespace {

// In-place reduction to RREF; returns the rank. Rows [0, rank) are the basis.
std::size_t reduce(BinMatrix& m) {
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
        const auto word = c / word_bits;
        const Word mask = Word{1} << (c % word_bits);
        std::size_t r = pivot_row;
        while (r < m.rows() && (m.row(r)[word] & mask) == 0) ++r;
        if (r == m.rows()) continue;
        m.swap_rows(pivot_row, r);
        for (std::size_t other = 0; other < m.rows(); ++other) {
            if (other != pivot_row && (m.row(other)[word] & mask) != 0) m.add_row(other, pivot_row);
        }
        ++pivot_row;
    }
    return pivot_row;
}

std::size_t reduce(PrimeMatrix& m) {
    const auto q = m.characteristic();
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
        std::size_t r = pivot_row;
        while (r < m.rows() && m.get(r, c) == 0) ++r;
        if (r == m.rows()) continue;
        m.swap_rows(pivot_row, r);
        m.scale_row(pivot_row, inverse_mod(m.get(pivot_row, c), q));
        for (std::size_t other = 0; other < m.rows(); ++other) {
            const unsigned entry = other == pivot_row ? 0 : m.get(other, c);
            if (entry != 0) m.add_row(other, pivot_row, q - entry);
        }
        ++pivot_row;
    }
    return pivot_row;
}

template <typename Matrix>
Matrix truncate_rows(const Matrix& m, std::size_t keep);

template <>
BinMatrix truncate_rows(const BinMatrix& m, std::size_t keep) {
    BinMatrix out(keep, m.cols());
    for (std::size_t r = 0; r < keep; ++r) {
        const auto src = m.row(r);
        std::copy(src.begin(), src.end(), out.row(r).begin());
    }
    return out;
}

template <>
PrimeMatrix truncate_rows(const PrimeMatrix& m, std::size_t keep) {
    PrimeMatrix out(keep, m.cols(), m.characteristic());
    for (std::size_t r = 0; r < keep; ++r) {
        const auto src = m.row(r);
        std::copy(src.begin(), src.end(), out.row(r).begin());
    }
    return out;
}

}  // namespace

std::size_t rank(const BinMatrix& m) {
    auto work = m;
    return reduce(work);
}

std::size_t rank(const PrimeMatrix& m) {
    auto work = m;
    return reduce(work);
}

BinMatrix row_space_basis(const BinMatrix& m) {
    auto work = m;
    return truncate_rows(work, reduce(work));
}

PrimeMatrix row_space_basis(const PrimeMatrix& m) {
    auto work = m;
    return truncate_rows(work, reduce(work));
}

// ------------------------------------------------------------------- output

std::string to_text(const BinMatrix& m) {
    std::string out;
    out.reserve(m.rows() * (m.cols() + 1));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m.get(r, c) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

std::string to_text(const PrimeMatrix& m) {
    std::string out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (m.characteristic() > 10 && c > 0) out.push_back(' ');
            out += std::to_string(m.get(r, c));
        }
        out.push_back('\n');
    }
    return out;
}

nlohmann::ordered_json to_json(const BinMatrix& m) {
    nlohmann::ordered_json data = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto row = nlohmann::ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.get(r, c) ? 1 : 0);
        data.push_back(std::move(row));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"char", 2}, {"data", std::move(data)}};
}

nlohmann::ordered_json to_json(const PrimeMatrix& m) {
    nlohmann::ordered_json data = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto row = nlohmann::ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.get(r, c));
        data.push_back(std::move(row));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"char", m.characteristic()}, {"data", std::move(data)}};
}

}  // namespace unitcode
