#pragma once

#include "unitcode/unit_graph.hpp"

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace unitcode {

using Word = std::uint64_t;
inline constexpr std::size_t word_bits = 64;

inline constexpr std::size_t words_for(std::size_t bits) { return (bits + word_bits - 1) / word_bits; }

/// Dense matrix over GF(2) with each row packed into 64-bit words.
/// Bits past `cols()` in the last word of a row are always zero.
class BinMatrix {
public:
    BinMatrix() = default;
    BinMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t words_per_row() const noexcept { return stride_; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value);

    std::span<const Word> row(std::size_t r) const { return {data_.data() + r * stride_, stride_}; }
    std::span<Word> row(std::size_t r) { return {data_.data() + r * stride_, stride_}; }

    std::size_t row_weight(std::size_t r) const;
    std::size_t col_weight(std::size_t c) const;

    void swap_rows(std::size_t a, std::size_t b);
    /// row[dst] ^= row[src]
    void add_row(std::size_t dst, std::size_t src);

    static BinMatrix identity(std::size_t n);

    bool operator==(const BinMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<Word> data_;
};

/// Dense matrix over GF(q) for an odd prime q < 256, one byte per entry.
class PrimeMatrix {
public:
    PrimeMatrix() = default;
    /// Throws std::invalid_argument unless q is an odd prime below 256.
    PrimeMatrix(std::size_t rows, std::size_t cols, unsigned characteristic);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    unsigned characteristic() const noexcept { return q_; }

    std::uint8_t get(std::size_t r, std::size_t c) const;
    /// Stores value mod q.
    void set(std::size_t r, std::size_t c, unsigned value);

    std::span<const std::uint8_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<std::uint8_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

    std::size_t row_weight(std::size_t r) const;

    void swap_rows(std::size_t a, std::size_t b);
    /// row[dst] += factor * row[src]  (mod q)
    void add_row(std::size_t dst, std::size_t src, unsigned factor);
    /// row[r] *= factor  (mod q)
    void scale_row(std::size_t r, unsigned factor);

    bool operator==(const PrimeMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    unsigned q_ = 3;
    std::vector<std::uint8_t> data_;
};

/// |V| x |E| incidence matrix; column j holds the j-th canonical edge.
BinMatrix incidence_matrix(const UnitGraph& g);

/// Reinterprets 0/1 entries as residues mod q.
/// Throws std::invalid_argument unless q is an odd prime below 256.
PrimeMatrix lift_to_prime(const BinMatrix& m, unsigned q);

std::size_t rank(const BinMatrix& m);
std::size_t rank(const PrimeMatrix& m);

/// Reduced row echelon form with the zero rows dropped. Pivots are chosen
/// column by column, taking the first row with a nonzero entry.
BinMatrix row_space_basis(const BinMatrix& m);
PrimeMatrix row_space_basis(const PrimeMatrix& m);

/// One line per row, one digit per entry.
std::string to_text(const BinMatrix& m);
std::string to_text(const PrimeMatrix& m);

/// {"rows", "cols", "char", "data": [[...], ...]}
nlohmann::ordered_json to_json(const BinMatrix& m);
nlohmann::ordered_json to_json(const PrimeMatrix& m);

}  // namespace unitcode
