#pragma once

#include "cfs/random.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cfs {

// Packed GF(2) vector. Bit i lives in word i/64 at position i%64; bits past
// size() are kept zero so word-wise compare and popcount are exact.
class BitVector {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    BitVector() = default;
    explicit BitVector(std::size_t n) : size_(n), words_(word_count(n), 0) {}

    /// From a '0'/'1' string, index 0 first.
    static BitVector from_bits(std::string_view bits);
    /// The low `width` bits of value, most significant first.
    static BitVector from_uint(std::uint64_t value, std::size_t width);
    /// Bits of the bytes, most significant bit of each byte first.
    static BitVector from_bytes(std::span<const std::uint8_t> bytes, std::size_t n);
    static BitVector random(std::size_t n, RandomSource& rng);

    std::size_t size() const { return size_; }
    bool get(std::size_t i) const { return (words_[i / word_bits] >> (i % word_bits)) & 1u; }
    void set(std::size_t i, bool v = true);
    void flip(std::size_t i) { words_[i / word_bits] ^= Word{1} << (i % word_bits); }

    std::size_t weight() const;
    bool is_zero() const;
    std::vector<std::size_t> support() const;

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend bool operator==(const BitVector&, const BitVector&) = default;
    /// Lexicographic on packed words; only meaningful between equal sizes.
    friend bool operator<(const BitVector& a, const BitVector& b) { return a.words_ < b.words_; }

    /// Parity of popcount(this & other).
    bool dot(const BitVector& other) const;

    /// Bits [offset, offset+width) read most significant first.
    std::uint64_t read_uint(std::size_t offset, std::size_t width) const;

    /// Keep the first n bits, zero-extend if n is larger.
    BitVector resized(std::size_t n) const;
    BitVector concat(const BitVector& tail) const;

    /// Packs MSB-first into ceil(n/8) bytes, trailing pad bits zero.
    std::vector<std::uint8_t> to_bytes() const;
    std::string to_hex() const;
    /// Inverse of to_hex for a known bit length; nonzero pad bits are rejected.
    static BitVector from_hex(std::string_view hex, std::size_t n);
    std::string to_bit_string() const;

    std::span<const Word> words() const { return words_; }
    std::span<Word> words() { return words_; }

    static std::size_t word_count(std::size_t n) { return (n + word_bits - 1) / word_bits; }

private:
    std::size_t size_ = 0;
    std::vector<Word> words_;
};

std::string bytes_to_hex(std::span<const std::uint8_t> bytes);
/// Throws FormatError on odd length or non-hex characters.
std::vector<std::uint8_t> hex_to_bytes(std::string_view hex);

/// Index-array permutation. As a matrix P it acts by (H*P) column j =
/// H column map[j], and on row vectors by (e*P)_j = e_map[j].
class Permutation {
public:
    Permutation() = default;
    /// Throws std::invalid_argument unless map is a bijection on [0, n).
    explicit Permutation(std::vector<std::size_t> map);

    static Permutation identity(std::size_t n);
    static Permutation random(std::size_t n, RandomSource& rng);

    std::size_t size() const { return map_.size(); }
    std::size_t operator[](std::size_t j) const { return map_[j]; }
    std::span<const std::size_t> mapping() const { return map_; }

    Permutation inverse() const;
    /// e*P for a row vector e.
    BitVector apply(const BitVector& e) const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::size_t> map_;
};

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);
    static BitMatrix random(std::size_t rows, std::size_t cols, RandomSource& rng);
    static BitMatrix from_rows(const std::vector<BitVector>& rows);
    static BitMatrix from_columns(const std::vector<BitVector>& cols);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }

    const BitVector& row(std::size_t r) const { return rows_[r]; }
    BitVector& row(std::size_t r) { return rows_[r]; }
    BitVector column(std::size_t c) const;

    BitMatrix transpose() const;
    /// H*P: column j of the result is column P[j] of this.
    BitMatrix permute_columns(const Permutation& p) const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

/// H * v^T. Throws DimensionError unless cols(H) = len(v).
BitVector mat_vec(const BitMatrix& h, const BitVector& v);
/// Throws DimensionError unless cols(a) = rows(b).
BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);

std::size_t rank(BitMatrix a);
/// Basis of {x : A x^T = 0}.
std::vector<BitVector> kernel_basis(const BitMatrix& a);
/// Some x with A x^T = b, or nullopt when b is outside the column space.
std::optional<BitVector> gaussian_solve(const BitMatrix& a, const BitVector& b);
std::optional<BitMatrix> inverse(const BitMatrix& a);

struct InvertiblePair {
    BitMatrix matrix;
    BitMatrix inverse;
};
/// Uniform invertible r x r matrix by rejection sampling, with its inverse.
InvertiblePair rand_invertible(std::size_t r, RandomSource& rng);

} // namespace cfs
