#pragma once

#include "cfs/gf2.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cfs {

using ByteString = std::vector<std::uint8_t>;
using Bytes = std::span<const std::uint8_t>;

/// Block layout of the regular-word encoding: n positions cut into w blocks
/// of l = n/w, and a state of s = w*log2(l) bits.
struct BlockLayout {
    std::size_t n = 0;
    std::size_t w = 0;
    std::size_t l = 0;
    std::size_t log_l = 0;
    std::size_t s = 0;

    /// Throws BadParameters unless w divides n and n/w is a power of two >= 2.
    static BlockLayout make(std::size_t n, std::size_t w);
};

// Parameters of the code-based hash built on an r x n matrix H. The IV is the
// all-zero s-bit state.
class HashConfig {
public:
    HashConfig(BitMatrix h, std::size_t w);

    const BitMatrix& matrix() const { return h_; }
    const BlockLayout& layout() const { return layout_; }
    std::size_t n() const { return layout_.n; }
    std::size_t w() const { return layout_.w; }
    std::size_t l() const { return layout_.l; }
    std::size_t state_bits() const { return layout_.s; }
    std::size_t digest_bits() const { return h_.rows(); }
    const BitVector& iv() const { return iv_; }
    const BitVector& column(std::size_t j) const { return columns_[j]; }

private:
    BitMatrix h_;
    BlockLayout layout_;
    BitVector iv_;
    std::vector<BitVector> columns_;
};

/// Cuts an s-bit state into w chunks of log2(l) bits, each read big-endian.
std::vector<std::size_t> split(const BitVector& x, const BlockLayout& layout);

/// Weight-w vector whose i-th block (0-indexed) has its single one at offset
/// split(x)[i], i.e. 1-indexed position (x_i + 1) + i*l.
BitVector delta_t(const BitVector& x, const BlockLayout& layout);

/// f(x): XOR over blocks i of column i*l + x_i of H. Equals H * delta_t(x)^T.
BitVector compress(const BitVector& x, const HashConfig& cfg);

/// Message bits (MSB-first per byte), a single 1, zeros, then the 64-bit
/// big-endian bit length, cut into s-bit blocks.
std::vector<BitVector> pad_message(Bytes msg, std::size_t s);

/// Chaining value truncated or zero-extended to s bits, XOR the block.
BitVector combine(const BitVector& chaining, const BitVector& block);

/// Final state L_last, i.e. the hash stopped before its last compression.
BitVector md_hash_stopped(Bytes msg, const HashConfig& cfg);
/// compress(md_hash_stopped(msg)).
BitVector md_hash(Bytes msg, const HashConfig& cfg);

/// One `msg_hex  digest_hex  stopped_state_hex` line (no newline); an empty
/// message is written as `-`.
std::string format_test_vector(Bytes msg, const HashConfig& cfg);
/// True when the line's digest and state match a fresh evaluation.
/// Throws FormatError on malformed lines.
bool check_test_vector(std::string_view line, const HashConfig& cfg);

// A map from s-bit strings into n-bit vectors of weight at most t. The weight
// bound is enforced on every evaluation.
class GammaMap {
public:
    using Fn = std::function<BitVector(const BitVector&)>;

    GammaMap(std::string id, std::size_t input_bits, std::size_t output_bits,
             std::size_t weight_bound, Fn fn);

    const std::string& id() const { return id_; }
    std::size_t input_bits() const { return input_bits_; }
    std::size_t output_bits() const { return output_bits_; }
    std::size_t weight_bound() const { return weight_bound_; }

    /// Throws DimensionError on bad lengths and GammaContractViolation when
    /// the output is heavier than the bound.
    BitVector operator()(const BitVector& v) const;

private:
    std::string id_;
    std::size_t input_bits_;
    std::size_t output_bits_;
    std::size_t weight_bound_;
    Fn fn_;
};

inline constexpr std::string_view delta_gamma_id = "delta";
inline constexpr std::string_view cw_rank_gamma_id = "cw-rank";

GammaMap delta_gamma(const BlockLayout& layout, std::size_t t);
/// Reads the input as an integer v and unranks v mod C(n, t) into a t-subset
/// via the combinatorial number system. Weight exactly t.
GammaMap cw_rank_gamma(std::size_t input_bits, std::size_t n, std::size_t t);
/// Registry lookup by id; throws BadParameters for unknown ids.
GammaMap make_gamma(std::string_view id, const BlockLayout& layout, std::size_t t);

/// Any function from byte strings to s bits.
class InnerHash {
public:
    using Fn = std::function<BitVector(Bytes)>;

    InnerHash(std::string id, std::size_t output_bits, Fn fn);

    const std::string& id() const { return id_; }
    std::size_t output_bits() const { return output_bits_; }
    BitVector operator()(Bytes msg) const;

private:
    std::string id_;
    std::size_t output_bits_;
    Fn fn_;
};

/// The code-based hash stopped before its final compression.
inline constexpr std::string_view md_stopped_hash_id = "code-md";

InnerHash md_stopped_hash(const HashConfig& cfg);
InnerHash sha256_inner_hash(std::size_t bits);
InnerHash make_inner_hash(std::string_view id, const HashConfig& cfg);

/// H * gamma(inner(msg))^T.
BitVector hbar(Bytes msg, const BitMatrix& h, const GammaMap& gamma, const InnerHash& inner);

} // namespace cfs
