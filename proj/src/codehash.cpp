#include "cfs/codehash.hpp"

#include "cfs/digest.hpp"
#include "cfs/errors.hpp"
#include "cfs/metrics.hpp"

#include <bit>
#include <sstream>
#include <utility>

namespace cfs {

BlockLayout BlockLayout::make(std::size_t n, std::size_t w)
{
    if (w == 0 || n % w != 0)
        throw BadParameters("block count w = " + std::to_string(w) + " must divide n = " +
                            std::to_string(n));
    std::size_t l = n / w;
    if (l < 2 || !std::has_single_bit(l))
        throw BadParameters("block length n/w = " + std::to_string(l) +
                            " must be a power of two >= 2");
    std::size_t log_l = static_cast<std::size_t>(std::countr_zero(l));
    return {n, w, l, log_l, w * log_l};
}

HashConfig::HashConfig(BitMatrix h, std::size_t w)
    : h_(std::move(h)), layout_(BlockLayout::make(h_.cols(), w)), iv_(layout_.s)
{
    columns_.reserve(h_.cols());
    for (std::size_t j = 0; j < h_.cols(); ++j)
        columns_.push_back(h_.column(j));
}

std::vector<std::size_t> split(const BitVector& x, const BlockLayout& layout)
{
    if (x.size() != layout.s)
        throw DimensionError("state has " + std::to_string(x.size()) + " bits, expected " +
                             std::to_string(layout.s));
    std::vector<std::size_t> chunks(layout.w);
    for (std::size_t i = 0; i < layout.w; ++i)
        chunks[i] = static_cast<std::size_t>(x.read_uint(i * layout.log_l, layout.log_l));
    return chunks;
}

BitVector delta_t(const BitVector& x, const BlockLayout& layout)
{
    auto chunks = split(x, layout);
    BitVector v(layout.n);
    for (std::size_t i = 0; i < layout.w; ++i)
        v.set(chunks[i] + i * layout.l);
    return v;
}

BitVector compress(const BitVector& x, const HashConfig& cfg)
{
    count_compression();
    auto chunks = split(x, cfg.layout());
    BitVector acc(cfg.digest_bits());
    for (std::size_t i = 0; i < chunks.size(); ++i)
        acc ^= cfg.column(chunks[i] + i * cfg.l());
    return acc;
}

std::vector<BitVector> pad_message(Bytes msg, std::size_t s)
{
    if (s == 0)
        throw BadParameters("block length must be positive");
    const std::size_t msg_bits = 8 * msg.size();
    const std::size_t min_bits = msg_bits + 1 + 64;
    const std::size_t total = (min_bits + s - 1) / s * s;
    BitVector padded(total);
    for (std::size_t i = 0; i < msg_bits; ++i)
        if ((msg[i / 8] >> (7 - i % 8)) & 1u)
            padded.set(i);
    padded.set(msg_bits);
    const auto len = static_cast<std::uint64_t>(msg_bits);
    for (std::size_t i = 0; i < 64; ++i)
        if ((len >> (63 - i)) & 1u)
            padded.set(total - 64 + i);

    std::vector<BitVector> blocks;
    blocks.reserve(total / s);
    for (std::size_t b = 0; b < total; b += s) {
        BitVector block(s);
        for (std::size_t i = 0; i < s; ++i)
            if (padded.get(b + i))
                block.set(i);
        blocks.push_back(std::move(block));
    }
    return blocks;
}

BitVector combine(const BitVector& chaining, const BitVector& block)
{
    return chaining.resized(block.size()) ^ block;
}

BitVector md_hash_stopped(Bytes msg, const HashConfig& cfg)
{
    count_hash_evaluation();
    auto blocks = pad_message(msg, cfg.state_bits());
    BitVector state = combine(cfg.iv(), blocks.front());
    for (std::size_t i = 1; i < blocks.size(); ++i)
        state = combine(compress(state, cfg), blocks[i]);
    return state;
}

BitVector md_hash(Bytes msg, const HashConfig& cfg)
{
    return compress(md_hash_stopped(msg, cfg), cfg);
}

std::string format_test_vector(Bytes msg, const HashConfig& cfg)
{
    BitVector state = md_hash_stopped(msg, cfg);
    BitVector digest = compress(state, cfg);
    std::string msg_hex = msg.empty() ? "-" : bytes_to_hex(msg);
    return msg_hex + "  " + digest.to_hex() + "  " + state.to_hex();
}

bool check_test_vector(std::string_view line, const HashConfig& cfg)
{
    std::istringstream in{std::string(line)};
    std::string msg_hex, digest_hex, state_hex, extra;
    if (!(in >> msg_hex >> digest_hex >> state_hex) || (in >> extra))
        throw FormatError("test vector line needs exactly three hex fields");
    if (msg_hex == "-")
        msg_hex.clear();
    auto msg = hex_to_bytes(msg_hex);
    BitVector digest = BitVector::from_hex(digest_hex, cfg.digest_bits());
    BitVector state = BitVector::from_hex(state_hex, cfg.state_bits());
    BitVector fresh_state = md_hash_stopped(msg, cfg);
    return fresh_state == state && compress(fresh_state, cfg) == digest;
}

GammaMap::GammaMap(std::string id, std::size_t input_bits, std::size_t output_bits,
                   std::size_t weight_bound, Fn fn)
    : id_(std::move(id)), input_bits_(input_bits), output_bits_(output_bits),
      weight_bound_(weight_bound), fn_(std::move(fn))
{
}

BitVector GammaMap::operator()(const BitVector& v) const
{
    if (v.size() != input_bits_)
        throw DimensionError("gamma '" + id_ + "' takes " + std::to_string(input_bits_) +
                             " bits, got " + std::to_string(v.size()));
    BitVector out = fn_(v);
    if (out.size() != output_bits_)
        throw DimensionError("gamma '" + id_ + "' produced " + std::to_string(out.size()) +
                             " bits, expected " + std::to_string(output_bits_));
    if (out.weight() > weight_bound_)
        throw GammaContractViolation("gamma '" + id_ + "' produced weight " +
                                     std::to_string(out.weight()) + " > " +
                                     std::to_string(weight_bound_));
    return out;
}

GammaMap delta_gamma(const BlockLayout& layout, std::size_t t)
{
    if (layout.w > t)
        throw BadParameters("delta has weight w = " + std::to_string(layout.w) +
                            " above the bound t = " + std::to_string(t));
    return GammaMap(std::string(delta_gamma_id), layout.s, layout.n, t,
                    [layout](const BitVector& x) { return delta_t(x, layout); });
}

namespace {

using u128 = unsigned __int128;

// C(n, k) saturated at 2^64 (anything that large exceeds every 64-bit rank).
u128 binomial_sat(std::size_t n, std::size_t k)
{
    constexpr u128 cap = u128{1} << 64;
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    u128 r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r >= cap)
            return cap;
    }
    return r;
}

BitVector unrank_subset(std::uint64_t rank, std::size_t n, std::size_t t)
{
    BitVector v(n);
    u128 rem = rank;
    std::size_t hi = n; // positions chosen so far are all >= hi
    for (std::size_t k = t; k >= 1; --k) {
        // largest c < hi with C(c, k) <= rem
        std::size_t lo = k - 1, top = hi - 1;
        while (lo < top) {
            std::size_t mid = (lo + top + 1) / 2;
            if (binomial_sat(mid, k) <= rem)
                lo = mid;
            else
                top = mid - 1;
        }
        v.set(lo);
        rem -= binomial_sat(lo, k);
        hi = lo;
    }
    return v;
}

} // namespace

GammaMap cw_rank_gamma(std::size_t input_bits, std::size_t n, std::size_t t)
{
    if (input_bits > 64)
        throw BadParameters("cw-rank takes at most 64 input bits");
    if (t == 0 || t > n)
        throw BadParameters("cw-rank needs 0 < t <= n");
    return GammaMap(std::string(cw_rank_gamma_id), input_bits, n, t,
                    [n, t, input_bits](const BitVector& x) {
                        u128 v = x.read_uint(0, input_bits);
                        u128 space = binomial_sat(n, t);
                        return unrank_subset(static_cast<std::uint64_t>(v % space), n, t);
                    });
}

GammaMap make_gamma(std::string_view id, const BlockLayout& layout, std::size_t t)
{
    if (id == delta_gamma_id)
        return delta_gamma(layout, t);
    if (id == cw_rank_gamma_id)
        return cw_rank_gamma(layout.s, layout.n, t);
    throw BadParameters("unknown gamma map '" + std::string(id) + "'");
}

InnerHash::InnerHash(std::string id, std::size_t output_bits, Fn fn)
    : id_(std::move(id)), output_bits_(output_bits), fn_(std::move(fn))
{
}

BitVector InnerHash::operator()(Bytes msg) const
{
    BitVector out = fn_(msg);
    if (out.size() != output_bits_)
        throw DimensionError("inner hash '" + id_ + "' produced the wrong length");
    return out;
}

InnerHash md_stopped_hash(const HashConfig& cfg)
{
    return InnerHash(std::string(md_stopped_hash_id), cfg.state_bits(),
                     [cfg](Bytes msg) { return md_hash_stopped(msg, cfg); });
}

InnerHash sha256_inner_hash(std::size_t bits)
{
    return InnerHash(std::string(sha256_hash_id), bits,
                     [bits](Bytes msg) { return expand_digest(msg, bits); });
}

InnerHash make_inner_hash(std::string_view id, const HashConfig& cfg)
{
    if (id == md_stopped_hash_id)
        return md_stopped_hash(cfg);
    if (id == sha256_hash_id)
        return sha256_inner_hash(cfg.state_bits());
    throw BadParameters("unknown inner hash '" + std::string(id) + "'");
}

BitVector hbar(Bytes msg, const BitMatrix& h, const GammaMap& gamma, const InnerHash& inner)
{
    if (inner.output_bits() != gamma.input_bits() || gamma.output_bits() != h.cols())
        throw DimensionError("hbar: inner hash, gamma and H disagree on lengths");
    return mat_vec(h, gamma(inner(msg)));
}

} // namespace cfs
