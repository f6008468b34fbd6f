#include "cfs/gf2.hpp"

#include "cfs/errors.hpp"
#include "cfs/metrics.hpp"

#include <bit>
#include <stdexcept>
#include <string>
#include <utility>

namespace cfs {

namespace {

constexpr char hex_digits[] = "0123456789abcdef";

int hex_value(char c)
{
    if (c >= '0' && c <= '9')
        return c - '0';
    if (c >= 'a' && c <= 'f')
        return c - 'a' + 10;
    if (c >= 'A' && c <= 'F')
        return c - 'A' + 10;
    return -1;
}

std::string dims(std::size_t a, std::size_t b)
{
    return std::to_string(a) + " vs " + std::to_string(b);
}

} // namespace

BitVector BitVector::from_bits(std::string_view bits)
{
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            v.set(i);
        else if (bits[i] != '0')
            throw FormatError("bit string may only contain 0 and 1");
    }
    return v;
}

BitVector BitVector::from_uint(std::uint64_t value, std::size_t width)
{
    BitVector v(width);
    for (std::size_t i = 0; i < width && i < 64; ++i)
        if ((value >> i) & 1u)
            v.set(width - 1 - i);
    return v;
}

BitVector BitVector::from_bytes(std::span<const std::uint8_t> bytes, std::size_t n)
{
    if (n > 8 * bytes.size())
        throw DimensionError("from_bytes: " + std::to_string(n) + " bits requested from " +
                             std::to_string(bytes.size()) + " bytes");
    BitVector v(n);
    for (std::size_t i = 0; i < n; ++i)
        if ((bytes[i / 8] >> (7 - i % 8)) & 1u)
            v.set(i);
    return v;
}

BitVector BitVector::random(std::size_t n, RandomSource& rng)
{
    BitVector v(n);
    for (auto& w : v.words_)
        w = rng.next_u64();
    if (n % word_bits)
        v.words_.back() &= (Word{1} << (n % word_bits)) - 1;
    return v;
}

void BitVector::set(std::size_t i, bool v)
{
    Word mask = Word{1} << (i % word_bits);
    if (v)
        words_[i / word_bits] |= mask;
    else
        words_[i / word_bits] &= ~mask;
}

std::size_t BitVector::weight() const
{
    std::size_t w = 0;
    for (Word x : words_)
        w += static_cast<std::size_t>(std::popcount(x));
    return w;
}

bool BitVector::is_zero() const
{
    for (Word x : words_)
        if (x)
            return false;
    return true;
}

std::vector<std::size_t> BitVector::support() const
{
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < words_.size(); ++k) {
        Word x = words_[k];
        while (x) {
            out.push_back(k * word_bits + static_cast<std::size_t>(std::countr_zero(x)));
            x &= x - 1;
        }
    }
    return out;
}

BitVector& BitVector::operator^=(const BitVector& other)
{
    if (other.size_ != size_)
        throw DimensionError("xor of vectors of length " + dims(size_, other.size_));
    for (std::size_t k = 0; k < words_.size(); ++k)
        words_[k] ^= other.words_[k];
    return *this;
}

bool BitVector::dot(const BitVector& other) const
{
    if (other.size_ != size_)
        throw DimensionError("dot of vectors of length " + dims(size_, other.size_));
    Word acc = 0;
    for (std::size_t k = 0; k < words_.size(); ++k)
        acc ^= words_[k] & other.words_[k];
    return std::popcount(acc) & 1;
}

std::uint64_t BitVector::read_uint(std::size_t offset, std::size_t width) const
{
    if (offset + width > size_ || width > 64)
        throw DimensionError("read_uint out of range");
    std::uint64_t x = 0;
    for (std::size_t i = 0; i < width; ++i)
        x = (x << 1) | static_cast<std::uint64_t>(get(offset + i));
    return x;
}

BitVector BitVector::resized(std::size_t n) const
{
    BitVector out(n);
    std::size_t common = std::min(n, size_);
    for (std::size_t k = 0; k < word_count(common); ++k)
        out.words_[k] = words_[k];
    if (common % word_bits)
        out.words_[word_count(common) - 1] &= (Word{1} << (common % word_bits)) - 1;
    return out;
}

BitVector BitVector::concat(const BitVector& tail) const
{
    BitVector out = resized(size_ + tail.size_);
    for (std::size_t i : tail.support())
        out.set(size_ + i);
    return out;
}

std::vector<std::uint8_t> BitVector::to_bytes() const
{
    std::vector<std::uint8_t> out((size_ + 7) / 8, 0);
    for (std::size_t i : support())
        out[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
    return out;
}

std::string BitVector::to_hex() const { return bytes_to_hex(to_bytes()); }

BitVector BitVector::from_hex(std::string_view hex, std::size_t n)
{
    auto bytes = hex_to_bytes(hex);
    if (bytes.size() != (n + 7) / 8)
        throw FormatError("hex vector has " + std::to_string(bytes.size()) + " bytes, expected " +
                          std::to_string((n + 7) / 8));
    BitVector v = from_bytes(bytes, n);
    if (v.to_bytes() != bytes)
        throw FormatError("hex vector has nonzero padding bits");
    return v;
}

std::string BitVector::to_bit_string() const
{
    std::string s(size_, '0');
    for (std::size_t i : support())
        s[i] = '1';
    return s;
}

std::string bytes_to_hex(std::span<const std::uint8_t> bytes)
{
    std::string s;
    s.reserve(2 * bytes.size());
    for (std::uint8_t b : bytes) {
        s.push_back(hex_digits[b >> 4]);
        s.push_back(hex_digits[b & 0xf]);
    }
    return s;
}

std::vector<std::uint8_t> hex_to_bytes(std::string_view hex)
{
    if (hex.size() % 2)
        throw FormatError("hex string has odd length");
    std::vector<std::uint8_t> out(hex.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i) {
        int hi = hex_value(hex[2 * i]);
        int lo = hex_value(hex[2 * i + 1]);
        if (hi < 0 || lo < 0)
            throw FormatError("invalid hex character");
        out[i] = static_cast<std::uint8_t>((hi << 4) | lo);
    }
    return out;
}

Permutation::Permutation(std::vector<std::size_t> map) : map_(std::move(map))
{
    std::vector<bool> seen(map_.size(), false);
    for (std::size_t x : map_) {
        if (x >= map_.size() || seen[x])
            throw std::invalid_argument("permutation map is not a bijection");
        seen[x] = true;
    }
}

Permutation Permutation::identity(std::size_t n)
{
    std::vector<std::size_t> map(n);
    for (std::size_t i = 0; i < n; ++i)
        map[i] = i;
    return Permutation(std::move(map));
}

Permutation Permutation::random(std::size_t n, RandomSource& rng)
{
    Permutation p = identity(n);
    rng.shuffle(p.map_);
    return p;
}

Permutation Permutation::inverse() const
{
    std::vector<std::size_t> inv(map_.size());
    for (std::size_t j = 0; j < map_.size(); ++j)
        inv[map_[j]] = j;
    return Permutation(std::move(inv));
}

BitVector Permutation::apply(const BitVector& e) const
{
    if (e.size() != map_.size())
        throw DimensionError("permutation of size " + dims(map_.size(), e.size()));
    BitVector out(e.size());
    for (std::size_t j = 0; j < map_.size(); ++j)
        if (e.get(map_[j]))
            out.set(j);
    return out;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols))
{
}

BitMatrix BitMatrix::identity(std::size_t n)
{
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i);
    return m;
}

BitMatrix BitMatrix::random(std::size_t rows, std::size_t cols, RandomSource& rng)
{
    BitMatrix m(rows, cols);
    for (auto& r : m.rows_)
        r = BitVector::random(cols, rng);
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<BitVector>& rows)
{
    BitMatrix m;
    m.cols_ = rows.empty() ? 0 : rows.front().size();
    for (const auto& r : rows)
        if (r.size() != m.cols_)
            throw DimensionError("rows of unequal length");
    m.rows_ = rows;
    return m;
}

BitMatrix BitMatrix::from_columns(const std::vector<BitVector>& cols)
{
    std::size_t r = cols.empty() ? 0 : cols.front().size();
    BitMatrix m(r, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != r)
            throw DimensionError("columns of unequal length");
        for (std::size_t i : cols[c].support())
            m.set(i, c);
    }
    return m;
}

BitVector BitMatrix::column(std::size_t c) const
{
    BitVector v(rows());
    for (std::size_t r = 0; r < rows(); ++r)
        if (get(r, c))
            v.set(r);
    return v;
}

BitMatrix BitMatrix::transpose() const
{
    BitMatrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t c : rows_[r].support())
            t.set(c, r);
    return t;
}

BitMatrix BitMatrix::permute_columns(const Permutation& p) const
{
    BitMatrix out(rows(), cols_);
    for (std::size_t r = 0; r < rows(); ++r)
        out.rows_[r] = p.apply(rows_[r]);
    return out;
}

BitVector mat_vec(const BitMatrix& h, const BitVector& v)
{
    if (h.cols() != v.size())
        throw DimensionError("mat_vec: matrix has " + std::to_string(h.cols()) +
                             " columns, vector has length " + std::to_string(v.size()));
    count_matvec();
    BitVector s(h.rows());
    for (std::size_t r = 0; r < h.rows(); ++r)
        if (h.row(r).dot(v))
            s.set(r);
    return s;
}

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b)
{
    if (a.cols() != b.rows())
        throw DimensionError("mat_mul: inner dimensions " + dims(a.cols(), b.rows()));
    BitMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k : a.row(r).support())
            out.row(r) ^= b.row(k);
    return out;
}

namespace {

// In-place reduction to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> reduce(BitMatrix& a)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && !a.get(p, c))
            ++p;
        if (p == a.rows())
            continue;
        std::swap(a.row(p), a.row(r));
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (i != r && a.get(i, c))
                a.row(i) ^= a.row(r);
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::size_t rank(BitMatrix a) { return reduce(a).size(); }

std::vector<BitVector> kernel_basis(const BitMatrix& a)
{
    BitMatrix e = a;
    auto pivots = reduce(e);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : pivots)
        is_pivot[c] = true;
    std::vector<BitVector> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free])
            continue;
        BitVector x(a.cols());
        x.set(free);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (e.get(i, free))
                x.set(pivots[i]);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<BitVector> gaussian_solve(const BitMatrix& a, const BitVector& b)
{
    if (a.rows() != b.size())
        throw DimensionError("gaussian_solve: " + std::to_string(a.rows()) +
                             " equations, right-hand side of length " + std::to_string(b.size()));
    // augmented matrix [A | b]
    BitMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        aug.row(r) = a.row(r).resized(a.cols() + 1);
        aug.set(r, a.cols(), b.get(r));
    }
    auto pivots = reduce(aug);
    BitVector x(a.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == a.cols())
            return std::nullopt;
        x.set(pivots[i], aug.get(i, a.cols()));
    }
    return x;
}

std::optional<BitMatrix> inverse(const BitMatrix& a)
{
    if (a.rows() != a.cols())
        throw DimensionError("inverse of a non-square matrix");
    std::size_t n = a.rows();
    BitMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        aug.row(r) = a.row(r).resized(2 * n);
        aug.set(r, n + r);
    }
    auto pivots = reduce(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1)
        return std::nullopt;
    BitMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inv.set(r, c, aug.get(r, n + c));
    return inv;
}

InvertiblePair rand_invertible(std::size_t r, RandomSource& rng)
{
    if (r == 0)
        throw BadParameters("rand_invertible needs r >= 1");
    for (;;) {
        BitMatrix s = BitMatrix::random(r, r, rng);
        if (auto inv = inverse(s))
            return {std::move(s), std::move(*inv)};
    }
}

} // namespace cfs
