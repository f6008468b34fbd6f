#pragma once

// Public half of the four hash-and-sign schemes: key and signature types,
// verification and file formats. Nothing here can see a secret key.

#include "cfs/codehash.hpp"
#include "cfs/gf2.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace cfs {

enum class Scheme { cfs, mcfs, mcfsc, tilde };

std::string_view scheme_name(Scheme s);
/// Throws BadParameters for unknown names.
Scheme parse_scheme(std::string_view name);

struct CfsSignature {
    std::uint64_t counter = 0;
    BitVector error;
};

/// Signatures of mCFS and mCFS_c: a nonce R in [1, 2^(n-k)] and an error.
struct McfsSignature {
    std::uint64_t nonce = 0;
    BitVector error;
};

struct TildeSignature {
    BitVector error;
};

/// Public key shared by CFS (counter) and mCFS (nonce).
struct CfsPublicKey {
    Scheme scheme = Scheme::cfs;
    unsigned m = 0;
    unsigned t = 0;
    BitMatrix h_pub;
    std::string hash_id;

    std::size_t n() const { return h_pub.cols(); }
    std::size_t redundancy() const { return h_pub.rows(); }
};

/// Which matrix the mCFS_c hash is built on. `secret` models publishing a
/// hash over the private H, which leaks H next to H_pub.
enum class HashBasis { public_matrix, secret_matrix };

struct McfscPublicKey {
    unsigned m = 0;
    unsigned t = 0;
    BitMatrix h_pub;
    HashBasis basis = HashBasis::public_matrix;
    HashConfig hash;

    std::size_t n() const { return h_pub.cols(); }
    std::size_t redundancy() const { return h_pub.rows(); }
    std::size_t w() const { return hash.w(); }
};

struct TildePublicKey {
    unsigned m = 0;
    unsigned t = 0;
    BitMatrix h_pub;
    std::string gamma_id;
    std::string hash_id;
    /// Code-based hash over H_pub; fixes s and backs the `code-md` inner hash.
    HashConfig hash;

    std::size_t n() const { return h_pub.cols(); }
    std::size_t redundancy() const { return h_pub.rows(); }
    GammaMap gamma() const;
    InnerHash inner_hash() const;
};

/// Counter and nonce are appended as 8-byte big-endian integers.
ByteString append_u64(Bytes msg, std::uint64_t value);

/// h(m || i) for CFS and mCFS: the generic digest truncated to n-k bits.
BitVector cfs_digest(Bytes msg, std::uint64_t counter, const CfsPublicKey& pk);

/// h(m) || R, the input of the outer hash in mCFS_c.
ByteString mcfsc_outer_message(Bytes msg, std::uint64_t nonce, const McfscPublicKey& pk);
/// h(h(m) || R).
BitVector mcfsc_digest(Bytes msg, std::uint64_t nonce, const McfscPublicKey& pk);

BitVector tilde_digest(Bytes msg, const TildePublicKey& pk);

/// Largest nonce, 2^(n-k).
std::uint64_t max_nonce(std::size_t redundancy);

bool cfs_verify(Bytes msg, const CfsSignature& sig, const CfsPublicKey& pk);
bool mcfs_verify(Bytes msg, const McfsSignature& sig, const CfsPublicKey& pk);
bool mcfsc_verify(Bytes msg, const McfsSignature& sig, const McfscPublicKey& pk);
bool tilde_verify(Bytes msg, const TildeSignature& sig, const TildePublicKey& pk);

using PublicKey = std::variant<CfsPublicKey, McfscPublicKey, TildePublicKey>;

Scheme scheme_of(const PublicKey& pk);

/// Scheme-independent signature record as stored on disk.
struct SignatureRecord {
    Scheme scheme = Scheme::cfs;
    /// Counter (CFS) or nonce (mCFS, mCFS_c); absent for CFS-tilde.
    std::optional<std::uint64_t> tag;
    BitVector error;

    static SignatureRecord of(const CfsSignature& sig);
    static SignatureRecord of(Scheme scheme, const McfsSignature& sig);
    static SignatureRecord of(const TildeSignature& sig);

    /// tag (8 bytes, big-endian, when present) followed by the error bytes.
    std::string to_hex() const;
};

/// Dispatches on the key's scheme; a record of another scheme is rejected.
bool verify(Bytes msg, const SignatureRecord& sig, const PublicKey& pk);

// Text file formats. Matrices are written as `matrix <name> <rows> <cols>`
// followed by one line of row-major hex per row (MSB-first, zero padded to a
// whole byte). All parsers throw FormatError on malformed input.
std::string write_matrix(std::string_view name, const BitMatrix& m);

std::string write_public_key(const PublicKey& pk);
PublicKey read_public_key(std::string_view text);

std::string write_signature(const SignatureRecord& sig);
SignatureRecord read_signature(std::string_view text);

} // namespace cfs
