#pragma once

// Key generation and signing. Depends on the Goppa decoder; verification and
// the attacks never include this header.

#include "cfs/goppa.hpp"
#include "cfs/random.hpp"
#include "cfs/schemes_public.hpp"

#include <cstdint>
#include <variant>

namespace cfs {

inline constexpr std::uint64_t default_attempt_cap = std::uint64_t{1} << 20;

struct CfsSecretKey {
    GoppaCode code;
    BitMatrix s;
    BitMatrix s_inv;
    Permutation p;
    CfsPublicKey pub;
};

struct McfscSecretKey {
    GoppaCode code;
    Permutation p;
    McfscPublicKey pub;
};

struct TildeSecretKey {
    GoppaCode code;
    BitMatrix s;
    BitMatrix s_inv;
    Permutation p;
    TildePublicKey pub;
};

/// Assembles keys from explicit parts (S, P may be identities). H_pub = S*H*P.
/// `scheme` selects CFS or mCFS.
CfsSecretKey make_cfs_keys(GoppaCode code, const InvertiblePair& s, Permutation p,
                           Scheme scheme = Scheme::cfs);
CfsSecretKey cfs_keygen(unsigned m, unsigned t, RandomSource& rng, Scheme scheme = Scheme::cfs);

/// Smallest counter whose digest decodes. Throws AttemptLimitExceeded.
CfsSignature cfs_sign(Bytes msg, const CfsSecretKey& sk,
                      std::uint64_t attempt_cap = default_attempt_cap);
/// Fresh random nonce per attempt. Throws AttemptLimitExceeded.
McfsSignature mcfs_sign(Bytes msg, const CfsSecretKey& sk, RandomSource& rng,
                        std::uint64_t attempt_cap = default_attempt_cap);

/// No scrambler: H_pub = H*P. Requires w < t, w | n, n/w a power of two.
McfscSecretKey make_mcfsc_keys(GoppaCode code, Permutation p, std::size_t w,
                               HashBasis basis = HashBasis::public_matrix);
McfscSecretKey mcfsc_keygen(unsigned m, unsigned t, std::size_t w, RandomSource& rng,
                            HashBasis basis = HashBasis::public_matrix);

/// One decode, no retry. Throws InvariantViolation if the digest fails to decode.
McfsSignature mcfsc_sign(Bytes msg, const McfscSecretKey& sk, RandomSource& rng);
McfsSignature mcfsc_sign_with_nonce(Bytes msg, const McfscSecretKey& sk, std::uint64_t nonce);

TildeSecretKey make_tilde_keys(GoppaCode code, const InvertiblePair& s, Permutation p,
                               std::size_t w, std::string_view gamma_id,
                               std::string_view hash_id);
TildeSecretKey tilde_keygen(unsigned m, unsigned t, std::size_t w, std::string_view gamma_id,
                            std::string_view hash_id, RandomSource& rng);

/// Decodes S^-1 * hbar(msg). Throws InvariantViolation on decoding failure.
TildeSignature tilde_sign(Bytes msg, const TildeSecretKey& sk);

using SecretKey = std::variant<CfsSecretKey, McfscSecretKey, TildeSecretKey>;

PublicKey public_key_of(const SecretKey& sk);
Scheme scheme_of(const SecretKey& sk);

/// Signs with whichever scheme the key belongs to; rng feeds the nonces.
SignatureRecord sign(Bytes msg, const SecretKey& sk, RandomSource& rng);

std::string write_secret_key(const SecretKey& sk);
SecretKey read_secret_key(std::string_view text);

} // namespace cfs
