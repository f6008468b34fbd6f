#pragma once

// Forgeries and key recovery that only ever see public data. This header
// must not include schemes_secret.hpp, and the attacks library does not
// link the signing code.

#include "cfs/gf2.hpp"
#include "cfs/metrics.hpp"
#include "cfs/random.hpp"
#include "cfs/schemes_public.hpp"

#include <cstdint>
#include <string>

namespace cfs {

template <typename Signature>
struct Forgery {
    ByteString message;
    Signature signature;
    /// Work done by the forger; decodes is always 0.
    OperationCount cost;
};

/// Runs the mCFS_c digest h(h(m) || R) but stops before the outer hash's
/// final compression, and returns (R, delta_t(state)).
Forgery<McfsSignature> forge_mcfsc(Bytes msg, const McfscPublicKey& pk, RandomSource& rng);
Forgery<McfsSignature> forge_mcfsc_with_nonce(Bytes msg, const McfscPublicKey& pk,
                                              std::uint64_t nonce);

/// Outputs gamma(h(m)) directly as the error vector.
Forgery<TildeSignature> forge_tilde(Bytes msg, const TildePublicKey& pk);

struct PermutationRecovery {
    Permutation permutation;
    /// H has repeated columns, so other permutations fit equally well.
    bool ambiguous = false;
    std::size_t comparisons = 0;
};

/// Finds Q with H*Q = H_pub by sorting the columns of H and looking up each
/// column of H_pub. Throws NoPermutation when no column bijection exists.
PermutationRecovery recover_permutation(const BitMatrix& h, const BitMatrix& h_pub);

struct CostReport {
    OperationCount honest;
    OperationCount forged;
    bool hash_evaluations_le = false;
    bool compressions_le = false;
    bool matvecs_le = false;
    bool decodes_le = false;

    bool forged_never_costlier() const
    {
        return hash_evaluations_le && compressions_le && matvecs_le && decodes_le;
    }
    std::string to_json() const;
};

CostReport attack_cost_report(const OperationCount& honest, const OperationCount& forged);

/// {scheme, msg_hex, signature_hex, verified, cost:{...}} as one JSON line.
std::string forgery_transcript(Scheme scheme, Bytes msg, const SignatureRecord& sig,
                               bool verified, const OperationCount& cost);

} // namespace cfs
