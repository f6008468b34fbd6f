#include "cfs/attacks.hpp"

#include "cfs/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <numeric>

namespace cfs {

namespace {

nlohmann::ordered_json cost_json(const OperationCount& c)
{
    nlohmann::ordered_json j;
    j["hash_evaluations"] = c.hash_evaluations;
    j["compressions"] = c.compressions;
    j["matvecs"] = c.matvecs;
    j["decodes"] = c.decodes;
    return j;
}

} // namespace

Forgery<McfsSignature> forge_mcfsc_with_nonce(Bytes msg, const McfscPublicKey& pk,
                                              std::uint64_t nonce)
{
    if (nonce == 0 || nonce > max_nonce(pk.redundancy()))
        throw BadParameters("nonce must lie in [1, 2^(n-k)]");
    Forgery<McfsSignature> f{ByteString(msg.begin(), msg.end()), {}, {}};
    {
        CountingScope scope;
        BitVector state = md_hash_stopped(mcfsc_outer_message(msg, nonce, pk), pk.hash);
        f.signature = {nonce, delta_t(state, pk.hash.layout())};
        f.cost = scope.counts();
    }
    return f;
}

Forgery<McfsSignature> forge_mcfsc(Bytes msg, const McfscPublicKey& pk, RandomSource& rng)
{
    return forge_mcfsc_with_nonce(msg, pk, rng.between(1, max_nonce(pk.redundancy())));
}

Forgery<TildeSignature> forge_tilde(Bytes msg, const TildePublicKey& pk)
{
    Forgery<TildeSignature> f{ByteString(msg.begin(), msg.end()), {}, {}};
    {
        CountingScope scope;
        GammaMap gamma = pk.gamma();
        InnerHash inner = pk.inner_hash();
        f.signature = {gamma(inner(msg))};
        f.cost = scope.counts();
    }
    return f;
}

PermutationRecovery recover_permutation(const BitMatrix& h, const BitMatrix& h_pub)
{
    if (h.rows() != h_pub.rows() || h.cols() != h_pub.cols())
        throw NoPermutation("H and H_pub have different shapes");
    const std::size_t n = h.cols();
    std::vector<BitVector> cols(n);
    for (std::size_t i = 0; i < n; ++i)
        cols[i] = h.column(i);

    PermutationRecovery out;
    auto less = [&](const BitVector& a, const BitVector& b) {
        ++out.comparisons;
        return a < b;
    };
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return less(cols[a], cols[b]); });
    std::vector<BitVector> sorted(n);
    for (std::size_t i = 0; i < n; ++i)
        sorted[i] = cols[order[i]];
    for (std::size_t i = 1; i < n; ++i)
        if (sorted[i] == sorted[i - 1])
            out.ambiguous = true;

    // next unused slot inside each run of equal columns
    std::vector<std::size_t> taken(n, 0);
    std::vector<std::size_t> map(n);
    for (std::size_t j = 0; j < n; ++j) {
        BitVector target = h_pub.column(j);
        auto it = std::lower_bound(sorted.begin(), sorted.end(), target, less);
        std::size_t start = static_cast<std::size_t>(it - sorted.begin());
        ++out.comparisons;
        if (it == sorted.end() || *it != target)
            throw NoPermutation("column " + std::to_string(j) + " of H_pub does not occur in H");
        std::size_t slot = start + taken[start];
        if (slot >= n || sorted[slot] != target)
            throw NoPermutation("column " + std::to_string(j) +
                                " of H_pub occurs more often than in H");
        ++taken[start];
        map[j] = order[slot];
    }
    out.permutation = Permutation(std::move(map));
    return out;
}

CostReport attack_cost_report(const OperationCount& honest, const OperationCount& forged)
{
    CostReport r;
    r.honest = honest;
    r.forged = forged;
    r.hash_evaluations_le = forged.hash_evaluations <= honest.hash_evaluations;
    r.compressions_le = forged.compressions <= honest.compressions;
    r.matvecs_le = forged.matvecs <= honest.matvecs;
    r.decodes_le = forged.decodes <= honest.decodes;
    return r;
}

std::string CostReport::to_json() const
{
    nlohmann::ordered_json j;
    j["honest"] = cost_json(honest);
    j["forged"] = cost_json(forged);
    j["forged_le"] = {{"hash_evaluations", hash_evaluations_le},
                      {"compressions", compressions_le},
                      {"matvecs", matvecs_le},
                      {"decodes", decodes_le}};
    return j.dump();
}

std::string forgery_transcript(Scheme scheme, Bytes msg, const SignatureRecord& sig,
                               bool verified, const OperationCount& cost)
{
    nlohmann::ordered_json j;
    j["scheme"] = scheme_name(scheme);
    j["msg_hex"] = bytes_to_hex(msg);
    j["signature_hex"] = sig.to_hex();
    j["verified"] = verified;
    nlohmann::ordered_json c;
    c["compressions"] = cost.compressions;
    c["matvecs"] = cost.matvecs;
    c["decodes"] = cost.decodes;
    c["hash_evaluations"] = cost.hash_evaluations;
    j["cost"] = c;
    return j.dump();
}

} // namespace cfs
