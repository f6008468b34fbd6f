#include "cfs/schemes_secret.hpp"

#include "cfs/digest.hpp"
#include "cfs/errors.hpp"
#include "text_record.hpp"

#include <utility>

namespace cfs {

namespace {

constexpr std::string_view key_magic = "cfs-key";
constexpr int format_version = 1;

BitMatrix scramble(const BitMatrix& s, const GoppaCode& code, const Permutation& p)
{
    return mat_mul(s, code.parity_check()).permute_columns(p);
}

void check_nonce_range(const GoppaCode& code)
{
    if (code.redundancy() >= 64)
        throw BadParameters("nonce schemes need n-k < 64");
}

void check_scrambler(const InvertiblePair& s, const GoppaCode& code, const Permutation& p)
{
    if (s.matrix.rows() != code.redundancy() || s.matrix.cols() != code.redundancy())
        throw BadParameters("scrambler S must be (n-k) x (n-k)");
    if (mat_mul(s.matrix, s.inverse) != BitMatrix::identity(code.redundancy()))
        throw BadParameters("S_inv is not the inverse of S");
    if (p.size() != code.n())
        throw BadParameters("permutation size must equal n");
}

} // namespace

CfsSecretKey make_cfs_keys(GoppaCode code, const InvertiblePair& s, Permutation p, Scheme scheme)
{
    if (scheme != Scheme::cfs && scheme != Scheme::mcfs)
        throw BadParameters("CFS keys serve only the cfs and mcfs schemes");
    check_scrambler(s, code, p);
    if (scheme == Scheme::mcfs)
        check_nonce_range(code);
    CfsPublicKey pub{scheme, code.m(), code.t(), scramble(s.matrix, code, p),
                     std::string(sha256_hash_id)};
    return CfsSecretKey{std::move(code), s.matrix, s.inverse, std::move(p), std::move(pub)};
}

CfsSecretKey cfs_keygen(unsigned m, unsigned t, RandomSource& rng, Scheme scheme)
{
    GoppaCode code = goppa_keygen(m, t, rng);
    InvertiblePair s = rand_invertible(code.redundancy(), rng);
    Permutation p = Permutation::random(code.n(), rng);
    return make_cfs_keys(std::move(code), s, std::move(p), scheme);
}

CfsSignature cfs_sign(Bytes msg, const CfsSecretKey& sk, std::uint64_t attempt_cap)
{
    for (std::uint64_t counter = 0; counter < attempt_cap; ++counter) {
        BitVector d = cfs_digest(msg, counter, sk.pub);
        if (auto e = patterson_decode(sk.code, mat_vec(sk.s_inv, d)))
            return {counter, sk.p.apply(*e)};
    }
    throw AttemptLimitExceeded("no decodable syndrome within " + std::to_string(attempt_cap) +
                               " counters");
}

McfsSignature mcfs_sign(Bytes msg, const CfsSecretKey& sk, RandomSource& rng,
                        std::uint64_t attempt_cap)
{
    const std::uint64_t top = max_nonce(sk.code.redundancy());
    for (std::uint64_t attempt = 0; attempt < attempt_cap; ++attempt) {
        std::uint64_t nonce = rng.between(1, top);
        BitVector d = cfs_digest(msg, nonce, sk.pub);
        if (auto e = patterson_decode(sk.code, mat_vec(sk.s_inv, d)))
            return {nonce, sk.p.apply(*e)};
    }
    throw AttemptLimitExceeded("no decodable syndrome within " + std::to_string(attempt_cap) +
                               " nonces");
}

McfscSecretKey make_mcfsc_keys(GoppaCode code, Permutation p, std::size_t w, HashBasis basis)
{
    if (w >= code.t())
        throw BadParameters("mCFS_c needs w < t (w = " + std::to_string(w) +
                            ", t = " + std::to_string(code.t()) + ")");
    if (p.size() != code.n())
        throw BadParameters("permutation size must equal n");
    check_nonce_range(code);
    BitMatrix h_pub = code.parity_check().permute_columns(p);
    const BitMatrix& hash_matrix =
        basis == HashBasis::public_matrix ? h_pub : code.parity_check();
    HashConfig cfg(hash_matrix, w);
    McfscPublicKey pub{code.m(), code.t(), h_pub, basis, std::move(cfg)};
    return McfscSecretKey{std::move(code), std::move(p), std::move(pub)};
}

McfscSecretKey mcfsc_keygen(unsigned m, unsigned t, std::size_t w, RandomSource& rng,
                            HashBasis basis)
{
    // validate the cheap constraints before spending time on the code
    if (w >= t)
        throw BadParameters("mCFS_c needs w < t");
    BlockLayout::make(std::size_t{1} << m, w);
    GoppaCode code = goppa_keygen(m, t, rng);
    Permutation p = Permutation::random(code.n(), rng);
    return make_mcfsc_keys(std::move(code), std::move(p), w, basis);
}

McfsSignature mcfsc_sign_with_nonce(Bytes msg, const McfscSecretKey& sk, std::uint64_t nonce)
{
    if (nonce == 0 || nonce > max_nonce(sk.pub.redundancy()))
        throw BadParameters("nonce must lie in [1, 2^(n-k)]");
    BitVector d = mcfsc_digest(msg, nonce, sk.pub);
    auto e = patterson_decode(sk.code, d);
    if (!e)
        throw InvariantViolation("mCFS_c digest failed to decode; the key is corrupt");
    return {nonce, sk.p.apply(*e)};
}

McfsSignature mcfsc_sign(Bytes msg, const McfscSecretKey& sk, RandomSource& rng)
{
    return mcfsc_sign_with_nonce(msg, sk, rng.between(1, max_nonce(sk.code.redundancy())));
}

TildeSecretKey make_tilde_keys(GoppaCode code, const InvertiblePair& s, Permutation p,
                               std::size_t w, std::string_view gamma_id, std::string_view hash_id)
{
    check_scrambler(s, code, p);
    BitMatrix h_pub = scramble(s.matrix, code, p);
    HashConfig cfg(h_pub, w);
    TildePublicKey pub{code.m(), code.t(), h_pub, std::string(gamma_id), std::string(hash_id),
                       std::move(cfg)};
    pub.gamma();
    pub.inner_hash();
    return TildeSecretKey{std::move(code), s.matrix, s.inverse, std::move(p), std::move(pub)};
}

TildeSecretKey tilde_keygen(unsigned m, unsigned t, std::size_t w, std::string_view gamma_id,
                            std::string_view hash_id, RandomSource& rng)
{
    GoppaCode code = goppa_keygen(m, t, rng);
    InvertiblePair s = rand_invertible(code.redundancy(), rng);
    Permutation p = Permutation::random(code.n(), rng);
    return make_tilde_keys(std::move(code), s, std::move(p), w, gamma_id, hash_id);
}

TildeSignature tilde_sign(Bytes msg, const TildeSecretKey& sk)
{
    BitVector d = tilde_digest(msg, sk.pub);
    auto e = patterson_decode(sk.code, mat_vec(sk.s_inv, d));
    if (!e)
        throw InvariantViolation("CFS-tilde digest failed to decode; gamma or key is broken");
    return {sk.p.apply(*e)};
}

PublicKey public_key_of(const SecretKey& sk)
{
    return std::visit([](const auto& k) -> PublicKey { return k.pub; }, sk);
}

Scheme scheme_of(const SecretKey& sk) { return scheme_of(public_key_of(sk)); }

SignatureRecord sign(Bytes msg, const SecretKey& sk, RandomSource& rng)
{
    if (auto* c = std::get_if<CfsSecretKey>(&sk)) {
        if (c->pub.scheme == Scheme::cfs)
            return SignatureRecord::of(cfs_sign(msg, *c));
        return SignatureRecord::of(Scheme::mcfs, mcfs_sign(msg, *c, rng));
    }
    if (auto* k = std::get_if<McfscSecretKey>(&sk))
        return SignatureRecord::of(Scheme::mcfsc, mcfsc_sign(msg, *k, rng));
    return SignatureRecord::of(tilde_sign(msg, std::get<TildeSecretKey>(sk)));
}

namespace {

void write_code(detail::TextWriter& w, const GoppaCode& code, const Permutation& p)
{
    w.list("goppa_poly", code.goppa_polynomial().coefficients());
    w.list("support", code.support());
    w.list("permutation", p.mapping());
}

GoppaCode read_code(const detail::TextRecord& rec, unsigned m, unsigned t)
{
    auto coeffs = rec.uint_list("goppa_poly");
    auto support = rec.uint_list("support");
    if (coeffs.size() != t + 1)
        throw FormatError("goppa_poly must have t+1 coefficients");
    std::vector<Field::Elem> g(coeffs.begin(), coeffs.end());
    std::vector<Field::Elem> sup;
    for (auto x : support) {
        if (x > 0xffff)
            throw FormatError("support element out of range");
        sup.push_back(static_cast<Field::Elem>(x));
    }
    for (auto c : coeffs)
        if (c > 0xffff)
            throw FormatError("goppa_poly coefficient out of range");
    return GoppaCode(m, FieldPoly(std::move(g)), std::move(sup));
}

Permutation read_permutation(const detail::TextRecord& rec)
{
    auto raw = rec.uint_list("permutation");
    std::vector<std::size_t> map(raw.begin(), raw.end());
    try {
        return Permutation(std::move(map));
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

} // namespace

std::string write_secret_key(const SecretKey& sk)
{
    detail::TextWriter w(key_magic, format_version);
    w.field("kind", "secret");
    w.field("scheme", scheme_name(scheme_of(sk)));
    std::visit(
        [&](const auto& key) {
            using K = std::decay_t<decltype(key)>;
            w.field("m", key.code.m()).field("t", key.code.t());
            if constexpr (std::is_same_v<K, McfscSecretKey>) {
                w.field("w", key.pub.w());
                w.field("hash_basis",
                        key.pub.basis == HashBasis::public_matrix ? "public" : "secret");
            } else if constexpr (std::is_same_v<K, TildeSecretKey>) {
                w.field("w", key.pub.hash.w());
                w.field("hash_id", key.pub.hash_id).field("gamma_id", key.pub.gamma_id);
            }
            write_code(w, key.code, key.p);
            if constexpr (!std::is_same_v<K, McfscSecretKey>) {
                w.matrix("S", key.s);
                w.matrix("S_inv", key.s_inv);
            }
        },
        sk);
    return w.str();
}

SecretKey read_secret_key(std::string_view text)
{
    auto rec = detail::TextRecord::parse(text, key_magic, format_version);
    if (rec.field("kind") != "secret")
        throw FormatError("expected a secret key file");
    try {
        Scheme scheme = parse_scheme(rec.field("scheme"));
        unsigned m = rec.uint_field("m");
        unsigned t = rec.uint_field("t");
        GoppaCode code = read_code(rec, m, t);
        Permutation p = read_permutation(rec);
        if (scheme == Scheme::mcfsc) {
            const std::string& b = rec.field("hash_basis");
            if (b != "public" && b != "secret")
                throw FormatError("unknown hash basis '" + b + "'");
            return make_mcfsc_keys(std::move(code), std::move(p), rec.uint_field("w"),
                                   b == "public" ? HashBasis::public_matrix
                                                 : HashBasis::secret_matrix);
        }
        InvertiblePair s{rec.matrix("S"), rec.matrix("S_inv")};
        if (scheme == Scheme::tilde)
            return make_tilde_keys(std::move(code), s, std::move(p), rec.uint_field("w"),
                                   rec.field("gamma_id"), rec.field("hash_id"));
        return make_cfs_keys(std::move(code), s, std::move(p), scheme);
    } catch (const BadParameters& e) {
        throw FormatError(std::string("invalid secret key: ") + e.what());
    } catch (const DimensionError& e) {
        throw FormatError(std::string("invalid secret key: ") + e.what());
    }
}

} // namespace cfs
