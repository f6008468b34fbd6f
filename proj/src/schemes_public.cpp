#include "cfs/schemes_public.hpp"

#include "cfs/digest.hpp"
#include "cfs/errors.hpp"
#include "text_record.hpp"

#include <utility>

namespace cfs {

namespace {

constexpr std::string_view key_magic = "cfs-key";
constexpr std::string_view sig_magic = "cfs-sig";
constexpr int format_version = 1;

bool weight_ok(const BitVector& error, std::size_t n, unsigned t)
{
    return error.size() == n && error.weight() <= t;
}

std::string_view basis_name(HashBasis b)
{
    return b == HashBasis::public_matrix ? "public" : "secret";
}

} // namespace

std::string_view scheme_name(Scheme s)
{
    switch (s) {
    case Scheme::cfs:
        return "cfs";
    case Scheme::mcfs:
        return "mcfs";
    case Scheme::mcfsc:
        return "mcfsc";
    case Scheme::tilde:
        return "tilde";
    }
    return "?";
}

Scheme parse_scheme(std::string_view name)
{
    for (Scheme s : {Scheme::cfs, Scheme::mcfs, Scheme::mcfsc, Scheme::tilde})
        if (scheme_name(s) == name)
            return s;
    throw BadParameters("unknown scheme '" + std::string(name) + "'");
}

GammaMap TildePublicKey::gamma() const { return make_gamma(gamma_id, hash.layout(), t); }

InnerHash TildePublicKey::inner_hash() const { return make_inner_hash(hash_id, hash); }

ByteString append_u64(Bytes msg, std::uint64_t value)
{
    ByteString out(msg.begin(), msg.end());
    for (int k = 0; k < 8; ++k)
        out.push_back(static_cast<std::uint8_t>(value >> (56 - 8 * k)));
    return out;
}

BitVector cfs_digest(Bytes msg, std::uint64_t counter, const CfsPublicKey& pk)
{
    if (pk.hash_id != sha256_hash_id)
        throw BadParameters("unsupported CFS hash '" + pk.hash_id + "'");
    return expand_digest(append_u64(msg, counter), pk.redundancy());
}

ByteString mcfsc_outer_message(Bytes msg, std::uint64_t nonce, const McfscPublicKey& pk)
{
    return append_u64(md_hash(msg, pk.hash).to_bytes(), nonce);
}

BitVector mcfsc_digest(Bytes msg, std::uint64_t nonce, const McfscPublicKey& pk)
{
    return md_hash(mcfsc_outer_message(msg, nonce, pk), pk.hash);
}

BitVector tilde_digest(Bytes msg, const TildePublicKey& pk)
{
    return hbar(msg, pk.h_pub, pk.gamma(), pk.inner_hash());
}

std::uint64_t max_nonce(std::size_t redundancy)
{
    if (redundancy >= 64)
        throw BadParameters("nonce range 2^(n-k) does not fit 64 bits");
    return std::uint64_t{1} << redundancy;
}

bool cfs_verify(Bytes msg, const CfsSignature& sig, const CfsPublicKey& pk)
{
    if (!weight_ok(sig.error, pk.n(), pk.t))
        return false;
    return cfs_digest(msg, sig.counter, pk) == mat_vec(pk.h_pub, sig.error);
}

bool mcfs_verify(Bytes msg, const McfsSignature& sig, const CfsPublicKey& pk)
{
    if (!weight_ok(sig.error, pk.n(), pk.t))
        return false;
    if (sig.nonce < 1 || sig.nonce > max_nonce(pk.redundancy()))
        return false;
    return cfs_digest(msg, sig.nonce, pk) == mat_vec(pk.h_pub, sig.error);
}

bool mcfsc_verify(Bytes msg, const McfsSignature& sig, const McfscPublicKey& pk)
{
    if (!weight_ok(sig.error, pk.n(), pk.t))
        return false;
    if (sig.nonce < 1 || sig.nonce > max_nonce(pk.redundancy()))
        return false;
    return mcfsc_digest(msg, sig.nonce, pk) == mat_vec(pk.h_pub, sig.error);
}

bool tilde_verify(Bytes msg, const TildeSignature& sig, const TildePublicKey& pk)
{
    if (!weight_ok(sig.error, pk.n(), pk.t))
        return false;
    return tilde_digest(msg, pk) == mat_vec(pk.h_pub, sig.error);
}

Scheme scheme_of(const PublicKey& pk)
{
    if (auto* c = std::get_if<CfsPublicKey>(&pk))
        return c->scheme;
    return std::holds_alternative<McfscPublicKey>(pk) ? Scheme::mcfsc : Scheme::tilde;
}

SignatureRecord SignatureRecord::of(const CfsSignature& sig)
{
    return {Scheme::cfs, sig.counter, sig.error};
}

SignatureRecord SignatureRecord::of(Scheme scheme, const McfsSignature& sig)
{
    return {scheme, sig.nonce, sig.error};
}

SignatureRecord SignatureRecord::of(const TildeSignature& sig)
{
    return {Scheme::tilde, std::nullopt, sig.error};
}

std::string SignatureRecord::to_hex() const
{
    ByteString bytes;
    if (tag)
        bytes = append_u64({}, *tag);
    auto e = error.to_bytes();
    bytes.insert(bytes.end(), e.begin(), e.end());
    return bytes_to_hex(bytes);
}

bool verify(Bytes msg, const SignatureRecord& sig, const PublicKey& pk)
{
    if (sig.scheme != scheme_of(pk))
        return false;
    switch (sig.scheme) {
    case Scheme::cfs:
        return sig.tag && cfs_verify(msg, {*sig.tag, sig.error}, std::get<CfsPublicKey>(pk));
    case Scheme::mcfs:
        return sig.tag && mcfs_verify(msg, {*sig.tag, sig.error}, std::get<CfsPublicKey>(pk));
    case Scheme::mcfsc:
        return sig.tag && mcfsc_verify(msg, {*sig.tag, sig.error}, std::get<McfscPublicKey>(pk));
    case Scheme::tilde:
        return !sig.tag && tilde_verify(msg, {sig.error}, std::get<TildePublicKey>(pk));
    }
    return false;
}

std::string write_matrix(std::string_view name, const BitMatrix& m)
{
    std::string out = "matrix " + std::string(name) + " " + std::to_string(m.rows()) + " " +
                      std::to_string(m.cols()) + "\n";
    for (std::size_t r = 0; r < m.rows(); ++r)
        out += m.row(r).to_hex() + "\n";
    return out;
}

std::string write_public_key(const PublicKey& pk)
{
    detail::TextWriter w(key_magic, format_version);
    w.field("kind", "public");
    w.field("scheme", scheme_name(scheme_of(pk)));
    std::visit(
        [&](const auto& key) {
            using K = std::decay_t<decltype(key)>;
            w.field("m", key.m).field("t", key.t);
            if constexpr (std::is_same_v<K, CfsPublicKey>) {
                w.field("hash_id", key.hash_id);
            } else if constexpr (std::is_same_v<K, McfscPublicKey>) {
                w.field("w", key.w()).field("hash_id", md_stopped_hash_id);
                w.field("hash_basis", basis_name(key.basis));
            } else {
                w.field("w", key.hash.w()).field("hash_id", key.hash_id);
                w.field("gamma_id", key.gamma_id);
            }
            w.matrix("H_pub", key.h_pub);
            if constexpr (std::is_same_v<K, McfscPublicKey>) {
                if (key.basis == HashBasis::secret_matrix)
                    w.matrix("H_hash", key.hash.matrix());
            }
        },
        pk);
    return w.str();
}

namespace {

void check_shape(const BitMatrix& h, unsigned m, unsigned t)
{
    if (m < 2 || m > 16 || t < 1)
        throw FormatError("key parameters out of range");
    if (h.cols() != (std::size_t{1} << m) || h.rows() != static_cast<std::size_t>(m) * t)
        throw FormatError("H_pub shape does not match m and t");
}

} // namespace

PublicKey read_public_key(std::string_view text)
{
    auto rec = detail::TextRecord::parse(text, key_magic, format_version);
    if (rec.field("kind") != "public")
        throw FormatError("expected a public key file");
    Scheme scheme;
    try {
        scheme = parse_scheme(rec.field("scheme"));
    } catch (const BadParameters& e) {
        throw FormatError(e.what());
    }
    unsigned m = rec.uint_field("m");
    unsigned t = rec.uint_field("t");
    const BitMatrix& h_pub = rec.matrix("H_pub");
    check_shape(h_pub, m, t);
    try {
        switch (scheme) {
        case Scheme::cfs:
        case Scheme::mcfs: {
            std::string hash_id = rec.field("hash_id");
            if (hash_id != sha256_hash_id)
                throw FormatError("unsupported CFS hash '" + hash_id + "'");
            return CfsPublicKey{scheme, m, t, h_pub, hash_id};
        }
        case Scheme::mcfsc: {
            std::size_t w = rec.uint_field("w");
            if (w >= t)
                throw FormatError("mCFS_c requires w < t");
            if (rec.field("hash_id") != md_stopped_hash_id)
                throw FormatError("mCFS_c uses the code-based hash");
            const std::string& b = rec.field("hash_basis");
            HashBasis basis;
            if (b == "public")
                basis = HashBasis::public_matrix;
            else if (b == "secret")
                basis = HashBasis::secret_matrix;
            else
                throw FormatError("unknown hash basis '" + b + "'");
            const BitMatrix& hm = basis == HashBasis::public_matrix ? h_pub : rec.matrix("H_hash");
            if (hm.rows() != h_pub.rows() || hm.cols() != h_pub.cols())
                throw FormatError("H_hash shape mismatch");
            return McfscPublicKey{m, t, h_pub, basis, HashConfig(hm, w)};
        }
        case Scheme::tilde: {
            std::size_t w = rec.uint_field("w");
            TildePublicKey pk{m, t, h_pub, rec.field("gamma_id"), rec.field("hash_id"),
                              HashConfig(h_pub, w)};
            // resolve both ids now so a bad key fails at load time
            pk.gamma();
            pk.inner_hash();
            return pk;
        }
        }
    } catch (const BadParameters& e) {
        throw FormatError(std::string("invalid key parameters: ") + e.what());
    }
    throw FormatError("unreachable scheme");
}

std::string write_signature(const SignatureRecord& sig)
{
    detail::TextWriter w(sig_magic, format_version);
    w.field("scheme", scheme_name(sig.scheme));
    w.field("n", sig.error.size());
    if (sig.tag)
        w.u64_hex(sig.scheme == Scheme::cfs ? "counter" : "nonce", *sig.tag);
    w.field("error", sig.error.to_hex());
    return w.str();
}

SignatureRecord read_signature(std::string_view text)
{
    auto rec = detail::TextRecord::parse(text, sig_magic, format_version);
    SignatureRecord sig;
    try {
        sig.scheme = parse_scheme(rec.field("scheme"));
    } catch (const BadParameters& e) {
        throw FormatError(e.what());
    }
    std::size_t n = rec.uint_field("n");
    if (n == 0 || n > (std::size_t{1} << 16))
        throw FormatError("signature length out of range");
    switch (sig.scheme) {
    case Scheme::cfs:
        sig.tag = rec.u64_hex_field("counter");
        break;
    case Scheme::mcfs:
    case Scheme::mcfsc:
        sig.tag = rec.u64_hex_field("nonce");
        break;
    case Scheme::tilde:
        if (rec.has("counter") || rec.has("nonce"))
            throw FormatError("CFS-tilde signatures carry no counter or nonce");
        break;
    }
    sig.error = BitVector::from_hex(rec.field("error"), n);
    return sig;
}

} // namespace cfs
