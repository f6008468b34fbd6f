#include "cli.hpp"

#include "cfs/attacks.hpp"
#include "cfs/digest.hpp"
#include "cfs/errors.hpp"
#include "cfs/goppa.hpp"
#include "cfs/schemes_secret.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>

namespace cfs::cli {

namespace {

class UsageError : public Error {
public:
    using Error::Error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& data)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !out.write(data.data(), static_cast<std::streamsize>(data.size())))
        throw UsageError("cannot write '" + path + "'");
}

struct MessageSource {
    std::string file;
    std::string hex;
    bool hex_given = false;

    void attach(CLI::App& app)
    {
        auto* f = app.add_option("--msg", file, "message file (raw bytes)");
        auto* h = app.add_option("--msg-hex", hex, "message as hex");
        h->each([this](const std::string&) { hex_given = true; });
        f->excludes(h);
    }

    ByteString load() const
    {
        if (hex_given)
            return hex_to_bytes(hex);
        if (file.empty())
            throw UsageError("one of --msg or --msg-hex is required");
        std::string raw = read_file(file);
        return ByteString(raw.begin(), raw.end());
    }
};

RandomSource rng_for(const std::optional<std::uint64_t>& seed)
{
    return seed ? RandomSource(*seed) : RandomSource::from_entropy();
}

struct KeygenArgs {
    std::string scheme;
    unsigned m = 0;
    unsigned t = 0;
    std::optional<std::size_t> w;
    std::optional<std::string> gamma;
    std::optional<std::string> hash;
    std::string basis = "public";
    std::string pub_path;
    std::string sec_path;
};

int do_keygen(const KeygenArgs& a, const std::optional<std::uint64_t>& seed, std::ostream& out)
{
    Scheme scheme = parse_scheme(a.scheme);
    bool wants_w = scheme == Scheme::mcfsc || scheme == Scheme::tilde;
    if (wants_w && !a.w)
        throw UsageError(std::string(scheme_name(scheme)) + " requires -w");
    if (!wants_w && a.w)
        throw UsageError("-w only applies to mcfsc and tilde");
    if (scheme != Scheme::tilde && a.gamma)
        throw UsageError("--gamma only applies to tilde");
    if (scheme != Scheme::tilde && a.hash && *a.hash != (scheme == Scheme::mcfsc
                                                             ? md_stopped_hash_id
                                                             : sha256_hash_id))
        throw UsageError("--hash is fixed for " + std::string(scheme_name(scheme)));
    if (scheme != Scheme::mcfsc && a.basis != "public")
        throw UsageError("--hash-basis only applies to mcfsc");
    if (a.basis != "public" && a.basis != "secret")
        throw UsageError("--hash-basis must be public or secret");

    RandomSource rng = rng_for(seed);
    std::optional<SecretKey> sk;
    switch (scheme) {
    case Scheme::cfs:
    case Scheme::mcfs:
        sk.emplace(cfs_keygen(a.m, a.t, rng, scheme));
        break;
    case Scheme::mcfsc:
        sk.emplace(mcfsc_keygen(a.m, a.t, *a.w, rng,
                                a.basis == "public" ? HashBasis::public_matrix
                                                    : HashBasis::secret_matrix));
        break;
    case Scheme::tilde:
        sk.emplace(tilde_keygen(a.m, a.t, *a.w, a.gamma.value_or(std::string(delta_gamma_id)),
                                a.hash.value_or(std::string(md_stopped_hash_id)), rng));
        break;
    }
    write_file(a.pub_path, write_public_key(public_key_of(*sk)));
    write_file(a.sec_path, write_secret_key(*sk));
    out << "keygen scheme=" << scheme_name(scheme) << " m=" << a.m << " t=" << a.t
        << " n=" << (1u << a.m) << " n-k=" << a.m * a.t << "\n";
    return exit_ok;
}

int do_sign(const std::string& sec_path, const MessageSource& msg_src,
            const std::string& out_path, const std::optional<std::uint64_t>& seed,
            std::ostream& out)
{
    SecretKey sk = read_secret_key(read_file(sec_path));
    ByteString msg = msg_src.load();
    RandomSource rng = rng_for(seed);
    SignatureRecord sig = sign(msg, sk, rng);
    write_file(out_path, write_signature(sig));
    out << "signed scheme=" << scheme_name(sig.scheme) << " weight=" << sig.error.weight()
        << "\n";
    return exit_ok;
}

int do_verify(const std::string& pub_path, const MessageSource& msg_src,
              const std::string& sig_path, std::ostream& out)
{
    PublicKey pk = read_public_key(read_file(pub_path));
    SignatureRecord sig = read_signature(read_file(sig_path));
    ByteString msg = msg_src.load();
    bool ok = verify(msg, sig, pk);
    out << (ok ? "valid" : "invalid") << "\n";
    return ok ? exit_ok : exit_failure;
}

int do_forge(const std::string& scheme_str, const std::string& pub_path,
             const MessageSource& msg_src, const std::string& out_path,
             const std::string& transcript_path, const std::optional<std::uint64_t>& seed,
             std::ostream& out)
{
    Scheme scheme = parse_scheme(scheme_str);
    PublicKey pk = read_public_key(read_file(pub_path));
    if (scheme_of(pk) != scheme)
        throw UsageError("public key belongs to scheme " + std::string(scheme_name(scheme_of(pk))));
    ByteString msg = msg_src.load();
    SignatureRecord sig;
    OperationCount cost;
    if (scheme == Scheme::mcfsc) {
        RandomSource rng = rng_for(seed);
        auto f = forge_mcfsc(msg, std::get<McfscPublicKey>(pk), rng);
        sig = SignatureRecord::of(Scheme::mcfsc, f.signature);
        cost = f.cost;
    } else if (scheme == Scheme::tilde) {
        auto f = forge_tilde(msg, std::get<TildePublicKey>(pk));
        sig = SignatureRecord::of(f.signature);
        cost = f.cost;
    } else {
        throw UsageError("no forgery exists for scheme " + scheme_str);
    }
    bool ok = verify(msg, sig, pk);
    write_file(out_path, write_signature(sig));
    std::string transcript = forgery_transcript(scheme, msg, sig, ok, cost);
    if (!transcript_path.empty())
        write_file(transcript_path, transcript + "\n");
    out << transcript << "\n";
    return ok ? exit_ok : exit_failure;
}

int do_recover_perm(const std::string& pub_path, const std::string& matrix_path,
                    std::ostream& out)
{
    PublicKey pk = read_public_key(read_file(pub_path));
    std::optional<BitMatrix> leaked;
    if (!matrix_path.empty()) {
        // a public key file whose H_pub is the leaked H also works
        leaked = std::visit([](const auto& k) { return k.h_pub; },
                            read_public_key(read_file(matrix_path)));
    } else if (auto* k = std::get_if<McfscPublicKey>(&pk);
               k && k->basis == HashBasis::secret_matrix) {
        leaked = k->hash.matrix();
    } else {
        throw UsageError("need --leaked, or an mcfsc key hashed over the secret matrix");
    }
    const BitMatrix& h_pub = std::visit([](const auto& k) -> const BitMatrix& { return k.h_pub; },
                                        pk);
    try {
        auto rec = recover_permutation(*leaked, h_pub);
        nlohmann::ordered_json j;
        j["permutation"] = std::vector<std::size_t>(rec.permutation.mapping().begin(),
                                                    rec.permutation.mapping().end());
        j["ambiguous"] = rec.ambiguous;
        j["comparisons"] = rec.comparisons;
        j["n"] = h_pub.cols();
        out << j.dump() << "\n";
        return exit_ok;
    } catch (const NoPermutation& e) {
        out << "{\"error\":\"no permutation\"}\n";
        return exit_failure;
    }
}

int do_census(unsigned m, unsigned t, const std::optional<std::uint64_t>& seed, bool json,
              std::ostream& out)
{
    RandomSource rng = rng_for(seed);
    GoppaCode code = goppa_keygen(m, t, rng);
    CensusReport rep = decodable_census(code);
    if (json) {
        out << rep.to_json() << "\n";
    } else {
        std::ostringstream s;
        s << "decodable=" << rep.decodable << " total=" << rep.total << " ratio=" << rep.ratio
          << " closed_form=" << rep.closed_form << " approx=" << rep.t_factorial_approx << "\n";
        out << s.str();
    }
    return rep.matches_closed_form() ? exit_ok : exit_failure;
}

int do_bench(unsigned m, unsigned t, std::size_t w, std::size_t count,
             const std::optional<std::uint64_t>& seed, std::ostream& out)
{
    RandomSource rng = rng_for(seed);
    CfsSecretKey cfs_key = cfs_keygen(m, t, rng);
    McfscSecretKey mcfsc_key = mcfsc_keygen(m, t, w, rng);
    std::uint64_t cfs_total = 0, cfs_max = 0, mcfsc_total = 0, mcfsc_max = 0;
    for (std::size_t i = 0; i < count; ++i) {
        ByteString msg = rng.bytes(16);
        {
            CountingScope scope;
            cfs_sign(msg, cfs_key);
            cfs_total += scope.counts().decodes;
            cfs_max = std::max(cfs_max, scope.counts().decodes);
        }
        {
            CountingScope scope;
            mcfsc_sign(msg, mcfsc_key, rng);
            mcfsc_total += scope.counts().decodes;
            mcfsc_max = std::max(mcfsc_max, scope.counts().decodes);
        }
    }
    double fact = 1;
    for (unsigned i = 2; i <= t; ++i)
        fact *= i;
    nlohmann::ordered_json j;
    j["m"] = m;
    j["t"] = t;
    j["w"] = w;
    j["count"] = count;
    j["cfs_mean_attempts"] = count ? static_cast<double>(cfs_total) / count : 0.0;
    j["cfs_max_attempts"] = cfs_max;
    j["t_factorial"] = fact;
    j["mcfsc_mean_attempts"] = count ? static_cast<double>(mcfsc_total) / count : 0.0;
    j["mcfsc_max_attempts"] = mcfsc_max;
    out << j.dump() << "\n";
    return exit_ok;
}

int do_hash_vectors(const std::string& pub_path, std::size_t count,
                    const std::optional<std::uint64_t>& seed, std::ostream& out)
{
    PublicKey pk = read_public_key(read_file(pub_path));
    const HashConfig* cfg = nullptr;
    if (auto* k = std::get_if<McfscPublicKey>(&pk))
        cfg = &k->hash;
    else if (auto* k2 = std::get_if<TildePublicKey>(&pk))
        cfg = &k2->hash;
    else
        throw UsageError("hash vectors need an mcfsc or tilde public key");
    RandomSource rng = rng_for(seed);
    for (std::size_t i = 0; i < count; ++i) {
        ByteString msg = rng.bytes(i % 24);
        std::string line = format_test_vector(msg, *cfg);
        out << line << "\n";
    }
    return exit_ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"CFS-family code-based signatures, the code-based hash, and forgeries", "cfs"};
    app.require_subcommand(1);

    std::optional<std::uint64_t> seed;
    auto add_seed = [&](CLI::App* sub) {
        sub->add_option("--seed", seed, "RNG seed (bit-exact reruns)");
    };

    KeygenArgs kg;
    auto* keygen = app.add_subcommand("keygen", "generate a key pair");
    keygen->add_option("--scheme", kg.scheme, "cfs | mcfs | mcfsc | tilde")->required();
    keygen->add_option("-m", kg.m, "field degree, n = 2^m")->required();
    keygen->add_option("-t", kg.t, "error weight")->required();
    keygen->add_option("-w", kg.w, "hash block count (mcfsc, tilde)");
    keygen->add_option("--gamma", kg.gamma, "weight map for tilde: delta | cw-rank");
    keygen->add_option("--hash", kg.hash, "inner hash for tilde: code-md | sha256");
    keygen->add_option("--hash-basis", kg.basis, "mcfsc hash matrix: public | secret");
    keygen->add_option("--pub", kg.pub_path, "public key output")->required();
    keygen->add_option("--sec", kg.sec_path, "secret key output")->required();
    add_seed(keygen);

    std::string sec_path, pub_path, out_path, sig_path, transcript_path, scheme_str, leaked_path;
    MessageSource msg_src;
    auto* sign_cmd = app.add_subcommand("sign", "sign a message");
    sign_cmd->add_option("--sec", sec_path, "secret key file")->required();
    sign_cmd->add_option("--out", out_path, "signature output")->required();
    msg_src.attach(*sign_cmd);
    add_seed(sign_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "verify a signature (public key only)");
    verify_cmd->add_option("--pub", pub_path, "public key file")->required();
    verify_cmd->add_option("--sig", sig_path, "signature file")->required();
    msg_src.attach(*verify_cmd);

    auto* forge_cmd = app.add_subcommand("forge", "forge a signature from the public key");
    forge_cmd->add_option("--scheme", scheme_str, "mcfsc | tilde")->required();
    forge_cmd->add_option("--pub", pub_path, "public key file")->required();
    forge_cmd->add_option("--out", out_path, "signature output")->required();
    forge_cmd->add_option("--transcript", transcript_path, "JSON transcript output");
    msg_src.attach(*forge_cmd);
    add_seed(forge_cmd);

    auto* recover_cmd =
        app.add_subcommand("recover-perm", "recover P from a leaked H and H_pub = H*P");
    recover_cmd->add_option("--pub", pub_path, "public key file")->required();
    recover_cmd->add_option("--leaked", leaked_path,
                            "public-key-format file whose H_pub holds the leaked H");

    unsigned m = 0, t = 0;
    std::size_t w = 0, count = 0;
    bool json = false;
    auto* census_cmd = app.add_subcommand("census", "count decodable syndromes exhaustively");
    census_cmd->add_option("-m", m, "field degree")->required();
    census_cmd->add_option("-t", t, "error weight")->required();
    census_cmd->add_flag("--json", json, "emit a JSON record");
    add_seed(census_cmd);

    auto* bench_cmd = app.add_subcommand("bench", "CFS vs mCFS_c signing attempts");
    bench_cmd->add_option("-m", m, "field degree")->required();
    bench_cmd->add_option("-t", t, "error weight")->required();
    bench_cmd->add_option("-w", w, "mCFS_c block count")->required();
    bench_cmd->add_option("--count", count, "messages to sign")->default_val(200);
    add_seed(bench_cmd);

    auto* vectors_cmd = app.add_subcommand("hash-vectors", "emit code-based hash test vectors");
    vectors_cmd->add_option("--pub", pub_path, "mcfsc or tilde public key")->required();
    vectors_cmd->add_option("--count", count, "number of vectors")->default_val(16);
    add_seed(vectors_cmd);

    std::vector<std::string> storage;
    storage.reserve(args.size() + 1);
    storage.push_back("cfs");
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage)
        argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    try {
        if (*keygen)
            return do_keygen(kg, seed, out);
        if (*sign_cmd)
            return do_sign(sec_path, msg_src, out_path, seed, out);
        if (*verify_cmd)
            return do_verify(pub_path, msg_src, sig_path, out);
        if (*forge_cmd)
            return do_forge(scheme_str, pub_path, msg_src, out_path, transcript_path, seed, out);
        if (*recover_cmd)
            return do_recover_perm(pub_path, leaked_path, out);
        if (*census_cmd)
            return do_census(m, t, seed, json, out);
        if (*bench_cmd)
            return do_bench(m, t, w, count, seed, out);
        if (*vectors_cmd)
            return do_hash_vectors(pub_path, count, seed, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const FormatError& e) {
        err << "error: malformed input: " << e.what() << "\n";
        return exit_usage;
    } catch (const BadParameters& e) {
        err << "error: bad parameters: " << e.what() << "\n";
        return exit_usage;
    } catch (const CensusInfeasible& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_failure;
    }
    return exit_usage;
}

} // namespace cfs::cli
