// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Parameters are the desk-scale ones (m=4, t=3, w=2 unless
// a criterion says otherwise).

#include "cfs/attacks.hpp"
#include "cfs/metrics.hpp"
#include "cfs/schemes_secret.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace cfs;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(const char* f, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

Outcome ac1_census()
{
    auto start = std::chrono::steady_clock::now();
    RandomSource rng(1001);
    GoppaCode code = goppa_keygen(4, 2, rng);
    CensusReport rep = decodable_census(code);
    double secs = seconds_since(start);
    bool pass = rep.decodable == 137 && rep.total == 256 && rep.ratio == 0.53515625 &&
                rep.closed_form == oracle::binomial_sum(16, 2) && secs < 10.0;
    return {pass, fmt("census m=4 t=2: %zu/%zu decodable, ratio %.8f (closed form %zu, 1/t! = "
                      "%.3f), %.2f s",
                      static_cast<std::size_t>(rep.decodable), static_cast<std::size_t>(rep.total),
                      rep.ratio, static_cast<std::size_t>(rep.closed_form),
                      rep.t_factorial_approx, secs)};
}

Outcome ac2_cfs_attempts()
{
    auto start = std::chrono::steady_clock::now();
    RandomSource rng(1002);
    const int keys = 10, per_key = 100;
    std::uint64_t attempts = 0;
    for (int k = 0; k < keys; ++k) {
        CfsSecretKey sk = cfs_keygen(4, 3, rng);
        for (int i = 0; i < per_key; ++i) {
            ByteString msg = rng.bytes(16);
            CountingScope scope;
            cfs_sign(msg, sk);
            attempts += scope.counts().decodes;
        }
    }
    double secs = seconds_since(start);
    double mean = static_cast<double>(attempts) / (keys * per_key);
    bool pass = mean >= 4.5 && mean <= 7.5 && secs < 60.0;
    return {pass, fmt("CFS m=4 t=3: mean attempts %.3f over %d signatures (t! = 6, exact "
                      "4096/697 = %.3f), %.2f s",
                      mean, keys * per_key, 4096.0 / 697, secs)};
}

Outcome ac3_round_trips()
{
    RandomSource rng(1003);
    const int trials = 200;
    int ok[5] = {};
    CfsSecretKey cfs = cfs_keygen(4, 3, rng);
    CfsSecretKey mcfs = cfs_keygen(4, 3, rng, Scheme::mcfs);
    McfscSecretKey mcfsc = mcfsc_keygen(4, 3, 2, rng);
    TildeSecretKey tilde = tilde_keygen(4, 3, 2, "delta", "code-md", rng);
    TildeSecretKey tilde_cw = tilde_keygen(4, 3, 2, "cw-rank", "sha256", rng);
    for (int i = 0; i < trials; ++i) {
        ByteString msg = rng.bytes(rng.below(64));
        ok[0] += cfs_verify(msg, cfs_sign(msg, cfs), cfs.pub);
        ok[1] += mcfs_verify(msg, mcfs_sign(msg, mcfs, rng), mcfs.pub);
        ok[2] += mcfsc_verify(msg, mcfsc_sign(msg, mcfsc, rng), mcfsc.pub);
        ok[3] += tilde_verify(msg, tilde_sign(msg, tilde), tilde.pub);
        ok[4] += tilde_verify(msg, tilde_sign(msg, tilde_cw), tilde_cw.pub);
    }
    bool pass = true;
    for (int v : ok)
        pass = pass && v == trials;
    return {pass, fmt("round trips m=4 t=3 w=2: cfs %d/%d, mcfs %d/%d, mcfsc %d/%d, "
                      "tilde(delta,code-md) %d/%d, tilde(cw-rank,sha256) %d/%d",
                      ok[0], trials, ok[1], trials, ok[2], trials, ok[3], trials, ok[4], trials)};
}

Outcome ac4_compress_exhaustive()
{
    RandomSource rng(1004);
    const int keys = 20;
    int states = 0, mismatches = 0, exceptions = 0;
    for (int k = 0; k < keys; ++k) {
        HashConfig cfg(goppa_keygen(4, 3, rng).parity_check(), 2);
        for (std::uint64_t v = 0; v < 64; ++v) {
            ++states;
            try {
                BitVector x = BitVector::from_uint(v, 6);
                BitVector d = delta_t(x, cfg.layout());
                if (compress(x, cfg) != oracle::mat_vec(cfg.matrix(), d) || d.weight() != 2)
                    ++mismatches;
            } catch (const std::exception&) {
                ++exceptions;
            }
        }
    }
    bool pass = mismatches == 0 && exceptions == 0 && states == keys * 64;
    return {pass, fmt("compress(x) = H*delta(x), weight w=2: %d states (2^6 x %d keys), %d "
                      "mismatches, %d exceptions",
                      states, keys, mismatches, exceptions)};
}

Outcome ac5_forge_mcfsc()
{
    RandomSource rng(1005);
    const int keys = 20, per_key = 25;
    int verified = 0, cheaper = 0;
    std::uint64_t decodes = 0, forged_comp = 0, honest_comp = 0;
    for (int k = 0; k < keys; ++k) {
        McfscSecretKey sk = mcfsc_keygen(4, 3, 2, rng);
        for (int i = 0; i < per_key; ++i) {
            ByteString msg = rng.bytes(rng.below(64));
            auto f = forge_mcfsc(msg, sk.pub, rng);
            verified += mcfsc_verify(msg, f.signature, sk.pub);
            decodes += f.cost.decodes;
            CountingScope honest;
            mcfsc_sign_with_nonce(msg, sk, f.signature.nonce);
            cheaper += f.cost.compressions < honest.counts().compressions;
            forged_comp += f.cost.compressions;
            honest_comp += honest.counts().compressions;
        }
    }
    const int total = keys * per_key;
    bool pass = verified == total && decodes == 0 && cheaper == total;
    return {pass, fmt("forge_mcfsc: %d/%d verified over %d keys, %llu decodes, fewer compressions "
                      "in %d/%d (mean %.2f forged vs %.2f honest)",
                      verified, total, keys, static_cast<unsigned long long>(decodes), cheaper,
                      total, static_cast<double>(forged_comp) / total,
                      static_cast<double>(honest_comp) / total)};
}

Outcome ac6_forge_tilde()
{
    RandomSource rng(1006);
    const int keys = 20, per_key = 25;
    bool pass = true;
    std::string detail = "forge_tilde (random S, P):";
    for (std::string_view gamma : {"delta", "cw-rank"}) {
        for (std::string_view hash : {"code-md", "sha256"}) {
            int verified = 0;
            std::uint64_t decodes = 0;
            for (int k = 0; k < keys; ++k) {
                TildeSecretKey sk = tilde_keygen(4, 3, 2, gamma, hash, rng);
                for (int i = 0; i < per_key; ++i) {
                    ByteString msg = rng.bytes(rng.below(64));
                    auto f = forge_tilde(msg, sk.pub);
                    verified += tilde_verify(msg, f.signature, sk.pub);
                    decodes += f.cost.decodes;
                }
            }
            pass = pass && verified == keys * per_key && decodes == 0;
            detail += fmt(" %s/%s %d/%d (%llu decodes);", std::string(gamma).c_str(),
                          std::string(hash).c_str(), verified, keys * per_key,
                          static_cast<unsigned long long>(decodes));
        }
    }
    detail.pop_back();
    return {pass, detail};
}

Outcome ac7_recover_permutation()
{
    RandomSource rng(1007);
    const int keys = 100;
    int exact = 0, distinct = 0;
    std::size_t max_cmp = 0;
    for (int k = 0; k < keys; ++k) {
        McfscSecretKey sk = mcfsc_keygen(4, 3, 2, rng, HashBasis::secret_matrix);
        const BitMatrix& h = sk.pub.hash.matrix();
        std::set<BitVector> cols;
        for (std::size_t j = 0; j < h.cols(); ++j)
            cols.insert(h.column(j));
        distinct += cols.size() == h.cols();
        PermutationRecovery rec = recover_permutation(h, sk.pub.h_pub);
        exact += rec.permutation == sk.p && !rec.ambiguous;
        max_cmp = std::max(max_cmp, rec.comparisons);
    }
    bool pass = exact == keys && distinct == keys && max_cmp <= 256;
    return {pass, fmt("recover_permutation m=4 t=3: exact P for %d/%d keys (%d with distinct "
                      "columns), max %zu comparisons (bound n^2 = 256)",
                      exact, keys, distinct, max_cmp)};
}

// Mutations flip one bit, drawn uniformly from the n error bits and the low
// 13 bits of the counter or nonce (enough to hold every nonce up to 2^12).
Outcome ac8_mutations()
{
    RandomSource rng(1008);
    const int mutations = 1000;
    const std::size_t tag_bits = 13;
    CfsSecretKey cfs = cfs_keygen(4, 3, rng);
    CfsSecretKey mcfs = cfs_keygen(4, 3, rng, Scheme::mcfs);
    McfscSecretKey mcfsc = mcfsc_keygen(4, 3, 2, rng);
    TildeSecretKey tilde = tilde_keygen(4, 3, 2, "delta", "code-md", rng);
    std::vector<SecretKey> keys{cfs, mcfs, mcfsc, tilde};

    bool pass = true;
    std::string detail = "rejected single-bit mutations:";
    for (const SecretKey& sk : keys) {
        PublicKey pk = public_key_of(sk);
        int rejected = 0, err_total = 0, err_rejected = 0, tag_total = 0, tag_rejected = 0;
        for (int i = 0; i < mutations; ++i) {
            ByteString msg = rng.bytes(16);
            SignatureRecord sig = sign(msg, sk, rng);
            const std::size_t n = sig.error.size();
            const std::size_t span = n + (sig.tag ? tag_bits : 0);
            std::size_t bit = static_cast<std::size_t>(rng.below(span));
            bool on_tag = bit >= n;
            if (on_tag)
                *sig.tag ^= std::uint64_t{1} << (bit - n);
            else
                sig.error.flip(bit);
            bool rej = !verify(msg, sig, pk);
            rejected += rej;
            (on_tag ? tag_total : err_total) += 1;
            (on_tag ? tag_rejected : err_rejected) += rej;
        }
        double rate = 100.0 * rejected / mutations;
        pass = pass && rate >= 99.0;
        detail += fmt(" %s %.1f%% (error %d/%d, tag %d/%d);",
                      std::string(scheme_name(scheme_of(sk))).c_str(), rate, err_rejected,
                      err_total, tag_rejected, tag_total);
    }
    detail.pop_back();
    return {pass, detail};
}

// Not a criterion: how often a flipped nonce is accepted by mCFS_c as the
// hash state s grows. Every mCFS_c digest is compress of an s-bit state.
std::string mcfsc_nonce_collisions()
{
    RandomSource rng(1010);
    std::string out = "mCFS_c nonce-flip acceptance by state size:";
    for (auto [m, t, w] : {std::tuple<unsigned, unsigned, std::size_t>{4, 3, 2}, {6, 4, 2},
                           {8, 4, 2}}) {
        McfscSecretKey sk = mcfsc_keygen(m, t, w, rng);
        int accepted = 0, tried = 0;
        const std::size_t r = sk.pub.redundancy();
        for (int i = 0; i < 400; ++i) {
            ByteString msg = rng.bytes(16);
            McfsSignature sig = mcfsc_sign(msg, sk, rng);
            for (std::size_t b = 0; b < r; ++b) {
                McfsSignature mut = sig;
                mut.nonce ^= std::uint64_t{1} << b;
                if (mut.nonce == 0 || mut.nonce > max_nonce(r))
                    continue;
                ++tried;
                accepted += mcfsc_verify(msg, mut, sk.pub);
            }
        }
        out += fmt(" m=%u t=%u w=%zu s=%zu: %.2f%%;", m, t, w, sk.pub.hash.state_bits(),
                   100.0 * accepted / tried);
    }
    out.pop_back();
    return out;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome ac9_cli_determinism()
{
    std::random_device rd;
    fs::path root = fs::temp_directory_path() / ("cfs_acceptance_" + std::to_string(rd()));
    const std::string cli = CFS_CLI_PATH;
    const std::vector<std::pair<std::string, std::string>> keygens{
        {"cfs", "--scheme cfs -m 4 -t 3"},
        {"mcfs", "--scheme mcfs -m 4 -t 3"},
        {"mcfsc", "--scheme mcfsc -m 4 -t 3 -w 2"},
        {"tilde", "--scheme tilde -m 4 -t 3 -w 2 --gamma cw-rank --hash sha256"},
    };
    std::vector<std::string> files;
    bool commands_ok = true;
    for (const char* run : {"a", "b"}) {
        fs::path dir = root / run;
        fs::create_directories(dir);
        auto sh = [&](const std::string& cmd) {
            commands_ok = commands_ok && std::system((cmd + " > /dev/null").c_str()) == 0;
        };
        for (const auto& [name, args] : keygens) {
            std::string pub = (dir / (name + ".pub")).string();
            std::string sec = (dir / (name + ".sec")).string();
            std::string sig = (dir / (name + ".sig")).string();
            sh(cli + " keygen " + args + " --seed 42 --pub " + pub + " --sec " + sec);
            sh(cli + " sign --sec " + sec + " --msg-hex 6d657373616765 --seed 43 --out " + sig);
            if (name == "mcfsc" || name == "tilde") {
                std::string forged = (dir / (name + ".forged")).string();
                std::string transcript = (dir / (name + ".json")).string();
                sh(cli + " forge --scheme " + name + " --pub " + pub +
                   " --msg-hex 666f72676564 --seed 44 --out " + forged + " --transcript " +
                   transcript);
                sh(cli + " verify --pub " + pub + " --sig " + forged + " --msg-hex 666f72676564");
            }
        }
    }
    int identical = 0, compared = 0;
    for (const auto& entry : fs::directory_iterator(root / "a")) {
        ++compared;
        fs::path other = root / "b" / entry.path().filename();
        identical += fs::exists(other) && slurp(entry.path()) == slurp(other) &&
                     !slurp(entry.path()).empty();
    }
    fs::remove_all(root);
    bool pass = commands_ok && compared == 16 && identical == compared;
    return {pass, fmt("CLI reruns with fixed seeds: %d/%d files byte-identical (keys, signatures, "
                      "forgeries, transcripts)%s",
                      identical, compared, commands_ok ? "" : "; a command failed")};
}

} // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"AC1", ac1_census},
        {"AC2", ac2_cfs_attempts},
        {"AC3", ac3_round_trips},
        {"AC4", ac4_compress_exhaustive},
        {"AC5", ac5_forge_mcfsc},
        {"AC6", ac6_forge_tilde},
        {"AC7", ac7_recover_permutation},
        {"AC8", ac8_mutations},
        {"AC9", ac9_cli_determinism},
    };
    int failed = 0;
    for (const auto& [id, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << id << " " << o.detail << std::endl;
    }
    std::cout << "[INFO] " << mcfsc_nonce_collisions() << std::endl;
    std::cout << (9 - failed) << "/9 criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
