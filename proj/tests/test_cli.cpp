#include "../tools/cli.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

namespace fs = std::filesystem;
using cfs::cli::run;

namespace {

struct TempDir {
    fs::path path;
    TempDir()
    {
        std::random_device rd;
        path = fs::temp_directory_path() / ("cfs_cli_test_" + std::to_string(rd()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
};

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

} // namespace

TEST_CASE("cli keygen, sign and verify for every scheme")
{
    TempDir dir;
    const std::vector<std::vector<std::string>> extra{
        {"--scheme", "cfs"},
        {"--scheme", "mcfs"},
        {"--scheme", "mcfsc", "-w", "2"},
        {"--scheme", "tilde", "-w", "2", "--gamma", "cw-rank", "--hash", "sha256"},
    };
    for (const auto& e : extra) {
        std::vector<std::string> args{"keygen", "-m", "4", "-t", "3", "--seed", "5",
                                      "--pub", dir / "k.pub", "--sec", dir / "k.sec"};
        args.insert(args.end(), e.begin(), e.end());
        REQUIRE(call(args).code == 0);
        REQUIRE(call({"sign", "--sec", dir / "k.sec", "--msg-hex", "c0ffee", "--seed", "1",
                      "--out", dir / "s.sig"})
                    .code == 0);
        Result ok = call({"verify", "--pub", dir / "k.pub", "--sig", dir / "s.sig",
                          "--msg-hex", "c0ffee"});
        CHECK(ok.code == 0);
        Result bad = call({"verify", "--pub", dir / "k.pub", "--sig", dir / "s.sig",
                           "--msg-hex", "c0ffef"});
        CHECK(bad.code == 1);
    }
}

TEST_CASE("cli signs message files")
{
    TempDir dir;
    {
        std::ofstream(dir / "m.bin", std::ios::binary) << "hello\nworld";
    }
    REQUIRE(call({"keygen", "--scheme", "cfs", "-m", "4", "-t", "2", "--pub", dir / "k.pub",
                  "--sec", dir / "k.sec"})
                .code == 0);
    REQUIRE(call({"sign", "--sec", dir / "k.sec", "--msg", dir / "m.bin", "--out",
                  dir / "s.sig"})
                .code == 0);
    CHECK(call({"verify", "--pub", dir / "k.pub", "--sig", dir / "s.sig", "--msg",
                dir / "m.bin"})
              .code == 0);
    CHECK(call({"verify", "--pub", dir / "k.pub", "--sig", dir / "s.sig", "--msg-hex",
                "68656c6c6f0a776f726c64"})
              .code == 0);
}

TEST_CASE("cli forge")
{
    TempDir dir;
    REQUIRE(call({"keygen", "--scheme", "mcfsc", "-m", "4", "-t", "3", "-w", "2", "--seed", "3",
                  "--pub", dir / "k.pub", "--sec", dir / "k.sec"})
                .code == 0);
    Result f = call({"forge", "--scheme", "mcfsc", "--pub", dir / "k.pub", "--msg-hex", "0badf00d",
                     "--seed", "4", "--out", dir / "f.sig", "--transcript", dir / "f.json"});
    REQUIRE(f.code == 0);
    CHECK(call({"verify", "--pub", dir / "k.pub", "--sig", dir / "f.sig", "--msg-hex",
                "0badf00d"})
              .code == 0);
    auto j = nlohmann::json::parse(slurp(dir / "f.json"));
    CHECK(j["verified"] == true);
    CHECK(j["cost"]["decodes"] == 0);

    // wrong scheme for this key
    CHECK(call({"forge", "--scheme", "tilde", "--pub", dir / "k.pub", "--msg-hex", "00", "--out",
                dir / "g.sig"})
              .code == 2);

    REQUIRE(call({"keygen", "--scheme", "tilde", "-m", "4", "-t", "3", "-w", "2", "--gamma",
                  "delta", "--hash", "code-md", "--pub", dir / "t.pub", "--sec", dir / "t.sec"})
                .code == 0);
    REQUIRE(call({"forge", "--scheme", "tilde", "--pub", dir / "t.pub", "--msg-hex", "", "--out",
                  dir / "t.sig"})
                .code == 0);
    CHECK(call({"verify", "--pub", dir / "t.pub", "--sig", dir / "t.sig", "--msg-hex", ""})
              .code == 0);
}

TEST_CASE("cli recover-perm on a secret-matrix hash")
{
    TempDir dir;
    REQUIRE(call({"keygen", "--scheme", "mcfsc", "-m", "4", "-t", "3", "-w", "2", "--hash-basis",
                  "secret", "--seed", "8", "--pub", dir / "k.pub", "--sec", dir / "k.sec"})
                .code == 0);
    Result r = call({"recover-perm", "--pub", dir / "k.pub"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["permutation"].size() == 16);
    CHECK(j["comparisons"].get<int>() <= 256);
    std::string sec = slurp(dir / "k.sec");
    auto line = sec.substr(sec.find("permutation "));
    line = line.substr(12, line.find('\n') - 12);
    std::vector<std::size_t> p;
    std::istringstream in(line);
    for (std::size_t v; in >> v;)
        p.push_back(v);
    CHECK(j["permutation"].get<std::vector<std::size_t>>() == p);

    REQUIRE(call({"keygen", "--scheme", "mcfsc", "-m", "4", "-t", "3", "-w", "2", "--pub",
                  dir / "p.pub", "--sec", dir / "p.sec"})
                .code == 0);
    CHECK(call({"recover-perm", "--pub", dir / "p.pub"}).code == 2);
}

TEST_CASE("cli census and bench")
{
    Result c = call({"census", "-m", "4", "-t", "2", "--seed", "1"});
    REQUIRE(c.code == 0);
    CHECK(c.out.find("decodable=137 total=256") != std::string::npos);
    Result cj = call({"census", "-m", "4", "-t", "3", "--seed", "1", "--json"});
    REQUIRE(cj.code == 0);
    auto j = nlohmann::json::parse(cj.out);
    CHECK(j["decodable"] == 697);
    CHECK(j["total"] == 4096);

    Result b = call({"bench", "-m", "4", "-t", "3", "-w", "2", "--count", "50", "--seed", "2"});
    REQUIRE(b.code == 0);
    auto jb = nlohmann::json::parse(b.out);
    CHECK(jb["cfs_mean_attempts"].get<double>() >= 1.0);
    CHECK(jb.contains("mcfsc_mean_attempts"));
}

TEST_CASE("cli usage errors")
{
    TempDir dir;
    CHECK(call({}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({"keygen", "--scheme", "cfs", "-m", "4"}).code == 2);
    CHECK(call({"keygen", "--scheme", "rsa", "-m", "4", "-t", "2", "--pub", dir / "a",
                "--sec", dir / "b"})
              .code == 2);
    CHECK(call({"keygen", "--scheme", "mcfsc", "-m", "4", "-t", "3", "--pub", dir / "a",
                "--sec", dir / "b"})
              .code == 2); // missing -w
    CHECK(call({"keygen", "--scheme", "mcfsc", "-m", "4", "-t", "2", "-w", "2", "--pub",
                dir / "a", "--sec", dir / "b"})
              .code == 2); // w must be < t
    CHECK(call({"keygen", "--scheme", "cfs", "-m", "4", "-t", "4", "--pub", dir / "a",
                "--sec", dir / "b"})
              .code == 2);
    CHECK(call({"census", "-m", "6", "-t", "5"}).code != 0);
    {
        std::ofstream(dir / "junk") << "not a key\n";
    }
    CHECK(call({"verify", "--pub", dir / "junk", "--sig", dir / "junk", "--msg-hex", "00"})
              .code == 2);
    CHECK(call({"verify", "--pub", dir / "missing", "--sig", dir / "junk", "--msg-hex", "00"})
              .code == 2);
    CHECK(call({"sign", "--sec", dir / "junk", "--out", dir / "x", "--msg-hex", "zz"}).code == 2);
}

TEST_CASE("cli reruns with a seed are byte-identical")
{
    TempDir a, b;
    for (const TempDir* d : {&a, &b}) {
        REQUIRE(call({"keygen", "--scheme", "mcfs", "-m", "4", "-t", "3", "--seed", "11", "--pub",
                      *d / "k.pub", "--sec", *d / "k.sec"})
                    .code == 0);
        REQUIRE(call({"sign", "--sec", *d / "k.sec", "--msg-hex", "01", "--seed", "12", "--out",
                      *d / "s.sig"})
                    .code == 0);
    }
    for (const char* f : {"k.pub", "k.sec", "s.sig"})
        CHECK(slurp(a / f) == slurp(b / f));
}
