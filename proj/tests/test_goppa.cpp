#include "cfs/errors.hpp"
#include "cfs/goppa.hpp"
#include "cfs/metrics.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace cfs;

namespace {

BitVector random_error(std::size_t n, std::size_t weight, RandomSource& rng)
{
    BitVector e(n);
    while (e.weight() < weight)
        e.set(static_cast<std::size_t>(rng.below(n)));
    return e;
}

} // namespace

TEST_CASE("goppa_keygen parameters")
{
    RandomSource rng(21);
    GoppaCode c2 = goppa_keygen(4, 2, rng);
    CHECK(c2.n() == 16);
    CHECK(c2.redundancy() == 8);
    CHECK(c2.dimension() == 8);
    CHECK(c2.parity_check().rows() == 8);
    CHECK(c2.parity_check().cols() == 16);
    CHECK(rank(c2.parity_check()) == 8);

    GoppaCode c3 = goppa_keygen(4, 3, rng);
    CHECK(c3.redundancy() == 12);
    CHECK(c3.dimension() == 4);

    CHECK_THROWS_AS(goppa_keygen(4, 4, rng), BadParameters); // m*t = n
    CHECK_THROWS_AS(goppa_keygen(4, 1, rng), BadParameters);
    CHECK_THROWS_AS(goppa_keygen(2, 2, rng), BadParameters);
}

TEST_CASE("parity-check matrix matches its defining entries")
{
    RandomSource rng(22);
    GoppaCode code = goppa_keygen(5, 3, rng);
    const unsigned m = 5;
    const std::uint32_t poly = code.field().reduction();
    auto g = code.goppa_polynomial().coefficients();
    for (std::size_t i = 0; i < code.n(); ++i) {
        std::uint32_t x = code.support()[i];
        std::uint32_t gx = 0;
        for (std::size_t k = g.size(); k-- > 0;)
            gx = oracle::gf_mul(gx, x, m, poly) ^ g[k];
        REQUIRE(gx != 0);
        std::uint32_t entry = oracle::gf_inv_bruteforce(gx, m, poly);
        for (unsigned j = 0; j < code.t(); ++j) {
            for (unsigned b = 0; b < m; ++b)
                REQUIRE(code.parity_check().get(j * m + b, i) == (((entry >> b) & 1u) != 0));
            entry = oracle::gf_mul(entry, x, m, poly);
        }
    }
}

TEST_CASE("kernel of H is a code of minimum distance >= 2t+1")
{
    RandomSource rng(23);
    for (unsigned t : {2u, 3u}) {
        GoppaCode code = goppa_keygen(4, t, rng);
        auto basis = kernel_basis(code.parity_check());
        REQUIRE(basis.size() == code.dimension());
        std::size_t min_weight = code.n();
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << basis.size()); ++mask) {
            BitVector c(code.n());
            for (std::size_t i = 0; i < basis.size(); ++i)
                if ((mask >> i) & 1u)
                    c ^= basis[i];
            REQUIRE(mat_vec(code.parity_check(), c).is_zero());
            min_weight = std::min(min_weight, c.weight());
        }
        CHECK(min_weight >= 2 * t + 1);
    }
}

TEST_CASE("GoppaCode rejects invalid parts")
{
    Field f(4);
    std::vector<Field::Elem> support(16);
    for (Field::Elem i = 0; i < 16; ++i)
        support[i] = i;
    // (x+1)(x+2) is reducible
    FieldPoly reducible = poly_mul(f, FieldPoly{1, 1}, FieldPoly{2, 1});
    CHECK_THROWS_AS(GoppaCode(4, reducible, support), BadParameters);

    RandomSource rng(24);
    GoppaCode good = goppa_keygen(4, 2, rng);
    auto dup = support;
    dup[3] = dup[4];
    CHECK_THROWS_AS(GoppaCode(4, good.goppa_polynomial(), dup), BadParameters);
    auto shorter = support;
    shorter.pop_back();
    CHECK_THROWS_AS(GoppaCode(4, good.goppa_polynomial(), shorter), BadParameters);
    CHECK_NOTHROW(GoppaCode(4, good.goppa_polynomial(), support));
}

TEST_CASE("patterson_decode: zero and every weight-1 error")
{
    RandomSource rng(25);
    GoppaCode code = goppa_keygen(4, 2, rng);
    auto zero = patterson_decode(code, BitVector(8));
    REQUIRE(zero.has_value());
    CHECK(zero->is_zero());
    for (std::size_t i = 0; i < 16; ++i) {
        BitVector e(16);
        e.set(i);
        auto d = patterson_decode(code, mat_vec(code.parity_check(), e));
        REQUIRE(d.has_value());
        CHECK(*d == e);
    }
    CHECK_THROWS_AS(patterson_decode(code, BitVector(7)), DimensionError);
}

TEST_CASE("patterson_decode round trip on random errors")
{
    RandomSource rng(26);
    for (unsigned m : {4u, 5u}) {
        for (unsigned t : {2u, 3u}) {
            GoppaCode code = goppa_keygen(m, t, rng);
            for (int trial = 0; trial < 1000; ++trial) {
                BitVector e = random_error(code.n(), rng.below(t + 1), rng);
                auto d = patterson_decode(code, mat_vec(code.parity_check(), e));
                REQUIRE(d.has_value());
                REQUIRE(*d == e);
            }
        }
    }
}

TEST_CASE("patterson_decode agrees with exhaustive syndrome search")
{
    RandomSource rng(27);
    for (unsigned t : {2u, 3u}) {
        GoppaCode code = goppa_keygen(4, t, rng);
        auto table = oracle::syndrome_table(code.parity_check(), t);
        const std::size_t r = code.redundancy();
        std::size_t decoded = 0;
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << r); ++x) {
            BitVector s = BitVector::from_uint(x, r);
            auto d = patterson_decode(code, s);
            auto it = table.find(s.to_bytes());
            if (it == table.end()) {
                REQUIRE_FALSE(d.has_value());
            } else {
                REQUIRE(it->second.has_value()); // unique preimage
                REQUIRE(d.has_value());
                REQUIRE(*d == *it->second);
                REQUIRE(d->weight() <= t);
                ++decoded;
            }
        }
        CHECK(decoded == oracle::binomial_sum(16, t));
    }
}

TEST_CASE("patterson_decode is counted")
{
    RandomSource rng(28);
    GoppaCode code = goppa_keygen(4, 2, rng);
    CountingScope scope;
    patterson_decode(code, BitVector(8));
    patterson_decode(code, BitVector::from_uint(77, 8));
    CHECK(scope.counts().decodes == 2);
}

TEST_CASE("decodable_census")
{
    RandomSource rng(29);
    SUBCASE("m=4, t=2")
    {
        GoppaCode code = goppa_keygen(4, 2, rng);
        CensusReport rep = decodable_census(code);
        CHECK(rep.total == 256);
        CHECK(rep.closed_form == oracle::binomial_sum(16, 2));
        CHECK(rep.closed_form == 137);
        CHECK(rep.decodable == 137);
        CHECK(rep.ratio == doctest::Approx(0.53515625));
        CHECK(rep.t_factorial_approx == doctest::Approx(0.5));
        CHECK(rep.matches_closed_form());
        CHECK(rep.to_json() ==
              R"({"m":4,"t":2,"n":16,"decodable":137,"total":256,"ratio":0.53515625,)"
              R"("closed_form":137,"t_factorial_approx":0.5})");
    }
    SUBCASE("m=4, t=3 with several workers")
    {
        GoppaCode code = goppa_keygen(4, 3, rng);
        CensusReport rep = decodable_census(code, 3);
        CHECK(rep.decodable == oracle::binomial_sum(16, 3));
        CHECK(rep.decodable == 697);
        CHECK(rep.t_factorial_approx == doctest::Approx(1.0 / 6));
    }
    SUBCASE("too large")
    {
        GoppaCode code = goppa_keygen(5, 5, rng);
        CHECK_THROWS_AS(decodable_census(code), CensusInfeasible);
    }
    SUBCASE("t = 1 never reaches the census")
    {
        CHECK_THROWS_AS(goppa_keygen(4, 1, rng), BadParameters);
    }
}
