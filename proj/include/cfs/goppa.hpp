#pragma once

#include "cfs/gf2.hpp"
#include "cfs/gf2m.hpp"
#include "cfs/random.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cfs {

// Binary irreducible Goppa code over the full support GF(2^m), n = 2^m,
// with an (m*t) x n binary parity-check matrix. Row block j (j < t), bit b
// holds bit b of support[i]^j / g(support[i]).
class GoppaCode {
public:
    /// Builds the code from an explicit polynomial and support. Throws
    /// BadParameters if g is reducible, the support is not a permutation of
    /// the field, or the parity-check matrix is rank deficient.
    GoppaCode(unsigned m, FieldPoly g, std::vector<Field::Elem> support);

    unsigned m() const { return field_.degree(); }
    unsigned t() const { return static_cast<unsigned>(g_.degree()); }
    std::size_t n() const { return support_.size(); }
    std::size_t redundancy() const { return static_cast<std::size_t>(m()) * t(); }
    std::size_t dimension() const { return n() - redundancy(); }

    const Field& field() const { return field_; }
    const FieldPoly& goppa_polynomial() const { return g_; }
    const std::vector<Field::Elem>& support() const { return support_; }
    const BitMatrix& parity_check() const { return h_; }
    const FieldPoly& sqrt_x() const { return sqrt_x_; }

private:
    Field field_;
    FieldPoly g_;
    std::vector<Field::Elem> support_;
    BitMatrix h_;
    FieldPoly sqrt_x_;
};

/// Random irreducible monic g of degree t and a shuffled full support;
/// redraws until H has full rank m*t. Requires 2 <= t and m*t < 2^m.
GoppaCode goppa_keygen(unsigned m, unsigned t, RandomSource& rng);

/// Patterson decoding. Returns e with weight(e) <= t and H e^T = s, or
/// nullopt when s has no such preimage.
std::optional<BitVector> patterson_decode(const GoppaCode& code, const BitVector& syndrome);

struct CensusReport {
    unsigned m = 0;
    unsigned t = 0;
    std::size_t n = 0;
    std::uint64_t decodable = 0;
    std::uint64_t total = 0;
    double ratio = 0;
    /// sum_{i<=t} C(n, i)
    std::uint64_t closed_form = 0;
    /// 1/t!
    double t_factorial_approx = 0;

    bool matches_closed_form() const { return decodable == closed_form; }
    std::string to_json() const;
};

constexpr std::size_t census_max_redundancy = 24;

/// Runs the decoder on every syndrome in GF(2)^(m*t). Throws BadParameters
/// for t < 2 and CensusInfeasible when m*t exceeds census_max_redundancy.
CensusReport decodable_census(const GoppaCode& code, unsigned workers = 0);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

} // namespace cfs
