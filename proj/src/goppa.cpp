#include "cfs/goppa.hpp"

#include "cfs/errors.hpp"
#include "cfs/metrics.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <thread>
#include <utility>

namespace cfs {

namespace {

void check_parameters(unsigned m, unsigned t)
{
    reduction_polynomial(m); // validates the range of m
    if (t < 2)
        throw BadParameters("Goppa degree t must be at least 2");
    if (static_cast<std::uint64_t>(m) * t >= (std::uint64_t{1} << m))
        throw BadParameters("infeasible Goppa parameters: m*t = " + std::to_string(m * t) +
                            " must be below n = " + std::to_string(1u << m));
}

BitMatrix build_parity_check(const Field& field, const FieldPoly& g,
                             const std::vector<Field::Elem>& support)
{
    const unsigned m = field.degree();
    const unsigned t = static_cast<unsigned>(g.degree());
    BitMatrix h(static_cast<std::size_t>(m) * t, support.size());
    for (std::size_t i = 0; i < support.size(); ++i) {
        Field::Elem x = support[i];
        Field::Elem entry = field.inv(poly_eval(field, g, x));
        for (unsigned j = 0; j < t; ++j) {
            for (unsigned b = 0; b < m; ++b)
                if ((entry >> b) & 1u)
                    h.set(static_cast<std::size_t>(j) * m + b, i);
            entry = field.mul(entry, x);
        }
    }
    return h;
}

// s_j = sum_i e_i x_i^j / g(x_i) recovered from the binary syndrome, then
// mapped to S(z) = sum_i e_i / (z - x_i) mod g. With g = sum g_k z^k,
// 1/(z - x) = g(x)^-1 * sum_u z^u sum_{k>u} g_k x^(k-1-u) mod g, hence
// S_u = sum_{k=u+1}^{t} g_k s_{k-1-u}.
FieldPoly syndrome_polynomial(const GoppaCode& code, const BitVector& s)
{
    const Field& f = code.field();
    const unsigned m = code.m();
    const unsigned t = code.t();
    std::vector<Field::Elem> comp(t, 0);
    for (unsigned j = 0; j < t; ++j)
        for (unsigned b = 0; b < m; ++b)
            if (s.get(static_cast<std::size_t>(j) * m + b))
                comp[j] |= Field::Elem{1} << b;
    const FieldPoly& g = code.goppa_polynomial();
    std::vector<Field::Elem> out(t, 0);
    for (unsigned u = 0; u < t; ++u)
        for (unsigned k = u + 1; k <= t; ++k)
            out[u] ^= f.mul(g.coeff(k), comp[k - 1 - u]);
    return FieldPoly(std::move(out));
}

} // namespace

GoppaCode::GoppaCode(unsigned m, FieldPoly g, std::vector<Field::Elem> support)
    : field_(m), g_(std::move(g)), support_(std::move(support))
{
    if (g_.degree() < 2)
        throw BadParameters("Goppa polynomial must have degree >= 2");
    check_parameters(m, static_cast<unsigned>(g_.degree()));
    for (auto c : g_.coefficients())
        if (c >= field_.order())
            throw BadParameters("Goppa polynomial coefficient outside GF(2^m)");
    if (!is_irreducible(field_, g_))
        throw BadParameters("Goppa polynomial is reducible");
    if (support_.size() != field_.order())
        throw BadParameters("support must list all 2^m field elements");
    std::vector<bool> seen(field_.order(), false);
    for (auto x : support_) {
        if (x >= field_.order() || seen[x])
            throw BadParameters("support entries must be distinct field elements");
        seen[x] = true;
    }
    h_ = build_parity_check(field_, g_, support_);
    if (rank(h_) != redundancy())
        throw BadParameters("parity-check matrix is rank deficient");
    sqrt_x_ = sqrt_x_mod(field_, g_);
}

GoppaCode goppa_keygen(unsigned m, unsigned t, RandomSource& rng)
{
    check_parameters(m, t);
    Field field(m);
    std::vector<Field::Elem> support(field.order());
    for (Field::Elem x = 0; x < field.order(); ++x)
        support[x] = x;
    for (;;) {
        std::vector<Field::Elem> coeffs(t + 1);
        for (unsigned i = 0; i < t; ++i)
            coeffs[i] = static_cast<Field::Elem>(rng.below(field.order()));
        coeffs[t] = 1;
        FieldPoly g(std::move(coeffs));
        if (!is_irreducible(field, g))
            continue;
        rng.shuffle(support);
        if (rank(build_parity_check(field, g, support)) != static_cast<std::size_t>(m) * t)
            continue;
        return GoppaCode(m, std::move(g), support);
    }
}

std::optional<BitVector> patterson_decode(const GoppaCode& code, const BitVector& syndrome)
{
    if (syndrome.size() != code.redundancy())
        throw DimensionError("syndrome has length " + std::to_string(syndrome.size()) +
                             ", expected " + std::to_string(code.redundancy()));
    count_decode();
    const Field& f = code.field();
    const FieldPoly& g = code.goppa_polynomial();
    const unsigned t = code.t();
    if (syndrome.is_zero())
        return BitVector(code.n());

    FieldPoly s = syndrome_polynomial(code, syndrome);
    if (s.is_zero())
        return std::nullopt; // unreachable for full-rank H
    FieldPoly tau = poly_add(poly_mod_inv(f, s, g), FieldPoly::monomial(1));

    FieldPoly sigma;
    if (tau.is_zero()) {
        // S = 1/z: single error at the support position holding 0
        sigma = FieldPoly::monomial(1);
    } else {
        tau = poly_sqrt_mod_g(f, tau, g, code.sqrt_x());
        auto [a, b] = partial_euclid(f, g, tau, static_cast<int>(t / 2));
        sigma = poly_add(poly_mul(f, a, a), poly_mul(f, FieldPoly::monomial(1), poly_mul(f, b, b)));
    }
    if (sigma.degree() < 1 || sigma.degree() > static_cast<int>(t))
        return std::nullopt;

    BitVector e(code.n());
    std::size_t roots = 0;
    const auto& support = code.support();
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (poly_eval(f, sigma, support[i]) == 0) {
            e.set(i);
            ++roots;
        }
    }
    if (roots != static_cast<std::size_t>(sigma.degree()))
        return std::nullopt;
    // a split locator can still belong to a heavier coset; confirm the syndrome
    if (mat_vec(code.parity_check(), e) != syndrome)
        return std::nullopt;
    return e;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

std::string CensusReport::to_json() const
{
    nlohmann::ordered_json j;
    j["m"] = m;
    j["t"] = t;
    j["n"] = n;
    j["decodable"] = decodable;
    j["total"] = total;
    j["ratio"] = ratio;
    j["closed_form"] = closed_form;
    j["t_factorial_approx"] = t_factorial_approx;
    return j.dump();
}

CensusReport decodable_census(const GoppaCode& code, unsigned workers)
{
    if (code.t() < 2)
        throw BadParameters("census requires t >= 2");
    const std::size_t r = code.redundancy();
    if (r > census_max_redundancy)
        throw CensusInfeasible("census over 2^" + std::to_string(r) + " syndromes is infeasible");
    const std::uint64_t total = std::uint64_t{1} << r;

    if (workers == 0)
        workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, total));
    std::vector<std::uint64_t> counts(workers, 0);
    auto scan = [&](unsigned w) {
        std::uint64_t lo = total * w / workers;
        std::uint64_t hi = total * (w + 1) / workers;
        std::uint64_t c = 0;
        for (std::uint64_t x = lo; x < hi; ++x)
            if (patterson_decode(code, BitVector::from_uint(x, r)))
                ++c;
        counts[w] = c;
    };
    if (workers == 1) {
        scan(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(scan, w);
    }

    CensusReport rep;
    rep.m = code.m();
    rep.t = code.t();
    rep.n = code.n();
    rep.total = total;
    for (auto c : counts)
        rep.decodable += c;
    rep.ratio = static_cast<double>(rep.decodable) / static_cast<double>(total);
    for (unsigned i = 0; i <= code.t(); ++i)
        rep.closed_form += binomial(code.n(), i);
    double fact = 1;
    for (unsigned i = 2; i <= code.t(); ++i)
        fact *= i;
    rep.t_factorial_approx = 1.0 / fact;
    return rep;
}

} // namespace cfs
