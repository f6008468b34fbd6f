#include "cfs/gf2m.hpp"

#include "cfs/errors.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace cfs {

std::uint32_t reduction_polynomial(unsigned m)
{
    static constexpr std::uint32_t table[] = {
        0,       0,      0x7,    0xB,    0x13,   0x25,   0x43,   0x83,   0x11D,
        0x211,   0x409,  0x805,  0x1053, 0x201B, 0x4443, 0x8003, 0x1100B,
    };
    if (m < 2 || m > 16)
        throw BadParameters("field degree m must be in [2, 16], got " + std::to_string(m));
    return table[m];
}

Field::Field(unsigned m) : m_(m), poly_(reduction_polynomial(m))
{
    const std::uint32_t q = order();
    exp_.resize(2 * (q - 1));
    log_.assign(q, 0);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < q - 1; ++i) {
        if (i > 0 && x == 1)
            throw std::logic_error("reduction polynomial is not primitive");
        exp_[i] = x;
        log_[x] = i;
        x <<= 1;
        if (x & q)
            x ^= poly_;
    }
    for (std::uint32_t i = q - 1; i < 2 * (q - 1); ++i)
        exp_[i] = exp_[i - (q - 1)];
}

void Field::check(FieldElement a) const
{
    if (a.m != m_)
        throw std::invalid_argument("field element of GF(2^" + std::to_string(a.m) +
                                    ") used in GF(2^" + std::to_string(m_) + ")");
    if (a.value >= order())
        throw std::invalid_argument("field element value out of range");
}

FieldElement Field::element(Elem value) const
{
    FieldElement e{value, m_};
    check(e);
    return e;
}

FieldElement Field::mul(FieldElement a, FieldElement b) const
{
    check(a);
    check(b);
    return {mul(a.value, b.value), m_};
}

FieldElement Field::inv(FieldElement a) const
{
    check(a);
    return {inv(a.value), m_};
}

FieldElement Field::add(FieldElement a, FieldElement b) const
{
    check(a);
    check(b);
    return {a.value ^ b.value, m_};
}

Field::Elem Field::inv(Elem a) const
{
    if (a == 0)
        throw InversionOfZero();
    return exp_[(order() - 1 - log_[a]) % (order() - 1)];
}

Field::Elem Field::sqrt(Elem a) const
{
    // a^(2^(m-1)); squaring is a bijection, this is its inverse
    if (a == 0)
        return 0;
    std::uint64_t l = log_[a];
    std::uint32_t n = order() - 1;
    std::uint32_t half = (l % 2 == 0) ? static_cast<std::uint32_t>(l / 2)
                                      : static_cast<std::uint32_t>((l + n) / 2);
    return exp_[half];
}

Field::Elem Field::pow(Elem a, std::uint64_t e) const
{
    if (e == 0)
        return 1;
    if (a == 0)
        return 0;
    std::uint64_t n = order() - 1;
    return exp_[static_cast<std::uint32_t>((log_[a] * (e % n)) % n)];
}

FieldPoly::FieldPoly(std::initializer_list<Elem> coeffs) : coeffs_(coeffs) { normalise(); }

FieldPoly::FieldPoly(std::vector<Elem> coeffs) : coeffs_(std::move(coeffs)) { normalise(); }

FieldPoly FieldPoly::monomial(std::size_t degree, Elem c)
{
    std::vector<Elem> v(degree + 1, 0);
    v[degree] = c;
    return FieldPoly(std::move(v));
}

void FieldPoly::set_coeff(std::size_t i, Elem c)
{
    if (i >= coeffs_.size())
        coeffs_.resize(i + 1, 0);
    coeffs_[i] = c;
    normalise();
}

void FieldPoly::normalise()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

FieldPoly poly_add(const FieldPoly& a, const FieldPoly& b)
{
    std::size_t n = std::max(a.coefficients().size(), b.coefficients().size());
    std::vector<Field::Elem> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = a.coeff(i) ^ b.coeff(i);
    return FieldPoly(std::move(out));
}

FieldPoly poly_mul(const Field& f, const FieldPoly& a, const FieldPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    auto ac = a.coefficients();
    auto bc = b.coefficients();
    std::vector<Field::Elem> out(ac.size() + bc.size() - 1, 0);
    for (std::size_t i = 0; i < ac.size(); ++i) {
        if (ac[i] == 0)
            continue;
        for (std::size_t j = 0; j < bc.size(); ++j)
            out[i + j] ^= f.mul(ac[i], bc[j]);
    }
    return FieldPoly(std::move(out));
}

FieldPoly poly_scale(const Field& f, const FieldPoly& a, Field::Elem c)
{
    std::vector<Field::Elem> out(a.coefficients().begin(), a.coefficients().end());
    for (auto& x : out)
        x = f.mul(x, c);
    return FieldPoly(std::move(out));
}

PolyDivision poly_divmod(const Field& f, const FieldPoly& a, const FieldPoly& b)
{
    if (b.is_zero())
        throw std::invalid_argument("polynomial division by zero");
    std::vector<Field::Elem> rem(a.coefficients().begin(), a.coefficients().end());
    int db = b.degree();
    int da = a.degree();
    if (da < db)
        return {FieldPoly(), a};
    std::vector<Field::Elem> quot(static_cast<std::size_t>(da - db + 1), 0);
    Field::Elem lead_inv = f.inv(b.leading());
    auto bc = b.coefficients();
    for (int i = da; i >= db; --i) {
        Field::Elem c = rem[static_cast<std::size_t>(i)];
        if (c == 0)
            continue;
        Field::Elem q = f.mul(c, lead_inv);
        quot[static_cast<std::size_t>(i - db)] = q;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] ^= f.mul(q, bc[static_cast<std::size_t>(j)]);
    }
    return {FieldPoly(std::move(quot)), FieldPoly(std::move(rem))};
}

FieldPoly poly_mod(const Field& f, const FieldPoly& a, const FieldPoly& modulus)
{
    return poly_divmod(f, a, modulus).remainder;
}

FieldPoly poly_mulmod(const Field& f, const FieldPoly& a, const FieldPoly& b,
                      const FieldPoly& modulus)
{
    return poly_mod(f, poly_mul(f, a, b), modulus);
}

FieldPoly poly_gcd(const Field& f, FieldPoly a, FieldPoly b)
{
    while (!b.is_zero()) {
        FieldPoly r = poly_mod(f, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero())
        return a;
    return poly_scale(f, a, f.inv(a.leading()));
}

Field::Elem poly_eval(const Field& f, const FieldPoly& p, Field::Elem x)
{
    Field::Elem acc = 0;
    auto c = p.coefficients();
    for (std::size_t i = c.size(); i-- > 0;)
        acc = f.mul(acc, x) ^ c[i];
    return acc;
}

FieldPoly poly_mod_inv(const Field& field, const FieldPoly& f, const FieldPoly& g)
{
    // Track s with r = s*f (mod g).
    FieldPoly r0 = g;
    FieldPoly r1 = poly_mod(field, f, g);
    FieldPoly s0;
    FieldPoly s1 = FieldPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = poly_divmod(field, r0, r1);
        FieldPoly s = poly_add(s0, poly_mul(field, q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.degree() != 0)
        throw NotInvertible("polynomial is not invertible modulo g");
    return poly_mod(field, poly_scale(field, s0, field.inv(r0.leading())), g);
}

namespace {

FieldPoly square_mod(const Field& field, const FieldPoly& a, const FieldPoly& g)
{
    // (sum a_i x^i)^2 = sum a_i^2 x^(2i) in characteristic 2
    auto c = a.coefficients();
    std::vector<Field::Elem> out(c.empty() ? 0 : 2 * c.size() - 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        out[2 * i] = field.square(c[i]);
    return poly_mod(field, FieldPoly(std::move(out)), g);
}

} // namespace

FieldPoly sqrt_x_mod(const Field& field, const FieldPoly& g)
{
    // The quotient ring is GF(2^(m*t)), where squaring m*t times is the identity.
    std::size_t steps = static_cast<std::size_t>(field.degree()) *
                            static_cast<std::size_t>(g.degree()) - 1;
    FieldPoly x = poly_mod(field, FieldPoly::monomial(1), g);
    for (std::size_t i = 0; i < steps; ++i)
        x = square_mod(field, x, g);
    return x;
}

FieldPoly poly_sqrt_mod_g(const Field& field, const FieldPoly& f, const FieldPoly& g,
                          const FieldPoly& sqrt_x)
{
    FieldPoly reduced = poly_mod(field, f, g);
    auto c = reduced.coefficients();
    std::vector<Field::Elem> even((c.size() + 1) / 2, 0);
    std::vector<Field::Elem> odd(c.size() / 2, 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i % 2 == 0)
            even[i / 2] = field.sqrt(c[i]);
        else
            odd[i / 2] = field.sqrt(c[i]);
    }
    FieldPoly result = poly_add(FieldPoly(std::move(even)),
                                poly_mul(field, sqrt_x, FieldPoly(std::move(odd))));
    return poly_mod(field, result, g);
}

FieldPoly poly_sqrt_mod_g(const Field& field, const FieldPoly& f, const FieldPoly& g)
{
    return poly_sqrt_mod_g(field, f, g, sqrt_x_mod(field, g));
}

EuclidPair partial_euclid(const Field& field, const FieldPoly& a, const FieldPoly& b,
                          int stop_deg)
{
    if (stop_deg < 0 || stop_deg >= a.degree())
        throw std::invalid_argument("partial_euclid: stop degree out of range");
    FieldPoly r0 = a;
    FieldPoly r1 = poly_mod(field, b, a);
    if (r1.is_zero())
        throw DegenerateSyndrome("partial_euclid on a zero remainder");
    FieldPoly v0;
    FieldPoly v1 = FieldPoly::constant(1);
    while (r1.degree() > stop_deg) {
        auto [q, r] = poly_divmod(field, r0, r1);
        FieldPoly v = poly_add(v0, poly_mul(field, q, v1));
        r0 = std::move(r1);
        r1 = std::move(r);
        v0 = std::move(v1);
        v1 = std::move(v);
    }
    return {std::move(r1), std::move(v1)};
}

bool is_irreducible(const Field& field, const FieldPoly& g)
{
    int t = g.degree();
    if (t < 1)
        return false;
    if (t == 1)
        return true;
    const FieldPoly x = FieldPoly::monomial(1);
    FieldPoly frob = poly_mod(field, x, g);
    for (int i = 1; i <= t / 2; ++i) {
        for (unsigned k = 0; k < field.degree(); ++k)
            frob = square_mod(field, frob, g);
        FieldPoly d = poly_gcd(field, g, poly_add(frob, x));
        if (d.degree() != 0)
            return false;
    }
    return true;
}

} // namespace cfs
