#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace cfs {

/// An element of GF(2^m), tagged with its extension degree.
struct FieldElement {
    std::uint32_t value = 0;
    unsigned m = 0;

    friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

/// Reduction polynomial used for GF(2^m), bit i = coefficient of x^i.
///
///   m : polynomial
///   2 : x^2+x+1            10 : x^10+x^3+1
///   3 : x^3+x+1            11 : x^11+x^2+1
///   4 : x^4+x+1            12 : x^12+x^6+x^4+x+1
///   5 : x^5+x^2+1          13 : x^13+x^4+x^3+x+1
///   6 : x^6+x+1            14 : x^14+x^10+x^6+x+1
///   7 : x^7+x+1            15 : x^15+x+1
///   8 : x^8+x^4+x^3+x^2+1  16 : x^16+x^12+x^3+x+1
///   9 : x^9+x^4+1
///
/// All are primitive, so x generates the multiplicative group.
std::uint32_t reduction_polynomial(unsigned m);

// Log/antilog tables over a fixed primitive polynomial. Raw-value operations
// (add/mul/inv on uint32) are the fast path used by the polynomial code and
// the decoder; the FieldElement overloads check the degree tag.
class Field {
public:
    using Elem = std::uint32_t;

    explicit Field(unsigned m);

    unsigned degree() const { return m_; }
    std::uint32_t order() const { return 1u << m_; }
    std::uint32_t reduction() const { return poly_; }

    FieldElement element(Elem value) const;

    FieldElement mul(FieldElement a, FieldElement b) const;
    FieldElement inv(FieldElement a) const;
    FieldElement add(FieldElement a, FieldElement b) const;

    static Elem add(Elem a, Elem b) { return a ^ b; }
    Elem mul(Elem a, Elem b) const
    {
        if (a == 0 || b == 0)
            return 0;
        return exp_[log_[a] + log_[b]];
    }
    Elem inv(Elem a) const;
    Elem square(Elem a) const { return mul(a, a); }
    Elem sqrt(Elem a) const;
    Elem pow(Elem a, std::uint64_t e) const;
    /// x^i for the primitive element x.
    Elem exp(std::uint32_t i) const { return exp_[i % (order() - 1)]; }

private:
    void check(FieldElement a) const;

    unsigned m_;
    std::uint32_t poly_;
    std::vector<Elem> exp_; // doubled so log a + log b needs no reduction
    std::vector<std::uint32_t> log_;
};

/// Polynomial over GF(2^m), coefficients lowest degree first, kept normalised
/// (no trailing zero coefficients; the zero polynomial is empty).
class FieldPoly {
public:
    using Elem = Field::Elem;

    FieldPoly() = default;
    FieldPoly(std::initializer_list<Elem> coeffs);
    explicit FieldPoly(std::vector<Elem> coeffs);

    static FieldPoly constant(Elem c) { return FieldPoly({c}); }
    static FieldPoly monomial(std::size_t degree, Elem c = 1);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    Elem leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
    std::span<const Elem> coefficients() const { return coeffs_; }

    void set_coeff(std::size_t i, Elem c);

    friend bool operator==(const FieldPoly&, const FieldPoly&) = default;

private:
    void normalise();

    std::vector<Elem> coeffs_;
};

FieldPoly poly_add(const FieldPoly& a, const FieldPoly& b);
FieldPoly poly_mul(const Field& f, const FieldPoly& a, const FieldPoly& b);
FieldPoly poly_scale(const Field& f, const FieldPoly& a, Field::Elem c);

struct PolyDivision {
    FieldPoly quotient;
    FieldPoly remainder;
};
/// Throws std::invalid_argument on division by the zero polynomial.
PolyDivision poly_divmod(const Field& f, const FieldPoly& a, const FieldPoly& b);
FieldPoly poly_mod(const Field& f, const FieldPoly& a, const FieldPoly& modulus);
FieldPoly poly_mulmod(const Field& f, const FieldPoly& a, const FieldPoly& b,
                      const FieldPoly& modulus);
/// Monic gcd; gcd(0, 0) = 0.
FieldPoly poly_gcd(const Field& f, FieldPoly a, FieldPoly b);
Field::Elem poly_eval(const Field& f, const FieldPoly& p, Field::Elem x);

/// Inverse of f modulo g. Throws NotInvertible when gcd(f, g) != 1.
FieldPoly poly_mod_inv(const Field& field, const FieldPoly& f, const FieldPoly& g);

/// sqrt(x) mod g, i.e. x^(2^(m*deg g - 1)) mod g. Requires g irreducible.
FieldPoly sqrt_x_mod(const Field& field, const FieldPoly& g);

/// Square root of f modulo irreducible g, using the even/odd split
/// f = f_e(x)^2 + x * f_o(x)^2 and a precomputed sqrt(x) mod g.
FieldPoly poly_sqrt_mod_g(const Field& field, const FieldPoly& f, const FieldPoly& g,
                          const FieldPoly& sqrt_x);
FieldPoly poly_sqrt_mod_g(const Field& field, const FieldPoly& f, const FieldPoly& g);

struct EuclidPair {
    FieldPoly u;
    FieldPoly v;
};

/// Extended Euclid on (a, b) stopped as soon as the remainder has degree at
/// most stop_deg. Returns (u, v) with u = v*b mod a, deg u <= stop_deg and
/// deg v <= deg a - stop_deg - 1. A zero b (mod a) raises DegenerateSyndrome.
EuclidPair partial_euclid(const Field& field, const FieldPoly& a, const FieldPoly& b,
                          int stop_deg);

/// Ben-Or test: gcd(g, x^(2^(m*i)) - x mod g) = 1 for i = 1..deg/2.
bool is_irreducible(const Field& field, const FieldPoly& g);

} // namespace cfs
