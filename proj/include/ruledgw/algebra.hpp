#pragma once

#include "ruledgw/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace exactalg {

/// Named generator of a free graded-commutative algebra. Parity of the
/// degree decides the commutation sign: odd generators anticommute and
/// square to zero, even generators are central.
struct Generator {
    std::string name;
    int degree = 0;

    friend bool operator==(const Generator&, const Generator&) = default;
};

/// Immutable, name-sorted set of generators. Monomials are exponent vectors
/// indexed against this order, which also fixes the canonical monomial
/// order used everywhere for deterministic output.
class GeneratorSet {
public:
    GeneratorSet() = default;
    explicit GeneratorSet(std::vector<Generator> gens);

    std::size_t size() const { return gens_.size(); }
    const Generator& operator[](std::size_t i) const { return gens_[i]; }
    const std::vector<Generator>& generators() const { return gens_; }

    std::optional<std::size_t> index_of(std::string_view name) const;
    bool has_odd_generator() const;

    friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

private:
    std::vector<Generator> gens_;
};

using GeneratorSetPtr = std::shared_ptr<const GeneratorSet>;

GeneratorSetPtr make_generators(std::vector<Generator> gens);

/// Exponent vector aligned with a GeneratorSet. Odd generators carry
/// exponent 0 or 1.
struct Monomial {
    std::vector<int> exps;

    bool is_unit() const {
        for (int e : exps)
            if (e != 0)
                return false;
        return true;
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Canonical order: descending lexicographic on exponent vectors, so e.g.
/// over {A,X,Y} the degree-8 basis reads A^4, A^2 X, A^2 Y, X^2, XY, Y^2.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return b.exps < a.exps;
    }
};

int total_degree(const GeneratorSet& gens, const Monomial& m);

/// Element of the free graded-commutative Q-algebra on a generator set.
/// Stores only nonzero coefficients; the term map iterates in canonical
/// monomial order.
class GradedPolynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialOrder>;

    GradedPolynomial() = default;

    static GradedPolynomial zero(GeneratorSetPtr gens);
    static GradedPolynomial constant(GeneratorSetPtr gens, Rational c);
    static GradedPolynomial unit(GeneratorSetPtr gens) { return constant(std::move(gens), 1); }
    static GradedPolynomial from_generator(GeneratorSetPtr gens, std::string_view name);
    static GradedPolynomial from_term(GeneratorSetPtr gens, Monomial m, Rational c);

    const GeneratorSet& generators() const { return *gens_; }
    GeneratorSetPtr generators_ptr() const { return gens_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const Monomial& m) const;

    /// Degree shared by all terms, or nullopt when inhomogeneous or zero.
    std::optional<int> homogeneous_degree() const;

    GradedPolynomial& operator+=(const GradedPolynomial& o);
    GradedPolynomial& operator-=(const GradedPolynomial& o);
    GradedPolynomial& operator*=(const Rational& c);

    friend GradedPolynomial operator+(GradedPolynomial a, const GradedPolynomial& b) { return a += b; }
    friend GradedPolynomial operator-(GradedPolynomial a, const GradedPolynomial& b) { return a -= b; }
    friend GradedPolynomial operator*(GradedPolynomial a, const Rational& c) { return a *= c; }
    friend GradedPolynomial operator*(const Rational& c, GradedPolynomial a) { return a *= c; }
    friend GradedPolynomial operator-(const GradedPolynomial& a) {
        GradedPolynomial r = a;
        return r *= Rational(-1);
    }

    friend bool operator==(const GradedPolynomial& a, const GradedPolynomial& b) {
        return *a.gens_ == *b.gens_ && a.terms_ == b.terms_;
    }

private:
    void add_term(const Monomial& m, const Rational& c);
    void require_gens() const;

    GeneratorSetPtr gens_;
    TermMap terms_;

    friend GradedPolynomial multiply(const GradedPolynomial&, const GradedPolynomial&);
};

/// Graded product with Koszul signs; the product of an odd generator with
/// itself is zero. Throws IncompatibleGenerators on mismatched sets.
GradedPolynomial multiply(const GradedPolynomial& p, const GradedPolynomial& q);

inline GradedPolynomial operator*(const GradedPolynomial& p, const GradedPolynomial& q) {
    return multiply(p, q);
}

/// Coefficients of a graded vector space, indexed by degree 0..cap.
struct PoincareSeries {
    std::vector<std::int64_t> coeffs;

    int cap() const { return static_cast<int>(coeffs.size()) - 1; }
    std::int64_t at(int degree) const {
        return (degree >= 0 && degree <= cap()) ? coeffs[degree] : 0;
    }
    friend bool operator==(const PoincareSeries&, const PoincareSeries&) = default;
};

/// All monomials of the exact total degree, canonical order, no duplicates.
std::vector<Monomial> monomial_basis(const GeneratorSet& gens, int degree);

/// Dimensions of the free algebra per degree, computed as the truncated
/// expansion of prod_even 1/(1-t^deg) * prod_odd (1+t^deg).
PoincareSeries free_series(const GeneratorSet& gens, int cap);

/// Dimensions of the quotient by one homogeneous relation of degree d >= 1
/// over an all-even generator set: dim(n) = dim_free(n) - rank of the
/// multiplication-by-relation map from degree n-d into degree n.
PoincareSeries quotient_dims(const GeneratorSet& gens, const GradedPolynomial& relation,
                             int cap);

std::string to_string(const Monomial& m, const GeneratorSet& gens);

/// Canonical text rendering: terms in monomial order, explicit signs,
/// "^" exponents, "*" between factors, coefficients as "p/q".
std::string to_string(const GradedPolynomial& p);

/// Parses the rendering produced by to_string; also accepts parentheses,
/// e.g. "A*(X - Y)". Throws std::invalid_argument on unknown generators or
/// malformed input.
GradedPolynomial parse_polynomial(GeneratorSetPtr gens, std::string_view text);

}  // namespace exactalg
