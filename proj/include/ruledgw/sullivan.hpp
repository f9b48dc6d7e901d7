#pragma once

#include "ruledgw/algebra.hpp"

#include <map>
#include <string>
#include <string_view>

namespace sullivan {

/// Free graded-commutative algebra with a degree +1 differential given on
/// generators and extended as a derivation. Construction enforces
/// minimality: for every generator g, d(g) is zero or homogeneous of
/// degree deg(g)+1, lies in the decomposables (every term a product of at
/// least two generators), and d(d(g)) = 0.
class MinimalModel {
public:
    MinimalModel(exactalg::GeneratorSetPtr gens,
                 std::map<std::string, exactalg::GradedPolynomial> differentials);

    const exactalg::GeneratorSet& generators() const { return *gens_; }
    exactalg::GeneratorSetPtr generators_ptr() const { return gens_; }

    /// d on a single generator; zero when no assignment was given.
    const exactalg::GradedPolynomial& d_of(std::size_t gen_index) const {
        return d_[gen_index];
    }

private:
    exactalg::GeneratorSetPtr gens_;
    std::vector<exactalg::GradedPolynomial> d_;  // indexed like the generator set
};

/// Ordered monomial basis of one cochain degree; identical to the
/// exactalg enumeration for the model's generators.
struct CochainBasis {
    int degree = 0;
    std::vector<exactalg::Monomial> monomials;
};

CochainBasis cochain_basis(const MinimalModel& m, int degree);

/// Extends the generator assignments linearly and by the graded Leibniz
/// rule d(pq) = d(p) q + (-1)^|p| p d(q).
exactalg::GradedPolynomial apply_d(const MinimalModel& m, const exactalg::GradedPolynomial& p);

/// True iff d(d(b)) = 0 for every basis monomial b of degree <= cap.
bool verify_d_squared(const MinimalModel& m, int cap);

/// Cohomology dimensions per degree: dim ker(d: n -> n+1) minus
/// dim im(d: n-1 -> n), both by exact rank.
exactalg::PoincareSeries cohomology_dims(const MinimalModel& m, int cap);

/// Text format, whitespace-insensitive:
///   # comment
///   A : 2
///   W : 5
///   d W = A*X - A*Y
/// Generators without a "d" line have zero differential.
MinimalModel parse_model(std::string_view text);

std::string to_string(const MinimalModel& m);

}  // namespace sullivan
