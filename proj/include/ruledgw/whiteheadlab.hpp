#pragma once

#include "ruledgw/algebra.hpp"
#include "ruledgw/linalg.hpp"

#include <string>
#include <vector>

namespace whiteheadlab {

/// Rational homotopy class recorded by name and degree. Classes at the
/// classifying-space level are suspensions and have degree >= 2.
struct HomotopyElement {
    std::string name;
    int degree = 2;

    HomotopyElement(std::string name_, int degree_);

    friend bool operator==(const HomotopyElement&, const HomotopyElement&) = default;
};

/// Shape of a higher product: p slots of the degree-2 class and s slots of
/// degree-4 classes. The product targets homotopy degree 2p + 4s - 1.
struct WhiteheadType {
    int p = 0;
    int s = 0;

    int order() const { return p + s; }
    int target_degree() const { return 2 * p + 4 * s - 1; }

    friend bool operator==(const WhiteheadType&, const WhiteheadType&) = default;
};

/// Exact linear system determining the coefficients of the symmetric
/// (k+1)-linear form of type (1,k) on the basis {A~; X~, Y~}. Unknown c_j
/// is the coefficient of X^(k-j) Y^j; row i evaluates the binary form at
/// (X,Y) = (i^2, 1), and the last row normalizes c_0 = 1.
struct WhiteheadConstraintSystem {
    int k = 0;
    exactalg::QMatrix lhs;             // (k+1) x (k+1)
    std::vector<exactalg::Rational> rhs;

    /// The k x (k+1) homogeneous interpolation block (normalization row
    /// excluded).
    exactalg::QMatrix interpolation_part() const;
};

/// Outcome of the minimal-order search: the surviving slot shape and every
/// candidate discarded because its degree-s binary form acquires k > s
/// independent roots and must vanish.
struct MinimalTypeResult {
    int k = 0;
    WhiteheadType selected;
    std::vector<WhiteheadType> excluded;
};

/// Ring presentation of the classifying-space cohomology for a fixed k,
/// with the dimension series cross-checked against the associated minimal
/// model.
struct RingPresentation {
    exactalg::GeneratorSetPtr generators;
    exactalg::GradedPolynomial relation;
    exactalg::PoincareSeries series;
};

/// Inclusive window of orders carrying nonvanishing products; the product
/// of order p sits in homotopy degree 2p - 2 of the group itself.
struct SamelsonWindow {
    int min_order = 0;
    int max_order = 0;

    static int degree_of(int order) { return 2 * order - 2; }
};

/// Exact scalar relating the k-th circle class to the generator:
/// gamma_k = factor * gamma_1.
struct ActionScaling {
    int k = 1;
    exactalg::Rational factor;
};

/// The generators {A:2, X:4, Y:4} every relation lives over.
exactalg::GeneratorSetPtr bg_generators();

/// Model generators {A:2, X:4, Y:4, W:4k+1} for k >= 1.
exactalg::GeneratorSetPtr bg_model_generators(int k);

/// Loop-space generators {a:1, x:3, y:3, w:4k} for k >= 1, one degree
/// below the model generators.
exactalg::GeneratorSetPtr loop_space_generators(int k);

/// Degree of an order-r product of classifying-space classes: the
/// attaching sphere has dimension (sum of degrees) - 1. Needs >= 2 factors.
int bracket_degree(const std::vector<int>& bg_degrees);

/// Pairwise shift rule sum - (count - 1); agrees with bracket_degree only
/// for two factors. Kept for comparison.
int bracket_degree_pairwise(const std::vector<int>& bg_degrees);

/// Desuspension: one degree below the classifying-space product.
int samelson_degree(int whitehead_degree);

/// Degree-4 direction X + i^2 Y forced to vanish by the i-th torus action.
exactalg::GradedPolynomial action_direction(int i);

/// k interpolation constraints plus the normalization c_0 = 1; k = 0 gives
/// the normalization alone.
WhiteheadConstraintSystem build_constraints(int k);

/// Exact solution of build_constraints(k) as the expanded polynomial
/// A * prod_{i=1..k} (X - i^2 Y). Verifies the homogeneous solution space
/// is one-dimensional before normalizing.
exactalg::GradedPolynomial solve_relation(int k);

/// Enumerates (p,s) with p,s >= 1 and 2p + 4s = 4k + 2, discards every
/// candidate with k > s, and returns the unique survivor (1, k).
MinimalTypeResult minimal_type(int k);

/// Generators {A:2,X:4,Y:4}, the relation for this k, and the quotient
/// dimension series through the cap, cross-checked against the cohomology
/// of the associated minimal model. A mismatch throws TheoremViolation.
RingPresentation ring_presentation(int k, int cap = 20);

/// Orders of nonvanishing products per genus: g=0 gives [2k+1, 2k+1];
/// g=1 requires k=1 and gives [2,2]; g >= 2 requires k > g/2 and gives
/// [g, 2k+g-1]. Out-of-catalog inputs throw std::domain_error.
SamelsonWindow samelson_order_report(int g, int k);

ActionScaling action_scaling(int k);

/// Size of the indeterminacy set {0, w_k} of the genus-0 order-(2k+1)
/// product; catalog data only.
int samelson_indeterminacy_size();

}  // namespace whiteheadlab
