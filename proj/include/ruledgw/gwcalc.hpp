#pragma once

#include "ruledgw/rational.hpp"

#include <map>
#include <string>

namespace gwcalc {

/// Data of one equivariant count on a ruled surface of genus g: the class
/// A - kF, the rank-one torus action indexed by k, the projective base of
/// dimension p and m marked points.
struct GWSetup {
    int g = 0;
    int k = 1;
    int p = 0;
    int m = 0;

    GWSetup(int g_, int k_, int p_, int m_);
};

/// Polynomial in the degree-2 variable u with exact rational coefficients.
struct EquivariantInvariant {
    std::map<int, exactalg::Rational> coefficients;  // exponent -> coefficient
    bool sign_determined = false;

    bool is_zero() const { return coefficients.empty(); }
};

struct PGWValue {
    exactalg::Rational value;

    friend bool operator==(const PGWValue&, const PGWValue&) = default;
};

/// Expected dimension 2(dim_C M - 3)(1-g) + 2 c1(A-kF) + 2m + dim B for the
/// ruled fiber (dim_C M = 2) over a base of real dimension 2p; simplifies
/// to 2(1 - g - 2k + p) + 2m.
int index(const GWSetup& s);

/// The unique base level with vanishing index at m = 0: 2k + g - 1.
int admissible_p(int g, int k);

/// Complex rank of the obstruction bundle, via Riemann-Roch on the Serre
/// dual for g >= 1 and directly on the sphere for g = 0; equals 2k + g - 1.
int obstruction_rank(int g, int k);

/// The count of invariant section-class curves: one term of magnitude 1 at
/// exponent 2k + g - 1. The sign follows the fixed convention (the Euler
/// number of the rank-p sum of degree -1 line bundles), and
/// sign_determined stays false because only the magnitude is pinned down.
EquivariantInvariant egw_ruled(int g, int k);

/// Assembles per-level values into a u-polynomial, dropping zeros.
EquivariantInvariant egw_series(const std::map<int, PGWValue>& per_level);

/// Additivity under fiber connected sum.
PGWValue pgw_sum(const PGWValue& q1, const PGWValue& q2);

/// An N-fold covering of the base multiplies the count by N.
PGWValue pgw_cover(const PGWValue& q, int n);

/// Ascending exponents, e.g. "u - 2*u^3"; "0" when empty.
std::string to_string(const EquivariantInvariant& inv);

}  // namespace gwcalc
