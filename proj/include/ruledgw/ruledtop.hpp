#pragma once

#include <cstdint>
#include <vector>

namespace ruledtop {

/// Integer class a*A + b*F in the second homology of a trivial ruled
/// surface, with A the base section class and F the fiber class.
struct SurfaceClass {
    std::int64_t a = 0;
    std::int64_t b = 0;

    friend bool operator==(const SurfaceClass&, const SurfaceClass&) = default;
};

/// Holomorphic line bundle over a smooth curve, recorded by genus and degree.
struct CurveBundle {
    int genus = 0;
    std::int64_t degree = 0;

    friend bool operator==(const CurveBundle&, const CurveBundle&) = default;
};

/// Direct sum of line bundles over complex projective space of dimension
/// base_dim; chern_roots holds the first Chern number of each summand.
struct SplitBundleOverCP {
    int base_dim = 0;
    std::vector<std::int64_t> chern_roots;
};

/// Intersection pairing with A^2 = F^2 = 0 and A.F = 1.
std::int64_t intersect(const SurfaceClass& c1, const SurfaceClass& c2);

/// First Chern number of an embedded genus-g curve in class D:
/// D.D + 2 - 2g.
std::int64_t adjunction_c1(const SurfaceClass& d, int genus);

/// Dimension of the space of holomorphic sections. Genus 0: max(deg+1, 0).
/// Genus >= 1 requires deg > 2g-2 (nonspecial) and gives deg - g + 1;
/// the special range throws std::domain_error.
std::int64_t rr_h0(const CurveBundle& l);

/// The bundle whose sections compute the dual of H^1: (g, 2g - 2 - deg).
CurveBundle serre_dual_bundle(const CurveBundle& l);

/// Top Chern number: the product of the Chern roots. Requires
/// rank == base_dim so the Euler class lands in the top degree.
std::int64_t euler_number(const SplitBundleOverCP& e);

/// Codimension of the stratum of almost complex structures admitting
/// curves in class A - kF: 4k - 2 + 2g.
int stratum_codim(int genus, int k);

/// Rational homotopy dimensions of the fiber-preserving diffeomorphism
/// group: 1 for i in {0,1,3} except (g=1,i=1) -> 3 and (g=0,i=3) -> 2;
/// 2g for i=2; 0 otherwise.
int d0_homotopy_dim(int genus, int i);

}  // namespace ruledtop
