#include "ruledgw/ruledtop.hpp"

#include <stdexcept>

namespace ruledtop {

std::int64_t intersect(const SurfaceClass& c1, const SurfaceClass& c2) {
    return c1.a * c2.b + c2.a * c1.b;
}

std::int64_t adjunction_c1(const SurfaceClass& d, int genus) {
    if (genus < 0)
        throw std::invalid_argument("adjunction_c1: negative genus");
    return intersect(d, d) + 2 - 2 * static_cast<std::int64_t>(genus);
}

std::int64_t rr_h0(const CurveBundle& l) {
    if (l.genus < 0)
        throw std::invalid_argument("rr_h0: negative genus");
    if (l.genus == 0)
        return l.degree + 1 > 0 ? l.degree + 1 : 0;
    if (l.degree <= 2 * static_cast<std::int64_t>(l.genus) - 2)
        throw std::domain_error("rr_h0: special range not supported");
    return l.degree - l.genus + 1;
}

CurveBundle serre_dual_bundle(const CurveBundle& l) {
    if (l.genus < 0)
        throw std::invalid_argument("serre_dual_bundle: negative genus");
    return CurveBundle{l.genus, 2 * static_cast<std::int64_t>(l.genus) - 2 - l.degree};
}

std::int64_t euler_number(const SplitBundleOverCP& e) {
    if (e.base_dim < 0)
        throw std::invalid_argument("euler_number: negative base dimension");
    if (e.chern_roots.size() != static_cast<std::size_t>(e.base_dim))
        throw std::invalid_argument("euler_number: Euler class not top-dimensional");
    std::int64_t prod = 1;
    for (std::int64_t r : e.chern_roots)
        prod *= r;
    return prod;
}

int stratum_codim(int genus, int k) {
    if (genus < 0)
        throw std::invalid_argument("stratum_codim: negative genus");
    if (k < 1)
        throw std::invalid_argument("stratum_codim: k must be >= 1");
    return 4 * k - 2 + 2 * genus;
}

int d0_homotopy_dim(int genus, int i) {
    if (genus < 0)
        throw std::invalid_argument("d0_homotopy_dim: negative genus");
    if (i < 0)
        throw std::invalid_argument("d0_homotopy_dim: negative degree");
    if (i == 1 && genus == 1)
        return 3;
    if (i == 3 && genus == 0)
        return 2;
    if (i == 0 || i == 1 || i == 3)
        return 1;
    if (i == 2)
        return 2 * genus;
    return 0;
}

}  // namespace ruledtop
