#include "ruledgw/gwcalc.hpp"

#include "ruledgw/errors.hpp"
#include "ruledgw/ruledtop.hpp"

#include <stdexcept>

namespace gwcalc {

using exactalg::Rational;

GWSetup::GWSetup(int g_, int k_, int p_, int m_) : g(g_), k(k_), p(p_), m(m_) {
    if (g < 0)
        throw std::invalid_argument("GWSetup: genus must be >= 0");
    if (k < 1)
        throw std::invalid_argument("GWSetup: k must be >= 1");
    if (p < 0)
        throw std::invalid_argument("GWSetup: p must be >= 0");
    if (m < 0)
        throw std::invalid_argument("GWSetup: m must be >= 0");
}

int index(const GWSetup& s) {
    const int dim_c_m = 2;
    std::int64_t c1 = ruledtop::adjunction_c1(ruledtop::SurfaceClass{1, -s.k}, s.g);
    return static_cast<int>(2 * (dim_c_m - 3) * (1 - s.g) + 2 * c1 + 2 * s.m + 2 * s.p);
}

int admissible_p(int g, int k) {
    if (g < 0)
        throw std::invalid_argument("admissible_p: genus must be >= 0");
    if (k < 1)
        throw std::invalid_argument("admissible_p: k must be >= 1");
    return 2 * k + g - 1;
}

int obstruction_rank(int g, int k) {
    if (g < 0)
        throw std::invalid_argument("obstruction_rank: genus must be >= 0");
    if (k < 1)
        throw std::invalid_argument("obstruction_rank: k must be >= 1");
    if (g == 0)
        return static_cast<int>(ruledtop::rr_h0({0, 2 * k - 2}));
    return static_cast<int>(
        ruledtop::rr_h0(ruledtop::serre_dual_bundle({g, -2 * static_cast<std::int64_t>(k)})));
}

EquivariantInvariant egw_ruled(int g, int k) {
    const int p = admissible_p(g, k);
    const int rank = obstruction_rank(g, k);
    if (rank != p)
        throw ruledgw::TheoremViolation(
            "egw_ruled: obstruction rank " + std::to_string(rank) +
            " differs from the admissible base dimension " + std::to_string(p));
    ruledtop::SplitBundleOverCP obstruction{p, std::vector<std::int64_t>(p, -1)};
    std::int64_t sign = ruledtop::euler_number(obstruction);
    EquivariantInvariant inv;
    inv.coefficients.emplace(p, Rational(sign));
    inv.sign_determined = false;
    return inv;
}

EquivariantInvariant egw_series(const std::map<int, PGWValue>& per_level) {
    EquivariantInvariant inv;
    inv.sign_determined = true;
    for (const auto& [p, q] : per_level) {
        if (p < 0)
            throw std::invalid_argument("egw_series: negative level");
        if (!q.value.is_zero())
            inv.coefficients.emplace(p, q.value);
    }
    return inv;
}

PGWValue pgw_sum(const PGWValue& q1, const PGWValue& q2) {
    return PGWValue{q1.value + q2.value};
}

PGWValue pgw_cover(const PGWValue& q, int n) {
    if (n < 1)
        throw std::invalid_argument("pgw_cover: covering degree must be >= 1");
    return PGWValue{Rational(n) * q.value};
}

std::string to_string(const EquivariantInvariant& inv) {
    if (inv.coefficients.empty())
        return "0";
    std::string out;
    for (const auto& [exp, c] : inv.coefficients) {
        const bool neg = c.sign() < 0;
        if (out.empty()) {
            if (neg)
                out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        Rational mag = c.abs();
        std::string power;
        if (exp == 1)
            power = "u";
        else if (exp > 1)
            power = "u^" + std::to_string(exp);
        if (power.empty())
            out += mag.to_string();
        else if (mag == Rational(1))
            out += power;
        else
            out += mag.to_string() + "*" + power;
    }
    return out;
}

}  // namespace gwcalc
