// Acceptance suite: each criterion prints one PASS/FAIL line and the binary
// exits nonzero when any of them fails. Expected values are exact; where a
// runtime budget is part of the criterion it is enforced here as well.

#include "ruledgw/algebra.hpp"
#include "ruledgw/gwcalc.hpp"
#include "ruledgw/linalg.hpp"
#include "ruledgw/ruledtop.hpp"
#include "ruledgw/sullivan.hpp"
#include "ruledgw/whiteheadlab.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using exactalg::GeneratorSetPtr;
using exactalg::GradedPolynomial;
using exactalg::PoincareSeries;
using exactalg::Rational;

namespace {

std::string fail(const std::string& msg) { return msg; }

GradedPolynomial expand_relation(const GeneratorSetPtr& g, int k) {
    GradedPolynomial rel = GradedPolynomial::from_generator(g, "A");
    for (int i = 1; i <= k; ++i)
        rel = rel * (GradedPolynomial::from_generator(g, "X") -
                     Rational(static_cast<std::int64_t>(i) * i) *
                         GradedPolynomial::from_generator(g, "Y"));
    return rel;
}

// 1. one unit term at exponent 2k+g-1, with the internal rank consistency
//    check enabled for every pair
std::string criterion_egw() {
    for (int g = 0; g <= 4; ++g)
        for (int k = 1; k <= 5; ++k) {
            gwcalc::EquivariantInvariant inv = gwcalc::egw_ruled(g, k);
            if (inv.coefficients.size() != 1)
                return fail("more than one term at g=" + std::to_string(g));
            auto [exp, c] = *inv.coefficients.begin();
            if (exp != 2 * k + g - 1)
                return fail("exponent " + std::to_string(exp) + " at g=" + std::to_string(g) +
                            ", k=" + std::to_string(k));
            if (!(c.abs() == Rational(1)))
                return fail("magnitude is not 1");
            if (gwcalc::obstruction_rank(g, k) != gwcalc::admissible_p(g, k))
                return fail("rank consistency failed");
        }
    return "";
}

// 2. the linear solve and the expanded product agree exactly for k = 0..5
std::string criterion_relation() {
    GeneratorSetPtr g = whiteheadlab::bg_generators();
    for (int k = 0; k <= 5; ++k) {
        GradedPolynomial solved = whiteheadlab::solve_relation(k);  // Vandermonde route
        GradedPolynomial expanded = expand_relation(g, k);          // product route
        if (!(solved == expanded))
            return fail("routes disagree at k=" + std::to_string(k));
    }
    return "";
}

// 3. quotient dimensions match the model cohomology through degree 20 and
//    the drop at the relation degree is exactly dim_free(0) = 1
std::string criterion_presentation() {
    GeneratorSetPtr g = whiteheadlab::bg_generators();
    PoincareSeries free = exactalg::free_series(*g, 20);
    for (int k = 1; k <= 3; ++k) {
        GradedPolynomial rel = expand_relation(g, k);
        PoincareSeries ring = exactalg::quotient_dims(*g, rel, 20);
        GeneratorSetPtr mgens = whiteheadlab::bg_model_generators(k);
        sullivan::MinimalModel model(
            mgens, {{"W", exactalg::parse_polynomial(mgens, exactalg::to_string(rel))}});
        PoincareSeries cohom = sullivan::cohomology_dims(model, 20);
        if (!(ring == cohom))
            return fail("series disagree at k=" + std::to_string(k));
        int d = 4 * k + 2;
        if (d <= 20 && free.coeffs[d] - ring.coeffs[d] != 1)
            return fail("drop at the relation degree is not 1 for k=" + std::to_string(k));
    }
    return "";
}

// 4. index = 0 exactly at p = 2k+g-1, over the full scan
std::string criterion_dimension() {
    for (int p = 0; p <= 20; ++p)
        for (int g = 0; g <= 4; ++g)
            for (int k = 1; k <= 5; ++k) {
                bool zero = gwcalc::index(gwcalc::GWSetup(g, k, p, 0)) == 0;
                if (zero != (p == 2 * k + g - 1))
                    return fail("criterion failed at p=" + std::to_string(p) +
                                ", g=" + std::to_string(g) + ", k=" + std::to_string(k));
            }
    return "";
}

// 5. the surviving type is (1,k) and each discarded candidate is discarded
//    precisely because k > s
std::string criterion_minimal_order() {
    for (int k = 1; k <= 6; ++k) {
        whiteheadlab::MinimalTypeResult r = whiteheadlab::minimal_type(k);
        if (!(r.selected == whiteheadlab::WhiteheadType{1, k}))
            return fail("survivor is not (1,k) at k=" + std::to_string(k));
        int candidates = 0;
        for (int s = 1; s <= k; ++s) {
            ++candidates;  // every (2k+1-2s, s) with p >= 1
        }
        if (static_cast<int>(r.excluded.size()) + 1 != candidates)
            return fail("candidate enumeration incomplete at k=" + std::to_string(k));
        for (const auto& cand : r.excluded) {
            if (cand.p < 1 || cand.s < 1 || 2 * cand.p + 4 * cand.s != 4 * k + 2)
                return fail("excluded candidate outside the degree equation");
            if (!(k > cand.s))
                return fail("candidate excluded without k > s");
        }
    }
    return "";
}

// 6. rank-based quotient equals the non-zero-divisor closed form everywhere
std::string criterion_oracle_equivalence() {
    GeneratorSetPtr g = whiteheadlab::bg_generators();
    PoincareSeries free = exactalg::free_series(*g, 20);
    for (int k = 1; k <= 3; ++k) {
        GradedPolynomial rel = expand_relation(g, k);
        int d = *rel.homogeneous_degree();
        PoincareSeries q = exactalg::quotient_dims(*g, rel, 20);
        for (int n = 0; n <= 20; ++n)
            if (q.coeffs[n] != free.at(n) - free.at(n - d))
                return fail("regularity oracle failed at k=" + std::to_string(k) +
                            ", n=" + std::to_string(n));
    }
    return "";
}

// 7. the quoted catalog instances, exactly
std::string criterion_catalog() {
    if (ruledtop::stratum_codim(0, 1) != 2)
        return fail("stratum_codim(0,1)");
    if (ruledtop::stratum_codim(1, 1) != 4)
        return fail("stratum_codim(1,1)");
    if (ruledtop::stratum_codim(2, 3) != 14)
        return fail("stratum_codim(2,3)");
    if (ruledtop::d0_homotopy_dim(1, 1) != 3)
        return fail("d0_homotopy_dim(1,1)");
    if (ruledtop::d0_homotopy_dim(0, 3) != 2)
        return fail("d0_homotopy_dim(0,3)");
    if (ruledtop::d0_homotopy_dim(2, 2) != 4)
        return fail("d0_homotopy_dim(2,2)");
    for (int g = 0; g <= 5; ++g) {
        if (ruledtop::d0_homotopy_dim(g, 0) != 1)
            return fail("dimension at i=0");
        if (g != 1 && ruledtop::d0_homotopy_dim(g, 1) != 1)
            return fail("dimension at i=1");
        if (g != 0 && ruledtop::d0_homotopy_dim(g, 3) != 1)
            return fail("dimension at i=3");
        if (ruledtop::d0_homotopy_dim(g, 2) != 2 * g)
            return fail("dimension at i=2");
        for (int i = 4; i <= 8; ++i)
            if (ruledtop::d0_homotopy_dim(g, i) != 0)
                return fail("dimension above i=3");
    }
    return "";
}

// 8. randomized property suite, 100+ exact instances per law
std::string criterion_properties() {
    std::mt19937_64 rng(20260809);
    std::uniform_int_distribution<int> small(-9, 9), den(1, 9);
    auto rat = [&] { return Rational(small(rng), den(rng)); };

    GeneratorSetPtr gens =
        exactalg::make_generators({{"a", 1}, {"b", 2}, {"x", 3}, {"y", 3}, {"w", 4}});
    auto random_homogeneous = [&](int degree) {
        GradedPolynomial p = GradedPolynomial::zero(gens);
        for (const auto& m : exactalg::monomial_basis(*gens, degree)) {
            if (small(rng) > 3)
                continue;
            p += GradedPolynomial::from_term(gens, m, rat());
        }
        return p;
    };
    std::uniform_int_distribution<int> deg(1, 12);

    for (int t = 0; t < 120; ++t) {  // graded commutativity
        int da = deg(rng), db = deg(rng);
        GradedPolynomial p = random_homogeneous(da), q = random_homogeneous(db);
        GradedPolynomial qp = q * p;
        if (da * db % 2 != 0)
            qp *= Rational(-1);
        if (!(p * q == qp))
            return fail("graded commutativity");
    }

    GeneratorSetPtr mgens = whiteheadlab::bg_model_generators(1);
    sullivan::MinimalModel model(
        mgens,
        {{"W", exactalg::parse_polynomial(mgens, "A*X - A*Y")}});
    auto random_model_poly = [&](int degree) {
        GradedPolynomial p = GradedPolynomial::zero(mgens);
        for (const auto& m : exactalg::monomial_basis(*mgens, degree)) {
            if (small(rng) > 3)
                continue;
            p += GradedPolynomial::from_term(mgens, m, rat());
        }
        return p;
    };
    for (int t = 0; t < 120; ++t) {  // Leibniz rule
        int da = deg(rng), db = deg(rng);
        GradedPolynomial p = random_model_poly(da), q = random_model_poly(db);
        GradedPolynomial rhs = apply_d(model, p) * q;
        GradedPolynomial second = p * apply_d(model, q);
        if (da % 2 != 0)
            second *= Rational(-1);
        rhs += second;
        if (!(apply_d(model, p * q) == rhs))
            return fail("Leibniz rule");
    }
    for (int t = 0; t < 120; ++t) {  // d squared on random elements
        GradedPolynomial p = random_model_poly(deg(rng));
        if (!apply_d(model, apply_d(model, p)).is_zero())
            return fail("d squared");
    }

    std::uniform_int_distribution<std::int64_t> coord(-40, 40);
    for (int t = 0; t < 120; ++t) {  // intersection bilinearity
        ruledtop::SurfaceClass c1{coord(rng), coord(rng)}, c2{coord(rng), coord(rng)},
            c3{coord(rng), coord(rng)};
        std::int64_t s = coord(rng);
        if (ruledtop::intersect(c1, c2) != ruledtop::intersect(c2, c1))
            return fail("intersection symmetry");
        ruledtop::SurfaceClass combo{c2.a + s * c3.a, c2.b + s * c3.b};
        if (ruledtop::intersect(c1, combo) !=
            ruledtop::intersect(c1, c2) + s * ruledtop::intersect(c1, c3))
            return fail("intersection bilinearity");
    }

    std::uniform_int_distribution<int> cover(1, 9);
    for (int t = 0; t < 120; ++t) {  // pgw linearity
        Rational a = rat(), b = rat();
        if (!(gwcalc::pgw_sum({a}, {b}).value == a + b))
            return fail("pgw_sum additivity");
        int n = cover(rng);
        if (!(gwcalc::pgw_cover({a}, n).value == Rational(n) * a))
            return fail("pgw_cover linearity");
        if (!a.is_zero() && gwcalc::pgw_cover({a}, n).value.is_zero())
            return fail("pgw_cover nontriviality");
    }
    return "";
}

struct Criterion {
    std::string name;
    std::function<std::string()> run;
    long long budget_ms;  // 0 when the criterion states no runtime bound
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"egw-reproduction", criterion_egw, 1000},
        {"ring-relation", criterion_relation, 1000},
        {"presentation-consistency", criterion_presentation, 30000},
        {"dimension-condition", criterion_dimension, 1000},
        {"minimal-order-filter", criterion_minimal_order, 1000},
        {"oracle-equivalence", criterion_oracle_equivalence, 0},
        {"catalog-fidelity", criterion_catalog, 0},
        {"property-suite", criterion_properties, 0},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        try {
            detail = c.run();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
        if (detail.empty() && c.budget_ms > 0 && elapsed >= c.budget_ms)
            detail = "runtime " + std::to_string(elapsed) + " ms exceeds " +
                     std::to_string(c.budget_ms) + " ms";
        std::ostringstream line;
        line << (detail.empty() ? "PASS" : "FAIL") << "  criterion-" << i + 1 << "  " << c.name
             << "  (" << elapsed << " ms)";
        if (!detail.empty())
            line << "  " << detail;
        std::cout << line.str() << "\n";
        if (!detail.empty())
            ++failures;
    }
    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                                : "ACCEPTANCE: " + std::to_string(failures) + " criteria failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
