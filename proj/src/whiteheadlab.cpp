#include "ruledgw/whiteheadlab.hpp"

#include "ruledgw/errors.hpp"
#include "ruledgw/sullivan.hpp"

#include <stdexcept>

namespace whiteheadlab {

using exactalg::GeneratorSetPtr;
using exactalg::GradedPolynomial;
using exactalg::Monomial;
using exactalg::PoincareSeries;
using exactalg::QMatrix;
using exactalg::Rational;

HomotopyElement::HomotopyElement(std::string name_, int degree_)
    : name(std::move(name_)), degree(degree_) {
    if (degree < 2)
        throw std::invalid_argument("HomotopyElement: suspension degree must be >= 2");
}

GeneratorSetPtr bg_generators() {
    static const GeneratorSetPtr gens =
        exactalg::make_generators({{"A", 2}, {"X", 4}, {"Y", 4}});
    return gens;
}

GeneratorSetPtr bg_model_generators(int k) {
    if (k < 1)
        throw std::invalid_argument("bg_model_generators: k must be >= 1");
    return exactalg::make_generators({{"A", 2}, {"X", 4}, {"Y", 4}, {"W", 4 * k + 1}});
}

GeneratorSetPtr loop_space_generators(int k) {
    if (k < 1)
        throw std::invalid_argument("loop_space_generators: k must be >= 1");
    return exactalg::make_generators({{"a", 1}, {"x", 3}, {"y", 3}, {"w", 4 * k}});
}

int bracket_degree(const std::vector<int>& bg_degrees) {
    if (bg_degrees.size() < 2)
        throw std::invalid_argument("bracket_degree: need at least two factors");
    int sum = 0;
    for (int d : bg_degrees) {
        if (d < 2)
            throw std::invalid_argument("bracket_degree: degrees must be >= 2");
        sum += d;
    }
    return sum - 1;
}

int bracket_degree_pairwise(const std::vector<int>& bg_degrees) {
    if (bg_degrees.size() < 2)
        throw std::invalid_argument("bracket_degree_pairwise: need at least two factors");
    int sum = 0;
    for (int d : bg_degrees)
        sum += d;
    return sum - (static_cast<int>(bg_degrees.size()) - 1);
}

int samelson_degree(int whitehead_degree) {
    if (whitehead_degree < 2)
        throw std::invalid_argument("samelson_degree: degree must be >= 2");
    return whitehead_degree - 1;
}

GradedPolynomial action_direction(int i) {
    if (i < 1)
        throw std::invalid_argument("action_direction: i must be >= 1");
    GeneratorSetPtr gens = bg_generators();
    return GradedPolynomial::from_generator(gens, "X") +
           Rational(static_cast<std::int64_t>(i) * i) *
               GradedPolynomial::from_generator(gens, "Y");
}

QMatrix WhiteheadConstraintSystem::interpolation_part() const {
    QMatrix sub(static_cast<std::size_t>(k), static_cast<std::size_t>(k) + 1);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c <= k; ++c)
            sub.at(r, c) = lhs.at(r, c);
    return sub;
}

WhiteheadConstraintSystem build_constraints(int k) {
    if (k < 0)
        throw std::invalid_argument("build_constraints: k must be >= 0");
    const std::size_t n = static_cast<std::size_t>(k) + 1;
    WhiteheadConstraintSystem sys;
    sys.k = k;
    sys.lhs = QMatrix(n, n);
    sys.rhs.assign(n, Rational(0));
    for (int i = 1; i <= k; ++i) {
        // row for action i: sum_j c_j (i^2)^(k-j) = 0
        Rational node(static_cast<std::int64_t>(i) * i);
        Rational power(1);
        for (int j = k; j >= 0; --j) {
            sys.lhs.at(static_cast<std::size_t>(i) - 1, static_cast<std::size_t>(j)) = power;
            power *= node;
        }
    }
    sys.lhs.at(n - 1, 0) = Rational(1);
    sys.rhs[n - 1] = Rational(1);
    return sys;
}

GradedPolynomial solve_relation(int k) {
    if (k < 0)
        throw std::invalid_argument("solve_relation: k must be >= 0");
    WhiteheadConstraintSystem sys = build_constraints(k);
    if (k > 0) {
        int rank = sys.interpolation_part().rank();
        if (rank != k)
            throw ruledgw::TheoremViolation(
                "solve_relation: homogeneous solution space is not one-dimensional");
    }
    auto coeffs = sys.lhs.solve(sys.rhs);
    if (!coeffs)
        throw ruledgw::TheoremViolation("solve_relation: constraint system is singular");
    GeneratorSetPtr gens = bg_generators();
    const std::size_t ia = *gens->index_of("A");
    const std::size_t ix = *gens->index_of("X");
    const std::size_t iy = *gens->index_of("Y");
    GradedPolynomial rel = GradedPolynomial::zero(gens);
    for (int j = 0; j <= k; ++j) {
        Monomial m{std::vector<int>(gens->size(), 0)};
        m.exps[ia] = 1;
        m.exps[ix] = k - j;
        m.exps[iy] = j;
        rel += GradedPolynomial::from_term(gens, m, (*coeffs)[static_cast<std::size_t>(j)]);
    }
    return rel;
}

MinimalTypeResult minimal_type(int k) {
    if (k < 1)
        throw std::invalid_argument("minimal_type: k must be >= 1");
    MinimalTypeResult result;
    result.k = k;
    std::vector<WhiteheadType> survivors;
    // 2p + 4s = 4k + 2 with p,s >= 1 forces p = 2k + 1 - 2s, s = 1..k.
    for (int s = 1; s <= k; ++s) {
        WhiteheadType cand{2 * k + 1 - 2 * s, s};
        if (k > s)
            result.excluded.push_back(cand);
        else
            survivors.push_back(cand);
    }
    if (survivors.size() != 1)
        throw ruledgw::TheoremViolation("minimal_type: expected exactly one surviving type");
    result.selected = survivors.front();
    return result;
}

RingPresentation ring_presentation(int k, int cap) {
    if (k < 0)
        throw std::invalid_argument("ring_presentation: k must be >= 0");
    if (cap < 0)
        throw std::invalid_argument("ring_presentation: negative cap");
    RingPresentation pres;
    pres.generators = bg_generators();
    pres.relation = solve_relation(k);
    pres.series = exactalg::quotient_dims(*pres.generators, pres.relation, cap);

    // Cross-check against the minimal model. For k >= 1 that is
    // (A, X, Y, W | dW = relation); for k = 0 the pair (A, W) is acyclic
    // and the minimal model is (X, Y) with zero differential.
    sullivan::MinimalModel model = [&] {
        if (k == 0)
            return sullivan::MinimalModel(
                exactalg::make_generators({{"X", 4}, {"Y", 4}}), {});
        GeneratorSetPtr mgens = bg_model_generators(k);
        GradedPolynomial dw = exactalg::parse_polynomial(mgens, exactalg::to_string(pres.relation));
        return sullivan::MinimalModel(mgens, {{"W", dw}});
    }();
    PoincareSeries model_series = sullivan::cohomology_dims(model, cap);
    if (!(model_series == pres.series))
        throw ruledgw::TheoremViolation(
            "ring_presentation: quotient dimensions disagree with the minimal-model cohomology");
    return pres;
}

SamelsonWindow samelson_order_report(int g, int k) {
    if (g < 0)
        throw std::invalid_argument("samelson_order_report: genus must be >= 0");
    if (k < 1)
        throw std::invalid_argument("samelson_order_report: k must be >= 1");
    if (g == 0)
        return SamelsonWindow{2 * k + 1, 2 * k + 1};
    if (g == 1) {
        if (k != 1)
            throw std::domain_error("samelson_order_report: genus 1 is cataloged only for k = 1");
        return SamelsonWindow{2, 2};
    }
    if (k <= g / 2)
        throw std::domain_error("samelson_order_report: need k > floor(g/2) for genus >= 2");
    return SamelsonWindow{g, 2 * k + g - 1};
}

ActionScaling action_scaling(int k) {
    if (k < 1)
        throw std::invalid_argument("action_scaling: k must be >= 1");
    return ActionScaling{k, Rational(k)};
}

int samelson_indeterminacy_size() {
    return 2;
}

}  // namespace whiteheadlab
