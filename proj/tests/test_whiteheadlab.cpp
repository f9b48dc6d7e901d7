#include "ruledgw/whiteheadlab.hpp"

#include "ruledgw/errors.hpp"
#include "ruledgw/sullivan.hpp"

#include <doctest.h>

using exactalg::GeneratorSetPtr;
using exactalg::GradedPolynomial;
using exactalg::PoincareSeries;
using exactalg::Rational;
using namespace whiteheadlab;

namespace {

// independent route: expand A * prod_{i=1..k} (X - i^2 Y) term by term
GradedPolynomial expand_relation(int k) {
    GeneratorSetPtr g = bg_generators();
    GradedPolynomial rel = GradedPolynomial::from_generator(g, "A");
    for (int i = 1; i <= k; ++i)
        rel = rel * (GradedPolynomial::from_generator(g, "X") -
                     Rational(static_cast<std::int64_t>(i) * i) *
                         GradedPolynomial::from_generator(g, "Y"));
    return rel;
}

}  // namespace

TEST_CASE("homotopy elements are suspensions") {
    HomotopyElement a("A", 2);
    CHECK(a.degree == 2);
    CHECK_THROWS_AS(HomotopyElement("a", 1), std::invalid_argument);
}

TEST_CASE("bracket degrees follow the attaching-sphere rule") {
    CHECK(bracket_degree({2, 2}) == 3);
    CHECK(bracket_degree({2, 2, 2}) == 5);
    CHECK(bracket_degree({2, 4, 4}) == 9);
    for (int r = 2; r <= 10; ++r) {
        std::vector<int> degrees(static_cast<std::size_t>(r), 2);
        CHECK(bracket_degree(degrees) == 2 * r - 1);
        CHECK(samelson_degree(bracket_degree(degrees)) == 2 * r - 2);
    }
    // the pairwise shift rule agrees only at order two
    CHECK(bracket_degree_pairwise({2, 4}) == bracket_degree({2, 4}));
    CHECK(bracket_degree_pairwise({2, 4, 4}) == 8);
    CHECK_THROWS_AS(bracket_degree({2}), std::invalid_argument);
    CHECK_THROWS_AS(bracket_degree({2, 1}), std::invalid_argument);
}

TEST_CASE("samelson degree is the desuspension") {
    CHECK(samelson_degree(3) == 2);
    CHECK(samelson_degree(4 * 3 + 1) == 12);
    CHECK(samelson_degree(2) == 1);
    CHECK_THROWS_AS(samelson_degree(1), std::invalid_argument);
}

TEST_CASE("action directions") {
    GeneratorSetPtr g = bg_generators();
    GradedPolynomial x = GradedPolynomial::from_generator(g, "X");
    GradedPolynomial y = GradedPolynomial::from_generator(g, "Y");
    CHECK(action_direction(1) == x + y);
    CHECK(action_direction(2) == x + Rational(4) * y);
    CHECK(action_direction(3) == x + Rational(9) * y);
    CHECK(*action_direction(5).homogeneous_degree() == 4);
    CHECK_THROWS_AS(action_direction(0), std::invalid_argument);
}

TEST_CASE("constraint system shape") {
    WhiteheadConstraintSystem sys = build_constraints(1);
    REQUIRE(sys.lhs.rows() == 2);
    REQUIRE(sys.lhs.cols() == 2);
    // c_0 + c_1 = 0 and c_0 = 1
    CHECK(sys.lhs.at(0, 0) == Rational(1));
    CHECK(sys.lhs.at(0, 1) == Rational(1));
    CHECK(sys.rhs[0] == Rational(0));
    CHECK(sys.lhs.at(1, 0) == Rational(1));
    CHECK(sys.lhs.at(1, 1) == Rational(0));
    CHECK(sys.rhs[1] == Rational(1));

    // k = 2: rows evaluate sum_j c_j (i^2)^(k-j) at the nodes 1 and 4
    WhiteheadConstraintSystem sys2 = build_constraints(2);
    REQUIRE(sys2.lhs.rows() == 3);
    CHECK(sys2.lhs.at(0, 0) == Rational(1));
    CHECK(sys2.lhs.at(0, 1) == Rational(1));
    CHECK(sys2.lhs.at(0, 2) == Rational(1));
    CHECK(sys2.lhs.at(1, 0) == Rational(16));
    CHECK(sys2.lhs.at(1, 1) == Rational(4));
    CHECK(sys2.lhs.at(1, 2) == Rational(1));

    // k = 0: only the normalization survives
    WhiteheadConstraintSystem sys0 = build_constraints(0);
    REQUIRE(sys0.lhs.rows() == 1);
    CHECK(sys0.lhs.at(0, 0) == Rational(1));
    CHECK(sys0.rhs[0] == Rational(1));
}

TEST_CASE("the constraint matrix is a nondegenerate Vandermonde system") {
    for (int k = 1; k <= 6; ++k) {
        WhiteheadConstraintSystem sys = build_constraints(k);
        CHECK(sys.interpolation_part().rank() == k);
        Rational det = sys.lhs.determinant();
        CHECK_FALSE(det.is_zero());
        Rational expected(1);  // product of node differences j^2 - i^2
        for (int i = 1; i <= k; ++i)
            for (int j = i + 1; j <= k; ++j)
                expected *= Rational(static_cast<std::int64_t>(j) * j -
                                     static_cast<std::int64_t>(i) * i);
        CHECK(det.abs() == expected);
    }
}

TEST_CASE("solve_relation reproduces the expanded products") {
    GeneratorSetPtr g = bg_generators();
    CHECK(exactalg::to_string(solve_relation(0)) == "A");
    CHECK(exactalg::to_string(solve_relation(1)) == "A*X - A*Y");
    CHECK(exactalg::to_string(solve_relation(2)) == "A*X^2 - 5*A*X*Y + 4*A*Y^2");
    CHECK(exactalg::to_string(solve_relation(3)) ==
          "A*X^3 - 14*A*X^2*Y + 49*A*X*Y^2 - 36*A*Y^3");
    for (int k = 0; k <= 6; ++k)
        CHECK(solve_relation(k) == expand_relation(k));
}

TEST_CASE("the relation vanishes along every action direction") {
    GeneratorSetPtr g = bg_generators();
    const std::size_t iy = *g->index_of("Y");
    for (int k = 0; k <= 5; ++k) {
        GradedPolynomial rel = solve_relation(k);
        std::vector<Rational> c(static_cast<std::size_t>(k) + 1);
        for (const auto& [m, coeff] : rel.terms())
            c[static_cast<std::size_t>(m.exps[iy])] = coeff;
        CHECK(c[0] == Rational(1));  // normalization: the X^k coefficient
        for (int i = 1; i <= k; ++i) {
            // evaluate the binary form at (X, Y) = (i^2, 1)
            Rational node(static_cast<std::int64_t>(i) * i);
            Rational value(0), power(1);
            for (int j = k; j >= 0; --j) {
                value += c[static_cast<std::size_t>(j)] * power;
                power *= node;
            }
            CHECK(value.is_zero());
        }
    }
}

TEST_CASE("minimal type filter") {
    MinimalTypeResult r1 = minimal_type(1);
    CHECK(r1.selected == WhiteheadType{1, 1});
    CHECK(r1.excluded.empty());

    MinimalTypeResult r2 = minimal_type(2);
    CHECK(r2.selected == WhiteheadType{1, 2});
    REQUIRE(r2.excluded.size() == 1);
    CHECK(r2.excluded[0] == WhiteheadType{3, 1});

    MinimalTypeResult r3 = minimal_type(3);
    CHECK(r3.selected == WhiteheadType{1, 3});
    REQUIRE(r3.excluded.size() == 2);
    CHECK(r3.excluded[0] == WhiteheadType{5, 1});
    CHECK(r3.excluded[1] == WhiteheadType{3, 2});

    for (int k = 1; k <= 6; ++k) {
        MinimalTypeResult r = minimal_type(k);
        CHECK(r.selected == WhiteheadType{1, k});
        CHECK(static_cast<int>(r.excluded.size()) == k - 1);
        for (const auto& cand : r.excluded) {
            CHECK(k > cand.s);
            CHECK(2 * cand.p + 4 * cand.s == 4 * k + 2);
            CHECK(cand.p >= 1);
        }
        CHECK(r.selected.order() == k + 1);
        CHECK(r.selected.target_degree() == 4 * k + 1);
    }
    CHECK_THROWS_AS(minimal_type(0), std::invalid_argument);
}

TEST_CASE("ring presentation cross-checks the model cohomology") {
    RingPresentation p1 = ring_presentation(1);
    CHECK(p1.series.cap() == 20);
    CHECK(exactalg::to_string(p1.relation) == "A*X - A*Y");
    std::vector<std::int64_t> head(p1.series.coeffs.begin(), p1.series.coeffs.begin() + 7);
    CHECK(head == std::vector<std::int64_t>{1, 0, 1, 0, 3, 0, 2});

    // k = 0: the quotient by A is the polynomial algebra on X, Y
    RingPresentation p0 = ring_presentation(0);
    CHECK(exactalg::to_string(p0.relation) == "A");
    GeneratorSetPtr xy = exactalg::make_generators({{"X", 4}, {"Y", 4}});
    CHECK(p0.series == exactalg::free_series(*xy, 20));
    CHECK(p0.series.coeffs[8] == 3);

    // k = 2: the relation has degree 10, so nothing drops before it
    RingPresentation p2 = ring_presentation(2);
    PoincareSeries free = exactalg::free_series(*p2.generators, 9);
    for (int n = 0; n <= 9; ++n)
        CHECK(p2.series.coeffs[n] == free.coeffs[n]);
    CHECK(p2.series.coeffs[10] == exactalg::free_series(*p2.generators, 10).coeffs[10] - 1);
}

TEST_CASE("ring presentation agrees with quotient dimensions for k = 0..4") {
    GeneratorSetPtr g = bg_generators();
    for (int k = 0; k <= 4; ++k) {
        RingPresentation pres = ring_presentation(k, 20);
        CHECK(pres.series == exactalg::quotient_dims(*g, expand_relation(k), 20));
    }
}

TEST_CASE("suspension degree shift between the group and its classifying space") {
    for (int k = 1; k <= 4; ++k) {
        GeneratorSetPtr bgp = bg_model_generators(k);
        GeneratorSetPtr loopp = loop_space_generators(k);
        const auto& bg = *bgp;
        const auto& loop = *loopp;
        auto deg = [](const exactalg::GeneratorSet& s, const char* n) {
            return s[*s.index_of(n)].degree;
        };
        CHECK(deg(bg, "A") == deg(loop, "a") + 1);
        CHECK(deg(bg, "X") == deg(loop, "x") + 1);
        CHECK(deg(bg, "Y") == deg(loop, "y") + 1);
        CHECK(deg(bg, "W") == deg(loop, "w") + 1);
        CHECK(deg(bg, "W") == 4 * k + 1);
    }
}

TEST_CASE("samelson order windows") {
    SamelsonWindow g0 = samelson_order_report(0, 1);
    CHECK(g0.min_order == 3);
    CHECK(g0.max_order == 3);
    CHECK(SamelsonWindow::degree_of(3) == 4);

    SamelsonWindow g1 = samelson_order_report(1, 1);
    CHECK(g1.min_order == 2);
    CHECK(g1.max_order == 2);
    CHECK(SamelsonWindow::degree_of(2) == 2);

    SamelsonWindow g2 = samelson_order_report(2, 2);
    CHECK(g2.min_order == 2);
    CHECK(g2.max_order == 5);
    CHECK(SamelsonWindow::degree_of(g2.min_order) == 2);
    CHECK(SamelsonWindow::degree_of(g2.max_order) == 8);

    CHECK(samelson_order_report(0, 3).min_order == 7);

    CHECK_THROWS_AS(samelson_order_report(2, 1), std::domain_error);
    CHECK_THROWS_AS(samelson_order_report(4, 2), std::domain_error);
    CHECK_THROWS_AS(samelson_order_report(1, 2), std::domain_error);
    CHECK_THROWS_AS(samelson_order_report(0, 0), std::invalid_argument);
}

TEST_CASE("action scaling is exact and round-trips") {
    for (int k = 1; k <= 8; ++k) {
        ActionScaling s = action_scaling(k);
        CHECK(s.factor == Rational(k));
        CHECK(Rational::from_string(s.factor.to_string()) == s.factor);
    }
    CHECK(samelson_indeterminacy_size() == 2);
}
