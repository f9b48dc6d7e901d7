#include "ruledgw/cli.hpp"

#include "ruledgw/algebra.hpp"
#include "ruledgw/errors.hpp"
#include "ruledgw/gwcalc.hpp"
#include "ruledgw/ruledtop.hpp"
#include "ruledgw/sullivan.hpp"
#include "ruledgw/whiteheadlab.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <future>
#include <ostream>
#include <random>
#include <sstream>

namespace cli {

using exactalg::GeneratorSetPtr;
using exactalg::GradedPolynomial;
using exactalg::PoincareSeries;
using exactalg::Rational;
using json = nlohmann::json;

namespace {

constexpr const char* kAnchorEgw = "Theorem egwruled";
constexpr const char* kAnchorDimcheck = "Eq. pgwdim1";
constexpr const char* kAnchorRelation = "Theorem rationaltypeclass";
constexpr const char* kAnchorPoincare = "Theorem rationaltypeclass";
constexpr const char* kAnchorModelVerify = "Theorem rationaltypeclass";
constexpr const char* kAnchorMinimalType = "Lemma sams";
constexpr const char* kAnchorCatalog = "Prop. mcduffacs(ii); Prop. mcduffdiff(i)";
constexpr const char* kAnchorVerifyAll = "full invariant suite";

struct Output {
    std::string subcommand;
    std::string anchor;
    json inputs = json::object();
    json result = json::object();
    // text mode renders lines in insertion order
    std::vector<std::pair<std::string, std::string>> text_lines;
};

void emit(const Output& o, bool as_json, std::ostream& out) {
    if (as_json) {
        json envelope;
        envelope["subcommand"] = o.subcommand;
        envelope["inputs"] = o.inputs;
        envelope["result"] = o.result;
        envelope["paper_anchor"] = o.anchor;
        envelope["exact"] = true;
        out << envelope.dump(2) << "\n";
        return;
    }
    out << "subcommand: " << o.subcommand << "\n";
    out << "anchor: " << o.anchor << "\n";
    for (const auto& [key, value] : o.text_lines)
        out << key << ": " << value << "\n";
    out << "exact: true\n";
}

json series_json(const PoincareSeries& s) {
    json arr = json::array();
    for (std::int64_t c : s.coeffs)
        arr.push_back(c);
    return arr;
}

std::string series_text(const PoincareSeries& s) {
    return series_json(s).dump();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open model file \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// ---------------------------------------------------------------------------
// verify-all checks. Each returns an empty string on success and a failure
// description otherwise; throwing also counts as failure.

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    return Rational(num(rng), den(rng));
}

GradedPolynomial random_homogeneous(std::mt19937_64& rng, const GeneratorSetPtr& gens,
                                    int degree) {
    GradedPolynomial p = GradedPolynomial::zero(gens);
    for (const auto& m : exactalg::monomial_basis(*gens, degree)) {
        std::uniform_int_distribution<int> keep(0, 2);
        if (keep(rng) == 0)
            continue;
        p += GradedPolynomial::from_term(gens, m, random_rational(rng));
    }
    return p;
}

GradedPolynomial random_poly(std::mt19937_64& rng, const GeneratorSetPtr& gens, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    GradedPolynomial p = random_homogeneous(rng, gens, deg(rng));
    p += random_homogeneous(rng, gens, deg(rng));
    return p;
}

std::string check_graded_commutativity(int) {
    GeneratorSetPtr gens =
        exactalg::make_generators({{"a", 1}, {"b", 2}, {"x", 3}, {"y", 3}, {"w", 4}});
    std::mt19937_64 rng(1001);
    std::uniform_int_distribution<int> deg(1, 12);
    for (int t = 0; t < 150; ++t) {
        int da = deg(rng), db = deg(rng);
        GradedPolynomial p = random_homogeneous(rng, gens, da);
        GradedPolynomial q = random_homogeneous(rng, gens, db);
        GradedPolynomial lhs = multiply(p, q);
        GradedPolynomial rhs = multiply(q, p);
        if (da * db % 2 != 0)
            rhs *= Rational(-1);
        if (!(lhs == rhs))
            return "sign law failed at degrees " + std::to_string(da) + "," + std::to_string(db);
    }
    return "";
}

std::string check_associativity(int) {
    GeneratorSetPtr gens =
        exactalg::make_generators({{"a", 1}, {"b", 2}, {"x", 3}, {"w", 4}});
    std::mt19937_64 rng(1002);
    for (int t = 0; t < 120; ++t) {
        GradedPolynomial p = random_poly(rng, gens, 8);
        GradedPolynomial q = random_poly(rng, gens, 8);
        GradedPolynomial r = random_poly(rng, gens, 8);
        if (!(multiply(multiply(p, q), r) == multiply(p, multiply(q, r))))
            return "associativity failed";
        if (!(multiply(p, q + r) == multiply(p, q) + multiply(p, r)))
            return "distributivity failed";
    }
    return "";
}

std::string check_free_series_enumeration(int cap) {
    std::vector<GeneratorSetPtr> sets = {
        exactalg::make_generators({{"A", 2}, {"X", 4}, {"Y", 4}}),
        exactalg::make_generators({{"a", 1}, {"x", 3}, {"y", 3}, {"w", 4}}),
        exactalg::make_generators({}),
    };
    int local_cap = std::min(cap, 14);
    for (const auto& gens : sets) {
        PoincareSeries s = exactalg::free_series(*gens, local_cap);
        for (int n = 0; n <= local_cap; ++n)
            if (s.coeffs[n] !=
                static_cast<std::int64_t>(exactalg::monomial_basis(*gens, n).size()))
                return "series mismatch at degree " + std::to_string(n);
    }
    return "";
}

std::string check_quotient_regularity(int cap, int kmax) {
    GeneratorSetPtr gens = whiteheadlab::bg_generators();
    PoincareSeries free = exactalg::free_series(*gens, cap);
    for (int k = 1; k <= kmax; ++k) {
        GradedPolynomial rel = whiteheadlab::solve_relation(k);
        int d = *rel.homogeneous_degree();
        PoincareSeries q = exactalg::quotient_dims(*gens, rel, cap);
        for (int n = 0; n <= cap; ++n) {
            std::int64_t closed = free.at(n) - free.at(n - d);
            if (q.coeffs[n] != closed)
                return "rank route disagrees with non-zero-divisor form at k=" +
                       std::to_string(k) + ", degree " + std::to_string(n);
        }
    }
    return "";
}

std::string check_integer_closure(int) {
    GeneratorSetPtr gens = exactalg::make_generators({{"A", 2}, {"X", 4}, {"Y", 4}});
    std::mt19937_64 rng(1005);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (int t = 0; t < 120; ++t) {
        GradedPolynomial p = GradedPolynomial::zero(gens);
        GradedPolynomial q = GradedPolynomial::zero(gens);
        for (int n = 0; n <= 8; n += 2) {
            for (const auto& m : exactalg::monomial_basis(*gens, n)) {
                p += GradedPolynomial::from_term(gens, m, Rational(coeff(rng)));
                q += GradedPolynomial::from_term(gens, m, Rational(coeff(rng)));
            }
        }
        GradedPolynomial prod = multiply(p, q);
        for (const auto& [m, c] : prod.terms())
            if (!c.is_integer())
                return "integer inputs produced a fractional coefficient";
    }
    return "";
}

sullivan::MinimalModel make_model(int k) {
    GeneratorSetPtr mgens = whiteheadlab::bg_model_generators(k);
    GradedPolynomial dw = exactalg::parse_polynomial(
        mgens, exactalg::to_string(whiteheadlab::solve_relation(k)));
    return sullivan::MinimalModel(mgens, {{"W", dw}});
}

std::string check_leibniz(int) {
    sullivan::MinimalModel model = make_model(1);
    GeneratorSetPtr gens = model.generators_ptr();
    std::mt19937_64 rng(1006);
    std::uniform_int_distribution<int> deg(1, 12);
    for (int t = 0; t < 150; ++t) {
        int da = deg(rng), db = deg(rng);
        GradedPolynomial p = random_homogeneous(rng, gens, da);
        GradedPolynomial q = random_homogeneous(rng, gens, db);
        GradedPolynomial lhs = apply_d(model, multiply(p, q));
        GradedPolynomial rhs = multiply(apply_d(model, p), q);
        GradedPolynomial second = multiply(p, apply_d(model, q));
        if (da % 2 != 0)
            second *= Rational(-1);
        rhs += second;
        if (!(lhs == rhs))
            return "Leibniz rule failed at degrees " + std::to_string(da) + "," +
                   std::to_string(db);
    }
    return "";
}

std::string check_d_raises_degree(int) {
    sullivan::MinimalModel model = make_model(2);
    GeneratorSetPtr gens = model.generators_ptr();
    std::mt19937_64 rng(1007);
    std::uniform_int_distribution<int> deg(1, 12);
    for (int t = 0; t < 120; ++t) {
        int d = deg(rng);
        GradedPolynomial p = random_homogeneous(rng, gens, d);
        GradedPolynomial dp = apply_d(model, p);
        if (dp.is_zero())
            continue;
        auto hd = dp.homogeneous_degree();
        if (!hd || *hd != d + 1)
            return "d did not raise degree by exactly one";
    }
    return "";
}

std::string check_d_squared(int cap, int kmax) {
    for (int k = 1; k <= kmax; ++k)
        if (!sullivan::verify_d_squared(make_model(k), std::min(cap, 12)))
            return "d^2 != 0 for the k=" + std::to_string(k) + " model";
    return "";
}

std::string check_model_vs_quotient(int cap, int kmax) {
    for (int k = 0; k <= kmax; ++k)
        whiteheadlab::ring_presentation(k, cap);  // throws on disagreement
    return "";
}

std::string check_degree_shift(int kmax) {
    for (int k = 1; k <= kmax; ++k) {
        GeneratorSetPtr bgp = whiteheadlab::bg_model_generators(k);
        GeneratorSetPtr loopp = whiteheadlab::loop_space_generators(k);
        const auto& bg = *bgp;
        const auto& loop = *loopp;
        if (bg.size() != loop.size())
            return "generator count mismatch";
        // Name-sorted orders differ, so pair by role.
        auto deg = [](const exactalg::GeneratorSet& s, const char* n) {
            return s[*s.index_of(n)].degree;
        };
        if (deg(bg, "A") != deg(loop, "a") + 1 || deg(bg, "X") != deg(loop, "x") + 1 ||
            deg(bg, "Y") != deg(loop, "y") + 1 || deg(bg, "W") != deg(loop, "w") + 1)
            return "suspension degree shift violated at k=" + std::to_string(k);
    }
    return "";
}

std::string check_intersection_bilinear(int) {
    std::mt19937_64 rng(1011);
    std::uniform_int_distribution<std::int64_t> v(-20, 20);
    for (int t = 0; t < 150; ++t) {
        ruledtop::SurfaceClass c1{v(rng), v(rng)}, c2{v(rng), v(rng)}, c3{v(rng), v(rng)};
        std::int64_t s = v(rng);
        if (ruledtop::intersect(c1, c2) != ruledtop::intersect(c2, c1))
            return "symmetry failed";
        ruledtop::SurfaceClass sum{c2.a + s * c3.a, c2.b + s * c3.b};
        if (ruledtop::intersect(c1, sum) !=
            ruledtop::intersect(c1, c2) + s * ruledtop::intersect(c1, c3))
            return "bilinearity failed";
    }
    return "";
}

std::string check_serre_range(int) {
    for (int g = 1; g <= 5; ++g)
        for (std::int64_t d = 2 * g - 1; d <= 2 * g + 8; ++d)
            if (ruledtop::serre_dual_bundle({g, d}).degree >= 0)
                return "dual bundle not negative for g=" + std::to_string(g);
    return "";
}

std::string check_euler_multiplicative(int) {
    std::mt19937_64 rng(1013);
    std::uniform_int_distribution<int> dim(0, 4);
    std::uniform_int_distribution<std::int64_t> root(-3, 3);
    // independent route: coefficient of h^p in prod (1 + r_i h) mod h^(p+1)
    auto top_coeff = [](const std::vector<std::int64_t>& roots, int p) {
        std::vector<std::int64_t> poly(static_cast<std::size_t>(p) + 1, 0);
        poly[0] = 1;
        for (std::int64_t r : roots)
            for (int n = p; n >= 1; --n)
                poly[n] += r * poly[n - 1];
        return poly[static_cast<std::size_t>(p)];
    };
    for (int t = 0; t < 120; ++t) {
        int p1 = dim(rng), p2 = dim(rng);
        ruledtop::SplitBundleOverCP e1{p1, {}}, e2{p2, {}};
        for (int i = 0; i < p1; ++i)
            e1.chern_roots.push_back(root(rng));
        for (int i = 0; i < p2; ++i)
            e2.chern_roots.push_back(root(rng));
        ruledtop::SplitBundleOverCP cat{p1 + p2, e1.chern_roots};
        cat.chern_roots.insert(cat.chern_roots.end(), e2.chern_roots.begin(),
                               e2.chern_roots.end());
        std::int64_t direct = ruledtop::euler_number(cat);
        if (direct != ruledtop::euler_number(e1) * ruledtop::euler_number(e2))
            return "concatenation broke multiplicativity";
        if (direct != top_coeff(cat.chern_roots, p1 + p2))
            return "product differs from truncated-ring coefficient";
    }
    return "";
}

std::string check_obstruction_rank_identity(int kmax) {
    for (int k = 1; k <= kmax; ++k) {
        if (ruledtop::rr_h0({0, 2 * k - 2}) != 2 * k - 1)
            return "genus-0 rank wrong at k=" + std::to_string(k);
        for (int g = 1; g <= 4; ++g)
            if (ruledtop::rr_h0(ruledtop::serre_dual_bundle({g, -2 * k})) != 2 * k + g - 1)
                return "rank identity failed at g=" + std::to_string(g) +
                       ", k=" + std::to_string(k);
    }
    return "";
}

std::string check_index_zero_iff_admissible(int kmax) {
    for (int g = 0; g <= 4; ++g)
        for (int k = 1; k <= kmax; ++k)
            for (int p = 0; p <= 20; ++p) {
                bool zero = gwcalc::index(gwcalc::GWSetup(g, k, p, 0)) == 0;
                bool admissible = p == gwcalc::admissible_p(g, k);
                if (zero != admissible)
                    return "index criterion failed at g=" + std::to_string(g) +
                           ", k=" + std::to_string(k) + ", p=" + std::to_string(p);
            }
    return "";
}

std::string check_rank_equals_admissible(int kmax) {
    for (int g = 0; g <= 4; ++g)
        for (int k = 1; k <= kmax; ++k)
            if (gwcalc::obstruction_rank(g, k) != gwcalc::admissible_p(g, k))
                return "rank/level coincidence failed at g=" + std::to_string(g) +
                       ", k=" + std::to_string(k);
    return "";
}

std::string check_egw_shape(int kmax) {
    for (int g = 0; g <= 4; ++g)
        for (int k = 1; k <= kmax; ++k) {
            gwcalc::EquivariantInvariant inv = gwcalc::egw_ruled(g, k);
            if (inv.coefficients.size() != 1)
                return "more than one term";
            auto [exp, c] = *inv.coefficients.begin();
            if (exp != 2 * k + g - 1)
                return "wrong exponent";
            if (!(c.abs() == Rational(1)))
                return "magnitude differs from 1";
            int expected_sign = exp % 2 == 0 ? 1 : -1;
            if (c.sign() != expected_sign)
                return "sign differs from (-1)^p";
            if (inv.sign_determined)
                return "sign reported as determined";
        }
    return "";
}

std::string check_pgw_linearity(int) {
    std::mt19937_64 rng(1018);
    std::uniform_int_distribution<int> n(1, 7);
    for (int t = 0; t < 150; ++t) {
        gwcalc::PGWValue a{random_rational(rng)}, b{random_rational(rng)};
        if (!(gwcalc::pgw_sum(a, b).value == a.value + b.value))
            return "sum is not additive";
        int cover = n(rng);
        if (!(gwcalc::pgw_cover(a, cover).value == Rational(cover) * a.value))
            return "cover is not N-linear";
        if (!a.value.is_zero() && gwcalc::pgw_cover(a, cover).value.is_zero())
            return "cover killed a nontrivial value";
    }
    return "";
}

std::string check_index_even(int kmax) {
    for (int g = 0; g <= 4; ++g)
        for (int k = 1; k <= kmax; ++k)
            for (int p = 0; p <= 20; ++p)
                for (int m = 0; m <= 3; ++m)
                    if (gwcalc::index(gwcalc::GWSetup(g, k, p, m)) % 2 != 0)
                        return "odd index";
    return "";
}

std::string check_relation_interpolation(int kmax) {
    GeneratorSetPtr gens = whiteheadlab::bg_generators();
    const std::size_t ia = *gens->index_of("A");
    const std::size_t iy = *gens->index_of("Y");
    for (int k = 0; k <= kmax; ++k) {
        GradedPolynomial rel = whiteheadlab::solve_relation(k);
        std::vector<Rational> c(static_cast<std::size_t>(k) + 1);
        for (const auto& [m, coeff] : rel.terms()) {
            if (m.exps[ia] != 1)
                return "term without the A factor";
            c[static_cast<std::size_t>(m.exps[iy])] = coeff;
        }
        if (!(c[0] == Rational(1)))
            return "normalization c_0 != 1 at k=" + std::to_string(k);
        for (int i = 1; i <= k; ++i) {
            Rational node(static_cast<std::int64_t>(i) * i);
            Rational value(0), power(1);
            for (int j = k; j >= 0; --j) {  // sum_j c_j node^(k-j)
                value += c[static_cast<std::size_t>(j)] * power;
                power *= node;
            }
            if (!value.is_zero())
                return "relation does not vanish along direction i=" + std::to_string(i);
        }
    }
    return "";
}

std::string check_vandermonde(int kmax) {
    for (int k = 1; k <= kmax; ++k) {
        whiteheadlab::WhiteheadConstraintSystem sys = whiteheadlab::build_constraints(k);
        if (sys.interpolation_part().rank() != k)
            return "interpolation rank dropped at k=" + std::to_string(k);
        Rational det = sys.lhs.determinant();
        if (det.is_zero())
            return "singular system at k=" + std::to_string(k);
        Rational expected(1);  // |det| = prod_{i<j} (j^2 - i^2) on distinct nodes
        for (int i = 1; i <= k; ++i)
            for (int j = i + 1; j <= k; ++j)
                expected *= Rational(static_cast<std::int64_t>(j) * j -
                                     static_cast<std::int64_t>(i) * i);
        if (!(det.abs() == expected))
            return "determinant magnitude differs from the node-difference product";
    }
    return "";
}

std::string check_minimal_type(int kmax) {
    for (int k = 1; k <= std::max(kmax, 6); ++k) {
        whiteheadlab::MinimalTypeResult r = whiteheadlab::minimal_type(k);
        if (!(r.selected == whiteheadlab::WhiteheadType{1, k}))
            return "survivor is not (1,k) at k=" + std::to_string(k);
        if (static_cast<int>(r.excluded.size()) != k - 1)
            return "wrong number of discarded candidates";
        for (const auto& cand : r.excluded)
            if (!(k > cand.s))
                return "candidate excluded without k > s";
    }
    return "";
}

std::string check_bracket_degrees(int) {
    for (int r = 2; r <= 10; ++r) {
        std::vector<int> degrees(static_cast<std::size_t>(r), 2);
        int w = whiteheadlab::bracket_degree(degrees);
        if (w != 2 * r - 1)
            return "order-" + std::to_string(r) + " bracket degree wrong";
        if (whiteheadlab::samelson_degree(w) != 2 * r - 2)
            return "desuspension degree wrong";
    }
    if (whiteheadlab::bracket_degree({2, 4}) != whiteheadlab::bracket_degree_pairwise({2, 4}))
        return "rules disagree at order 2";
    return "";
}

std::string check_action_scaling(int kmax) {
    for (int k = 1; k <= std::max(kmax, 8); ++k) {
        whiteheadlab::ActionScaling s = whiteheadlab::action_scaling(k);
        if (!(s.factor == Rational(k)))
            return "scaling factor differs from k";
        if (!(Rational::from_string(s.factor.to_string()) == s.factor))
            return "serialization round-trip failed";
    }
    return "";
}

}  // namespace

int VerifyReport::passed() const {
    return static_cast<int>(
        std::count_if(items.begin(), items.end(), [](const VerifyItem& i) { return i.passed; }));
}

int VerifyReport::failed() const {
    return static_cast<int>(items.size()) - passed();
}

VerifyReport verify_all(int cap, int kmax) {
    if (cap < 10)
        throw std::invalid_argument("verify_all: cap must be >= 10");
    if (kmax < 1)
        throw std::invalid_argument("verify_all: kmax must be >= 1");
    using Check = std::pair<std::string, std::function<std::string()>>;
    const std::vector<Check> checks = {
        {"exactalg/graded-commutativity", [=] { return check_graded_commutativity(cap); }},
        {"exactalg/associativity-distributivity", [=] { return check_associativity(cap); }},
        {"exactalg/free-series-enumeration", [=] { return check_free_series_enumeration(cap); }},
        {"exactalg/quotient-regularity", [=] { return check_quotient_regularity(cap, kmax); }},
        {"exactalg/integer-closure", [=] { return check_integer_closure(cap); }},
        {"sullivan/leibniz-rule", [=] { return check_leibniz(cap); }},
        {"sullivan/d-raises-degree", [=] { return check_d_raises_degree(cap); }},
        {"sullivan/d-squared-zero", [=] { return check_d_squared(cap, kmax); }},
        {"sullivan/model-vs-quotient", [=] { return check_model_vs_quotient(cap, kmax); }},
        {"sullivan/suspension-degree-shift", [=] { return check_degree_shift(kmax); }},
        {"ruledtop/intersection-bilinear", [=] { return check_intersection_bilinear(cap); }},
        {"ruledtop/serre-dual-negative", [=] { return check_serre_range(cap); }},
        {"ruledtop/euler-multiplicative", [=] { return check_euler_multiplicative(cap); }},
        {"ruledtop/obstruction-rank-identity",
         [=] { return check_obstruction_rank_identity(kmax); }},
        {"gwcalc/index-zero-iff-admissible",
         [=] { return check_index_zero_iff_admissible(kmax); }},
        {"gwcalc/rank-equals-admissible", [=] { return check_rank_equals_admissible(kmax); }},
        {"gwcalc/egw-unit-term", [=] { return check_egw_shape(kmax); }},
        {"gwcalc/pgw-linearity", [=] { return check_pgw_linearity(cap); }},
        {"gwcalc/index-parity", [=] { return check_index_even(kmax); }},
        {"whiteheadlab/relation-interpolation",
         [=] { return check_relation_interpolation(kmax); }},
        {"whiteheadlab/vandermonde-nondegenerate", [=] { return check_vandermonde(kmax); }},
        {"whiteheadlab/minimal-type-filter", [=] { return check_minimal_type(kmax); }},
        {"whiteheadlab/bracket-degrees", [=] { return check_bracket_degrees(cap); }},
        {"whiteheadlab/action-scaling-roundtrip", [=] { return check_action_scaling(kmax); }},
    };
    std::vector<std::future<std::string>> futures;
    futures.reserve(checks.size());
    for (const auto& [name, fn] : checks) {
        futures.push_back(std::async(std::launch::async, [fn]() -> std::string {
            try {
                return fn();
            } catch (const std::exception& e) {
                return std::string("exception: ") + e.what();
            }
        }));
    }
    VerifyReport report;
    for (std::size_t i = 0; i < checks.size(); ++i) {
        std::string detail = futures[i].get();
        report.items.push_back({checks[i].first, detail.empty(), detail});
    }
    return report;
}

namespace {

int run_egw(int genus, int k, bool as_json, std::ostream& out) {
    gwcalc::EquivariantInvariant inv = gwcalc::egw_ruled(genus, k);
    auto [exp, coeff] = *inv.coefficients.begin();
    Output o;
    o.subcommand = "egw";
    o.anchor = kAnchorEgw;
    o.inputs = {{"genus", genus}, {"k", k}};
    o.result = {{"exponent", exp},
                {"magnitude", 1},
                {"sign", coeff.sign()},
                {"sign_convention", "(-1)^p"},
                {"sign_determined", inv.sign_determined},
                {"value", gwcalc::to_string(inv)},
                {"obstruction_rank", gwcalc::obstruction_rank(genus, k)}};
    o.text_lines = {{"genus", std::to_string(genus)},
                    {"k", std::to_string(k)},
                    {"exponent", std::to_string(exp)},
                    {"magnitude", "1"},
                    {"sign", std::to_string(coeff.sign())},
                    {"sign_convention", "(-1)^p"},
                    {"sign_determined", "false"},
                    {"value", gwcalc::to_string(inv)},
                    {"obstruction_rank", std::to_string(gwcalc::obstruction_rank(genus, k))}};
    emit(o, as_json, out);
    return 0;
}

int run_dimcheck(int genus, int k, int p, int m, bool as_json, std::ostream& out) {
    gwcalc::GWSetup setup(genus, k, p, m);
    int idx = gwcalc::index(setup);
    int crit = gwcalc::admissible_p(genus, k);
    bool admissible = idx == 0;
    Output o;
    o.subcommand = "dimcheck";
    o.anchor = kAnchorDimcheck;
    o.inputs = {{"genus", genus}, {"k", k}, {"p", p}, {"m", m}};
    o.result = {{"index", idx}, {"admissible", admissible}, {"admissible_p", crit}};
    o.text_lines = {{"genus", std::to_string(genus)},
                    {"k", std::to_string(k)},
                    {"p", std::to_string(p)},
                    {"m", std::to_string(m)},
                    {"index", std::to_string(idx)},
                    {"admissible", admissible ? "true" : "false"},
                    {"admissible_p", std::to_string(crit)}};
    emit(o, as_json, out);
    return 0;
}

json coefficients_json(const GradedPolynomial& rel, int k) {
    GeneratorSetPtr gens = rel.generators_ptr();
    const std::size_t iy = *gens->index_of("Y");
    std::vector<Rational> c(static_cast<std::size_t>(k) + 1);
    for (const auto& [m, coeff] : rel.terms())
        c[static_cast<std::size_t>(m.exps[iy])] = coeff;
    json arr = json::array();
    for (const auto& v : c)
        arr.push_back(v.to_string());
    return arr;
}

int run_relation(int k, bool as_json, std::ostream& out) {
    GradedPolynomial rel = whiteheadlab::solve_relation(k);
    std::string rendered = exactalg::to_string(rel);
    Output o;
    o.subcommand = "relation";
    o.anchor = kAnchorRelation;
    o.inputs = {{"k", k}};
    o.result = {{"relation", rendered},
                {"degree", 4 * k + 2},
                {"coefficients", coefficients_json(rel, k)}};
    o.text_lines = {{"k", std::to_string(k)},
                    {"relation", rendered},
                    {"degree", std::to_string(4 * k + 2)}};
    emit(o, as_json, out);
    return 0;
}

int run_poincare(int k, int cap, bool as_json, std::ostream& out) {
    whiteheadlab::RingPresentation pres = whiteheadlab::ring_presentation(k, cap);
    json gens_json = json::object();
    for (const auto& g : pres.generators->generators())
        gens_json[g.name] = g.degree;
    Output o;
    o.subcommand = "poincare";
    o.anchor = kAnchorPoincare;
    o.inputs = {{"k", k}, {"cap", cap}};
    o.result = {{"generators", gens_json},
                {"relation", exactalg::to_string(pres.relation)},
                {"series", series_json(pres.series)}};
    o.text_lines = {{"k", std::to_string(k)},
                    {"cap", std::to_string(cap)},
                    {"relation", exactalg::to_string(pres.relation)},
                    {"series", series_text(pres.series)}};
    emit(o, as_json, out);
    return 0;
}

int run_model_verify(const std::string& path, int cap, bool as_json, std::ostream& out) {
    sullivan::MinimalModel model = sullivan::parse_model(read_file(path));
    bool ok = sullivan::verify_d_squared(model, cap);
    PoincareSeries dims = sullivan::cohomology_dims(model, cap);
    json gens_json = json::object();
    for (const auto& g : model.generators().generators())
        gens_json[g.name] = g.degree;
    Output o;
    o.subcommand = "model-verify";
    o.anchor = kAnchorModelVerify;
    o.inputs = {{"model", path}, {"cap", cap}};
    o.result = {{"d_squared_zero", ok},
                {"generators", gens_json},
                {"cohomology", series_json(dims)}};
    o.text_lines = {{"model", path},
                    {"cap", std::to_string(cap)},
                    {"d_squared_zero", ok ? "true" : "false"},
                    {"cohomology", series_text(dims)}};
    emit(o, as_json, out);
    return 0;
}

int run_minimal_type(int k, bool as_json, std::ostream& out) {
    whiteheadlab::MinimalTypeResult r = whiteheadlab::minimal_type(k);
    json excluded = json::array();
    std::string excluded_text;
    for (const auto& cand : r.excluded) {
        excluded.push_back({{"p", cand.p}, {"s", cand.s}, {"reason", "k > s"}});
        if (!excluded_text.empty())
            excluded_text += ", ";
        excluded_text += "(" + std::to_string(cand.p) + "," + std::to_string(cand.s) +
                         ") excluded by k > s";
    }
    if (excluded_text.empty())
        excluded_text = "none";
    Output o;
    o.subcommand = "minimal-type";
    o.anchor = kAnchorMinimalType;
    o.inputs = {{"k", k}};
    o.result = {{"selected", {{"p", r.selected.p}, {"s", r.selected.s}}},
                {"order", r.selected.order()},
                {"target_degree", r.selected.target_degree()},
                {"excluded", excluded}};
    o.text_lines = {{"k", std::to_string(k)},
                    {"selected", "(" + std::to_string(r.selected.p) + "," +
                                     std::to_string(r.selected.s) + ")"},
                    {"order", std::to_string(r.selected.order())},
                    {"target_degree", std::to_string(r.selected.target_degree())},
                    {"excluded", excluded_text}};
    emit(o, as_json, out);
    return 0;
}

int run_catalog(int genus, int k, int imax, bool as_json, std::ostream& out) {
    json dims = json::array();
    std::string dims_text;
    for (int i = 0; i <= imax; ++i) {
        int d = ruledtop::d0_homotopy_dim(genus, i);
        dims.push_back(d);
        if (!dims_text.empty())
            dims_text += ",";
        dims_text += std::to_string(d);
    }
    whiteheadlab::ActionScaling scaling = whiteheadlab::action_scaling(k);
    json samelson = nullptr;
    std::string samelson_text = "undefined";
    try {
        whiteheadlab::SamelsonWindow w = whiteheadlab::samelson_order_report(genus, k);
        json degrees = json::array();
        std::string deg_text;
        for (int p = w.min_order; p <= w.max_order; ++p) {
            degrees.push_back(whiteheadlab::SamelsonWindow::degree_of(p));
            if (!deg_text.empty())
                deg_text += ",";
            deg_text += std::to_string(whiteheadlab::SamelsonWindow::degree_of(p));
        }
        samelson = {{"min_order", w.min_order}, {"max_order", w.max_order},
                    {"degrees", degrees}};
        samelson_text = "orders " + std::to_string(w.min_order) + ".." +
                        std::to_string(w.max_order) + ", degrees " + deg_text;
    } catch (const std::domain_error&) {
        // outside the cataloged range; reported as undefined
    }
    json indeterminacy = genus == 0 ? json(whiteheadlab::samelson_indeterminacy_size())
                                    : json(nullptr);
    Output o;
    o.subcommand = "catalog";
    o.anchor = kAnchorCatalog;
    o.inputs = {{"genus", genus}, {"k", k}, {"imax", imax}};
    o.result = {{"stratum_codim", ruledtop::stratum_codim(genus, k)},
                {"d0_homotopy_dims", dims},
                {"scaling_factor", scaling.factor.to_string()},
                {"samelson_orders", samelson},
                {"indeterminacy_size", indeterminacy}};
    o.text_lines = {{"genus", std::to_string(genus)},
                    {"k", std::to_string(k)},
                    {"imax", std::to_string(imax)},
                    {"stratum_codim", std::to_string(ruledtop::stratum_codim(genus, k))},
                    {"d0_homotopy_dims", "[" + dims_text + "]"},
                    {"scaling_factor", scaling.factor.to_string()},
                    {"samelson_orders", samelson_text},
                    {"indeterminacy_size",
                     genus == 0 ? std::to_string(whiteheadlab::samelson_indeterminacy_size())
                                : std::string("undefined")}};
    emit(o, as_json, out);
    return 0;
}

int run_verify_all(int cap, int kmax, bool as_json, std::ostream& out) {
    VerifyReport report = verify_all(cap, kmax);
    Output o;
    o.subcommand = "verify-all";
    o.anchor = kAnchorVerifyAll;
    o.inputs = {{"cap", cap}, {"kmax", kmax}};
    json items = json::array();
    for (const auto& item : report.items)
        items.push_back({{"name", item.name}, {"passed", item.passed},
                         {"detail", item.detail}});
    o.result = {{"items", items}, {"passed", report.passed()}, {"failed", report.failed()}};
    if (as_json) {
        emit(o, true, out);
    } else {
        out << "subcommand: verify-all\n";
        out << "anchor: " << kAnchorVerifyAll << "\n";
        out << "cap: " << cap << "\n";
        out << "kmax: " << kmax << "\n";
        for (const auto& item : report.items) {
            if (item.passed)
                out << "PASS " << item.name << "\n";
            else
                out << "FAIL " << item.name << ": " << item.detail << "\n";
        }
        out << "passed: " << report.passed() << "\n";
        out << "failed: " << report.failed() << "\n";
        out << "exact: true\n";
    }
    return report.all_passed() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computations for circle actions on ruled surfaces"};
    app.name("ruledgw");
    app.require_subcommand(1);

    int genus = 0, k = 1, p = 0, m = 0, cap = 20, imax = 6, kmax = 3;
    std::string format = "text";
    std::string model_path;
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "text"}))
            ->capture_default_str();
    };

    CLI::App* egw = app.add_subcommand("egw", "equivariant invariant of the class A - kF");
    egw->add_option("--genus", genus, "genus of the base curve")->required()
        ->check(CLI::Range(0, 1000));
    egw->add_option("--k", k, "action index, class A - kF")->required()
        ->check(CLI::Range(1, 1000));
    add_format(egw);

    CLI::App* dimcheck = app.add_subcommand("dimcheck", "expected-dimension condition");
    dimcheck->add_option("--genus", genus)->required()->check(CLI::Range(0, 1000));
    dimcheck->add_option("--k", k)->required()->check(CLI::Range(1, 1000));
    dimcheck->add_option("--p", p, "base dimension")->required()->check(CLI::Range(0, 100000));
    dimcheck->add_option("--m", m, "marked points")->check(CLI::Range(0, 100000));
    add_format(dimcheck);

    CLI::App* relation = app.add_subcommand("relation", "ring relation for a given k");
    relation->add_option("--k", k)->required()->check(CLI::Range(0, 60));
    add_format(relation);

    CLI::App* poincare = app.add_subcommand("poincare", "quotient-ring dimension series");
    poincare->add_option("--k", k)->required()->check(CLI::Range(0, 8));
    poincare->add_option("--cap", cap, "maximum degree")->check(CLI::Range(0, 60))
        ->capture_default_str();
    add_format(poincare);

    CLI::App* model_verify =
        app.add_subcommand("model-verify", "check a minimal model file and its cohomology");
    model_verify->add_option("--model", model_path, "model file")->required();
    model_verify->add_option("--cap", cap, "maximum degree")->check(CLI::Range(0, 60));
    add_format(model_verify);

    CLI::App* minimal_type = app.add_subcommand("minimal-type", "minimal nonvanishing order");
    minimal_type->add_option("--k", k)->required()->check(CLI::Range(1, 1000));
    add_format(minimal_type);

    CLI::App* catalog = app.add_subcommand("catalog", "numeric catalogs per genus");
    catalog->add_option("--genus", genus)->required()->check(CLI::Range(0, 1000));
    catalog->add_option("--k", k)->check(CLI::Range(1, 1000))->capture_default_str();
    catalog->add_option("--imax", imax, "largest homotopy degree listed")
        ->check(CLI::Range(0, 1000))->capture_default_str();
    add_format(catalog);

    CLI::App* verify = app.add_subcommand("verify-all", "run the full invariant suite");
    verify->add_option("--cap", cap)->check(CLI::Range(10, 60))->capture_default_str();
    verify->add_option("--kmax", kmax)->check(CLI::Range(1, 8))->capture_default_str();
    add_format(verify);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    const bool as_json = format == "json";
    const int model_cap = model_verify->count("--cap") ? cap : 12;
    try {
        if (egw->parsed())
            return run_egw(genus, k, as_json, out);
        if (dimcheck->parsed())
            return run_dimcheck(genus, k, p, m, as_json, out);
        if (relation->parsed())
            return run_relation(k, as_json, out);
        if (poincare->parsed())
            return run_poincare(k, cap, as_json, out);
        if (model_verify->parsed())
            return run_model_verify(model_path, model_cap, as_json, out);
        if (minimal_type->parsed())
            return run_minimal_type(k, as_json, out);
        if (catalog->parsed())
            return run_catalog(genus, k, imax, as_json, out);
        if (verify->parsed())
            return run_verify_all(cap, kmax, as_json, out);
    } catch (const ruledgw::TheoremViolation& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
    err << "usage error: no subcommand\n";
    return 2;
}

}  // namespace cli
