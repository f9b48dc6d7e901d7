#include "ruledgw/sullivan.hpp"

#include "ruledgw/errors.hpp"
#include "ruledgw/linalg.hpp"

#include <regex>
#include <sstream>
#include <stdexcept>

namespace sullivan {

using exactalg::GeneratorSet;
using exactalg::GeneratorSetPtr;
using exactalg::GradedPolynomial;
using exactalg::Monomial;
using exactalg::PoincareSeries;
using exactalg::QMatrix;
using exactalg::Rational;

namespace {

bool is_decomposable(const GradedPolynomial& p) {
    for (const auto& [m, c] : p.terms()) {
        int factors = 0;
        for (int e : m.exps)
            factors += e;
        if (factors < 2)
            return false;
    }
    return true;
}

GradedPolynomial d_monomial(const MinimalModel& model, const Monomial& m);

GradedPolynomial d_poly(const MinimalModel& model, const GradedPolynomial& p) {
    GradedPolynomial out = GradedPolynomial::zero(model.generators_ptr());
    for (const auto& [m, c] : p.terms())
        out += c * d_monomial(model, m);
    return out;
}

// d(g * m') = d(g) m' + (-1)^deg(g) g d(m'), peeling the first generator.
GradedPolynomial d_monomial(const MinimalModel& model, const Monomial& m) {
    GeneratorSetPtr gens = model.generators_ptr();
    std::size_t i = 0;
    while (i < gens->size() && m.exps[i] == 0)
        ++i;
    if (i == gens->size())
        return GradedPolynomial::zero(gens);
    Monomial rest = m;
    rest.exps[i] -= 1;
    GradedPolynomial rest_poly = GradedPolynomial::from_term(gens, rest, Rational(1));
    GradedPolynomial head = GradedPolynomial::from_generator(gens, (*gens)[i].name);
    GradedPolynomial out = multiply(model.d_of(i), rest_poly);
    GradedPolynomial tail = d_monomial(model, rest);
    if (!tail.is_zero()) {
        GradedPolynomial second = multiply(head, tail);
        if ((*gens)[i].degree % 2 != 0)
            second *= Rational(-1);
        out += second;
    }
    return out;
}

}  // namespace

MinimalModel::MinimalModel(GeneratorSetPtr gens,
                           std::map<std::string, GradedPolynomial> differentials)
    : gens_(std::move(gens)) {
    if (!gens_)
        throw std::invalid_argument("MinimalModel: null generator set");
    d_.assign(gens_->size(), GradedPolynomial::zero(gens_));
    for (auto& [name, poly] : differentials) {
        auto idx = gens_->index_of(name);
        if (!idx)
            throw std::invalid_argument("MinimalModel: differential for unknown generator \"" +
                                        name + "\"");
        if (!(poly.generators() == *gens_))
            throw ruledgw::IncompatibleGenerators(
                "MinimalModel: differential of \"" + name + "\" over a different generator set");
        if (poly.is_zero())
            continue;
        auto deg = poly.homogeneous_degree();
        if (!deg || *deg != (*gens_)[*idx].degree + 1)
            throw std::invalid_argument("MinimalModel: d(" + name +
                                        ") must be homogeneous of degree " +
                                        std::to_string((*gens_)[*idx].degree + 1));
        if (!is_decomposable(poly))
            throw std::invalid_argument("MinimalModel: d(" + name +
                                        ") must be decomposable (products of >= 2 generators)");
        d_[*idx] = poly;
    }
    for (std::size_t i = 0; i < gens_->size(); ++i) {
        if (d_[i].is_zero())
            continue;
        if (!d_poly(*this, d_[i]).is_zero())
            throw std::invalid_argument("MinimalModel: d(d(" + (*gens_)[i].name +
                                        ")) is nonzero");
    }
}

CochainBasis cochain_basis(const MinimalModel& m, int degree) {
    return CochainBasis{degree, exactalg::monomial_basis(m.generators(), degree)};
}

GradedPolynomial apply_d(const MinimalModel& m, const GradedPolynomial& p) {
    if (!(p.generators() == m.generators()))
        throw ruledgw::IncompatibleGenerators("apply_d: polynomial over a different generator set");
    return d_poly(m, p);
}

bool verify_d_squared(const MinimalModel& m, int cap) {
    for (int n = 0; n <= cap; ++n) {
        for (const Monomial& b : exactalg::monomial_basis(m.generators(), n)) {
            GradedPolynomial bp =
                GradedPolynomial::from_term(m.generators_ptr(), b, Rational(1));
            if (!apply_d(m, apply_d(m, bp)).is_zero())
                return false;
        }
    }
    return true;
}

PoincareSeries cohomology_dims(const MinimalModel& m, int cap) {
    if (cap < 0)
        throw std::invalid_argument("cohomology_dims: negative cap");
    if (!verify_d_squared(m, cap + 1))
        throw ruledgw::TheoremViolation("cohomology_dims: d^2 != 0 below the cap");
    // rank_d[n] = rank of d restricted to degree n.
    std::vector<int> rank_d(static_cast<std::size_t>(cap) + 1, 0);
    std::vector<std::int64_t> dim_c(static_cast<std::size_t>(cap) + 1, 0);
    for (int n = 0; n <= cap; ++n) {
        std::vector<Monomial> src = cochain_basis(m, n).monomials;
        std::vector<Monomial> dst = cochain_basis(m, n + 1).monomials;
        dim_c[n] = static_cast<std::int64_t>(src.size());
        if (src.empty() || dst.empty())
            continue;
        std::map<Monomial, std::size_t, exactalg::MonomialOrder> dst_index;
        for (std::size_t i = 0; i < dst.size(); ++i)
            dst_index.emplace(dst[i], i);
        QMatrix mat(dst.size(), src.size());
        for (std::size_t j = 0; j < src.size(); ++j) {
            GradedPolynomial image = apply_d(
                m, GradedPolynomial::from_term(m.generators_ptr(), src[j], Rational(1)));
            for (const auto& [mono, c] : image.terms())
                mat.at(dst_index.at(mono), j) = c;
        }
        rank_d[n] = mat.rank();
    }
    std::vector<std::int64_t> dims(static_cast<std::size_t>(cap) + 1, 0);
    for (int n = 0; n <= cap; ++n) {
        std::int64_t kernel = dim_c[n] - rank_d[n];
        std::int64_t image = n == 0 ? 0 : rank_d[n - 1];
        dims[n] = kernel - image;
    }
    return PoincareSeries{std::move(dims)};
}

MinimalModel parse_model(std::string_view text) {
    static const std::regex gen_line(R"(^\s*([A-Za-z_][A-Za-z0-9_]*)\s*:\s*(\d+)\s*$)");
    static const std::regex diff_line(R"(^\s*d\s*([A-Za-z_][A-Za-z0-9_]*)\s*=(.*)$)");

    std::vector<exactalg::Generator> gens;
    std::vector<std::pair<std::string, std::string>> diffs;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::smatch match;
        if (std::regex_match(line, match, gen_line)) {
            gens.push_back({match[1].str(), std::stoi(match[2].str())});
            continue;
        }
        if (std::regex_match(line, match, diff_line)) {
            diffs.emplace_back(match[1].str(), match[2].str());
            continue;
        }
        throw std::invalid_argument("model parse error at line " + std::to_string(lineno) +
                                    ": expected \"name : degree\" or \"d name = polynomial\"");
    }
    GeneratorSetPtr set = exactalg::make_generators(std::move(gens));
    std::map<std::string, GradedPolynomial> differentials;
    for (const auto& [name, poly_text] : diffs) {
        if (differentials.count(name))
            throw std::invalid_argument("model parse error: duplicate differential for \"" +
                                        name + "\"");
        differentials.emplace(name, exactalg::parse_polynomial(set, poly_text));
    }
    return MinimalModel(set, std::move(differentials));
}

std::string to_string(const MinimalModel& m) {
    std::string out;
    const GeneratorSet& gens = m.generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
        out += gens[i].name + " : " + std::to_string(gens[i].degree) + "\n";
    for (std::size_t i = 0; i < gens.size(); ++i)
        out += "d " + gens[i].name + " = " + exactalg::to_string(m.d_of(i)) + "\n";
    return out;
}

}  // namespace sullivan
