#include "ruledgw/algebra.hpp"

#include "ruledgw/errors.hpp"
#include "ruledgw/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace exactalg {

namespace {

bool valid_name(std::string_view name) {
    if (name.empty())
        return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_')
        return false;
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            return false;
    return true;
}

}  // namespace

GeneratorSet::GeneratorSet(std::vector<Generator> gens) : gens_(std::move(gens)) {
    for (const Generator& g : gens_) {
        if (!valid_name(g.name))
            throw std::invalid_argument("GeneratorSet: invalid generator name \"" + g.name + "\"");
        if (g.degree < 1)
            throw std::invalid_argument("GeneratorSet: generator \"" + g.name +
                                        "\" must have degree >= 1");
    }
    std::sort(gens_.begin(), gens_.end(),
              [](const Generator& a, const Generator& b) { return a.name < b.name; });
    for (std::size_t i = 1; i < gens_.size(); ++i)
        if (gens_[i].name == gens_[i - 1].name)
            throw std::invalid_argument("GeneratorSet: duplicate generator \"" + gens_[i].name + "\"");
}

std::optional<std::size_t> GeneratorSet::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name)
            return i;
    return std::nullopt;
}

bool GeneratorSet::has_odd_generator() const {
    for (const Generator& g : gens_)
        if (g.degree % 2 != 0)
            return true;
    return false;
}

GeneratorSetPtr make_generators(std::vector<Generator> gens) {
    return std::make_shared<const GeneratorSet>(std::move(gens));
}

int total_degree(const GeneratorSet& gens, const Monomial& m) {
    if (m.exps.size() != gens.size())
        throw std::invalid_argument("Monomial: exponent count does not match generator set");
    int d = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (m.exps[i] < 0)
            throw std::invalid_argument("Monomial: negative exponent");
        if (gens[i].degree % 2 != 0 && m.exps[i] > 1)
            throw std::invalid_argument("Monomial: odd generator \"" + gens[i].name +
                                        "\" with exponent > 1");
        d += m.exps[i] * gens[i].degree;
    }
    return d;
}

GradedPolynomial GradedPolynomial::zero(GeneratorSetPtr gens) {
    GradedPolynomial p;
    p.gens_ = std::move(gens);
    p.require_gens();
    return p;
}

GradedPolynomial GradedPolynomial::constant(GeneratorSetPtr gens, Rational c) {
    GradedPolynomial p = zero(std::move(gens));
    if (!c.is_zero())
        p.terms_.emplace(Monomial{std::vector<int>(p.gens_->size(), 0)}, std::move(c));
    return p;
}

GradedPolynomial GradedPolynomial::from_generator(GeneratorSetPtr gens, std::string_view name) {
    GradedPolynomial p = zero(std::move(gens));
    auto idx = p.gens_->index_of(name);
    if (!idx)
        throw std::invalid_argument("unknown generator \"" + std::string(name) + "\"");
    Monomial m{std::vector<int>(p.gens_->size(), 0)};
    m.exps[*idx] = 1;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

GradedPolynomial GradedPolynomial::from_term(GeneratorSetPtr gens, Monomial m, Rational c) {
    GradedPolynomial p = zero(std::move(gens));
    total_degree(*p.gens_, m);  // validates shape and odd exponents
    if (!c.is_zero())
        p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

void GradedPolynomial::require_gens() const {
    if (!gens_)
        throw std::invalid_argument("GradedPolynomial: null generator set");
}

Rational GradedPolynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> GradedPolynomial::homogeneous_degree() const {
    if (terms_.empty())
        return std::nullopt;
    std::optional<int> deg;
    for (const auto& [m, c] : terms_) {
        int d = total_degree(*gens_, m);
        if (deg && *deg != d)
            return std::nullopt;
        deg = d;
    }
    return deg;
}

void GradedPolynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero())
        return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

namespace {

void check_same_generators(const GradedPolynomial& a, const GradedPolynomial& b) {
    if (a.generators_ptr().get() == b.generators_ptr().get())
        return;
    if (a.generators() == b.generators())
        return;
    throw ruledgw::IncompatibleGenerators(
        "operands live in incompatible algebras (different generator sets)");
}

}  // namespace

GradedPolynomial& GradedPolynomial::operator+=(const GradedPolynomial& o) {
    require_gens();
    check_same_generators(*this, o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

GradedPolynomial& GradedPolynomial::operator-=(const GradedPolynomial& o) {
    require_gens();
    check_same_generators(*this, o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

GradedPolynomial& GradedPolynomial::operator*=(const Rational& c) {
    require_gens();
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_)
        coeff *= c;
    return *this;
}

namespace {

// Merges two exponent vectors. Returns false when an odd generator appears
// in both factors (odd square, term vanishes); otherwise sets the Koszul
// sign from the parity of odd-odd transpositions needed to sort the
// concatenated word.
bool merge_monomials(const GeneratorSet& gens, const Monomial& a, const Monomial& b,
                     Monomial& out, int& sign) {
    const std::size_t n = gens.size();
    out.exps.assign(n, 0);
    int swaps = 0;
    // Each odd generator of b moves left past every odd generator of a
    // with a larger canonical index; each such crossing transposes once.
    std::vector<int> odd_positions_a;
    for (std::size_t i = 0; i < n; ++i)
        if (gens[i].degree % 2 != 0 && a.exps[i] == 1)
            odd_positions_a.push_back(static_cast<int>(i));
    for (std::size_t j = 0; j < n; ++j) {
        if (gens[j].degree % 2 != 0 && b.exps[j] == 1) {
            if (a.exps[j] == 1)
                return false;
            for (int i : odd_positions_a)
                if (i > static_cast<int>(j))
                    ++swaps;
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        out.exps[i] = a.exps[i] + b.exps[i];
    sign = (swaps % 2 == 0) ? 1 : -1;
    return true;
}

}  // namespace

GradedPolynomial multiply(const GradedPolynomial& p, const GradedPolynomial& q) {
    check_same_generators(p, q);
    GradedPolynomial r = GradedPolynomial::zero(p.generators_ptr());
    const GeneratorSet& gens = p.generators();
    Monomial prod;
    int sign = 1;
    for (const auto& [ma, ca] : p.terms()) {
        for (const auto& [mb, cb] : q.terms()) {
            if (!merge_monomials(gens, ma, mb, prod, sign))
                continue;
            Rational c = ca * cb;
            if (sign < 0)
                c = -c;
            r.add_term(prod, c);
        }
    }
    return r;
}

std::vector<Monomial> monomial_basis(const GeneratorSet& gens, int degree) {
    if (degree < 0)
        throw std::invalid_argument("monomial_basis: negative degree");
    std::vector<Monomial> out;
    std::vector<int> exps(gens.size(), 0);
    // Exponent of the alphabetically first generator varies slowest and
    // descends, which yields the canonical descending-lex order directly.
    auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
        if (i == gens.size()) {
            if (remaining == 0)
                out.push_back(Monomial{exps});
            return;
        }
        const Generator& g = gens[i];
        int max_exp = remaining / g.degree;
        if (g.degree % 2 != 0)
            max_exp = std::min(max_exp, 1);
        for (int e = max_exp; e >= 0; --e) {
            exps[i] = e;
            self(self, i + 1, remaining - e * g.degree);
        }
        exps[i] = 0;
    };
    rec(rec, 0, degree);
    return out;
}

PoincareSeries free_series(const GeneratorSet& gens, int cap) {
    if (cap < 0)
        throw std::invalid_argument("free_series: negative cap");
    std::vector<std::int64_t> c(static_cast<std::size_t>(cap) + 1, 0);
    c[0] = 1;
    for (const Generator& g : gens.generators()) {
        if (g.degree % 2 == 0) {
            // multiply by 1/(1 - t^d)
            for (int n = g.degree; n <= cap; ++n)
                c[n] += c[n - g.degree];
        } else {
            // multiply by (1 + t^d)
            for (int n = cap; n >= g.degree; --n)
                c[n] += c[n - g.degree];
        }
    }
    return PoincareSeries{std::move(c)};
}

PoincareSeries quotient_dims(const GeneratorSet& gens, const GradedPolynomial& relation,
                             int cap) {
    if (cap < 0)
        throw std::invalid_argument("quotient_dims: negative cap");
    if (gens.has_odd_generator())
        throw std::invalid_argument("quotient_dims: generator set must be all even");
    if (!(relation.generators() == gens))
        throw ruledgw::IncompatibleGenerators("quotient_dims: relation over a different generator set");
    auto deg = relation.homogeneous_degree();
    if (!deg)
        throw std::invalid_argument("quotient_dims: relation must be nonzero and homogeneous");
    const int d = *deg;
    if (d < 1)
        throw std::invalid_argument("quotient_dims: relation degree must be >= 1");

    PoincareSeries free = free_series(gens, cap);
    std::vector<std::int64_t> dims(static_cast<std::size_t>(cap) + 1, 0);
    GeneratorSetPtr gp = relation.generators_ptr();
    for (int n = 0; n <= cap; ++n) {
        if (n < d) {
            dims[n] = free.coeffs[n];
            continue;
        }
        std::vector<Monomial> src = monomial_basis(gens, n - d);
        std::vector<Monomial> dst = monomial_basis(gens, n);
        std::map<Monomial, std::size_t, MonomialOrder> dst_index;
        for (std::size_t i = 0; i < dst.size(); ++i)
            dst_index.emplace(dst[i], i);
        QMatrix mat(dst.size(), src.size());
        for (std::size_t j = 0; j < src.size(); ++j) {
            GradedPolynomial image =
                multiply(relation, GradedPolynomial::from_term(gp, src[j], Rational(1)));
            for (const auto& [m, c] : image.terms())
                mat.at(dst_index.at(m), j) = c;
        }
        dims[n] = free.coeffs[n] - mat.rank();
    }
    return PoincareSeries{std::move(dims)};
}

std::string to_string(const Monomial& m, const GeneratorSet& gens) {
    std::string out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (m.exps[i] == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += gens[i].name;
        if (m.exps[i] > 1)
            out += "^" + std::to_string(m.exps[i]);
    }
    return out.empty() ? "1" : out;
}

std::string to_string(const GradedPolynomial& p) {
    if (p.is_zero())
        return "0";
    std::string out;
    for (const auto& [m, c] : p.terms()) {
        const bool neg = c.sign() < 0;
        if (out.empty()) {
            if (neg)
                out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        Rational mag = c.abs();
        std::string mono = to_string(m, p.generators());
        if (mag == Rational(1) && !m.is_unit())
            out += mono;
        else if (m.is_unit())
            out += mag.to_string();
        else
            out += mag.to_string() + "*" + mono;
    }
    return out;
}

namespace {

// Recursive-descent parser for the canonical rendering plus parentheses:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := rational | name ['^' int] | '(' expr ')'
struct PolyParser {
    GeneratorSetPtr gens;
    std::string_view text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos) +
                                    ": " + msg);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::optional<char> peek() {
        skip_ws();
        if (pos >= text.size())
            return std::nullopt;
        return text[pos];
    }

    std::string read_name() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (start == pos)
            fail("expected a generator name");
        return std::string(text.substr(start, pos - start));
    }

    std::string read_digits() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (start == pos)
            fail("expected digits");
        return std::string(text.substr(start, pos - start));
    }

    GradedPolynomial parse_factor() {
        auto c = peek();
        if (!c)
            fail("unexpected end of input");
        if (*c == '(') {
            eat('(');
            GradedPolynomial inner = parse_expr();
            if (!eat(')'))
                fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(*c))) {
            std::string num = read_digits();
            if (eat('/')) {
                std::string den = read_digits();
                return GradedPolynomial::constant(gens, Rational::from_string(num + "/" + den));
            }
            return GradedPolynomial::constant(gens, Rational::from_string(num));
        }
        std::string name = read_name();
        if (!gens->index_of(name))
            fail("unknown generator \"" + name + "\"");
        GradedPolynomial g = GradedPolynomial::from_generator(gens, name);
        if (eat('^')) {
            int e = std::stoi(read_digits());
            GradedPolynomial r = GradedPolynomial::unit(gens);
            for (int i = 0; i < e; ++i)
                r = multiply(r, g);
            return r;
        }
        return g;
    }

    GradedPolynomial parse_term() {
        GradedPolynomial r = parse_factor();
        while (eat('*'))
            r = multiply(r, parse_factor());
        return r;
    }

    GradedPolynomial parse_expr() {
        GradedPolynomial r = GradedPolynomial::zero(gens);
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        for (;;) {
            GradedPolynomial t = parse_term();
            if (neg)
                r -= t;
            else
                r += t;
            if (eat('-'))
                neg = true;
            else if (eat('+'))
                neg = false;
            else
                break;
        }
        return r;
    }

    GradedPolynomial run() {
        GradedPolynomial r = parse_expr();
        skip_ws();
        if (pos != text.size())
            fail("trailing input");
        return r;
    }
};

}  // namespace

GradedPolynomial parse_polynomial(GeneratorSetPtr gens, std::string_view text) {
    PolyParser parser{std::move(gens), text};
    return parser.run();
}

}  // namespace exactalg
