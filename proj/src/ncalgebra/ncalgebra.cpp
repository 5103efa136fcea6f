#include "qtetra/ncalgebra.hpp"

#include "qtetra/kernels.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace qtetra {

int Monomial::degree() const { return kernels::sum(e_); }

bool Monomial::is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](std::int32_t x) { return x == 0; });
}

bool operator<(const Monomial& a, const Monomial& b) {
    const int da = a.degree();
    const int db = b.degree();
    if (da != db) return da < db;
    return std::lexicographical_compare(b.e_.begin(), b.e_.end(), a.e_.begin(), a.e_.end());
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (const std::int32_t x : m.exponents()) {
        h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(x));
        h *= 1099511628211ULL;
    }
    return h;
}

Algebra::Algebra(int N) : N_(N), quiver_(N), b_(incidence(quiver_)) {}

Algebra::Algebra(int N, IncidenceMatrix b) : N_(N), quiver_(N), b_(std::move(b)) {
    if (b_.size() != quiver_.size()) throw std::invalid_argument("incidence matrix size does not match Q_N");
}

std::int32_t Algebra::commutation_exponent(const Monomial& a, const Monomial& b) const {
    std::vector<std::int32_t> w(a.size(), 0);
    for (std::size_t r = 0; r < a.size(); ++r)
        if (a[r] != 0) kernels::axpy(a[r], b_.lower_row(r), w);
    return kernels::dot(w, b.exponents());
}

NormalOrdered normal_order(const FactorSequence& seq, const Algebra& algebra) {
    const std::size_t n = algebra.vertex_count();
    NormalOrdered out{0, Monomial(n)};
    // w = sum_r acc_r * lower_row(r): appending Z_v^e to M(acc) costs q^{e * w[v]}.
    std::vector<std::int32_t> w(n, 0);
    for (const Factor& f : seq) {
        if (f.exponent < 0) throw std::invalid_argument("negative exponent in factor sequence");
        if (f.exponent == 0) continue;
        const std::size_t v = algebra.quiver().index_of(f.vertex);
        out.q_exponent += f.exponent * w[v];
        kernels::axpy(f.exponent, algebra.B().lower_row(v), w);
        out.monomial[v] += f.exponent;
    }
    return out;
}

FactorSequence factor_sequence(const Monomial& m, const Quiver& quiver) {
    FactorSequence seq;
    for (std::size_t k = 0; k < m.size(); ++k)
        if (m[k] != 0) seq.push_back({quiver.vertices()[k], m[k]});
    return seq;
}

NCPolynomial::NCPolynomial(AlgebraPtr algebra, int truncation) : algebra_(std::move(algebra)), truncation_(truncation) {
    if (!algebra_) throw std::invalid_argument("polynomial needs an algebra");
    if (truncation_ < 0) throw std::invalid_argument("truncation degree must be nonnegative");
}

NCPolynomial NCPolynomial::one(AlgebraPtr algebra, int truncation) {
    const std::size_t n = algebra->vertex_count();
    return from_monomial(std::move(algebra), Monomial(n), 1, truncation);
}

NCPolynomial NCPolynomial::generator(AlgebraPtr algebra, Vertex v, int truncation) {
    return from_sequence(std::move(algebra), {{v, 1}}, 1, truncation);
}

NCPolynomial NCPolynomial::from_sequence(AlgebraPtr algebra, const FactorSequence& seq, const RationalFunction& coef,
                                         int truncation) {
    NormalOrdered no = normal_order(seq, *algebra);
    return from_monomial(std::move(algebra), std::move(no.monomial), coef.times_q_power(no.q_exponent), truncation);
}

NCPolynomial NCPolynomial::from_monomial(AlgebraPtr algebra, Monomial m, const RationalFunction& coef,
                                         int truncation) {
    if (m.size() != algebra->vertex_count()) throw std::invalid_argument("monomial size does not match T_N");
    NCPolynomial p(std::move(algebra), truncation);
    if (!coef.is_zero() && m.degree() <= truncation) p.terms_.emplace(std::move(m), coef);
    return p;
}

RationalFunction NCPolynomial::coefficient(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? RationalFunction() : it->second;
}

RationalFunction NCPolynomial::constant_term() const { return coefficient(Monomial(algebra_->vertex_count())); }

int NCPolynomial::max_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

int NCPolynomial::min_degree() const {
    int d = INT_MAX;
    for (const auto& [m, c] : terms_) d = std::min(d, m.degree());
    return d;
}

void NCPolynomial::set_coefficient(const Monomial& m, const RationalFunction& c) {
    if (c.is_zero()) {
        terms_.erase(m);
    } else {
        terms_[m] = c;
    }
}

NCPolynomial NCPolynomial::truncated(int degree) const {
    NCPolynomial p(algebra_, std::min(degree, truncation_));
    for (const auto& [m, c] : terms_)
        if (m.degree() <= p.truncation_) p.terms_.emplace(m, c);
    return p;
}

NCPolynomial NCPolynomial::operator-() const {
    NCPolynomial p(algebra_, truncation_);
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
}

void NCPolynomial::check_compatible(const NCPolynomial& o) const {
    if (algebra_ != o.algebra_ && (algebra_->N() != o.algebra_->N() || !(algebra_->B() == o.algebra_->B())))
        throw std::invalid_argument("polynomials live in different algebras");
    if (truncation_ != o.truncation_) throw std::invalid_argument("polynomials have different truncation degrees");
}

NCPolynomial& NCPolynomial::operator+=(const NCPolynomial& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

NCPolynomial& NCPolynomial::operator-=(const NCPolynomial& o) { return *this += -o; }

namespace {

// Accumulates products without intermediate gcd work; one reduction per slot.
class ProductSlot {
public:
    void add(const RationalFunction& a, const RationalFunction& b, int q_shift) {
        acc_.add(a * b.times_q_power(q_shift));
    }
    RationalFunction result() const { return acc_.result(); }

private:
    RationalAccumulator acc_;
};

}  // namespace

NCPolynomial poly_mul(const NCPolynomial& a, const NCPolynomial& b) {
    if (a.algebra_ptr() != b.algebra_ptr() &&
        (a.algebra().N() != b.algebra().N() || !(a.algebra().B() == b.algebra().B())))
        throw std::invalid_argument("poly_mul: polynomials live in different algebras");
    if (a.truncation() != b.truncation()) throw std::invalid_argument("poly_mul: truncation degrees differ");

    const Algebra& alg = a.algebra();
    const std::size_t n = alg.vertex_count();
    const int D = a.truncation();

    struct Rhs {
        const Monomial* m;
        const RationalFunction* c;
        int degree;
    };
    std::vector<Rhs> rhs;
    rhs.reserve(b.size());
    for (const auto& [m, c] : b.terms()) rhs.push_back({&m, &c, m.degree()});

    std::unordered_map<Monomial, ProductSlot, MonomialHash> slots;
    std::vector<std::int32_t> w(n);
    Monomial prod(n);
    for (const auto& [ma, ca] : a.terms()) {
        const int da = ma.degree();
        std::fill(w.begin(), w.end(), 0);
        for (std::size_t r = 0; r < n; ++r)
            if (ma[r] != 0) kernels::axpy(ma[r], alg.B().lower_row(r), w);
        for (const Rhs& t : rhs) {
            if (D != kUnbounded && da + t.degree > D) continue;
            const std::int32_t e = kernels::dot(w, t.m->exponents());
            kernels::add(ma.exponents(), t.m->exponents(), prod.exponents());
            slots[prod].add(ca, *t.c, e);
        }
    }

    NCPolynomial out(a.algebra_ptr(), D);
    for (auto& [m, slot] : slots) {
        RationalFunction c = slot.result();
        if (!c.is_zero()) out.set_coefficient(m, c);
    }
    return out;
}

NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b) { return poly_mul(a, b); }

NCPolynomial operator*(const RationalFunction& c, const NCPolynomial& p) {
    NCPolynomial out(p.algebra_, p.truncation_);
    if (c.is_zero()) return out;
    for (const auto& [m, x] : p.terms_) out.terms_.emplace(m, c * x);
    return out;
}

NCPolynomial apply_hom(const VertexMap& map, bool anti, const NCPolynomial& p) {
    const Algebra& alg = p.algebra();
    if (map.N != alg.N()) throw std::invalid_argument("vertex map defined for a different N");
    NCPolynomial out(p.algebra_ptr(), p.truncation());
    for (const auto& [m, c] : p.terms()) {
        FactorSequence seq = factor_sequence(m, alg.quiver());
        for (Factor& f : seq) f.vertex = apply_vertex_map(map, f.vertex);
        if (anti) std::reverse(seq.begin(), seq.end());
        NormalOrdered no = normal_order(seq, alg);
        out += NCPolynomial::from_monomial(p.algebra_ptr(), std::move(no.monomial), c.times_q_power(no.q_exponent),
                                           p.truncation());
    }
    return out;
}

NCPolynomial apply_hom(const VertexMap& map, const NCPolynomial& p) { return apply_hom(map, map.is_anti(), p); }

NCPolynomial sigma_kill(const std::set<Vertex>& killed, const NCPolynomial& p) {
    const Quiver& quiver = p.algebra().quiver();
    std::vector<std::size_t> idx;
    for (const Vertex v : killed) idx.push_back(quiver.index_of(v));
    NCPolynomial out(p.algebra_ptr(), p.truncation());
    for (const auto& [m, c] : p.terms()) {
        const bool touches = std::any_of(idx.begin(), idx.end(), [&](std::size_t k) { return m[k] > 0; });
        if (!touches) out.set_coefficient(m, c);
    }
    return out;
}

std::string monomial_to_string(const Monomial& m, const Quiver& quiver) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < m.size(); ++k) {
        if (m[k] == 0) continue;
        const Vertex v = quiver.vertices()[k];
        if (!first) os << " * ";
        first = false;
        os << "Z[" << v.i << ',' << v.j << "]^" << m[k];
    }
    return first ? "1" : os.str();
}

std::string NCPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << '\n';
        first = false;
        os << c.to_string();
        if (!m.is_one()) os << " * " << monomial_to_string(m, algebra_->quiver());
    }
    return os.str();
}

NCPolynomial parse_polynomial(AlgebraPtr algebra, const std::string& text, int truncation) {
    NCPolynomial out(algebra, truncation);
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos || line == "0") continue;
        const std::string sep = " * Z[";
        std::size_t pos = line.find(sep);
        const RationalFunction coef = RationalFunction::parse(line.substr(0, pos));
        FactorSequence seq;
        while (pos != std::string::npos) {
            const std::size_t start = pos + sep.size();
            const std::size_t next = line.find(sep, start);
            const std::string tok = line.substr(start, next == std::string::npos ? std::string::npos : next - start);
            int i = 0, j = 0, e = 0;
            if (std::sscanf(tok.c_str(), "%d,%d]^%d", &i, &j, &e) != 3)
                throw std::invalid_argument("cannot parse generator power '" + tok + "'");
            seq.push_back({{i, j}, e});
            pos = next;
        }
        out += NCPolynomial::from_sequence(algebra, seq, coef, truncation);
    }
    return out;
}

}  // namespace qtetra
