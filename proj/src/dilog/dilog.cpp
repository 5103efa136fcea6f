#include "qtetra/dilog.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <sstream>
#include <stdexcept>

namespace qtetra {

namespace detail {
extern const char* const kT4ChainFixture;
}

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

NCPolynomial generator_poly(const AlgebraPtr& alg, Vertex v, int D) { return NCPolynomial::generator(alg, v, D); }

}  // namespace

std::vector<Lambda> tetrahedron_points(int N) {
    std::vector<Lambda> out;
    for (int a = 1; a <= N + 1; ++a)
        for (int b = a + 1; b <= N + 1; ++b)
            for (int c = b + 1; c <= N + 1; ++c) out.push_back({a, b, c});
    return out;
}

NCPolynomial qexp(const NCPolynomial& arg, int D) {
    if (!arg.constant_term().is_zero()) throw std::invalid_argument("qexp: argument has a nonzero constant term");
    const NCPolynomial x = arg.truncated(D);
    NCPolynomial power = NCPolynomial::one(x.algebra_ptr(), x.truncation());
    NCPolynomial result = power;
    const NCPolynomial minus_x = -x;
    for (int n = 1; n <= D; ++n) {
        power = power * minus_x;
        if (power.is_zero()) break;
        result += RationalFunction(LaurentPoly(1), q_pochhammer(n)) * power;
    }
    return result;
}

NCPolynomial qexp_inv(const NCPolynomial& arg, int D) {
    if (!arg.constant_term().is_zero()) throw std::invalid_argument("qexp_inv: argument has a nonzero constant term");
    const NCPolynomial x = arg.truncated(D);
    NCPolynomial power = NCPolynomial::one(x.algebra_ptr(), x.truncation());
    NCPolynomial result = power;
    for (int n = 1; n <= D; ++n) {
        power = power * x;
        if (power.is_zero()) break;
        result += RationalFunction(LaurentPoly::q_power(n * (n - 1) / 2), q_pochhammer(n)) * power;
    }
    return result;
}

FactorSequence lambda_word(const Lambda& l) {
    FactorSequence w;
    for (int k = 0; k <= l.c - l.b - 1; ++k) w.push_back({{l.a + k, l.b + k}, 1});
    return w;
}

NCPolynomial E_lambda(const Lambda& l, const AlgebraPtr& algebra, int D) {
    const int N = algebra->N();
    if (!(1 <= l.a && l.a < l.b && l.b < l.c && l.c <= N + 1))
        throw std::invalid_argument("lambda (" + std::to_string(l.a) + "," + std::to_string(l.b) + "," +
                                    std::to_string(l.c) + ") is not in the tetrahedron for N=" + std::to_string(N));
    return qexp(NCPolynomial::from_sequence(algebra, lambda_word(l), 1, D), D);
}

QExpFactors E_ab_factors(int a, int b, int N) {
    if (!(1 <= a && a < b && b <= N)) throw std::invalid_argument("E_ab: need 1 <= a < b <= N");
    QExpFactors out;
    for (int c = b + 1; c <= N + 1; ++c) out.push_back(lambda_word({a, b, c}));
    return out;
}

NCPolynomial E_ab(int a, int b, const AlgebraPtr& algebra, int D) {
    return qexp_product(algebra, E_ab_factors(a, b, algebra->N()), D);
}

QExpFactors T_factors(int N) {
    if (N < 2) throw std::invalid_argument("T_N requires N >= 2");
    QExpFactors out;
    for (const Lambda& l : tetrahedron_points(N)) out.push_back(lambda_word(l));
    return out;
}

NCPolynomial qexp_product(const AlgebraPtr& algebra, const QExpFactors& factors, int D) {
    NCPolynomial result = NCPolynomial::one(algebra, D);
    for (const FactorSequence& word : factors)
        result = result * qexp(NCPolynomial::from_sequence(algebra, word, 1, D), D);
    return result;
}

NCPolynomial build_T(const AlgebraPtr& algebra, int D) { return qexp_product(algebra, T_factors(algebra->N()), D); }

QExpFactors map_factors(const VertexMap& map, const QExpFactors& factors) {
    QExpFactors out = factors;
    for (FactorSequence& word : out) {
        for (Factor& f : word) f.vertex = apply_vertex_map(map, f.vertex);
        if (map.is_anti()) std::reverse(word.begin(), word.end());
    }
    if (map.is_anti()) std::reverse(out.begin(), out.end());
    return out;
}

nlohmann::json IdentityReport::to_json() const {
    nlohmann::json j{{"suite", name}, {"N", N}, {"D", D}, {"equal", equal}, {"millis", millis}};
    if (mismatch) j["mismatch"] = {{"monomial", mismatch->monomial}, {"lhs", mismatch->lhs}, {"rhs", mismatch->rhs}};
    return j;
}

Check IdentityReport::to_check() const {
    nlohmann::json d{{"N", N}, {"D", D}, {"millis", millis}};
    if (mismatch) d["mismatch"] = {{"monomial", mismatch->monomial}, {"lhs", mismatch->lhs}, {"rhs", mismatch->rhs}};
    return {name, equal, d};
}

IdentityReport verify_identity(const NCPolynomial& lhs, const NCPolynomial& rhs, std::string name) {
    const auto t0 = Clock::now();
    IdentityReport r;
    r.name = std::move(name);
    r.N = lhs.algebra().N();
    r.D = std::min(lhs.truncation(), rhs.truncation());
    r.equal = true;
    auto li = lhs.terms().begin();
    auto ri = rhs.terms().begin();
    const auto le = lhs.terms().end();
    const auto re = rhs.terms().end();
    // Merge walk over both sorted term maps; stop at the first difference.
    while (li != le || ri != re) {
        const Monomial* m = nullptr;
        RationalFunction lc, rc;
        if (ri == re || (li != le && li->first < ri->first)) {
            m = &li->first;
            lc = li->second;
            ++li;
        } else if (li == le || ri->first < li->first) {
            m = &ri->first;
            rc = ri->second;
            ++ri;
        } else {
            m = &li->first;
            lc = li->second;
            rc = ri->second;
            ++li;
            ++ri;
        }
        if (m->degree() > r.D) continue;
        if (!(lc == rc)) {
            r.equal = false;
            r.mismatch = Mismatch{monomial_to_string(*m, lhs.algebra().quiver()), lc.to_string(), rc.to_string()};
            break;
        }
    }
    r.millis = millis_since(t0);
    return r;
}

IdentityReport verify_schuetzenberger(const AlgebraPtr& algebra, Vertex x, Vertex y, int D) {
    const auto t0 = Clock::now();
    const NCPolynomial X = generator_poly(algebra, x, D);
    const NCPolynomial Y = generator_poly(algebra, y, D);
    IdentityReport r = verify_identity(qexp(X, D) * qexp(Y, D), qexp(X + Y, D),
                                       "schuetzenberger X=Z" + x.to_string() + " Y=Z" + y.to_string());
    r.millis = millis_since(t0);
    return r;
}

IdentityReport verify_pentagon(const AlgebraPtr& algebra, Vertex x, Vertex y, int D) {
    const auto t0 = Clock::now();
    const NCPolynomial lhs = qexp_product(algebra, {{{x, 1}}, {{x, 1}, {y, 1}}, {{y, 1}}}, D);
    const NCPolynomial rhs = qexp_product(algebra, {{{y, 1}}, {{x, 1}}}, D);
    IdentityReport r = verify_identity(lhs, rhs, "pentagon X=Z" + x.to_string() + " Y=Z" + y.to_string());
    r.millis = millis_since(t0);
    return r;
}

std::vector<std::pair<Vertex, Vertex>> q_commuting_pairs(const Algebra& algebra) {
    std::vector<std::pair<Vertex, Vertex>> out;
    const auto& verts = algebra.quiver().vertices();
    for (std::size_t u = 0; u < verts.size(); ++u)
        for (std::size_t v = 0; v < verts.size(); ++v)
            if (algebra.B()(v, u) == 1) out.emplace_back(verts[u], verts[v]);
    return out;
}

std::vector<IdentityReport> verify_cyclic44(const AlgebraPtr& algebra3, int D) {
    if (algebra3->N() != 3) throw std::invalid_argument("cyclic 4~4 identity lives in T_3");
    const Vertex X{1, 2}, Y{2, 3}, Z{1, 3};
    const QExpFactors first{{{X, 1}}, {{X, 1}, {Y, 1}}, {{Z, 1}}, {{Y, 1}}};
    const QExpFactors second{{{Z, 1}}, {{Z, 1}, {X, 1}}, {{Y, 1}}, {{X, 1}}};
    const QExpFactors third{{{Y, 1}}, {{Y, 1}, {Z, 1}}, {{X, 1}}, {{Z, 1}}};
    const NCPolynomial a = qexp_product(algebra3, first, D);
    const NCPolynomial b = qexp_product(algebra3, second, D);
    const NCPolynomial c = qexp_product(algebra3, third, D);
    return {verify_identity(a, b, "cyclic44 <X><XY><Z><Y> = <Z><ZX><Y><X>"),
            verify_identity(b, c, "cyclic44 <Z><ZX><Y><X> = <Y><YZ><X><Z>"),
            verify_identity(a, c, "cyclic44 <X><XY><Z><Y> = <Y><YZ><X><Z>")};
}

std::vector<IdentityReport> verify_theorem1(const AlgebraPtr& algebra, int D) {
    const int N = algebra->N();
    const NCPolynomial T = build_T(algebra, D);
    std::vector<IdentityReport> out;
    for (const MapKind k : {MapKind::mu1, MapKind::mu2, MapKind::mu3, MapKind::rho}) {
        const auto t0 = Clock::now();
        const VertexMap m{k, N};
        IdentityReport r = verify_identity(T, apply_hom(m, T), "T_N = " + m.name() + "(T_N)");
        r.millis = millis_since(t0);
        out.push_back(std::move(r));
    }
    const auto t0 = Clock::now();
    const VertexMap rho{MapKind::rho, N};
    IdentityReport r = verify_identity(T, apply_hom(rho, apply_hom(rho, T)), "T_N = rho(rho(T_N))");
    r.millis = millis_since(t0);
    out.push_back(std::move(r));
    return out;
}

std::vector<IdentityReport> verify_theorem1(int N, int D) { return verify_theorem1(Algebra::make(N), D); }

std::pair<QExpFactors, QExpFactors> prop_QQ_sides(int N, const std::set<Vertex>& killed) {
    auto keep = [&](const QExpFactors& fs) {
        QExpFactors out;
        for (const FactorSequence& w : fs) {
            const bool hit = std::any_of(w.begin(), w.end(), [&](const Factor& f) { return killed.count(f.vertex) > 0; });
            if (!hit) out.push_back(w);
        }
        return out;
    };
    const QExpFactors lhs = T_factors(N);
    return {keep(lhs), keep(map_factors({MapKind::rho, N}, lhs))};
}

IdentityReport verify_prop_QQ(const AlgebraPtr& algebra, const std::set<Vertex>& killed, int D) {
    const auto t0 = Clock::now();
    const int N = algebra->N();
    for (const Vertex v : killed)
        if (!valid_vertex(N, v)) throw std::invalid_argument("killed vertex " + v.to_string() + " not in Q_N");
    const auto [lhs, rhs] = prop_QQ_sides(N, killed);
    std::string name = "propQQ kill {";
    for (const Vertex v : killed) name += v.to_string();
    name += "}";
    IdentityReport r = verify_identity(qexp_product(algebra, lhs, D), qexp_product(algebra, rhs, D), name);
    r.millis = millis_since(t0);
    return r;
}

IdentityReport verify_prop_QQ(int N, const std::set<Vertex>& killed, int D) {
    return verify_prop_QQ(Algebra::make(N), killed, D);
}

std::vector<QExpFactors> parse_chain_fixture(const std::string& text) {
    std::vector<QExpFactors> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        QExpFactors expr;
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            FactorSequence word;
            std::istringstream ts(tok);
            std::string gen;
            while (std::getline(ts, gen, '.')) {
                if (gen.size() != 2 || !std::isdigit(static_cast<unsigned char>(gen[0])) ||
                    !std::isdigit(static_cast<unsigned char>(gen[1])))
                    throw std::invalid_argument("bad generator '" + gen + "' in chain fixture");
                word.push_back({{gen[0] - '0', gen[1] - '0'}, 1});
            }
            expr.push_back(std::move(word));
        }
        lines.push_back(std::move(expr));
    }
    return lines;
}

std::vector<QExpFactors> t4_chain_lines() { return parse_chain_fixture(detail::kT4ChainFixture); }

std::vector<IdentityReport> verify_T4_chain(int D) {
    if (D < 3) throw std::invalid_argument("T4 chain check needs D >= 3");
    const AlgebraPtr alg = Algebra::make(4);
    const std::vector<QExpFactors> lines = t4_chain_lines();
    std::vector<NCPolynomial> values;
    for (const QExpFactors& l : lines) values.push_back(qexp_product(alg, l, D));
    const NCPolynomial T = build_T(alg, D);
    values.push_back(apply_hom({MapKind::rho, 4}, T));

    std::vector<IdentityReport> out;
    out.push_back(verify_identity(T, values.front(), "T_4 = line 1"));
    for (std::size_t k = 0; k + 1 < values.size(); ++k) {
        const std::string rhs = k + 2 == values.size() ? "rho(T_4)" : "line " + std::to_string(k + 2);
        out.push_back(verify_identity(values[k], values[k + 1], "line " + std::to_string(k + 1) + " = " + rhs));
    }
    return out;
}

std::string factors_to_string(const QExpFactors& factors) {
    std::ostringstream os;
    for (const FactorSequence& w : factors) {
        os << '<';
        for (std::size_t k = 0; k < w.size(); ++k) {
            if (k) os << ' ';
            os << 'Z' << w[k].vertex.i << w[k].vertex.j;
            if (w[k].exponent != 1) os << '^' << w[k].exponent;
        }
        os << '>';
    }
    return os.str();
}

}  // namespace qtetra
