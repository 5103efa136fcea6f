#include "qtetra/kernels.hpp"
#include "qtetra/tensorrep.hpp"

#include <sstream>
#include <stdexcept>

namespace qtetra {

struct Operator::Node {
    enum class Kind { mono, scalar, F, qexp, qexp_inv, product, sum };
    Kind kind = Kind::mono;
    int N = 2;
    MonomialOp m;
    RationalFunction r;
    std::size_t ab = 0, ac = 0, bc = 0;
    std::vector<Operator> children;
};

namespace {

std::size_t slot(int N, int i, int j) {
    if (!valid_vertex(N, {i, j}))
        throw std::invalid_argument("slot (" + std::to_string(i) + "," + std::to_string(j) + ") not in S_" +
                                    std::to_string(N));
    return vertex_index(N, {i, j});
}

const std::vector<std::int32_t>& grade_weights(int N) {
    static thread_local std::map<int, std::vector<std::int32_t>> cache;
    auto it = cache.find(N);
    if (it == cache.end()) {
        std::vector<std::int32_t> w;
        for (const Vertex v : lex_vertices(N)) w.push_back(-v.j);
        it = cache.emplace(N, std::move(w)).first;
    }
    return it->second;
}

// 1/(q;q)_n and q^{n(n-1)/2}/(q;q)_n, cached.
const RationalFunction& series_coefficient(int n, bool inverse) {
    static thread_local std::vector<RationalFunction> plain, inv;
    auto& table = inverse ? inv : plain;
    while (static_cast<int>(table.size()) <= n) {
        const int k = static_cast<int>(table.size());
        const LaurentPoly num = inverse ? LaurentPoly::q_power(k * (k - 1) / 2) : LaurentPoly(k % 2 ? -1 : 1);
        table.emplace_back(num, q_pochhammer(k));
    }
    return table[static_cast<std::size_t>(n)];
}

std::shared_ptr<Operator::Node> make_node(Operator::Node::Kind kind, int N) {
    auto n = std::make_shared<Operator::Node>();
    n->kind = kind;
    n->N = N;
    return n;
}

void drop_over_budget(TensorVector& v, int N, int D, std::int64_t seed_grade) {
    if (D == kNoBudget) return;
    for (auto it = v.terms.begin(); it != v.terms.end();) {
        if (grade(N, it->first) - seed_grade > D) {
            it = v.terms.erase(it);
            v.truncated = true;
        } else {
            ++it;
        }
    }
}

}  // namespace

MonomialOp MonomialOp::identity(int N) {
    MonomialOp m;
    m.N = N;
    m.s.assign(vertex_count(N), 0);
    m.t.assign(vertex_count(N), 0);
    return m;
}

MonomialOp MonomialOp::x(int N, int i, int j, int power) {
    MonomialOp m = identity(N);
    m.s[slot(N, i, j)] = power;
    return m;
}

MonomialOp MonomialOp::y(int N, int i, int j, int power) {
    MonomialOp m = identity(N);
    if (i != j) m.t[slot(N, i, j)] = power;
    return m;
}

MonomialOp MonomialOp::q_power(int N, int k) {
    MonomialOp m = identity(N);
    m.c = k;
    return m;
}

MonomialOp MonomialOp::operator*(const MonomialOp& o) const {
    if (N != o.N) throw std::invalid_argument("monomial operators on different spaces");
    MonomialOp r = identity(N);
    r.c = c + o.c + kernels::dot(t, o.s);
    kernels::add(s, o.s, r.s);
    kernels::add(t, o.t, r.t);
    return r;
}

std::string MonomialOp::to_string() const {
    std::ostringstream os;
    os << "q^" << c;
    const auto verts = lex_vertices(N);
    for (std::size_t k = 0; k < s.size(); ++k)
        if (s[k]) os << " x" << verts[k].i << verts[k].j << '^' << s[k];
    for (std::size_t k = 0; k < t.size(); ++k)
        if (t[k]) os << " y" << verts[k].i << verts[k].j << '^' << t[k];
    return os.str();
}

std::int64_t grade(int N, const Exponents& e) { return kernels::dot(grade_weights(N), e); }

std::int64_t grade_shift(const MonomialOp& m) { return grade(m.N, m.s); }

void TensorVector::add(const Exponents& e, const RationalFunction& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms.emplace(e, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

Operator Operator::identity(int N) { return mono(MonomialOp::identity(N)); }

Operator Operator::mono(const MonomialOp& m) {
    auto n = make_node(Node::Kind::mono, m.N);
    n->m = m;
    return Operator(n);
}

Operator Operator::scalar(int N, const RationalFunction& r) {
    auto n = make_node(Node::Kind::scalar, N);
    n->r = r;
    return Operator(n);
}

Operator Operator::F(int a, int b, int c, int N) {
    if (!(1 <= a && a < b && b < c && c <= N)) throw std::invalid_argument("F: need a < b < c <= N");
    auto n = make_node(Node::Kind::F, N);
    n->ab = slot(N, a, b);
    n->ac = slot(N, a, c);
    n->bc = slot(N, b, c);
    return Operator(n);
}

Operator Operator::qexp(const MonomialOp& w) {
    if (grade_shift(w) <= 0) throw std::invalid_argument("quantum exponential argument must raise the grade");
    auto n = make_node(Node::Kind::qexp, w.N);
    n->m = w;
    return Operator(n);
}

Operator Operator::qexp_inv(const MonomialOp& w) {
    if (grade_shift(w) <= 0) throw std::invalid_argument("quantum exponential argument must raise the grade");
    auto n = make_node(Node::Kind::qexp_inv, w.N);
    n->m = w;
    return Operator(n);
}

Operator Operator::product(const std::vector<Operator>& factors) {
    if (factors.empty()) throw std::invalid_argument("empty operator product");
    auto n = make_node(Node::Kind::product, factors.front().N());
    for (const Operator& f : factors) {
        if (f.N() != n->N) throw std::invalid_argument("operator product across different spaces");
        // flatten nested products
        if (f.node().kind == Node::Kind::product)
            n->children.insert(n->children.end(), f.node().children.begin(), f.node().children.end());
        else
            n->children.push_back(f);
    }
    return Operator(n);
}

Operator Operator::sum(const std::vector<Operator>& terms) {
    if (terms.empty()) throw std::invalid_argument("empty operator sum");
    auto n = make_node(Node::Kind::sum, terms.front().N());
    for (const Operator& t : terms) {
        if (t.N() != n->N) throw std::invalid_argument("operator sum across different spaces");
        n->children.push_back(t);
    }
    return Operator(n);
}

int Operator::N() const { return node_->N; }

bool Operator::grade_monotone() const {
    switch (node_->kind) {
        case Node::Kind::mono:
            return grade_shift(node_->m) >= 0;
        case Node::Kind::product:
        case Node::Kind::sum:
            for (const Operator& c : node_->children)
                if (!c.grade_monotone()) return false;
            return true;
        default:
            return true;
    }
}

std::string Operator::to_string() const {
    const Node& n = *node_;
    const auto verts = lex_vertices(n.N);
    switch (n.kind) {
        case Node::Kind::mono:
            return "[" + n.m.to_string() + "]";
        case Node::Kind::scalar:
            return n.r.to_string();
        case Node::Kind::F:
            return "F" + std::to_string(verts[n.ab].i) + std::to_string(verts[n.ab].j) + std::to_string(verts[n.bc].j);
        case Node::Kind::qexp:
            return "<" + n.m.to_string() + ">";
        case Node::Kind::qexp_inv:
            return "<" + n.m.to_string() + ">^-1";
        case Node::Kind::product:
        case Node::Kind::sum: {
            std::string s;
            for (const Operator& c : n.children) {
                if (!s.empty()) s += n.kind == Node::Kind::sum ? " + " : " ";
                s += c.to_string();
            }
            return n.kind == Node::Kind::sum ? "(" + s + ")" : s;
        }
    }
    return {};
}

TensorVector act(const Operator& op, const TensorVector& v, int D, std::int64_t seed_grade) {
    using Kind = Operator::Node::Kind;
    const Operator::Node& n = op.node();
    TensorVector out;
    out.truncated = v.truncated;
    switch (n.kind) {
        case Kind::mono:
            if (D != kNoBudget && grade_shift(n.m) < 0)
                throw std::invalid_argument("budgeted action through a grade-lowering factor " + n.m.to_string());
            for (const auto& [e, c] : v.terms) {
                Exponents f(e.size());
                kernels::add(e, n.m.s, f);
                out.add(f, c.times_q_power(n.m.c + kernels::dot(n.m.t, e)));
            }
            drop_over_budget(out, n.N, D, seed_grade);
            return out;
        case Kind::scalar:
            for (const auto& [e, c] : v.terms) out.add(e, n.r * c);
            return out;
        case Kind::F:
            for (const auto& [e, c] : v.terms) {
                Exponents f = e;
                const std::int32_t k = e[n.ab], l = e[n.ac], m = e[n.bc];
                f[n.ac] = m + k;
                f[n.bc] = l - k;
                out.add(f, c);
            }
            return out;
        case Kind::qexp:
        case Kind::qexp_inv: {
            if (D == kNoBudget) throw std::invalid_argument("quantum exponential needs a finite budget");
            const bool inverse = n.kind == Kind::qexp_inv;
            for (const auto& [e, c] : v.terms) {
                out.add(e, c);
                Exponents cur = e;
                std::int64_t qpow = 0;
                for (int k = 1;; ++k) {
                    qpow += n.m.c + kernels::dot(n.m.t, cur);
                    kernels::add(cur, n.m.s, cur);
                    if (grade(n.N, cur) - seed_grade > D) {
                        out.truncated = true;
                        break;
                    }
                    out.add(cur, (c * series_coefficient(k, inverse)).times_q_power(static_cast<int>(qpow)));
                }
            }
            return out;
        }
        case Kind::product: {
            TensorVector cur = v;
            for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) cur = act(*it, cur, D, seed_grade);
            return cur;
        }
        case Kind::sum:
            for (const Operator& c : n.children) {
                const TensorVector part = act(c, v, D, seed_grade);
                out.truncated = out.truncated || part.truncated;
                for (const auto& [e, coef] : part.terms) out.add(e, coef);
            }
            return out;
    }
    return out;
}

TensorVector act(const Operator& op, const Exponents& seed, int D) {
    if (seed.size() != vertex_count(op.N())) throw std::invalid_argument("probe has the wrong slot count");
    return act(op, TensorVector::monomial(seed), D, grade(op.N(), seed));
}

}  // namespace qtetra
