#include "qtetra/center.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qtetra {

namespace {

std::int64_t at(int N, const WeightVector& a, int i, int j) {
    if (!valid_vertex(N, {i, j})) return 0;
    return a[vertex_index(N, {i, j})];
}

WeightVector make_primitive(const std::vector<mpq_class>& v) {
    mpz_class den = 1;
    for (const mpq_class& x : v) den = lcm(den, mpz_class(x.get_den()));
    std::vector<mpz_class> ints;
    mpz_class g = 0;
    for (const mpq_class& x : v) {
        ints.push_back(mpz_class(x.get_num()) * (den / mpz_class(x.get_den())));
        g = gcd(g, ints.back());
    }
    WeightVector out;
    for (const mpz_class& x : ints) out.push_back(mpz_class(x / g).get_si());
    // first nonzero entry positive
    const auto nz = std::find_if(out.begin(), out.end(), [](std::int64_t x) { return x != 0; });
    if (nz != out.end() && *nz < 0)
        for (auto& x : out) x = -x;
    return out;
}

}  // namespace

int chi(int N) {
    if (N < 2) throw std::invalid_argument("chi: N >= 2");
    return N == 2 ? 1 : N / 2;
}

CenterBasis kernel_basis(int N) {
    const Quiver Q(N);
    const IncidenceMatrix B = incidence(Q);
    const std::size_t n = B.size();
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m[r][c] = B(r, c);

    // Fraction-free row echelon form; rows divided by their content as we go.
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t p = row;
        while (p < n && m[p][col] == 0) ++p;
        if (p == n) continue;
        std::swap(m[p], m[row]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == row || m[r][col] == 0) continue;
            const mpz_class f = m[r][col], piv = m[row][col];
            mpz_class g = 0;
            for (std::size_t c = 0; c < n; ++c) {
                m[r][c] = piv * m[r][c] - f * m[row][c];
                g = gcd(g, m[r][c]);
            }
            if (g > 1)
                for (auto& x : m[r]) x /= g;
        }
        pivot_col.push_back(col);
        ++row;
    }

    CenterBasis out;
    out.N = N;
    std::vector<char> is_pivot(n, 0);
    for (std::size_t c : pivot_col) is_pivot[c] = 1;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<mpq_class> v(n, 0);
        v[f] = 1;
        // Reduced form: each pivot row has a single pivot entry among pivot columns.
        for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = mpq_class(-m[r][f], m[r][pivot_col[r]]);
        for (auto& x : v) x.canonicalize();
        out.elimination.push_back(make_primitive(v));
    }

    const int k = chi(N);
    if (static_cast<int>(out.elimination.size()) == k) {
        for (int t = 0; t < k; ++t) {
            std::vector<std::int64_t> beta(static_cast<std::size_t>(k), 0);
            beta[static_cast<std::size_t>(t)] = 1;
            out.basis.push_back(reconstruct_weights(N, beta).alpha_tilde);
        }
    }
    return out;
}

WeightVector apply_B(const IncidenceMatrix& B, const WeightVector& alpha) {
    if (alpha.size() != B.size()) throw std::invalid_argument("weight vector has the wrong length");
    WeightVector out(B.size(), 0);
    for (std::size_t r = 0; r < B.size(); ++r)
        for (std::size_t c = 0; c < B.size(); ++c) out[r] += B(r, c) * alpha[c];
    return out;
}

bool in_kernel(int N, const WeightVector& alpha) {
    const WeightVector b = apply_B(incidence(Quiver(N)), alpha);
    return std::all_of(b.begin(), b.end(), [](std::int64_t x) { return x == 0; });
}

bool is_central(int N, const WeightVector& alpha) {
    if (std::any_of(alpha.begin(), alpha.end(), [](std::int64_t x) { return x < 0; }))
        throw std::invalid_argument("is_central: weights must be nonnegative");
    return in_kernel(N, alpha);
}

bool commutes_with_generators(const AlgebraPtr& algebra, const WeightVector& alpha) {
    std::vector<std::int32_t> e(alpha.begin(), alpha.end());
    const NCPolynomial M = NCPolynomial::from_monomial(algebra, Monomial(e));
    for (const Vertex v : algebra->quiver().vertices()) {
        const NCPolynomial Z = NCPolynomial::generator(algebra, v);
        if (!(M * Z == Z * M)) return false;
    }
    return true;
}

Reconstruction reconstruct_weights(int N, const std::vector<std::int64_t>& beta) {
    const int k = chi(N);
    if (static_cast<int>(beta.size()) != k)
        throw std::invalid_argument("beta must have " + std::to_string(k) + " entries for N=" + std::to_string(N));
    WeightVector a(vertex_count(N), 0);
    auto set = [&](int i, int j, std::int64_t v) { a[vertex_index(N, {i, j})] = v; };
    // Boundary row from beta and the reflection alpha_{1,j} = alpha_{1,N+2-j}.
    for (int j = 2; j <= N; ++j) set(1, j, j <= k + 1 ? beta[static_cast<std::size_t>(j - 2)] : beta[static_cast<std::size_t>(N - j)]);
    // Row sweep: commutation with Z_{i,j} fixes alpha_{i+1,j+1}.
    for (int i = 1; i + 1 <= N - 1; ++i)
        for (int j = i + 1; j + 1 <= N; ++j)
            set(i + 1, j + 1,
                at(N, a, i, j + 1) + at(N, a, i + 1, j) + at(N, a, i - 1, j - 1) - at(N, a, i, j - 1) -
                    at(N, a, i - 1, j));
    if (!in_kernel(N, a)) throw std::logic_error("reconstruction left the kernel of B");

    Reconstruction r;
    r.alpha_tilde = a;
    r.m = std::max<std::int64_t>(0, -*std::min_element(a.begin(), a.end()));
    r.alpha = a;
    for (auto& x : r.alpha) x += r.m;
    return r;
}

bool has_symmetries(int N, const WeightVector& alpha) {
    const Quiver Q(N);
    for (const MapKind kind : {MapKind::rho, MapKind::mu1, MapKind::mu2, MapKind::mu3}) {
        const std::vector<std::size_t> perm = vertex_permutation({kind, N});
        for (std::size_t v = 0; v < perm.size(); ++v)
            if (alpha[perm[v]] != alpha[v]) return false;
    }
    return true;
}

std::string weight_grid(int N, const WeightVector& alpha) {
    std::size_t width = 1;
    for (std::int64_t x : alpha) width = std::max(width, std::to_string(x).size());
    std::ostringstream os;
    for (int i = 1; i < N; ++i) {
        os << std::string(static_cast<std::size_t>(i - 1) * (width + 1), ' ');
        for (int j = i + 1; j <= N; ++j) {
            const std::string s = std::to_string(alpha[vertex_index(N, {i, j})]);
            os << std::string(width - s.size(), ' ') << s << (j < N ? " " : "");
        }
        os << '\n';
    }
    return os.str();
}

SuiteReport verify_center_symmetries(int N) {
    const auto t0 = std::chrono::steady_clock::now();
    SuiteReport rep;
    rep.suite = "center-symmetries";
    rep.params = {{"N", N}};
    const CenterBasis cb = kernel_basis(N);
    const AlgebraPtr alg = Algebra::make(N);
    for (std::size_t k = 0; k < cb.basis.size(); ++k)
        rep.add({"basis " + std::to_string(k) + " symmetric", has_symmetries(N, cb.basis[k]), {{"alpha", cb.basis[k]}}});

    // Nonnegative central monomials: shifted basis vectors and their sum.
    std::vector<WeightVector> central;
    WeightVector total(vertex_count(N), 0);
    for (const WeightVector& b : cb.basis) {
        const std::int64_t m = std::max<std::int64_t>(0, -*std::min_element(b.begin(), b.end()));
        WeightVector s = b;
        for (std::size_t v = 0; v < s.size(); ++v) {
            s[v] += m;
            total[v] += s[v];
        }
        central.push_back(std::move(s));
    }
    central.push_back(total);
    for (const WeightVector& a : central) {
        const NCPolynomial M = NCPolynomial::from_monomial(alg, Monomial(std::vector<std::int32_t>(a.begin(), a.end())));
        for (const MapKind kind : {MapKind::rho, MapKind::mu1, MapKind::mu2, MapKind::mu3}) {
            const VertexMap map{kind, N};
            rep.add({map.name() + " fixes M(alpha)", apply_hom(map, M) == M, {{"alpha", a}}});
        }
    }
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::vector<std::vector<std::int64_t>> shift_counterexamples(int N, int bound) {
    const int k = chi(N);
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> beta(static_cast<std::size_t>(k), 0);
    std::function<void(int, std::int64_t)> rec = [&](int pos, std::int64_t lo) {
        if (pos == k) {
            if (reconstruct_weights(N, beta).m > 0) out.push_back(beta);
            return;
        }
        for (std::int64_t v = lo; v <= bound; ++v) {
            beta[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, v);
        }
    };
    rec(0, 0);
    return out;
}

}  // namespace qtetra
