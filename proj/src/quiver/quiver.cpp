#include "qtetra/quiver.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qtetra {

std::string Vertex::to_string() const { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

std::vector<Vertex> lex_vertices(int N) {
    std::vector<Vertex> out;
    out.reserve(vertex_count(N));
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) out.push_back({i, j});
    return out;
}

Quiver::Quiver(int N) : N_(N) {
    if (N < 2) throw std::invalid_argument("quiver Q_N requires N >= 2");
    vertices_ = lex_vertices(N);
    for (const Vertex v : vertices_) {
        const Vertex right{v.i, v.j + 1};
        const Vertex down{v.i + 1, v.j};
        if (contains(right)) edges_.push_back({v, right});
        if (contains(down)) edges_.push_back({v, down});
    }
    // (i+1, j+1) -> (i, j)
    for (const Vertex v : vertices_) {
        const Vertex src{v.i + 1, v.j + 1};
        if (contains(src)) edges_.push_back({src, v});
    }
}

std::size_t Quiver::index_of(Vertex v) const {
    if (!contains(v)) throw std::out_of_range("vertex " + v.to_string() + " is not in Q_" + std::to_string(N_));
    return vertex_index(N_, v);
}

Quiver build_quiver(int N) { return Quiver(N); }

std::string to_dot(const Quiver& quiver) {
    std::ostringstream os;
    os << "digraph Q" << quiver.N() << " {\n";
    for (const Vertex v : quiver.vertices()) os << "  \"" << v.to_string() << "\";\n";
    for (const Edge& e : quiver.edges()) os << "  \"" << e.from.to_string() << "\" -> \"" << e.to.to_string() << "\";\n";
    os << "}\n";
    return os.str();
}

void IncidenceMatrix::set(std::size_t r, std::size_t c, std::int32_t v) {
    data_[r * n_ + c] = v;
    if (c < r) lower_[r * n_ + c] = v;
}

bool IncidenceMatrix::is_skew_symmetric() const {
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t c = 0; c < n_; ++c)
            if ((*this)(r, c) != -(*this)(c, r)) return false;
    return true;
}

IncidenceMatrix incidence(const Quiver& quiver) {
    IncidenceMatrix b(quiver.size());
    for (const Edge& e : quiver.edges()) {
        const std::size_t f = quiver.index_of(e.from);
        const std::size_t t = quiver.index_of(e.to);
        b.set(f, t, 1);
        b.set(t, f, -1);
    }
    return b;
}

std::string VertexMap::name() const {
    switch (kind) {
        case MapKind::identity: return "identity";
        case MapKind::rho: return "rho";
        case MapKind::mu1: return "mu1";
        case MapKind::mu2: return "mu2";
        case MapKind::mu3: return "mu3";
    }
    return "?";
}

Vertex apply_vertex_map(const VertexMap& m, Vertex v) {
    if (!valid_vertex(m.N, v)) throw std::invalid_argument("vertex " + v.to_string() + " invalid for N=" + std::to_string(m.N));
    const int N = m.N;
    switch (m.kind) {
        case MapKind::identity: return v;
        case MapKind::rho: return {v.j - v.i, N + 1 - v.i};
        case MapKind::mu1: return {v.j - v.i, v.j};
        case MapKind::mu2: return {N + 1 - v.j, N + 1 - v.i};
        case MapKind::mu3: return {v.i, N + 1 + v.i - v.j};
    }
    throw std::invalid_argument("unknown vertex map");
}

std::vector<std::size_t> vertex_permutation(const VertexMap& m) {
    std::vector<std::size_t> perm;
    for (const Vertex v : lex_vertices(m.N)) perm.push_back(vertex_index(m.N, apply_vertex_map(m, v)));
    return perm;
}

std::vector<std::vector<Vertex>> vertex_orbits(int N) {
    const auto verts = lex_vertices(N);
    std::vector<int> orbit_of(verts.size(), -1);
    std::vector<std::vector<Vertex>> orbits;
    const MapKind gens[] = {MapKind::rho, MapKind::mu1, MapKind::mu2, MapKind::mu3};
    for (std::size_t start = 0; start < verts.size(); ++start) {
        if (orbit_of[start] >= 0) continue;
        const int id = static_cast<int>(orbits.size());
        std::vector<Vertex> orbit;
        std::vector<Vertex> stack{verts[start]};
        orbit_of[start] = id;
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            orbit.push_back(v);
            for (const MapKind k : gens) {
                const Vertex w = apply_vertex_map({k, N}, v);
                const std::size_t wi = vertex_index(N, w);
                if (orbit_of[wi] < 0) {
                    orbit_of[wi] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

}  // namespace qtetra
