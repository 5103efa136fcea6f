#pragma once

// The triangular quiver Q_N, its skew-symmetric incidence matrix and the
// vertex maps behind the order-3 automorphism rho and the three
// involutive anti-automorphisms mu1, mu2, mu3.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qtetra {

/// Vertex (i, j) of Q_N, 1 <= i < j <= N.
struct Vertex {
    int i = 0;
    int j = 0;
    friend auto operator<=>(const Vertex&, const Vertex&) = default;
    std::string to_string() const;
};

/// Number of vertices N(N-1)/2.
constexpr std::size_t vertex_count(int N) { return static_cast<std::size_t>(N) * static_cast<std::size_t>(N - 1) / 2; }

/// Position of (i, j) in the lexicographic vertex order; no validity check.
constexpr std::size_t vertex_index(int N, Vertex v) {
    const auto i = static_cast<std::size_t>(v.i);
    return (i - 1) * static_cast<std::size_t>(N) - i * (i - 1) / 2 + static_cast<std::size_t>(v.j - v.i - 1);
}

constexpr bool valid_vertex(int N, Vertex v) { return 1 <= v.i && v.i < v.j && v.j <= N; }

/// All vertices of Q_N in lexicographic order.
std::vector<Vertex> lex_vertices(int N);

struct Edge {
    Vertex from;
    Vertex to;
    friend bool operator==(const Edge&, const Edge&) = default;
};

class Quiver {
public:
    explicit Quiver(int N);

    int N() const { return N_; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t size() const { return vertices_.size(); }
    bool contains(Vertex v) const { return valid_vertex(N_, v); }
    /// Throws std::out_of_range for vertices outside Q_N.
    std::size_t index_of(Vertex v) const;

private:
    int N_;
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
};

/// Throws std::invalid_argument for N < 2.
Quiver build_quiver(int N);

/// Graphviz rendering with vertices labelled "(i,j)".
std::string to_dot(const Quiver& quiver);

/// Dense skew-symmetric matrix B indexed by lexicographic vertex order.
class IncidenceMatrix {
public:
    IncidenceMatrix() = default;
    explicit IncidenceMatrix(std::size_t n) : n_(n), data_(n * n, 0), lower_(n * n, 0) {}

    std::size_t size() const { return n_; }
    std::int32_t operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }
    std::span<const std::int32_t> row(std::size_t r) const { return {data_.data() + r * n_, n_}; }
    /// Row r restricted to columns c < r (zero elsewhere); the commutation
    /// exponent of M(a) M(b) is sum_r a_r * <lower_row(r), b>.
    std::span<const std::int32_t> lower_row(std::size_t r) const { return {lower_.data() + r * n_, n_}; }

    /// Sets B[r][c] = v without touching B[c][r]. Used to build B and to
    /// plant deliberate defects in negative-control runs.
    void set(std::size_t r, std::size_t c, std::int32_t v);
    bool is_skew_symmetric() const;

    friend bool operator==(const IncidenceMatrix& a, const IncidenceMatrix& b) {
        return a.n_ == b.n_ && a.data_ == b.data_;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::int32_t> data_;
    std::vector<std::int32_t> lower_;
};

IncidenceMatrix incidence(const Quiver& quiver);

enum class MapKind { identity, rho, mu1, mu2, mu3 };

struct VertexMap {
    MapKind kind = MapKind::identity;
    int N = 2;

    /// mu_k reverse products; rho and identity preserve them.
    bool is_anti() const { return kind == MapKind::mu1 || kind == MapKind::mu2 || kind == MapKind::mu3; }
    std::string name() const;
};

Vertex apply_vertex_map(const VertexMap& m, Vertex v);

/// perm[k] = index of the image of the k-th lexicographic vertex.
std::vector<std::size_t> vertex_permutation(const VertexMap& m);

/// Orbits of the vertex set under the group generated by rho and the mu_k,
/// each listed in lexicographic order, orbits ordered by their first vertex.
std::vector<std::vector<Vertex>> vertex_orbits(int N);

}  // namespace qtetra
