#include "qtetra/quiver.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

using namespace qtetra;

namespace {

std::size_t idx(int N, int i, int j) { return vertex_index(N, Vertex{i, j}); }

// Edge rule written out independently from the library enumeration.
bool has_edge(Vertex u, Vertex v) {
    return (v.i == u.i && v.j == u.j + 1) || (v.i == u.i + 1 && v.j == u.j) ||
           (v.i + 1 == u.i && v.j + 1 == u.j);
}

}  // namespace

TEST_CASE("build_quiver examples") {
    CHECK_THROWS_AS(build_quiver(1), std::invalid_argument);
    const Quiver q2 = build_quiver(2);
    CHECK(q2.size() == 1);
    CHECK(q2.edges().empty());
    const Quiver q3 = build_quiver(3);
    CHECK(q3.size() == 3);
    const std::vector<Edge> want{{{1, 2}, {1, 3}}, {{1, 3}, {2, 3}}, {{2, 3}, {1, 2}}};
    CHECK(q3.edges().size() == 3);
    for (const auto& e : want) CHECK(std::find(q3.edges().begin(), q3.edges().end(), e) != q3.edges().end());
    CHECK(build_quiver(4).edges().size() == 9);
    CHECK(to_dot(q3).find("\"(1,2)\"") != std::string::npos);
}

TEST_CASE("edge count and incidence for N up to 9") {
    for (int N = 2; N <= 9; ++N) {
        const Quiver q(N);
        CHECK(q.size() == vertex_count(N));
        CHECK(q.edges().size() == static_cast<std::size_t>(3 * (N - 1) * (N - 2) / 2));
        const IncidenceMatrix B = incidence(q);
        CHECK(B.is_skew_symmetric());
        for (const Vertex& u : q.vertices())
            for (const Vertex& v : q.vertices()) {
                const int want = has_edge(u, v) ? 1 : (has_edge(v, u) ? -1 : 0);
                CHECK(B(q.index_of(u), q.index_of(v)) == want);
            }
        for (std::size_t k = 0; k < q.size(); ++k) CHECK(q.index_of(q.vertices()[k]) == k);
    }
    const IncidenceMatrix B3 = incidence(Quiver(3));
    CHECK(B3(idx(3, 1, 2), idx(3, 1, 3)) == 1);
    CHECK(B3(idx(3, 1, 3), idx(3, 2, 3)) == 1);
    CHECK(B3(idx(3, 2, 3), idx(3, 1, 2)) == 1);
    CHECK(incidence(Quiver(4))(idx(4, 1, 2), idx(4, 3, 4)) == 0);
    CHECK_THROWS_AS(Quiver(3).index_of(Vertex{2, 4}), std::out_of_range);
}

TEST_CASE("vertex map examples") {
    CHECK(apply_vertex_map({MapKind::rho, 3}, {1, 2}) == Vertex{1, 3});
    CHECK(apply_vertex_map({MapKind::mu2, 4}, {1, 3}) == Vertex{2, 4});
    CHECK(apply_vertex_map({MapKind::mu1, 5}, {2, 4}) == Vertex{2, 4});
}

TEST_CASE("rho preserves B, the mu_k negate it, orders 3 and 2") {
    for (int N = 2; N <= 8; ++N) {
        const Quiver q(N);
        const IncidenceMatrix B = incidence(q);
        for (MapKind k : {MapKind::rho, MapKind::mu1, MapKind::mu2, MapKind::mu3}) {
            const VertexMap m{k, N};
            const auto perm = vertex_permutation(m);
            std::set<std::size_t> image(perm.begin(), perm.end());
            CHECK(image.size() == q.size());
            const int sign = m.is_anti() ? -1 : 1;
            for (std::size_t r = 0; r < q.size(); ++r)
                for (std::size_t c = 0; c < q.size(); ++c) CHECK(B(perm[r], perm[c]) == sign * B(r, c));
            const int order = k == MapKind::rho ? 3 : 2;
            for (const Vertex& v : q.vertices()) {
                Vertex w = v;
                for (int s = 0; s < order; ++s) w = apply_vertex_map(m, w);
                CHECK(w == v);
            }
        }
    }
}

TEST_CASE("orbits for N = 5") {
    const auto orbits = vertex_orbits(5);
    REQUIRE(orbits.size() == 3);
    CHECK(orbits[0] == std::vector<Vertex>{{1, 2}, {1, 5}, {4, 5}});
    CHECK(orbits[1] == std::vector<Vertex>{{1, 3}, {1, 4}, {2, 3}, {2, 5}, {3, 4}, {3, 5}});
    CHECK(orbits[2] == std::vector<Vertex>{{2, 4}});
}
