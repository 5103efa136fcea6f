#include "qtetra/dilog.hpp"
#include "qtetra/kernels.hpp"
#include "qtetra/ncalgebra.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace qtetra;

namespace {

FactorSequence random_sequence(std::mt19937& rng, const Quiver& q, int len) {
    std::uniform_int_distribution<std::size_t> pick(0, q.size() - 1);
    std::uniform_int_distribution<int> ex(0, 3);
    FactorSequence s;
    for (int k = 0; k < len; ++k) s.push_back({q.vertices()[pick(rng)], ex(rng)});
    return s;
}

NCPolynomial random_poly(std::mt19937& rng, const AlgebraPtr& alg, int terms, int trunc = kUnbounded) {
    std::uniform_int_distribution<int> c(-3, 3);
    NCPolynomial p(alg, trunc);
    for (int k = 0; k < terms; ++k)
        p += NCPolynomial::from_sequence(alg, random_sequence(rng, alg->quiver(), 3),
                                         RationalFunction(LaurentPoly::monomial(c(rng), c(rng))), trunc);
    return p;
}

}  // namespace

TEST_CASE("normal_order examples") {
    const Algebra a3(3);
    auto r = normal_order({{{1, 3}, 1}, {{1, 2}, 1}}, a3);
    CHECK(r.q_exponent == -1);
    CHECK(r.monomial == Monomial(std::vector<std::int32_t>{1, 1, 0}));
    CHECK(normal_order({{{1, 2}, 1}, {{1, 3}, 1}}, a3).q_exponent == 0);
    const Algebra a4(4);
    CHECK(normal_order({{{3, 4}, 1}, {{1, 2}, 1}}, a4).q_exponent == 0);
    CHECK_THROWS(normal_order({{{1, 4}, 1}}, a3));
}

TEST_CASE("normal_order agrees with the bubble-sort oracle") {
    std::mt19937 rng(11);
    for (int N = 2; N <= 6; ++N) {
        const Algebra alg(N);
        for (int rep = 0; rep < 150; ++rep) {
            const auto seq = random_sequence(rng, alg.quiver(), 1 + rep % 7);
            const auto got = normal_order(seq, alg);
            const auto [e, alpha] = oracle::normal_order(seq, alg);
            CHECK(got.q_exponent == e);
            for (std::size_t k = 0; k < alpha.size(); ++k) CHECK(got.monomial[k] == alpha[k]);
        }
    }
}

TEST_CASE("commutation_exponent matches reordering") {
    std::mt19937 rng(5);
    const auto alg = Algebra::make(5);
    for (int rep = 0; rep < 100; ++rep) {
        const auto sa = random_sequence(rng, alg->quiver(), 3);
        const auto sb = random_sequence(rng, alg->quiver(), 3);
        const auto a = normal_order(sa, *alg).monomial, b = normal_order(sb, *alg).monomial;
        FactorSequence ab = factor_sequence(a, alg->quiver());
        for (const auto& f : factor_sequence(b, alg->quiver())) ab.push_back(f);
        CHECK(alg->commutation_exponent(a, b) == oracle::normal_order(ab, *alg).first);
    }
}

TEST_CASE("product is associative, unital and respects truncation") {
    std::mt19937 rng(17);
    const auto alg = Algebra::make(4);
    for (int rep = 0; rep < 30; ++rep) {
        const auto x = random_poly(rng, alg, 3), y = random_poly(rng, alg, 3), z = random_poly(rng, alg, 2);
        CHECK((x * y) * z == x * (y * z));
        CHECK(NCPolynomial::one(alg) * x == x);
        CHECK(x * (y + z) == x * y + x * z);
    }
    const auto p = random_poly(rng, alg, 4, 5);
    CHECK((p * p).max_degree() <= 5);
    const NCPolynomial other(Algebra::make(3));
    CHECK_THROWS_AS(poly_mul(NCPolynomial(alg), other), std::invalid_argument);
    CHECK_THROWS_AS(poly_mul(NCPolynomial(alg, 4), NCPolynomial(alg, 5)), std::invalid_argument);
}

TEST_CASE("the product does not depend on the kernel ISA") {
    if (!kernels::isa_available(kernels::Isa::avx2)) return;
    const auto before = kernels::active_isa();
    kernels::force_isa(kernels::Isa::scalar);
    const auto alg = Algebra::make(4);
    const auto s = build_T(alg, 5);
    kernels::force_isa(kernels::Isa::avx2);
    const auto v = build_T(alg, 5);
    kernels::force_isa(before);
    CHECK(s == v);
}

TEST_CASE("homomorphisms") {
    const auto a3 = Algebra::make(3);
    const auto z12 = NCPolynomial::generator(a3, {1, 2});
    const auto z13 = NCPolynomial::generator(a3, {1, 3});
    const auto z23 = NCPolynomial::generator(a3, {2, 3});
    CHECK(apply_hom({MapKind::rho, 3}, z12) == z13);
    // mu2 sends (1,2) -> (2,3), (1,3) -> (1,3) and reverses: Z13 Z23, already ordered
    CHECK(apply_hom({MapKind::mu2, 3}, z12 * z13) == z13 * z23);
    std::mt19937 rng(23);
    const auto a5 = Algebra::make(5);
    for (int rep = 0; rep < 20; ++rep) {
        const auto x = random_poly(rng, a5, 3), y = random_poly(rng, a5, 3);
        CHECK(apply_hom({MapKind::identity, 5}, false, x) == x);
        CHECK(apply_hom({MapKind::rho, 5}, x * y) == apply_hom({MapKind::rho, 5}, x) * apply_hom({MapKind::rho, 5}, y));
        for (MapKind k : {MapKind::mu1, MapKind::mu2, MapKind::mu3}) {
            const VertexMap m{k, 5};
            CHECK(apply_hom(m, x * y) == apply_hom(m, y) * apply_hom(m, x));
            CHECK(apply_hom(m, apply_hom(m, x)) == x);
        }
    }
}

TEST_CASE("sigma_kill") {
    const auto a3 = Algebra::make(3);
    const auto p = NCPolynomial::generator(a3, {1, 2}) + NCPolynomial::generator(a3, {1, 3});
    CHECK(sigma_kill({}, p) == p);
    CHECK(sigma_kill({{1, 3}}, p) == NCPolynomial::generator(a3, {1, 2}));
}

TEST_CASE("text round trip") {
    std::mt19937 rng(29);
    const auto alg = Algebra::make(4);
    for (int rep = 0; rep < 20; ++rep) {
        const auto x = random_poly(rng, alg, 4);
        CHECK(parse_polynomial(alg, x.to_string()) == x);
    }
    CHECK(monomial_to_string(Monomial(3), Quiver(3)) == "1");
}
