#pragma once

// The algebra T_N: normal-ordered monomials M(alpha) = prod_lex Z_ij^alpha_ij,
// q-commutation reordering governed by the incidence matrix B, truncated
// polynomial arithmetic, (anti-)automorphisms and the vertex-kill maps.

#include "qtetra/qfield.hpp"
#include "qtetra/quiver.hpp"

#include <climits>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace qtetra {

/// Exponent vector over the lexicographically ordered vertices.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t vertices) : e_(vertices, 0) {}
    explicit Monomial(std::vector<std::int32_t> exponents) : e_(std::move(exponents)) {}

    std::size_t size() const { return e_.size(); }
    std::int32_t operator[](std::size_t k) const { return e_[k]; }
    std::int32_t& operator[](std::size_t k) { return e_[k]; }
    std::span<const std::int32_t> exponents() const { return e_; }
    std::span<std::int32_t> exponents() { return e_; }
    int degree() const;
    bool is_one() const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    /// Graded lexicographic: lower degree first, then larger exponent at the
    /// earlier vertex first (so Z12 sorts before Z13).
    friend bool operator<(const Monomial& a, const Monomial& b);

private:
    std::vector<std::int32_t> e_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

/// Ordered word of generator powers, not necessarily normal-ordered.
struct Factor {
    Vertex vertex;
    int exponent = 1;
    friend bool operator==(const Factor&, const Factor&) = default;
};
using FactorSequence = std::vector<Factor>;

/// Shared, immutable description of T_N: quiver and incidence matrix.
class Algebra {
public:
    explicit Algebra(int N);
    /// Same quiver with an arbitrary (possibly defective) matrix.
    Algebra(int N, IncidenceMatrix b);

    int N() const { return N_; }
    const Quiver& quiver() const { return quiver_; }
    const IncidenceMatrix& B() const { return b_; }
    std::size_t vertex_count() const { return quiver_.size(); }

    /// Exponent e with M(a) M(b) = q^e M(a + b).
    std::int32_t commutation_exponent(const Monomial& a, const Monomial& b) const;

    static std::shared_ptr<const Algebra> make(int N) { return std::make_shared<const Algebra>(N); }

private:
    int N_;
    Quiver quiver_;
    IncidenceMatrix b_;
};
using AlgebraPtr = std::shared_ptr<const Algebra>;

struct NormalOrdered {
    std::int32_t q_exponent = 0;
    Monomial monomial;
};

/// Ordered product of seq equals q^e * M(alpha); vertices must lie in Q_N.
NormalOrdered normal_order(const FactorSequence& seq, const Algebra& algebra);

/// Normal-ordered monomial back to its lexicographic factor word.
FactorSequence factor_sequence(const Monomial& m, const Quiver& quiver);

inline constexpr int kUnbounded = INT_MAX;

class NCPolynomial {
public:
    using TermMap = std::map<Monomial, RationalFunction>;

    NCPolynomial(AlgebraPtr algebra, int truncation = kUnbounded);

    static NCPolynomial one(AlgebraPtr algebra, int truncation = kUnbounded);
    static NCPolynomial generator(AlgebraPtr algebra, Vertex v, int truncation = kUnbounded);
    /// coef * (ordered product of seq), normal-ordered.
    static NCPolynomial from_sequence(AlgebraPtr algebra, const FactorSequence& seq, const RationalFunction& coef = 1,
                                      int truncation = kUnbounded);
    static NCPolynomial from_monomial(AlgebraPtr algebra, Monomial m, const RationalFunction& coef = 1,
                                      int truncation = kUnbounded);

    const Algebra& algebra() const { return *algebra_; }
    const AlgebraPtr& algebra_ptr() const { return algebra_; }
    int truncation() const { return truncation_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    RationalFunction coefficient(const Monomial& m) const;
    RationalFunction constant_term() const;
    int max_degree() const;
    int min_degree() const;

    /// Overwrites the coefficient of m (zero removes it).
    void set_coefficient(const Monomial& m, const RationalFunction& c);
    NCPolynomial truncated(int degree) const;

    NCPolynomial operator-() const;
    NCPolynomial& operator+=(const NCPolynomial& o);
    NCPolynomial& operator-=(const NCPolynomial& o);
    friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
    friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) { return a -= b; }
    friend NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b);
    friend NCPolynomial operator*(const RationalFunction& c, const NCPolynomial& p);
    friend bool operator==(const NCPolynomial& a, const NCPolynomial& b) { return a.terms_ == b.terms_; }

    /// One term per line: "coeff * Z[i,j]^a * ...", in monomial order.
    std::string to_string() const;

private:
    void check_compatible(const NCPolynomial& o) const;

    AlgebraPtr algebra_;
    int truncation_;
    TermMap terms_;
};

/// Truncated product; throws std::invalid_argument on mismatched N, B or D.
NCPolynomial poly_mul(const NCPolynomial& a, const NCPolynomial& b);

/// Image under the algebra map induced by a vertex map: relabel, reverse the
/// factor order when anti, re-normal-order.
NCPolynomial apply_hom(const VertexMap& map, bool anti, const NCPolynomial& p);
/// Uses the map's own variance (mu_k anti, rho not).
NCPolynomial apply_hom(const VertexMap& map, const NCPolynomial& p);

/// sigma_I: drops every term touching a vertex of I.
NCPolynomial sigma_kill(const std::set<Vertex>& killed, const NCPolynomial& p);

/// Render a monomial as "Z[1,2]^2 * Z[1,3]^1" ("1" for the unit).
std::string monomial_to_string(const Monomial& m, const Quiver& quiver);

/// Parse the canonical text form back; used by golden-file tests.
NCPolynomial parse_polynomial(AlgebraPtr algebra, const std::string& text, int truncation = kUnbounded);

}  // namespace qtetra
