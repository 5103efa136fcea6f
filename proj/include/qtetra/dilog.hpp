#pragma once

// Quantum exponentials <x> = sum (-x)^n / (q;q)_n over T_N, the elements
// <abc>, <ab>, T_N, and exact truncated verification of the identities
// they satisfy.

#include "qtetra/ncalgebra.hpp"
#include "qtetra/report.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace qtetra {

/// Point (a, b, c) of the discrete tetrahedron, 1 <= a < b < c <= N + 1.
struct Lambda {
    int a = 0;
    int b = 0;
    int c = 0;
    friend auto operator<=>(const Lambda&, const Lambda&) = default;
};

/// Lexicographically ordered points of the tetrahedron for T_N.
std::vector<Lambda> tetrahedron_points(int N);

/// Ordered product of quantum exponentials, each given by its argument word.
using QExpFactors = std::vector<FactorSequence>;

/// Throws std::invalid_argument if arg has a nonzero constant term.
NCPolynomial qexp(const NCPolynomial& arg, int D);
/// Inverse series sum q^{n(n-1)/2} x^n / (q;q)_n.
NCPolynomial qexp_inv(const NCPolynomial& arg, int D);

/// Argument word Z_{a,b} Z_{a+1,b+1} ... Z_{a+c-b-1,c-1} of <abc>.
FactorSequence lambda_word(const Lambda& l);
/// Throws std::invalid_argument when l is outside the tetrahedron for N.
NCPolynomial E_lambda(const Lambda& l, const AlgebraPtr& algebra, int D);
/// <ab> = prod_{c = b+1 .. N+1} <abc>.
NCPolynomial E_ab(int a, int b, const AlgebraPtr& algebra, int D);
QExpFactors E_ab_factors(int a, int b, int N);

/// Factor list of T_N (binomial(N+1, 3) entries).
QExpFactors T_factors(int N);
NCPolynomial build_T(const AlgebraPtr& algebra, int D);

NCPolynomial qexp_product(const AlgebraPtr& algebra, const QExpFactors& factors, int D);

/// Image of a factor product under a vertex map, factor by factor; anti maps
/// reverse both each argument word and the factor order.
QExpFactors map_factors(const VertexMap& map, const QExpFactors& factors);

struct Mismatch {
    std::string monomial;
    std::string lhs;
    std::string rhs;
};

struct IdentityReport {
    std::string name;
    int N = 0;
    int D = 0;
    bool equal = false;
    std::optional<Mismatch> mismatch;
    double millis = 0.0;

    nlohmann::json to_json() const;
    Check to_check() const;
};

/// Exact comparison; on failure reports the first differing monomial in
/// monomial order.
IdentityReport verify_identity(const NCPolynomial& lhs, const NCPolynomial& rhs, std::string name = "identity");

/// <X><Y> = <X + Y> for YX = qXY.
IdentityReport verify_schuetzenberger(const AlgebraPtr& algebra, Vertex x, Vertex y, int D);
/// <X><XY><Y> = <Y><X> for YX = qXY.
IdentityReport verify_pentagon(const AlgebraPtr& algebra, Vertex x, Vertex y, int D);
/// Ordered pairs (X, Y) of generators with Z_Y Z_X = q Z_X Z_Y.
std::vector<std::pair<Vertex, Vertex>> q_commuting_pairs(const Algebra& algebra);
/// Three-way cyclic 4~4 identity in T_3 (X = Z12, Y = Z23, Z = Z13).
std::vector<IdentityReport> verify_cyclic44(const AlgebraPtr& algebra3, int D);

/// T_N = mu1(T_N) = mu2(T_N) = mu3(T_N) = rho(T_N) = rho(rho(T_N)).
std::vector<IdentityReport> verify_theorem1(int N, int D);
std::vector<IdentityReport> verify_theorem1(const AlgebraPtr& algebra, int D);

/// T_N = rho(T_N) with every factor touching a killed vertex replaced by 1.
IdentityReport verify_prop_QQ(int N, const std::set<Vertex>& killed, int D);
IdentityReport verify_prop_QQ(const AlgebraPtr& algebra, const std::set<Vertex>& killed, int D);
/// Factor lists of both sides after the kill.
std::pair<QExpFactors, QExpFactors> prop_QQ_sides(int N, const std::set<Vertex>& killed);

/// The ten displayed expressions of the worked T_4 derivation.
std::vector<QExpFactors> t4_chain_lines();
/// Parses the fixture format: one expression per line, factors separated by
/// blanks, generators inside a factor joined by '.', e.g. "12 12.23 13".
std::vector<QExpFactors> parse_chain_fixture(const std::string& text);
/// Consecutive-line equalities, line 1 = T_4 and line 10 = rho(T_4).
std::vector<IdentityReport> verify_T4_chain(int D);

std::string factors_to_string(const QExpFactors& factors);

}  // namespace qtetra
