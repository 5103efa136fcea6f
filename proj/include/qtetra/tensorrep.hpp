#pragma once

// Monomial-action operators on S_N, the space of formal series in x_ij with
// one tensor slot per vertex (i, j). Operators are kept as expression trees
// and evaluated lazily on probe monomials; quantum exponentials are expanded
// under a shift budget.

#include "qtetra/dilog.hpp"
#include "qtetra/report.hpp"
#include "qtetra/simplex.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace qtetra {

using Exponents = std::vector<std::int32_t>;

/// q^c x^s y^t on S_N, the y part acting first: x^e -> q^{c + t.e} x^{e + s}.
struct MonomialOp {
    int N = 2;
    std::int32_t c = 0;
    Exponents s;
    Exponents t;

    static MonomialOp identity(int N);
    /// x_ij^power; throws std::invalid_argument for a slot outside S_N.
    static MonomialOp x(int N, int i, int j, int power = 1);
    /// y_ij^power; y_ii is the identity.
    static MonomialOp y(int N, int i, int j, int power = 1);
    static MonomialOp q_power(int N, int k);

    /// Operator product: (*this) applied after o.
    MonomialOp operator*(const MonomialOp& o) const;
    friend bool operator==(const MonomialOp&, const MonomialOp&) = default;
    std::string to_string() const;
};

/// Grade -sum_{i<j} j e_ij; F operators preserve it and every quantum
/// exponential argument used here raises it, so it serves as the budget.
std::int64_t grade(int N, const Exponents& e);
std::int64_t grade_shift(const MonomialOp& m);

struct TensorVector {
    std::map<Exponents, RationalFunction> terms;
    bool truncated = false;

    static TensorVector monomial(Exponents e) {
        TensorVector v;
        v.terms.emplace(std::move(e), RationalFunction(1));
        return v;
    }
    void add(const Exponents& e, const RationalFunction& c);
    friend bool operator==(const TensorVector& a, const TensorVector& b) { return a.terms == b.terms; }
};

class Operator {
public:
    struct Node;

    Operator() = default;
    explicit Operator(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    static Operator identity(int N);
    static Operator mono(const MonomialOp& m);
    static Operator scalar(int N, const RationalFunction& r);
    /// F acting on slots (a,b),(a,c),(b,c) by (k,l,m) -> (k, m+k, l-k).
    static Operator F(int a, int b, int c, int N);
    /// sum_n (-W)^n / (q;q)_n
    static Operator qexp(const MonomialOp& w);
    /// sum_n q^{n(n-1)/2} W^n / (q;q)_n
    static Operator qexp_inv(const MonomialOp& w);
    /// Product in written order; the rightmost factor acts first.
    static Operator product(const std::vector<Operator>& factors);
    static Operator sum(const std::vector<Operator>& terms);

    Operator operator*(const Operator& o) const { return product({*this, o}); }
    Operator operator+(const Operator& o) const { return sum({*this, o}); }

    int N() const;
    const Node& node() const { return *node_; }
    /// True when no part of the operator lowers the grade, which makes
    /// budget truncation sound.
    bool grade_monotone() const;
    std::string to_string() const;

private:
    std::shared_ptr<const Node> node_;
};

/// Unbounded budget: exact action, only valid without quantum exponentials.
inline constexpr int kNoBudget = -1;

/// Exact action with terms more than D above the seed grade dropped.
/// Throws std::invalid_argument for a finite budget on an operator that
/// can lower the grade, or an unbounded budget on a quantum exponential.
TensorVector act(const Operator& op, const TensorVector& v, int D, std::int64_t seed_grade);
TensorVector act(const Operator& op, const Exponents& seed, int D = kNoBudget);

// Builders for the operators of the tensor representations.

/// R(gamma) = F . <q^{1+g} x_ab x_bc^-1 y_ab^g y_ac^-g y_bc^{-1-g}>
Operator build_R(int a, int b, int c, int gamma, int N);
/// <q x_ab x_bc^-1 y_ab y_ac^-1>, with R_abc(gamma = 0) = Rhat F.
Operator build_Rhat(int a, int b, int c, int N);
/// tau(Z_ab) on S_{N+1}.
MonomialOp tau_generator(Vertex z, int N);
/// tau of an ordered generator word.
MonomialOp tau_word(const FactorSequence& word, int N);
/// Ordered product of tau(<word>) over the factor list.
Operator tau_qexp_product(const QExpFactors& factors, int N);

enum class PhiKind { phi, phi_prime, phi_dblprime };
MonomialOp phi_argument(PhiKind kind, int a, int b, int c, int N);
Operator build_phi_hom(PhiKind kind, int a, int b, int c, int N);

/// Word images under theta (R -> F), phi_gamma, and the phi homomorphisms.
Operator theta_word(const Word& w);
Operator phi_gamma_word(const Word& w, int gamma);
Operator phi_hom_word(PhiKind kind, const Word& w);

/// F_N = theta(W'(3,N)).
Operator build_FN(int N);

/// The X, Y, Z of the reduced 4~4 check on S_4.
struct XYZ {
    MonomialOp X, Y, Z;
};
XYZ xyz_operators(int gamma);

struct ProbeSpec {
    int box_radius = 2;
    int samples = 200;
    std::uint64_t seed = 20130101;
    /// Slot counts above this use sampling instead of the full box.
    int box_slot_limit = 6;
    bool force_samples = false;
};

/// Full radius-r box for small slot counts, otherwise seeded samples from
/// the box plus the zero and all unit monomials.
std::vector<Exponents> make_probes(int N, const ProbeSpec& spec);
nlohmann::json probe_summary(int N, const ProbeSpec& spec);

/// Compares lhs and rhs on every probe; the check fails with the first
/// mismatching probe, output monomial and both coefficients.
Check compare_operators(const std::string& name, const Operator& lhs, const Operator& rhs,
                        const std::vector<Exponents>& probes, int D = kNoBudget);

enum class TetraBuilder { F, R };

SuiteReport check_tetrahedron(TetraBuilder builder, const std::vector<int>& gammas, int D, const ProbeSpec& probes);
SuiteReport check_XYZ_operators(const std::vector<int>& gammas, int D, const ProbeSpec& probes);
/// tau respects every commutation relation of T_N on S_{N+1}.
SuiteReport check_tau_representation(int N, const ProbeSpec& probes);
/// Lemma 7 and the supporting identities around F_N and phi, phi', phi''.
SuiteReport check_lemma7(int N, int D, const ProbeSpec& probes);
/// Conjugation of x_ab and y_ab by F_N and the derived intertwiners.
SuiteReport check_FN_conjugation(int N, const ProbeSpec& probes);

}  // namespace qtetra
