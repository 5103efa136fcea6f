// One line per acceptance criterion; exit status 1 if any line fails.

#include "qtetra/center.hpp"
#include "qtetra/dilog.hpp"
#include "qtetra/simplex.hpp"
#include "qtetra/suites.hpp"
#include "qtetra/tensorrep.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace qtetra;

namespace {

struct Outcome {
    bool pass = true;
    std::string note;
    void require(bool ok, const std::string& what) {
        if (!ok && pass) note = what;
        pass = pass && ok;
    }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_ms, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.require(false, std::string("exception: ") + e.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (limit_ms > 0) o.require(ms <= limit_ms, "over time limit");
    if (!o.pass) ++failures;
    std::printf("%s  %2d  %s  (%.1f ms)%s%s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), ms,
                o.note.empty() ? "" : "  ", o.note.c_str());
    std::fflush(stdout);
}

void require_reports(Outcome& o, const std::vector<IdentityReport>& reps) {
    for (const auto& r : reps) o.require(r.equal, r.name + " N=" + std::to_string(r.N));
}

void require_suite(Outcome& o, const SuiteReport& r) {
    for (const auto& c : r.checks) o.require(c.pass, r.suite + ": " + c.name);
}

long binom(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

int main() {
    criterion(1, "pentagon and Schuetzenberger in T_3, D=8, < 1 s", 1000, [](Outcome& o) {
        const auto alg = Algebra::make(3);
        const auto pairs = q_commuting_pairs(*alg);
        o.require(pairs.size() == 3, "three q-commuting pairs");
        for (const auto& [x, y] : pairs) {
            o.require(verify_pentagon(alg, x, y, 8).equal, "pentagon");
            o.require(verify_schuetzenberger(alg, x, y, 8).equal, "schuetzenberger");
        }
    });

    criterion(2, "cyclic 4~4 identity, three expressions, D=8, < 1 s", 1000,
              [](Outcome& o) { require_reports(o, verify_cyclic44(Algebra::make(3), 8)); });

    criterion(3, "Theorem 1 at (N,D) = (3,8), (4,6), (5,4)", 10 * 60 * 1000, [](Outcome& o) {
        for (const auto& [N, D] : {std::pair{3, 8}, {4, 6}, {5, 4}}) {
            const auto reps = verify_theorem1(N, D);
            o.require(reps.size() == 5, "five images");
            require_reports(o, reps);
        }
    });

    criterion(4, "T_4 derivation chain, all expressions equal, D=5", 0, [](Outcome& o) {
        const auto reps = verify_T4_chain(5);
        o.require(reps.size() == 11, "eleven comparisons");
        require_reports(o, reps);
    });

    criterion(5, "Proposition 1: kill (1,3) gives the pentagon; two random kills at N=4, D=5", 0, [](Outcome& o) {
        const auto [lhs, rhs] = prop_QQ_sides(3, {{1, 3}});
        const FactorSequence X{{{1, 2}, 1}}, Y{{{2, 3}, 1}}, XY{{{1, 2}, 1}, {{2, 3}, 1}};
        o.require(lhs == QExpFactors{X, XY, Y} && rhs == QExpFactors{Y, X}, "surviving factors are the pentagon");
        o.require(verify_prop_QQ(3, {{1, 3}}, 8).equal, "N=3 series");
        SuiteConfig c{"propQQ"};
        c.N = 4;
        c.degree = 5;
        const SuiteReport r = run_suite(c);
        o.require(r.checks.size() >= 2, "two kill sets");
        require_suite(o, r);
    });

    criterion(6, "W and W' trace-equal; trace_equal matches BFS up to 10 letters", 0, [](Outcome& o) {
        for (const auto& [n, N] : {std::pair{2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {3, 6}})
            o.require(trace_equal(word_W(n, N, WordVariant::lex), word_W(n, N, WordVariant::colex)),
                      "W(" + std::to_string(n) + "," + std::to_string(N) + ")");
        std::mt19937 rng(1);
        for (int N = 2; N <= 6; ++N)
            for (int n = 1; n <= N; ++n) {
                const Word w = word_W(n, N, WordVariant::lex);
                if (w.letters.size() > 10) continue;
                const auto cls = oracle::commutation_class(w);
                auto perm = w.letters;
                for (int rep = 0; rep < 300; ++rep) {
                    std::shuffle(perm.begin(), perm.end(), rng);
                    o.require(trace_equal(w, Word{n, N, perm}) == (cls.count(perm) > 0), "random permutation");
                }
                for (const auto& c : cls) o.require(trace_equal(w, Word{n, N, c}), "class member");
                const Word rev = word_W(n, N, WordVariant::lex_reversed);
                o.require(trace_equal(w, rev) == (cls.count(rev.letters) > 0), "reversal");
            }
    });

    criterion(7, "reverse_via_moves replays with binomial(N,n+1) simplex moves", 0, [](Outcome& o) {
        for (const auto& [n, N] : {std::pair{2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 5}, {3, 6}, {4, 5}})
            for (const auto s : {Schedule::left, Schedule::right}) {
                const auto t = reverse_via_moves(n, N, s);
                std::string why;
                o.require(replay(t, &why), "replay " + why);
                o.require(static_cast<long>(t.simplex_count()) == binom(N, n + 1), "simplex count");
            }
        o.require(reverse_via_moves(3, 5).simplex_count() == 5, "(3,5) uses 5 moves");
    });

    criterion(8, "Lemma 2 images for N = 2, 3, 4 at D=6", 0, [](Outcome& o) {
        for (int N = 2; N <= 4; ++N) {
            const auto reps = verify_lemma2(N, 6);
            o.require(reps.size() == 6, "six equalities");
            require_reports(o, reps);
        }
    });

    criterion(9, "Lemma 8 strong and series equality for N = 3, 4, 5 at D=5", 0, [](Outcome& o) {
        for (int N = 3; N <= 5; ++N)
            for (const auto& c : verify_lemma8(N, 5)) o.require(c.pass, c.name);
    });

    criterion(10, "center: dimensions, bases, N=5 relation, commutation, symmetries, round trips", 0,
              [](Outcome& o) {
                  const int dims[] = {1, 2, 2, 3, 3, 4};
                  for (int N = 3; N <= 8; ++N) {
                      o.require(kernel_basis(N).basis.size() == static_cast<std::size_t>(dims[N - 3]), "dimension");
                      SuiteConfig c{"center"};
                      c.N = N;
                      require_suite(o, run_suite(c));
                  }
                  o.require(kernel_basis(3).basis == std::vector<WeightVector>{{1, 1, 1}}, "N=3 basis");
                  o.require(kernel_basis(4).basis ==
                                std::vector<WeightVector>{{1, 0, 1, 0, 0, 1}, {0, 1, 0, 1, 1, 0}},
                            "N=4 basis");
                  std::mt19937 rng(5);
                  std::uniform_int_distribution<int> d(-6, 6);
                  const auto at = [](const WeightVector& a, int i, int j) { return a[vertex_index(5, Vertex{i, j})]; };
                  for (int rep = 0; rep < 50; ++rep) {
                      const auto a = reconstruct_weights(5, {d(rng), d(rng)}).alpha_tilde;
                      o.require(at(a, 2, 4) == 2 * at(a, 1, 3) - at(a, 1, 2), "alpha24 relation");
                  }
              });

    criterion(11, "tetrahedron equation for F on the radius-2 box of S_4", 10 * 60 * 1000, [](Outcome& o) {
        const SuiteReport r = check_tetrahedron(TetraBuilder::F, {}, 0, ProbeSpec{});
        require_suite(o, r);
        o.require(make_probes(4, ProbeSpec{}).size() == 15625, "5^6 probes");
    });

    criterion(12, "tetrahedron equation for R, gamma in {-1,0,1}, D=6, 200 samples; XYZ relations", 0,
              [](Outcome& o) {
                  ProbeSpec p;
                  p.force_samples = true;
                  require_suite(o, check_tetrahedron(TetraBuilder::R, {-1, 0, 1}, 6, p));
                  require_suite(o, check_XYZ_operators({-1, 0, 1}, 6, p));
              });

    criterion(13, "tau respects the T_N relations for N = 3, 4", 0, [](Outcome& o) {
        for (int N = 3; N <= 4; ++N) require_suite(o, check_tau_representation(N, ProbeSpec{}));
    });

    criterion(14, "Lemma 7 at N=3, D=4; F_N well defined and involutive; conjugations for N = 3, 4", 0,
              [](Outcome& o) {
                  ProbeSpec p;
                  p.force_samples = true;
                  require_suite(o, check_lemma7(3, 4, p));
                  for (int N = 3; N <= 4; ++N) require_suite(o, check_FN_conjugation(N, ProbeSpec{}));
              });

    criterion(15, "negative controls: single coefficient or B entry perturbed fails at a located term", 0,
              [](Outcome& o) {
                  // every coefficient of T_3 at D=5
                  const auto alg = Algebra::make(3);
                  const auto t = build_T(alg, 5);
                  const auto rt = apply_hom({MapKind::rho, 3}, t);
                  o.require(verify_identity(t, rt).equal, "unperturbed baseline");
                  for (const auto& [m, c] : t.terms()) {
                      auto bad = t;
                      bad.set_coefficient(m, c + RationalFunction::q_power(1));
                      const auto r = verify_identity(bad, rt);
                      o.require(!r.equal && r.mismatch && r.mismatch->monomial == monomial_to_string(m, alg->quiver()),
                                "coefficient perturbation not located");
                  }
                  // every B entry of T_3 and T_4, kept skew
                  for (int N = 3; N <= 4; ++N) {
                      const Quiver q(N);
                      for (std::size_t r = 0; r < q.size(); ++r)
                          for (std::size_t c = r + 1; c < q.size(); ++c)
                              for (int delta : {-1, 1}) {
                                  IncidenceMatrix b = incidence(q);
                                  b.set(r, c, b(r, c) + delta);
                                  b.set(c, r, b(c, r) - delta);
                                  bool located = false;
                                  for (const auto& rep : verify_theorem1(std::make_shared<const Algebra>(N, b), 4))
                                      located = located || (!rep.equal && rep.mismatch.has_value());
                                  o.require(located, "B perturbation not detected");
                              }
                  }
                  // operator side: the leading factor's scalar exponent moved on one side only
                  const auto xyz = xyz_operators(0);
                  MonomialOp x1 = xyz.X;
                  x1.c += 1;
                  const auto probes = make_probes(4, ProbeSpec{});
                  const Check bad = compare_operators(
                      "pentagon with one perturbed factor",
                      Operator::product({Operator::qexp(x1), Operator::qexp(xyz.X * xyz.Y), Operator::qexp(xyz.Y)}),
                      Operator::product({Operator::qexp(xyz.Y), Operator::qexp(xyz.X)}), probes, 3);
                  o.require(!bad.pass && bad.detail.contains("probe"), "operator perturbation not located");
                  o.require(compare_operators("pentagon baseline",
                                              Operator::product({Operator::qexp(xyz.X), Operator::qexp(xyz.X * xyz.Y),
                                                                 Operator::qexp(xyz.Y)}),
                                              Operator::product({Operator::qexp(xyz.Y), Operator::qexp(xyz.X)}),
                                              probes, 3)
                                .pass,
                            "unperturbed operator pentagon");
                  // center: one weight of a central vector moved
                  auto a = kernel_basis(5).basis[1];
                  a[vertex_index(5, Vertex{2, 4})] += 1;
                  o.require(!in_kernel(5, a), "center perturbation");
                  // simplex: one move dropped
                  auto tr = reverse_via_moves(3, 5);
                  tr.moves.erase(tr.moves.begin() + 3);
                  std::string why;
                  o.require(!replay(tr, &why) && !why.empty(), "trace corruption");
              });

    std::printf("%s: %d failing criteria\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
