#include "qtetra/tensorrep.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <stdexcept>

namespace qtetra {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) { return std::chrono::duration<double, std::milli>(Clock::now() - t0).count(); }

std::string exps_to_string(int N, const Exponents& e) {
    std::string s;
    const auto verts = lex_vertices(N);
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (!e[k]) continue;
        if (!s.empty()) s += ' ';
        s += "x" + std::to_string(verts[k].i) + std::to_string(verts[k].j) + "^" + std::to_string(e[k]);
    }
    return s.empty() ? "1" : s;
}

Check probe_check(const std::string& name, int N, const std::vector<Exponents>& probes,
                  const std::function<std::pair<TensorVector, TensorVector>(const Exponents&)>& sides) {
    const auto t0 = Clock::now();
    bool truncated = false;
    for (std::size_t p = 0; p < probes.size(); ++p) {
        const auto [l, r] = sides(probes[p]);
        truncated = truncated || l.truncated || r.truncated;
        if (l == r) continue;
        // locate the first differing output monomial
        auto li = l.terms.begin(), ri = r.terms.begin();
        while (li != l.terms.end() && ri != r.terms.end() && li->first == ri->first && li->second == ri->second) {
            ++li;
            ++ri;
        }
        Exponents where;
        std::string lc = "0", rc = "0";
        if (li == l.terms.end() || (ri != r.terms.end() && ri->first < li->first)) {
            where = ri->first;
            rc = ri->second.to_string();
            const auto it = l.terms.find(where);
            if (it != l.terms.end()) lc = it->second.to_string();
        } else {
            where = li->first;
            lc = li->second.to_string();
            const auto it = r.terms.find(where);
            if (it != r.terms.end()) rc = it->second.to_string();
        }
        return {name,
                false,
                {{"probes", p + 1},
                 {"probe", exps_to_string(N, probes[p])},
                 {"monomial", exps_to_string(N, where)},
                 {"lhs", lc},
                 {"rhs", rc},
                 {"millis", ms_since(t0)}}};
    }
    return {name, true, {{"probes", probes.size()}, {"truncated", truncated}, {"millis", ms_since(t0)}}};
}

Check mono_relation(const std::string& name, const MonomialOp& lhs, const MonomialOp& rhs,
                    const std::vector<Exponents>& probes) {
    Check c = compare_operators(name, Operator::mono(lhs), Operator::mono(rhs), probes);
    c.detail["symbolic"] = lhs == rhs;
    c.pass = c.pass && lhs == rhs;
    return c;
}

}  // namespace

Operator build_R(int a, int b, int c, int gamma, int N) {
    const MonomialOp w = MonomialOp::q_power(N, 1 + gamma) * MonomialOp::x(N, a, b) * MonomialOp::x(N, b, c, -1) *
                         MonomialOp::y(N, a, b, gamma) * MonomialOp::y(N, a, c, -gamma) *
                         MonomialOp::y(N, b, c, -1 - gamma);
    return Operator::F(a, b, c, N) * Operator::qexp(w);
}

Operator build_Rhat(int a, int b, int c, int N) {
    const MonomialOp w = MonomialOp::q_power(N, 1) * MonomialOp::x(N, a, b) * MonomialOp::x(N, b, c, -1) *
                         MonomialOp::y(N, a, b) * MonomialOp::y(N, a, c, -1);
    return Operator::qexp(w);
}

MonomialOp tau_generator(Vertex z, int N) {
    if (!valid_vertex(N, z)) throw std::invalid_argument("tau: Z" + z.to_string() + " is not a generator of T_N");
    const int M = N + 1;
    const int a = z.i, b = z.j;
    return MonomialOp::q_power(M, 1) * MonomialOp::x(M, a, b) * MonomialOp::x(M, a + 1, b + 1, -1) *
           MonomialOp::y(M, a + 1, b) * MonomialOp::y(M, a + 1, b + 1, -1);
}

MonomialOp tau_word(const FactorSequence& word, int N) {
    MonomialOp m = MonomialOp::identity(N + 1);
    for (const Factor& f : word)
        for (int k = 0; k < f.exponent; ++k) m = m * tau_generator(f.vertex, N);
    return m;
}

Operator tau_qexp_product(const QExpFactors& factors, int N) {
    std::vector<Operator> ops;
    for (const FactorSequence& w : factors) ops.push_back(Operator::qexp(tau_word(w, N)));
    if (ops.empty()) return Operator::identity(N + 1);
    return Operator::product(ops);
}

MonomialOp phi_argument(PhiKind kind, int a, int b, int c, int N) {
    if (!(1 <= a && a < b && b < c && c <= N)) throw std::invalid_argument("phi: need a < b < c <= N");
    MonomialOp m = MonomialOp::q_power(N, 1);
    switch (kind) {
        case PhiKind::phi:
            m = m * MonomialOp::x(N, a, b) * MonomialOp::x(N, a + c - b, c, -1);
            for (int k = 1; k <= c - b; ++k)
                m = m * MonomialOp::y(N, a + k, b + k - 1) * MonomialOp::y(N, a + k, b + k, -1);
            break;
        case PhiKind::phi_prime:
            for (int k = 1; k <= c - b; ++k)
                m = m * MonomialOp::x(N, b - a, b + k - 1) * MonomialOp::x(N, b - a + 1, b + k, -1);
            m = m * MonomialOp::y(N, b - a + 1, b) * MonomialOp::y(N, b - a + 1, c, -1);
            break;
        case PhiKind::phi_dblprime:
            m = m * MonomialOp::x(N, a, b) * MonomialOp::x(N, a + c - b, c, -1);
            for (int k = 0; k <= c - b - 1; ++k)
                m = m * MonomialOp::y(N, a + k, b + k) * MonomialOp::y(N, a + k, b + k + 1, -1);
            break;
    }
    return m;
}

Operator build_phi_hom(PhiKind kind, int a, int b, int c, int N) {
    return Operator::qexp(phi_argument(kind, a, b, c, N));
}

Operator theta_word(const Word& w) {
    std::vector<Operator> ops;
    for (const GenLabel& g : w.letters) ops.push_back(Operator::F(g[0], g[1], g[2], w.N));
    return Operator::product(ops);
}

Operator phi_gamma_word(const Word& w, int gamma) {
    std::vector<Operator> ops;
    for (const GenLabel& g : w.letters) ops.push_back(build_R(g[0], g[1], g[2], gamma, w.N));
    return Operator::product(ops);
}

Operator phi_hom_word(PhiKind kind, const Word& w) {
    std::vector<Operator> ops;
    for (const GenLabel& g : w.letters) ops.push_back(build_phi_hom(kind, g[0], g[1], g[2], w.N));
    return Operator::product(ops);
}

Operator build_FN(int N) { return theta_word(word_W(3, N, WordVariant::colex)); }

XYZ xyz_operators(int gamma) {
    const int N = 4;
    auto x = [](int i, int j, int p) { return MonomialOp::x(N, i, j, p); };
    auto y = [](int i, int j, int p) { return MonomialOp::y(N, i, j, p); };
    const MonomialOp q = MonomialOp::q_power(N, 1 + gamma);
    return {q * x(1, 2, 1) * x(2, 3, -1) * y(1, 2, gamma) * y(1, 3, -gamma) * y(2, 3, -1 - gamma),
            q * x(2, 3, 1) * x(3, 4, -1) * y(2, 3, gamma) * y(2, 4, -gamma) * y(3, 4, -1 - gamma),
            q * x(1, 3, 1) * x(2, 4, -1) * y(1, 3, gamma) * y(1, 4, -gamma) * y(2, 3, 1 + gamma) *
                y(2, 4, -1 - gamma)};
}

std::vector<Exponents> make_probes(int N, const ProbeSpec& spec) {
    const std::size_t slots = vertex_count(N);
    const int r = spec.box_radius;
    std::vector<Exponents> out;
    if (!spec.force_samples && static_cast<int>(slots) <= spec.box_slot_limit) {
        Exponents e(slots, -r);
        while (true) {
            out.push_back(e);
            std::size_t k = 0;
            while (k < slots && e[k] == r) e[k++] = -r;
            if (k == slots) break;
            ++e[k];
        }
        return out;
    }
    out.emplace_back(slots, 0);
    for (std::size_t k = 0; k < slots; ++k)
        for (int sign : {1, -1}) {
            Exponents e(slots, 0);
            e[k] = sign;
            out.push_back(std::move(e));
        }
    std::mt19937_64 rng(spec.seed);
    std::uniform_int_distribution<int> dist(-r, r);
    for (int s = 0; s < spec.samples; ++s) {
        Exponents e(slots);
        for (auto& x : e) x = dist(rng);
        out.push_back(std::move(e));
    }
    return out;
}

nlohmann::json probe_summary(int N, const ProbeSpec& spec) {
    const bool box = !spec.force_samples && static_cast<int>(vertex_count(N)) <= spec.box_slot_limit;
    nlohmann::json j{{"slots", vertex_count(N)}, {"box_radius", spec.box_radius}, {"mode", box ? "box" : "sample"}};
    if (!box) {
        j["samples"] = spec.samples;
        j["seed"] = spec.seed;
    }
    j["count"] = make_probes(N, spec).size();
    return j;
}

Check compare_operators(const std::string& name, const Operator& lhs, const Operator& rhs,
                        const std::vector<Exponents>& probes, int D) {
    if (lhs.N() != rhs.N()) throw std::invalid_argument("compare_operators: different spaces");
    return probe_check(name, lhs.N(), probes, [&](const Exponents& e) {
        return std::make_pair(act(lhs, e, D), act(rhs, e, D));
    });
}

SuiteReport check_tetrahedron(TetraBuilder builder, const std::vector<int>& gammas, int D, const ProbeSpec& spec) {
    const auto t0 = Clock::now();
    SuiteReport rep;
    rep.suite = builder == TetraBuilder::F ? "tetraF" : "tetraR";
    const int N = 4;
    const std::vector<Exponents> probes = make_probes(N, spec);
    rep.params = {{"probes", probe_summary(N, spec)}};
    const Word lhs = word_W(3, 4, WordVariant::lex);
    const Word rhs = word_W(3, 4, WordVariant::lex_reversed);
    if (builder == TetraBuilder::F) {
        rep.add(compare_operators("F123 F124 F134 F234 = F234 F134 F124 F123", theta_word(lhs), theta_word(rhs), probes));
        const Operator F = Operator::F(1, 2, 3, 3);
        rep.add(compare_operators("F^2 = 1", F * F, Operator::identity(3), make_probes(3, spec)));
    } else {
        rep.params["D"] = D;
        rep.params["gamma"] = gammas;
        for (int g : gammas)
            rep.add(compare_operators("R123 R124 R134 R234 = R234 R134 R124 R123, gamma=" + std::to_string(g),
                                      phi_gamma_word(lhs, g), phi_gamma_word(rhs, g), probes, D));
    }
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

SuiteReport check_XYZ_operators(const std::vector<int>& gammas, int D, const ProbeSpec& spec) {
    const auto t0 = Clock::now();
    SuiteReport rep;
    rep.suite = "xyz44";
    const int N = 4;
    const std::vector<Exponents> probes = make_probes(N, spec);
    rep.params = {{"D", D}, {"gamma", gammas}, {"probes", probe_summary(N, spec)}};
    for (int g : gammas) {
        const auto [X, Y, Z] = xyz_operators(g);
        const MonomialOp q = MonomialOp::q_power(N, 1);
        const std::string tag = ", gamma=" + std::to_string(g);
        rep.add(mono_relation("YX = qXY" + tag, Y * X, q * X * Y, probes));
        rep.add(mono_relation("XZ = qZX" + tag, X * Z, q * Z * X, probes));
        rep.add(mono_relation("ZY = qYZ" + tag, Z * Y, q * Y * Z, probes));
        const MonomialOp far = MonomialOp::y(N, 1, 4);
        rep.add(mono_relation("X y14 = y14 X" + tag, X * far, far * X, probes));
        const Operator lhs = Operator::product(
            {Operator::qexp(X), Operator::qexp(X * Y), Operator::qexp(Z), Operator::qexp(Y)});
        const Operator rhs = Operator::product(
            {Operator::qexp(Z), Operator::qexp(Z * X), Operator::qexp(Y), Operator::qexp(X)});
        rep.add(compare_operators("<X><XY><Z><Y> = <Z><ZX><Y><X>" + tag, lhs, rhs, probes, D));
    }
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

SuiteReport check_tau_representation(int N, const ProbeSpec& spec) {
    const auto t0 = Clock::now();
    SuiteReport rep;
    rep.suite = "tauRep";
    const std::vector<Exponents> probes = make_probes(N + 1, spec);
    rep.params = {{"N", N}, {"probes", probe_summary(N + 1, spec)}};
    const Quiver Q(N);
    const IncidenceMatrix B = incidence(Q);
    const auto& verts = Q.vertices();
    for (std::size_t u = 0; u < verts.size(); ++u)
        for (std::size_t v = u + 1; v < verts.size(); ++v) {
            const MonomialOp zu = tau_generator(verts[u], N), zv = tau_generator(verts[v], N);
            const MonomialOp q = MonomialOp::q_power(N + 1, B(u, v));
            rep.add(mono_relation("tau(Z" + verts[u].to_string() + ") tau(Z" + verts[v].to_string() + ") = q^" +
                                      std::to_string(B(u, v)) + " tau(Z" + verts[v].to_string() + ") tau(Z" +
                                      verts[u].to_string() + ")",
                                  zu * zv, q * zv * zu, probes));
        }
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

SuiteReport check_lemma7(int N, int D, const ProbeSpec& spec) {
    const auto t0 = Clock::now();
    SuiteReport rep;
    rep.suite = "lemma7";
    const int M = N + 1;
    const std::vector<Exponents> probes = make_probes(M, spec);
    rep.params = {{"N", N}, {"D", D}, {"probes", probe_summary(M, spec)}};

    const Word Wp = word_W(3, M, WordVariant::colex);
    const Word Wpr = word_W(3, M, WordVariant::colex_reversed);
    const Operator FM = build_FN(M);
    const QExpFactors T = T_factors(N);
    const QExpFactors muT = map_factors({MapKind::mu1, N}, T);

    rep.add(compare_operators("phi0(W'(3,N+1)) = theta(W'(3,N+1)) tau(T_N)", phi_gamma_word(Wp, 0),
                              theta_word(Wp) * tau_qexp_product(T, N), probes, D));
    rep.add(compare_operators("phi0(rev W'(3,N+1)) = theta(rev W'(3,N+1)) tau(mu1(T_N))", phi_gamma_word(Wpr, 0),
                              theta_word(Wpr) * tau_qexp_product(muT, N), probes, D));
    rep.add(compare_operators("theta(W'(3,N+1)) = theta(rev W'(3,N+1))", theta_word(Wp), theta_word(Wpr), probes));
    rep.add(compare_operators("F_{N+1}^2 = 1", FM * FM, Operator::identity(M), probes));

    for (const Lambda& l : tetrahedron_points(N)) {
        const std::string tag = std::to_string(l.a) + std::to_string(l.b) + std::to_string(l.c);
        rep.add(compare_operators("tau(<" + tag + ">) = phi(R" + tag + ")",
                                  tau_qexp_product({lambda_word(l)}, N),
                                  build_phi_hom(PhiKind::phi, l.a, l.b, l.c, M), probes, D));
        rep.add(compare_operators("tau(mu1(<" + tag + ">)) = phi'(R" + tag + ")",
                                  tau_qexp_product(map_factors({MapKind::mu1, N}, {lambda_word(l)}), N),
                                  build_phi_hom(PhiKind::phi_prime, l.a, l.b, l.c, M), probes, D));
    }
    rep.add(compare_operators("phi0(W') = F phi(W')", phi_gamma_word(Wp, 0), FM * phi_hom_word(PhiKind::phi, Wp),
                              probes, D));
    rep.add(compare_operators("phi0(rev W') = F phi'(rev W')", phi_gamma_word(Wpr, 0),
                              FM * phi_hom_word(PhiKind::phi_prime, Wpr), probes, D));
    rep.add(compare_operators("phi0(rev W') = phi''(rev W') F", phi_gamma_word(Wpr, 0),
                              phi_hom_word(PhiKind::phi_dblprime, Wpr) * FM, probes, D));
    std::vector<Operator> ops;
    for (const GenLabel& g : Wp.letters)
        ops.push_back(build_Rhat(g[0], g[1], g[2], M) * Operator::F(g[0], g[1], g[2], M));
    rep.add(compare_operators("phi0(W') = prod Rhat F", phi_gamma_word(Wp, 0), Operator::product(ops), probes, D));
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

SuiteReport check_FN_conjugation(int N, const ProbeSpec& spec) {
    const auto t0 = Clock::now();
    SuiteReport rep;
    rep.suite = "fnconj";
    const std::vector<Exponents> probes = make_probes(N, spec);
    rep.params = {{"N", N}, {"probes", probe_summary(N, spec)}};
    const Operator FN = build_FN(N);
    auto X = [N](int i, int j, int p) { return MonomialOp::x(N, i, j, p); };
    auto Y = [N](int i, int j, int p) { return MonomialOp::y(N, i, j, p); };
    rep.add(compare_operators("F_N^2 = 1", FN * FN, Operator::identity(N), probes));
    for (int a = 1; a <= N; ++a)
        for (int b = a + 1; b <= N; ++b) {
            const std::string ab = std::to_string(a) + std::to_string(b);
            MonomialOp fx = X(b - a, b, 1);
            for (int k = 1; k <= N - b; ++k) fx = fx * X(b - a, b + k, 1) * X(b - a + 1, b + k, -1);
            rep.add(compare_operators("F_N x" + ab + " F_N", FN * Operator::mono(X(a, b, 1)) * FN, Operator::mono(fx),
                                      probes));
            MonomialOp fy = MonomialOp::identity(N);
            for (int k = 1; k <= b - a; ++k) fy = fy * Y(k, a + k, 1) * Y(k, a + k - 1, -1);
            rep.add(compare_operators("F_N y" + ab + " F_N", FN * Operator::mono(Y(a, b, 1)) * FN, Operator::mono(fy),
                                      probes));
            if (b + 1 > N) continue;
            rep.add(compare_operators("x" + ab + "/x_{a+1,b+1} F_N intertwines",
                                      Operator::mono(X(a, b, 1) * X(a + 1, b + 1, -1)) * FN,
                                      FN * Operator::mono(X(b - a, b, 1) * X(b - a + 1, b + 1, -1)), probes));
            rep.add(compare_operators("y" + ab + "/y_{a,b+1} F_N intertwines",
                                      Operator::mono(Y(a, b, 1) * Y(a, b + 1, -1)) * FN,
                                      FN * Operator::mono(Y(b - a + 1, b, 1) * Y(b - a + 1, b + 1, -1)), probes));
        }
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

}  // namespace qtetra
