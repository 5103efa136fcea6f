#include "poly_ops.hpp"

#include <stdexcept>

namespace qtetra::detail {

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    trim(r);
    return r;
}

Poly add(const Poly& a, const Poly& b) {
    Poly r = a.size() >= b.size() ? a : b;
    const Poly& s = a.size() >= b.size() ? b : a;
    for (std::size_t i = 0; i < s.size(); ++i) r[i] += s[i];
    trim(r);
    return r;
}

void negate(Poly& p) {
    for (auto& c : p) c = -c;
}

BigInt content(const Poly& p) {
    BigInt g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void divide_scalar(Poly& p, const BigInt& c) {
    if (c == 1) return;
    for (auto& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
}

bool is_unit_one(const Poly& p) { return p.size() == 1 && p[0] == 1; }

Poly div_exact(const Poly& a, const Poly& b) {
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    if (a.empty()) return {};
    if (a.size() < b.size()) throw std::logic_error("inexact polynomial division");
    Poly rem = a;
    Poly quot(a.size() - b.size() + 1);
    const BigInt& lb = b.back();
    for (std::size_t k = quot.size(); k-- > 0;) {
        BigInt& top = rem[k + b.size() - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) throw std::logic_error("inexact polynomial division");
        BigInt qk;
        mpz_divexact(qk.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        for (std::size_t j = 0; j < b.size(); ++j) mpz_submul(rem[k + j].get_mpz_t(), qk.get_mpz_t(), b[j].get_mpz_t());
        quot[k] = std::move(qk);
    }
    trim(rem);
    if (!rem.empty()) throw std::logic_error("inexact polynomial division");
    trim(quot);
    return quot;
}

namespace {

// Pseudo-remainder of a by b (deg a >= deg b), made primitive.
Poly primitive_prem(Poly a, const Poly& b) {
    const BigInt& lb = b.back();
    const std::size_t db = b.size() - 1;
    while (!a.empty() && a.size() - 1 >= db) {
        const std::size_t shift = a.size() - 1 - db;
        const BigInt la = a.back();
        for (auto& c : a) c *= lb;
        for (std::size_t j = 0; j <= db; ++j) mpz_submul(a[shift + j].get_mpz_t(), la.get_mpz_t(), b[j].get_mpz_t());
        trim(a);
        if (!a.empty()) divide_scalar(a, content(a));
    }
    return a;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
    BigInt ca = content(a);
    BigInt cb = content(b);
    BigInt c;
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    if (a.size() == 1 || b.size() == 1) return Poly{c};

    Poly x = a;
    Poly y = b;
    divide_scalar(x, ca);
    divide_scalar(y, cb);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        if (y.size() == 1) return Poly{c};
        Poly r = primitive_prem(std::move(x), y);
        x = std::move(y);
        y = std::move(r);
    }
    if (x.back() < 0) negate(x);
    for (auto& v : x) v *= c;
    return x;
}

}  // namespace qtetra::detail
