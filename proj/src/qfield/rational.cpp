#include "poly_ops.hpp"
#include "qtetra/qfield.hpp"

#include <cctype>
#include <stdexcept>

namespace qtetra {

using detail::Poly;

RationalFunction::RationalFunction(LaurentPoly p) : num_(std::move(p)), den_(1) {}

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = LaurentPoly();
        den_ = LaurentPoly(1);
        return;
    }
    // Powers of q are units in the Laurent ring: fold them into the numerator.
    const int shift = num.low_exponent() - den.low_exponent();
    Poly n = num.dense();
    Poly d = den.dense();
    Poly g = detail::gcd(n, d);
    if (!detail::is_unit_one(g)) {
        n = detail::div_exact(n, g);
        d = detail::div_exact(d, g);
    }
    if (d.back() < 0) {
        detail::negate(n);
        detail::negate(d);
    }
    num_ = LaurentPoly::from_dense(shift, std::move(n));
    den_ = LaurentPoly::from_dense(0, std::move(d));
}

bool RationalFunction::is_one() const { return num_ == LaurentPoly(1) && den_ == LaurentPoly(1); }

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero rational function");
    Poly n = den_.dense();
    Poly d = num_.dense();
    if (d.back() < 0) {
        detail::negate(n);
        detail::negate(d);
    }
    return {LaurentPoly::from_dense(-num_.low_exponent(), std::move(n)), LaurentPoly::from_dense(0, std::move(d)),
            Reduced{}};
}

RationalFunction RationalFunction::operator-() const { return {-num_, den_, Reduced{}}; }

RationalFunction RationalFunction::times_q_power(int k) const { return {num_.shifted(k), den_, Reduced{}}; }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    const Poly g = detail::gcd(a.den_.dense(), b.den_.dense());
    if (detail::is_unit_one(g)) {
        // Coprime denominators: a.num*b.den + b.num*a.den is coprime to a.den*b.den.
        LaurentPoly num = a.num_ * b.den_ + b.num_ * a.den_;
        if (num.is_zero()) return {};
        return {std::move(num), a.den_ * b.den_, RationalFunction::Reduced{}};
    }
    const LaurentPoly bq = LaurentPoly::from_dense(0, detail::div_exact(b.den_.dense(), g));
    const LaurentPoly aq = LaurentPoly::from_dense(0, detail::div_exact(a.den_.dense(), g));
    return {a.num_ * bq + b.num_ * aq, a.den_ * bq};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    // Cross-cancel so the product is already reduced.
    Poly an = a.num_.dense();
    Poly ad = a.den_.dense();
    Poly bn = b.num_.dense();
    Poly bd = b.den_.dense();
    if (!detail::is_unit_one(bd)) {
        Poly g = detail::gcd(an, bd);
        if (!detail::is_unit_one(g)) {
            an = detail::div_exact(an, g);
            bd = detail::div_exact(bd, g);
        }
    }
    if (!detail::is_unit_one(ad)) {
        Poly g = detail::gcd(bn, ad);
        if (!detail::is_unit_one(g)) {
            bn = detail::div_exact(bn, g);
            ad = detail::div_exact(ad, g);
        }
    }
    Poly n = detail::mul(an, bn);
    Poly d = detail::mul(ad, bd);
    if (d.back() < 0) {
        detail::negate(n);
        detail::negate(d);
    }
    return {LaurentPoly::from_dense(a.num_.low_exponent() + b.num_.low_exponent(), std::move(n)),
            LaurentPoly::from_dense(0, std::move(d)), RationalFunction::Reduced{}};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

std::string RationalFunction::to_string() const { return "(" + num_.to_string() + ")/(" + den_.to_string() + ")"; }

RationalFunction RationalFunction::parse(std::string_view text) {
    auto strip = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    std::string_view s = strip(text);
    if (s.empty() || s.front() != '(') return RationalFunction(LaurentPoly::parse(s));
    const auto close = s.find(')');
    if (close == std::string_view::npos) throw std::invalid_argument("unbalanced parenthesis in rational function");
    LaurentPoly num = LaurentPoly::parse(s.substr(1, close - 1));
    std::string_view rest = strip(s.substr(close + 1));
    if (rest.empty()) return RationalFunction(std::move(num));
    if (rest.front() != '/') throw std::invalid_argument("expected '/' in rational function");
    rest = strip(rest.substr(1));
    if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')')
        throw std::invalid_argument("denominator must be parenthesized");
    return {std::move(num), LaurentPoly::parse(rest.substr(1, rest.size() - 2))};
}

RationalFunction rf_arith(const RationalFunction& a, const RationalFunction& b, ArithKind kind) {
    switch (kind) {
        case ArithKind::add: return a + b;
        case ArithKind::sub: return a - b;
        case ArithKind::mul: return a * b;
        case ArithKind::div:
            if (b.is_zero()) throw std::domain_error("division by zero rational function");
            return a / b;
    }
    throw std::invalid_argument("unknown arithmetic kind");
}

void RationalAccumulator::add(const RationalFunction& x) {
    if (x.is_zero()) return;
    if (num_.is_zero()) {
        num_ = x.numerator();
        den_ = x.denominator();
        return;
    }
    if (den_ == x.denominator()) {
        num_ += x.numerator();
        return;
    }
    const Poly g = detail::gcd(den_.dense(), x.denominator().dense());
    const LaurentPoly xq = LaurentPoly::from_dense(0, detail::div_exact(x.denominator().dense(), g));
    const LaurentPoly sq = LaurentPoly::from_dense(0, detail::div_exact(den_.dense(), g));
    num_ = num_ * xq + x.numerator() * sq;
    den_ = den_ * xq;
}

RationalFunction RationalAccumulator::result() const {
    if (num_.is_zero()) return {};
    return {num_, den_};
}

}  // namespace qtetra
