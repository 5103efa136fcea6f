#include "poly_ops.hpp"
#include "qtetra/qfield.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace qtetra {

LaurentPoly::LaurentPoly(long c) : LaurentPoly(BigInt(c)) {}

LaurentPoly::LaurentPoly(const BigInt& c) {
    if (c != 0) coeffs_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(const BigInt& c, int exponent) {
    LaurentPoly p(c);
    if (!p.is_zero()) p.low_ = exponent;
    return p;
}

LaurentPoly LaurentPoly::from_terms(const std::map<int, BigInt>& terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p += monomial(c, e);
    return p;
}

LaurentPoly LaurentPoly::from_dense(int low, std::vector<BigInt> coeffs) {
    LaurentPoly p;
    p.low_ = low;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

void LaurentPoly::trim() {
    detail::trim(coeffs_);
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        low_ += static_cast<int>(lead);
    }
    if (coeffs_.empty()) low_ = 0;
}

BigInt LaurentPoly::coefficient(int exponent) const {
    const int k = exponent - low_;
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

std::map<int, BigInt> LaurentPoly::terms() const {
    std::map<int, BigInt> out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) out.emplace(low_ + static_cast<int>(k), coeffs_[k]);
    return out;
}

std::size_t LaurentPoly::term_count() const {
    std::size_t n = 0;
    for (const auto& c : coeffs_) n += c != 0 ? 1 : 0;
    return n;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly p = *this;
    if (!p.is_zero()) p.low_ += k;
    return p;
}

BigInt LaurentPoly::evaluate_at_one() const {
    BigInt s = 0;
    for (const auto& c : coeffs_) s += c;
    return s;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    detail::negate(p.coeffs_);
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    const int low = std::min(low_, o.low_);
    const int high = std::max(high_exponent(), o.high_exponent());
    std::vector<BigInt> r(static_cast<std::size_t>(high - low + 1));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) r[static_cast<std::size_t>(low_ - low) + k] = coeffs_[k];
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) r[static_cast<std::size_t>(o.low_ - low) + k] += o.coeffs_[k];
    low_ = low;
    coeffs_ = std::move(r);
    trim();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return LaurentPoly::from_dense(a.low_ + b.low_, detail::mul(a.coeffs_, b.coeffs_));
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const BigInt& c = coeffs_[k];
        if (c == 0) continue;
        const int e = low_ + static_cast<int>(k);
        const BigInt mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << '*';
        os << 'q';
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto digits = [&](std::string& out) {
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) out += text[i++];
    };
    auto fail = [&](const char* what) {
        throw std::invalid_argument(std::string("cannot parse Laurent polynomial '") + std::string(text) + "': " + what);
    };

    LaurentPoly result;
    bool first = true;
    skip();
    if (i == text.size()) fail("empty input");
    while (true) {
        skip();
        if (i == text.size()) break;
        bool negative = false;
        if (text[i] == '+' || text[i] == '-') {
            negative = text[i] == '-';
            ++i;
            skip();
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        std::string num;
        digits(num);
        BigInt coef = num.empty() ? BigInt(1) : BigInt(num);
        int exponent = 0;
        skip();
        bool have_q = false;
        if (i < text.size() && text[i] == '*') {
            if (num.empty()) fail("dangling '*'");
            ++i;
            skip();
            if (i == text.size() || text[i] != 'q') fail("expected 'q' after '*'");
        }
        if (i < text.size() && text[i] == 'q') {
            have_q = true;
            ++i;
            exponent = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                bool eneg = false;
                if (i < text.size() && text[i] == '-') {
                    eneg = true;
                    ++i;
                }
                std::string ed;
                digits(ed);
                if (ed.empty()) fail("missing exponent");
                exponent = std::stoi(ed) * (eneg ? -1 : 1);
            }
        }
        if (num.empty() && !have_q) fail("expected a term");
        if (negative) coef = -coef;
        result += monomial(coef, exponent);
        first = false;
    }
    return result;
}

LaurentPoly q_pochhammer(int n) {
    if (n < 0) throw std::invalid_argument("q_pochhammer: n must be nonnegative");
    LaurentPoly r(1);
    for (int k = 1; k <= n; ++k) r = r * (LaurentPoly(1) - LaurentPoly::q_power(k));
    return r;
}

}  // namespace qtetra
