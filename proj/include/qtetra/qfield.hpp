#pragma once

// Exact arithmetic in Q(q): Laurent polynomials over Z and rational
// functions in canonical form. No floating point anywhere.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qtetra {

using BigInt = mpz_class;

/// Laurent polynomial in q with arbitrary-precision integer coefficients.
///
/// Stored densely from the lowest to the highest exponent; both ends are
/// always nonzero, so the zero polynomial is the empty coefficient list.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c);  // NOLINT(google-explicit-constructor): integers embed naturally
    LaurentPoly(const BigInt& c);  // NOLINT(google-explicit-constructor)

    static LaurentPoly monomial(const BigInt& c, int exponent);
    static LaurentPoly q_power(int exponent) { return monomial(1, exponent); }
    static LaurentPoly from_terms(const std::map<int, BigInt>& terms);
    /// Ordinary polynomial c[0] + c[1] q + ... shifted by q^low.
    static LaurentPoly from_dense(int low, std::vector<BigInt> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    int low_exponent() const { return low_; }
    int high_exponent() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
    BigInt coefficient(int exponent) const;
    const BigInt& leading_coefficient() const { return coeffs_.back(); }
    const std::vector<BigInt>& dense() const { return coeffs_; }
    std::map<int, BigInt> terms() const;
    std::size_t term_count() const;

    LaurentPoly shifted(int k) const;
    BigInt evaluate_at_one() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
    }

    /// Terms in ascending exponent order, e.g. "1 - q - q^2 + q^3" or "-2*q^-1".
    std::string to_string() const;
    static LaurentPoly parse(std::string_view text);

private:
    void trim();

    int low_ = 0;
    std::vector<BigInt> coeffs_;
};

/// prod_{k=1..n} (1 - q^k); n = 0 gives 1.
LaurentPoly q_pochhammer(int n);

/// Element of Q(q) kept as numerator/denominator in canonical form:
/// coprime in Z[q], denominator with nonzero constant term and positive
/// leading coefficient. Equality of values is equality of representations.
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(const BigInt& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(LaurentPoly p);  // NOLINT(google-explicit-constructor)
    /// Throws std::domain_error when den is zero.
    RationalFunction(LaurentPoly num, LaurentPoly den);

    static RationalFunction q_power(int k) { return RationalFunction(LaurentPoly::q_power(k)); }

    const LaurentPoly& numerator() const { return num_; }
    const LaurentPoly& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;

    /// Throws std::domain_error for zero.
    RationalFunction inverse() const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    /// Multiply by q^k; cheaper than a general product.
    RationalFunction times_q_power(int k) const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// "(num)/(den)" with both sides in ascending exponent order.
    std::string to_string() const;
    /// Accepts "(num)/(den)", "(num)" or a bare Laurent polynomial.
    static RationalFunction parse(std::string_view text);

    /// Re-run canonicalization on the stored pair (idempotent on valid values).
    RationalFunction canonical() const { return RationalFunction(num_, den_); }

private:
    struct Reduced {};
    RationalFunction(LaurentPoly num, LaurentPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

    LaurentPoly num_;
    LaurentPoly den_;
};

enum class ArithKind { add, sub, mul, div };

/// Field operation dispatch; div by zero throws std::domain_error.
RationalFunction rf_arith(const RationalFunction& a, const RationalFunction& b, ArithKind kind);

/// Sums many rational functions over a shared denominator and reduces once.
class RationalAccumulator {
public:
    void add(const RationalFunction& x);
    bool empty() const { return num_.is_zero(); }
    RationalFunction result() const;

private:
    LaurentPoly num_;
    LaurentPoly den_{1};
};

}  // namespace qtetra
