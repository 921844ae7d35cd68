#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace hecke {

using BigInt = boost::multiprecision::cpp_int;

/// Sparse Laurent polynomial in v with arbitrary-precision integer coefficients.
/// Zero coefficients are never stored.
class LaurentPoly {
public:
    using Terms = std::map<int, BigInt>;

    LaurentPoly() = default;
    LaurentPoly(long long c);  // NOLINT: integers promote to constants
    static LaurentPoly monomial(const BigInt& c, int exponent);
    static LaurentPoly v_pow(int exponent) { return monomial(1, exponent); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    BigInt coeff(int exponent) const;
    void add_term(int exponent, const BigInt& c);

    int min_degree() const;  // requires !is_zero()
    int max_degree() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly operator-() const;

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

    /// Multiply by v^k.
    LaurentPoly shifted(int k) const;

    /// True iff every exponent is >= 1.
    bool in_v_zv() const;
    bool is_bar_invariant() const;

private:
    Terms terms_;
};

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_bar(const LaurentPoly& a);
BigInt lp_eval_one(const LaurentPoly& a);

/// Exact quotient a / b; throws NonExactDivision if b does not divide a in Z[v, v^-1].
LaurentPoly lp_exact_div(const LaurentPoly& a, const LaurentPoly& b);

/// Balanced quantum integer [m] = v^{m-1} + v^{m-3} + ... + v^{1-m}; [-m] = -[m].
LaurentPoly quantum_int(int m);
LaurentPoly quantum_factorial(int m);

std::string to_string(const LaurentPoly& p);
LaurentPoly parse_laurent(std::string_view text);

/// Dense polynomial in x with integer coefficients, lowest degree first.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);
    static IntPoly x_pow_minus_one(int k);  // x^k - 1

    const std::vector<BigInt>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

    BigInt eval(const BigInt& x) const;

private:
    void trim();
    std::vector<BigInt> c_;
};

/// Exact quotient a / b; throws NonExactDivision on a non-zero remainder.
IntPoly gauss_quotient(const IntPoly& a, const IntPoly& b);

std::string to_string(const IntPoly& p);

}  // namespace hecke
