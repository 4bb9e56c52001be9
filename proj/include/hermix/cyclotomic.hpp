#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace hermix {

// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
// Computed as (x^n - 1) divided by every Phi_d with d | n, d < n.
std::vector<long> cyclotomic_polynomial(unsigned n);

// Q(zeta_n) with zeta_n = exp(2 pi i / n), represented as Q[x] / Phi_n(x).
// Contexts are interned: one immutable instance per order, alive for the whole program.
class CyclotomicContext {
public:
    static const CyclotomicContext& of(unsigned order);

    unsigned order() const noexcept { return order_; }
    // Degree of Phi_n, i.e. Euler's phi(n).
    std::size_t degree() const noexcept { return modulus_.size() - 1; }
    const std::vector<long>& modulus() const noexcept { return modulus_; }
    // Coordinates of alpha^k, 0 <= k < order.
    const std::vector<long>& power(std::size_t k) const { return powers_.at(k); }

    CyclotomicContext(const CyclotomicContext&) = delete;
    CyclotomicContext& operator=(const CyclotomicContext&) = delete;

private:
    explicit CyclotomicContext(unsigned order);

    unsigned order_;
    std::vector<long> modulus_;
    std::vector<std::vector<long>> powers_;
};

// Exact element of Q(zeta_n) in the power basis 1, alpha, ..., alpha^(phi-1).
// Coefficients are always reduced mod Phi_n, so equality is coordinate-wise.
class CyclotomicNumber {
public:
    explicit CyclotomicNumber(const CyclotomicContext& ctx);
    CyclotomicNumber(const CyclotomicContext& ctx, const mpq_class& value);
    CyclotomicNumber(const CyclotomicContext& ctx, long value)
        : CyclotomicNumber(ctx, mpq_class(value)) {}

    // Reduces a polynomial of any length modulo Phi_n.
    static CyclotomicNumber from_polynomial(const CyclotomicContext& ctx, std::vector<mpq_class> coeffs);

    const CyclotomicContext& context() const noexcept { return *ctx_; }
    const std::vector<mpq_class>& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const;
    // True when the value lies in Q.
    bool is_rational() const;

    CyclotomicNumber& operator+=(const CyclotomicNumber& rhs);
    CyclotomicNumber& operator-=(const CyclotomicNumber& rhs);
    CyclotomicNumber& operator*=(const CyclotomicNumber& rhs);
    CyclotomicNumber& operator/=(const CyclotomicNumber& rhs);
    CyclotomicNumber& operator*=(const mpq_class& rhs);

    friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
    friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
    friend CyclotomicNumber operator/(CyclotomicNumber a, const CyclotomicNumber& b) { return a /= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const mpq_class& b) { return a *= b; }
    CyclotomicNumber operator-() const;

    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

private:
    void require_same_context(const CyclotomicNumber& other) const;

    const CyclotomicContext* ctx_;
    std::vector<mpq_class> coeffs_;
};

// alpha^k, k taken mod n.
CyclotomicNumber root_power(const CyclotomicContext& ctx, long k);

// Substitutes alpha -> alpha^(n-1).
CyclotomicNumber conj(const CyclotomicNumber& x);
// (x + conj(x)) / 2
CyclotomicNumber re(const CyclotomicNumber& x);
// Multiplicative inverse; throws Error{DivisionByZero} on zero.
CyclotomicNumber inverse(const CyclotomicNumber& x);

std::complex<double> to_complex(const CyclotomicNumber& x);

struct EntryClass {
    enum class Kind { Zero, SignedPower, Other };

    Kind kind = Kind::Other;
    int sign = 0;           // +1 or -1 for SignedPower
    unsigned exponent = 0;  // k mod n for SignedPower

    bool operator==(const EntryClass&) const = default;
};

// Zero, +-alpha^k, or anything else. When n is even, -alpha^k = alpha^(k+n/2) and
// the positive form is reported.
EntryClass classify_entry(const CyclotomicNumber& x);

// Canonical power-basis rendering over a common denominator, e.g. "(1 - 2a + a^2)/2".
std::string to_string(const CyclotomicNumber& x, std::string_view symbol = "a");

// Like to_string, but values equal to +-alpha^k print as the signed power ("-a^2").
std::string render_value(const CyclotomicNumber& x, std::string_view symbol = "a");

// "re+imi" with fixed precision; negative zero is printed as zero.
std::string render_complex(std::complex<double> z, int precision = 6);

}  // namespace hermix
