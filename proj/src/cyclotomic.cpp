#include "hermix/cyclotomic.hpp"

#include "hermix/error.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

namespace hermix {

namespace {

// Exact division by a monic integer polynomial; both ascending.
std::vector<long> divide_monic(std::vector<long> num, const std::vector<long>& den) {
    const std::size_t dd = den.size() - 1;
    if (num.size() <= dd) return {0};
    std::vector<long> quot(num.size() - dd, 0);
    for (std::size_t k = num.size() - 1; k + 1 > dd; --k) {
        const long c = num[k];
        quot[k - dd] = c;
        if (c != 0) {
            for (std::size_t i = 0; i <= dd; ++i) num[k - dd + i] -= c * den[i];
        }
        if (k == dd) break;
    }
    return quot;
}

void reduce_in_place(std::vector<mpq_class>& p, const std::vector<long>& modulus) {
    const std::size_t phi = modulus.size() - 1;
    for (std::size_t k = p.size(); k-- > phi;) {
        if (sgn(p[k]) == 0) continue;
        const mpq_class c = p[k];
        for (std::size_t i = 0; i <= phi; ++i) {
            if (modulus[i] != 0) p[k - phi + i] -= c * modulus[i];
        }
    }
    p.resize(phi);
}

bool equals_integer_vector(const std::vector<mpq_class>& a, const std::vector<long>& b, int sign) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != sign * b[i]) return false;
    }
    return true;
}

}  // namespace

std::vector<long> cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "cyclotomic order must be >= 1");
    std::vector<long> poly(n + 1, 0);
    poly[0] = -1;
    poly[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d == 0) poly = divide_monic(std::move(poly), cyclotomic_polynomial(d));
    }
    return poly;
}

CyclotomicContext::CyclotomicContext(unsigned order) : order_(order), modulus_(cyclotomic_polynomial(order)) {
    const std::size_t phi = degree();
    std::vector<long> current(phi, 0);
    current[0] = 1;
    for (unsigned k = 0; k < order_; ++k) {
        powers_.push_back(current);
        // multiply by x, then fold the top coefficient back using Phi_n
        std::vector<long> next(phi + 1, 0);
        for (std::size_t i = 0; i < phi; ++i) next[i + 1] = current[i];
        const long top = next[phi];
        for (std::size_t i = 0; i <= phi; ++i) next[i] -= top * modulus_[i];
        next.resize(phi);
        current = std::move(next);
    }
}

const CyclotomicContext& CyclotomicContext::of(unsigned order) {
    static std::mutex mutex;
    static std::map<unsigned, std::unique_ptr<CyclotomicContext>> interned;
    if (order == 0) throw Error(ErrorCode::InvalidArgument, "cyclotomic order must be >= 1");
    std::lock_guard lock(mutex);
    auto& slot = interned[order];
    if (!slot) slot.reset(new CyclotomicContext(order));
    return *slot;
}

CyclotomicNumber::CyclotomicNumber(const CyclotomicContext& ctx) : ctx_(&ctx), coeffs_(ctx.degree()) {}

CyclotomicNumber::CyclotomicNumber(const CyclotomicContext& ctx, const mpq_class& value)
    : ctx_(&ctx), coeffs_(ctx.degree()) {
    coeffs_[0] = value;
}

CyclotomicNumber CyclotomicNumber::from_polynomial(const CyclotomicContext& ctx, std::vector<mpq_class> coeffs) {
    CyclotomicNumber out(ctx);
    if (coeffs.size() < ctx.degree()) coeffs.resize(ctx.degree());
    reduce_in_place(coeffs, ctx.modulus());
    out.coeffs_ = std::move(coeffs);
    return out;
}

bool CyclotomicNumber::is_zero() const {
    for (const auto& c : coeffs_) {
        if (sgn(c) != 0) return false;
    }
    return true;
}

bool CyclotomicNumber::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) != 0) return false;
    }
    return true;
}

void CyclotomicNumber::require_same_context(const CyclotomicNumber& other) const {
    if (ctx_ != other.ctx_) {
        throw Error(ErrorCode::ContextMismatch, "operands live in Q(zeta_" + std::to_string(ctx_->order()) +
                                                    ") and Q(zeta_" + std::to_string(other.ctx_->order()) + ")");
    }
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& rhs) {
    require_same_context(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& rhs) {
    require_same_context(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& rhs) {
    require_same_context(rhs);
    const std::size_t phi = coeffs_.size();
    std::vector<mpq_class> prod(2 * phi - 1);
    for (std::size_t i = 0; i < phi; ++i) {
        if (sgn(coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < phi; ++j) {
            if (sgn(rhs.coeffs_[j]) != 0) prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    reduce_in_place(prod, ctx_->modulus());
    coeffs_ = std::move(prod);
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const mpq_class& rhs) {
    for (auto& c : coeffs_) c *= rhs;
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator/=(const CyclotomicNumber& rhs) {
    return *this *= inverse(rhs);
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    CyclotomicNumber out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    a.require_same_context(b);
    return a.coeffs_ == b.coeffs_;
}

CyclotomicNumber root_power(const CyclotomicContext& ctx, long k) {
    const long n = ctx.order();
    const auto idx = static_cast<std::size_t>(((k % n) + n) % n);
    const auto& p = ctx.power(idx);
    std::vector<mpq_class> coeffs(p.begin(), p.end());
    return CyclotomicNumber::from_polynomial(ctx, std::move(coeffs));
}

CyclotomicNumber conj(const CyclotomicNumber& x) {
    const auto& ctx = x.context();
    const std::size_t n = ctx.order();
    std::vector<mpq_class> out(ctx.degree());
    const auto& c = x.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (sgn(c[k]) == 0) continue;
        const auto& p = ctx.power((n - k % n) % n);
        for (std::size_t i = 0; i < out.size(); ++i) {
            if (p[i] != 0) out[i] += c[k] * p[i];
        }
    }
    return CyclotomicNumber::from_polynomial(ctx, std::move(out));
}

CyclotomicNumber re(const CyclotomicNumber& x) {
    return (x + conj(x)) * mpq_class(1, 2);
}

CyclotomicNumber inverse(const CyclotomicNumber& x) {
    if (x.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    const auto& ctx = x.context();
    const std::size_t phi = ctx.degree();

    // Column j of the multiplication map holds x * alpha^j; solve for y with x * y = 1.
    std::vector<std::vector<mpq_class>> aug(phi, std::vector<mpq_class>(phi + 1));
    for (std::size_t j = 0; j < phi; ++j) {
        std::vector<mpq_class> shifted(phi + j);
        for (std::size_t i = 0; i < phi; ++i) shifted[i + j] = x.coefficients()[i];
        auto col = CyclotomicNumber::from_polynomial(ctx, std::move(shifted));
        for (std::size_t i = 0; i < phi; ++i) aug[i][j] = col.coefficients()[i];
    }
    aug[0][phi] = 1;

    for (std::size_t col = 0; col < phi; ++col) {
        std::size_t pivot = col;
        while (pivot < phi && sgn(aug[pivot][col]) == 0) ++pivot;
        if (pivot == phi) throw Error(ErrorCode::InvariantViolation, "multiplication map singular for nonzero element");
        std::swap(aug[pivot], aug[col]);
        const mpq_class p = aug[col][col];
        for (std::size_t k = col; k <= phi; ++k) aug[col][k] /= p;
        for (std::size_t r = 0; r < phi; ++r) {
            if (r == col || sgn(aug[r][col]) == 0) continue;
            const mpq_class f = aug[r][col];
            for (std::size_t k = col; k <= phi; ++k) aug[r][k] -= f * aug[col][k];
        }
    }
    std::vector<mpq_class> y(phi);
    for (std::size_t i = 0; i < phi; ++i) y[i] = aug[i][phi];
    return CyclotomicNumber::from_polynomial(ctx, std::move(y));
}

std::complex<double> to_complex(const CyclotomicNumber& x) {
    const double n = x.context().order();
    std::complex<double> acc{0.0, 0.0};
    const auto& c = x.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (sgn(c[k]) == 0) continue;
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / n;
        acc += c[k].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return acc;
}

EntryClass classify_entry(const CyclotomicNumber& x) {
    if (x.is_zero()) return {EntryClass::Kind::Zero, 0, 0};
    const auto& ctx = x.context();
    for (int sign : {+1, -1}) {
        for (unsigned k = 0; k < ctx.order(); ++k) {
            if (equals_integer_vector(x.coefficients(), ctx.power(k), sign)) {
                return {EntryClass::Kind::SignedPower, sign, k};
            }
        }
    }
    return {EntryClass::Kind::Other, 0, 0};
}

namespace {

std::string monomial(const mpz_class& magnitude, std::size_t k, std::string_view symbol) {
    std::string out;
    if (k == 0) return magnitude.get_str();
    if (magnitude != 1) out += magnitude.get_str();
    out += symbol;
    if (k > 1) out += "^" + std::to_string(k);
    return out;
}

}  // namespace

std::string to_string(const CyclotomicNumber& x, std::string_view symbol) {
    const auto& c = x.coefficients();
    mpz_class denom = 1;
    for (const auto& q : c) {
        if (sgn(q) != 0) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), q.get_den_mpz_t());
    }
    std::string body;
    int terms = 0;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (sgn(c[k]) == 0) continue;
        mpz_class num = c[k].get_num() * (denom / c[k].get_den());
        const bool negative = sgn(num) < 0;
        if (negative) num = -num;
        if (terms == 0) {
            body += negative ? "-" : "";
        } else {
            body += negative ? " - " : " + ";
        }
        body += monomial(num, k, symbol);
        ++terms;
    }
    if (terms == 0) return "0";
    if (denom == 1) return body;
    if (terms == 1) return body + "/" + denom.get_str();
    return "(" + body + ")/" + denom.get_str();
}

std::string render_value(const CyclotomicNumber& x, std::string_view symbol) {
    const EntryClass cls = classify_entry(x);
    if (cls.kind != EntryClass::Kind::SignedPower) return to_string(x, symbol);
    std::string out = cls.sign < 0 ? "-" : "";
    if (cls.exponent == 0) return out + "1";
    out += symbol;
    if (cls.exponent > 1) out += "^" + std::to_string(cls.exponent);
    return out;
}

std::string render_complex(std::complex<double> z, int precision) {
    const double cutoff = 0.5 * std::pow(10.0, -precision);
    double r = std::abs(z.real()) < cutoff ? 0.0 : z.real();
    double i = std::abs(z.imag()) < cutoff ? 0.0 : z.imag();
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.*f%+.*fi", precision, r, precision, i);
    return buf;
}

}  // namespace hermix
