#include "ritz/mp.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <cstring>

namespace ritz {

namespace {

// log2(10); bits are over-provisioned by a small guard so that the requested
// decimal digit count survives short arithmetic chains.
constexpr double kBitsPerDigit = 3.3219280948873626;
constexpr int kGuardBits = 32;

} // namespace

PrecisionContext::PrecisionContext(int digits)
    : digits_(digits),
      bits_(static_cast<mpfr_prec_t>(std::ceil(digits * kBitsPerDigit)) + kGuardBits) {}

int PrecisionContext::roundtrip_digits() const {
    return static_cast<int>(std::ceil(static_cast<double>(bits_) * 0.3010299956639812)) + 2;
}

PrecisionContext with_precision(int digits) {
    if (digits < 30) {
        throw ConfigError("precision must be at least 30 decimal digits, got " +
                          std::to_string(digits));
    }
    return PrecisionContext(digits);
}

BigReal::BigReal() : ctx_() {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_set_nan(v_);
}

BigReal::BigReal(long value, const PrecisionContext& ctx) : ctx_(ctx) {
    if (!ctx.bound()) throw ConfigError("BigReal requires a bound PrecisionContext");
    mpfr_init2(v_, ctx.bits());
    mpfr_set_si(v_, value, MPFR_RNDN);
}

BigReal::BigReal(const BigReal& other) : ctx_(other.ctx_) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept : ctx_(other.ctx_) {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
}

BigReal& BigReal::operator=(const BigReal& other) {
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
        ctx_ = other.ctx_;
    }
    return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
    if (this != &other) {
        mpfr_swap(v_, other.v_);
        ctx_ = other.ctx_;
    }
    return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

void BigReal::require_bound() const {
    if (!ctx_.bound()) throw PrecisionMismatchError("operation on unbound BigReal");
}

void BigReal::require_same(const BigReal& a, const BigReal& b) {
    a.require_bound();
    b.require_bound();
    if (a.ctx_ != b.ctx_) {
        throw PrecisionMismatchError(
            "mixed precision contexts: " + std::to_string(a.ctx_.decimal_digits()) +
            " vs " + std::to_string(b.ctx_.decimal_digits()) + " digits");
    }
}

BigReal BigReal::from_ratio(long num, long den, const PrecisionContext& ctx) {
    if (den == 0) throw MathDomainError("rational with zero denominator");
    BigReal r(num, ctx);
    mpfr_div_si(r.v_, r.v_, den, MPFR_RNDN);
    return r;
}

BigReal BigReal::from_string(const std::string& text, const PrecisionContext& ctx) {
    std::size_t begin = 0, end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    const std::string trimmed = text.substr(begin, end - begin);
    if (trimmed.empty()) throw ParseError("empty number", begin);

    BigReal r(0, ctx);
    char* tail = nullptr;
    mpfr_strtofr(r.v_, trimmed.c_str(), &tail, 10, MPFR_RNDN);
    if (tail == trimmed.c_str() || *tail != '\0') {
        throw ParseError("invalid decimal number '" + trimmed + "'",
                         begin + static_cast<std::size_t>(tail - trimmed.c_str()));
    }
    return r;
}

BigReal BigReal::pi(const PrecisionContext& ctx) {
    BigReal r(0, ctx);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::to_context(const PrecisionContext& ctx) const {
    if (!ctx.bound()) throw ConfigError("to_context requires a bound PrecisionContext");
    BigReal r(0, ctx);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

std::string BigReal::to_string(int significant) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
    if (mpfr_zero_p(v_)) return "0";

    if (significant <= 0) significant = ctx_.bound() ? ctx_.roundtrip_digits() : 20;

    mpfr_exp_t exp10 = 0;
    char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<std::size_t>(significant),
                             v_, MPFR_RNDN);
    std::string digits(raw);
    mpfr_free_str(raw);

    bool neg = !digits.empty() && digits[0] == '-';
    if (neg) digits.erase(0, 1);
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();

    // value = 0.<digits> x 10^exp10
    const long e = static_cast<long>(exp10);
    const long n = static_cast<long>(digits.size());
    std::string out;
    if (e > 0 && e <= n) {
        out = digits.substr(0, static_cast<std::size_t>(e));
        if (e < n) out += "." + digits.substr(static_cast<std::size_t>(e));
    } else if (e <= 0 && e > -6) {
        out = "0." + std::string(static_cast<std::size_t>(-e), '0') + digits;
    } else if (e > n && e <= n + 6) {
        out = digits + std::string(static_cast<std::size_t>(e - n), '0');
    } else {
        out = digits.substr(0, 1);
        if (n > 1) out += "." + digits.substr(1);
        out += "e" + std::to_string(e - 1);
    }
    return neg ? "-" + out : out;
}

double BigReal::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

long BigReal::to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

BigReal BigReal::operator-() const {
    BigReal r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
}

BigReal& BigReal::operator+=(const BigReal& o) {
    require_same(*this, o);
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigReal& BigReal::operator-=(const BigReal& o) {
    require_same(*this, o);
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigReal& BigReal::operator*=(const BigReal& o) {
    require_same(*this, o);
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigReal& BigReal::operator/=(const BigReal& o) {
    require_same(*this, o);
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigReal& BigReal::operator*=(long o) {
    require_bound();
    mpfr_mul_si(v_, v_, o, MPFR_RNDN);
    return *this;
}

BigReal& BigReal::operator/=(long o) {
    require_bound();
    mpfr_div_si(v_, v_, o, MPFR_RNDN);
    return *this;
}

BigReal& BigReal::operator+=(long o) {
    require_bound();
    mpfr_add_si(v_, v_, o, MPFR_RNDN);
    return *this;
}

BigReal& BigReal::operator-=(long o) {
    require_bound();
    mpfr_sub_si(v_, v_, o, MPFR_RNDN);
    return *this;
}

bool operator==(const BigReal& a, const BigReal& b) {
    BigReal::require_same(a, b);
    return mpfr_equal_p(a.v_, b.v_) != 0;
}

bool operator<(const BigReal& a, const BigReal& b) {
    BigReal::require_same(a, b);
    return mpfr_less_p(a.v_, b.v_) != 0;
}

bool operator<=(const BigReal& a, const BigReal& b) {
    BigReal::require_same(a, b);
    return mpfr_lessequal_p(a.v_, b.v_) != 0;
}

BigReal sqrt(const BigReal& x) {
    x.require_bound();
    if (x.sign() < 0) throw MathDomainError("sqrt of negative value");
    BigReal r(x);
    mpfr_sqrt(r.v_, r.v_, MPFR_RNDN);
    return r;
}

BigReal exp(const BigReal& x) {
    x.require_bound();
    BigReal r(x);
    mpfr_exp(r.v_, r.v_, MPFR_RNDN);
    return r;
}

BigReal ln(const BigReal& x) {
    x.require_bound();
    if (x.sign() <= 0) throw MathDomainError("ln of nonpositive value");
    BigReal r(x);
    mpfr_log(r.v_, r.v_, MPFR_RNDN);
    return r;
}

BigReal log10(const BigReal& x) {
    x.require_bound();
    if (x.sign() <= 0) throw MathDomainError("log10 of nonpositive value");
    BigReal r(x);
    mpfr_log10(r.v_, r.v_, MPFR_RNDN);
    return r;
}

BigReal abs(const BigReal& x) {
    BigReal r(x);
    mpfr_abs(r.v_, r.v_, MPFR_RNDN);
    return r;
}

BigReal hypot(const BigReal& x, const BigReal& y) {
    BigReal::require_same(x, y);
    BigReal r(x);
    mpfr_hypot(r.v_, x.v_, y.v_, MPFR_RNDN);
    return r;
}

BigReal pow_int(const BigReal& x, long n) {
    x.require_bound();
    BigReal r(x);
    mpfr_pow_si(r.v_, x.v_, n, MPFR_RNDN);
    return r;
}

BigReal pow_ratio(const BigReal& x, long num, long den) {
    x.require_bound();
    if (x.sign() <= 0) throw MathDomainError("pow_ratio requires a positive base");
    if (den == 0) throw MathDomainError("pow_ratio with zero denominator");
    BigReal e = ln(x);
    e *= num;
    e /= den;
    return exp(e);
}

BigReal gamma(const BigReal& z, const PrecisionContext& ctx) {
    z.require_bound();
    if (z.context() != ctx) {
        throw PrecisionMismatchError("gamma argument bound to a different context");
    }
    if (!z.is_finite() || z.sign() <= 0) {
        throw MathDomainError("gamma requires a positive finite argument");
    }
    BigReal r(0, ctx);
    mpfr_gamma(r.v_, z.raw(), MPFR_RNDN);
    return r;
}

int agreement_digits(const BigReal& a, const BigReal& b) {
    const BigReal diff = abs(a - b);
    if (diff.is_zero()) return a.context().roundtrip_digits();
    const BigReal scale = abs(a);
    if (scale.is_zero()) return 0;
    const double d = -log10(diff / scale).to_double();
    if (d < 0) return 0;
    const int cap = a.context().roundtrip_digits();
    return d > cap ? cap : static_cast<int>(d);
}

BigComplex& BigComplex::operator+=(const BigComplex& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
    BigReal re = re_ * o.re_ - im_ * o.im_;
    BigReal im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
    // MPFR's exponent range makes the naive formula safe from overflow.
    BigReal den = o.norm_sq();
    if (den.is_zero()) throw MathDomainError("complex division by zero");
    BigReal re = (re_ * o.re_ + im_ * o.im_) / den;
    BigReal im = (im_ * o.re_ - re_ * o.im_) / den;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

BigComplex& BigComplex::operator*=(const BigReal& o) {
    re_ *= o;
    im_ *= o;
    return *this;
}

BigComplex& BigComplex::operator/=(const BigReal& o) {
    re_ /= o;
    im_ /= o;
    return *this;
}

BigComplex sqrt(const BigComplex& z) {
    const PrecisionContext& ctx = z.context();
    if (z.is_zero()) return BigComplex::zero(ctx);
    BigReal t = sqrt((z.abs() + abs(z.real())) / 2);
    if (z.real().sign() >= 0) {
        return BigComplex(t, z.imag() / (t * 2));
    }
    BigReal u = abs(z.imag()) / (t * 2);
    return BigComplex(u, z.imag().sign() >= 0 ? t : -t);
}

std::string BigComplex::to_string(int significant) const {
    if (im_.is_zero()) return re_.to_string(significant);
    std::string im = im_.to_string(significant);
    if (!im.empty() && im[0] == '-') return re_.to_string(significant) + im + "i";
    return re_.to_string(significant) + "+" + im + "i";
}

} // namespace ritz
