#include "ritz/potential.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace ritz {

Potential::Potential(std::map<int, Rational> real_coeffs, std::map<int, Rational> imag_coeffs)
    : real_(std::move(real_coeffs)), imag_(std::move(imag_coeffs)), degree_(0) {
    for (auto it = real_.begin(); it != real_.end();) {
        if (it->first < 0) throw ConfigError("negative exponent in potential");
        it = it->second.is_zero() ? real_.erase(it) : std::next(it);
    }
    for (auto it = imag_.begin(); it != imag_.end();) {
        if (it->first < 0) throw ConfigError("negative exponent in potential");
        it = it->second.is_zero() ? imag_.erase(it) : std::next(it);
    }
    if (!real_.empty()) degree_ = real_.rbegin()->first;
    if (!imag_.empty() && imag_.rbegin()->first > degree_) degree_ = imag_.rbegin()->first;
    if (real_.empty() && imag_.empty()) throw ConfigError("empty potential");
    if (degree_ < 1) throw ConfigError("potential degree must be at least 1");
    if (imag_.empty() && real_.rbegin()->second.sign() <= 0) {
        throw ConfigError("real potential must have a positive leading coefficient");
    }
}

Parity Potential::parity() const {
    for (const auto& [n, c] : real_) {
        if (n % 2 != 0) return Parity::ASYMMETRIC;
    }
    for (const auto& [n, c] : imag_) {
        if (n % 2 != 0) return Parity::ASYMMETRIC;
    }
    return Parity::SYMMETRIC;
}

namespace {

void append_term(std::string& out, int exponent, const Rational& coeff, bool imag, bool first) {
    const bool negative = coeff.sign() < 0;
    if (first) {
        if (negative) out += "-";
    } else {
        out += negative ? "-" : "+";
    }
    const Rational mag = negative ? -coeff : coeff;
    const bool has_factor = imag || exponent > 0;
    if (!(mag == Rational(1)) || !has_factor) {
        out += mag.to_string();
        if (has_factor) out += "*";
    }
    if (imag) {
        out += "i";
        out += "*";
    }
    if (imag && exponent == 0) {
        out += "x^0";
    } else if (exponent == 1) {
        out += "x";
    } else if (exponent > 1) {
        out += "x^" + std::to_string(exponent);
    }
}

} // namespace

std::string Potential::to_string() const {
    // Descending exponent; at equal exponent the real term precedes the
    // imaginary one.
    std::vector<std::pair<std::pair<int, int>, Rational>> terms;
    for (const auto& [n, c] : real_) terms.push_back({{n, 0}, c});
    for (const auto& [n, c] : imag_) terms.push_back({{n, 1}, c});
    std::sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) {
        if (l.first.first != r.first.first) return l.first.first > r.first.first;
        return l.first.second < r.first.second;
    });
    std::string out;
    bool first = true;
    for (const auto& [key, coeff] : terms) {
        append_term(out, key.first, coeff, key.second == 1, first);
        first = false;
    }
    return out;
}

BigReal AsymptoticForm::decay_at(const BigReal& x) const {
    BigReal s = sqrt_a(x.context());
    s *= pow_int(x, k + 1);
    s /= k + 1;
    return s;
}

std::string AsymptoticForm::to_string() const {
    std::string head;
    if (!(a == Rational(1))) head = "sqrt(" + a.to_string() + ")*";
    return head + "x^" + std::to_string(k + 1) + "/" + std::to_string(k + 1);
}

namespace {

class PotentialParser {
  public:
    explicit PotentialParser(const std::string& text) : text_(text), pos_(0) {}

    Potential parse() {
        std::map<int, Rational> real, imag;
        skip_ws();
        if (at_end()) throw ParseError("empty potential expression", pos_);
        int sign = consume_sign_or(+1);
        while (true) {
            parse_term(sign, real, imag);
            skip_ws();
            if (at_end()) break;
            const char c = peek();
            if (c == '+' || c == '-') {
                sign = consume_sign_or(+1);
            } else {
                throw ParseError(std::string("expected '+' or '-', found '") + c + "'", pos_);
            }
        }
        return Potential(std::move(real), std::move(imag));
    }

  private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    int consume_sign_or(int fallback) {
        skip_ws();
        if (!at_end() && (peek() == '+' || peek() == '-')) {
            return text_[pos_++] == '-' ? -1 : +1;
        }
        return fallback;
    }

    void expect(char c) {
        skip_ws();
        if (at_end() || peek() != c) {
            throw ParseError(std::string("expected '") + c + "'", pos_);
        }
        ++pos_;
    }

    long long parse_integer() {
        skip_ws();
        const std::size_t start = pos_;
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
            throw ParseError("expected a number", pos_);
        }
        long long value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            const int d = peek() - '0';
            if (__builtin_mul_overflow(value, 10LL, &value) ||
                __builtin_add_overflow(value, static_cast<long long>(d), &value)) {
                throw ParseError("integer literal too large", start);
            }
            ++pos_;
        }
        return value;
    }

    Rational parse_rational() {
        const std::size_t start = pos_;
        long long ipart = parse_integer();
        if (!at_end() && peek() == '/') {
            ++pos_;
            long long den = parse_integer();
            if (den == 0) throw ParseError("zero denominator", start);
            return Rational(ipart, den);
        }
        if (!at_end() && peek() == '.') {
            ++pos_;
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
                throw ParseError("expected digits after decimal point", pos_);
            }
            Rational value(ipart);
            Rational place(1, 10);
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
                value = value + place * Rational(peek() - '0');
                place = place * Rational(1, 10);
                ++pos_;
            }
            return value;
        }
        return Rational(ipart);
    }

    int parse_exponent() {
        skip_ws();
        if (at_end() || peek() != '^') return 1;
        ++pos_;
        const std::size_t start = pos_;
        long long n = parse_integer();
        if (n > 64) throw ParseError("exponent exceeds the supported maximum of 64", start);
        return static_cast<int>(n);
    }

    void parse_term(int sign, std::map<int, Rational>& real, std::map<int, Rational>& imag) {
        skip_ws();
        if (at_end()) throw ParseError("expected a term", pos_);

        Rational coeff(1);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_rational();
            have_coeff = true;
            skip_ws();
            if (at_end() || peek() != '*') {
                // Plain rational constant.
                add(real, 0, sign < 0 ? -coeff : coeff);
                return;
            }
            ++pos_; // '*'
        }

        bool imaginary = false;
        skip_ws();
        if (!at_end() && peek() == 'i') {
            ++pos_;
            imaginary = true;
            expect('*');
            skip_ws();
        }

        if (at_end() || peek() != 'x') {
            throw ParseError(have_coeff || imaginary
                                 ? "expected 'x' after '*'"
                                 : "expected a coefficient, 'i', or 'x'",
                             pos_);
        }
        ++pos_; // 'x'
        const int exponent = parse_exponent();
        add(imaginary ? imag : real, exponent, sign < 0 ? -coeff : coeff);
    }

    static void add(std::map<int, Rational>& coeffs, int exponent, const Rational& c) {
        auto it = coeffs.find(exponent);
        if (it == coeffs.end()) {
            coeffs.emplace(exponent, c);
        } else {
            it->second = it->second + c;
        }
    }

    const std::string& text_;
    std::size_t pos_;
};

} // namespace

Potential parse_potential(const std::string& expr) {
    return PotentialParser(expr).parse();
}

AsymptoticForm analyze_asymptotics(const Potential& v) {
    if (!v.is_real()) {
        throw UnsupportedPotentialError(
            "asymptotic analysis requires a real-coefficient potential");
    }
    const int degree = v.degree();
    if (degree % 2 != 0) {
        throw UnsupportedPotentialError(
            "asymptotic analysis requires an even leading degree, got " +
            std::to_string(degree));
    }
    const Rational leading = v.real_coeffs().rbegin()->second;
    if (leading.sign() <= 0) {
        throw UnsupportedPotentialError("leading coefficient must be positive");
    }
    return AsymptoticForm{degree / 2, leading};
}

Parity parity_of(const Potential& v) { return v.parity(); }

} // namespace ritz
