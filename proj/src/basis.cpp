#include "ritz/basis.hpp"

#include <algorithm>
#include <map>

namespace ritz {

void BasisSpec::validate() const {
    if (size < 1) throw BasisSpecError("basis size must be positive");
    switch (family) {
        case BasisFamily::K_EVEN:
        case BasisFamily::K_ODD: {
            if (!decay) throw BasisSpecError("parity families require a decay form");
            if (sector == Sector::ALL) {
                throw BasisSpecError("parity families need an EVEN_STATES or ODD_STATES sector");
            }
            const bool k_even = decay->k % 2 == 0;
            if (family == BasisFamily::K_EVEN && !k_even) {
                throw BasisSpecError("K_EVEN family requires an even decay exponent k, got k=" +
                                     std::to_string(decay->k));
            }
            if (family == BasisFamily::K_ODD && k_even) {
                throw BasisSpecError("K_ODD family requires an odd decay exponent k, got k=" +
                                     std::to_string(decay->k));
            }
            break;
        }
        case BasisFamily::ASYMMETRIC:
            if (!decay) throw BasisSpecError("asymmetric family requires a decay form");
            if (sector != Sector::ALL) {
                throw BasisSpecError("asymmetric family has no parity sectors");
            }
            break;
        case BasisFamily::HARMONIC_OSC:
            if (decay) throw BasisSpecError("harmonic-oscillator basis carries no decay form");
            if (sector != Sector::ALL) {
                throw BasisSpecError("harmonic-oscillator basis has no parity sectors");
            }
            break;
    }
    if (decay && (decay->k < 1 || decay->a.sign() <= 0)) {
        throw BasisSpecError("decay form requires k >= 1 and a > 0");
    }
}

PolyExpFunction::PolyExpFunction(std::vector<Term> terms, const AsymptoticForm& decay,
                                 LineExtension ext, const PrecisionContext& ctx)
    : decay_(decay), ext_(ext), ctx_(ctx) {
    // Merge duplicate exponents, drop exact zeros, keep sorted.
    std::map<int, BigReal> merged;
    for (auto& [p, c] : terms) {
        if (p < 0) throw BasisSpecError("negative exponent in basis function");
        auto it = merged.find(p);
        if (it == merged.end()) {
            merged.emplace(p, std::move(c));
        } else {
            it->second += c;
        }
    }
    for (auto& [p, c] : merged) {
        if (!c.is_zero()) terms_.emplace_back(p, std::move(c));
    }
}

PolyExpFunction PolyExpFunction::monomial(int exponent, const AsymptoticForm& decay,
                                          LineExtension ext, const PrecisionContext& ctx) {
    std::vector<Term> t;
    t.emplace_back(exponent, BigReal(1, ctx));
    return PolyExpFunction(std::move(t), decay, ext, ctx);
}

BigReal PolyExpFunction::eval(const BigReal& x) const {
    if (x.sign() < 0) throw MathDomainError("PolyExpFunction::eval requires x >= 0");
    BigReal poly = BigReal::zero(ctx_);
    for (const auto& [p, c] : terms_) {
        poly += c * pow_int(x, p);
    }
    if (poly.is_zero()) return poly;
    return poly * exp(-decay_.decay_at(x));
}

BigReal PolyExpFunction::eval_full_line(const BigReal& x) const {
    if (x.sign() >= 0) return eval(x);
    if (ext_ == LineExtension::HALF_LINE) {
        throw MathDomainError("half-line basis function evaluated at x < 0");
    }
    BigReal v = eval(-x);
    return ext_ == LineExtension::EVEN ? v : -v;
}

PolyExpFunction differentiate(const PolyExpFunction& f) {
    const PrecisionContext& ctx = f.context();
    const BigReal sqrt_a = f.decay().sqrt_a(ctx);
    std::vector<PolyExpFunction::Term> out;
    out.reserve(f.terms().size() * 2);
    for (const auto& [p, c] : f.terms()) {
        if (p >= 1) out.emplace_back(p - 1, c * p);
        out.emplace_back(p + f.decay().k, -(c * sqrt_a));
    }
    LineExtension ext = f.extension();
    if (ext == LineExtension::EVEN) {
        ext = LineExtension::ODD;
    } else if (ext == LineExtension::ODD) {
        ext = LineExtension::EVEN;
    }
    return PolyExpFunction(std::move(out), f.decay(), ext, ctx);
}

std::vector<PolyExpFunction> build_basis(const BasisSpec& spec, const PrecisionContext& ctx) {
    spec.validate();
    if (spec.family == BasisFamily::HARMONIC_OSC) {
        throw BasisSpecError(
            "harmonic-oscillator basis functions are handled by operator algebra in assembly");
    }
    const AsymptoticForm& decay = *spec.decay;
    std::vector<PolyExpFunction> out;
    out.reserve(static_cast<std::size_t>(spec.size));
    for (int j = 0; j < spec.size; ++j) {
        int exponent = 0;
        LineExtension ext = LineExtension::HALF_LINE;
        switch (spec.family) {
            case BasisFamily::K_EVEN: {
                // Half-line representatives of |x|^j e^(-|S|) (even states) and
                // x|x|^j e^(-|S|) (odd states); the absolute values drop on x >= 0.
                int idx = j;
                if (spec.literal_even_indices && spec.sector == Sector::EVEN_STATES && j >= 1) {
                    idx = j + 1; // published list skips j = 1
                }
                exponent = spec.sector == Sector::EVEN_STATES ? idx : idx + 1;
                break;
            }
            case BasisFamily::K_ODD:
                exponent = 2 * j + (spec.sector == Sector::ODD_STATES ? 1 : 0);
                break;
            case BasisFamily::ASYMMETRIC:
                exponent = j;
                ext = j % 2 == 0 ? LineExtension::EVEN : LineExtension::ODD;
                break;
            case BasisFamily::HARMONIC_OSC:
                break; // unreachable
        }
        out.push_back(PolyExpFunction::monomial(exponent, decay, ext, ctx));
    }
    return out;
}

} // namespace ritz
