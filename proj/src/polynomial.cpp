#include "antimagic/polynomial.hpp"

#include "antimagic/errors.hpp"

#include <numeric>

namespace antimagic {

Polynomial Polynomial::constant(std::size_t arity, const Integer& c) {
    Polynomial p(arity);
    p.add_term(Exponents(arity, 0), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t arity, std::size_t index) {
    if (index >= arity) throw ContractError("variable index out of range");
    Exponents e(arity, 0);
    e[index] = 1;
    return monomial(arity, std::move(e));
}

Polynomial Polynomial::monomial(std::size_t arity, Exponents exps, const Integer& c) {
    if (exps.size() != arity) throw ContractError("exponent vector has wrong arity");
    Polynomial p(arity);
    p.add_term(exps, c);
    return p;
}

Polynomial Polynomial::linear(std::span<const long> coefficients) {
    if (coefficients.empty()) throw ContractError("linear form needs a constant term");
    const std::size_t arity = coefficients.size() - 1;
    Polynomial p(arity);
    for (std::size_t i = 0; i < arity; ++i) {
        Exponents e(arity, 0);
        e[i] = 1;
        p.add_term(e, Integer(coefficients[i]));
    }
    p.add_term(Exponents(arity, 0), Integer(coefficients[arity]));
    return p;
}

void Polynomial::check_arity(const Polynomial& rhs) const {
    if (arity_ != rhs.arity_)
        throw ContractError("polynomial arity mismatch: " + std::to_string(arity_) + " vs " +
                            std::to_string(rhs.arity_));
}

void Polynomial::add_term(const Exponents& e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

long Polynomial::degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<long>(std::accumulate(e.begin(), e.end(), 0UL)));
    return d;
}

bool Polynomial::is_homogeneous() const {
    const long d = degree();
    for (const auto& [e, c] : terms_)
        if (static_cast<long>(std::accumulate(e.begin(), e.end(), 0UL)) != d) return false;
    return true;
}

Polynomial Polynomial::homogeneous_part(long d) const {
    Polynomial out(arity_);
    for (const auto& [e, c] : terms_)
        if (static_cast<long>(std::accumulate(e.begin(), e.end(), 0UL)) == d) out.terms_.emplace(e, c);
    return out;
}

Integer Polynomial::coefficient(std::span<const std::uint32_t> exps) const {
    if (exps.size() != arity_) throw ContractError("exponent vector has wrong arity");
    auto it = terms_.find(Exponents(exps.begin(), exps.end()));
    return it == terms_.end() ? Integer(0) : it->second;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
    if (point.size() != arity_) throw ContractError("evaluation point has wrong arity");
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational term(c);
        for (std::size_t i = 0; i < arity_; ++i)
            for (std::uint32_t k = 0; k < e[i]; ++k) term *= point[i];
        total += term;
    }
    return total;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    check_arity(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    check_arity(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(*this);
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_arity(b);
    Polynomial out(a.arity_);
    Exponents e(a.arity_);
    Integer prod;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            mpz_mul(prod.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
            out.add_term(e, prod);
        }
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial pow(const Polynomial& p, unsigned e) {
    Polynomial result = Polynomial::constant(p.arity(), 1);
    Polynomial base = p;
    while (e > 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return result;
}

Integer coefficient_of(const Polynomial& p, std::span<const std::uint32_t> exps) { return p.coefficient(exps); }

namespace {

Integer factorial(unsigned long n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

} // namespace

Integer vandermonde_coefficient_formula(unsigned N, unsigned s) {
    if (N < 1) throw ContractError("vandermonde_coefficient_formula needs N >= 1");
    Integer denominator = factorial(N);
    Integer block = factorial(s + 1UL);
    Integer block_pow;
    mpz_pow_ui(block_pow.get_mpz_t(), block.get_mpz_t(), N);
    denominator *= block_pow;
    Integer numerator = factorial(static_cast<unsigned long>(s + 1) * N);
    if (!mpz_divisible_p(numerator.get_mpz_t(), denominator.get_mpz_t()))
        throw ContractError("Vandermonde coefficient formula did not divide evenly");
    Integer out;
    mpz_divexact(out.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
    return out;
}

Polynomial vandermonde_power(unsigned N, unsigned power) {
    Polynomial out = Polynomial::constant(N, 1);
    for (unsigned i = 0; i < N; ++i)
        for (unsigned j = i + 1; j < N; ++j)
            out *= pow(Polynomial::variable(N, i) - Polynomial::variable(N, j), power);
    return out;
}

Exponents vandermonde_target(unsigned N, unsigned s) {
    Exponents e(N);
    for (unsigned i = 0; i < N; ++i) e[i] = s * (N - 1) + i;
    return e;
}

Integer multinomial(std::span<const std::uint32_t> parts) {
    Integer out = 1;
    unsigned long running = 0;
    Integer binom;
    for (std::uint32_t k : parts) {
        running += k;
        mpz_bin_uiui(binom.get_mpz_t(), running, k);
        out *= binom;
    }
    return out;
}

std::string to_string(ReductionMode mode) { return mode == ReductionMode::undirected ? "undirected" : "oriented"; }

namespace {

Polynomial x(std::size_t i) { return Polynomial::variable(3, i); }

// The part of the reduction polynomial that does not depend on n.
Polynomial fixed_factor(ReductionMode mode) {
    Polynomial out = Polynomial::constant(3, 1);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) {
            if (mode == ReductionMode::undirected)
                out *= pow(x(i) - x(j), 2) * (x(i) + x(j));
            else
                out *= (x(i) * x(i) - x(j) * x(j)) * (x(j) - x(i));
        }
    if (mode == ReductionMode::oriented) {
        const Polynomial sum = x(0) + x(1) + x(2);
        for (std::size_t i = 0; i < 3; ++i) out *= sum + x(i);
    }
    return out;
}

void require_n(unsigned n) {
    if (n < 4) throw ContractError("reduction polynomial needs n >= 4, got " + std::to_string(n));
}

} // namespace

Polynomial build_h_reduction_undirected(unsigned n) {
    require_n(n);
    const unsigned t = n - 4;
    Polynomial out = Polynomial::monomial(3, {t, t, t});
    out *= pow(x(0) + x(1) + x(2), t);
    return out * fixed_factor(ReductionMode::undirected);
}

Polynomial build_h_reduction_oriented(unsigned n) {
    require_n(n);
    const unsigned t = n - 4;
    // (-x1)^t (-x2)^t (-x3)^t = (-1)^{3t} (x1x2x3)^t
    Polynomial out = Polynomial::monomial(3, {t, t, t}, (3 * t) % 2 == 0 ? 1 : -1);
    out *= pow(x(0) + x(1) + x(2), t);
    return out * fixed_factor(ReductionMode::oriented);
}

Polynomial build_h_reduction(unsigned n, ReductionMode mode) {
    return mode == ReductionMode::undirected ? build_h_reduction_undirected(n) : build_h_reduction_oriented(n);
}

std::array<std::uint32_t, 3> reduction_exponents(unsigned n, ReductionMode mode) {
    require_n(n);
    if (mode == ReductionMode::undirected) {
        const std::uint32_t d = 4 * n - 7;
        const std::uint32_t third = d / 3;
        return {d - 2 * third + 1, third, third - 1};
    }
    const std::uint32_t d = 4 * n - 4;
    const std::uint32_t third = d / 3;
    return {d - 2 * third, third, third};
}

Integer reduction_coefficient_multinomial(unsigned n, ReductionMode mode, std::array<std::uint32_t, 3> exps) {
    require_n(n);
    const long t = static_cast<long>(n) - 4;
    Integer total = 0;
    const Polynomial fixed = fixed_factor(mode);
    for (const auto& [e, c] : fixed.terms()) {
        std::array<std::uint32_t, 3> parts{};
        bool ok = true;
        long sum = 0;
        for (std::size_t i = 0; i < 3; ++i) {
            const long r = static_cast<long>(exps[i]) - t - static_cast<long>(e[i]);
            if (r < 0) ok = false;
            parts[i] = static_cast<std::uint32_t>(std::max(r, 0L));
            sum += r;
        }
        if (!ok || sum != t) continue;
        total += c * multinomial(parts);
    }
    if (mode == ReductionMode::oriented && (3 * t) % 2 == 1) total = -total;
    return total;
}

CoefficientCertificate certify_reduction_monomial(unsigned n, ReductionMode mode) {
    const auto abc = reduction_exponents(n, mode);
    const Polynomial h = build_h_reduction(n, mode);
    CoefficientCertificate cert;
    cert.provenance = "reduction/" + to_string(mode) + " n=" + std::to_string(n);
    cert.exponents.assign(abc.begin(), abc.end());
    cert.coefficient = h.coefficient(cert.exponents);
    cert.nonzero = cert.coefficient != 0;
    return cert;
}

CoefficientCertificate certify_base_case(unsigned k, unsigned extra, ReductionMode mode) {
    CoefficientCertificate cert;
    cert.provenance = "base/" + to_string(mode) + " k=" + std::to_string(k) + " |coefficient|";
    cert.exponents.resize(k);
    if (k == 0) {
        cert.coefficient = 1;
        cert.nonzero = true;
        return cert;
    }
    if (mode == ReductionMode::undirected) {
        for (unsigned i = 0; i < k; ++i) cert.exponents[i] = 2 * (k - 1) + i + extra;
        cert.coefficient = vandermonde_coefficient_formula(k, 2);
    } else {
        for (unsigned i = 0; i < k; ++i) cert.exponents[i] = 2 * (k - 1) + 2 * i + extra;
        Integer two_k;
        mpz_ui_pow_ui(two_k.get_mpz_t(), 2, k);
        cert.coefficient = two_k * vandermonde_coefficient_formula(k, 1);
    }
    cert.nonzero = cert.coefficient != 0;
    return cert;
}

} // namespace antimagic
