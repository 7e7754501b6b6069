#ifndef ANTIMAGIC_POLYNOMIAL_HPP
#define ANTIMAGIC_POLYNOMIAL_HPP

#include "antimagic/rational.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace antimagic {

using Exponents = std::vector<std::uint32_t>;

/// Sparse multivariate polynomial with exact integer coefficients. Terms are
/// kept in a map keyed by exponent vector; zero coefficients are never stored.
class Polynomial {
public:
    explicit Polynomial(std::size_t arity = 0) : arity_(arity) {}

    static Polynomial constant(std::size_t arity, const Integer& c);
    /// x_index (0-based).
    static Polynomial variable(std::size_t arity, std::size_t index);
    static Polynomial monomial(std::size_t arity, Exponents exps, const Integer& c = 1);
    /// c_0 x_0 + ... + c_{k-1} x_{k-1} + c_k (coefficients.size() == arity + 1).
    static Polynomial linear(std::span<const long> coefficients);

    std::size_t arity() const { return arity_; }
    const std::map<Exponents, Integer>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Total degree; -1 for the zero polynomial.
    long degree() const;
    bool is_homogeneous() const;
    /// Terms of total degree exactly `d`.
    Polynomial homogeneous_part(long d) const;

    Integer coefficient(std::span<const std::uint32_t> exps) const;
    Rational evaluate(std::span<const Rational> point) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial operator-() const;

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void check_arity(const Polynomial& rhs) const;
    void add_term(const Exponents& e, const Integer& c);

    std::size_t arity_;
    std::map<Exponents, Integer> terms_;
};

/// p^e by repeated squaring; p^0 == 1.
Polynomial pow(const Polynomial& p, unsigned e);

/// Coefficient of the monomial with the given exponents (0 if absent).
Integer coefficient_of(const Polynomial& p, std::span<const std::uint32_t> exps);

/// ((s+1)N)! / (N! (s+1)!^N), the magnitude of the coefficient of
/// prod_i x_i^{s(N-1)+i-1} in prod_{i<j} (x_i - x_j)^{2s+1}.
Integer vandermonde_coefficient_formula(unsigned N, unsigned s);

/// prod_{i<j} (x_i - x_j)^power over N variables.
Polynomial vandermonde_power(unsigned N, unsigned power);

/// (s(N-1), s(N-1)+1, ..., s(N-1)+N-1).
Exponents vandermonde_target(unsigned N, unsigned s);

/// n! / (k_1! ... k_r!) for k_1 + ... + k_r == n.
Integer multinomial(std::span<const std::uint32_t> parts);

enum class ReductionMode { undirected, oriented };

std::string to_string(ReductionMode mode);

/// Three-variable polynomial whose top-degree coefficients match those of the
/// constraint polynomial used when re-adding the three edges at a 3+-vertex.
///   undirected: (x1x2x3)^{n-4} (x1+x2+x3)^{n-4} prod_{i<j} (xi-xj)^2 (xi+xj),   degree 4n-7
///   oriented:   (-x1)^{n-4}(-x2)^{n-4}(-x3)^{n-4} (x1+x2+x3)^{n-4}
///               prod_{i<j} (xi^2-xj^2)(xj-xi) (2x1+x2+x3)(x1+2x2+x3)(x1+x2+2x3),   degree 4n-4
/// Throws ContractError for n < 4.
Polynomial build_h_reduction_undirected(unsigned n);
Polynomial build_h_reduction_oriented(unsigned n);
Polynomial build_h_reduction(unsigned n, ReductionMode mode);

/// Designated monomial (a, b, c) for the reduction step:
///   undirected: D = 4n-7, a = D - 2 floor(D/3) + 1, b = floor(D/3), c = floor(D/3) - 1
///   oriented:   D = 4n-4, a = D - 2 floor(D/3),     b = c = floor(D/3)
std::array<std::uint32_t, 3> reduction_exponents(unsigned n, ReductionMode mode);

/// Coefficient of (a, b, c) in the reduction polynomial computed without the
/// full expansion: the fixed low-degree factor is expanded and combined with
/// multinomial coefficients of (x1+x2+x3)^{n-4}.
Integer reduction_coefficient_multinomial(unsigned n, ReductionMode mode, std::array<std::uint32_t, 3> exps);

struct CoefficientCertificate {
    std::string provenance;   // e.g. "reduction/undirected n=7"
    Exponents exponents;
    Integer coefficient;
    bool nonzero = false;
};

/// Expands the reduction polynomial for n and reads off the coefficient at the
/// designated monomial. `nonzero` is reported as computed.
CoefficientCertificate certify_reduction_monomial(unsigned n, ReductionMode mode);

/// Certificate for the Δ ≤ 2 base case over k matching edges. The top-degree
/// part is c * prod_{i<j}(xi-xj)^5 * prod xi^extra (undirected) or
/// c * prod_{i<j}(xi^2-xj^2)^3 * prod xi^extra (oriented); the coefficient
/// magnitude comes from the Vandermonde formula.
CoefficientCertificate certify_base_case(unsigned k, unsigned extra, ReductionMode mode);

} // namespace antimagic

#endif
