#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace acomp {

/// Univariate polynomial with integer coefficients, stored low degree first.
/// The leading coefficient is nonzero unless the polynomial is zero.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs);

    static IntPolynomial zero() { return IntPolynomial(); }
    static IntPolynomial constant(const mpz_class& c);
    /// x^n
    static IntPolynomial monomial(unsigned n);

    /// Accepts "x^3-x-1" style text (single variable x, integer
    /// coefficients, caret powers) or the coefficient-list form
    /// "[-1,-1,0,1]" (low degree first).
    static IntPolynomial parse(const std::string& text);

    const std::vector<mpz_class>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const mpz_class& leading() const;
    mpz_class coeff(size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpz_class(0); }

    bool is_monic() const;

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

    IntPolynomial derivative() const;

    mpq_class eval(const mpq_class& x) const;
    mpz_class eval(const mpz_class& x) const;

    /// Exact division test: returns quotient iff divisor divides *this
    /// exactly over the integers.
    std::optional<IntPolynomial> divide_exact(const IntPolynomial& divisor) const;

    /// Irreducibility over Q for monic polynomials of degree <= 6,
    /// via rational-root sieve plus trial factorization into monic
    /// integer factors of degree <= deg/2. Returns a nontrivial monic
    /// factor when reducible, nullopt when irreducible.
    std::optional<IntPolynomial> find_rational_factor() const;

    /// Number of distinct real roots in the half-open interval (lo, hi],
    /// by Sturm's theorem. Requires a squarefree polynomial.
    int count_real_roots(const mpq_class& lo, const mpq_class& hi) const;

    /// Canonical text, e.g. "x^3-x-1".
    std::string to_string() const;

private:
    void normalize();
    std::vector<mpz_class> coeffs_;
};

} // namespace acomp
