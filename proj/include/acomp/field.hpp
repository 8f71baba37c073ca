#pragma once

#include "acomp/polynomial.hpp"

#include <gmpxx.h>

#include <compare>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace acomp {

enum class Ordering { Less, Equal, Greater };

class FieldElement;

/// The real number field Q(lambda), where lambda is the largest real root
/// of a monic irreducible integer polynomial. The root is certified by a
/// rational enclosure (f(lo) < 0 < f(hi), exactly one root inside), which
/// is refined on demand under a lock; refinement never changes a verdict
/// already issued.
class NumberField : public std::enable_shared_from_this<NumberField> {
public:
    /// Checks monicity, irreducibility (reporting a factor otherwise) and
    /// the existence of a real root > 1; isolates the largest real root to
    /// width <= 2^-32.
    static std::shared_ptr<const NumberField> create(const IntPolynomial& minpoly);

    const IntPolynomial& minimal_polynomial() const { return minpoly_; }
    int degree() const { return minpoly_.degree(); }

    /// Snapshot of the current root enclosure (lo, hi).
    std::pair<mpq_class, mpq_class> enclosure() const;
    /// Halve the enclosure width (sign bisection).
    void refine() const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement lambda() const;
    FieldElement from_rational(const mpq_class& q) const;
    FieldElement element(std::vector<mpq_class> coords) const;

private:
    NumberField(IntPolynomial minpoly, mpq_class lo, mpq_class hi);

    IntPolynomial minpoly_;
    mutable std::mutex mutex_;
    mutable mpq_class lo_, hi_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// Element of Q(lambda) as a residue polynomial in lambda with exact
/// rational coordinates. Immutable value type.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldPtr field, std::vector<mpq_class> coords);

    const FieldPtr& field() const { return field_; }
    const std::vector<mpq_class>& coords() const { return coords_; }
    bool is_zero() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement inverse() const;

    FieldElement operator*(const mpq_class& q) const;
    FieldElement operator+(const mpq_class& q) const;
    FieldElement operator-(const mpq_class& q) const;

    bool operator==(const FieldElement& o) const;
    Ordering compare(const FieldElement& o) const;
    Ordering compare_to_zero() const;
    bool operator<(const FieldElement& o) const { return compare(o) == Ordering::Less; }
    bool operator<=(const FieldElement& o) const { return compare(o) != Ordering::Greater; }
    bool operator>(const FieldElement& o) const { return compare(o) == Ordering::Greater; }
    bool operator>=(const FieldElement& o) const { return compare(o) != Ordering::Less; }

    /// Certified decimal approximation with the given number of fraction
    /// digits, derived from the root enclosure.
    std::string approx(int digits = 6) const;
    double to_double() const;

    /// Coordinates as "p/q" strings (lossless).
    std::string coords_string() const;

private:
    void check_same_field(const FieldElement& o) const;

    FieldPtr field_;
    std::vector<mpq_class> coords_;
};

} // namespace acomp
