#include "acomp/field.hpp"

#include "acomp/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace acomp {

namespace {

struct Interval {
    mpq_class lo, hi;
};

Interval imul(const Interval& a, const Interval& b) {
    mpq_class p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)),
            std::max(std::max(p1, p2), std::max(p3, p4))};
}

// Horner evaluation of a rational-coefficient polynomial over an interval.
Interval ieval(const std::vector<mpq_class>& coeffs, const Interval& x) {
    Interval r{0, 0};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        r = imul(r, x);
        r.lo += *it;
        r.hi += *it;
    }
    return r;
}

} // namespace

NumberField::NumberField(IntPolynomial minpoly, mpq_class lo, mpq_class hi)
    : minpoly_(std::move(minpoly)), lo_(std::move(lo)), hi_(std::move(hi)) {}

std::shared_ptr<const NumberField> NumberField::create(const IntPolynomial& minpoly) {
    if (!minpoly.is_monic() || minpoly.degree() < 1)
        throw Error(ErrorKind::NotMonic, "minimal polynomial must be monic of degree >= 1: " +
                                             minpoly.to_string());
    if (auto factor = minpoly.find_rational_factor())
        throw Error(ErrorKind::Reducible, "polynomial " + minpoly.to_string() +
                                              " is reducible; factor " + factor->to_string());

    // Cauchy bound: all real roots lie in [-U, U].
    mpz_class maxc = 0;
    for (const auto& c : minpoly.coefficients()) maxc = std::max(maxc, mpz_class(abs(c)));
    mpq_class upper = mpq_class(maxc) + 1;

    if (minpoly.count_real_roots(1, upper) == 0)
        throw Error(ErrorKind::NoRealRootAboveOne,
                    "polynomial " + minpoly.to_string() + " has no real root above 1");

    // Isolate the largest real root by Sturm bisection: shrink (lo, hi]
    // keeping count(lo, upper] >= 1 and count(hi, upper] = 0.
    mpq_class lo = 1, hi = upper;
    auto count_above = [&](const mpq_class& x) { return minpoly.count_real_roots(x, upper); };
    while (count_above(lo) > 1 || minpoly.eval(lo) >= 0 || minpoly.eval(hi) <= 0) {
        mpq_class mid = (lo + hi) / 2;
        if (count_above(mid) >= 1)
            lo = mid;
        else
            hi = mid;
        if (minpoly.eval(hi) == 0) {
            // rational root; cannot happen for irreducible degree >= 2,
            // but a degree-1 polynomial x - n lands here
            lo = hi - mpq_class(1, mpz_class(1) << 33);
            break;
        }
    }

    auto field = std::shared_ptr<NumberField>(new NumberField(minpoly, lo, hi));
    mpq_class width_target(1, mpz_class(1) << 32);
    while (field->hi_ - field->lo_ > width_target) field->refine();
    return field;
}

std::pair<mpq_class, mpq_class> NumberField::enclosure() const {
    std::lock_guard<std::mutex> guard(mutex_);
    return {lo_, hi_};
}

void NumberField::refine() const {
    std::lock_guard<std::mutex> guard(mutex_);
    mpq_class mid = (lo_ + hi_) / 2;
    mpq_class v = minpoly_.eval(mid);
    if (v < 0)
        lo_ = mid;
    else if (v > 0)
        hi_ = mid;
    else {
        // exact rational root: degree-1 field
        mpq_class eps = (hi_ - lo_) / 4;
        lo_ = mid - eps;
        hi_ = mid + eps;
    }
}

FieldElement NumberField::zero() const {
    return FieldElement(shared_from_this(), std::vector<mpq_class>(degree(), 0));
}

FieldElement NumberField::one() const { return from_rational(1); }

FieldElement NumberField::from_rational(const mpq_class& q) const {
    std::vector<mpq_class> c(degree(), 0);
    c[0] = q;
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement NumberField::lambda() const {
    std::vector<mpq_class> c(degree(), 0);
    if (degree() == 1) {
        // lambda is rational here: x - n => lambda = n
        c[0] = -mpq_class(minpoly_.coeff(0));
    } else {
        c[1] = 1;
    }
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement NumberField::element(std::vector<mpq_class> coords) const {
    return FieldElement(shared_from_this(), std::move(coords));
}

FieldElement::FieldElement(FieldPtr field, std::vector<mpq_class> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
    if (static_cast<int>(coords_.size()) != field_->degree())
        throw Error(ErrorKind::FieldMismatch, "coordinate vector length does not match field degree");
    for (auto& c : coords_) c.canonicalize();
}

void FieldElement::check_same_field(const FieldElement& o) const {
    if (field_ != o.field_ && !(field_ && o.field_ &&
                                field_->minimal_polynomial() == o.field_->minimal_polynomial()))
        throw Error(ErrorKind::FieldMismatch, "elements belong to different fields");
}

bool FieldElement::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const mpq_class& c) { return c == 0; });
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same_field(o);
    std::vector<mpq_class> c(coords_);
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same_field(o);
    std::vector<mpq_class> c(coords_);
    for (size_t i = 0; i < c.size(); ++i) c[i] -= o.coords_[i];
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-() const {
    std::vector<mpq_class> c(coords_);
    for (auto& x : c) x = -x;
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same_field(o);
    const int d = field_->degree();
    std::vector<mpq_class> prod(2 * d - 1, 0);
    for (int i = 0; i < d; ++i) {
        if (coords_[i] == 0) continue;
        for (int j = 0; j < d; ++j) prod[i + j] += coords_[i] * o.coords_[j];
    }
    // reduce modulo the monic minimal polynomial
    const auto& m = field_->minimal_polynomial().coefficients();
    for (int k = 2 * d - 2; k >= d; --k) {
        if (prod[k] == 0) continue;
        mpq_class f = prod[k];
        prod[k] = 0;
        for (int i = 0; i < d; ++i) prod[k - d + i] -= f * mpq_class(m[i]);
    }
    prod.resize(d);
    return FieldElement(field_, std::move(prod));
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    const int d = field_->degree();
    // extended Euclid over Q[x] between the minimal polynomial and this
    using QP = std::vector<mpq_class>;
    auto trim = [](QP& p) { while (!p.empty() && p.back() == 0) p.pop_back(); };
    QP a(field_->minimal_polynomial().coefficients().size());
    for (size_t i = 0; i < a.size(); ++i) a[i] = mpq_class(field_->minimal_polynomial().coefficients()[i]);
    QP b = coords_;
    trim(b);
    QP sa{}, sb{1}; // coefficients of *this in the Bezout combination
    while (!b.empty()) {
        // a = q*b + r
        QP r = a, q;
        if (r.size() >= b.size()) q.resize(r.size() - b.size() + 1, 0);
        while (r.size() >= b.size() && !r.empty()) {
            mpq_class f = r.back() / b.back();
            size_t shift = r.size() - b.size();
            q[shift] = f;
            for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= f * b[i];
            r.pop_back();
            trim(r);
        }
        // (sa, sb) <- (sb, sa - q*sb)
        QP qsb(q.size() + sb.size(), 0);
        if (!q.empty() && !sb.empty())
            for (size_t i = 0; i < q.size(); ++i)
                for (size_t j = 0; j < sb.size(); ++j) qsb[i + j] += q[i] * sb[j];
        QP ns(std::max(sa.size(), qsb.size()), 0);
        for (size_t i = 0; i < sa.size(); ++i) ns[i] += sa[i];
        for (size_t i = 0; i < qsb.size(); ++i) ns[i] -= qsb[i];
        trim(ns);
        sa = std::move(sb);
        sb = std::move(ns);
        a = std::move(b);
        b = std::move(r);
    }
    // a is the gcd, a nonzero constant (minpoly irreducible)
    if (a.size() != 1)
        throw Error(ErrorKind::DivisionByZero, "gcd with minimal polynomial is not constant");
    std::vector<mpq_class> inv(d, 0);
    for (size_t i = 0; i < sa.size() && i < inv.size(); ++i) inv[i] = sa[i] / a[0];
    return FieldElement(field_, std::move(inv));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    check_same_field(o);
    return *this * o.inverse();
}

FieldElement FieldElement::operator*(const mpq_class& q) const {
    std::vector<mpq_class> c(coords_);
    for (auto& x : c) x *= q;
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator+(const mpq_class& q) const {
    std::vector<mpq_class> c(coords_);
    c[0] += q;
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-(const mpq_class& q) const {
    std::vector<mpq_class> c(coords_);
    c[0] -= q;
    return FieldElement(field_, std::move(c));
}

bool FieldElement::operator==(const FieldElement& o) const {
    check_same_field(o);
    return coords_ == o.coords_;
}

Ordering FieldElement::compare_to_zero() const {
    if (is_zero()) return Ordering::Equal;
    // Nonzero algebraic number: refine the root enclosure until the
    // interval evaluation has a definite sign. Termination is guaranteed.
    while (true) {
        auto [lo, hi] = field_->enclosure();
        Interval v = ieval(coords_, Interval{lo, hi});
        if (v.lo > 0) return Ordering::Greater;
        if (v.hi < 0) return Ordering::Less;
        field_->refine();
    }
}

Ordering FieldElement::compare(const FieldElement& o) const {
    check_same_field(o);
    return (*this - o).compare_to_zero();
}

std::string FieldElement::approx(int digits) const {
    mpz_class scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    mpq_class target(1, scale * 2);
    Interval v{};
    while (true) {
        auto [lo, hi] = field_->enclosure();
        v = ieval(coords_, Interval{lo, hi});
        if (v.hi - v.lo < target) break;
        field_->refine();
    }
    mpq_class mid = (v.lo + v.hi) / 2;
    // round mid to the requested number of fraction digits
    bool neg = mid < 0;
    mpq_class a = abs(mid) * scale + mpq_class(1, 2);
    mpz_class scaled = a.get_num() / a.get_den();
    mpz_class ip = scaled / scale, fp = scaled % scale;
    std::string frac = fp.get_str();
    frac.insert(frac.begin(), digits - frac.size(), '0');
    std::string out = (neg && (ip != 0 || fp != 0)) ? "-" : "";
    out += ip.get_str();
    if (digits > 0) out += "." + frac;
    return out;
}

double FieldElement::to_double() const {
    mpq_class target(1, mpz_class(1) << 40);
    while (true) {
        auto [lo, hi] = field_->enclosure();
        Interval v = ieval(coords_, Interval{lo, hi});
        if (v.hi - v.lo < target) return mpq_class((v.lo + v.hi) / 2).get_d();
        field_->refine();
    }
}

std::string FieldElement::coords_string() const {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (i) out << ",";
        out << coords_[i];
    }
    out << "]";
    return out.str();
}

} // namespace acomp
