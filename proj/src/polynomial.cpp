#include "acomp/polynomial.hpp"

#include "acomp/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace acomp {

namespace {

// Signed divisors of n (nonzero), for the rational root sieve and
// constant-term candidates in trial factorization.
std::vector<mpz_class> signed_divisors(const mpz_class& n) {
    std::vector<mpz_class> out;
    mpz_class a = abs(n);
    for (mpz_class d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            out.push_back(d);
            out.push_back(-d);
            mpz_class e = a / d;
            if (e != d) {
                out.push_back(e);
                out.push_back(-e);
            }
        }
    }
    return out;
}

int sign_of(const mpq_class& q) { return sgn(q); }

using QPoly = std::vector<mpq_class>; // low degree first, trimmed

void q_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly q_rem(QPoly a, const QPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        mpq_class f = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        a.pop_back();
        q_trim(a);
    }
    return a;
}

mpq_class q_eval(const QPoly& p, const mpq_class& x) {
    mpq_class r = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
    return r;
}

} // namespace

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

void IntPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(const mpz_class& c) {
    return IntPolynomial({c});
}

IntPolynomial IntPolynomial::monomial(unsigned n) {
    std::vector<mpz_class> c(n + 1, 0);
    c[n] = 1;
    return IntPolynomial(std::move(c));
}

const mpz_class& IntPolynomial::leading() const {
    if (coeffs_.empty())
        throw Error(ErrorKind::SyntaxError, "leading coefficient of the zero polynomial");
    return coeffs_.back();
}

bool IntPolynomial::is_monic() const {
    return !coeffs_.empty() && coeffs_.back() == 1;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<mpz_class> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<mpz_class> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return IntPolynomial();
    std::vector<mpz_class> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return IntPolynomial();
    std::vector<mpz_class> c(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * mpz_class(i);
    return IntPolynomial(std::move(c));
}

mpq_class IntPolynomial::eval(const mpq_class& x) const {
    mpq_class r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
}

mpz_class IntPolynomial::eval(const mpz_class& x) const {
    mpz_class r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
}

std::optional<IntPolynomial> IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
    if (divisor.is_zero()) return std::nullopt;
    std::vector<mpz_class> rem = coeffs_;
    if (rem.size() < divisor.coeffs_.size()) return std::nullopt;
    std::vector<mpz_class> quot(rem.size() - divisor.coeffs_.size() + 1, 0);
    const auto& d = divisor.coeffs_;
    for (size_t step = quot.size(); step-- > 0;) {
        mpz_class num = rem[step + d.size() - 1];
        if (num % d.back() != 0) return std::nullopt;
        mpz_class q = num / d.back();
        quot[step] = q;
        for (size_t i = 0; i < d.size(); ++i) rem[step + i] -= q * d[i];
    }
    for (const auto& r : rem)
        if (r != 0) return std::nullopt;
    return IntPolynomial(std::move(quot));
}

std::optional<IntPolynomial> IntPolynomial::find_rational_factor() const {
    const int d = degree();
    if (d <= 1) return std::nullopt;
    if (!is_monic())
        throw Error(ErrorKind::NotMonic, "irreducibility test expects a monic polynomial");

    // Degree-1 factors: integer roots dividing the constant term.
    if (coeffs_[0] == 0) return IntPolynomial({0, 1});
    for (const auto& r : signed_divisors(coeffs_[0])) {
        if (eval(r) == 0) return IntPolynomial({-r, 1});
    }

    // Monic integer factors of degree 2..d/2. Non-leading coefficients of
    // a monic integer factor of degree fd are bounded by the Mignotte-style
    // bound 2^fd * (1 + sum |a_i|).
    mpz_class height = 1;
    for (const auto& a : coeffs_) height += abs(a);

    for (int fd = 2; fd <= d / 2; ++fd) {
        mpz_class bound = height << fd;
        // constant term of the factor divides coeffs_[0]
        std::vector<mpz_class> cand(fd + 1, 0);
        cand[fd] = 1;
        auto consts = signed_divisors(coeffs_[0]);
        // enumerate middle coefficients in [-bound, bound]
        std::vector<mpz_class> mid(fd - 1, -bound);
        for (const auto& c0 : consts) {
            cand[0] = c0;
            std::fill(mid.begin(), mid.end(), -bound);
            bool done = false;
            while (!done) {
                for (int i = 0; i < fd - 1; ++i) cand[i + 1] = mid[i];
                IntPolynomial f{std::vector<mpz_class>(cand)};
                if (divide_exact(f)) return f;
                int pos = 0;
                while (pos < fd - 1) {
                    if (++mid[pos] <= bound) break;
                    mid[pos] = -bound;
                    ++pos;
                }
                if (pos == fd - 1) done = true;
            }
        }
    }
    return std::nullopt;
}

int IntPolynomial::count_real_roots(const mpq_class& lo, const mpq_class& hi) const {
    // Sturm chain with rational coefficients.
    QPoly p0(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) p0[i] = mpq_class(coeffs_[i]);
    q_trim(p0);
    if (p0.size() <= 1) return 0;
    IntPolynomial der = derivative();
    QPoly p1(der.coefficients().size());
    for (size_t i = 0; i < p1.size(); ++i) p1[i] = mpq_class(der.coefficients()[i]);

    std::vector<QPoly> chain{p0, p1};
    while (chain.back().size() > 1) {
        QPoly r = q_rem(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }

    auto variations = [&](const mpq_class& x) {
        int v = 0, last = 0;
        for (const auto& p : chain) {
            int s = sign_of(q_eval(p, x));
            if (s == 0) continue;
            if (last != 0 && s != last) ++v;
            last = s;
        }
        return v;
    };
    return variations(lo) - variations(hi);
}

IntPolynomial IntPolynomial::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw Error(ErrorKind::SyntaxError, "empty polynomial");

    if (s.front() == '[') {
        if (s.back() != ']')
            throw Error(ErrorKind::SyntaxError, "unterminated coefficient list");
        std::vector<mpz_class> coeffs;
        std::string body = s.substr(1, s.size() - 2);
        if (!body.empty()) {
            std::stringstream ss(body);
            std::string item;
            while (std::getline(ss, item, ',')) {
                if (item.empty())
                    throw Error(ErrorKind::SyntaxError, "empty coefficient in list");
                try {
                    coeffs.emplace_back(item);
                } catch (const std::invalid_argument&) {
                    throw Error(ErrorKind::SyntaxError, "bad coefficient '" + item + "'");
                }
            }
        }
        return IntPolynomial(std::move(coeffs));
    }

    // term grammar: [+-]? digits? ('x' ('^' digits)?)?
    std::vector<mpz_class> coeffs;
    size_t i = 0;
    auto add_term = [&](const mpz_class& c, unsigned exp) {
        if (coeffs.size() <= exp) coeffs.resize(exp + 1, 0);
        coeffs[exp] += c;
    };
    while (i < s.size()) {
        mpz_class sign = 1;
        if (s[i] == '+') {
            ++i;
        } else if (s[i] == '-') {
            sign = -1;
            ++i;
        }
        if (i >= s.size())
            throw Error(ErrorKind::SyntaxError, "dangling sign at position " + std::to_string(i));
        std::string digits;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits.push_back(s[i++]);
        mpz_class coef = digits.empty() ? mpz_class(1) : mpz_class(digits);
        unsigned exp = 0;
        if (i < s.size() && s[i] == 'x') {
            ++i;
            exp = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string ed;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ed.push_back(s[i++]);
                if (ed.empty())
                    throw Error(ErrorKind::SyntaxError,
                                "missing exponent at position " + std::to_string(i));
                exp = static_cast<unsigned>(std::stoul(ed));
            }
        } else if (digits.empty()) {
            throw Error(ErrorKind::SyntaxError,
                        std::string("unexpected character '") + s[i] + "' at position " + std::to_string(i));
        }
        add_term(sign * coef, exp);
    }
    return IntPolynomial(std::move(coeffs));
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int e = degree(); e >= 0; --e) {
        const mpz_class& c = coeffs_[e];
        if (c == 0) continue;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? "-" : "+");
        }
        if (e == 0 || a != 1) out << a.get_str();
        if (e >= 1) out << "x";
        if (e >= 2) out << "^" << e;
    }
    return out.str();
}

} // namespace acomp
