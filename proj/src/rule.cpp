#include "acomp/rule.hpp"

#include "acomp/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace acomp {

CountMatrix CountMatrix::identity(int d) {
    CountMatrix m;
    m.entries.assign(d, std::vector<long long>(d, 0));
    for (int i = 0; i < d; ++i) m.entries[i][i] = 1;
    return m;
}

CountMatrix CountMatrix::operator*(const CountMatrix& o) const {
    const int d = dim();
    CountMatrix r;
    r.entries.assign(d, std::vector<long long>(d, 0));
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
            if (entries[i][k] == 0) continue;
            for (int j = 0; j < d; ++j) r.entries[i][j] += entries[i][k] * o.entries[k][j];
        }
    return r;
}

CountMatrix CountMatrix::power(unsigned n) const {
    CountMatrix r = identity(dim());
    CountMatrix base = *this;
    while (n) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

IntPolynomial CountMatrix::char_poly() const {
    // Faddeev-LeVerrier over the rationals; result is integral.
    const int d = dim();
    std::vector<std::vector<mpq_class>> M(d, std::vector<mpq_class>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) M[i][j] = mpq_class(static_cast<long>(entries[i][j]));

    std::vector<mpq_class> c(d + 1, 0);
    c[d] = 1;
    std::vector<std::vector<mpq_class>> A(d, std::vector<mpq_class>(d, 0));
    for (int k = 1; k <= d; ++k) {
        // A <- M * (A + c_{d-k+1} I)
        std::vector<std::vector<mpq_class>> B = A;
        for (int i = 0; i < d; ++i) B[i][i] += c[d - k + 1];
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                mpq_class s = 0;
                for (int l = 0; l < d; ++l) s += M[i][l] * B[l][j];
                A[i][j] = s;
            }
        mpq_class tr = 0;
        for (int i = 0; i < d; ++i) tr += A[i][i];
        c[d - k] = -tr / k;
    }
    std::vector<mpz_class> coeffs(d + 1);
    for (int i = 0; i <= d; ++i) {
        mpq_class q = c[i];
        q.canonicalize();
        if (q.get_den() != 1)
            throw Error(ErrorKind::ReducibleSpectrum, "non-integral characteristic polynomial");
        coeffs[i] = q.get_num();
    }
    return IntPolynomial(std::move(coeffs));
}

std::string CountMatrix::to_string() const {
    std::ostringstream out;
    out << "[";
    for (int i = 0; i < dim(); ++i) {
        if (i) out << ",";
        out << "[";
        for (int j = 0; j < dim(); ++j) {
            if (j) out << ",";
            out << entries[i][j];
        }
        out << "]";
    }
    out << "]";
    return out.str();
}

CountMatrix CountMatrix::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.size() < 4 || s.front() != '[' || s.back() != ']')
        throw Error(ErrorKind::SyntaxError, "matrix must look like [[1,1],[1,0]]");
    CountMatrix m;
    size_t i = 1;
    while (i < s.size() - 1) {
        if (s[i] == ',') { ++i; continue; }
        if (s[i] != '[') throw Error(ErrorKind::SyntaxError, "expected '[' in matrix row");
        size_t end = s.find(']', i);
        if (end == std::string::npos) throw Error(ErrorKind::SyntaxError, "unterminated matrix row");
        std::vector<long long> row;
        std::stringstream ss(s.substr(i + 1, end - i - 1));
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                row.push_back(std::stoll(item));
            } catch (...) {
                throw Error(ErrorKind::SyntaxError, "bad matrix entry '" + item + "'");
            }
            if (row.back() < 0) throw Error(ErrorKind::SyntaxError, "negative matrix entry");
        }
        m.entries.push_back(std::move(row));
        i = end + 1;
    }
    if (m.entries.empty()) throw Error(ErrorKind::SyntaxError, "empty matrix");
    for (const auto& row : m.entries)
        if (row.size() != m.entries.size())
            throw Error(ErrorKind::SyntaxError, "matrix must be square");
    return m;
}

bool is_primitive(const CountMatrix& m) {
    const int d = m.dim();
    // Wielandt bound: primitive iff M^((d-1)d+1) > 0; test with boolean
    // matrices so entries stay small.
    std::vector<std::vector<bool>> b(d, std::vector<bool>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) b[i][j] = m.entries[i][j] > 0;
    auto positive = [&](const std::vector<std::vector<bool>>& x) {
        for (const auto& row : x)
            for (bool v : row)
                if (!v) return false;
        return true;
    };
    auto mul = [&](const std::vector<std::vector<bool>>& x, const std::vector<std::vector<bool>>& y) {
        std::vector<std::vector<bool>> r(d, std::vector<bool>(d, false));
        for (int i = 0; i < d; ++i)
            for (int k = 0; k < d; ++k)
                if (x[i][k])
                    for (int j = 0; j < d; ++j)
                        if (y[k][j]) r[i][j] = true;
        return r;
    };
    const int bound = (d - 1) * d + 1;
    auto cur = b;
    for (int k = 1; k <= bound; ++k) {
        if (positive(cur)) return true;
        cur = mul(cur, b);
    }
    return false;
}

std::string InflationRule::to_string() const {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < images.size(); ++i) {
        if (i) out << ",";
        out << images[i];
    }
    out << "]";
    return out.str();
}

InflationRule parse_rule(const std::string& text) {
    size_t open = text.find_first_not_of(" \t\r\n");
    if (open == std::string::npos || text[open] != '[')
        throw Error(ErrorKind::SyntaxError, "rule must start with '[' (position " +
                                                std::to_string(open == std::string::npos ? 0 : open) + ")");
    size_t close = text.find_last_not_of(" \t\r\n");
    if (text[close] != ']')
        throw Error(ErrorKind::SyntaxError,
                    "rule must end with ']' (position " + std::to_string(close) + ")");

    std::vector<Word> images;
    Word cur;
    bool cur_seen = false;
    for (size_t i = open + 1; i < close; ++i) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == ',') {
            if (cur.empty())
                throw Error(ErrorKind::EmptyImage,
                            "empty image word before position " + std::to_string(i));
            images.push_back(cur);
            cur.clear();
            cur_seen = false;
            continue;
        }
        if (c < 'a' || c > 'z')
            throw Error(ErrorKind::SyntaxError, std::string("unexpected character '") + c +
                                                    "' at position " + std::to_string(i));
        cur.push_back(c);
        cur_seen = true;
    }
    if (cur.empty()) {
        if (cur_seen || !images.empty())
            throw Error(ErrorKind::EmptyImage, "empty image word at end of rule");
        throw Error(ErrorKind::SyntaxError, "rule has no image words");
    }
    images.push_back(cur);

    InflationRule rule;
    rule.alphabet_size = static_cast<int>(images.size());
    rule.images = std::move(images);
    if (rule.alphabet_size > 26)
        throw Error(ErrorKind::SyntaxError, "alphabet limited to 26 letters");
    for (const auto& w : rule.images)
        for (char c : w)
            if (rule.index(c) >= rule.alphabet_size)
                throw Error(ErrorKind::UnknownLetter,
                            std::string("letter '") + c + "' exceeds alphabet of size " +
                                std::to_string(rule.alphabet_size));
    return rule;
}

CountMatrix count_matrix(const InflationRule& rule) {
    const int d = rule.alphabet_size;
    CountMatrix m;
    m.entries.assign(d, std::vector<long long>(d, 0));
    for (int j = 0; j < d; ++j)
        for (char c : rule.images[j]) ++m.entries[rule.index(c)][j];
    return m;
}

InflationRule reverse_rule(const InflationRule& rule) {
    InflationRule r = rule;
    for (auto& w : r.images) std::reverse(w.begin(), w.end());
    return r;
}

InflationRule compose_rules(const InflationRule& outer, const InflationRule& inner) {
    if (outer.alphabet_size != inner.alphabet_size)
        throw Error(ErrorKind::AlphabetMismatch, "composing rules over different alphabets");
    InflationRule r;
    r.alphabet_size = outer.alphabet_size;
    r.images.reserve(inner.images.size());
    for (const auto& w : inner.images) r.images.push_back(inflate(outer, w));
    return r;
}

InflationRule power_rule(const InflationRule& rule, unsigned n) {
    if (n == 0) throw Error(ErrorKind::SyntaxError, "rule power must be >= 1");
    InflationRule r = rule;
    for (unsigned i = 1; i < n; ++i) r = compose_rules(rule, r);
    return r;
}

Word inflate(const InflationRule& rule, const Word& w) {
    Word out;
    for (char c : w) out += rule.image(c);
    return out;
}

Word inflate_iter(const InflationRule& rule, Word w, unsigned times) {
    for (unsigned i = 0; i < times; ++i) w = inflate(rule, w);
    return w;
}

std::set<Word> legal_factors(const InflationRule& rule, int k) {
    if (!is_primitive(count_matrix(rule)))
        throw Error(ErrorKind::NotPrimitive, "legal factors require a primitive rule");
    // seed: k-factors of rho^m(x) for every letter, with m the smallest
    // exponent making every image at least k tiles long
    std::vector<Word> words(rule.alphabet_size);
    for (int i = 0; i < rule.alphabet_size; ++i) words[i] = Word(1, rule.letter(i));
    auto min_len = [&] {
        size_t m = words[0].size();
        for (const auto& w : words) m = std::min(m, w.size());
        return m;
    };
    while (min_len() < static_cast<size_t>(k))
        for (auto& w : words) w = inflate(rule, w);

    std::set<Word> factors;
    auto add_factors = [&](const Word& w) {
        bool grew = false;
        for (size_t i = 0; i + k <= w.size(); ++i)
            grew |= factors.insert(w.substr(i, k)).second;
        return grew;
    };
    for (const auto& w : words) add_factors(w);

    // closure under inflation
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Word> snapshot(factors.begin(), factors.end());
        for (const auto& w : snapshot) grew |= add_factors(inflate(rule, w));
    }
    return factors;
}

FieldElement PerronData::word_length(const Word& w) const {
    FieldElement s = field->zero();
    for (char c : w) s = s + length(c);
    return s;
}

PerronData perron_data(const InflationRule& rule) {
    CountMatrix m = count_matrix(rule);
    if (!is_primitive(m))
        throw Error(ErrorKind::NotPrimitive, "rule " + rule.to_string() + " is not primitive");
    IntPolynomial cp = m.char_poly();
    if (cp.find_rational_factor())
        throw Error(ErrorKind::ReducibleSpectrum,
                    "characteristic polynomial " + cp.to_string() + " is reducible");
    if (cp.degree() < 2)
        throw Error(ErrorKind::NotAperiodic,
                    "inflation factor is rational; tiling space would be periodic");

    PerronData pd;
    pd.field = NumberField::create(cp);
    pd.lambda = pd.field->lambda();

    // left eigenvector: solve (M^T - lambda I) w = 0 over Q(lambda)
    const int d = m.dim();
    std::vector<std::vector<FieldElement>> a(d, std::vector<FieldElement>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            a[i][j] = pd.field->from_rational(mpq_class(static_cast<long>(m.entries[j][i])));
            if (i == j) a[i][j] = a[i][j] - pd.lambda;
        }

    // Gaussian elimination; the kernel is 1-dimensional (simple eigenvalue).
    std::vector<int> pivot_col_of_row(d, -1);
    int row = 0;
    std::vector<bool> used_col(d, false);
    for (int col = 0; col < d && row < d; ++col) {
        int pr = -1;
        for (int r = row; r < d; ++r)
            if (!a[r][col].is_zero()) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(a[row], a[pr]);
        FieldElement inv = a[row][col].inverse();
        for (int c2 = 0; c2 < d; ++c2) a[row][c2] = a[row][c2] * inv;
        for (int r = 0; r < d; ++r) {
            if (r == row || a[r][col].is_zero()) continue;
            FieldElement f = a[r][col];
            for (int c2 = 0; c2 < d; ++c2) a[r][c2] = a[r][c2] - f * a[row][c2];
        }
        pivot_col_of_row[row] = col;
        used_col[col] = true;
        ++row;
    }
    int free_col = -1;
    for (int c = 0; c < d; ++c)
        if (!used_col[c]) { free_col = c; break; }
    if (free_col < 0 || row != d - 1)
        throw Error(ErrorKind::ReducibleSpectrum, "eigenvalue is not simple");

    std::vector<FieldElement> w(d, pd.field->zero());
    w[free_col] = pd.field->one();
    for (int r = 0; r < row; ++r) {
        int pc = pivot_col_of_row[r];
        w[pc] = -(a[r][free_col]); // w_pc + a[r][free] * w_free = 0
    }

    // normalize so the first letter has length 1; PF positivity makes w[0] nonzero
    if (w[0].is_zero())
        throw Error(ErrorKind::ReducibleSpectrum, "degenerate PF eigenvector");
    FieldElement inv0 = w[0].inverse();
    pd.lengths.resize(d);
    for (int i = 0; i < d; ++i) pd.lengths[i] = w[i] * inv0;

    for (int i = 0; i < d; ++i) {
        if (pd.lengths[i].compare_to_zero() != Ordering::Greater)
            throw Error(ErrorKind::ReducibleSpectrum, "PF eigenvector is not strictly positive");
        FieldElement lhs = pd.word_length(rule.images[i]);
        FieldElement rhs = pd.lambda * pd.lengths[i];
        if (!(lhs == rhs))
            throw Error(ErrorKind::ReducibleSpectrum, "length equation violated");
    }
    return pd;
}

} // namespace acomp
