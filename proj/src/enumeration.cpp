#include "acomp/enumeration.hpp"

#include "acomp/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace acomp {

namespace {

std::vector<long long> flatten(const CountMatrix& m) {
    std::vector<long long> out;
    for (const auto& row : m.entries) out.insert(out.end(), row.begin(), row.end());
    return out;
}

// lexicographically minimal flattening over simultaneous row/column
// permutations
CountMatrix canonical_matrix(const CountMatrix& m) {
    const int d = m.dim();
    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    CountMatrix best = m;
    std::vector<long long> best_flat = flatten(m);
    do {
        CountMatrix cand = m;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) cand.entries[i][j] = m.entries[perm[i]][perm[j]];
        auto flat = flatten(cand);
        if (flat < best_flat) {
            best_flat = std::move(flat);
            best = std::move(cand);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// elementary symmetric functions of the eigenvalues, directly from the
// entries (d <= 3)
bool matches_charpoly(const std::vector<long long>& e, const IntPolynomial& poly) {
    const int d = static_cast<int>(e.size()) - 1;
    // poly = x^d - e1 x^(d-1) + e2 x^(d-2) - ... ; coefficients low first
    for (int i = 1; i <= d; ++i) {
        mpz_class want = poly.coeff(d - i);
        long sym = static_cast<long>(e[i]);
        mpz_class have((i % 2 == 1) ? -sym : sym);
        if (want != have) return false;
    }
    return true;
}

} // namespace

long long default_max_entry(const IntPolynomial& poly) {
    const int d = poly.degree();
    mpz_class bound = abs(poly.coeff(0)) + abs(poly.coeff(d - 1)) + 3;
    return bound.get_si();
}

std::vector<MatrixClass> matrices_with_charpoly(const IntPolynomial& poly, long long max_entry) {
    const int d = poly.degree();
    if (d != 2 && d != 3)
        throw Error(ErrorKind::DegreeUnsupported,
                    "matrix enumeration supports degrees 2 and 3, got " + std::to_string(d));
    if (!poly.is_monic())
        throw Error(ErrorKind::NotMonic, "characteristic polynomial must be monic");
    if (max_entry < 1) max_entry = 1;

    std::map<std::vector<long long>, CountMatrix> classes;
    CountMatrix m;
    m.entries.assign(d, std::vector<long long>(d, 0));

    auto consider = [&] {
        if (!is_primitive(m)) return;
        CountMatrix canon = canonical_matrix(m);
        classes.emplace(flatten(canon), canon);
    };

    if (d == 2) {
        long long tr = -poly.coeff(1).get_si();
        long long det = poly.coeff(0).get_si();
        for (long long a = 0; a <= std::min(tr, max_entry); ++a) {
            long long dd = tr - a;
            if (dd < 0 || dd > max_entry) continue;
            for (long long b = 0; b <= max_entry; ++b)
                for (long long c = 0; c <= max_entry; ++c) {
                    if (a * dd - b * c != det) continue;
                    m.entries = {{a, b}, {c, dd}};
                    consider();
                }
        }
    } else {
        long long tr = -poly.coeff(2).get_si();
        for (long long a = 0; a <= std::min(tr, max_entry); ++a)
            for (long long e = 0; a + e <= tr && e <= max_entry; ++e) {
                long long i = tr - a - e;
                if (i < 0 || i > max_entry) continue;
                for (long long b = 0; b <= max_entry; ++b)
                    for (long long c = 0; c <= max_entry; ++c)
                        for (long long dd = 0; dd <= max_entry; ++dd)
                            for (long long f = 0; f <= max_entry; ++f)
                                for (long long g = 0; g <= max_entry; ++g)
                                    for (long long h = 0; h <= max_entry; ++h) {
                                        long long e2 = a * e - b * dd + a * i - c * g + e * i - f * h;
                                        long long e3 = a * (e * i - f * h) - b * (dd * i - f * g) +
                                                       c * (dd * h - e * g);
                                        std::vector<long long> sym{0, tr, e2, e3};
                                        if (!matches_charpoly(sym, poly)) continue;
                                        m.entries = {{a, b, c}, {dd, e, f}, {g, h, i}};
                                        consider();
                                    }
            }
    }

    std::vector<MatrixClass> out;
    for (auto& [flat, canon] : classes) out.push_back(MatrixClass{canon, poly});
    return out;
}

std::vector<InflationRule> rules_from_matrix(const CountMatrix& m) {
    if (!is_primitive(m)) throw Error(ErrorKind::NotPrimitive, "matrix is not primitive");
    const int d = m.dim();
    std::vector<std::vector<Word>> per_column(d);
    for (int j = 0; j < d; ++j) {
        Word base;
        for (int i = 0; i < d; ++i)
            base.append(static_cast<size_t>(m.entries[i][j]), static_cast<char>('a' + i));
        if (base.empty()) throw Error(ErrorKind::EmptyImage, "zero column in count matrix");
        std::sort(base.begin(), base.end());
        do per_column[j].push_back(base);
        while (std::next_permutation(base.begin(), base.end()));
    }
    std::vector<InflationRule> out;
    std::vector<size_t> pick(d, 0);
    while (true) {
        InflationRule r;
        r.alphabet_size = d;
        for (int j = 0; j < d; ++j) r.images.push_back(per_column[j][pick[j]]);
        out.push_back(std::move(r));
        int j = d - 1;
        while (j >= 0 && ++pick[j] == per_column[j].size()) pick[j--] = 0;
        if (j < 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

ClassifyResult classify(const std::vector<InflationRule>& rules) {
    ClassifyResult res;
    std::map<std::string, SignatureClass> groups;
    for (const auto& rule : rules) {
        try {
            AsymptoticSignature sig = signature(rule);
            CanonicalSignature canon = canonicalize(sig);
            auto it = groups.find(canon.encoding);
            if (it == groups.end()) {
                SignatureClass cls;
                cls.key = canon.encoding;
                cls.mirror_partner_key = canonicalize(sig.mirrored()).encoding;
                cls.canon = canon;
                it = groups.emplace(canon.encoding, std::move(cls)).first;
            }
            it->second.members.push_back(rule);
        } catch (const Error& e) {
            res.failures.emplace_back(rule, std::string(Error::kind_name(e.kind())) + ": " +
                                                e.what());
        }
    }
    for (auto& [key, cls] : groups) {
        std::sort(cls.members.begin(), cls.members.end());
        res.classes.push_back(std::move(cls));
    }
    return res;
}

} // namespace acomp
