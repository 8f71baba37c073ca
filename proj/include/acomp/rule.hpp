#pragma once

#include "acomp/field.hpp"
#include "acomp/polynomial.hpp"

#include <set>
#include <string>
#include <vector>

namespace acomp {

/// A patch of tiles, one lowercase letter per tile, left to right.
using Word = std::string;

/// Square nonnegative integer matrix; entry (i,j) counts occurrences of
/// letter i in the inflation image of letter j.
struct CountMatrix {
    std::vector<std::vector<long long>> entries;

    int dim() const { return static_cast<int>(entries.size()); }
    CountMatrix operator*(const CountMatrix& o) const;
    bool operator==(const CountMatrix& o) const { return entries == o.entries; }
    bool operator<(const CountMatrix& o) const { return entries < o.entries; }

    static CountMatrix identity(int d);
    CountMatrix power(unsigned n) const;

    /// Characteristic polynomial det(xI - M), computed exactly.
    IntPolynomial char_poly() const;

    std::string to_string() const;
    /// Parses "[[1,1],[1,0]]".
    static CountMatrix parse(const std::string& text);
};

/// Primitivity: some power M^k with k <= (d-1)*d + 1 is entrywise positive.
bool is_primitive(const CountMatrix& m);

/// Inflation rule: an ordered alphabet a, b, c, ... and one nonempty image
/// word per letter.
struct InflationRule {
    int alphabet_size = 0;
    std::vector<Word> images;

    char letter(int i) const { return static_cast<char>('a' + i); }
    int index(char c) const { return c - 'a'; }
    const Word& image(char c) const { return images[index(c)]; }

    /// Canonical bracketed form with no whitespace, e.g. "[ab,a]".
    std::string to_string() const;

    bool operator==(const InflationRule& o) const {
        return alphabet_size == o.alphabet_size && images == o.images;
    }
    bool operator<(const InflationRule& o) const {
        return std::tie(alphabet_size, images) < std::tie(o.alphabet_size, o.images);
    }
};

/// Parses "[w1,w2,...,wn]"; whitespace around brackets/commas is tolerated.
/// Letters used must be among the first n letters.
InflationRule parse_rule(const std::string& text);

CountMatrix count_matrix(const InflationRule& rule);

InflationRule reverse_rule(const InflationRule& rule);
InflationRule compose_rules(const InflationRule& outer, const InflationRule& inner);
InflationRule power_rule(const InflationRule& rule, unsigned n);

Word inflate(const InflationRule& rule, const Word& w);
Word inflate_iter(const InflationRule& rule, Word w, unsigned times);

/// All length-k factors of the substitution language.
std::set<Word> legal_factors(const InflationRule& rule, int k);

/// Exact Perron-Frobenius data: lambda as an element of Q(lambda) and the
/// tile lengths (left PF eigenvector), normalized so letter 'a' has
/// length 1.
struct PerronData {
    FieldPtr field;
    FieldElement lambda;
    std::vector<FieldElement> lengths; // indexed by letter

    const FieldElement& length(char c) const { return lengths[c - 'a']; }
    FieldElement word_length(const Word& w) const;
};

PerronData perron_data(const InflationRule& rule);

} // namespace acomp
