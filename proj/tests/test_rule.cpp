#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "acomp/error.hpp"
#include "acomp/rule.hpp"

using namespace acomp;

namespace {
ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::IoError; // sentinel: nothing thrown
}
}

TEST_CASE("rule parsing and canonical text") {
    auto r = parse_rule("[ab,a]");
    CHECK(r.alphabet_size == 2);
    CHECK(r.image('a') == "ab");
    CHECK(r.image('b') == "a");
    CHECK(r.to_string() == "[ab,a]");
    CHECK(parse_rule(" [ ab , a ] ").to_string() == "[ab,a]");
    CHECK(parse_rule("[c,ca,cb]").to_string() == "[c,ca,cb]");

    CHECK(kind_of([] { parse_rule("[ab"); }) == ErrorKind::SyntaxError);
    CHECK(kind_of([] { parse_rule("ab,a]"); }) == ErrorKind::SyntaxError);
    CHECK(kind_of([] { parse_rule("[ac,a]"); }) == ErrorKind::UnknownLetter);
    CHECK(kind_of([] { parse_rule("[ab,]"); }) == ErrorKind::EmptyImage);
}

TEST_CASE("count matrix and characteristic polynomial") {
    auto m = count_matrix(parse_rule("[ab,a]"));
    CHECK(m.entries == std::vector<std::vector<long long>>{{1, 1}, {1, 0}});
    CHECK(m.char_poly() == IntPolynomial::parse("x^2-x-1"));
    CHECK(count_matrix(parse_rule("[c,ca,cb]")).char_poly() ==
          IntPolynomial::parse("x^3-x^2-x-1"));
    CHECK(count_matrix(parse_rule("[bc,a,b]")).char_poly() == IntPolynomial::parse("x^3-x-1"));
    CHECK(CountMatrix::parse("[[1,1],[1,0]]") == m);
    CHECK(m.power(3).entries == std::vector<std::vector<long long>>{{3, 2}, {2, 1}});
}

TEST_CASE("primitivity") {
    CHECK(is_primitive(count_matrix(parse_rule("[ab,a]"))));
    CHECK(is_primitive(count_matrix(parse_rule("[bc,a,b]"))));
    CHECK(!is_primitive(count_matrix(parse_rule("[a,b]"))));
    CHECK(!is_primitive(count_matrix(parse_rule("[b,a]")))); // period two, never positive
}

TEST_CASE("rule algebra: reverse, compose, power") {
    CHECK(reverse_rule(parse_rule("[aab,ba]")).to_string() == "[baa,ab]");
    CHECK(reverse_rule(reverse_rule(parse_rule("[abc,ca,cb]"))) == parse_rule("[abc,ca,cb]"));

    // composition of the plastic mirror pair gives the symmetric product
    auto prod = compose_rules(parse_rule("[bc,a,b]"), parse_rule("[cb,a,b]"));
    CHECK(prod.to_string() == "[ba,bc,a]");
    auto prod2 = compose_rules(parse_rule("[cb,a,b]"), parse_rule("[bc,a,b]"));
    CHECK(prod2.to_string() == "[ab,cb,a]");

    auto fib2 = power_rule(parse_rule("[ab,a]"), 2);
    CHECK(fib2.to_string() == "[aba,ab]");
    CHECK(count_matrix(fib2) == count_matrix(parse_rule("[ab,a]")).power(2));
    CHECK(kind_of([] { compose_rules(parse_rule("[ab,a]"), parse_rule("[abc,ca,b]")); }) ==
          ErrorKind::AlphabetMismatch);
}

TEST_CASE("inflation of words") {
    auto r = parse_rule("[ab,a]");
    CHECK(inflate(r, "a") == "ab");
    CHECK(inflate(r, "ab") == "aba");
    CHECK(inflate_iter(r, "a", 5) == "abaababaabaab");
}

TEST_CASE("legal factors of the golden rule") {
    auto r = parse_rule("[ab,a]");
    CHECK(legal_factors(r, 1) == std::set<Word>{"a", "b"});
    CHECK(legal_factors(r, 2) == std::set<Word>{"aa", "ab", "ba"});
    CHECK(legal_factors(r, 3) == std::set<Word>{"aab", "aba", "baa", "bab"});
    CHECK(legal_factors(r, 4).size() == 5);
}

TEST_CASE("exact Perron-Frobenius data") {
    auto pd = perron_data(parse_rule("[ab,a]"));
    auto lam = pd.lambda;
    CHECK(pd.field->minimal_polynomial() == IntPolynomial::parse("x^2-x-1"));
    CHECK(pd.length('a') == pd.field->one());
    CHECK(pd.length('b') == lam - mpq_class(1));
    // eigenvector property: length(rho(c)) = lambda * length(c)
    CHECK(pd.word_length("ab") == lam * pd.length('a'));
    CHECK(pd.word_length("a") == lam * pd.length('b'));

    auto pd3 = perron_data(parse_rule("[bc,a,b]"));
    CHECK(pd3.field->minimal_polynomial() == IntPolynomial::parse("x^3-x-1"));
    for (char c : {'a', 'b', 'c'}) {
        CHECK(pd3.length(c).compare_to_zero() == Ordering::Greater);
        CHECK(pd3.word_length(parse_rule("[bc,a,b]").image(c)) == pd3.lambda * pd3.length(c));
    }
}

TEST_CASE("perron data rejections") {
    CHECK(kind_of([] { perron_data(parse_rule("[a,b]")); }) == ErrorKind::NotPrimitive);
    CHECK(kind_of([] { perron_data(parse_rule("[ab,ab]")); }) == ErrorKind::ReducibleSpectrum);
    CHECK(kind_of([] { perron_data(parse_rule("[aa]")); }) == ErrorKind::NotAperiodic);
    // printed atlas representative with reducible spectrum
    CHECK(kind_of([] { perron_data(parse_rule("[abbba,aba]")); }) ==
          ErrorKind::ReducibleSpectrum);
}
