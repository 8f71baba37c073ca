#pragma once

#include "acomp/invariants.hpp"

#include <string>
#include <vector>

namespace acomp {

/// Primitive count matrix with prescribed characteristic polynomial,
/// canonical under simultaneous row/column permutation.
struct MatrixClass {
    CountMatrix representative;
    IntPolynomial charpoly;
};

/// Entry bound used when the caller gives none: |constant| + |trace| + 3.
long long default_max_entry(const IntPolynomial& poly);

/// Exhaustive search over nonnegative d x d matrices (d in {2,3}) with
/// entries <= max_entry; primitive matrices only, one per simultaneous-
/// permutation class, in deterministic order.
std::vector<MatrixClass> matrices_with_charpoly(const IntPolynomial& poly, long long max_entry);

/// All tile orderings realizing the matrix: per column, every distinct
/// arrangement of its letter multiset; cartesian product over columns,
/// lexicographic order.
std::vector<InflationRule> rules_from_matrix(const CountMatrix& m);

/// Rules sharing one canonical signature encoding. A class whose
/// mirror_partner_key equals its own key has no composant-level
/// asymmetry obstruction.
struct SignatureClass {
    std::string key;
    std::string mirror_partner_key;
    std::vector<InflationRule> members;
    CanonicalSignature canon;
};

struct ClassifyResult {
    std::vector<SignatureClass> classes;
    std::vector<std::pair<InflationRule, std::string>> failures; // rule, diagnostic
};

ClassifyResult classify(const std::vector<InflationRule>& rules);

} // namespace acomp
