#pragma once

#include "acomp/composants.hpp"

#include <string>
#include <vector>

namespace acomp {

/// Relabeling-independent normal form of an AsymptoticSignature. Two
/// signatures have equal encodings exactly when a bijection of their point
/// sets exists that transports the permutation and both partitions.
struct CanonicalSignature {
    int size = 0;
    std::vector<std::vector<int>> left_blocks;  // non-singletons, canonical labels
    std::vector<std::vector<int>> right_blocks;
    std::vector<std::vector<int>> perm_cycles;  // non-singleton cycles
    std::vector<std::vector<int>> orbit_blocks; // all orbits
    std::string encoding;                       // "n=..|L=..|R=..|P=.."
    std::vector<int> labeling;                  // original index -> canonical label
};

CanonicalSignature canonicalize(const AsymptoticSignature& sig);

/// Outcome of an obstruction test. When no obstruction is found, witness
/// holds an explicit index bijection (empty for the partition-only weak
/// test, whose two sides may need different bijections). When an
/// obstruction is found, failed_condition names the first broken
/// requirement.
struct Verdict {
    bool obstructed = false;
    std::string failed_condition;
    std::vector<int> witness;
    std::string note;
};

/// Full comparison: is there one bijection phi with phi p = p~ phi,
/// phi(P_L) = P~_L and phi(P_R) = P~_R?
Verdict isomorphic_strong(const AsymptoticSignature& a, const AsymptoticSignature& b);

/// Partition-only comparison: P_L iso P~_L and P_R iso P~_R as abstract
/// partitions, ignoring the permutation.
Verdict isomorphic_weak(const AsymptoticSignature& a, const AsymptoticSignature& b);

enum class TestMode { Strong, Weak };

/// Compares the rule's signature with its own mirror (partitions
/// exchanged). An obstruction rules out an orientation-reversing local
/// equivalence; absence of one proves nothing.
Verdict mirror_test(const InflationRule& rule, TestMode mode);
Verdict mirror_test(const AsymptoticSignature& sig, TestMode mode);

} // namespace acomp
