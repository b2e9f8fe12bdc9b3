#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graycode/errors.hpp"

namespace graycode {

// 1-based values stored in a 0-based vector: p[i-1] is the entry at position i.
using Permutation = std::vector<int>;

enum class Semantics { OnValues, OnIndices };

struct Transposition {
    int a = 1;
    int b = 2;
    Semantics sem = Semantics::OnValues;

    // Canonicalizes so that a < b.
    static Transposition make(int x, int y, Semantics s = Semantics::OnValues);

    std::pair<int, int> key() const { return {a, b}; }
    friend bool operator==(const Transposition&, const Transposition&) = default;
    friend auto operator<=>(const Transposition&, const Transposition&) = default;
};

Permutation identity(int n);
bool is_permutation(const Permutation& p);
std::string to_string(const Permutation& p);
std::string to_string(const Transposition& t);

// Cycle (c0 c1 ... ck) on [n]: c0 -> c1 -> ... -> ck -> c0.
Permutation cycle(int n, const std::vector<int>& c);
// Cycle k -> k+1 -> ... -> m -> k.
Permutation cycle_range(int n, int k, int m);
// (sigma o tau)(x) = sigma(tau(x))
Permutation compose(const Permutation& sigma, const Permutation& tau);
Permutation power(const Permutation& sigma, int k);
Permutation inverse(const Permutation& sigma);

Permutation apply_transposition(const Transposition& t, const Permutation& pi);
void apply_in_place(const Transposition& t, Permutation& pi);

// entry i of the result is sigma(pi_i)
Permutation act_on_values(const Permutation& sigma, const Permutation& pi);
// entry i of the result is pi_{phi(i)}
Permutation act_on_indices(const Permutation& phi, const Permutation& pi);

Transposition map_transposition(const Permutation& sigma, const Transposition& t);

struct TranspositionSequence {
    int n = 0;
    Permutation start;
    std::vector<Transposition> flips;
    bool cyclic = false;

    Semantics semantics() const;
    Permutation end() const;
    // start plus the permutation after every flip
    std::vector<Permutation> replay() const;
    // The single transposition taking end() back to start, if there is one.
    std::optional<Transposition> closing() const;
};

// Throws ConstructionError if flips mix semantics or leave [n].
void check_homogeneous(const TranspositionSequence& s);

using TranspositionMultiset = std::map<std::pair<int, int>, long long>;

TranspositionMultiset transition_counts(const TranspositionSequence& s, bool include_closing);
long long total(const TranspositionMultiset& m);

struct DeviationPair {
    TranspositionMultiset plus;
    TranspositionMultiset minus;
    long long baseline = 0;
};

long long factorial(int n);
DeviationPair deviations(const TranspositionSequence& s);

// Compact key for hashing permutations of order <= 16.
std::uint64_t perm_key(const Permutation& p);

} // namespace graycode
