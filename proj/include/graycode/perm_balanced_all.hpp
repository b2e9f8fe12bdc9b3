#pragma once

#include <optional>

#include "graycode/perm_core.hpp"

namespace graycode {

struct BalancedAllCode {
    int n = 0;
    TranspositionSequence code;  // OnValues, cyclic for n >= 2
    std::optional<Transposition> closing;
};

enum class Direction { Left, Right };

struct AlmostBalancedCode {
    int n = 0;
    TranspositionSequence code;  // OnValues, open
    Direction direction = Direction::Left;
};

BalancedAllCode base_code_n3();
BalancedAllCode base_code_n1();

// H = sigma^2(G) with sigma = (1 ... n); 12...n -> 2 1 3...n
TranspositionSequence derive_h_from_g(const BalancedAllCode& g);

// g of odd order n; result has order n+1
AlmostBalancedCode build_l(const BalancedAllCode& g);
AlmostBalancedCode build_r(const BalancedAllCode& g);

// l of even order n; result has order n+1
BalancedAllCode balanced_from_l(const AlmostBalancedCode& l);

// g of odd order n-2; result of order n runs 23...(n-1)1n -> n12...(n-1)
TranspositionSequence second_code_h(const BalancedAllCode& g);

BalancedAllCode balanced_odd(int n);
BalancedAllCode balanced_even(int n);
BalancedAllCode balanced(int n);

// Lifts a balanced code of order m to a 2(m-2)!-rainbow cycle in S_n.
TranspositionSequence lift_rainbow(const BalancedAllCode& base, int n);

} // namespace graycode
