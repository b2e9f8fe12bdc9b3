#pragma once

#include <string>

#include "graycode/perm_core.hpp"

namespace graycode {

// Adjacent index transpositions from 1..n to 2 3 ... n 1.
struct RotationHamiltonPath {
    int n = 0;
    std::vector<Transposition> flips;
};

struct BalancedCadjCode {
    int n = 0;
    TranspositionSequence code;  // OnIndices, cyclic
};

// Directory for the on-disk path cache; empty when unset.
inline constexpr const char* kHampathCacheEnv = "GRAYCODE_HAMPATH_CACHE";

// Backtracking search only, no cache.
RotationHamiltonPath search_hamilton_path(int n);
// Cached lookup, falling back to the search.
RotationHamiltonPath hamilton_path_even(int n);

std::string format_hampath_line(const RotationHamiltonPath& l);
// Returns false on malformed input.
bool parse_hampath_line(const std::string& line, RotationHamiltonPath& out);
bool is_rotation_hamilton_path(const RotationHamiltonPath& l);

// identity -> n 1 2 ... n-1
TranspositionSequence reversed_path(const RotationHamiltonPath& l);

// l of even order n; results have order n+1
TranspositionSequence build_g_cadj(const RotationHamiltonPath& l);
TranspositionSequence build_h_cadj(const RotationHamiltonPath& l);

BalancedCadjCode balanced_cadj(int n);

} // namespace graycode
