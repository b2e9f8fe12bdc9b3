#pragma once

#include "graycode/perm_core.hpp"

namespace graycode {

struct PermutahedronRainbow {
    int n = 0;
    int r = 0;
    TranspositionSequence code;  // OnIndices, cyclic, starts at the identity
};

PermutahedronRainbow rainbow2(int n);  // n >= 5
PermutahedronRainbow rainbow3(int n);  // odd n >= 3

} // namespace graycode
