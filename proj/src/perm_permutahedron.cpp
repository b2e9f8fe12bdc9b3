#include "graycode/perm_permutahedron.hpp"

#include <algorithm>

namespace graycode {

namespace {

Transposition ti(int a, int b) { return Transposition::make(a, b, Semantics::OnIndices); }

// Drops the first (1,2) and returns the rest of the cycle, starting right after it.
std::vector<Transposition> open_at_first_12(const std::vector<Transposition>& cyc) {
    auto it = std::find(cyc.begin(), cyc.end(), ti(1, 2));
    if (it == cyc.end()) throw ConstructionError("rainbow: cycle has no (1,2)");
    std::vector<Transposition> p(it + 1, cyc.end());
    p.insert(p.end(), cyc.begin(), it);
    return p;
}

PermutahedronRainbow finish(int n, int r, std::vector<Transposition> cyc) {
    TranspositionSequence s{n, identity(n), std::move(cyc), true};
    if (s.end() != identity(n)) throw ConstructionError("rainbow: cycle does not return to the identity");
    // stored without the closing flip
    s.flips.pop_back();
    return PermutahedronRainbow{n, r, std::move(s)};
}

} // namespace

PermutahedronRainbow rainbow2(int n) {
    if (n < 5) throw DomainError("rainbow2: n must be >= 5");
    std::vector<Transposition> cyc{ti(1, 2), ti(2, 3), ti(4, 5), ti(2, 3), ti(3, 4), ti(1, 2), ti(3, 4), ti(4, 5)};
    for (int m = 5; m < n; ++m) {
        std::vector<Transposition> p = open_at_first_12(cyc);
        cyc.clear();
        cyc.push_back(ti(m, m + 1));
        cyc.insert(cyc.end(), p.begin(), p.end());
        cyc.push_back(ti(m, m + 1));
        cyc.push_back(ti(1, 2));
    }
    return finish(n, 2, std::move(cyc));
}

PermutahedronRainbow rainbow3(int n) {
    if (n < 3 || n % 2 == 0) throw DomainError("rainbow3: n must be odd and >= 3");
    std::vector<Transposition> cyc{ti(1, 2), ti(2, 3), ti(1, 2), ti(2, 3), ti(1, 2), ti(2, 3)};
    for (int m = 3; m < n; m += 2) {
        std::vector<Transposition> p = open_at_first_12(cyc);
        cyc = {ti(m + 1, m + 2), ti(m, m + 1)};
        cyc.insert(cyc.end(), p.begin(), p.end());
        for (auto t : {ti(m + 1, m + 2), ti(1, 2), ti(m, m + 1), ti(m + 1, m + 2), ti(m, m + 1)}) cyc.push_back(t);
    }
    return finish(n, 3, std::move(cyc));
}

} // namespace graycode
