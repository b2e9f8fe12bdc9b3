#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "graycode/perm_core.hpp"

namespace support {

using graycode::Permutation;
using graycode::Semantics;
using graycode::Transposition;
using graycode::TranspositionSequence;

// "2134" -> {2,1,3,4}; single digits only
inline Permutation P(const std::string& s) {
    Permutation p;
    for (char c : s) p.push_back(c - '0');
    return p;
}

inline std::string S(const Permutation& p) {
    std::string s;
    for (int v : p) s += std::to_string(v);
    return s;
}

inline Transposition tv(int a, int b) { return Transposition::make(a, b, Semantics::OnValues); }
inline Transposition ti(int a, int b) { return Transposition::make(a, b, Semantics::OnIndices); }

// Naive replay, written out here rather than borrowed from the library.
inline std::vector<Permutation> walk(const TranspositionSequence& s) {
    std::vector<Permutation> out{s.start};
    Permutation cur = s.start;
    for (const auto& t : s.flips) {
        if (t.sem == Semantics::OnIndices) {
            std::swap(cur[t.a - 1], cur[t.b - 1]);
        } else {
            for (int& v : cur) v = v == t.a ? t.b : v == t.b ? t.a : v;
        }
        out.push_back(cur);
    }
    return out;
}

inline std::vector<std::string> walk_strings(const TranspositionSequence& s) {
    std::vector<std::string> out;
    for (const auto& p : walk(s)) out.push_back(S(p));
    return out;
}

inline std::size_t distinct(const std::vector<Permutation>& ps) { return std::set<Permutation>(ps.begin(), ps.end()).size(); }

inline std::map<std::pair<int, int>, long long> tally(const std::vector<Transposition>& ts) {
    std::map<std::pair<int, int>, long long> m;
    for (const auto& t : ts) ++m[{t.a, t.b}];
    return m;
}

// Counts including the flip that closes the cycle, found by comparing ends.
inline std::map<std::pair<int, int>, long long> tally_closed(const TranspositionSequence& s) {
    auto m = tally(s.flips);
    auto ps = walk(s);
    const Permutation& e = ps.back();
    std::vector<int> diff;
    for (int i = 0; i < s.n; ++i)
        if (e[i] != s.start[i]) diff.push_back(i);
    if (diff.size() == 2) {
        bool idx = !s.flips.empty() && s.flips.front().sem == Semantics::OnIndices;
        int a = idx ? diff[0] + 1 : s.start[diff[0]], b = idx ? diff[1] + 1 : s.start[diff[1]];
        ++m[{std::min(a, b), std::max(a, b)}];
    }
    return m;
}

inline long long fact(int n) { return n <= 1 ? 1 : n * fact(n - 1); }

} // namespace support
