#pragma once

// Segment plumbing shared by the permutation recipes.

#include <algorithm>
#include <string>

#include "graycode/perm_core.hpp"

namespace graycode::detail {

inline TranspositionSequence mapped(const Permutation& sigma, const TranspositionSequence& s) {
    TranspositionSequence r{s.n, act_on_values(sigma, s.start), {}, false};
    r.flips.reserve(s.flips.size());
    for (const auto& t : s.flips) r.flips.push_back(map_transposition(sigma, t));
    return r;
}

// same flips read backwards from the end
inline TranspositionSequence reversed(const TranspositionSequence& s) {
    TranspositionSequence r{s.n, s.end(), s.flips, false};
    std::reverse(r.flips.begin(), r.flips.end());
    return r;
}

// same flips, started from the end
inline TranspositionSequence mirrored(const TranspositionSequence& s) {
    return TranspositionSequence{s.n, s.end(), s.flips, false};
}

// append fixed values n+1..N
inline TranspositionSequence lifted(const TranspositionSequence& s, int N) {
    TranspositionSequence r{N, s.start, s.flips, false};
    for (int v = s.n + 1; v <= N; ++v) r.start.push_back(v);
    return r;
}

class Chain {
public:
    explicit Chain(int n) { seq_.n = n; }

    void add(const TranspositionSequence& seg, const char* what) {
        if (!started_) {
            seq_.start = seg.start;
            cur_ = seg.start;
            started_ = true;
        } else if (cur_ != seg.start) {
            throw ConstructionError(std::string(what) + ": segment starts at " + to_string(seg.start) + " but chain is at " + to_string(cur_));
        }
        for (const auto& t : seg.flips) {
            apply_in_place(t, cur_);
            seq_.flips.push_back(t);
        }
    }

    void connect(const Transposition& t) {
        apply_in_place(t, cur_);
        seq_.flips.push_back(t);
    }

    const Permutation& current() const { return cur_; }

    TranspositionSequence take() { return std::move(seq_); }

private:
    TranspositionSequence seq_;
    Permutation cur_;
    bool started_ = false;
};

inline void expect_end(const TranspositionSequence& s, const Permutation& want, const char* what) {
    Permutation e = s.end();
    if (e != want) throw ConstructionError(std::string(what) + ": ends at " + to_string(e) + ", expected " + to_string(want));
}

} // namespace graycode::detail
