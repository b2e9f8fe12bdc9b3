#include "graycode/perm_core.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace graycode {

Transposition Transposition::make(int x, int y, Semantics s) {
    if (x == y) throw DomainError("transposition needs two distinct elements");
    if (x < 1 || y < 1) throw DomainError("transposition elements are 1-based");
    return Transposition{std::min(x, y), std::max(x, y), s};
}

Permutation identity(int n) {
    Permutation p(n);
    for (int i = 0; i < n; ++i) p[i] = i + 1;
    return p;
}

bool is_permutation(const Permutation& p) {
    std::vector<char> seen(p.size() + 1, 0);
    for (int v : p) {
        if (v < 1 || v > static_cast<int>(p.size()) || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

std::string to_string(const Permutation& p) {
    std::ostringstream os;
    bool wide = p.size() > 9;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (wide && i) os << ' ';
        os << p[i];
    }
    return os.str();
}

std::string to_string(const Transposition& t) {
    return "(" + std::to_string(t.a) + "," + std::to_string(t.b) + ")";
}

Permutation cycle(int n, const std::vector<int>& c) {
    Permutation p = identity(n);
    for (std::size_t i = 0; i < c.size(); ++i) {
        int from = c[i], to = c[(i + 1) % c.size()];
        if (from < 1 || from > n) throw DomainError("cycle element out of range");
        p[from - 1] = to;
    }
    if (!is_permutation(p)) throw DomainError("cycle repeats an element");
    return p;
}

Permutation cycle_range(int n, int k, int m) {
    std::vector<int> c;
    if (k <= m)
        for (int v = k; v <= m; ++v) c.push_back(v);
    else
        for (int v = k; v >= m; --v) c.push_back(v);
    return cycle(n, c);
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
    if (sigma.size() != tau.size()) throw DomainError("compose: order mismatch");
    Permutation r(sigma.size());
    for (std::size_t i = 0; i < tau.size(); ++i) r[i] = sigma[tau[i] - 1];
    return r;
}

Permutation power(const Permutation& sigma, int k) {
    if (k < 0) return power(inverse(sigma), -k);
    Permutation r = identity(static_cast<int>(sigma.size()));
    for (int i = 0; i < k; ++i) r = compose(sigma, r);
    return r;
}

Permutation inverse(const Permutation& sigma) {
    Permutation r(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) r[sigma[i] - 1] = static_cast<int>(i) + 1;
    return r;
}

void apply_in_place(const Transposition& t, Permutation& pi) {
    int n = static_cast<int>(pi.size());
    if (t.a < 1 || t.b > n || t.a >= t.b) throw DomainError("transposition " + to_string(t) + " outside [" + std::to_string(n) + "]");
    if (t.sem == Semantics::OnIndices) {
        std::swap(pi[t.a - 1], pi[t.b - 1]);
        return;
    }
    int i = -1, j = -1;
    for (int k = 0; k < n; ++k) {
        if (pi[k] == t.a) i = k;
        else if (pi[k] == t.b) j = k;
    }
    if (i < 0 || j < 0) throw DomainError("value missing from permutation");
    std::swap(pi[i], pi[j]);
}

Permutation apply_transposition(const Transposition& t, const Permutation& pi) {
    Permutation r = pi;
    apply_in_place(t, r);
    return r;
}

Permutation act_on_values(const Permutation& sigma, const Permutation& pi) {
    if (sigma.size() != pi.size()) throw DomainError("act_on_values: order mismatch");
    Permutation r(pi.size());
    for (std::size_t i = 0; i < pi.size(); ++i) r[i] = sigma[pi[i] - 1];
    return r;
}

Permutation act_on_indices(const Permutation& phi, const Permutation& pi) {
    if (phi.size() != pi.size()) throw DomainError("act_on_indices: order mismatch");
    Permutation r(pi.size());
    for (std::size_t i = 0; i < pi.size(); ++i) r[i] = pi[phi[i] - 1];
    return r;
}

Transposition map_transposition(const Permutation& sigma, const Transposition& t) {
    int n = static_cast<int>(sigma.size());
    if (t.a < 1 || t.b > n) throw DomainError("map_transposition: out of range");
    return Transposition::make(sigma[t.a - 1], sigma[t.b - 1], t.sem);
}

Semantics TranspositionSequence::semantics() const {
    return flips.empty() ? Semantics::OnValues : flips.front().sem;
}

Permutation TranspositionSequence::end() const {
    Permutation p = start;
    for (const auto& t : flips) apply_in_place(t, p);
    return p;
}

std::vector<Permutation> TranspositionSequence::replay() const {
    std::vector<Permutation> out;
    out.reserve(flips.size() + 1);
    out.push_back(start);
    Permutation p = start;
    for (const auto& t : flips) {
        apply_in_place(t, p);
        out.push_back(p);
    }
    return out;
}

std::optional<Transposition> TranspositionSequence::closing() const {
    if (!cyclic) return std::nullopt;
    Permutation e = end();
    std::vector<int> diff;
    for (int i = 0; i < n; ++i)
        if (e[i] != start[i]) diff.push_back(i);
    if (diff.size() != 2) return std::nullopt;
    if (semantics() == Semantics::OnIndices) return Transposition::make(diff[0] + 1, diff[1] + 1, Semantics::OnIndices);
    return Transposition::make(start[diff[0]], start[diff[1]], Semantics::OnValues);
}

void check_homogeneous(const TranspositionSequence& s) {
    if (static_cast<int>(s.start.size()) != s.n || !is_permutation(s.start))
        throw ConstructionError("start is not a permutation of order " + std::to_string(s.n));
    Semantics sem = s.semantics();
    for (const auto& t : s.flips) {
        if (t.sem != sem) throw ConstructionError("sequence mixes value and index transpositions");
        if (t.a < 1 || t.b > s.n || t.a >= t.b) throw ConstructionError("flip " + to_string(t) + " out of range");
    }
}

std::uint64_t perm_key(const Permutation& p) {
    std::uint64_t k = 0;
    for (int v : p) k = (k << 4) | static_cast<std::uint64_t>(v - 1);
    return k;
}

TranspositionMultiset transition_counts(const TranspositionSequence& s, bool include_closing) {
    std::unordered_set<std::uint64_t> seen;
    for (const auto& p : s.replay())
        if (!seen.insert(perm_key(p)).second) throw VerificationError("permutation " + to_string(p) + " repeated");
    TranspositionMultiset m;
    for (const auto& t : s.flips) ++m[t.key()];
    if (include_closing && s.cyclic) {
        auto c = s.closing();
        if (!c) throw VerificationError("cycle does not close with one transposition");
        ++m[c->key()];
    }
    return m;
}

long long total(const TranspositionMultiset& m) {
    long long t = 0;
    for (const auto& [k, v] : m) t += v;
    return t;
}

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

DeviationPair deviations(const TranspositionSequence& s) {
    if (s.n < 2) throw DomainError("deviations need n >= 2");
    auto counts = transition_counts(s, false);
    if (static_cast<long long>(s.flips.size()) + 1 != factorial(s.n))
        throw VerificationError("not a Gray code of all of S_n");
    DeviationPair d;
    d.baseline = 2 * factorial(s.n - 2);
    for (int a = 1; a <= s.n; ++a)
        for (int b = a + 1; b <= s.n; ++b) {
            auto it = counts.find({a, b});
            long long c = it == counts.end() ? 0 : it->second;
            if (c < d.baseline) d.plus[{a, b}] = d.baseline - c;
            if (c > d.baseline) d.minus[{a, b}] = c - d.baseline;
        }
    return d;
}

} // namespace graycode
