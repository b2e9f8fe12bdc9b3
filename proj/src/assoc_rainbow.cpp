#include "graycode/assoc_rainbow.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <set>

namespace graycode {

namespace {

class Walker {
public:
    explicit Walker(Triangulation start) : cur_(std::move(start)) {}

    Diagonal flip_one(const Diagonal& d) {
        auto [next, nd] = flip(cur_, d);
        flips_.push_back(d);
        cur_ = std::move(next);
        return nd;
    }

    FlipOrdering run(const FlipOrdering& o) {
        FlipOrdering induced;
        induced.reserve(o.size());
        for (const auto& d : o) induced.push_back(flip_one(d));
        return induced;
    }

    // k rotations in direction dir, the first ordering taken from endpoint v
    void rotations(int v, Turn dir, int k) {
        FlipOrdering o = rotation_ordering(cur_, v, dir);
        for (int i = 0; i < k; ++i) o = run(o);
    }

    // From the star at v back to t, undoing t's star path.
    void enter(const Triangulation& t, int v) {
        OrderingResult r = apply_ordering(t, star_ordering(t, v));
        if (!(r.result == cur_)) throw ConstructionError("enter: walk is not at the star of " + std::to_string(v));
        for (auto it = r.induced.rbegin(); it != r.induced.rend(); ++it) flip_one(*it);
        if (!(cur_ == t)) throw ConstructionError("enter: did not reach the target triangulation");
    }

    // To the star at v.
    void leave(int v) {
        run(star_ordering(cur_, v));
        if (!(cur_ == star(cur_.n(), v))) throw ConstructionError("leave: did not reach the star of " + std::to_string(v));
    }

    const Triangulation& current() const { return cur_; }
    std::vector<Diagonal>& flips() { return flips_; }

private:
    Triangulation cur_;
    std::vector<Diagonal> flips_;
};

long long choose3(long long m) { return m < 3 ? 0 : m * (m - 1) * (m - 2) / 6; }

} // namespace

int label_length(int n) { return (n - 8) / 2; }

bool label_capacity_ok(int n) {
    long long m = label_length(n);
    if (m < 0 || m > 40) return false;
    return (1LL << m) >= 4 * m + 7 * (2 * m + 9) * choose3(m);
}

std::vector<Label> select_labels(int n) {
    if (n < 45) throw DomainError("select_labels: n must be >= 45");
    int m = label_length(n);
    if (m > 30) throw DomainError("select_labels: n too large for the label search");
    std::vector<Label> out;
    std::vector<std::uint32_t> bits;
    for (std::uint64_t x = 0; x < (1ULL << m) && static_cast<int>(out.size()) < n; ++x) {
        Label w(m, 'l');
        for (int j = 0; j < m; ++j)
            if (x >> (m - 1 - j) & 1) w[j] = 'r';
        auto bl = blocks(w);
        if (bl.size() < 3) continue;
        if (!std::any_of(bl.begin(), bl.end() - 1, [](const std::string& b) { return b.size() >= 2; })) continue;
        auto wb = static_cast<std::uint32_t>(x);
        if (!std::all_of(bits.begin(), bits.end(), [&](std::uint32_t o) { return std::popcount(o ^ wb) >= 4; })) continue;
        out.push_back(w);
        bits.push_back(wb);
    }
    if (static_cast<int>(out.size()) < n) throw ConstructionError("select_labels: greedy ran out of labels");
    return out;
}

AlmostSymmetricZigzag almost_symmetric(int n, const Label& label, int i) {
    if (n < 9) throw DomainError("almost_symmetric: n must be >= 9");
    if (static_cast<int>(label.size()) != label_length(n)) throw DomainError("almost_symmetric: label must have length floor((n-8)/2)");
    if (i < 1 || i > n) throw DomainError("almost_symmetric: endpoint out of range");
    Word x = n % 2 == 0 ? "rlrr" : "lrrll";
    if (i % 2 == 0) x = bar(x);
    Word w = label + x + bar(label);
    return AlmostSymmetricZigzag{from_word(n, i, w), label, i, w};
}

AssocRainbowCycle two_rainbow_cycle(const Triangulation& t, int endpoint) {
    int n = t.n();
    if (!is_zigzag(t)) throw DomainError("two_rainbow_cycle: not a zigzag triangulation");
    if (static_cast<int>(rotation_family(t).size()) != n) throw DomainError("two_rainbow_cycle: triangulation has a rotational symmetry");
    Walker w(t);
    w.rotations(endpoint, Turn::Clockwise, n);
    if (!(w.current() == t)) throw ConstructionError("two_rainbow_cycle: rotations did not close");
    return AssocRainbowCycle{n, 2, t, std::move(w.flips())};
}

AssocRainbowCycle two_rainbow_cycle(const AlmostSymmetricZigzag& t) { return two_rainbow_cycle(t.base, t.endpoint); }

OneRainbowPath one_rainbow_path(int n, int e) {
    if (n < 5) throw DomainError("one_rainbow_path: n must be >= 5");
    Word w;
    for (int i = 0; i < n - 4; ++i) w.push_back(i % 2 == 0 ? 'r' : 'l');
    Triangulation t = from_word(n, e, w);
    Walker walk(t);
    // rotation steps, not triangulations: T, T(pi), ... T(pi^steps)
    int steps = n % 2 == 0 ? (n - 2) / 2 : (n - 3) / 2;
    std::set<Diagonal> seen(t.diagonals().begin(), t.diagonals().end());
    FlipOrdering o = rotation_ordering(t, n % 2 == 0 ? other_endpoint(t, e) : e, Turn::Clockwise);
    for (int s = 0; s < steps; ++s) {
        o = walk.run(o);
        seen.insert(o.begin(), o.end());
    }
    if (n % 2 == 1) {
        // the mirrored diagonals, flipped in directly
        std::set<Diagonal> missing;
        for (int a = 1; a <= n; ++a)
            for (int b = a + 2; b <= n; ++b)
                if (!(a == 1 && b == n) && !seen.count(Diagonal{a, b})) missing.insert(Diagonal{a, b});
        // measured from e so the order turns with the path; a fixed label
        // order can undo itself on the way to the next star
        auto rel = [&](const Diagonal& d) {
            int x = ((d.a - e) % n + n) % n, y = ((d.b - e) % n + n) % n;
            return std::pair{std::min(x, y), std::max(x, y)};
        };
        while (!missing.empty()) {
            std::optional<Diagonal> best;
            for (const auto& d : walk.current().diagonals()) {
                if (!missing.count(flip(walk.current(), d).second)) continue;
                if (!best || rel(d) < rel(*best)) best = d;
            }
            if (!best) throw ConstructionError("one_rainbow_path: matching diagonal not reachable");
            missing.erase(walk.flip_one(*best));
        }
    }
    Triangulation end = walk.current();
    return OneRainbowPath{t, std::move(walk.flips()), std::move(end)};
}

int one_rainbow_slot(int n, int r) {
    if (r % 2 == 0 || r == 1) return 0;
    int fams = (r + 1) / 2 - 1;
    // For odd n the path's word has the l-count of the even-indexed families;
    // keep it between two odd-indexed ones.
    if (n % 2 == 1 && fams % 2 == 1 && fams > 1) return fams - 1;
    return fams;
}

AssocRainbowCycle r_rainbow_cycle(int n, int r) {
    if (n < 45) throw DomainError("r_rainbow_cycle: n must be >= 45");
    if (r < 1 || r > 2 * n + 2) throw DomainError("r_rainbow_cycle: r must lie in [1, 2n+2]");

    if (r == 1) {
        OneRainbowPath p = one_rainbow_path(n, 1);
        Walker w(p.end);
        w.rotations(2, Turn::Clockwise, 1);
        if (!(w.current() == p.start)) throw ConstructionError("r_rainbow_cycle: 1-rainbow path does not close");
        std::vector<Diagonal> flips = std::move(p.flips);
        flips.insert(flips.end(), w.flips().begin(), w.flips().end());
        return AssocRainbowCycle{n, 1, p.start, std::move(flips)};
    }

    std::vector<Label> labels = select_labels(n);
    int k = r % 2 ? (r + 1) / 2 : r / 2;
    int fams = k - 1;
    int slot = one_rainbow_slot(n, r);

    // Even n: an odd family rotated from its far endpoint passes through
    // centrally symmetric zigzags, and from its own endpoint it backs out
    // along the entry path. With l and r swapped in its label the own
    // endpoint is clean.
    auto swapped = [&](int i) { return n % 2 == 0 && i % 2 == 1; };
    for (int i = 1; i <= fams; ++i) {
        if (!swapped(i)) continue;
        for (char& c : labels[i - 1]) c = c == 'l' ? 'r' : 'l';
    }
    for (int i = 1; i <= fams; ++i)
        for (int j = 1; j < i; ++j) {
            int d = 0;
            for (std::size_t q = 0; q < labels[i - 1].size(); ++q) d += labels[i - 1][q] != labels[j - 1][q];
            if (d < 4) throw ConstructionError("r_rainbow_cycle: family labels too close");
        }

    Triangulation s1 = star(n, 1);
    Walker w(s1);
    for (int i = 1; i <= fams; ++i) {
        if (i == slot) {
            OneRainbowPath p = one_rainbow_path(n, i);
            w.enter(p.start, i);
            for (const auto& d : p.flips) w.flip_one(d);
        } else {
            Triangulation t = almost_symmetric(n, labels[i - 1], i).base;
            // The l count of the middle word fixes where the other endpoint
            // sits, and with it the last step into a star. Odd n with every
            // star in use closes an odd ring of families, so the last family
            // gets a middle word with a third l count.
            if (n % 2 == 1 && fams == n && i == n) t = from_word(n, i, labels[i - 1] + "lrlll" + bar(labels[i - 1]));
            w.enter(t, i);
            // otherwise from the far endpoint, so the first flips leave the entry path
            int from = swapped(i) ? i : other_endpoint(t, i);
            w.rotations(from, Turn::Clockwise, n - 1);
        }
        w.leave(i % n + 1);
    }
    int kk = fams + 1;
    int steps = kk > 1 ? (n + 1 - kk) % n : n;
    if (steps) w.rotations(kk % n + 1, Turn::Counterclockwise, steps);
    if (!(w.current() == s1)) throw ConstructionError("r_rainbow_cycle: walk does not return to the first star");
    return AssocRainbowCycle{n, r, s1, std::move(w.flips())};
}

std::vector<Triangulation> replay(const AssocRainbowCycle& c) {
    std::vector<Triangulation> out;
    out.reserve(c.flips.size() + 1);
    out.push_back(c.start);
    for (const auto& d : c.flips) out.push_back(flip(out.back(), d).first);
    return out;
}

} // namespace graycode
