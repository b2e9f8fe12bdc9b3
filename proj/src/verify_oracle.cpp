#include "graycode/verify_oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_set>

namespace graycode {

namespace {

constexpr std::size_t kMaxReported = 12;

struct Report {
    Certificate& c;
    std::size_t dropped = 0;
    void fail(const std::string& msg) {
        if (c.failures.size() < kMaxReported) c.failures.push_back(msg);
        else ++dropped;
    }
    void finish() {
        if (dropped) c.failures.push_back(std::to_string(dropped) + " further failures");
        c.pass = c.failures.empty();
    }
};

bool admissible(FlipModel m, int a, int b, int n) {
    switch (m) {
    case FlipModel::All: return true;
    case FlipModel::Adj: return b == a + 1;
    case FlipModel::Cadj: return b == a + 1 || (a == 1 && b == n);
    }
    return false;
}

// expected multiplicity of each colour, in units of the per-slot count
std::map<std::pair<int, int>, int> model_slots(FlipModel m, int n) {
    std::map<std::pair<int, int>, int> slots;
    if (n < 2) return slots;
    switch (m) {
    case FlipModel::All:
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b) slots[{a, b}] = 1;
        break;
    case FlipModel::Adj:
        for (int a = 1; a < n; ++a) slots[{a, a + 1}] = 1;
        break;
    case FlipModel::Cadj:
        for (int a = 1; a <= n; ++a) {
            int b = a % n + 1;
            ++slots[{std::min(a, b), std::max(a, b)}];
        }
        break;
    }
    return slots;
}

void set_achieved(Certificate& c, const std::vector<std::pair<int, int>>& colors) {
    std::set<long long> vals;
    for (const auto& k : colors) {
        auto it = c.counts.find(k);
        vals.insert(it == c.counts.end() ? 0 : it->second);
    }
    if (vals.size() == 1) c.achieved = *vals.begin();
}

// Bare-bones triangulation state for replay: adjacency matrix plus a bit key.
class TriState {
public:
    explicit TriState(int n) : n_(n), adj_((n + 1) * (n + 1), 0), key_((n * n + 7) / 8, '\0') {
        for (int v = 1; v <= n; ++v) link(v, v % n + 1, true);
    }

    bool is_side(int a, int b) const {
        int d = ((a - b) % n_ + n_) % n_;
        return d == 1 || d == n_ - 1;
    }
    bool edge(int a, int b) const { return adj_[a * (n_ + 1) + b]; }

    void link(int a, int b, bool on) {
        adj_[a * (n_ + 1) + b] = adj_[b * (n_ + 1) + a] = on;
        if (is_side(a, b)) return;
        int lo = std::min(a, b) - 1, hi = std::max(a, b) - 1;
        int bit = lo * n_ + hi;
        if (on) key_[bit / 8] = static_cast<char>(key_[bit / 8] | (1 << (bit % 8)));
        else key_[bit / 8] = static_cast<char>(key_[bit / 8] & ~(1 << (bit % 8)));
    }

    // Returns the flipped-in diagonal, or nullopt when d is not flippable.
    std::optional<std::pair<int, int>> flip(int a, int b) {
        if (a < 1 || b > n_ || a >= b || is_side(a, b) || !edge(a, b)) return std::nullopt;
        std::vector<int> common;
        for (int c = 1; c <= n_; ++c)
            if (c != a && c != b && edge(a, c) && edge(b, c)) common.push_back(c);
        if (common.size() != 2) return std::nullopt;
        int c1 = std::min(common[0], common[1]), c2 = std::max(common[0], common[1]);
        if (edge(c1, c2)) return std::nullopt;
        link(a, b, false);
        link(c1, c2, true);
        return std::pair{c1, c2};
    }

    bool present(int a, int b) const { return edge(a, b); }
    const std::string& key() const { return key_; }

private:
    int n_;
    std::vector<char> adj_;
    std::string key_;
};

bool load_start(TriState& st, const Triangulation& t, Report& rep) {
    int n = t.n();
    const auto& ds = t.diagonals();
    if (static_cast<int>(ds.size()) != n - 3) {
        rep.fail("start has " + std::to_string(ds.size()) + " diagonals, expected " + std::to_string(n - 3));
        return false;
    }
    for (std::size_t i = 0; i < ds.size(); ++i) {
        auto [a, b] = std::pair{ds[i].a, ds[i].b};
        if (a < 1 || b > n || a >= b || st.is_side(a, b)) {
            rep.fail("start contains a non-diagonal " + to_string(ds[i]));
            return false;
        }
        for (std::size_t j = 0; j < i; ++j) {
            int c = ds[j].a, d = ds[j].b;
            if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) {
                rep.fail("start has crossing diagonals");
                return false;
            }
        }
        st.link(a, b, true);
    }
    return true;
}

std::string diag_name(const std::pair<int, int>& k) { return std::to_string(k.first) + "-" + std::to_string(k.second); }

} // namespace

std::string kind_name(CertificateKind k) {
    switch (k) {
    case CertificateKind::GrayCode: return "GrayCode";
    case CertificateKind::BalancedCycle: return "BalancedCycle";
    case CertificateKind::RainbowCycle: return "RainbowCycle";
    }
    return "?";
}

std::string model_name(FlipModel m) {
    switch (m) {
    case FlipModel::All: return "all";
    case FlipModel::Cadj: return "cadj";
    case FlipModel::Adj: return "adj";
    }
    return "?";
}

std::string Certificate::render() const {
    std::ostringstream os;
    os << "kind: " << kind_name(kind) << '\n';
    os << "order: " << order << '\n';
    os << "cyclic: " << (cyclic ? "true" : "false") << '\n';
    os << "flips: " << flips << '\n';
    os << "distinct: " << distinct << '\n';
    os << "achieved: " << (achieved ? std::to_string(*achieved) : "none") << '\n';
    os << "pass: " << (pass ? "true" : "false") << '\n';
    for (const auto& [k, v] : counts) os << "count " << diag_name(k) << ": " << v << '\n';
    for (const auto& f : failures) os << "failure: " << f << '\n';
    return os.str();
}

Certificate verify_perm_code(const TranspositionSequence& s, FlipModel model, bool expect_hamiltonian,
                             std::optional<long long> expected_count) {
    Certificate c;
    Report rep{c};
    c.order = s.n;
    c.cyclic = s.cyclic;
    c.kind = !s.cyclic ? CertificateKind::GrayCode : expect_hamiltonian ? CertificateKind::BalancedCycle : CertificateKind::RainbowCycle;
    int n = s.n;

    if (n < 1 || n > 16 || static_cast<int>(s.start.size()) != n) {
        rep.fail("order out of range or start of wrong length");
        rep.finish();
        return c;
    }
    std::vector<int> pos(n + 1, -1);
    for (int i = 0; i < n; ++i) {
        int v = s.start[i];
        if (v < 1 || v > n || pos[v] >= 0) {
            rep.fail("start is not a permutation");
            rep.finish();
            return c;
        }
        pos[v] = i;
    }
    if (model != FlipModel::All && !s.flips.empty() && s.flips.front().sem != Semantics::OnIndices)
        rep.fail("model " + model_name(model) + " needs index transpositions");

    std::vector<int> cur = s.start;
    std::unordered_set<std::uint64_t> seen{perm_key(cur)};
    Semantics sem = s.flips.empty() ? Semantics::OnValues : s.flips.front().sem;
    bool broken = false;
    for (std::size_t i = 0; i < s.flips.size(); ++i) {
        const auto& t = s.flips[i];
        if (t.sem != sem) rep.fail("flip " + std::to_string(i) + " mixes semantics");
        if (t.a < 1 || t.b > n || t.a >= t.b) {
            rep.fail("flip " + std::to_string(i) + " out of range");
            broken = true;
            break;
        }
        if (!admissible(model, t.a, t.b, n)) rep.fail("flip " + std::to_string(i) + " " + diag_name(t.key()) + " not admissible under " + model_name(model));
        int i1, i2;
        if (t.sem == Semantics::OnValues) i1 = pos[t.a], i2 = pos[t.b];
        else i1 = t.a - 1, i2 = t.b - 1;
        std::swap(cur[i1], cur[i2]);
        pos[cur[i1]] = i1;
        pos[cur[i2]] = i2;
        ++c.counts[t.key()];
        if (!seen.insert(perm_key(cur)).second) rep.fail("permutation after flip " + std::to_string(i) + " repeats an earlier one");
    }
    c.flips = static_cast<long long>(s.flips.size());
    c.distinct = static_cast<long long>(seen.size());

    if (!broken && s.cyclic) {
        std::vector<int> diff;
        for (int i = 0; i < n; ++i)
            if (cur[i] != s.start[i]) diff.push_back(i);
        if (diff.size() != 2 || cur[diff[0]] != s.start[diff[1]]) {
            rep.fail("cycle does not close with a single transposition");
        } else {
            int a = sem == Semantics::OnValues ? s.start[diff[0]] : diff[0] + 1;
            int b = sem == Semantics::OnValues ? s.start[diff[1]] : diff[1] + 1;
            if (a > b) std::swap(a, b);
            if (!admissible(model, a, b, n)) rep.fail("closing flip " + diag_name({a, b}) + " not admissible under " + model_name(model));
            ++c.counts[{a, b}];
            ++c.flips;
        }
    }
    if (expect_hamiltonian && c.distinct != factorial(n))
        rep.fail("visited " + std::to_string(c.distinct) + " of " + std::to_string(factorial(n)) + " permutations");

    auto slots = model_slots(model, n);
    std::vector<std::pair<int, int>> colors;
    for (const auto& [k, m] : slots) colors.push_back(k);
    set_achieved(c, colors);
    if (expected_count) {
        for (const auto& [k, m] : slots) {
            auto it = c.counts.find(k);
            long long got = it == c.counts.end() ? 0 : it->second;
            if (got != *expected_count * m)
                rep.fail("transposition " + diag_name(k) + " appears " + std::to_string(got) + " times, expected " + std::to_string(*expected_count * m));
        }
        if (slots.size() == 1 && slots.begin()->second > 1) c.achieved = c.counts[slots.begin()->first] / slots.begin()->second;
    }
    rep.finish();
    return c;
}

Certificate verify_assoc_cycle(const AssocRainbowCycle& cyc, std::optional<long long> expected_r) {
    Certificate c;
    Report rep{c};
    c.kind = CertificateKind::RainbowCycle;
    c.cyclic = true;
    int n = cyc.n;
    c.order = n;
    if (n < 4 || n > 200 || cyc.start.n() != n) {
        rep.fail("polygon size out of range");
        rep.finish();
        return c;
    }
    TriState st(n);
    if (!load_start(st, cyc.start, rep)) {
        rep.finish();
        return c;
    }
    const std::string start_key = st.key();
    std::vector<std::string> keys;
    keys.reserve(cyc.flips.size());
    std::unordered_set<std::string> seen;
    std::map<std::pair<int, int>, long long> ins;
    bool broken = false;
    for (std::size_t i = 0; i < cyc.flips.size(); ++i) {
        keys.push_back(st.key());
        if (!seen.insert(st.key()).second) rep.fail("triangulation before flip " + std::to_string(i) + " repeats an earlier one");
        const auto& d = cyc.flips[i];
        auto nd = st.flip(d.a, d.b);
        if (!nd) {
            rep.fail("flip " + std::to_string(i) + " of " + to_string(d) + " is not a valid flip");
            broken = true;
            break;
        }
        ++c.counts[{d.a, d.b}];
        ++ins[*nd];
    }
    c.flips = static_cast<long long>(cyc.flips.size());
    c.distinct = static_cast<long long>(seen.size());
    if (!broken) {
        if (cyc.flips.empty() || st.key() != start_key) rep.fail("walk does not return to the start");
        if (ins != c.counts) rep.fail("flip-in and flip-out counts differ");
    }

    std::vector<std::pair<int, int>> colors;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 2; b <= n; ++b)
            if (!(a == 1 && b == n)) colors.emplace_back(a, b);
    set_achieved(c, colors);
    long long want = expected_r.value_or(cyc.r);
    for (const auto& k : colors) {
        auto it = c.counts.find(k);
        long long got = it == c.counts.end() ? 0 : it->second;
        if (got != want) rep.fail("diagonal " + diag_name(k) + " flipped " + std::to_string(got) + " times, expected " + std::to_string(want));
    }

    if (!broken && want == 1) {
        // facets: the triangulations holding a diagonal form one arc of the cycle
        auto bit = [&](const std::string& key, int a, int b) {
            int idx = (a - 1) * n + (b - 1);
            return (key[idx / 8] >> (idx % 8)) & 1;
        };
        for (const auto& [a, b] : colors) {
            long long arcs = 0;
            for (std::size_t i = 0; i < keys.size(); ++i)
                if (bit(keys[i], a, b) && !bit(keys[(i + 1) % keys.size()], a, b)) ++arcs;
            if (arcs != 1) rep.fail("facet of " + diag_name({a, b}) + " meets the cycle in " + std::to_string(arcs) + " arcs");
        }
    }
    rep.finish();
    return c;
}

Certificate verify_assoc_path(const Triangulation& start, const std::vector<Diagonal>& flips) {
    Certificate c;
    Report rep{c};
    c.kind = CertificateKind::GrayCode;
    int n = start.n();
    c.order = n;
    TriState st(n);
    if (!load_start(st, start, rep)) {
        rep.finish();
        return c;
    }
    for (const auto& d : start.diagonals()) ++c.counts[{d.a, d.b}];
    std::unordered_set<std::string> seen{st.key()};
    for (std::size_t i = 0; i < flips.size(); ++i) {
        auto nd = st.flip(flips[i].a, flips[i].b);
        if (!nd) {
            rep.fail("flip " + std::to_string(i) + " of " + to_string(flips[i]) + " is not a valid flip");
            break;
        }
        ++c.counts[*nd];
        if (!seen.insert(st.key()).second) rep.fail("triangulation after flip " + std::to_string(i) + " repeats an earlier one");
    }
    c.flips = static_cast<long long>(flips.size());
    c.distinct = static_cast<long long>(seen.size());
    std::vector<std::pair<int, int>> colors;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 2; b <= n; ++b)
            if (!(a == 1 && b == n)) colors.emplace_back(a, b);
    set_achieved(c, colors);
    rep.finish();
    return c;
}

long long FlipGraph::edge_count() const {
    long long deg = 0;
    for (const auto& a : adj) deg += static_cast<long long>(a.size());
    return deg / 2;
}

bool FlipGraph::has_edge(const std::string& u, const std::string& v) const {
    auto iu = index.find(u), iv = index.find(v);
    if (iu == index.end() || iv == index.end()) return false;
    const auto& nb = adj[iu->second];
    return std::find(nb.begin(), nb.end(), iv->second) != nb.end();
}

std::string perm_vertex_key(const Permutation& p) {
    std::string k;
    for (int v : p) k += std::to_string(v) + ".";
    return k;
}

std::string tri_vertex_key(const Triangulation& t) { return t.serialize(); }

long long catalan(int k) {
    long long c = 1;
    for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

namespace {

// all triangulations of the polygon on consecutive vertices i..j
std::vector<std::vector<Diagonal>> triangulations_between(int i, int j) {
    if (j - i < 2) return {{}};
    std::vector<std::vector<Diagonal>> out;
    for (int k = i + 1; k < j; ++k) {
        auto left = triangulations_between(i, k);
        auto right = triangulations_between(k, j);
        for (const auto& l : left)
            for (const auto& r : right) {
                std::vector<Diagonal> ds = l;
                ds.insert(ds.end(), r.begin(), r.end());
                if (k - i >= 2) ds.push_back(Diagonal{i, k});
                if (j - k >= 2) ds.push_back(Diagonal{k, j});
                out.push_back(std::move(ds));
            }
    }
    return out;
}

} // namespace

FlipGraph brute_force_flip_graph(int order, GraphModel model) {
    FlipGraph g;
    g.model = model;
    g.order = order;
    if (model == GraphModel::Assoc) {
        if (order < 4 || order > 11) throw DomainError("brute_force_flip_graph: polygon size must be in [4, 11]");
        std::vector<Triangulation> ts;
        for (auto& ds : triangulations_between(1, order)) ts.emplace_back(order, std::move(ds));
        for (const auto& t : ts) {
            g.index.emplace(tri_vertex_key(t), static_cast<int>(g.vertices.size()));
            g.vertices.push_back(tri_vertex_key(t));
        }
        g.adj.resize(ts.size());
        for (std::size_t i = 0; i < ts.size(); ++i)
            for (const auto& d : ts[i].diagonals()) g.adj[i].push_back(g.index.at(tri_vertex_key(flip(ts[i], d).first)));
        return g;
    }
    if (order < 1 || order > 8) throw DomainError("brute_force_flip_graph: order must be in [1, 8]");
    std::vector<Permutation> ps;
    Permutation p = identity(order);
    do ps.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    for (const auto& q : ps) {
        g.index.emplace(perm_vertex_key(q), static_cast<int>(g.vertices.size()));
        g.vertices.push_back(perm_vertex_key(q));
    }
    FlipModel fm = model == GraphModel::PermAll ? FlipModel::All : model == GraphModel::PermCadj ? FlipModel::Cadj : FlipModel::Adj;
    g.adj.resize(ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i) {
        std::set<int> nb;
        for (int a = 1; a <= order; ++a)
            for (int b = a + 1; b <= order; ++b) {
                if (!admissible(fm, a, b, order)) continue;
                Permutation q = ps[i];
                std::swap(q[a - 1], q[b - 1]);
                nb.insert(g.index.at(perm_vertex_key(q)));
            }
        g.adj[i].assign(nb.begin(), nb.end());
    }
    return g;
}

bool steps_are_edges(const FlipGraph& g, const TranspositionSequence& s) {
    auto ps = s.replay();
    for (std::size_t i = 0; i + 1 < ps.size(); ++i)
        if (!g.has_edge(perm_vertex_key(ps[i]), perm_vertex_key(ps[i + 1]))) return false;
    if (s.cyclic && ps.size() > 1 && !g.has_edge(perm_vertex_key(ps.back()), perm_vertex_key(ps.front()))) return false;
    return true;
}

bool steps_are_edges(const FlipGraph& g, const AssocRainbowCycle& c) {
    auto ts = replay(c);
    for (std::size_t i = 0; i + 1 < ts.size(); ++i)
        if (!g.has_edge(tri_vertex_key(ts[i]), tri_vertex_key(ts[i + 1]))) return false;
    return true;
}

} // namespace graycode
