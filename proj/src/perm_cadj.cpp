#include "graycode/perm_cadj.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "segments.hpp"

namespace graycode {

using detail::Chain;
using detail::expect_end;

namespace {

Transposition ti(int a, int b) { return Transposition::make(a, b, Semantics::OnIndices); }

Transposition shifted(const Transposition& t, int k, int N) {
    return ti((t.a - 1 + k) % N + 1, (t.b - 1 + k) % N + 1);
}

// Explicit graph over S_n with adjacent swaps; vertices are indices into perms.
struct AdjGraph {
    int n;
    std::vector<Permutation> perms;
    std::vector<std::vector<int>> nbr;  // nbr[v][i] = v after swapping positions i+1, i+2

    explicit AdjGraph(int n_) : n(n_) {
        Permutation p = identity(n);
        do perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        std::unordered_map<std::uint64_t, int> index;
        for (int v = 0; v < static_cast<int>(perms.size()); ++v) index[perm_key(perms[v])] = v;
        nbr.assign(perms.size(), std::vector<int>(n - 1));
        for (int v = 0; v < static_cast<int>(perms.size()); ++v)
            for (int i = 0; i + 1 < n; ++i) {
                Permutation q = perms[v];
                std::swap(q[i], q[i + 1]);
                nbr[v][i] = index.at(perm_key(q));
            }
    }
};

class PathSearch {
public:
    PathSearch(const AdjGraph& g, int source, int target)
        : g_(g), seen_(g.perms.size(), 0), free_(g.perms.size(), g.n - 1), source_(source), target_(target) {}

    bool run(std::vector<int>& moves) {
        visit(source_);
        bool ok = dfs(source_);
        moves = moves_;
        return ok;
    }

private:
    void visit(int v) {
        seen_[v] = 1;
        ++count_;
        for (int u : g_.nbr[v]) --free_[u];
    }
    void unvisit(int v) {
        seen_[v] = 0;
        --count_;
        for (int u : g_.nbr[v]) ++free_[u];
    }
    bool adjacent(int u, int v) const {
        for (int w : g_.nbr[u])
            if (w == v) return true;
        return false;
    }
    // After the head moves p -> q, p's unvisited neighbours lose a connection.
    bool viable(int p, int q) const {
        for (int u : g_.nbr[p]) {
            if (seen_[u]) continue;
            int links = free_[u] + (adjacent(u, q) ? 1 : 0);
            if (links < (u == target_ ? 1 : 2)) return false;
        }
        return true;
    }
    bool dfs(int p) {
        if (count_ == static_cast<int>(g_.perms.size())) return p == target_;
        std::vector<std::pair<int, int>> cands;
        for (int i = 0; i + 1 < g_.n; ++i) {
            int q = g_.nbr[p][i];
            if (seen_[q]) continue;
            if (q == target_ && count_ + 1 < static_cast<int>(g_.perms.size())) continue;
            cands.emplace_back(free_[q], i);
        }
        std::stable_sort(cands.begin(), cands.end());
        for (auto [deg, i] : cands) {
            int q = g_.nbr[p][i];
            visit(q);
            moves_.push_back(i);
            if (viable(p, q) && dfs(q)) return true;
            moves_.pop_back();
            unvisit(q);
        }
        return false;
    }

    const AdjGraph& g_;
    std::vector<char> seen_;
    std::vector<int> free_;
    std::vector<int> moves_;
    int source_;
    int target_;
    int count_ = 0;
};

bool odd(const std::vector<int>& p) {
    bool par = false;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) par = !par;
    return par;
}

// Hamilton path through all arrangements of s's values under adjacent swaps,
// from s to t (opposite parity, different last entries). Moves are 0-based
// swap positions. Small orders are searched; larger ones are cut into blocks
// by the last entry, each block solved one order down.
std::vector<int> lace(const std::vector<int>& s, const std::vector<int>& t) {
    int n = static_cast<int>(s.size());
    if (n <= 4) {
        std::vector<int> vals = s;
        std::sort(vals.begin(), vals.end());
        auto rank = [&](const std::vector<int>& p) {
            Permutation q;
            for (int v : p) q.push_back(static_cast<int>(std::lower_bound(vals.begin(), vals.end(), v) - vals.begin()) + 1);
            return q;
        };
        static std::mutex mu;
        static std::unordered_map<int, AdjGraph> graphs;
        const AdjGraph* g;
        {
            std::lock_guard<std::mutex> lock(mu);
            g = &graphs.try_emplace(n, n).first->second;
        }
        Permutation rs = rank(s), rt = rank(t);
        int src = -1, dst = -1;
        for (int v = 0; v < static_cast<int>(g->perms.size()); ++v) {
            if (g->perms[v] == rs) src = v;
            if (g->perms[v] == rt) dst = v;
        }
        PathSearch search(*g, src, dst);
        std::vector<int> moves;
        if (!search.run(moves)) throw ConstructionError("hamilton_path_even: search exhausted");
        return moves;
    }
    if (s.back() == t.back() || odd(s) == odd(t)) throw ConstructionError("hamilton_path_even: bad block endpoints");

    std::vector<int> middle;
    for (int v : s)
        if (v != s.back() && v != t.back()) middle.push_back(v);
    std::sort(middle.begin(), middle.end());
    while (middle.front() == s[n - 2] || middle.back() == t[n - 2])
        if (!std::next_permutation(middle.begin(), middle.end())) throw ConstructionError("hamilton_path_even: no block order");
    std::vector<int> order{s.back()};
    order.insert(order.end(), middle.begin(), middle.end());
    order.push_back(t.back());

    std::vector<int> moves, cur = s;
    for (int k = 0; k < n; ++k) {
        std::vector<int> x = t;
        if (k + 1 < n) {
            int a = order[k + 1], b = order[k];
            x.clear();
            for (int v : s)
                if (v != a && v != b) x.push_back(v);
            std::sort(x.begin(), x.end());
            x.push_back(a);
            x.push_back(b);
            if (odd(x) == odd(cur)) std::swap(x[0], x[1]);
        }
        auto sub = lace(std::vector<int>(cur.begin(), cur.end() - 1), std::vector<int>(x.begin(), x.end() - 1));
        moves.insert(moves.end(), sub.begin(), sub.end());
        cur = x;
        if (k + 1 < n) {
            moves.push_back(n - 2);
            std::swap(cur[n - 2], cur[n - 1]);
        }
    }
    return moves;
}

std::mutex cache_mu;

} // namespace

RotationHamiltonPath search_hamilton_path(int n) {
    if (n < 2 || n % 2 != 0) throw DomainError("hamilton_path_even: n must be even and >= 2");
    if (n > 10) throw DomainError("hamilton_path_even: search limited to n <= 10");
    if (n == 2) return RotationHamiltonPath{2, {ti(1, 2)}};
    Permutation t = identity(n);
    std::rotate(t.begin(), t.begin() + 1, t.end());
    std::vector<int> moves = lace(identity(n), t);
    RotationHamiltonPath l{n, {}};
    for (int i : moves) l.flips.push_back(ti(i + 1, i + 2));
    return l;
}

std::string format_hampath_line(const RotationHamiltonPath& l) {
    std::ostringstream os;
    os << "hampath n=" << l.n << " flips=";
    for (std::size_t i = 0; i < l.flips.size(); ++i) os << (i ? "," : "") << l.flips[i].a << ' ' << l.flips[i].b;
    return os.str();
}

bool parse_hampath_line(const std::string& line, RotationHamiltonPath& out) {
    const std::string head = "hampath n=";
    if (line.rfind(head, 0) != 0) return false;
    auto sp = line.find(" flips=", head.size());
    if (sp == std::string::npos) return false;
    RotationHamiltonPath l;
    try {
        l.n = std::stoi(line.substr(head.size(), sp - head.size()));
        std::stringstream body(line.substr(sp + 7));
        std::string item;
        while (std::getline(body, item, ',')) {
            std::istringstream is(item);
            int a = 0, b = 0;
            if (!(is >> a >> b)) return false;
            l.flips.push_back(ti(a, b));
        }
    } catch (const std::exception&) {
        return false;
    }
    out = std::move(l);
    return true;
}

bool is_rotation_hamilton_path(const RotationHamiltonPath& l) {
    if (static_cast<long long>(l.flips.size()) + 1 != factorial(l.n)) return false;
    TranspositionSequence s{l.n, identity(l.n), l.flips, false};
    for (const auto& t : l.flips)
        if (t.sem != Semantics::OnIndices || t.b != t.a + 1 || t.b > l.n) return false;
    std::vector<Permutation> ps = s.replay();
    std::vector<std::uint64_t> keys;
    for (const auto& p : ps) keys.push_back(perm_key(p));
    std::sort(keys.begin(), keys.end());
    if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) return false;
    Permutation t = identity(l.n);
    std::rotate(t.begin(), t.begin() + 1, t.end());
    return ps.back() == t;
}

RotationHamiltonPath hamilton_path_even(int n) {
    if (n < 2 || n % 2 != 0) throw DomainError("hamilton_path_even: n must be even and >= 2");
    const char* dir = std::getenv(kHampathCacheEnv);
    if (!dir || !*dir) return search_hamilton_path(n);

    std::lock_guard<std::mutex> lock(cache_mu);
    std::filesystem::path file = std::filesystem::path(dir) / "hampath.txt";
    {
        std::ifstream in(file);
        std::string line;
        while (std::getline(in, line)) {
            RotationHamiltonPath l;
            if (parse_hampath_line(line, l) && l.n == n && is_rotation_hamilton_path(l)) return l;
        }
    }
    RotationHamiltonPath l = search_hamilton_path(n);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    std::ofstream out(file, std::ios::app);
    if (out) out << format_hampath_line(l) << '\n';
    return l;
}

TranspositionSequence reversed_path(const RotationHamiltonPath& l) {
    TranspositionSequence s{l.n, identity(l.n), l.flips, false};
    std::reverse(s.flips.begin(), s.flips.end());
    return s;
}

TranspositionSequence build_g_cadj(const RotationHamiltonPath& l) {
    if (l.n < 2 || l.n % 2 != 0) throw DomainError("build_g_cadj: path order must be even");
    int N = l.n + 1;
    std::vector<Transposition> sl;
    for (const auto& t : l.flips) sl.push_back(ti(t.a + 1, t.b + 1));
    TranspositionSequence g{N, identity(N), {}, false};
    for (int b = 0; b < N; ++b) {
        g.flips.insert(g.flips.end(), sl.begin(), sl.end());
        if (b < N - 1) g.flips.push_back(ti(1, 2));
    }
    Permutation want = identity(N);
    std::swap(want[0], want[1]);
    expect_end(g, want, "build_g_cadj");
    return g;
}

TranspositionSequence build_h_cadj(const RotationHamiltonPath& l) {
    if (l.n < 2 || l.n % 2 != 0) throw DomainError("build_h_cadj: path order must be even");
    int N = l.n + 1;
    std::vector<Transposition> sl;
    for (const auto& t : l.flips) sl.push_back(ti(t.a + 1, t.b + 1));
    Permutation st = identity(N);
    std::rotate(st.begin() + 1, st.begin() + 2, st.end());
    TranspositionSequence h{N, st, {sl.rbegin(), sl.rend()}, false};
    h.flips.push_back(ti(1, 2));
    for (int b = 0; b < l.n; ++b) {
        h.flips.insert(h.flips.end(), sl.begin(), sl.end());
        if (b < l.n - 1) h.flips.push_back(ti(1, 2));
    }
    Permutation want = identity(N);
    std::rotate(want.begin(), want.end() - 1, want.end());
    expect_end(h, want, "build_h_cadj");
    return h;
}

BalancedCadjCode balanced_cadj(int n) {
    if (n < 2 || n % 2 != 0) throw DomainError("balanced_cadj: n must be even and >= 2");
    if (n == 2) return BalancedCadjCode{2, TranspositionSequence{2, identity(2), {ti(1, 2)}, true}};
    RotationHamiltonPath l = hamilton_path_even(n - 2);
    TranspositionSequence G = detail::lifted(build_g_cadj(l), n);
    TranspositionSequence H = detail::lifted(build_h_cadj(l), n);

    Chain chain(n);
    for (int k = 0; k < n; ++k) {
        const TranspositionSequence& b = k % 2 == 0 ? G : H;
        Permutation st = b.start;
        std::rotate(st.begin(), st.end() - k, st.end());
        TranspositionSequence seg{n, st, {}, false};
        for (const auto& t : b.flips) seg.flips.push_back(shifted(t, k, n));
        chain.add(seg, "balanced_cadj");
        if (k < n - 1) chain.connect(shifted(ti(1, n), k, n));
    }
    TranspositionSequence code = chain.take();
    code.cyclic = true;
    auto c = code.closing();
    if (!c || *c != shifted(ti(1, n), n - 1, n)) throw ConstructionError("balanced_cadj: closing flip mismatch");
    return BalancedCadjCode{n, std::move(code)};
}

} // namespace graycode
