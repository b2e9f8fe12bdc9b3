#include "graycode/assoc_core.hpp"

#include <algorithm>
#include <sstream>

namespace graycode {

namespace {

int nx(int v, int n) { return v % n + 1; }
int pv(int v, int n) { return (v + n - 2) % n + 1; }

bool polygon_side(int u, int v, int n) {
    int d = ((u - v) % n + n) % n;
    return d == 1 || d == n - 1;
}

} // namespace

Diagonal Diagonal::make(int x, int y, int n) {
    if (x < 1 || y < 1 || x > n || y > n) throw DomainError("diagonal endpoint out of range");
    if (x == y || polygon_side(x, y, n)) throw DomainError("not a diagonal: " + std::to_string(x) + "-" + std::to_string(y));
    return Diagonal{std::min(x, y), std::max(x, y)};
}

std::string to_string(const Diagonal& d) { return std::to_string(d.a) + "-" + std::to_string(d.b); }

bool crosses(const Diagonal& d, const Diagonal& e) {
    return (d.a < e.a && e.a < d.b && d.b < e.b) || (e.a < d.a && d.a < e.b && e.b < d.b);
}

Triangulation::Triangulation(int n, std::vector<Diagonal> diagonals) : n_(n), d_(std::move(diagonals)) {
    if (n < 4) throw DomainError("triangulation needs n >= 4");
    for (auto& d : d_) d = Diagonal::make(d.a, d.b, n);
    std::sort(d_.begin(), d_.end());
    if (static_cast<int>(d_.size()) != n - 3) throw DomainError("triangulation needs n-3 diagonals");
    if (std::adjacent_find(d_.begin(), d_.end()) != d_.end()) throw DomainError("repeated diagonal");
    for (std::size_t i = 0; i < d_.size(); ++i)
        for (std::size_t j = i + 1; j < d_.size(); ++j)
            if (crosses(d_[i], d_[j])) throw DomainError("crossing diagonals " + to_string(d_[i]) + " and " + to_string(d_[j]));
}

bool Triangulation::has(const Diagonal& d) const { return std::binary_search(d_.begin(), d_.end(), d); }

bool Triangulation::edge(int u, int v) const {
    if (u == v) return false;
    if (polygon_side(u, v, n_)) return true;
    return has(Diagonal{std::min(u, v), std::max(u, v)});
}

int Triangulation::degree(int v) const {
    int deg = 2;
    for (const auto& d : d_)
        if (d.a == v || d.b == v) ++deg;
    return deg;
}

std::vector<int> Triangulation::degree_two() const {
    std::vector<int> deg(n_ + 1, 2);
    for (const auto& d : d_) {
        ++deg[d.a];
        ++deg[d.b];
    }
    std::vector<int> out;
    for (int v = 1; v <= n_; ++v)
        if (deg[v] == 2) out.push_back(v);
    return out;
}

std::string Triangulation::key() const {
    std::string k;
    k.reserve(2 * d_.size() + 1);
    k.push_back(static_cast<char>(n_));
    for (const auto& d : d_) {
        k.push_back(static_cast<char>(d.a));
        k.push_back(static_cast<char>(d.b));
    }
    return k;
}

std::string Triangulation::serialize() const {
    std::ostringstream os;
    os << "tri n=" << n_ << " d=";
    for (std::size_t i = 0; i < d_.size(); ++i) os << (i ? "," : "") << d_[i].a << '-' << d_[i].b;
    return os.str();
}

Triangulation Triangulation::parse(const std::string& s) {
    std::istringstream is(s);
    std::string tag, nf, df;
    if (!(is >> tag >> nf) || tag != "tri" || nf.rfind("n=", 0) != 0) throw DomainError("bad triangulation: " + s);
    int n = 0;
    try {
        n = std::stoi(nf.substr(2));
    } catch (const std::exception&) {
        throw DomainError("bad triangulation size: " + s);
    }
    std::vector<Diagonal> ds;
    if (is >> df) {
        if (df.rfind("d=", 0) != 0) throw DomainError("bad triangulation: " + s);
        std::stringstream body(df.substr(2));
        std::string item;
        while (std::getline(body, item, ',')) {
            auto dash = item.find('-');
            if (dash == std::string::npos) throw DomainError("bad diagonal: " + item);
            try {
                ds.push_back(Diagonal{std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1))});
            } catch (const std::exception&) {
                throw DomainError("bad diagonal: " + item);
            }
        }
    }
    return Triangulation(n, std::move(ds));
}

std::pair<Triangulation, Diagonal> flip(const Triangulation& t, const Diagonal& d) {
    if (!t.has(d)) throw DomainError("flip: " + to_string(d) + " not in triangulation");
    int n = t.n();
    // apex of the triangle on each side of d
    auto apex = [&](int from, int to) {
        for (int v = nx(from, n); v != to; v = nx(v, n))
            if (t.edge(from, v) && t.edge(to, v)) return v;
        throw ConstructionError("flip: no apex");
    };
    int c1 = apex(d.a, d.b);
    int c2 = apex(d.b, d.a);
    Diagonal nd{std::min(c1, c2), std::max(c1, c2)};
    Triangulation r;
    r.n_ = n;
    r.d_ = t.d_;
    auto it = std::lower_bound(r.d_.begin(), r.d_.end(), d);
    r.d_.erase(it);
    r.d_.insert(std::lower_bound(r.d_.begin(), r.d_.end(), nd), nd);
    return {std::move(r), nd};
}

Triangulation rotate(const Triangulation& t, int k) {
    int n = t.n();
    int s = ((k % n) + n) % n;
    std::vector<Diagonal> ds;
    for (const auto& d : t.diagonals()) ds.push_back(Diagonal::make((d.a - 1 + s) % n + 1, (d.b - 1 + s) % n + 1, n));
    return Triangulation(n, std::move(ds));
}

std::vector<Triangulation> rotation_family(const Triangulation& t) {
    std::vector<Triangulation> fam;
    for (int k = 0; k < t.n(); ++k) {
        Triangulation r = rotate(t, k);
        if (std::find(fam.begin(), fam.end(), r) == fam.end()) fam.push_back(std::move(r));
    }
    return fam;
}

Triangulation star(int n, int center) {
    if (center < 1 || center > n) throw DomainError("star: center out of range");
    std::vector<Diagonal> ds;
    for (int v = 1; v <= n; ++v)
        if (v != center && !polygon_side(v, center, n)) ds.push_back(Diagonal::make(center, v, n));
    return Triangulation(n, std::move(ds));
}

DualWalk dual_walk(const Triangulation& t, int v) {
    int n = t.n();
    if (v < 1 || v > n || t.degree(v) != 2) throw DomainError("dual_walk: " + std::to_string(v) + " is not a degree-2 vertex");
    int L = pv(v, n), R = nx(v, n);
    DualWalk w;
    w.diagonals.push_back(Diagonal::make(L, R, n));
    for (int i = 0; i < n - 4; ++i) {
        int R2 = nx(R, n), L2 = pv(L, n);
        if (!polygon_side(L, R2, n) && t.has(Diagonal::make(L, R2, n))) {
            R = R2;
            w.word.push_back('r');
        } else if (!polygon_side(L2, R, n) && t.has(Diagonal::make(L2, R, n))) {
            L = L2;
            w.word.push_back('l');
        } else {
            throw DomainError("dual_walk: triangulation is not a zigzag");
        }
        w.diagonals.push_back(Diagonal::make(L, R, n));
    }
    return w;
}

std::optional<ZigzagView> zigzag_view(const Triangulation& t) {
    std::vector<int> ends = t.degree_two();
    if (ends.size() != 2) return std::nullopt;
    try {
        DualWalk w = dual_walk(t, ends[0]);
        return ZigzagView{t, {ends[0], ends[1]}, std::move(w.diagonals)};
    } catch (const DomainError&) {
        return std::nullopt;
    }
}

bool is_zigzag(const Triangulation& t) { return zigzag_view(t).has_value(); }

Word word(const ZigzagView& z, int from_endpoint) {
    if (from_endpoint != z.endpoints[0] && from_endpoint != z.endpoints[1]) throw DomainError("word: not an endpoint");
    return dual_walk(z.base, from_endpoint).word;
}

Triangulation from_word(int n, int v, const Word& w) {
    if (n < 4) throw DomainError("from_word: n must be >= 4");
    if (static_cast<int>(w.size()) != n - 4) throw DomainError("from_word: word length must be n-4");
    int L = pv(v, n), R = nx(v, n);
    std::vector<Diagonal> ds{Diagonal::make(L, R, n)};
    for (char c : w) {
        if (c == 'r') R = nx(R, n);
        else if (c == 'l') L = pv(L, n);
        else throw DomainError("from_word: letters must be l or r");
        ds.push_back(Diagonal::make(L, R, n));
    }
    return Triangulation(n, std::move(ds));
}

int other_endpoint(const Triangulation& t, int v) {
    auto ends = t.degree_two();
    if (ends.size() != 2 || (ends[0] != v && ends[1] != v)) throw DomainError("other_endpoint: " + std::to_string(v) + " is not an endpoint");
    return ends[0] == v ? ends[1] : ends[0];
}

Word bar(const Word& w) {
    Word r(w.rbegin(), w.rend());
    for (char& c : r) c = c == 'l' ? 'r' : 'l';
    return r;
}

std::vector<std::string> blocks(const Word& w) {
    std::vector<std::string> out;
    for (char c : w) {
        if (out.empty() || out.back().back() != c) out.emplace_back(1, c);
        else out.back().push_back(c);
    }
    return out;
}

FlipOrdering rotation_ordering(const Triangulation& t, int from_endpoint, Turn dir) {
    DualWalk w = dual_walk(t, from_endpoint);
    auto bl = blocks(w.word);
    int b = static_cast<int>(bl.size());
    if (b == 0) return w.diagonals;
    // Blocks of the forward letter keep their order with the shared edges
    // handed to the neighbours; the other blocks run backwards in full.
    char fwd = dir == Turn::Counterclockwise ? 'r' : 'l';
    std::vector<int> idx;
    int pos = 0;
    for (int k = 0; k < b; ++k) {
        int len = static_cast<int>(bl[k].size());
        int lo = pos, hi = pos + len;  // edge range [lo, hi]
        pos += len;
        if (bl[k][0] == fwd) {
            int s = k > 0 ? lo + 1 : lo;
            int e = k < b - 1 ? hi - 1 : hi;
            for (int i = s; i <= e; ++i) idx.push_back(i);
        } else {
            for (int i = hi; i >= lo; --i) idx.push_back(i);
        }
    }
    FlipOrdering o;
    for (int i : idx) o.push_back(w.diagonals[i]);
    return o;
}

FlipOrdering rotation_ordering(const ZigzagView& z, int from_endpoint, Turn dir) {
    if (from_endpoint != z.endpoints[0] && from_endpoint != z.endpoints[1]) throw DomainError("rotation_ordering: not an endpoint");
    return rotation_ordering(z.base, from_endpoint, dir);
}

FlipOrdering star_ordering(const Triangulation& t, int v) { return dual_walk(t, v).diagonals; }

FlipOrdering star_ordering(const ZigzagView& z, int v) {
    if (v != z.endpoints[0] && v != z.endpoints[1]) throw DomainError("star_ordering: not an endpoint");
    return star_ordering(z.base, v);
}

OrderingResult apply_ordering(const Triangulation& t, const FlipOrdering& o) {
    {
        FlipOrdering sorted = o;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != t.diagonals()) throw DomainError("apply_ordering: ordering is not a permutation of the diagonals");
    }
    OrderingResult r;
    r.path.reserve(o.size() + 1);
    r.path.push_back(t);
    Triangulation cur = t;
    for (const auto& d : o) {
        auto [next, nd] = flip(cur, d);
        r.induced.push_back(nd);
        cur = std::move(next);
        r.path.push_back(cur);
    }
    r.result = std::move(cur);
    return r;
}

} // namespace graycode
