#include "graycode/perm_balanced_all.hpp"

#include <map>
#include <mutex>

#include "segments.hpp"

namespace graycode {

using detail::Chain;
using detail::expect_end;
using detail::lifted;
using detail::mapped;
using detail::mirrored;
using detail::reversed;

namespace {

Transposition tv(int a, int b) { return Transposition::make(a, b, Semantics::OnValues); }

Permutation rotated_left(int n) {
    Permutation p = identity(n);
    std::rotate(p.begin(), p.begin() + 1, p.end());
    return p;
}

Permutation rotated_right(int n) {
    Permutation p = identity(n);
    std::rotate(p.begin(), p.end() - 1, p.end());
    return p;
}

void require_odd_code(const BalancedAllCode& g, const char* what) {
    if (g.n % 2 == 0) throw ConstructionError(std::string(what) + ": needs an odd-order code");
    if (g.code.start != identity(g.n)) throw ConstructionError(std::string(what) + ": code must start at the identity");
    Permutation want = identity(g.n);
    if (g.n >= 2) std::swap(want[g.n - 2], want[g.n - 1]);
    expect_end(g.code, want, what);
}

BalancedAllCode close_up(TranspositionSequence s) {
    s.cyclic = s.n >= 2;
    BalancedAllCode c{s.n, std::move(s), std::nullopt};
    c.closing = c.code.closing();
    if (c.code.cyclic && !c.closing) throw ConstructionError("cycle does not close with a single transposition");
    return c;
}

} // namespace

BalancedAllCode base_code_n1() {
    return BalancedAllCode{1, TranspositionSequence{1, identity(1), {}, false}, std::nullopt};
}

BalancedAllCode base_code_n3() {
    TranspositionSequence s{3, identity(3), {tv(1, 3), tv(1, 2), tv(2, 3), tv(1, 3), tv(1, 2)}, true};
    return close_up(std::move(s));
}

TranspositionSequence derive_h_from_g(const BalancedAllCode& g) {
    require_odd_code(g, "derive_h_from_g");
    int n = g.n;
    Permutation s2 = power(cycle_range(n, 1, n), 2);
    TranspositionSequence h{n, identity(n), {}, false};
    for (const auto& t : g.code.flips) h.flips.push_back(map_transposition(s2, t));
    Permutation want = identity(n);
    if (n >= 2) std::swap(want[0], want[1]);
    expect_end(h, want, "derive_h_from_g");
    return h;
}

AlmostBalancedCode build_l(const BalancedAllCode& g) {
    require_odd_code(g, "build_l");
    int n = g.n, N = n + 1;
    TranspositionSequence G = lifted(g.code, N);
    TranspositionSequence H;
    if (n >= 3) H = lifted(derive_h_from_g(g), N);

    Chain chain(N);
    for (int k = N; k >= 1; --k) {
        Permutation omega = cycle_range(N, k, N);
        TranspositionSequence seg;
        if (k >= 3) {
            seg = mapped(omega, H);
            if (k % 2 == 1) seg = mirrored(seg);
        } else if (k == 2) {
            seg = mapped(omega, G);
        } else {
            seg = mirrored(mapped(omega, G));
        }
        chain.add(seg, "build_l");
        if (k > 1) chain.connect(tv(k - 1, k));
    }
    AlmostBalancedCode l{N, chain.take(), Direction::Left};
    expect_end(l.code, rotated_left(N), "build_l");
    return l;
}

AlmostBalancedCode build_r(const BalancedAllCode& g) {
    require_odd_code(g, "build_r");
    int n = g.n, N = n + 1;
    Permutation sigma = cycle_range(N, 1, N);
    TranspositionSequence Gb = mapped(sigma, lifted(g.code, N));
    Gb.start = identity(N);
    TranspositionSequence Hb;
    if (n >= 3) {
        Hb = mapped(sigma, lifted(derive_h_from_g(g), N));
        Hb.start = identity(N);
    }

    Chain chain(N);
    for (int k = 1; k <= N; ++k) {
        Permutation tau = cycle_range(N, k, 1);
        TranspositionSequence seg;
        if (k == 1) {
            seg = Gb;
        } else if (k == 2) {
            seg = reversed(mapped(tau, Gb));
        } else {
            seg = mapped(tau, Hb);
            if (k % 2 == 0) seg = reversed(seg);
        }
        chain.add(seg, "build_r");
        if (k < N) chain.connect(tv(k, k + 1));
    }
    AlmostBalancedCode r{N, chain.take(), Direction::Right};
    expect_end(r.code, rotated_right(N), "build_r");
    return r;
}

BalancedAllCode balanced_from_l(const AlmostBalancedCode& l) {
    if (l.direction != Direction::Left) throw ConstructionError("balanced_from_l: needs an L code");
    if (l.n % 2 != 0) throw ConstructionError("balanced_from_l: L must have even order");
    int n = l.n, N = n + 1;
    Permutation sigma = cycle_range(N, 1, N);
    TranspositionSequence L = lifted(l.code, N);
    Chain chain(N);
    Permutation sk = identity(N);
    for (int k = 0; k <= n; ++k) {
        chain.add(mapped(sk, L), "balanced_from_l");
        if (k < n) chain.connect(map_transposition(sk, tv(1, N)));
        sk = compose(sigma, sk);
    }
    BalancedAllCode c = close_up(chain.take());
    Permutation want = identity(N);
    std::swap(want[N - 2], want[N - 1]);
    expect_end(c.code, want, "balanced_from_l");
    return c;
}

TranspositionSequence second_code_h(const BalancedAllCode& g) {
    require_odd_code(g, "second_code_h");
    int n = g.n + 2;
    TranspositionSequence L = lifted(build_l(g).code, n);
    TranspositionSequence R = lifted(build_r(g).code, n);
    Permutation sigma = cycle_range(n, 1, n);

    Chain chain(n);
    chain.add(reversed(L), "second_code_h");
    chain.connect(tv(1, n));
    Permutation sk = sigma;
    for (int k = 1; k <= n - 1; ++k) {
        chain.add(reversed(mapped(sk, R)), "second_code_h");
        if (k <= n - 2) chain.connect(tv(k, k + 1));
        sk = compose(sigma, sk);
    }
    TranspositionSequence h = chain.take();
    Permutation want_start = identity(n);
    std::rotate(want_start.begin(), want_start.begin() + 1, want_start.end() - 1);
    if (h.start != want_start) throw ConstructionError("second_code_h: unexpected start " + to_string(h.start));
    expect_end(h, rotated_right(n), "second_code_h");
    return h;
}

BalancedAllCode balanced_odd(int n) {
    if (n < 1 || n % 2 == 0) throw DomainError("balanced_odd: n must be odd and positive");
    static std::mutex mu;
    static std::map<int, BalancedAllCode> memo;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = memo.find(n); it != memo.end()) return it->second;
    }
    BalancedAllCode c = n == 1 ? base_code_n1() : n == 3 ? base_code_n3() : balanced_from_l(build_l(balanced_odd(n - 2)));
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(n, c);
    return c;
}

BalancedAllCode balanced_even(int n) {
    if (n < 2 || n % 2 != 0) throw DomainError("balanced_even: n must be even and >= 2");
    if (n == 2) return close_up(TranspositionSequence{2, identity(2), {tv(1, 2)}, true});
    TranspositionSequence H1 = lifted(balanced_odd(n - 1).code, n);
    TranspositionSequence H2 = lifted(second_code_h(balanced_odd(n - 3)), n);
    Permutation sigma = cycle_range(n, n, 1);

    Chain chain(n);
    Permutation sk = identity(n);
    for (int k = 0; k < n; ++k) {
        chain.add(mapped(sk, k % 2 == 0 ? H1 : H2), "balanced_even");
        if (k < n - 1) chain.connect(map_transposition(sk, tv(n - 1, n)));
        sk = compose(sigma, sk);
    }
    BalancedAllCode c = close_up(chain.take());
    Permutation want = identity(n);
    std::swap(want[0], want[n - 1]);
    expect_end(c.code, want, "balanced_even");
    return c;
}

BalancedAllCode balanced(int n) {
    if (n < 1) throw DomainError("balanced: n must be >= 1");
    return n % 2 ? balanced_odd(n) : balanced_even(n);
}

TranspositionSequence lift_rainbow(const BalancedAllCode& base, int n) {
    int m = base.n;
    if (m > n) throw DomainError("lift_rainbow: base order exceeds target order");
    if (m == n) return base.code;
    if (m < 2) throw DomainError("lift_rainbow: base order must be >= 2");
    long long M = 2 * factorial(m - 2);

    TranspositionSequence cur = base.code;
    for (int k = m; k < n; ++k) {
        std::vector<Permutation> ps = cur.replay();
        auto closing = cur.closing();
        if (!closing) throw ConstructionError("lift_rainbow: stage input is not a cycle");
        std::vector<Transposition> ts = cur.flips;
        ts.push_back(*closing);
        if (M > static_cast<long long>(ts.size())) throw ConstructionError("lift_rainbow: cycle shorter than M");

        std::vector<Transposition> out;
        for (long long i = 0; i < M; ++i) {
            // push k+1 from the right end to the left end (or back)
            std::vector<Transposition> zig;
            for (int j = k - 1; j >= 0; --j) zig.push_back(tv(ps[i][j], k + 1));
            if (i % 2 == 1) std::reverse(zig.begin(), zig.end());
            out.insert(out.end(), zig.begin(), zig.end());
            out.push_back(ts[i]);
        }
        out.insert(out.end(), ts.begin() + M, ts.end());
        out.pop_back();  // becomes the closing flip

        Permutation st = ps[0];
        st.push_back(k + 1);
        cur = TranspositionSequence{k + 1, st, std::move(out), true};
    }
    return cur;
}

} // namespace graycode
