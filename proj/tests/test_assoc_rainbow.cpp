#include <doctest.h>

#include <map>
#include <set>

#include "graycode/assoc_rainbow.hpp"
#include "graycode/errors.hpp"

using namespace graycode;

namespace {

int hamming(const Label& a, const Label& b) {
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

std::map<Diagonal, int> removed(const std::vector<Diagonal>& flips) {
    std::map<Diagonal, int> m;
    for (const auto& d : flips) ++m[d];
    return m;
}

std::set<std::string> visited(const Triangulation& start, const std::vector<Diagonal>& flips) {
    std::set<std::string> s{start.key()};
    Triangulation cur = start;
    for (const auto& d : flips) {
        cur = flip(cur, d).first;
        s.insert(cur.key());
    }
    return s;
}

int diagonal_count(int n) { return n * (n - 3) / 2; }

} // namespace

TEST_CASE("label capacity") {
    CHECK(label_length(45) == 18);
    CHECK((1LL << 18) == 262144);
    CHECK(4 * 18 + 7 * 45 * 816 == 257112);
    CHECK(label_capacity_ok(45));
    CHECK_FALSE(label_capacity_ok(43));
}

TEST_CASE("label selection") {
    auto labels = select_labels(45);
    REQUIRE(labels.size() == 45);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        CHECK(labels[i].size() == 18);
        auto bl = blocks(labels[i]);
        CHECK(bl.size() >= 3);
        CHECK(std::any_of(bl.begin(), bl.end() - 1, [](const std::string& b) { return b.size() >= 2; }));
        for (std::size_t j = 0; j < i; ++j) CHECK(hamming(labels[i], labels[j]) >= 4);
    }
    CHECK(select_labels(45) == labels);
    CHECK_THROWS_AS(select_labels(44), DomainError);
}

TEST_CASE("almost symmetric zigzags") {
    auto labels = select_labels(46);
    for (int n : {45, 46}) {
        for (int i : {1, 2, 7, n}) {
            INFO("n = " << n << ", i = " << i);
            auto t = almost_symmetric(n, labels[i - 1].substr(0, label_length(n)), i);
            CHECK(t.endpoint == i);
            CHECK(dual_walk(t.base, i).word == t.word);
            CHECK(static_cast<int>(t.word.size()) == n - 4);
            Word x = n % 2 == 0 ? "rlrr" : "lrrll";
            if (i % 2 == 0) x = bar(x);
            CHECK(t.word == t.label + x + bar(t.label));
            CHECK(static_cast<int>(rotation_family(t.base).size()) == n);
            long long ls = std::count(t.word.begin(), t.word.end(), 'l');
            long long imbalance = std::abs(2 * ls - static_cast<long long>(t.word.size()));
            CHECK((imbalance == 1 || imbalance == 2));
        }
    }
    CHECK_THROWS_AS(almost_symmetric(8, "", 1), DomainError);
    CHECK_THROWS_AS(almost_symmetric(45, "lr", 1), DomainError);
    CHECK_THROWS_AS(almost_symmetric(45, labels[0].substr(0, 18), 46), DomainError);
}

TEST_CASE("2-rainbow cycle on a nonagon") {
    auto t = almost_symmetric(9, "", 1);
    auto c = two_rainbow_cycle(t);
    CHECK(c.r == 2);
    CHECK(c.flips.size() == 54);
    auto m = removed(c.flips);
    CHECK(static_cast<int>(m.size()) == 27);
    for (const auto& [d, k] : m) CHECK(k == 2);
    CHECK(visited(c.start, c.flips).size() == 54);
    CHECK(replay(c).back() == c.start);
    for (const auto& mid : replay(c)) CHECK(is_zigzag(mid));
}

TEST_CASE("2-rainbow cycles need a symmetry-free zigzag") {
    Triangulation sym(6, {Diagonal{1, 3}, Diagonal{3, 6}, Diagonal{4, 6}});
    CHECK(rotation_family(sym).size() == 3);
    CHECK_THROWS_AS(two_rainbow_cycle(sym, 2), DomainError);
    CHECK_THROWS_AS(two_rainbow_cycle(Triangulation(6, {Diagonal{1, 3}, Diagonal{3, 5}, Diagonal{1, 5}}), 2), DomainError);
}

TEST_CASE("2-rainbow cycles of labels far apart are disjoint") {
    auto labels = select_labels(45);
    auto a = two_rainbow_cycle(almost_symmetric(45, labels[0], 1));
    auto b = two_rainbow_cycle(almost_symmetric(45, labels[1], 1));
    auto va = visited(a.start, a.flips), vb = visited(b.start, b.flips);
    CHECK(va.size() == 1890);
    for (const auto& k : vb) CHECK(va.count(k) == 0);
}

TEST_CASE("1-rainbow paths cover every diagonal once") {
    for (int n = 5; n <= 14; ++n) {
        INFO("n = " << n);
        auto p = one_rainbow_path(n);
        std::map<Diagonal, int> in;
        for (const auto& d : p.start.diagonals()) ++in[d];
        Triangulation cur = p.start;
        for (const auto& d : p.flips) {
            auto [next, nd] = flip(cur, d);
            ++in[nd];
            cur = next;
        }
        CHECK(cur == p.end);
        CHECK(static_cast<int>(in.size()) == diagonal_count(n));
        for (const auto& [d, k] : in) CHECK(k == 1);
        CHECK(visited(p.start, p.flips).size() == p.flips.size() + 1);
        // ends are zigzags whose endpoints are neighbours on the polygon
        CHECK(dual_walk(p.start, 1).word.size() == static_cast<std::size_t>(n - 4));
        CHECK(p.end.degree(2) == 2);
    }
    CHECK(one_rainbow_path(8).flips.size() == 20 - 5);
    CHECK(one_rainbow_path(9).flips.size() == 27 - 6);
    CHECK_THROWS_AS(one_rainbow_path(4), DomainError);
}

TEST_CASE("1-rainbow path avoids a family whose label has an early long block") {
    auto labels = select_labels(45);
    auto p = one_rainbow_path(45);
    auto vp = visited(p.start, p.flips);
    for (int i : {1, 2}) {
        auto c = two_rainbow_cycle(almost_symmetric(45, labels[i - 1], i));
        for (const auto& k : visited(c.start, c.flips)) CHECK(vp.count(k) == 0);
    }
}

TEST_CASE("1-rainbow path turns with its endpoint") {
    auto p1 = one_rainbow_path(11, 1);
    auto p4 = one_rainbow_path(11, 4);
    CHECK(p4.start == rotate(p1.start, 3));
    CHECK(p4.end == rotate(p1.end, 3));
}

TEST_CASE("slot for the 1-rainbow path") {
    CHECK(one_rainbow_slot(45, 2) == 0);
    CHECK(one_rainbow_slot(45, 1) == 0);
    CHECK(one_rainbow_slot(45, 3) == 1);
    CHECK(one_rainbow_slot(45, 5) == 2);
    CHECK(one_rainbow_slot(45, 7) == 2);
    CHECK(one_rainbow_slot(46, 7) == 3);
    CHECK(one_rainbow_slot(45, 91) == 44);
}

TEST_CASE("r-rainbow cycles at n = 45") {
    for (int r : {1, 2, 3, 4, 5, 10, 17}) {
        INFO("r = " << r);
        auto c = r_rainbow_cycle(45, r);
        CHECK(c.r == r);
        CHECK(c.flips.size() == static_cast<std::size_t>(945 * r));
        auto m = removed(c.flips);
        CHECK(m.size() == 945);
        for (const auto& [d, k] : m) CHECK(k == r);
        auto v = visited(c.start, c.flips);
        CHECK(v.size() == c.flips.size());
        CHECK(replay(c).back() == c.start);
    }
    CHECK(r_rainbow_cycle(45, 2).start == star(45, 1));
    CHECK_THROWS_AS(r_rainbow_cycle(44, 2), DomainError);
    CHECK_THROWS_AS(r_rainbow_cycle(45, 0), DomainError);
    CHECK_THROWS_AS(r_rainbow_cycle(45, 93), DomainError);
}

TEST_CASE("every star in use closes the ring") {
    for (auto [n, r] : std::vector<std::pair<int, int>>{{45, 91}, {45, 92}, {46, 93}, {46, 94}}) {
        INFO("n = " << n << ", r = " << r);
        auto c = r_rainbow_cycle(n, r);
        auto m = removed(c.flips);
        CHECK(static_cast<int>(m.size()) == diagonal_count(n));
        for (const auto& [d, k] : m) CHECK(k == r);
        CHECK(visited(c.start, c.flips).size() == c.flips.size());
        CHECK(replay(c).back() == c.start);
    }
}

TEST_CASE("r-rainbow cycles at even n") {
    for (int r : {2, 3, 4, 5, 10, 45}) {
        INFO("r = " << r);
        auto c = r_rainbow_cycle(46, r);
        auto m = removed(c.flips);
        CHECK(static_cast<int>(m.size()) == diagonal_count(46));
        for (const auto& [d, k] : m) CHECK(k == r);
        CHECK(visited(c.start, c.flips).size() == c.flips.size());
    }
}

TEST_CASE("even n: a 2-rainbow cycle from the far endpoint repeats symmetric zigzags") {
    auto labels = select_labels(46);
    auto t = almost_symmetric(46, labels[0], 1);
    auto near = two_rainbow_cycle(t.base, 1);
    CHECK(visited(near.start, near.flips).size() == near.flips.size());
    auto far = two_rainbow_cycle(t.base, other_endpoint(t.base, 1));
    CHECK(visited(far.start, far.flips).size() < far.flips.size());
}

TEST_CASE("non-zigzags on the way to a star have three ears, two of them two apart") {
    for (auto [n, r] : std::vector<std::pair<int, int>>{{45, 3}, {45, 92}, {46, 94}}) {
        INFO("n = " << n << ", r = " << r);
        int seen = 0;
        for (const auto& t : replay(r_rainbow_cycle(n, r))) {
            if (is_zigzag(t)) continue;
            ++seen;
            auto d2 = t.degree_two();
            REQUIRE(d2.size() == 3);
            int close = 0;
            for (int a = 0; a < 3; ++a)
                for (int b = a + 1; b < 3; ++b) {
                    int gap = (d2[b] - d2[a] + n) % n;
                    close += gap == 2 || gap == n - 2;
                }
            CHECK(close == 1);
        }
        CHECK(seen > 0);
    }
}
