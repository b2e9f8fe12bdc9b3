#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "graycode/assoc_core.hpp"
#include "graycode/errors.hpp"

using namespace graycode;

namespace {

Diagonal D(int a, int b) { return Diagonal{a, b}; }

std::vector<Word> all_words(int len) {
    std::vector<Word> out;
    for (int x = 0; x < (1 << len); ++x) {
        Word w;
        for (int j = 0; j < len; ++j) w.push_back(x >> j & 1 ? 'r' : 'l');
        out.push_back(w);
    }
    return out;
}

} // namespace

TEST_CASE("diagonals") {
    CHECK(Diagonal::make(5, 2, 6) == D(2, 5));
    CHECK_THROWS_AS(Diagonal::make(1, 2, 6), DomainError);
    CHECK_THROWS_AS(Diagonal::make(1, 6, 6), DomainError);
    CHECK_THROWS_AS(Diagonal::make(3, 3, 6), DomainError);
    CHECK_THROWS_AS(Diagonal::make(0, 3, 6), DomainError);
    CHECK(to_string(D(2, 5)) == "2-5");
    CHECK(crosses(D(1, 3), D(2, 4)));
    CHECK_FALSE(crosses(D(1, 3), D(3, 5)));
    CHECK_FALSE(crosses(D(1, 4), D(2, 3)));
}

TEST_CASE("triangulation validation and text form") {
    CHECK_THROWS_AS(Triangulation(6, {D(1, 3), D(2, 4), D(1, 5)}), DomainError);
    CHECK_THROWS_AS(Triangulation(6, {D(1, 3), D(1, 4)}), DomainError);
    CHECK_THROWS_AS(Triangulation(3, {}), DomainError);
    Triangulation t(6, {D(3, 5), D(1, 3), D(1, 5)});
    CHECK(t.serialize() == "tri n=6 d=1-3,1-5,3-5");
    CHECK(Triangulation::parse(t.serialize()) == t);
    CHECK_THROWS_AS(Triangulation::parse("tri n=6 d=1-3,1-5"), DomainError);
    CHECK_THROWS_AS(Triangulation::parse("triangle n=6"), DomainError);
    CHECK_THROWS_AS(Triangulation::parse("tri n=6 d=1+3,1-5,3-5"), DomainError);
    CHECK(t.degree(1) == 4);
    CHECK(t.degree_two() == std::vector<int>{2, 4, 6});
}

TEST_CASE("flip") {
    Triangulation sq(4, {D(1, 3)});
    auto [t1, d1] = flip(sq, D(1, 3));
    CHECK(t1 == Triangulation(4, {D(2, 4)}));
    CHECK(d1 == D(2, 4));

    Triangulation p5(5, {D(1, 3), D(1, 4)});
    auto [t2, d2] = flip(p5, D(1, 3));
    CHECK(t2 == Triangulation(5, {D(2, 4), D(1, 4)}));
    CHECK(d2 == D(2, 4));
    CHECK(flip(t2, d2).first == p5);
    CHECK_THROWS_AS(flip(p5, D(2, 4)), DomainError);
}

TEST_CASE("flips are involutions and keep validity") {
    std::mt19937 rng(11);
    for (int n = 5; n <= 12; ++n) {
        Triangulation t = star(n, 1);
        for (int step = 0; step < 200; ++step) {
            const auto& ds = t.diagonals();
            Diagonal d = ds[rng() % ds.size()];
            auto [u, nd] = flip(t, d);
            CHECK(static_cast<int>(u.diagonals().size()) == n - 3);
            CHECK(u.has(nd));
            CHECK_FALSE(u.has(d));
            CHECK(flip(u, nd).first == t);
            // the constructor re-validates non-crossing
            CHECK_NOTHROW(Triangulation(n, u.diagonals()));
            t = u;
        }
    }
}

TEST_CASE("zigzag view") {
    auto z = zigzag_view(star(6, 1));
    REQUIRE(z);
    CHECK(z->endpoints == std::array<int, 2>{2, 6});
    CHECK(z->dual_order.size() == 3);
    CHECK_FALSE(zigzag_view(Triangulation(6, {D(1, 3), D(3, 5), D(1, 5)})));
    CHECK(is_zigzag(Triangulation(4, {D(1, 3)})));
}

TEST_CASE("words") {
    auto z = *zigzag_view(star(6, 1));
    CHECK(word(z, 2) == "rr");
    CHECK(word(z, 6) == "ll");
    CHECK(word(z, 6) == bar(word(z, 2)));
    CHECK_THROWS_AS(word(z, 3), DomainError);
    auto f = *zigzag_view(Triangulation(5, {D(1, 3), D(1, 4)}));
    CHECK(word(f, 2).size() == 1);
}

TEST_CASE("bar and blocks") {
    CHECK(bar("ll") == "rr");
    CHECK(bar("lr") == "lr");
    CHECK(bar("") == "");
    std::mt19937 rng(5);
    for (int i = 0; i < 100; ++i) {
        Word w;
        for (int j = 0, len = static_cast<int>(rng() % 20); j < len; ++j) w.push_back(rng() % 2 ? 'l' : 'r');
        CHECK(bar(bar(w)) == w);
    }
    CHECK(blocks("lllrrrlllrl") == std::vector<std::string>{"lll", "rrr", "lll", "r", "l"});
    CHECK(blocks("l") == std::vector<std::string>{"l"});
    CHECK(blocks("").empty());
}

TEST_CASE("words round-trip and are invariant under rotation") {
    for (int n = 5; n <= 10; ++n)
        for (const auto& w : all_words(n - 4)) {
            Triangulation t = from_word(n, 1, w);
            CHECK(dual_walk(t, 1).word == w);
            CHECK(dual_walk(t, other_endpoint(t, 1)).word == bar(w));
            for (int k = 1; k < n; ++k) {
                Triangulation r = rotate(t, k);
                CHECK(dual_walk(r, (k % n) + 1).word == w);
            }
        }
    CHECK_THROWS_AS(from_word(6, 1, "rx"), DomainError);
    CHECK_THROWS_AS(from_word(6, 1, "r"), DomainError);
}

TEST_CASE("rotation orderings rotate by one vertex") {
    auto star1 = star(6, 1);
    auto r = apply_ordering(star1, rotation_ordering(star1, 2, Turn::Counterclockwise));
    CHECK(r.result == star(6, 2));
    auto l = apply_ordering(star1, rotation_ordering(star1, 2, Turn::Clockwise));
    CHECK(l.result == star(6, 6));

    Triangulation t8 = from_word(8, 1, "rlrl");
    CHECK(apply_ordering(t8, rotation_ordering(t8, 1, Turn::Counterclockwise)).result == rotate(t8, 1));
    CHECK(apply_ordering(t8, rotation_ordering(t8, 1, Turn::Clockwise)).result == rotate(t8, -1));
    CHECK_THROWS_AS(rotation_ordering(Triangulation(6, {D(1, 3), D(3, 5), D(1, 5)}), 2, Turn::Clockwise), DomainError);
    auto z = *zigzag_view(t8);
    CHECK_THROWS_AS(rotation_ordering(z, 3, Turn::Clockwise), DomainError);
}

TEST_CASE("apply_ordering iterates to the rotation family") {
    for (int n = 6; n <= 10; ++n)
        for (const auto& w : all_words(n - 4)) {
            Triangulation t = from_word(n, 1, w);
            if (rotation_family(t).size() != static_cast<std::size_t>(n)) continue;
            FlipOrdering o = rotation_ordering(t, 1, Turn::Clockwise);
            Triangulation cur = t;
            for (int k = 0; k < n; ++k) {
                auto res = apply_ordering(cur, o);
                CHECK(res.path.size() == static_cast<std::size_t>(n - 2));
                for (const auto& mid : res.path) CHECK(is_zigzag(mid));
                FlipOrdering sorted = res.induced;
                std::sort(sorted.begin(), sorted.end());
                CHECK(sorted == res.result.diagonals());
                cur = res.result;
                o = res.induced;
            }
            CHECK(cur == t);
        }
}

TEST_CASE("apply_ordering rejects orderings that are not permutations") {
    auto t = star(6, 1);
    CHECK_THROWS_AS(apply_ordering(t, {D(1, 3), D(1, 4)}), DomainError);
    CHECK_THROWS_AS(apply_ordering(t, {D(1, 3), D(1, 4), D(1, 4)}), DomainError);
}

TEST_CASE("star orderings") {
    Triangulation snake(6, {D(2, 6), D(3, 6), D(3, 5)});
    auto z = zigzag_view(snake);
    REQUIRE(z);
    auto r = apply_ordering(snake, star_ordering(*z, 1));
    CHECK(r.result.degree(1) == 5);
    CHECK(r.result == star(6, 1));
    CHECK_THROWS_AS(star_ordering(*z, 2), DomainError);

    for (int n = 5; n <= 9; ++n) {
        auto s = star(n, 3);
        auto res = apply_ordering(s, star_ordering(s, 2));
        CHECK(res.path.size() == static_cast<std::size_t>(n - 2));
        CHECK(res.result == star(n, 2));
    }
    Triangulation sq(4, {D(1, 3)});
    auto one = apply_ordering(sq, star_ordering(sq, 2));
    CHECK(one.induced.size() == 1);
    CHECK(one.result.degree(2) == 3);
}

TEST_CASE("rotation families") {
    // centrally symmetric
    Triangulation z(6, {D(1, 3), D(1, 4), D(4, 6)});
    CHECK(rotation_family(z).size() == 3);
    CHECK(rotation_family(Triangulation(6, {D(1, 3), D(1, 4), D(1, 5)})).size() == 6);
    CHECK(rotation_family(Triangulation(6, {D(1, 3), D(3, 5), D(1, 5)})).size() == 2);
    CHECK(rotate(star(7, 1), 3) == star(7, 4));
    CHECK(rotate(star(7, 1), -1) == star(7, 7));
}

TEST_CASE("each diagonal lies in exactly two members of a zigzag family") {
    for (int n = 5; n <= 9; ++n)
        for (const auto& w : all_words(n - 4)) {
            Triangulation t = from_word(n, 1, w);
            std::map<Diagonal, int> seen;
            for (int k = 0; k < n; ++k) {
                Triangulation r = rotate(t, k);
                for (const auto& d : r.diagonals()) ++seen[d];
            }
            CHECK(static_cast<int>(seen.size()) == n * (n - 3) / 2);
            for (const auto& [d, c] : seen) CHECK(c == 2);
        }
}
