#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "graycode/errors.hpp"
#include "graycode/perm_cadj.hpp"
#include "support.hpp"

using namespace graycode;
using support::P;
using support::ti;

namespace {

const char* kReferenceCadj4 =
    "1234 1324 3124 3214 2314 2134 4132 4123 4213 4231 4321 4312 "
    "3412 2413 2431 1432 1423 3421 3241 2341 1342 3142 2143 1243";

std::vector<std::string> words(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

bool cyclic_adjacent(const Transposition& t, int n) { return t.b == t.a + 1 || (t.a == 1 && t.b == n); }

} // namespace

TEST_CASE("Hamilton paths to the left rotation") {
    auto l2 = hamilton_path_even(2);
    CHECK(l2.flips == std::vector<Transposition>{ti(1, 2)});
    CHECK(is_rotation_hamilton_path(l2));

    auto l4 = hamilton_path_even(4);
    CHECK(l4.flips.size() == 23);
    CHECK(is_rotation_hamilton_path(l4));
    auto ps = support::walk(TranspositionSequence{4, identity(4), l4.flips, false});
    CHECK(support::distinct(ps) == 24);
    CHECK(ps.back() == P("2341"));

    auto l6 = hamilton_path_even(6);
    CHECK(l6.flips.size() == 719);
    CHECK(is_rotation_hamilton_path(l6));
    CHECK(search_hamilton_path(6).flips == l6.flips);

    CHECK(is_rotation_hamilton_path(search_hamilton_path(8)));
    CHECK_THROWS_AS(hamilton_path_even(5), DomainError);
    CHECK_THROWS_AS(hamilton_path_even(0), DomainError);
}

TEST_CASE("a broken path is rejected") {
    auto l = hamilton_path_even(4);
    l.flips.pop_back();
    CHECK_FALSE(is_rotation_hamilton_path(l));
    auto m = hamilton_path_even(4);
    m.flips[3] = ti(1, 3);
    CHECK_FALSE(is_rotation_hamilton_path(m));
}

TEST_CASE("reversed path") {
    auto r2 = reversed_path(hamilton_path_even(2));
    CHECK(r2.flips == std::vector<Transposition>{ti(1, 2)});
    CHECK(r2.end() == P("21"));

    auto l4 = hamilton_path_even(4);
    auto r4 = reversed_path(l4);
    CHECK(r4.start == identity(4));
    CHECK(r4.end() == P("4123"));
    CHECK(support::tally(r4.flips) == support::tally(l4.flips));
    CHECK(support::distinct(support::walk(r4)) == 24);
}

TEST_CASE("G and H from the order-2 path") {
    auto l = hamilton_path_even(2);
    auto g = build_g_cadj(l);
    CHECK(support::walk_strings(g) == words("123 132 312 321 231 213"));
    auto h = build_h_cadj(l);
    CHECK(h.start == P("132"));
    CHECK(h.end() == P("312"));
    CHECK(support::distinct(support::walk(h)) == 6);
    for (const auto& t : h.flips) CHECK(t.b == t.a + 1);
    CHECK_THROWS_AS(build_g_cadj(RotationHamiltonPath{3, {}}), DomainError);
}

TEST_CASE("G and H from the order-4 path") {
    auto l = hamilton_path_even(4);
    for (const auto& s : {build_g_cadj(l), build_h_cadj(l)}) {
        auto ps = support::walk(s);
        CHECK(support::distinct(ps) == 120);
        CHECK(ps.size() == 120);
        for (const auto& t : s.flips) CHECK(t.b == t.a + 1);
    }
    CHECK(build_g_cadj(l).end() == P("21345"));
    CHECK(build_h_cadj(l).start == P("13452"));
    CHECK(build_h_cadj(l).end() == P("51234"));
}

TEST_CASE("balanced cadj code of order 4 matches the reference listing") {
    auto c = balanced_cadj(4);
    auto got = support::walk_strings(c.code);
    CHECK(got == words(kReferenceCadj4));
    // block k holds 4 fixed at one coordinate, a different one per block
    std::set<std::size_t> slots;
    for (int k = 0; k < 4; ++k) {
        std::size_t pos = got[6 * k].find('4');
        for (int j = 0; j < 6; ++j) CHECK(got[6 * k + j].find('4') == pos);
        slots.insert(pos);
    }
    CHECK(slots.size() == 4);
    CHECK(c.code.flips[5] == ti(1, 4));
    CHECK(c.code.flips[11] == ti(1, 2));
    CHECK(c.code.flips[17] == ti(2, 3));
    REQUIRE(c.code.closing());
    CHECK(*c.code.closing() == ti(3, 4));
}

TEST_CASE("balanced cadj codes are balanced") {
    for (int n : {4, 6, 8}) {
        INFO("n = " << n);
        auto c = balanced_cadj(n);
        auto ps = support::walk(c.code);
        CHECK(support::distinct(ps) == static_cast<std::size_t>(support::fact(n)));
        for (const auto& t : c.code.flips) CHECK(cyclic_adjacent(t, n));
        auto counts = support::tally_closed(c.code);
        CHECK(counts.size() == static_cast<std::size_t>(n));
        for (const auto& [k, v] : counts) CHECK(v == support::fact(n - 1));
    }
}

TEST_CASE("order 2 cadj code") {
    auto c = balanced_cadj(2);
    CHECK(support::walk_strings(c.code) == words("12 21"));
    CHECK(c.code.cyclic);
    // both cyclic slots (1,2) and (2,1) name the same pair
    CHECK(support::tally_closed(c.code)[{1, 2}] == 2);
    CHECK_THROWS_AS(balanced_cadj(5), DomainError);
}

TEST_CASE("cache line format") {
    auto l = hamilton_path_even(4);
    std::string line = format_hampath_line(l);
    CHECK(line.rfind("hampath n=4 flips=", 0) == 0);
    RotationHamiltonPath back;
    REQUIRE(parse_hampath_line(line, back));
    CHECK(back.n == 4);
    CHECK(back.flips == l.flips);
    CHECK(format_hampath_line(hamilton_path_even(2)) == "hampath n=2 flips=1 2");
    RotationHamiltonPath junk;
    CHECK_FALSE(parse_hampath_line("hampath n=x flips=1 2", junk));
    CHECK_FALSE(parse_hampath_line("path n=4 flips=1 2", junk));
    CHECK_FALSE(parse_hampath_line("hampath n=4 flips=1 2,3", junk));
}

TEST_CASE("on-disk cache is written and reused") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / ("graycode_cache_test_" + std::to_string(::getpid()));
    fs::remove_all(dir);
    ::setenv(kHampathCacheEnv, dir.c_str(), 1);
    auto a = hamilton_path_even(6);
    fs::path file = dir / "hampath.txt";
    REQUIRE(fs::exists(file));
    std::string first;
    {
        std::ifstream in(file);
        std::getline(in, first);
    }
    CHECK(first.rfind("hampath n=6 ", 0) == 0);

    // a corrupt line in front is skipped
    {
        std::ofstream out(file, std::ios::trunc);
        out << "hampath n=6 flips=1 2\n" << first << "\n";
    }
    auto b = hamilton_path_even(6);
    CHECK(b.flips == a.flips);
    ::unsetenv(kHampathCacheEnv);
    fs::remove_all(dir);
}
