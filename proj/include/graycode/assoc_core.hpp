#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graycode/errors.hpp"

namespace graycode {

// Vertices 1..n, counterclockwise.
struct Diagonal {
    int a = 0;
    int b = 0;

    static Diagonal make(int x, int y, int n);

    friend bool operator==(const Diagonal&, const Diagonal&) = default;
    friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

std::string to_string(const Diagonal& d);  // "a-b"
bool crosses(const Diagonal& d, const Diagonal& e);

class Triangulation {
public:
    Triangulation() = default;
    // Validates count and non-crossing.
    Triangulation(int n, std::vector<Diagonal> diagonals);

    int n() const { return n_; }
    const std::vector<Diagonal>& diagonals() const { return d_; }
    bool has(const Diagonal& d) const;
    // polygon side or diagonal
    bool edge(int u, int v) const;
    int degree(int v) const;
    std::vector<int> degree_two() const;

    // Opaque hash key, equal iff the triangulations are equal.
    std::string key() const;
    // "tri n=<n> d=a-b,..."
    std::string serialize() const;
    static Triangulation parse(const std::string& s);

    friend bool operator==(const Triangulation& x, const Triangulation& y) { return x.n_ == y.n_ && x.d_ == y.d_; }

private:
    friend std::pair<Triangulation, Diagonal> flip(const Triangulation&, const Diagonal&);
    int n_ = 0;
    std::vector<Diagonal> d_;  // sorted
};

// Replaces d by the other diagonal of its quadrilateral; returns the new one too.
std::pair<Triangulation, Diagonal> flip(const Triangulation& t, const Diagonal& d);

// Vertex v goes to v+k (counterclockwise for k > 0).
Triangulation rotate(const Triangulation& t, int k);
std::vector<Triangulation> rotation_family(const Triangulation& t);

Triangulation star(int n, int center);

using Word = std::string;

struct ZigzagView {
    Triangulation base;
    std::array<int, 2> endpoints{};
    std::vector<Diagonal> dual_order;  // from endpoints[0]
};

std::optional<ZigzagView> zigzag_view(const Triangulation& t);
bool is_zigzag(const Triangulation& t);

struct DualWalk {
    std::vector<Diagonal> diagonals;
    Word word;
};

// Walks the dual path away from endpoint v. Letter r: the right end advances
// counterclockwise; l: the left end advances clockwise.
DualWalk dual_walk(const Triangulation& t, int v);
Word word(const ZigzagView& z, int from_endpoint);
Triangulation from_word(int n, int v, const Word& w);
int other_endpoint(const Triangulation& t, int v);

Word bar(const Word& w);
std::vector<std::string> blocks(const Word& w);

enum class Turn { Clockwise, Counterclockwise };

using FlipOrdering = std::vector<Diagonal>;

FlipOrdering rotation_ordering(const ZigzagView& z, int from_endpoint, Turn dir);
FlipOrdering rotation_ordering(const Triangulation& t, int from_endpoint, Turn dir);
FlipOrdering star_ordering(const ZigzagView& z, int v);
FlipOrdering star_ordering(const Triangulation& t, int v);

struct OrderingResult {
    Triangulation result;
    std::vector<Triangulation> path;  // includes the input and the result
    FlipOrdering induced;             // the diagonals flipped in, position by position
};

OrderingResult apply_ordering(const Triangulation& t, const FlipOrdering& o);

} // namespace graycode
