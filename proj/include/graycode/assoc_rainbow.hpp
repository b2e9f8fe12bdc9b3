#pragma once

#include <string>
#include <vector>

#include "graycode/assoc_core.hpp"

namespace graycode {

using Label = std::string;

struct AlmostSymmetricZigzag {
    Triangulation base;
    Label label;
    int endpoint = 0;
    Word word;
};

// A closed walk: flips holds the removed diagonal at every step, the last
// one returning to start.
struct AssocRainbowCycle {
    int n = 0;
    int r = 0;
    Triangulation start;
    std::vector<Diagonal> flips;
};

struct OneRainbowPath {
    Triangulation start;
    std::vector<Diagonal> flips;
    Triangulation end;
};

int label_length(int n);
bool label_capacity_ok(int n);
std::vector<Label> select_labels(int n);

AlmostSymmetricZigzag almost_symmetric(int n, const Label& label, int i);

AssocRainbowCycle two_rainbow_cycle(const AlmostSymmetricZigzag& t);
AssocRainbowCycle two_rainbow_cycle(const Triangulation& t, int endpoint);

// Starts at the zigzag with word "rlrl..." and endpoint e; ends at endpoint e+1.
OneRainbowPath one_rainbow_path(int n, int e = 1);

// Which family gets replaced by the 1-rainbow path for odd r (0 when none).
int one_rainbow_slot(int n, int r);

AssocRainbowCycle r_rainbow_cycle(int n, int r);

std::vector<Triangulation> replay(const AssocRainbowCycle& c);

} // namespace graycode
