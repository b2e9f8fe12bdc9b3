#pragma once

#include <optional>
#include <string>

#include "graycode/assoc_rainbow.hpp"
#include "graycode/perm_core.hpp"

namespace graycode {

enum class Target { PermAll, PermCadj, PermAdjRainbow, Assoc };

std::string target_name(Target t);
std::optional<Target> parse_target(const std::string& s);

// What a file claims: the sequence plus the multiplicity it should have.
// r is absent for the balanced (Hamiltonian) permutation codes.
struct Artifact {
    Target target = Target::PermAll;
    int n = 0;
    std::optional<long long> r;
    TranspositionSequence perm;  // permutation targets
    std::optional<Transposition> closing;  // as declared, for cyclic codes
    AssocRainbowCycle assoc;     // Target::Assoc
};

Artifact make_artifact(Target t, const TranspositionSequence& s, std::optional<long long> r);
Artifact make_artifact(const AssocRainbowCycle& c);

std::string to_text(const Artifact& a);
std::string to_json(const Artifact& a);

// Either format; picks JSON when the first non-blank character is '{'.
// Throws DomainError on malformed input.
Artifact parse_artifact(const std::string& s);

bool operator==(const Artifact& x, const Artifact& y);

} // namespace graycode
