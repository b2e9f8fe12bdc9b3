#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "graycode/assoc_rainbow.hpp"
#include "graycode/perm_core.hpp"

namespace graycode {

enum class CertificateKind { GrayCode, BalancedCycle, RainbowCycle };
enum class FlipModel { All, Cadj, Adj };

struct Certificate {
    CertificateKind kind = CertificateKind::GrayCode;
    int order = 0;
    std::map<std::pair<int, int>, long long> counts;  // per color, closing included
    long long flips = 0;                       // closing included
    long long distinct = 0;
    bool cyclic = false;
    std::optional<long long> achieved;  // the common count when all colors agree
    bool pass = false;
    std::vector<std::string> failures;

    std::string render() const;
};

std::string kind_name(CertificateKind k);
std::string model_name(FlipModel m);

Certificate verify_perm_code(const TranspositionSequence& s, FlipModel model, bool expect_hamiltonian,
                             std::optional<long long> expected_count);

Certificate verify_assoc_cycle(const AssocRainbowCycle& c, std::optional<long long> expected_r = std::nullopt);

// Open path: start plus flips, reporting each diagonal's flip-in count
// (the start's diagonals counted once).
Certificate verify_assoc_path(const Triangulation& start, const std::vector<Diagonal>& flips);

enum class GraphModel { PermAll, PermCadj, PermAdj, Assoc };

struct FlipGraph {
    GraphModel model = GraphModel::PermAll;
    int order = 0;
    std::vector<std::string> vertices;  // canonical keys
    std::unordered_map<std::string, int> index;
    std::vector<std::vector<int>> adj;
    long long edge_count() const;
    bool has_edge(const std::string& u, const std::string& v) const;
};

std::string perm_vertex_key(const Permutation& p);
std::string tri_vertex_key(const Triangulation& t);

FlipGraph brute_force_flip_graph(int order, GraphModel model);

// Every consecutive pair (and the closing pair for cycles) is a graph edge.
bool steps_are_edges(const FlipGraph& g, const TranspositionSequence& s);
bool steps_are_edges(const FlipGraph& g, const AssocRainbowCycle& c);

long long catalan(int k);

} // namespace graycode
