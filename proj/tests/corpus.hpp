// Shared named graph corpus for tests.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "copbench/constructions.hpp"
#include "copbench/generators.hpp"
#include "copbench/graph.hpp"

namespace corpus {

inline copbench::Graph bowtie() {
    return copbench::Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
}

inline copbench::Graph heawood() {
    return copbench::incidence_graph(copbench::projective_plane(2));
}

// Connected graphs exercising every construction family at small scale.
inline std::vector<std::pair<std::string, copbench::Graph>> connected_corpus() {
    using namespace copbench;
    std::vector<std::pair<std::string, Graph>> out;
    for (int n : {3, 5, 6, 8, 12}) out.emplace_back("C" + std::to_string(n), cycle_graph(n));
    for (int n : {2, 4, 6}) out.emplace_back("P" + std::to_string(n), path_graph(n));
    out.emplace_back("K4", complete_graph(4));
    out.emplace_back("K5", complete_graph(5));
    out.emplace_back("K33", complete_bipartite(3, 3));
    out.emplace_back("star6", star_graph(6));
    out.emplace_back("bowtie", bowtie());
    out.emplace_back("petersen", petersen_graph());
    out.emplace_back("heawood", heawood());
    out.emplace_back("incidence3", incidence_graph(projective_plane(3)));
    out.emplace_back("polarity2", polarity_graph(2));
    out.emplace_back("polarity3", polarity_graph(3));
    out.emplace_back("circ8_12", circulant_graph(8, {1, 2}));
    out.emplace_back("circ12_13", circulant_graph(12, {1, 3}));
    out.emplace_back("lexC5K2", lex_product(cycle_graph(5), complete_graph(2)));
    out.emplace_back("coverPetersen", double_cover(petersen_graph()));
    return out;
}

} // namespace corpus
