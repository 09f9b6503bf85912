// Regenerates tests/data: gen_corpus <graphs_out> <digraphs_out>

#include <fstream>
#include <iostream>

#include "corpus.hpp"

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: gen_corpus <graphs.g6> <digraphs.d6>\n";
        return 2;
    }
    std::ofstream g(argv[1]);
    for (std::size_t n = 0; n <= 7; ++n)
        for (const auto& graph : corpus::graphs_up_to_isomorphism(n))
            g << immanant::to_graph6(graph) << '\n';
    std::ofstream d(argv[2]);
    for (std::size_t n = 0; n <= 4; ++n)
        for (const auto& dg : corpus::all_digraphs(n))
            d << immanant::to_digraph6(dg) << '\n';
    return g && d ? 0 : 1;
}
