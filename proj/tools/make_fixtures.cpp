// Regenerates the JSON fixtures under fixtures/ (run from the repo root).

#include <fstream>
#include <iostream>

#include "zres/curve_graph.hpp"
#include "zres/json_io.hpp"

using namespace zres;

namespace {

void write(const std::string& path, const CurveGraph& g) {
    std::ofstream out(path);
    out << dump_canonical(curve_graph_to_json(g));
    std::cout << path << "\n";
}

} // namespace

int main(int argc, char** argv) {
    std::string dir = "fixtures";
    if (argc > 1) dir = argv[1];

    CurveGraph cusp;
    cusp.name = "cusp";
    cusp.vertices = {{"A1", -3, 2}, {"A2", -1, 6}, {"A3", -2, 3}};
    cusp.edges = {{"A1", "A2"}, {"A2", "A3"}};
    cusp.arrows = {{"St1", "A2", 1}};
    write(dir + "/cusp.json", cusp);

    CurveGraph node;
    node.name = "node";
    node.vertices = {{"A", -1, 2}};
    node.arrows = {{"St1", "A", 1}, {"St2", "A", 1}};
    write(dir + "/node.json", node);

    for (long long q = 3; q <= 9; ++q)
        write(dir + "/brieskorn_2_" + std::to_string(q) + ".json", brieskorn_graph(2, q));
    write(dir + "/brieskorn_3_5.json", brieskorn_graph(3, 5));

    auto refined = random_refinement(cusp, 7, 4);
    refined.name = "cusp_refined_seed7";
    write(dir + "/cusp_refined_seed7.json", refined);

    // single vertex violating e*m + adjacent multiplicities = 0
    CurveGraph bad;
    bad.name = "bad_relation";
    bad.vertices = {{"A", -1, 3}};
    bad.arrows = {{"St1", "A", 1}};
    write(dir + "/bad_relation.json", bad);

    return 0;
}
