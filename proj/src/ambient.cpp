#include "armcfg/ambient.hpp"

#include "armcfg/errors.hpp"

namespace armcfg {

Arm::Arm(std::shared_ptr<const Graph> graph, Vertex base, int length)
    : graph_(std::move(graph)), base_(base), length_(length) {
    if (!graph_) throw InputError("arm needs a graph");
    if (!graph_->contains(base_)) throw InputError("base vertex is not in the graph");
    if (length_ < 0) throw InputError("arm length must be non-negative");
}

namespace {

std::pair<std::shared_ptr<const Graph>, Vertex> anchor(Graph graph, std::string_view base) {
    Vertex b = graph.vertex(base);
    return {std::make_shared<const Graph>(std::move(graph)), b};
}

}  // namespace

Arm::Arm(Graph graph, std::string_view base, int length)
    : Arm(anchor(std::move(graph), base), length) {}

Arm::Arm(std::pair<std::shared_ptr<const Graph>, Vertex> anchored, int length)
    : Arm(std::move(anchored.first), anchored.second, length) {}

}  // namespace armcfg
