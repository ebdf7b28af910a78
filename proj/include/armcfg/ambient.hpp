#pragma once

#include <memory>
#include <string_view>
#include <utility>

#include "armcfg/graph.hpp"

namespace armcfg {

/// The fixed data (G, b, l) every arm-related object lives in: a connected
/// graph, the anchor vertex and the arm length.
class Arm {
public:
    Arm(std::shared_ptr<const Graph> graph, Vertex base, int length);
    Arm(Graph graph, std::string_view base, int length);

    const Graph& graph() const noexcept { return *graph_; }
    const std::shared_ptr<const Graph>& shared_graph() const noexcept { return graph_; }
    Vertex base() const noexcept { return base_; }
    int length() const noexcept { return length_; }
    /// n = |V_G|.
    int vertex_count() const noexcept { return static_cast<int>(graph_->size()); }

    /// Same graph object, anchor and length.
    friend bool operator==(const Arm& a, const Arm& b) noexcept {
        return a.graph_ == b.graph_ && a.base_ == b.base_ && a.length_ == b.length_;
    }

private:
    Arm(std::pair<std::shared_ptr<const Graph>, Vertex> anchored, int length);

    std::shared_ptr<const Graph> graph_;
    Vertex base_;
    int length_;
};

}  // namespace armcfg
