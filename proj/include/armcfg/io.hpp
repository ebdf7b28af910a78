#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "armcfg/complex.hpp"
#include "armcfg/planner.hpp"

namespace armcfg {

using Json = nlohmann::json;

struct GraphDocument {
    std::shared_ptr<const Graph> graph;
    std::optional<std::string> base;
};

/// {"vertices":[...], "edges":[[v,w],...], "base":v?}. Throws InputError on
/// malformed JSON, schema violations, graph defects or an unknown base.
GraphDocument load_graph(std::string_view text);
GraphDocument load_graph_file(const std::string& path);

Json to_json(const Graph& g, const GraphPath& p);
Json to_json(const Graph& g, const IndexedPath& u);
/// The maximal antichain.
Json to_json(const PipInstance& pip, const LowerSet& mu);
Json to_json(const Graph& g, const PathTableau& t);
Json to_json(const Graph& g, const ExtendedTableau& u);
Json to_json(const Graph& g, const Configuration& x);
Json to_json(const Graph& g, const Move& m);
Json to_json(const Graph& g, const Plan& plan);
Json to_json(const Graph& g, const DiameterReport& rep);
Json fvector_json(const std::vector<std::size_t>& f);
/// {"vertices":n, "root":r, "cubes":[[corner lists of dimension 0], ...]}.
Json complex_json(const CubicalComplex& k);

Configuration configuration_from_json(const Arm& arm, const Json& j);
Move move_from_json(const Graph& g, const Json& j);

/// JSON array of [vertex, height] pairs, or the tableau shorthand
/// "b,a,d:0,1" (path vertices, then labels). Throws InputError.
Configuration parse_configuration(const Arm& arm, std::string_view text);

/// Hasse diagram: cover arcs upward, minimal inconsistent pairs dashed.
std::string hasse_dot(const PipInstance& pip);
/// Transition graph; nodes carry a short hash of the configuration unless
/// full labels are requested.
std::string transition_dot(const Arm& arm, const TransitionGraph& tg, bool full_labels);

}  // namespace armcfg
