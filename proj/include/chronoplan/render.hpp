#ifndef CHRONOPLAN_RENDER_HPP
#define CHRONOPLAN_RENDER_HPP

#include <string>
#include <vector>

#include "chronoplan/evolving_graph.hpp"
#include "chronoplan/travel.hpp"

namespace chronoplan {

// Text grid: one row per time instant (time 0 on top), one column per node.
// A cell shows the label of a travel stepping there ('A', 'B', ...; '+' when
// travels overlap), otherwise 'o' if the node has an edge at that instant,
// otherwise '.'. The edges of each snapshot are listed to the right.
std::string render_grid(const EvolvingGraph& g, const std::vector<Travel>& travels);

// The same picture as a layered DOT digraph: one subgraph rank per time
// instant, snapshot edges undirected, travel steps as colored arcs.
std::string render_dot(const EvolvingGraph& g, const std::vector<Travel>& travels);

}  // namespace chronoplan

#endif
