#pragma once

#include "colpath/graph.hpp"

namespace colpath {

// Named constructions used as test corpus and by the `gen` subcommand.

// Cycle on k >= 3 vertices, edges i -- i+1 mod k.
Graph cycle_graph(int k);

// Path on k >= 1 vertices, edges i -- i+1.
Graph path_graph(int k);

// Complete graph on k >= 1 vertices.
Graph complete_graph(int k);

// The Petersen graph: outer 5-cycle 0..4, spokes to 5..9, inner pentagram.
Graph petersen_graph();

// The Chvatal graph: 4-regular, triangle-free, 12 vertices, girth 4.
Graph chvatal_graph();

// Iterated Mycielskian of K2.  depth 0 is K2, 1 is C5, 2 is the Grotzsch
// graph.  Rejects depths whose result would exceed the vertex cap.
Graph mycielski_tower(int depth);

// The Grotzsch graph in mycielski_tower(2) vertex layout.
Graph grotzsch_graph();

}  // namespace colpath
