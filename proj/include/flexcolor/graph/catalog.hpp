#pragma once

#include "flexcolor/graph/graph.hpp"

namespace flexcolor::catalog {

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
// K4 minus the edge 2-3: vertices 0,1 have degree 3, vertices 2,3 degree 2.
Graph diamond();
Graph prism();
Graph cube();
// Vertex order follows the pattern roles (see pattern.hpp).
Graph h5();
Graph h7();

}  // namespace flexcolor::catalog
