#ifndef MIM_CONSTRUCTIONS_HPP
#define MIM_CONSTRUCTIONS_HPP

#include <string>

#include "mim/matching.hpp"

namespace mim {

// An explicit witness on stacked_book(m, n), checker-certified before it
// is returned. achieved_size may fall short of claimed_size for the
// general schemes; that gap is reported, never asserted away.
struct ConstructionResult {
    Matching matching;  // provenance = construction
    int claimed_size = 0;
    int achieved_size = 0;
    std::string scheme;
};

// Leaf cross-edges between columns 1 and 2: size m-1.
ConstructionResult construct_n2(int m);

// Leaf cross-edges between columns 2 and 3: size m-1.
ConstructionResult construct_n3(int m);

// Leaf cross-edges between columns 1 and 2 plus one star edge in column 4:
// size m.
ConstructionResult construct_n4(int m);

// Leaf cross-edges between columns 1-2 and 4-5: size 2(m-1).
ConstructionResult construct_n5(int m);

// Best certified witness among a fixed scheme family for n >= 6:
// (a) period-4 cross-edge tiling, (b) the tiling plus any far-end star
// edges the checker admits, (c) the greedy bound on the full graph.
ConstructionResult construct_general(int m, int n);

// Dispatcher used by sweeps: n = 1 places a single star edge, n in [2,5]
// uses the per-n builders, n >= 6 the general scheme family.
ConstructionResult construct_for(int m, int n);

}  // namespace mim

#endif
