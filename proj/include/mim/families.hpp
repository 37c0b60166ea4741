#ifndef MIM_FAMILIES_HPP
#define MIM_FAMILIES_HPP

#include <string>
#include <utility>

#include "mim/graph.hpp"

namespace mim {

// Names every vertex of a stacked book by (column, position): column i in
// [1, n], position j in [1, m], position 1 being the star center of the
// column. Vertex id of (i, j) is (i-1)*m + (j-1), centers first within
// each column, so witnesses are reproducible across runs.
class BookLabeling {
public:
    BookLabeling(int m, int n);

    int m() const { return m_; }
    int n() const { return n_; }

    VertexId id(int column, int position) const;
    std::pair<int, int> coords(VertexId v) const;  // -> (column, position)
    VertexId center(int column) const { return id(column, 1); }

private:
    int m_, n_;
};

Graph path(int n);   // n >= 1 vertices
Graph cycle(int n);  // n >= 3
Graph star(int m);   // m >= 2 vertices, vertex 0 is the center
Graph grid3(int n);  // P_3 x P_n

struct StackedBook {
    Graph graph;
    BookLabeling labeling;
};

// n columns of S_m with corresponding vertices of consecutive columns
// joined; equals star(m) x path(n) up to the labeling above.
StackedBook stacked_book(int m, int n);

// CLI family strings: path:<n>, cycle:<n>, star:<m>, grid3:<n>, book:<m>x<n>.
struct FamilySpec {
    enum class Kind { path, cycle, star, grid3, stacked_book };

    Kind kind = Kind::path;
    int m = 0;  // star size, where applicable
    int n = 0;  // length / column count, where applicable

    static FamilySpec parse(const std::string& text);
    Graph build() const;
    std::string to_string() const;
};

}  // namespace mim

#endif
