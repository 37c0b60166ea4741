#include "mim/families.hpp"

#include <stdexcept>

namespace mim {

BookLabeling::BookLabeling(int m, int n) : m_(m), n_(n) {
    if (m < 2 || n < 1) throw std::invalid_argument("BookLabeling: need m >= 2 and n >= 1");
}

VertexId BookLabeling::id(int column, int position) const {
    if (column < 1 || column > n_)
        throw std::out_of_range("BookLabeling: column " + std::to_string(column) +
                                " out of [1, " + std::to_string(n_) + "]");
    if (position < 1 || position > m_)
        throw std::out_of_range("BookLabeling: position " + std::to_string(position) +
                                " out of [1, " + std::to_string(m_) + "]");
    return (column - 1) * m_ + (position - 1);
}

std::pair<int, int> BookLabeling::coords(VertexId v) const {
    if (v < 0 || v >= m_ * n_)
        throw std::out_of_range("BookLabeling: vertex id " + std::to_string(v) + " out of range");
    return {v / m_ + 1, v % m_ + 1};
}

Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path: need n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

Graph star(int m) {
    if (m < 2) throw std::invalid_argument("star: need m >= 2");
    std::vector<Edge> edges;
    for (int j = 1; j < m; ++j) edges.emplace_back(0, j);
    return Graph(m, edges);
}

Graph grid3(int n) {
    if (n < 1) throw std::invalid_argument("grid3: need n >= 1");
    return cartesian_product(path(3), path(n));
}

StackedBook stacked_book(int m, int n) {
    BookLabeling lab(m, n);  // validates ranges
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = 2; j <= m; ++j) edges.emplace_back(lab.center(i), lab.id(i, j));
    for (int i = 1; i < n; ++i)
        for (int j = 1; j <= m; ++j) edges.emplace_back(lab.id(i, j), lab.id(i + 1, j));
    return {Graph(m * n, edges), lab};
}

namespace {

int parse_int(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        int value = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return value;
    } catch (const std::exception&) {
        throw std::invalid_argument("family spec: bad " + what + " `" + text + "`");
    }
}

}  // namespace

FamilySpec FamilySpec::parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("family spec `" + text +
                                    "`: expected <kind>:<params>, e.g. path:5 or book:4x5");
    std::string kind = text.substr(0, colon);
    std::string params = text.substr(colon + 1);
    FamilySpec spec;
    if (kind == "path") {
        spec.kind = Kind::path;
        spec.n = parse_int(params, "length");
    } else if (kind == "cycle") {
        spec.kind = Kind::cycle;
        spec.n = parse_int(params, "length");
    } else if (kind == "star") {
        spec.kind = Kind::star;
        spec.m = parse_int(params, "order");
    } else if (kind == "grid3") {
        spec.kind = Kind::grid3;
        spec.n = parse_int(params, "length");
    } else if (kind == "book") {
        auto x = params.find('x');
        if (x == std::string::npos)
            throw std::invalid_argument("family spec `" + text + "`: expected book:<m>x<n>");
        spec.kind = Kind::stacked_book;
        spec.m = parse_int(params.substr(0, x), "m");
        spec.n = parse_int(params.substr(x + 1), "n");
    } else {
        throw std::invalid_argument("family spec: unknown kind `" + kind + "`");
    }
    return spec;
}

Graph FamilySpec::build() const {
    switch (kind) {
        case Kind::path: return path(n);
        case Kind::cycle: return cycle(n);
        case Kind::star: return star(m);
        case Kind::grid3: return grid3(n);
        case Kind::stacked_book: return stacked_book(m, n).graph;
    }
    throw std::logic_error("FamilySpec: bad kind");
}

std::string FamilySpec::to_string() const {
    switch (kind) {
        case Kind::path: return "path:" + std::to_string(n);
        case Kind::cycle: return "cycle:" + std::to_string(n);
        case Kind::star: return "star:" + std::to_string(m);
        case Kind::grid3: return "grid3:" + std::to_string(n);
        case Kind::stacked_book: return "book:" + std::to_string(m) + "x" + std::to_string(n);
    }
    throw std::logic_error("FamilySpec: bad kind");
}

}  // namespace mim
