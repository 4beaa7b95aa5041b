#include "hyperconn/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hyperconn {

bool IncidenceMatrix::same_cells(const IncidenceMatrix& other) const {
    return cells == other.cells;
}

Hypergraph Hypergraph::build(const std::vector<std::string>& vertices,
                             const std::vector<EdgeSpec>& edges) {
    if (vertices.empty())
        raise(Errc::EmptyVertexSet, "a hypergraph needs at least one vertex");

    Hypergraph h;
    h.vertex_names_.reserve(vertices.size());
    for (const auto& v : vertices) {
        if (!h.vertex_index_.emplace(v, static_cast<int>(h.vertex_names_.size())).second)
            raise(Errc::DuplicateId, "vertex '" + v + "' declared twice");
        h.vertex_names_.push_back(v);
    }
    h.incident_.resize(h.vertex_names_.size());

    h.edge_names_.reserve(edges.size());
    for (const auto& [id, subset] : edges) {
        if (!h.edge_index_.emplace(id, static_cast<int>(h.edge_names_.size())).second)
            raise(Errc::DuplicateId, "edge '" + id + "' declared twice");
        h.edge_names_.push_back(id);

        std::vector<int> mem;
        mem.reserve(subset.size());
        for (const auto& v : subset) {
            auto it = h.vertex_index_.find(v);
            if (it == h.vertex_index_.end())
                raise(Errc::UnknownVertexInEdge,
                      "edge '" + id + "' mentions undeclared vertex '" + v + "'");
            mem.push_back(it->second);
        }
        std::sort(mem.begin(), mem.end());
        mem.erase(std::unique(mem.begin(), mem.end()), mem.end());
        h.members_.push_back(std::move(mem));
    }

    for (int e = 0; e < h.edge_count(); ++e)
        for (int v : h.members_[e])
            h.incident_[v].push_back(e);
    return h;
}

Hypergraph Hypergraph::from_incidence_matrix(const IncidenceMatrix& m) {
    const std::size_t rows = m.cells.size();
    if (rows == 0)
        raise(Errc::MalformedMatrix, "matrix needs at least one row");
    const std::size_t cols = m.cells.front().size();
    for (const auto& row : m.cells) {
        if (row.size() != cols)
            raise(Errc::MalformedMatrix, "ragged rows");
        for (auto c : row)
            if (c != 0 && c != 1)
                raise(Errc::MalformedMatrix, "cells must be 0 or 1");
    }

    std::vector<std::string> vertices;
    for (std::size_t i = 0; i < rows; ++i)
        vertices.push_back("v" + std::to_string(i + 1));
    std::vector<EdgeSpec> edges;
    for (std::size_t j = 0; j < cols; ++j) {
        std::vector<std::string> subset;
        for (std::size_t i = 0; i < rows; ++i)
            if (m.cells[i][j])
                subset.push_back(vertices[i]);
        edges.emplace_back("e" + std::to_string(j + 1), std::move(subset));
    }
    return build(vertices, edges);
}

int Hypergraph::vertex_index(const std::string& v) const {
    auto it = vertex_index_.find(v);
    if (it == vertex_index_.end())
        raise(Errc::UnknownVertex, "no vertex '" + v + "'");
    return it->second;
}

int Hypergraph::edge_index(const std::string& e) const {
    auto it = edge_index_.find(e);
    if (it == edge_index_.end())
        raise(Errc::UnknownEdge, "no edge '" + e + "'");
    return it->second;
}

std::vector<std::string> Hypergraph::member_names(const std::string& edge) const {
    std::vector<std::string> out;
    for (int v : members_[edge_index(edge)])
        out.push_back(vertex_names_[v]);
    std::sort(out.begin(), out.end());
    return out;
}

int Hypergraph::degree(const std::string& v) const {
    return degree_at(vertex_index(v));
}

int Hypergraph::edge_cardinality(const std::string& e) const {
    return edge_cardinality_at(edge_index(e));
}

std::vector<Flag> Hypergraph::flags() const {
    std::vector<Flag> out;
    out.reserve(flag_count());
    for (int e = 0; e < edge_count(); ++e)
        for (int v : members_[e])
            out.push_back(Flag{vertex_names_[v], edge_names_[e]});
    std::sort(out.begin(), out.end(), [](const Flag& a, const Flag& b) {
        return std::tie(a.vertex, a.edge) < std::tie(b.vertex, b.edge);
    });
    return out;
}

std::size_t Hypergraph::flag_count() const {
    std::size_t n = 0;
    for (const auto& mem : members_)
        n += mem.size();
    return n;
}

int Hypergraph::rank() const {
    if (is_empty())
        raise(Errc::EmptyEdgeCollection, "rank needs at least one edge");
    int r = 0;
    for (const auto& mem : members_)
        r = std::max(r, static_cast<int>(mem.size()));
    return r;
}

int Hypergraph::corank() const {
    if (is_empty())
        raise(Errc::EmptyEdgeCollection, "corank needs at least one edge");
    int r = vertex_count();
    for (const auto& mem : members_)
        r = std::min(r, static_cast<int>(mem.size()));
    return r;
}

int Hypergraph::multiplicity(const std::string& e) const {
    const auto& mine = members_[edge_index(e)];
    int count = 0;
    for (const auto& mem : members_)
        if (mem == mine)
            ++count;
    return count;
}

bool Hypergraph::is_simple() const {
    std::set<std::vector<int>> seen;
    for (const auto& mem : members_)
        if (!seen.insert(mem).second)
            return false;
    return true;
}

bool Hypergraph::is_uniform(int r) const {
    for (const auto& mem : members_)
        if (static_cast<int>(mem.size()) != r)
            return false;
    return true;
}

bool Hypergraph::is_regular(int r) const {
    for (const auto& inc : incident_)
        if (static_cast<int>(inc.size()) != r)
            return false;
    return true;
}

bool Hypergraph::has_empty_edges() const {
    for (const auto& mem : members_)
        if (mem.empty())
            return true;
    return false;
}

bool Hypergraph::has_isolated_vertices() const {
    for (const auto& inc : incident_)
        if (inc.empty())
            return true;
    return false;
}

IncidenceMatrix Hypergraph::incidence_matrix() const {
    IncidenceMatrix m;
    m.row_vertices = vertex_names_;
    m.col_edges = edge_names_;
    m.cells.assign(vertex_names_.size(), std::vector<std::uint8_t>(edge_names_.size(), 0));
    for (int e = 0; e < edge_count(); ++e)
        for (int v : members_[e])
            m.cells[v][e] = 1;
    return m;
}

bool Hypergraph::operator==(const Hypergraph& other) const {
    if (vertex_count() != other.vertex_count() || edge_count() != other.edge_count())
        return false;
    std::vector<std::string> a = vertex_names_, b = other.vertex_names_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
        return false;
    std::map<std::string, std::vector<std::string>> ea, eb;
    for (int e = 0; e < edge_count(); ++e) {
        std::vector<std::string> mem;
        for (int v : members_[e])
            mem.push_back(vertex_names_[v]);
        std::sort(mem.begin(), mem.end());
        ea[edge_names_[e]] = std::move(mem);
    }
    for (int e = 0; e < other.edge_count(); ++e) {
        std::vector<std::string> mem;
        for (int v : other.members_[e])
            mem.push_back(other.vertex_names_[v]);
        std::sort(mem.begin(), mem.end());
        eb[other.edge_names_[e]] = std::move(mem);
    }
    return ea == eb;
}

} // namespace hyperconn
