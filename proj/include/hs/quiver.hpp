#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hs/linalg.hpp"

namespace hs {

struct Arrow {
    std::string name;
    int src = 0, dst = 0;
    Int degree = 0;
};

// A path in the quiver; the trivial path at v has no arrows and src = dst = v.
struct QuiverPath {
    int src = 0, dst = 0;
    Int degree = 0;
    std::vector<int> arrows;
};

// Algebra element: basis index -> nonzero coefficient.
using AElt = std::map<int, mpq_class>;

// Finite-dimensional graded path algebra kQ/I with a basis of paths.
// Paths compose left to right: p * q is p followed by q, nonzero only when p ends where q starts.
class QuiverAlgebra {
public:
    static std::shared_ptr<const QuiverAlgebra> parse(const std::string& text, int max_length = 12);
    static std::shared_ptr<const QuiverAlgebra> load(const std::string& path, int max_length = 12);

    const Field& field() const { return F_; }
    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    const std::string& vertex_name(int v) const { return vertices_.at(v); }
    int vertex_index(const std::string& name) const;
    const std::vector<Arrow>& arrows() const { return arrows_; }
    Int max_degree() const { return max_degree_; }

    int dim() const { return static_cast<int>(basis_.size()); }
    const QuiverPath& basis(int i) const { return basis_.at(i); }
    int idempotent(int v) const { return idem_.at(v); }
    // Basis paths from src to dst of the given internal degree.
    const std::vector<int>& paths(int src, int dst, Int degree) const;
    std::string path_str(int i) const;

    // heredity_order()[k] is the k-th vertex from the bottom; empty if none was given.
    const std::vector<int>& heredity_order() const { return order_; }
    int order_rank(int v) const;  // position in the heredity order

    AElt mul(const AElt& a, const AElt& b) const;
    AElt add(const AElt& a, const AElt& b) const;
    AElt scale(const AElt& a, const mpq_class& c) const;
    AElt unit(int v) const { return {{idem_.at(v), mpq_class(1)}}; }
    std::string elt_str(const AElt& a) const;

private:
    Field F_;
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::vector<int> order_;
    std::vector<QuiverPath> basis_;
    std::vector<int> idem_;
    Int max_degree_ = 0;
    std::map<std::tuple<int, int, Int>, std::vector<int>> by_type_;
    // product table over basis pairs
    std::vector<std::vector<std::vector<std::pair<int, mpq_class>>>> table_;
};

using AlgebraPtr = std::shared_ptr<const QuiverAlgebra>;

}  // namespace hs
