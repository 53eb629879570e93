#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "pihom/rational.hpp"

namespace pihom {

// A simplex in Eilenberg-Zilber normal form: a strictly decreasing word of
// degeneracy operators (outermost first) applied to a nondegenerate simplex,
// identified by (dimension, id). Every simplex has exactly one such form.
struct SimplexKey {
    int dim = 0;
    int id = 0;
    std::vector<int> degens;

    int degree() const { return dim + static_cast<int>(degens.size()); }
    bool degenerate() const { return !degens.empty(); }

    auto operator<=>(const SimplexKey&) const = default;

    // Collapse mask: bit t set iff the underlying monotone surjection
    // identifies vertices t and t+1. In normal form this is exactly the
    // set of word indices.
    std::uint64_t collapse_mask() const;

    std::string to_string() const;
};

SimplexKey total_degeneracy(int vertex_id, int degree);

// A finite simplicial set given by its nondegenerate simplices per dimension
// and a face table on those. Faces of arbitrary (degenerate) simplices are
// derived through the simplicial identities; construction is append-only and
// the object is immutable afterwards.
class FiniteSimplicialSet {
  public:
    FiniteSimplicialSet() = default;

    // faces.size() == dim + 1 with entries of degree dim - 1 (dim >= 1).
    int add_simplex(int dim, std::vector<SimplexKey> faces = {}, std::string label = {});

    int count(int dim) const;
    int top_dim() const { return static_cast<int>(faces_.size()) - 1; }
    long long total_nondegenerate() const;

    const SimplexKey& face_of_nondeg(int dim, int id, int i) const;
    SimplexKey face(const SimplexKey& s, int i) const;
    SimplexKey degeneracy(const SimplexKey& s, int j) const;

    const std::string& label(int dim, int id) const;
    int vertex_by_label(const std::string& name) const;  // -1 when absent
    int edge_by_label(const std::string& name) const;

    int edge_start(int edge_id) const;  // d_1
    int edge_end(int edge_id) const;    // d_0

    // All simplices (degenerate included) of the given degree, in a fixed
    // deterministic order.
    std::vector<SimplexKey> keys_of_degree(int degree) const;

  private:
    std::vector<std::vector<SimplexKey>> faces_;  // faces_[d]: count*(d+1) keys
    std::vector<int> counts_;
    std::vector<std::vector<std::string>> labels_;
};

// Checks d_i d_j == d_{j-1} d_i (i < j) on every nondegenerate simplex.
// Returns an explanation for the first violation, empty string if clean.
std::string check_simplicial_identities(const FiniteSimplicialSet& s);

// A degreewise, face-closed set of nondegenerate simplices of one parent set.
class SubsetMask {
  public:
    SubsetMask() = default;
    SubsetMask(const FiniteSimplicialSet* parent, int through_degree);

    static SubsetMask full(const FiniteSimplicialSet* parent, int through_degree);

    const FiniteSimplicialSet* parent() const { return parent_; }
    int through_degree() const { return static_cast<int>(member_.size()) - 1; }

    void insert(int degree, int id);
    bool contains(int degree, int id) const;
    bool contains_core(const SimplexKey& key) const { return contains(key.dim, key.id); }
    int count(int degree) const;
    long long total() const;

    std::vector<int> members(int degree) const;

    bool is_face_closed() const;

    bool operator==(const SubsetMask&) const = default;

  private:
    const FiniteSimplicialSet* parent_ = nullptr;
    std::vector<std::vector<char>> member_;
};

SubsetMask union_subsets(const std::vector<SubsetMask>& masks);
SubsetMask intersect_subsets(const std::vector<SubsetMask>& masks);

}  // namespace pihom
