#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pihom/groupalg.hpp"
#include "pihom/sset.hpp"

namespace pihom {

// An edge path: edge ids traversed forward, in traversal order.
using EdgePath = std::vector<int>;

enum class ModelKind { wedge, wedge_inv, two_vertex_circle, interval_chain, custom_graph };

struct GraphEdge {
    std::string id;
    std::string from;
    std::string to;
    std::string inverse_of;  // optional: this edge is the formal inverse of another
};

// A model space together with everything needed to translate between edge
// paths and free-group words: basepoints, the free rank, the per-edge letter
// table, forward realizations of the generators, and the reference path.
struct Model {
    std::string name;
    ModelKind kind = ModelKind::wedge;
    std::shared_ptr<const FiniteSimplicialSet> space;
    int x = 0;
    int y = 0;
    int rank = 0;

    struct EdgeLetter {
        int gen = -1;  // -1: contributes no letter (spanning tree / unit)
        int sign = 0;
    };
    std::vector<EdgeLetter> edge_letters;

    std::vector<EdgePath> gen_loops;      // forward loop at x realizing g_i
    std::vector<EdgePath> gen_inv_loops;  // forward realization of g_i^{-1}, may be empty
    EdgePath ref_path;                    // forward path x -> y, empty iff x == y
};

// Bare model spaces (no groupoid data).
std::shared_ptr<FiniteSimplicialSet> wedge_space(int r);
std::shared_ptr<FiniteSimplicialSet> wedge_inv_space(int r);
std::shared_ptr<FiniteSimplicialSet> two_vertex_circle_space();
std::shared_ptr<FiniteSimplicialSet> interval_chain_space(int length);
std::shared_ptr<FiniteSimplicialSet> graph_space(const std::vector<std::string>& vertices,
                                                 const std::vector<GraphEdge>& edges);

Model wedge_model(int r);
Model wedge_inv_model(int r);
Model two_vertex_circle_model(const std::string& x = "x", const std::string& y = "y");
Model interval_chain_model(int length, int x, int y);
Model custom_graph_model(const std::vector<std::string>& vertices,
                         const std::vector<GraphEdge>& edges,
                         const std::string& x, const std::string& y);

bool is_valid_edge_path(const Model& m, const EdgePath& p, int from, int to);

// Letters contributed by the traversed edges, in traversal order.
Word word_of_path(const Model& m, const EdgePath& p);

// The word of the loop obtained by closing the path with the reverse of the
// reference path; for loops at x this is just word_of_path.
Word loop_word(const Model& m, const EdgePath& p);

// Class of a path from x to y in the truncated groupoid algebra, under the
// trivialization by the reference path.
TruncElem groupoid_class(const Model& m, const EdgePath& p, int level);

// Forward edge path realizing a word as a loop at x (optionally continued
// along the reference path to y). Throws input_error when some letter has no
// forward realization in this model.
EdgePath realize_word(const Model& m, const Word& w, bool append_ref);

// All forward paths x -> y of length in [1, max_len] (plus the empty path
// when x == y), in deterministic order.
std::vector<EdgePath> enumerate_paths(const Model& m, int max_len);

}  // namespace pihom
