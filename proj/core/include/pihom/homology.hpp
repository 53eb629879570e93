#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pihom/chain.hpp"
#include "pihom/qmatrix.hpp"

namespace pihom {

// Raised when a computation contradicts a structural claim that the engine
// verifies rather than assumes (e.g. a non-invertible excision map).
struct theorem_violation : std::runtime_error {
    explicit theorem_violation(const std::string& what) : std::runtime_error(what) {}
};

// Homology of one degree of a chain complex: a deterministic basis of
// representative cycles plus exact class coordinates for arbitrary cycles.
class HomologySpace {
  public:
    int degree() const { return degree_; }
    int dimension() const { return dimension_; }
    const std::vector<QVec>& representatives() const { return reps_; }

    bool is_cycle(const QVec& chain) const;

    // Class coordinates of a relative cycle; nullopt when the vector is not
    // a cycle (never projects silently).
    std::optional<QVec> coords(const QVec& chain) const;

  private:
    int degree_ = 0;
    int dimension_ = 0;
    int chain_dim_ = 0;
    int n_boundaries_ = 0;
    QMatrix boundary_q_;
    std::vector<QVec> reps_;
    std::shared_ptr<const LinearSolver> solver_;  // factorization of [boundaries | reps]

    friend HomologySpace homology_space(const ChainComplex& c, int q);
};

// Requires boundaries through degree q+1 (q <= through_degree - 1).
HomologySpace homology_space(const ChainComplex& c, int q);

// Degree-preserving chain map given per degree as: basis index of the source
// complex -> chain vector in the target complex.
using ChainMapFn = std::function<QVec(int degree, int src_index)>;

// Chain map induced by inclusion of pairs sharing the parent set: a simplex
// maps to itself, to zero if the target quotients it away.
ChainMapFn inclusion_chain_map(const ChainComplex& src, const ChainComplex& tgt);

// Matrix of the induced map on homology: M * coords_src(v) = coords_tgt(f v)
// for every source cycle v. Throws internal_error when the image of a
// representative fails to be a relative cycle in the target.
QMatrix induced_map(const ChainComplex& src, const ChainComplex& tgt,
                    const HomologySpace& h_src, const HomologySpace& h_tgt,
                    int q, const ChainMapFn& f);

// Class of the simplicial boundary of an upper relative cycle in the lower
// pair (Y, Z) of a triple Z ⊆ Y ⊆ space. Throws when the boundary is not
// supported on Y.
QVec boundary_class(const ChainComplex& upper, const ChainComplex& lower,
                    const HomologySpace& h_lower, int q, const QVec& cycle);

// Connecting morphism H_q(space, Y) -> H_{q-1}(Y, Z) of the triple.
QMatrix connecting_triple(const ChainComplex& upper, const HomologySpace& h_upper,
                          const ChainComplex& lower, const HomologySpace& h_lower);

struct LesNode {
    std::string name;
    int dim = 0;
    int rank_in = 0;
    int rank_out = 0;
    bool composite_zero = true;
    bool exact = false;
};

struct LesReport {
    std::vector<LesNode> nodes;
    bool all_exact() const;
};

// Long exact sequence of the pair (space, A), checked through the degrees
// where the capped complexes determine every term.
LesReport verify_les_pair(const FiniteSimplicialSet& space, const SubsetMask& a,
                          int through_degree, const SubsetMask* ambient = nullptr);

// Long exact sequence of the triple Z ⊆ Y ⊆ space.
LesReport verify_les_triple(const FiniteSimplicialSet& space, const SubsetMask& y,
                            const SubsetMask& z, int through_degree);

}  // namespace pihom
