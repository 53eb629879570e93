#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pihom/qmatrix.hpp"
#include "pihom/sset.hpp"

namespace pihom {

// Sparse chain over the nondegenerate simplices of one degree.
using SimplexChain = std::map<int, Rat>;

// Normalized chains of a (relative) pair inside one parent simplicial set.
// Degree-d basis: nondegenerate d-simplices of `total` (default: everything)
// that are not in `rel`; boundaries drop degenerate faces and faces in `rel`.
struct ChainComplex {
    const FiniteSimplicialSet* space = nullptr;
    int through_degree = 0;
    std::optional<SubsetMask> total;
    std::optional<SubsetMask> rel;
    std::vector<std::vector<int>> basis;       // [degree] -> simplex ids, ascending
    std::vector<std::vector<int>> position;    // [degree][id] -> basis index or -1
    std::vector<QMatrix> boundary;             // [degree]; boundary[0] is 0 x dim(0)
    std::string provenance;

    int dim(int degree) const;
    int pos(int degree, int id) const;

    // Chain vector in basis coordinates; ids outside the pair must be absent
    // (ids inside `rel` are dropped silently: the quotient).
    QVec vector_of(int degree, const SimplexChain& chain) const;
    SimplexChain chain_of(int degree, const QVec& v) const;
};

ChainComplex normalized_chain_complex(const FiniteSimplicialSet& space,
                                      const SubsetMask* total,
                                      const SubsetMask* rel,
                                      int through_degree,
                                      std::string provenance = {});

// Exact check that consecutive boundary matrices compose to zero.
bool boundaries_compose_to_zero(const ChainComplex& c);

// Simplicial boundary of a chain of nondegenerate simplices, with exact
// cancellation; no relative quotient applied.
SimplexChain simplicial_boundary(const FiniteSimplicialSet& space, int degree,
                                 const SimplexChain& chain);

}  // namespace pihom
