#pragma once

#include <map>
#include <memory>
#include <vector>

#include "pihom/sset.hpp"

namespace pihom {

inline constexpr long long kDefaultMaxCells = 5'000'000;

// The categorical n-fold power of a simplicial set, enumerated through a
// degree cap. A d-simplex is an n-tuple of d-simplices of the factor; it is
// nondegenerate iff the components share no common degeneracy. Projection
// data (the component tuple of every nondegenerate simplex) is retained.
class PowerSet {
  public:
    const FiniteSimplicialSet& set() const { return set_; }
    const FiniteSimplicialSet& factor() const { return *factor_; }
    int arity() const { return arity_; }
    int cap() const { return cap_; }

    const std::vector<SimplexKey>& components(int degree, int id) const;

    // Id of a nondegenerate component tuple, -1 when absent.
    int id_of(int degree, const std::vector<SimplexKey>& tuple) const;

    // Normal form of an arbitrary component tuple: extracts the common
    // degeneracy word and resolves the nondegenerate core.
    SimplexKey normalize_tuple(std::vector<SimplexKey> tuple) const;

  private:
    FiniteSimplicialSet set_;
    std::shared_ptr<const FiniteSimplicialSet> factor_;
    int arity_ = 0;
    int cap_ = 0;
    std::vector<std::vector<std::vector<SimplexKey>>> tuples_;   // [degree][id]
    std::vector<std::map<std::vector<SimplexKey>, int>> index_;  // [degree]

    friend std::shared_ptr<const PowerSet> power(std::shared_ptr<const FiniteSimplicialSet> x,
                                                 int n, int cap, long long max_cells);
};

std::shared_ptr<const PowerSet> power(std::shared_ptr<const FiniteSimplicialSet> x,
                                      int n, int cap,
                                      long long max_cells = kDefaultMaxCells);

struct ComponentConstraint {
    enum class Kind { eq, pinned };
    Kind kind;
    int component = 0;  // 1-based; eq relates component and component+1
    int vertex = 0;     // pinned target

    static ComponentConstraint eq(int i) { return {Kind::eq, i, 0}; }
    static ComponentConstraint pinned_to(int i, int v) { return {Kind::pinned, i, v}; }
};

SubsetMask coordinate_constraint_subset(const PowerSet& p, const ComponentConstraint& c);

}  // namespace pihom
