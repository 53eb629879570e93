#pragma once

#include <memory>
#include <vector>

#include "pihom/chain.hpp"
#include "pihom/homology.hpp"
#include "pihom/models.hpp"
#include "pihom/power.hpp"

namespace pihom {

// Which wall of the family is retained (not absorbed into Z): the one pinned
// at the first coordinate or the one pinned at the last.
enum class Retained { first, last };

// The level-n bundle: the power P = X^n capped at degree n+1, the walls
// Y_0..Y_n (coordinate 1 pinned to x, consecutive coordinates equal, and
// coordinate n pinned to y), their union Y, the complement-union Z of the
// non-retained walls, A = retained wall ∩ Z, and the relative chain data of
// (P, Y). References into the power set stay valid for the family's lifetime.
struct PairFamily {
    int level = 0;
    Retained retained = Retained::last;
    int x = 0;
    int y = 0;
    std::shared_ptr<const PowerSet> power_set;
    std::vector<SubsetMask> walls;  // empty at level 0
    SubsetMask y_mask, z_mask, a_mask;
    ChainComplex upper;    // C(P rel Y) through degree level+1
    HomologySpace h_top;   // H_level(P, Y)

    const FiniteSimplicialSet& space() const { return power_set->set(); }
    int retained_index() const { return retained == Retained::first ? 0 : level; }
    int pinned_vertex() const { return retained == Retained::first ? x : y; }
};

PairFamily build_pair_family(const Model& m, int n, Retained retained,
                             long long max_cells = kDefaultMaxCells);

// Identification of the previous power with the retained wall: the pinned
// vertex is inserted as a totally degenerate component at position 1
// (retained = first) or position n (retained = last).
struct PrevEmbedding {
    std::vector<std::vector<int>> id_map;  // [degree][prev id] -> id in pf
};

PrevEmbedding embed_prev_map(const PairFamily& pf, const PairFamily& prev);

SimplexChain embed_prev(const PrevEmbedding& emb, int degree, const SimplexChain& chain);

}  // namespace pihom
