#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pihom/pair_family.hpp"

namespace pihom {

// Orientation bookkeeping for the staircase triangulation. The corrupt
// variant (no permutation signs) exists as a negative-control fixture: it
// breaks interior cancellation and the commutative-diagram check.
struct SignConvention {
    bool coherent = true;
};

// Triangulated image of the ordered simplex under a path: one product
// simplex per admissible (cell, permutation) pair of the staircase
// subdivision, with coherent signs normalized so a length-1 path at any
// level contributes +1.
struct StaircaseChain {
    EdgePath path;
    int level = 0;
    SimplexChain chain;  // degree-`level` simplices of the family's power
};

StaircaseChain staircase_chain(const PairFamily& pf, const Model& m,
                               const EdgePath& path, const SignConvention& sc = {});

// Every nondegenerate term of the simplicial boundary lies in Y.
bool staircase_boundary_supported(const PairFamily& pf, const StaircaseChain& sc);

using PathCombination = std::vector<std::pair<EdgePath, Rat>>;

// Class coordinates in H_n(P, Y) of a rational combination of paths x -> y.
QVec tau_class(const PairFamily& pf, const Model& m, const PathCombination& paths,
               const SignConvention& sc = {});

// Matrix of tau in the tensor-monomial basis: column j is the class of the
// lifted monomial, carried along the reference path when x != y.
struct TauMatrix {
    QMatrix matrix;
    std::vector<Monomial> basis;
};

TauMatrix tau_matrix(const PairFamily& pf, const Model& m, const SignConvention& sc = {});

struct TauRankCheck {
    bool pass = false;
    int rank = 0;
    std::string detail;
};

// Rank contract: invertible for distinct basepoints; corank exactly one
// with kernel spanned by the unit monomial for equal basepoints.
TauRankCheck check_tau_rank(const TauMatrix& tm, const PairFamily& pf);

// Inclusion-induced map H_{n-1}(X^{n-1}, Y^(n-1)) -> H_{n-1}(Y, Z) through
// the retained-wall identification; must be invertible (throws
// theorem_violation otherwise).
struct Excision {
    ChainComplex lower;      // C(Y rel Z) on the level-n family
    HomologySpace h_lower;   // H_{n-1}(Y, Z)
    QMatrix g;
};

Excision excision_iso(const PairFamily& pf, const PairFamily& prev);

// Transition morphism H_n(X^n, Y^(n)) -> H_{n-1}(X^{n-1}, Y^(n-1)):
// the connecting morphism of Z ⊆ Y ⊆ P composed with the inverse excision.
struct Kappa {
    QMatrix matrix;
    QMatrix connecting;
    Excision exc;
};

Kappa kappa(const PairFamily& pf, const PairFamily& prev);

struct CdItem {
    std::string name;
    QVec lhs;  // kappa ∘ tau_n
    QVec rhs;  // tau_{n-1} ∘ project
};

struct CdReport {
    int level = 0;
    Retained retained = Retained::last;
    std::vector<CdItem> items;
    // +1: commutes exactly; -1: commutes after one global sign flip;
    // nullopt: fails outright.
    std::optional<int> global_sign;

    bool exact() const { return global_sign && *global_sign == 1; }
    bool commutes_up_to_sign() const { return global_sign.has_value(); }
};

// Checks kappa(tau_n(w)) == tau_{n-1}(project(w)) on the full monomial
// basis and on the extra words, all by exact arithmetic.
CdReport verify_cd(const Model& m, int n, Retained retained,
                   const std::vector<Word>& words,
                   long long max_cells = kDefaultMaxCells,
                   const SignConvention& sc = {});

// Paths realizing (expansion of (g_{i_1}-1)...(g_{i_k}-1)) · w · ref — an
// element of the k-th augmentation power acting on the sample word; its tau
// image must vanish whenever k exceeds the level.
PathCombination ideal_element_paths(const Model& m, const Monomial& mono, const Word& w);

std::string monomial_name(const Monomial& m);

}  // namespace pihom
