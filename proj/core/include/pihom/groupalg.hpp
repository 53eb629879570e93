#pragma once

#include <map>
#include <string>
#include <vector>

#include "pihom/qmatrix.hpp"
#include "pihom/rational.hpp"

namespace pihom {

// One letter of a free-group word: generator index (0-based) and sign.
struct Letter {
    int gen = 0;
    int sign = 1;
    auto operator<=>(const Letter&) const = default;
};

// Word in free generators; leftmost letter is traversed first. Words are
// kept unreduced.
struct Word {
    std::vector<Letter> letters;

    static Word one() { return {}; }
    static Word gen(int g, int sign = 1) { return Word{{Letter{g, sign}}}; }

    Word concat(const Word& rhs) const;
    Word inverse() const;
    std::size_t length() const { return letters.size(); }

    bool operator==(const Word&) const = default;
    std::string to_string() const;  // "g1 g2^-1", "1" for the empty word
};

// Tokens: g<k> and g<k>^-1, whitespace separated, 1-based generators.
Word parse_word(const std::string& text, int rank);

// Tensor monomial: sequence of generator indices, degree = length.
using Monomial = std::vector<int>;

// Element of the tensor algebra truncated above the given level, the
// concrete model of the group algebra modulo the (level+1)-st power of the
// augmentation ideal. Sparse: no zero coefficients stored.
struct TruncElem {
    int rank = 0;
    int level = 0;
    std::map<Monomial, Rat> coeff;

    static TruncElem unit(int rank, int level);
    bool is_unit() const;
    Rat coefficient(const Monomial& m) const;
    void add_term(const Monomial& m, const Rat& c);

    bool operator==(const TruncElem&) const = default;
    std::string to_string() const;
};

TruncElem trunc_mul(const TruncElem& a, const TruncElem& b);
TruncElem trunc_scale(const TruncElem& a, const Rat& c);
TruncElem trunc_add(const TruncElem& a, const TruncElem& b);
TruncElem trunc_project(const TruncElem& a);  // drops the top level

// Multiplicative Magnus expansion g_i -> 1 + e_i, truncated at the level.
TruncElem magnus(const Word& w, int rank, int level);

// Monomials of degree <= level over the given rank, degree-major then
// lexicographic; index 0 is the unit monomial.
std::vector<Monomial> monomial_basis(int rank, int level);

// Coordinates of an element in monomial_basis(rank, level).
QVec trunc_coords(const TruncElem& a);

// Projection matrix from level-n coordinates to level-(n-1) coordinates.
QMatrix projection_matrix(int rank, int level);

// The alternating word expansion of (g_{i_1}-1)...(g_{i_k}-1): 2^k positive
// words with signs, whose Magnus image at any level >= k is exactly the
// monomial.
std::vector<std::pair<Word, Rat>> basis_lift(const Monomial& m);

}  // namespace pihom
