#include "pihom/chain.hpp"

namespace pihom {

int ChainComplex::dim(int degree) const
{
    if (degree < 0 || degree > through_degree)
        return 0;
    return static_cast<int>(basis[degree].size());
}

int ChainComplex::pos(int degree, int id) const
{
    if (degree < 0 || degree > through_degree)
        return -1;
    if (id < 0 || id >= static_cast<int>(position[degree].size()))
        return -1;
    return position[degree][id];
}

QVec ChainComplex::vector_of(int degree, const SimplexChain& chain) const
{
    QVec v = zero_vec(dim(degree));
    for (const auto& [id, coeff] : chain) {
        if (coeff == 0)
            continue;
        if (rel && rel->contains(degree, id))
            continue;
        int p = pos(degree, id);
        if (p < 0)
            throw internal_error("chain term outside the pair");
        v[p] = coeff;
    }
    return v;
}

SimplexChain ChainComplex::chain_of(int degree, const QVec& v) const
{
    if (static_cast<int>(v.size()) != dim(degree))
        throw internal_error("chain vector length mismatch");
    SimplexChain c;
    for (int i = 0; i < dim(degree); ++i)
        if (v[i] != 0)
            c[basis[degree][i]] = v[i];
    return c;
}

ChainComplex normalized_chain_complex(const FiniteSimplicialSet& space,
                                      const SubsetMask* total,
                                      const SubsetMask* rel,
                                      int through_degree,
                                      std::string provenance)
{
    ChainComplex c;
    c.space = &space;
    c.through_degree = through_degree;
    if (total)
        c.total = *total;
    if (rel)
        c.rel = *rel;
    c.provenance = std::move(provenance);
    c.basis.resize(through_degree + 1);
    c.position.resize(through_degree + 1);
    c.boundary.resize(through_degree + 1);

    for (int d = 0; d <= through_degree; ++d) {
        c.position[d].assign(space.count(d), -1);
        for (int id = 0; id < space.count(d); ++id) {
            if (total && !total->contains(d, id))
                continue;
            if (rel && rel->contains(d, id))
                continue;
            c.position[d][id] = static_cast<int>(c.basis[d].size());
            c.basis[d].push_back(id);
        }
    }

    c.boundary[0] = QMatrix(0, c.dim(0));
    for (int d = 1; d <= through_degree; ++d) {
        QMatrix b(c.dim(d - 1), c.dim(d));
        for (int col = 0; col < c.dim(d); ++col) {
            int id = c.basis[d][col];
            for (int i = 0; i <= d; ++i) {
                SimplexKey f = space.face(SimplexKey{d, id, {}}, i);
                if (f.degenerate())
                    continue;
                if (rel && rel->contains(f.dim, f.id))
                    continue;
                int row = c.pos(d - 1, f.id);
                if (row < 0)
                    throw internal_error("face escapes the pair: " + f.to_string());
                b.add(row, col, Rat(i % 2 == 0 ? 1 : -1));
            }
        }
        c.boundary[d] = std::move(b);
    }
    return c;
}

bool boundaries_compose_to_zero(const ChainComplex& c)
{
    for (int d = 2; d <= c.through_degree; ++d)
        if (!c.boundary[d - 1].multiply(c.boundary[d]).is_zero())
            return false;
    return true;
}

SimplexChain simplicial_boundary(const FiniteSimplicialSet& space, int degree,
                                 const SimplexChain& chain)
{
    SimplexChain out;
    if (degree == 0)
        return out;
    for (const auto& [id, coeff] : chain) {
        if (coeff == 0)
            continue;
        for (int i = 0; i <= degree; ++i) {
            SimplexKey f = space.face(SimplexKey{degree, id, {}}, i);
            if (f.degenerate())
                continue;
            Rat sgn(i % 2 == 0 ? 1 : -1);
            auto [it, inserted] = out.try_emplace(f.id, sgn * coeff);
            if (!inserted) {
                it->second += sgn * coeff;
                if (it->second == 0)
                    out.erase(it);
            }
        }
    }
    return out;
}

}  // namespace pihom
