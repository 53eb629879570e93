#include "pihom/homology.hpp"

#include <sstream>

namespace pihom {

bool HomologySpace::is_cycle(const QVec& chain) const
{
    if (static_cast<int>(chain.size()) != chain_dim_)
        throw internal_error("chain length mismatch in cycle test");
    return is_zero_vec(boundary_q_.apply(chain));
}

std::optional<QVec> HomologySpace::coords(const QVec& chain) const
{
    if (!is_cycle(chain))
        return std::nullopt;
    std::optional<QVec> z = solver_->solve(chain);
    if (!z)
        throw internal_error("cycle outside the computed cycle space");
    QVec out(z->begin() + n_boundaries_, z->end());
    return out;
}

HomologySpace homology_space(const ChainComplex& c, int q)
{
    if (q < 0 || q + 1 > c.through_degree)
        throw input_error("homology degree out of cap");

    HomologySpace h;
    h.degree_ = q;
    h.chain_dim_ = c.dim(q);
    h.boundary_q_ = c.boundary[q];

    const QMatrix& bnd = c.boundary[q + 1];
    std::vector<QVec> cycles = kernel_basis(h.boundary_q_);

    std::vector<QVec> image;
    for (int col : rref(bnd).second)
        image.push_back(bnd.column(col));
    h.n_boundaries_ = static_cast<int>(image.size());

    // One elimination picks, among the cycle basis, a deterministic
    // complement of the boundary subspace: kernel vectors landing on pivot
    // columns of [image | cycles] extend the image to a basis of the cycles.
    std::vector<QVec> stacked = image;
    stacked.insert(stacked.end(), cycles.begin(), cycles.end());
    QMatrix span = QMatrix::from_columns(h.chain_dim_, stacked);
    for (int col : rref(span).second)
        if (col >= h.n_boundaries_)
            h.reps_.push_back(cycles[col - h.n_boundaries_]);

    h.dimension_ = static_cast<int>(h.reps_.size());
    if (h.dimension_ != static_cast<int>(cycles.size()) - h.n_boundaries_)
        throw internal_error("rank bookkeeping failure in homology_space");

    std::vector<QVec> solver_cols = image;
    solver_cols.insert(solver_cols.end(), h.reps_.begin(), h.reps_.end());
    h.solver_ = std::make_shared<LinearSolver>(
        QMatrix::from_columns(h.chain_dim_, solver_cols));
    return h;
}

ChainMapFn inclusion_chain_map(const ChainComplex& src, const ChainComplex& tgt)
{
    const ChainComplex* s = &src;
    const ChainComplex* t = &tgt;
    if (s->space != t->space)
        throw internal_error("inclusion between different parent sets");
    return [s, t](int degree, int src_index) -> QVec {
        int id = s->basis[degree][src_index];
        QVec v = zero_vec(t->dim(degree));
        if (t->rel && t->rel->contains(degree, id))
            return v;
        int p = t->pos(degree, id);
        if (p < 0)
            throw internal_error("inclusion image outside target pair");
        v[p] = Rat(1);
        return v;
    };
}

QMatrix induced_map(const ChainComplex& src, const ChainComplex& tgt,
                    const HomologySpace& h_src, const HomologySpace& h_tgt,
                    int q, const ChainMapFn& f)
{
    (void)src;
    std::vector<QVec> cols;
    for (const QVec& rep : h_src.representatives()) {
        QVec image = zero_vec(tgt.dim(q));
        for (int k = 0; k < static_cast<int>(rep.size()); ++k) {
            if (rep[k] == 0)
                continue;
            QVec fk = f(q, k);
            for (int i = 0; i < static_cast<int>(image.size()); ++i)
                image[i] += rep[k] * fk[i];
        }
        std::optional<QVec> cls = h_tgt.coords(image);
        if (!cls)
            throw internal_error("image of a representative is not a relative cycle");
        cols.push_back(std::move(*cls));
    }
    return QMatrix::from_columns(h_tgt.dimension(), cols);
}

QVec boundary_class(const ChainComplex& upper, const ChainComplex& lower,
                    const HomologySpace& h_lower, int q, const QVec& cycle)
{
    SimplexChain chain = upper.chain_of(q, cycle);
    SimplexChain bnd = simplicial_boundary(*upper.space, q, chain);

    QVec v = zero_vec(lower.dim(q - 1));
    for (const auto& [id, coeff] : bnd) {
        if (lower.total && !lower.total->contains(q - 1, id))
            throw internal_error("boundary of a relative cycle escapes the subspace");
        if (lower.rel && lower.rel->contains(q - 1, id))
            continue;
        int p = lower.pos(q - 1, id);
        if (p < 0)
            throw internal_error("boundary term missing from lower basis");
        v[p] = coeff;
    }
    std::optional<QVec> cls = h_lower.coords(v);
    if (!cls)
        throw internal_error("boundary chain is not a cycle in the lower pair");
    return *cls;
}

QMatrix connecting_triple(const ChainComplex& upper, const HomologySpace& h_upper,
                          const ChainComplex& lower, const HomologySpace& h_lower)
{
    const int q = h_upper.degree();
    std::vector<QVec> cols;
    for (const QVec& rep : h_upper.representatives())
        cols.push_back(boundary_class(upper, lower, h_lower, q, rep));
    return QMatrix::from_columns(h_lower.dimension(), cols);
}

bool LesReport::all_exact() const
{
    for (const LesNode& n : nodes)
        if (!n.exact)
            return false;
    return true;
}

namespace {

// Shared engine for the sequences of a pair and of a triple: the pair
// (P, A) is the triple ∅ ⊆ A ⊆ P with lower complex taken absolutely.
LesReport les_impl(const FiniteSimplicialSet& space, const SubsetMask* ambient,
                   const SubsetMask& y, const SubsetMask* z, int through,
                   const std::string& lower_name, const std::string& mid_name,
                   const std::string& upper_name)
{
    ChainComplex cyz = normalized_chain_complex(space, &y, z, through, lower_name);
    ChainComplex cpz = normalized_chain_complex(space, ambient, z, through, mid_name);
    ChainComplex cpy = normalized_chain_complex(space, ambient, &y, through, upper_name);

    const int maxq = through - 1;
    std::vector<HomologySpace> hyz, hpz, hpy;
    for (int q = 0; q <= maxq; ++q) {
        hyz.push_back(homology_space(cyz, q));
        hpz.push_back(homology_space(cpz, q));
        hpy.push_back(homology_space(cpy, q));
    }

    std::vector<QMatrix> incl, quot, conn;
    for (int q = 0; q <= maxq; ++q) {
        incl.push_back(induced_map(cyz, cpz, hyz[q], hpz[q], q,
                                   inclusion_chain_map(cyz, cpz)));
        quot.push_back(induced_map(cpz, cpy, hpz[q], hpy[q], q,
                                   inclusion_chain_map(cpz, cpy)));
        conn.push_back(q == 0 ? QMatrix(0, hpy[0].dimension())
                              : connecting_triple(cpy, hpy[q], cyz, hyz[q - 1]));
    }

    auto node = [](std::string name, int dim, const QMatrix& in, const QMatrix& out) {
        LesNode n;
        n.name = std::move(name);
        n.dim = dim;
        n.rank_in = rank(in);
        n.rank_out = rank(out);
        n.composite_zero = out.multiply(in).is_zero();
        n.exact = n.composite_zero && n.rank_in + n.rank_out == n.dim;
        return n;
    };

    LesReport rep;
    for (int q = 0; q <= maxq; ++q) {
        std::string qs = std::to_string(q);
        rep.nodes.push_back(node("H" + qs + "(" + mid_name + ")",
                                 hpz[q].dimension(), incl[q], quot[q]));
        rep.nodes.push_back(node("H" + qs + "(" + upper_name + ")",
                                 hpy[q].dimension(), quot[q], conn[q]));
        if (q + 1 <= maxq)
            rep.nodes.push_back(node("H" + qs + "(" + lower_name + ")",
                                     hyz[q].dimension(), conn[q + 1], incl[q]));
    }
    return rep;
}

}  // namespace

LesReport verify_les_pair(const FiniteSimplicialSet& space, const SubsetMask& a,
                          int through_degree, const SubsetMask* ambient)
{
    return les_impl(space, ambient, a, nullptr, through_degree, "A", "X", "X,A");
}

LesReport verify_les_triple(const FiniteSimplicialSet& space, const SubsetMask& y,
                            const SubsetMask& z, int through_degree)
{
    return les_impl(space, nullptr, y, &z, through_degree, "Y,Z", "X,Z", "X,Y");
}

}  // namespace pihom
