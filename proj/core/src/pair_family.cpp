#include "pihom/pair_family.hpp"

namespace pihom {

PairFamily build_pair_family(const Model& m, int n, Retained retained, long long max_cells)
{
    if (n < 0)
        throw input_error("pair family level must be nonnegative");

    PairFamily pf;
    pf.level = n;
    pf.retained = retained;
    pf.x = m.x;
    pf.y = m.y;
    pf.power_set = power(m.space, n, n + 1, max_cells);
    const FiniteSimplicialSet& p = pf.power_set->set();
    const int cap = n + 1;

    if (n == 0) {
        pf.y_mask = m.x == m.y ? SubsetMask::full(&p, cap) : SubsetMask(&p, cap);
        pf.z_mask = SubsetMask(&p, cap);
        pf.a_mask = SubsetMask(&p, cap);
    } else {
        pf.walls.push_back(coordinate_constraint_subset(
            *pf.power_set, ComponentConstraint::pinned_to(1, m.x)));
        for (int i = 1; i <= n - 1; ++i)
            pf.walls.push_back(coordinate_constraint_subset(
                *pf.power_set, ComponentConstraint::eq(i)));
        pf.walls.push_back(coordinate_constraint_subset(
            *pf.power_set, ComponentConstraint::pinned_to(n, m.y)));

        pf.y_mask = union_subsets(pf.walls);
        std::vector<SubsetMask> others;
        for (int i = 0; i <= n; ++i)
            if (i != pf.retained_index())
                others.push_back(pf.walls[i]);
        pf.z_mask = union_subsets(others);
        pf.a_mask = intersect_subsets({pf.walls[pf.retained_index()], pf.z_mask});
    }

    pf.upper = normalized_chain_complex(p, nullptr, &pf.y_mask, cap, "P rel Y");
    pf.h_top = homology_space(pf.upper, n);
    return pf;
}

PrevEmbedding embed_prev_map(const PairFamily& pf, const PairFamily& prev)
{
    if (prev.level != pf.level - 1 || prev.x != pf.x || prev.y != pf.y)
        throw input_error("previous family does not match");

    const int insert_pos = pf.retained == Retained::first ? 0 : pf.level - 1;
    const int pinned = pf.pinned_vertex();

    PrevEmbedding emb;
    const int prev_cap = prev.level + 1;
    emb.id_map.resize(prev_cap + 1);
    for (int d = 0; d <= prev_cap; ++d) {
        emb.id_map[d].assign(prev.space().count(d), -1);
        for (int id = 0; id < prev.space().count(d); ++id) {
            std::vector<SimplexKey> tuple = prev.power_set->components(d, id);
            tuple.insert(tuple.begin() + insert_pos, total_degeneracy(pinned, d));
            int target = pf.power_set->id_of(d, tuple);
            if (target < 0)
                throw internal_error("pinned insertion missing from the power index");
            emb.id_map[d][id] = target;
        }
    }
    return emb;
}

SimplexChain embed_prev(const PrevEmbedding& emb, int degree, const SimplexChain& chain)
{
    SimplexChain out;
    for (const auto& [id, coeff] : chain)
        out[emb.id_map.at(degree).at(id)] = coeff;
    return out;
}

}  // namespace pihom
