#include "pihom/power.hpp"

#include <algorithm>
#include <sstream>

namespace pihom {

const std::vector<SimplexKey>& PowerSet::components(int degree, int id) const
{
    return tuples_.at(degree).at(id);
}

int PowerSet::id_of(int degree, const std::vector<SimplexKey>& tuple) const
{
    if (degree < 0 || degree > cap_)
        return -1;
    auto it = index_[degree].find(tuple);
    return it == index_[degree].end() ? -1 : it->second;
}

SimplexKey PowerSet::normalize_tuple(std::vector<SimplexKey> tuple) const
{
    const int degree = tuple.empty() ? 0 : tuple.front().degree();
    for (const SimplexKey& k : tuple)
        if (k.degree() != degree)
            throw internal_error("mixed-degree component tuple");

    std::vector<int> word;
    int cur_degree = degree;
    for (;;) {
        std::uint64_t common = tuple.empty()
                                   ? (cur_degree > 0 ? (~std::uint64_t(0) >> (64 - cur_degree)) : 0)
                                   : ~std::uint64_t(0);
        for (const SimplexKey& k : tuple)
            common &= k.collapse_mask();
        if (cur_degree == 0)
            common = 0;
        if (common == 0)
            break;
        int j = 63 - __builtin_clzll(common);
        word.push_back(j);
        for (SimplexKey& k : tuple)
            k = factor_->face(k, j);
        --cur_degree;
    }

    int id = id_of(cur_degree, tuple);
    if (id < 0)
        throw internal_error("component tuple missing from product index");
    return SimplexKey{cur_degree, id, std::move(word)};
}

std::shared_ptr<const PowerSet> power(std::shared_ptr<const FiniteSimplicialSet> x,
                                      int n, int cap, long long max_cells)
{
    if (n < 0 || cap < 0)
        throw input_error("power: bad arity or cap");
    auto p = std::make_shared<PowerSet>();
    PowerSet& out = const_cast<PowerSet&>(*p);
    out.factor_ = std::move(x);
    out.arity_ = n;
    out.cap_ = cap;
    out.tuples_.resize(cap + 1);
    out.index_.resize(cap + 1);

    const FiniteSimplicialSet& fac = *out.factor_;
    long long cells = 0;

    for (int d = 0; d <= cap; ++d) {
        std::vector<SimplexKey> keys = fac.keys_of_degree(d);
        std::vector<std::uint64_t> masks(keys.size());
        for (std::size_t k = 0; k < keys.size(); ++k)
            masks[k] = keys[k].collapse_mask();
        const std::uint64_t all = d > 0 ? (~std::uint64_t(0) >> (64 - d)) : 0;

        // Depth-first over component choices, carrying the running common
        // collapse set; a completed tuple is nondegenerate iff it is empty.
        std::vector<int> choice(n, 0);
        std::vector<SimplexKey> tuple(n);

        auto emit = [&]() {
            for (int c = 0; c < n; ++c)
                tuple[c] = keys[choice[c]];
            if (++cells > max_cells)
                throw resource_limit_error("product cell guard exceeded");
            std::vector<SimplexKey> faces;
            if (d > 0) {
                faces.reserve(d + 1);
                for (int i = 0; i <= d; ++i) {
                    std::vector<SimplexKey> fc(n);
                    for (int c = 0; c < n; ++c)
                        fc[c] = fac.face(tuple[c], i);
                    faces.push_back(out.normalize_tuple(std::move(fc)));
                }
            }
            std::ostringstream lab;
            for (int c = 0; c < n; ++c)
                lab << (c ? "," : "") << tuple[c].to_string();
            int id = out.set_.add_simplex(d, std::move(faces), lab.str());
            out.tuples_[d].push_back(tuple);
            out.index_[d].emplace(tuple, id);
        };

        // Recursive enumeration in lexicographic order of key indices.
        auto rec = [&](auto&& self, int c, std::uint64_t common) -> void {
            if (c == n) {
                if (common == 0)
                    emit();
                return;
            }
            for (std::size_t k = 0; k < keys.size(); ++k) {
                choice[c] = static_cast<int>(k);
                self(self, c + 1, common & masks[k]);
            }
        };
        rec(rec, 0, all);
    }
    return p;
}

SubsetMask coordinate_constraint_subset(const PowerSet& p, const ComponentConstraint& c)
{
    const int n = p.arity();
    if (c.kind == ComponentConstraint::Kind::eq) {
        if (c.component < 1 || c.component + 1 > n)
            throw input_error("constraint component out of range");
    } else {
        if (c.component < 1 || c.component > n)
            throw input_error("constraint component out of range");
        if (c.vertex < 0 || c.vertex >= p.factor().count(0))
            throw input_error("constraint vertex out of range");
    }

    SubsetMask mask(&p.set(), p.cap());
    for (int d = 0; d <= p.cap(); ++d) {
        for (int id = 0; id < p.set().count(d); ++id) {
            const auto& tup = p.components(d, id);
            bool in;
            if (c.kind == ComponentConstraint::Kind::eq) {
                in = tup[c.component - 1] == tup[c.component];
            } else {
                const SimplexKey& k = tup[c.component - 1];
                in = k.dim == 0 && k.id == c.vertex;
            }
            if (in)
                mask.insert(d, id);
        }
    }
    if (!mask.is_face_closed())
        throw internal_error("constraint subset not face-closed");
    return mask;
}

}  // namespace pihom
