#include "pihom/sset.hpp"

#include <algorithm>
#include <sstream>

namespace pihom {

std::uint64_t SimplexKey::collapse_mask() const
{
    std::uint64_t m = 0;
    for (int j : degens)
        m |= std::uint64_t(1) << j;
    return m;
}

std::string SimplexKey::to_string() const
{
    std::ostringstream os;
    for (int j : degens)
        os << "s" << j << ".";
    os << "(" << dim << ":" << id << ")";
    return os.str();
}

SimplexKey total_degeneracy(int vertex_id, int degree)
{
    SimplexKey k{0, vertex_id, {}};
    k.degens.reserve(degree);
    for (int j = degree - 1; j >= 0; --j)
        k.degens.push_back(j);
    return k;
}

int FiniteSimplicialSet::add_simplex(int dim, std::vector<SimplexKey> faces, std::string label)
{
    if (dim < 0)
        throw internal_error("negative simplex dimension");
    if (dim == 0) {
        if (!faces.empty())
            throw internal_error("vertex with faces");
    } else if (static_cast<int>(faces.size()) != dim + 1) {
        throw internal_error("face list size mismatch");
    }
    for (const SimplexKey& f : faces)
        if (f.degree() != dim - 1)
            throw internal_error("face degree mismatch");

    if (static_cast<int>(faces_.size()) <= dim) {
        faces_.resize(dim + 1);
        counts_.resize(dim + 1, 0);
        labels_.resize(dim + 1);
    }
    int id = counts_[dim]++;
    for (SimplexKey& f : faces)
        faces_[dim].push_back(std::move(f));
    labels_[dim].push_back(std::move(label));
    return id;
}

int FiniteSimplicialSet::count(int dim) const
{
    if (dim < 0 || dim >= static_cast<int>(counts_.size()))
        return 0;
    return counts_[dim];
}

long long FiniteSimplicialSet::total_nondegenerate() const
{
    long long t = 0;
    for (int c : counts_)
        t += c;
    return t;
}

const SimplexKey& FiniteSimplicialSet::face_of_nondeg(int dim, int id, int i) const
{
    if (dim < 1 || dim > top_dim() || id < 0 || id >= counts_[dim] || i < 0 || i > dim)
        throw input_error("face index out of range");
    return faces_[dim][static_cast<std::size_t>(id) * (dim + 1) + i];
}

SimplexKey FiniteSimplicialSet::face(const SimplexKey& s, int i) const
{
    const int deg = s.degree();
    if (i < 0 || i > deg || deg == 0)
        throw input_error("face index out of range");

    // Push d_i through the degeneracy word, outermost entry first.
    std::vector<int> word = s.degens;
    int ii = i;
    for (std::size_t t = 0; t < word.size(); ++t) {
        int j = word[t];
        if (ii == j || ii == j + 1) {
            word.erase(word.begin() + static_cast<std::ptrdiff_t>(t));
            return SimplexKey{s.dim, s.id, std::move(word)};
        }
        if (ii > j + 1)
            --ii;
        else
            word[t] = j - 1;
    }

    // d_ii hits the nondegenerate core; reapply the commuted word on top.
    SimplexKey res = face_of_nondeg(s.dim, s.id, ii);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        res = degeneracy(res, *it);
    return res;
}

SimplexKey FiniteSimplicialSet::degeneracy(const SimplexKey& s, int j) const
{
    if (j < 0 || j > s.degree())
        throw input_error("degeneracy index out of range");
    SimplexKey out = s;
    std::size_t pos = 0;
    int a = j;
    while (pos < out.degens.size() && a <= out.degens[pos]) {
        ++out.degens[pos];
        ++pos;
    }
    out.degens.insert(out.degens.begin() + static_cast<std::ptrdiff_t>(pos), a);
    return out;
}

const std::string& FiniteSimplicialSet::label(int dim, int id) const
{
    static const std::string kEmpty;
    if (dim < 0 || dim >= static_cast<int>(labels_.size()) || id < 0 ||
        id >= static_cast<int>(labels_[dim].size()))
        return kEmpty;
    return labels_[dim][id];
}

int FiniteSimplicialSet::vertex_by_label(const std::string& name) const
{
    for (int id = 0; id < count(0); ++id)
        if (labels_[0][id] == name)
            return id;
    return -1;
}

int FiniteSimplicialSet::edge_by_label(const std::string& name) const
{
    for (int id = 0; id < count(1); ++id)
        if (labels_[1][id] == name)
            return id;
    return -1;
}

int FiniteSimplicialSet::edge_start(int edge_id) const
{
    const SimplexKey& k = face_of_nondeg(1, edge_id, 1);
    if (k.degenerate())
        throw internal_error("edge with degenerate endpoint");
    return k.id;
}

int FiniteSimplicialSet::edge_end(int edge_id) const
{
    const SimplexKey& k = face_of_nondeg(1, edge_id, 0);
    if (k.degenerate())
        throw internal_error("edge with degenerate endpoint");
    return k.id;
}

namespace {

void collapse_subsets(int slots, int size, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (static_cast<int>(cur.size()) == size) {
        out.push_back(cur);
        return;
    }
    int start = cur.empty() ? 0 : cur.back() + 1;
    for (int v = start; v < slots; ++v) {
        cur.push_back(v);
        collapse_subsets(slots, size, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<SimplexKey> FiniteSimplicialSet::keys_of_degree(int degree) const
{
    std::vector<SimplexKey> keys;
    for (int e = 0; e <= std::min(degree, top_dim()); ++e) {
        if (count(e) == 0)
            continue;
        std::vector<std::vector<int>> subsets;
        std::vector<int> cur;
        collapse_subsets(degree, degree - e, cur, subsets);
        for (int id = 0; id < count(e); ++id) {
            for (const auto& s : subsets) {
                SimplexKey k{e, id, {}};
                k.degens.assign(s.rbegin(), s.rend());
                keys.push_back(std::move(k));
            }
        }
    }
    return keys;
}

std::string check_simplicial_identities(const FiniteSimplicialSet& s)
{
    for (int d = 2; d <= s.top_dim(); ++d) {
        for (int id = 0; id < s.count(d); ++id) {
            SimplexKey k{d, id, {}};
            for (int j = 1; j <= d; ++j) {
                for (int i = 0; i < j; ++i) {
                    SimplexKey lhs = s.face(s.face(k, j), i);
                    SimplexKey rhs = s.face(s.face(k, i), j - 1);
                    if (lhs != rhs) {
                        std::ostringstream os;
                        os << "d" << i << " d" << j << " != d" << (j - 1) << " d" << i
                           << " on " << k.to_string();
                        return os.str();
                    }
                }
            }
        }
    }
    return {};
}

SubsetMask::SubsetMask(const FiniteSimplicialSet* parent, int through_degree)
    : parent_(parent), member_(through_degree + 1)
{
    for (int d = 0; d <= through_degree; ++d)
        member_[d].assign(parent->count(d), 0);
}

SubsetMask SubsetMask::full(const FiniteSimplicialSet* parent, int through_degree)
{
    SubsetMask m(parent, through_degree);
    for (int d = 0; d <= through_degree; ++d)
        m.member_[d].assign(parent->count(d), 1);
    return m;
}

void SubsetMask::insert(int degree, int id)
{
    member_.at(degree).at(id) = 1;
}

bool SubsetMask::contains(int degree, int id) const
{
    if (degree < 0 || degree >= static_cast<int>(member_.size()))
        return false;
    if (id < 0 || id >= static_cast<int>(member_[degree].size()))
        return false;
    return member_[degree][id] != 0;
}

int SubsetMask::count(int degree) const
{
    if (degree < 0 || degree >= static_cast<int>(member_.size()))
        return 0;
    int c = 0;
    for (char b : member_[degree])
        c += b;
    return c;
}

long long SubsetMask::total() const
{
    long long t = 0;
    for (int d = 0; d <= through_degree(); ++d)
        t += count(d);
    return t;
}

std::vector<int> SubsetMask::members(int degree) const
{
    std::vector<int> out;
    if (degree < 0 || degree >= static_cast<int>(member_.size()))
        return out;
    for (int id = 0; id < static_cast<int>(member_[degree].size()); ++id)
        if (member_[degree][id])
            out.push_back(id);
    return out;
}

bool SubsetMask::is_face_closed() const
{
    for (int d = 1; d <= through_degree(); ++d) {
        for (int id : members(d)) {
            for (int i = 0; i <= d; ++i) {
                SimplexKey f = parent_->face(SimplexKey{d, id, {}}, i);
                if (!contains(f.dim, f.id))
                    return false;
            }
        }
    }
    return true;
}

namespace {

void require_same_parent(const std::vector<SubsetMask>& masks)
{
    if (masks.empty())
        throw input_error("empty mask list");
    for (const SubsetMask& m : masks)
        if (m.parent() != masks.front().parent() ||
            m.through_degree() != masks.front().through_degree())
            throw input_error("subset parent mismatch");
}

}  // namespace

SubsetMask union_subsets(const std::vector<SubsetMask>& masks)
{
    require_same_parent(masks);
    SubsetMask out(masks.front().parent(), masks.front().through_degree());
    for (int d = 0; d <= out.through_degree(); ++d)
        for (const SubsetMask& m : masks)
            for (int id : m.members(d))
                out.insert(d, id);
    return out;
}

SubsetMask intersect_subsets(const std::vector<SubsetMask>& masks)
{
    require_same_parent(masks);
    SubsetMask out(masks.front().parent(), masks.front().through_degree());
    for (int d = 0; d <= out.through_degree(); ++d) {
        for (int id : masks.front().members(d)) {
            bool in_all = true;
            for (const SubsetMask& m : masks)
                in_all = in_all && m.contains(d, id);
            if (in_all)
                out.insert(d, id);
        }
    }
    return out;
}

}  // namespace pihom
