#include "pihom/transition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pihom {

namespace {

int permutation_sign(const std::vector<int>& perm)
{
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j])
                ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

std::vector<int> path_vertices(const Model& m, const EdgePath& path, int start)
{
    std::vector<int> v{start};
    for (int e : path)
        v.push_back(m.space->edge_end(e));
    return v;
}

}  // namespace

std::string monomial_name(const Monomial& m)
{
    if (m.empty())
        return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < m.size(); ++i)
        os << (i ? "*" : "") << "e" << m[i] + 1;
    return os.str();
}

StaircaseChain staircase_chain(const PairFamily& pf, const Model& m,
                               const EdgePath& path, const SignConvention& sc)
{
    if (!is_valid_edge_path(m, path, pf.x, pf.y))
        throw input_error("path endpoints do not match the pair family");

    const int n = pf.level;
    const int len = static_cast<int>(path.size());
    StaircaseChain out;
    out.path = path;
    out.level = n;

    if (n == 0) {
        out.chain[0] = Rat(1);  // the unique vertex of the empty power
        return out;
    }
    if (len == 0)
        return out;

    const int global = (n * (n - 1) / 2) % 2 == 0 ? 1 : -1;

    // Cells: nondecreasing corner c in {0..len-1}^n; within a cell, one
    // simplex per order of coordinate increments whose intermediate corners
    // stay nondecreasing.
    std::vector<int> corner(n, 0);
    std::vector<int> perm(n);

    auto emit_cell = [&]() {
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<std::vector<int>> pts{corner};
            bool ok = true;
            for (int k = 0; k < n && ok; ++k) {
                std::vector<int> nxt = pts.back();
                ++nxt[perm[k]];
                ok = std::is_sorted(nxt.begin(), nxt.end());
                pts.push_back(std::move(nxt));
            }
            if (!ok)
                continue;
            // Component j: the edge stepped at position perm^{-1}(j),
            // degenerated everywhere except that gap.
            std::vector<SimplexKey> tuple(n);
            for (int k = 0; k < n; ++k) {
                int j = perm[k];
                SimplexKey key{1, path[corner[j]], {}};
                for (int g = n - 1; g >= 0; --g)
                    if (g != k)
                        key.degens.push_back(g);
                tuple[j] = key;
            }
            SimplexKey prod = pf.power_set->normalize_tuple(std::move(tuple));
            if (prod.degenerate())
                continue;
            int sign = sc.coherent ? permutation_sign(perm) * global : global;
            auto [it, inserted] = out.chain.try_emplace(prod.id, Rat(sign));
            if (!inserted) {
                it->second += sign;
                if (it->second == 0)
                    out.chain.erase(it);
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    };

    auto cells = [&](auto&& self, int pos, int lo) -> void {
        if (pos == n) {
            emit_cell();
            return;
        }
        for (int c = lo; c < len; ++c) {
            corner[pos] = c;
            self(self, pos + 1, c);
        }
    };
    cells(cells, 0, 0);
    return out;
}

bool staircase_boundary_supported(const PairFamily& pf, const StaircaseChain& sc)
{
    if (sc.level == 0)
        return true;
    SimplexChain bnd = simplicial_boundary(pf.space(), sc.level, sc.chain);
    for (const auto& [id, coeff] : bnd) {
        (void)coeff;
        if (!pf.y_mask.contains(sc.level - 1, id))
            return false;
    }
    return true;
}

QVec tau_class(const PairFamily& pf, const Model& m, const PathCombination& paths,
               const SignConvention& sc)
{
    SimplexChain combined;
    for (const auto& [path, coeff] : paths) {
        StaircaseChain stair = staircase_chain(pf, m, path, sc);
        if (!staircase_boundary_supported(pf, stair))
            throw internal_error("staircase boundary escapes Y");
        for (const auto& [id, c] : stair.chain) {
            auto [it, inserted] = combined.try_emplace(id, coeff * c);
            if (!inserted) {
                it->second += coeff * c;
                if (it->second == 0)
                    combined.erase(it);
            }
        }
    }
    QVec v = pf.upper.vector_of(pf.level, combined);
    std::optional<QVec> cls = pf.h_top.coords(v);
    if (!cls)
        throw internal_error("staircase combination is not a relative cycle");
    return *cls;
}

TauMatrix tau_matrix(const PairFamily& pf, const Model& m, const SignConvention& sc)
{
    TauMatrix tm;
    tm.basis = monomial_basis(m.rank, pf.level);
    std::vector<QVec> cols;
    for (const Monomial& mono : tm.basis) {
        PathCombination paths;
        for (const auto& [word, coeff] : basis_lift(mono))
            paths.emplace_back(realize_word(m, word, true), coeff);
        cols.push_back(tau_class(pf, m, paths, sc));
    }
    tm.matrix = QMatrix::from_columns(pf.h_top.dimension(), cols);
    return tm;
}

TauRankCheck check_tau_rank(const TauMatrix& tm, const PairFamily& pf)
{
    TauRankCheck out;
    out.rank = rank(tm.matrix);
    const int h_dim = tm.matrix.rows();
    const int a_dim = tm.matrix.cols();
    std::ostringstream os;
    if (pf.x != pf.y) {
        out.pass = h_dim == a_dim && out.rank == h_dim;
        os << "distinct basepoints: " << h_dim << "x" << a_dim
           << " rank " << out.rank << (out.pass ? " invertible" : " NOT invertible");
    } else {
        std::vector<QVec> ker = kernel_basis(tm.matrix);
        bool unit_kernel = ker.size() == 1;
        if (unit_kernel) {
            unit_kernel = ker[0][0] != 0;
            for (std::size_t i = 1; i < ker[0].size() && unit_kernel; ++i)
                unit_kernel = ker[0][i] == 0;
        }
        out.pass = a_dim == h_dim + 1 && out.rank == h_dim && unit_kernel;
        os << "equal basepoints: " << h_dim << "x" << a_dim << " rank " << out.rank
           << (unit_kernel ? ", kernel = unit class" : ", kernel NOT the unit class");
    }
    out.detail = os.str();
    return out;
}

Excision excision_iso(const PairFamily& pf, const PairFamily& prev)
{
    if (pf.level < 1)
        throw input_error("excision needs level >= 1");
    if (prev.retained != pf.retained)
        throw input_error("retained conventions differ between levels");

    Excision exc;
    exc.lower = normalized_chain_complex(pf.space(), &pf.y_mask, &pf.z_mask,
                                         pf.level, "Y rel Z");
    exc.h_lower = homology_space(exc.lower, pf.level - 1);

    PrevEmbedding emb = embed_prev_map(pf, prev);
    const ChainComplex* src = &prev.upper;
    const ChainComplex* tgt = &exc.lower;
    ChainMapFn f = [src, tgt, emb](int degree, int src_index) -> QVec {
        int id = emb.id_map[degree][src->basis[degree][src_index]];
        QVec v = zero_vec(tgt->dim(degree));
        if (tgt->rel && tgt->rel->contains(degree, id))
            return v;
        int p = tgt->pos(degree, id);
        if (p < 0)
            throw internal_error("embedded simplex outside (Y, Z)");
        v[p] = Rat(1);
        return v;
    };
    exc.g = induced_map(prev.upper, exc.lower, prev.h_top, exc.h_lower,
                        pf.level - 1, f);

    if (exc.g.rows() != exc.g.cols() || rank(exc.g) != exc.g.rows())
        throw theorem_violation("excision map is not invertible: " +
                                std::to_string(exc.g.rows()) + "x" +
                                std::to_string(exc.g.cols()) + " rank " +
                                std::to_string(rank(exc.g)));
    return exc;
}

Kappa kappa(const PairFamily& pf, const PairFamily& prev)
{
    Kappa k;
    k.exc = excision_iso(pf, prev);
    k.connecting = connecting_triple(pf.upper, pf.h_top, k.exc.lower, k.exc.h_lower);

    LinearSolver g(k.exc.g);
    std::vector<QVec> cols;
    for (int j = 0; j < k.connecting.cols(); ++j) {
        std::optional<QVec> col = g.solve(k.connecting.column(j));
        if (!col)
            throw internal_error("invertible excision failed to solve");
        cols.push_back(std::move(*col));
    }
    k.matrix = QMatrix::from_columns(k.exc.g.cols(), cols);
    return k;
}

namespace {

// Aggregates per-item sign constraints; zero items are unconstrained.
void fold_sign(std::optional<int>& acc, bool& failed, const QVec& lhs, const QVec& rhs)
{
    bool plus = lhs == rhs;
    bool minus = true;
    for (std::size_t i = 0; i < lhs.size() && minus; ++i)
        minus = lhs[i] == -rhs[i];
    if (!plus && !minus) {
        failed = true;
        return;
    }
    if (plus && minus)
        return;  // both sides zero
    int need = plus ? 1 : -1;
    if (acc && *acc != need)
        failed = true;
    else
        acc = need;
}

}  // namespace

CdReport verify_cd(const Model& m, int n, Retained retained,
                   const std::vector<Word>& words, long long max_cells,
                   const SignConvention& sc)
{
    if (n < 1)
        throw input_error("diagram check needs level >= 1");

    PairFamily pf = build_pair_family(m, n, retained, max_cells);
    PairFamily prev = build_pair_family(m, n - 1, retained, max_cells);
    Kappa kp = kappa(pf, prev);
    TauMatrix tau_n = tau_matrix(pf, m, sc);
    TauMatrix tau_p = tau_matrix(prev, m, sc);
    QMatrix proj = projection_matrix(m.rank, n);

    QMatrix lhs = kp.matrix.multiply(tau_n.matrix);
    QMatrix rhs = tau_p.matrix.multiply(proj);

    CdReport rep;
    rep.level = n;
    rep.retained = retained;
    std::optional<int> sign;
    bool failed = false;

    for (std::size_t j = 0; j < tau_n.basis.size(); ++j) {
        CdItem item;
        item.name = monomial_name(tau_n.basis[j]);
        item.lhs = lhs.column(static_cast<int>(j));
        item.rhs = rhs.column(static_cast<int>(j));
        fold_sign(sign, failed, item.lhs, item.rhs);
        rep.items.push_back(std::move(item));
    }
    for (const Word& w : words) {
        EdgePath path = realize_word(m, w, true);
        CdItem item;
        item.name = w.to_string();
        item.lhs = kp.matrix.apply(tau_class(pf, m, {{path, Rat(1)}}, sc));
        item.rhs = tau_p.matrix.apply(trunc_coords(groupoid_class(m, path, n - 1)));
        fold_sign(sign, failed, item.lhs, item.rhs);
        rep.items.push_back(std::move(item));
    }

    if (!failed)
        rep.global_sign = sign ? sign : std::optional<int>(1);
    return rep;
}

PathCombination ideal_element_paths(const Model& m, const Monomial& mono, const Word& w)
{
    PathCombination out;
    for (const auto& [lift, coeff] : basis_lift(mono))
        out.emplace_back(realize_word(m, lift.concat(w), true), coeff);
    return out;
}

}  // namespace pihom
