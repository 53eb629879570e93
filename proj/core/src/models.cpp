#include "pihom/models.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace pihom {

namespace {

SimplexKey vert(int id) { return SimplexKey{0, id, {}}; }

// The inverse-pair gadget: a 2-simplex with d2 = e, d0 = f, d1 = s0(base),
// so the path (e then f) is homotopic to the constant path.
void add_inverse_gadget(FiniteSimplicialSet& s, int e, int f, int base_vertex,
                        const std::string& label)
{
    SimplexKey d0{1, f, {}};
    SimplexKey d1 = total_degeneracy(base_vertex, 1);
    SimplexKey d2{1, e, {}};
    s.add_simplex(2, {d0, d1, d2}, label);
}

}  // namespace

std::shared_ptr<FiniteSimplicialSet> wedge_space(int r)
{
    if (r <= 0)
        throw input_error("wedge rank must be positive");
    auto s = std::make_shared<FiniteSimplicialSet>();
    int v = s->add_simplex(0, {}, "v");
    for (int i = 0; i < r; ++i)
        s->add_simplex(1, {vert(v), vert(v)}, "e" + std::to_string(i + 1));
    return s;
}

std::shared_ptr<FiniteSimplicialSet> wedge_inv_space(int r)
{
    if (r <= 0)
        throw input_error("wedge rank must be positive");
    auto s = std::make_shared<FiniteSimplicialSet>();
    int v = s->add_simplex(0, {}, "v");
    std::vector<int> es, fs;
    for (int i = 0; i < r; ++i)
        es.push_back(s->add_simplex(1, {vert(v), vert(v)}, "e" + std::to_string(i + 1)));
    for (int i = 0; i < r; ++i)
        fs.push_back(s->add_simplex(1, {vert(v), vert(v)}, "f" + std::to_string(i + 1)));
    for (int i = 0; i < r; ++i)
        add_inverse_gadget(*s, es[i], fs[i], v, "sigma" + std::to_string(i + 1));
    return s;
}

std::shared_ptr<FiniteSimplicialSet> two_vertex_circle_space()
{
    auto s = std::make_shared<FiniteSimplicialSet>();
    int x = s->add_simplex(0, {}, "x");
    int y = s->add_simplex(0, {}, "y");
    s->add_simplex(1, {vert(y), vert(x)}, "a");  // a: x -> y (d1 start, d0 end)
    s->add_simplex(1, {vert(x), vert(y)}, "b");  // b: y -> x
    return s;
}

std::shared_ptr<FiniteSimplicialSet> interval_chain_space(int length)
{
    if (length <= 0)
        throw input_error("interval length must be positive");
    auto s = std::make_shared<FiniteSimplicialSet>();
    std::vector<int> vs;
    for (int k = 0; k <= length; ++k)
        vs.push_back(s->add_simplex(0, {}, std::to_string(k)));
    for (int k = 0; k < length; ++k)
        s->add_simplex(1, {vert(vs[k + 1]), vert(vs[k])}, "e" + std::to_string(k + 1));
    return s;
}

std::shared_ptr<FiniteSimplicialSet> graph_space(const std::vector<std::string>& vertices,
                                                 const std::vector<GraphEdge>& edges)
{
    if (vertices.empty())
        throw input_error("graph needs at least one vertex");
    auto s = std::make_shared<FiniteSimplicialSet>();
    std::map<std::string, int> vid;
    for (const std::string& name : vertices) {
        if (vid.count(name))
            throw input_error("duplicate vertex: " + name);
        vid[name] = s->add_simplex(0, {}, name);
    }
    std::map<std::string, int> eid;
    for (const GraphEdge& e : edges) {
        if (eid.count(e.id))
            throw input_error("duplicate edge: " + e.id);
        auto from = vid.find(e.from);
        auto to = vid.find(e.to);
        if (from == vid.end() || to == vid.end())
            throw input_error("edge endpoint not a vertex: " + e.id);
        eid[e.id] = s->add_simplex(1, {vert(to->second), vert(from->second)}, e.id);
    }
    for (const GraphEdge& e : edges) {
        if (e.inverse_of.empty())
            continue;
        auto primary = eid.find(e.inverse_of);
        if (primary == eid.end())
            throw input_error("inverse_of refers to unknown edge: " + e.inverse_of);
        int pe = primary->second;
        int fe = eid[e.id];
        if (s->edge_start(fe) != s->edge_end(pe) || s->edge_end(fe) != s->edge_start(pe))
            throw input_error("inverse edge endpoints do not match: " + e.id);
        add_inverse_gadget(*s, pe, fe, s->edge_start(pe), "inv_" + e.id);
    }
    return s;
}

namespace {

struct GraphModelInput {
    std::shared_ptr<const FiniteSimplicialSet> space;
    int x = 0;
    int y = 0;
    // inverse_partner[e] = primary edge this one formally inverts, or -1.
    std::vector<int> inverse_partner;
};

// Builds rank, letter table, generator realizations and the reference path
// for a graph model. Primary (non-inverse) edges carry the fundamental
// groupoid: a spanning tree of them contributes no letters, the remaining
// ones are the free generators.
Model finish_graph_model(GraphModelInput in, ModelKind kind, std::string name)
{
    const FiniteSimplicialSet& s = *in.space;
    const int nv = s.count(0);
    const int ne = s.count(1);

    Model m;
    m.name = std::move(name);
    m.kind = kind;
    m.space = in.space;
    m.x = in.x;
    m.y = in.y;
    m.edge_letters.assign(ne, {});

    std::vector<int> primary;
    for (int e = 0; e < ne; ++e)
        if (in.inverse_partner[e] < 0)
            primary.push_back(e);

    // Undirected BFS over primary edges from x; records tree edges and, per
    // vertex, the forward sub-path to/from x when one exists.
    std::vector<char> seen(nv, 0);
    std::vector<char> in_tree(ne, 0);
    std::vector<int> parent_edge(nv, -1);
    std::vector<char> parent_forward(nv, 0);  // edge points away from x
    std::deque<int> queue;
    seen[in.x] = 1;
    queue.push_back(in.x);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int e : primary) {
            int a = s.edge_start(e), b = s.edge_end(e);
            int w = -1;
            bool forward = false;
            if (a == v && !seen[b]) {
                w = b;
                forward = true;
            } else if (b == v && !seen[a]) {
                w = a;
                forward = false;
            }
            if (w < 0)
                continue;
            seen[w] = 1;
            in_tree[e] = 1;
            parent_edge[w] = e;
            parent_forward[w] = forward;
            queue.push_back(w);
        }
    }
    for (int v = 0; v < nv; ++v)
        if (!seen[v])
            throw input_error("graph is not connected");

    for (int e : primary)
        if (!in_tree[e]) {
            m.edge_letters[e] = {m.rank, +1};
            ++m.rank;
        }
    for (int e = 0; e < ne; ++e) {
        int p = in.inverse_partner[e];
        if (p < 0)
            continue;
        const Model::EdgeLetter& pl = m.edge_letters[p];
        if (pl.gen >= 0)
            m.edge_letters[e] = {pl.gen, -pl.sign};
    }

    // Forward-only tree walk v -> x or x -> v; nullopt when some tree edge
    // points the wrong way.
    auto tree_path = [&](int v, bool to_x) -> std::optional<EdgePath> {
        EdgePath down;  // edges from v up to x, in that traversal order
        int cur = v;
        while (cur != in.x) {
            int e = parent_edge[cur];
            bool away = parent_forward[cur];
            if (to_x ? away : !away)
                return std::nullopt;
            down.push_back(e);
            cur = away ? s.edge_start(e) : s.edge_end(e);
        }
        if (!to_x)
            std::reverse(down.begin(), down.end());
        return down;
    };

    auto realization = [&](int e) -> std::optional<EdgePath> {
        auto head = tree_path(s.edge_start(e), false);
        auto tail = tree_path(s.edge_end(e), true);
        if (!head || !tail)
            return std::nullopt;
        EdgePath p = *head;
        p.push_back(e);
        p.insert(p.end(), tail->begin(), tail->end());
        return p;
    };

    m.gen_loops.assign(m.rank, {});
    m.gen_inv_loops.assign(m.rank, {});
    std::vector<char> have_loop(m.rank, 0), have_inv(m.rank, 0);
    for (int e = 0; e < ne; ++e) {
        const Model::EdgeLetter& l = m.edge_letters[e];
        if (l.gen < 0)
            continue;
        auto p = realization(e);
        if (!p)
            continue;
        if (l.sign > 0 && !have_loop[l.gen]) {
            m.gen_loops[l.gen] = *p;
            have_loop[l.gen] = 1;
        } else if (l.sign < 0 && !have_inv[l.gen]) {
            m.gen_inv_loops[l.gen] = *p;
            have_inv[l.gen] = 1;
        }
    }

    if (in.x != in.y) {
        // Shortest forward path x -> y over all edges, BFS by edge id.
        std::vector<int> via_edge(nv, -1), via_from(nv, -1);
        std::vector<char> vis(nv, 0);
        std::deque<int> q;
        vis[in.x] = 1;
        q.push_back(in.x);
        while (!q.empty() && !vis[in.y]) {
            int v = q.front();
            q.pop_front();
            for (int e = 0; e < ne; ++e) {
                if (s.edge_start(e) != v || vis[s.edge_end(e)])
                    continue;
                int w = s.edge_end(e);
                vis[w] = 1;
                via_edge[w] = e;
                via_from[w] = v;
                q.push_back(w);
            }
        }
        if (!vis[in.y])
            throw input_error("no forward path between the basepoints");
        EdgePath rp;
        for (int v = in.y; v != in.x; v = via_from[v])
            rp.push_back(via_edge[v]);
        std::reverse(rp.begin(), rp.end());
        m.ref_path = rp;
    }
    return m;
}

GraphModelInput plain_input(std::shared_ptr<const FiniteSimplicialSet> space, int x, int y)
{
    GraphModelInput in;
    in.inverse_partner.assign(space->count(1), -1);
    in.space = std::move(space);
    in.x = x;
    in.y = y;
    return in;
}

}  // namespace

Model wedge_model(int r)
{
    auto s = wedge_space(r);
    return finish_graph_model(plain_input(s, 0, 0), ModelKind::wedge,
                              "wedge(" + std::to_string(r) + ")");
}

Model wedge_inv_model(int r)
{
    auto s = wedge_inv_space(r);
    GraphModelInput in = plain_input(s, 0, 0);
    for (int i = 0; i < r; ++i)
        in.inverse_partner[r + i] = i;
    Model m = finish_graph_model(std::move(in), ModelKind::wedge_inv,
                                 "wedge_inv(" + std::to_string(r) + ")");
    return m;
}

Model two_vertex_circle_model(const std::string& x, const std::string& y)
{
    auto s = two_vertex_circle_space();
    int xv = s->vertex_by_label(x), yv = s->vertex_by_label(y);
    if (xv < 0 || yv < 0)
        throw input_error("two_vertex_circle basepoints must be x or y");
    return finish_graph_model(plain_input(s, xv, yv), ModelKind::two_vertex_circle,
                              "two_vertex_circle");
}

Model interval_chain_model(int length, int x, int y)
{
    auto s = interval_chain_space(length);
    if (x < 0 || x > length || y < 0 || y > length)
        throw input_error("interval basepoint out of range");
    return finish_graph_model(plain_input(s, x, y), ModelKind::interval_chain,
                              "interval_chain(" + std::to_string(length) + ")");
}

Model custom_graph_model(const std::vector<std::string>& vertices,
                         const std::vector<GraphEdge>& edges,
                         const std::string& x, const std::string& y)
{
    auto s = graph_space(vertices, edges);
    int xv = s->vertex_by_label(x), yv = s->vertex_by_label(y);
    if (xv < 0 || yv < 0)
        throw input_error("basepoint is not a vertex");
    GraphModelInput in = plain_input(s, xv, yv);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].inverse_of.empty())
            continue;
        in.inverse_partner[s->edge_by_label(edges[i].id)] =
            s->edge_by_label(edges[i].inverse_of);
    }
    return finish_graph_model(std::move(in), ModelKind::custom_graph, "custom_graph");
}

bool is_valid_edge_path(const Model& m, const EdgePath& p, int from, int to)
{
    int cur = from;
    for (int e : p) {
        if (e < 0 || e >= m.space->count(1) || m.space->edge_start(e) != cur)
            return false;
        cur = m.space->edge_end(e);
    }
    return cur == to;
}

Word word_of_path(const Model& m, const EdgePath& p)
{
    Word w;
    for (int e : p) {
        const Model::EdgeLetter& l = m.edge_letters.at(e);
        if (l.gen >= 0)
            w.letters.push_back(Letter{l.gen, l.sign});
    }
    return w;
}

Word loop_word(const Model& m, const EdgePath& p)
{
    return word_of_path(m, p).concat(word_of_path(m, m.ref_path).inverse());
}

TruncElem groupoid_class(const Model& m, const EdgePath& p, int level)
{
    if (!is_valid_edge_path(m, p, m.x, m.y))
        throw input_error("path endpoints do not match the basepoints");
    return magnus(loop_word(m, p), m.rank, level);
}

EdgePath realize_word(const Model& m, const Word& w, bool append_ref)
{
    EdgePath p;
    for (const Letter& l : w.letters) {
        if (l.gen < 0 || l.gen >= m.rank)
            throw input_error("letter outside generator range");
        const EdgePath& piece = l.sign > 0 ? m.gen_loops[l.gen] : m.gen_inv_loops[l.gen];
        if (piece.empty())
            throw input_error("letter has no forward realization: " +
                              Word{{Letter{l.gen, l.sign}}}.to_string());
        p.insert(p.end(), piece.begin(), piece.end());
    }
    if (append_ref)
        p.insert(p.end(), m.ref_path.begin(), m.ref_path.end());
    return p;
}

std::vector<EdgePath> enumerate_paths(const Model& m, int max_len)
{
    std::vector<EdgePath> out;
    if (m.x == m.y)
        out.push_back({});
    EdgePath cur;
    auto rec = [&](auto&& self, int v) -> void {
        if (static_cast<int>(cur.size()) >= max_len)
            return;
        for (int e = 0; e < m.space->count(1); ++e) {
            if (m.space->edge_start(e) != v)
                continue;
            cur.push_back(e);
            if (m.space->edge_end(e) == m.y)
                out.push_back(cur);
            self(self, m.space->edge_end(e));
            cur.pop_back();
        }
    };
    rec(rec, m.x);
    return out;
}

}  // namespace pihom
