#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pihom/chain.hpp"
#include "pihom/models.hpp"
#include "pihom/power.hpp"

using namespace pihom;

namespace {

// Counting oracle for products, independent of the tuple enumeration:
// the number of all d-simplices is multiplicative, and nondegenerate counts
// follow by binomial inversion.
long long binom(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    long long b = 1;
    for (int i = 0; i < k; ++i)
        b = b * (n - i) / (i + 1);
    return b;
}

std::vector<long long> all_simplex_counts(const FiniteSimplicialSet& x, int through)
{
    std::vector<long long> a(through + 1, 0);
    for (int d = 0; d <= through; ++d)
        for (int e = 0; e <= d; ++e)
            a[d] += binom(d, d - e) * x.count(e);
    return a;
}

std::vector<long long> product_nondeg_oracle(const FiniteSimplicialSet& x, int n, int through)
{
    std::vector<long long> a = all_simplex_counts(x, through);
    std::vector<long long> prod(through + 1, 1);
    for (int d = 0; d <= through; ++d)
        for (int c = 0; c < n; ++c)
            prod[d] *= a[d];
    std::vector<long long> nondeg(through + 1, 0);
    for (int d = 0; d <= through; ++d) {
        long long lower = 0;
        for (int e = 0; e < d; ++e)
            lower += binom(d, d - e) * nondeg[e];
        nondeg[d] = prod[d] - lower;
    }
    return nondeg;
}

}  // namespace

TEST_CASE("standard model construction counts")
{
    auto w1 = wedge_space(1);
    CHECK(w1->count(0) == 1);
    CHECK(w1->count(1) == 1);
    CHECK(w1->count(2) == 0);

    auto wi2 = wedge_inv_space(2);
    CHECK(wi2->count(0) == 1);
    CHECK(wi2->count(1) == 4);
    CHECK(wi2->count(2) == 2);

    auto circ = two_vertex_circle_space();
    CHECK(circ->count(0) == 2);
    CHECK(circ->count(1) == 2);
    CHECK(circ->edge_start(0) == circ->vertex_by_label("x"));
    CHECK(circ->edge_end(0) == circ->vertex_by_label("y"));

    auto iv = interval_chain_space(3);
    CHECK(iv->count(0) == 4);
    CHECK(iv->count(1) == 3);

    CHECK_THROWS_AS(wedge_space(0), input_error);
    CHECK_THROWS_AS(interval_chain_space(-1), input_error);
    CHECK_THROWS_AS(graph_space({}, {}), input_error);
    CHECK_THROWS_AS(graph_space({"p"}, {{"e", "p", "nowhere", ""}}), input_error);
}

TEST_CASE("face and degeneracy calculus")
{
    auto w = wedge_space(1);
    SimplexKey v{0, 0, {}};
    SimplexKey e{1, 0, {}};

    SimplexKey s0v = w->degeneracy(v, 0);
    CHECK(s0v == SimplexKey{0, 0, {0}});
    CHECK(w->face(s0v, 0) == v);
    CHECK(w->face(s0v, 1) == v);

    SimplexKey s1e = w->degeneracy(e, 1);
    CHECK(s1e == SimplexKey{1, 0, {1}});
    CHECK(w->face(s1e, 1) == e);  // d_1 s_1 = id
    CHECK(w->face(s1e, 0) == w->degeneracy(w->face(e, 0), 0));  // d_0 s_1 = s_0 d_0

    // Normal form survives arbitrary degeneracy stacking.
    SimplexKey k = v;
    for (int j : {0, 0, 1, 2, 0})
        k = w->degeneracy(k, j);
    CHECK(k.degree() == 5);
    CHECK(std::is_sorted(k.degens.rbegin(), k.degens.rend()));
    CHECK(k == total_degeneracy(0, 5));

    CHECK_THROWS_AS(w->face(e, 2), input_error);
    CHECK_THROWS_AS(w->face(v, 0), input_error);
}

TEST_CASE("simplicial identities hold on models and products")
{
    for (auto space : {wedge_inv_space(2), two_vertex_circle_space(), interval_chain_space(2)})
        CHECK(check_simplicial_identities(*space).empty());

    auto p = power(wedge_inv_space(1), 2, 3);
    CHECK(check_simplicial_identities(p->set()).empty());
    auto q = power(two_vertex_circle_space(), 3, 4);
    CHECK(check_simplicial_identities(q->set()).empty());
}

TEST_CASE("power of the circle model")
{
    auto w = wedge_space(1);
    auto p = power(w, 2, 3);

    CHECK(p->set().count(0) == 1);
    CHECK(p->set().count(1) == 3);
    CHECK(p->set().count(2) == 2);
    CHECK(p->set().count(3) == 0);

    auto oracle = product_nondeg_oracle(*w, 2, 3);
    for (int d = 0; d <= 3; ++d)
        CHECK(p->set().count(d) == oracle[d]);

    // Degree 2: exactly the two shuffles of the edge with itself.
    SimplexKey s0e{1, 0, {0}}, s1e{1, 0, {1}};
    CHECK(p->id_of(2, {s0e, s1e}) >= 0);
    CHECK(p->id_of(2, {s1e, s0e}) >= 0);
    CHECK(p->id_of(2, {s0e, s0e}) < 0);
}

TEST_CASE("power counts match the oracle across models")
{
    struct Case {
        std::shared_ptr<FiniteSimplicialSet> space;
        int n;
        int cap;
    };
    for (const Case& c : {Case{two_vertex_circle_space(), 2, 3},
                          Case{two_vertex_circle_space(), 3, 4},
                          Case{wedge_space(2), 2, 3},
                          Case{wedge_inv_space(1), 2, 3}}) {
        auto p = power(c.space, c.n, c.cap);
        auto oracle = product_nondeg_oracle(*c.space, c.n, c.cap);
        for (int d = 0; d <= c.cap; ++d)
            CHECK(p->set().count(d) == oracle[d]);
    }
}

TEST_CASE("power special cases")
{
    auto circ = two_vertex_circle_space();
    auto p1 = power(circ, 1, 2);
    for (int d = 0; d <= 2; ++d)
        CHECK(p1->set().count(d) == circ->count(d));
    for (int id = 0; id < p1->set().count(1); ++id)
        CHECK(p1->components(1, id)[0] == SimplexKey{1, id, {}});

    auto p3 = power(circ, 3, 1);
    CHECK(p3->set().count(0) == 8);  // |V|^3

    auto p0 = power(circ, 0, 2);
    CHECK(p0->set().count(0) == 1);
    CHECK(p0->set().count(1) == 0);

    // Nothing nondegenerate above n * dim(X).
    auto wi = wedge_inv_space(1);
    auto pw = power(wi, 2, 5);
    CHECK(pw->set().count(5) == 0);
    CHECK(pw->set().count(4) > 0);

    CHECK_THROWS_AS(power(circ, 2, 3, 5), resource_limit_error);
}

TEST_CASE("coordinate constraints")
{
    auto w = wedge_space(1);
    auto p = power(w, 2, 3);

    SubsetMask diag = coordinate_constraint_subset(*p, ComponentConstraint::eq(1));
    CHECK(diag.count(0) == 1);  // |V| diagonal vertices
    CHECK(diag.count(1) == 1);  // only (e, e)
    int diag_edge = p->id_of(1, {SimplexKey{1, 0, {}}, SimplexKey{1, 0, {}}});
    CHECK(diag.contains(1, diag_edge));
    CHECK(diag.is_face_closed());

    SubsetMask pinned = coordinate_constraint_subset(*p, ComponentConstraint::pinned_to(1, 0));
    for (int d = 0; d <= 3; ++d)
        CHECK(pinned.count(d) == w->count(d));  // second coordinate free
    CHECK(pinned.is_face_closed());

    CHECK_THROWS_AS(coordinate_constraint_subset(*p, ComponentConstraint::eq(2)), input_error);
    CHECK_THROWS_AS(coordinate_constraint_subset(*p, ComponentConstraint::pinned_to(1, 7)),
                    input_error);
}

TEST_CASE("subset algebra")
{
    auto circ = two_vertex_circle_space();
    auto p = power(circ, 2, 3);
    int x = circ->vertex_by_label("x");
    int y = circ->vertex_by_label("y");

    SubsetMask y0 = coordinate_constraint_subset(*p, ComponentConstraint::pinned_to(1, x));
    SubsetMask y1 = coordinate_constraint_subset(*p, ComponentConstraint::eq(1));
    SubsetMask y2 = coordinate_constraint_subset(*p, ComponentConstraint::pinned_to(2, y));

    CHECK(union_subsets({y0, y0}) == y0);
    SubsetMask full = SubsetMask::full(&p->set(), 3);
    CHECK(intersect_subsets({y1, full}) == y1);

    // A = Y0 ∩ (Y1 ∪ Y2): exactly the vertices (x,x) and (x,y).
    SubsetMask a = intersect_subsets({y0, union_subsets({y1, y2})});
    CHECK(a.count(0) == 2);
    for (int id : a.members(0)) {
        const auto& tup = p->components(0, id);
        CHECK(tup[0] == SimplexKey{0, x, {}});
    }
    for (int d = 1; d <= 3; ++d)
        CHECK(a.count(d) == 0);
    CHECK(a.is_face_closed());

    auto other = power(circ, 2, 3);
    SubsetMask foreign(&other->set(), 3);
    CHECK_THROWS_AS(union_subsets({y0, foreign}), input_error);
}

TEST_CASE("normalized chain complexes")
{
    auto w = wedge_space(1);
    ChainComplex circle = normalized_chain_complex(*w, nullptr, nullptr, 2, "circle");
    CHECK(circle.dim(0) == 1);
    CHECK(circle.dim(1) == 1);
    CHECK(circle.boundary[1].is_zero());  // single vertex: d0 = d1
    CHECK(boundaries_compose_to_zero(circle));

    SubsetMask full = SubsetMask::full(w.get(), 2);
    ChainComplex zero = normalized_chain_complex(*w, nullptr, &full, 2, "rel full");
    for (int d = 0; d <= 2; ++d)
        CHECK(zero.dim(d) == 0);

    auto circ = two_vertex_circle_space();
    SubsetMask pts(circ.get(), 2);
    pts.insert(0, 0);
    pts.insert(0, 1);
    ChainComplex rel = normalized_chain_complex(*circ, nullptr, &pts, 2, "rel endpoints");
    CHECK(rel.dim(0) == 0);
    CHECK(rel.dim(1) == 2);
    CHECK(rel.boundary[1].is_zero());

    // Products: exact boundary-squares-to-zero.
    auto p = power(wedge_inv_space(1), 2, 3);
    ChainComplex pc = normalized_chain_complex(p->set(), nullptr, nullptr, 3, "square");
    CHECK(boundaries_compose_to_zero(pc));

    QMatrix d1 = normalized_chain_complex(*circ, nullptr, nullptr, 1, "abs").boundary[1];
    CHECK(rank(d1) == 1);
}
