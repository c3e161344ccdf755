#include <gtest/gtest.h>

#include <set>

#include "pathalg/builtins.hpp"
#include "pathalg/error.hpp"
#include "pathalg/morphism.hpp"
#include "small_space.hpp"

using namespace pathalg;
using pathalg::testkit::Rng;

namespace {

// Regularity straight from its clause-by-clause definition: injectivity on
// s⁻¹(v), and p ∈ f(s⁻¹(v)) exactly when p is a nonempty edge path that no
// element extends properly and whose every branch point is fully covered.
bool regular_by_definition(const PathHom& f) {
  const Graph& E = f.dom();
  const Graph& F = f.cod();
  for (auto v : regular_vertices(E)) {
    std::set<Path> S;
    for (auto e : E.out_edges(v)) S.insert(f(e));
    bool reg0 = is_reg0_vertex(E, v);
    if (reg0 && S.size() == 1 && S.begin()->is_vertex()) continue;
    if (S.size() != E.out_edges(v).size()) return false;
    auto condition = [&](const Path& p) {
      if (p.is_vertex()) return false;
      for (const auto& q : S)
        if (prefix_leq(p, q) && !(p == q)) return false;
      auto edges = p.edges();
      for (std::size_t i = 0; i < edges.size(); ++i) {
        Path head = i == 0 ? F.vertex_path(p.source()) : F.make_path({edges.begin(), edges.begin() + i});
        for (auto e : F.out_edges(F.source(edges[i]))) {
          Path he = head * F.edge_path(e);
          bool covered = false;
          for (const auto& q : S) covered = covered || prefix_leq(he, q);
          if (!covered) return false;
        }
      }
      return true;
    };
    for (const auto& p : S)
      if (!condition(p)) return false;
    for (const auto& q : S)
      for (std::size_t k = 1; k <= q.length(); ++k) {
        Path p = F.make_path({q.edges().begin(), q.edges().begin() + k});
        if (condition(p) && !S.contains(p)) return false;
      }
  }
  return true;
}

}  // namespace

TEST(Morphism, ConstructorChecksEndpoints) {
  auto e = builtin::graph("edge"), line = builtin::graph("line3");
  EXPECT_THROW(PathHom(e, line, {line->vertex_of("a"), line->vertex_of("c")}, {line->edge_path(line->edge_of("x"))}),
               Error);
  EXPECT_NO_THROW(builtin::morphism("edge_to_line3"));
}

TEST(Morphism, ApplyConcatenatesImages) {
  PathHom phi = builtin::rp2_phi();
  const Graph& E1 = phi.dom();
  Path p = E1.make_path({E1.edge_of("s"), E1.edge_of("s"), E1.edge_of("t")});
  EXPECT_EQ(phi.cod().format(apply(phi, p)), "e e e e e f");
  EXPECT_EQ(phi.cod().format(apply(phi, E1.vertex_path(E1.vertex_of("w")))), "w");
}

TEST(Morphism, ComposeRejectsMismatchedGraphs) {
  EXPECT_THROW(compose(builtin::rp2_phi(), builtin::rp2_phi()), Error);
}

TEST(MorphismProperty, CategoryLaws) {
  Rng rng(21);
  auto graphs = testkit::small_graphs(4, 3);
  std::uniform_int_distribution<std::size_t> pick(0, graphs.size() - 1);
  int checked = 0;
  while (checked < 300) {
    auto a = graphs[pick(rng)], b = graphs[pick(rng)], c = graphs[pick(rng)], d = graphs[pick(rng)];
    auto f = testkit::random_hom(a, b, 2, rng);
    auto g = testkit::random_hom(b, c, 2, rng);
    auto h = testkit::random_hom(c, d, 2, rng);
    if (!f || !g || !h) continue;
    ++checked;
    ASSERT_EQ(compose(*h, compose(*g, *f)), compose(compose(*h, *g), *f));
    ASSERT_EQ(compose(*f, PathHom::identity(a)), *f);
    ASSERT_EQ(compose(PathHom::identity(b), *f), *f);
  }
}

TEST(MorphismProperty, ApplyCommutesWithEndpoints) {
  for (const auto& g : testkit::small_graphs(2, 2))
    for (const auto& h : testkit::small_graphs(2, 2))
      for (const auto& f : testkit::all_homs(g, h, 2))
        for (const auto& p : paths_up_to(*g, 3)) {
          Path q = apply(f, p);
          ASSERT_EQ(q.source(), f(p.source()));
          ASSERT_EQ(q.target(), f(p.target()));
        }
}

TEST(Morphism, ClassifiesProjectivePlaneMap) {
  auto v = classify(builtin::rp2_phi());
  for (auto c : {Category::PG, Category::IPG, Category::BPG, Category::MIPG, Category::MBPG, Category::RMIPG,
                 Category::RMBPG})
    EXPECT_TRUE(v.in(c)) << to_string(c);
  EXPECT_TRUE(v.witnesses.empty());
}

TEST(Morphism, ConstantRoseMapIsNotMonotone) {
  auto v = classify(*builtin::morphism("rose2_to_point"));
  EXPECT_TRUE(v.in(Category::IPG));
  EXPECT_FALSE(v.in(Category::MIPG));
  EXPECT_EQ(v.witnesses.at(Predicate::Monotone).summary, "f(e1) = v is a prefix of f(e2) = v");
}

TEST(Morphism, VertexInjectivityWitness) {
  auto line = builtin::graph("line3"), point = builtin::graph("point");
  auto f = builtin::hom(line, point, {{"a", "v"}, {"b", "v"}, {"c", "v"}}, {{"x", "v"}, {"y", "v"}});
  auto w = vertex_injectivity_violation(f);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->summary, "vertices a and b both map to v");
  EXPECT_FALSE(classify(f).in(Category::IPG));
  EXPECT_TRUE(classify(f).in(Category::PG));
}

TEST(Morphism, BijectivityWitness) {
  auto v = classify(*builtin::morphism("edge_to_line3"));
  EXPECT_TRUE(v.in(Category::RMIPG));
  EXPECT_FALSE(v.in(Category::MBPG));
  EXPECT_EQ(v.witnesses.at(Predicate::VertexBijective).summary, "codomain vertex b is not hit");
}

TEST(Morphism, RegularityExamples) {
  EXPECT_TRUE(is_regular(*builtin::morphism("edge_to_line3")).regular);
  EXPECT_TRUE(is_regular(*builtin::morphism("loop_to_point")).regular);
  auto branch = is_regular(*builtin::morphism("branch_map"));
  EXPECT_FALSE(branch.regular);
  ASSERT_TRUE(branch.witness);
  EXPECT_EQ(branch.witness->summary, "at vertex v: image set misses the branch x2 y1");
  auto star = is_regular(*builtin::morphism("star_into_loop"));
  EXPECT_FALSE(star.regular);
  EXPECT_EQ(star.witness->summary, "at vertex v: image set misses the branch u");
}

TEST(Morphism, ExtendedLiftOfMonotoneMapNeedNotBeMonotone) {
  auto f = *builtin::morphism("pair_to_loop_exit");
  EXPECT_FALSE(monotonicity_violation(f));
  auto w = monotonicity_violation(extended_lift(f));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->summary, "f(e1*) = g* is a prefix of f(e2*) = g* e*");
}

TEST(MorphismProperty, RegularityMatchesDefinition) {
  std::size_t regular = 0, total = 0;
  auto graphs = testkit::small_graphs(3, 3);
  for (const auto& g : graphs)
    for (const auto& h : graphs)
      for (const auto& f : testkit::mipg_homs(g, h, 2)) {
        bool got = is_regular(f).regular;
        ASSERT_EQ(got, regular_by_definition(f)) << g->vertex_count() << " -> " << h->vertex_count();
        regular += got;
        ++total;
      }
  EXPECT_GT(regular, 0u);
  EXPECT_GT(total, regular);
}

TEST(MorphismProperty, RegularMapsKeepRegularVertices) {
  auto graphs = testkit::small_graphs(3, 3);
  for (const auto& g : graphs)
    for (const auto& h : graphs)
      for (const auto& f : testkit::mipg_homs(g, h, 2)) {
        if (!is_regular(f).regular) continue;
        for (auto v : regular_vertices(*g)) {
          if (is_reg0_vertex(*g, v)) continue;
          ASSERT_TRUE(is_regular_vertex(*h, f(v)));
          ASSERT_FALSE(is_reg0_vertex(*h, f(v)));
        }
      }
}

TEST(Morphism, ParseCategory) {
  EXPECT_EQ(parse_category("RMIPG"), Category::RMIPG);
  EXPECT_EQ(parse_category("MBPG"), Category::MBPG);
  EXPECT_FALSE(parse_category("XYZ"));
}
