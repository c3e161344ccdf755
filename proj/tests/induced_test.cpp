#include <gtest/gtest.h>

#include <set>

#include "pathalg/builtins.hpp"
#include "pathalg/error.hpp"
#include "pathalg/expression.hpp"
#include "pathalg/induced.hpp"
#include "small_space.hpp"

using namespace pathalg;
using namespace pathalg::testkit;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::ParseError;
}

std::vector<InducedHom> sample_homs() {
  std::vector<InducedHom> out = {
      InducedHom::leavitt(builtin::rp2_phi()),          InducedHom::cohn(builtin::rp2_phi()),
      InducedHom::leavitt(builtin::line_to_cycle(3)),   InducedHom::leavitt(*builtin::morphism("edge_to_line3")),
      InducedHom::cohn(*builtin::morphism("loop_to_point")), InducedHom::leavitt(builtin::rp2_phi_res()),
      InducedHom::path(builtin::rp2_phi()),             InducedHom::path(*builtin::morphism("branch_map")),
  };
  // A handful of regular maps from the small space, including ones that
  // collapse a 0-regular loop.
  auto graphs = small_graphs(2, 2);
  std::size_t taken = 0;
  for (const auto& g : graphs)
    for (const auto& h : graphs)
      for (const auto& f : mipg_homs(g, h, 2))
        if (taken < 40 && is_regular(f).regular && ++taken % 3 == 0) out.push_back(InducedHom::leavitt(f));
  return out;
}

}  // namespace

TEST(Induced, ToeplitzEvaluation) {
  auto h = InducedHom::cohn(*builtin::morphism("loop_to_point"));
  auto se = AlgebraElement::edge(h.source(), Edge{0});
  EXPECT_EQ(h(se), AlgebraElement::unit(h.target()));
  EXPECT_EQ(h(star(se)), AlgebraElement::unit(h.target()));
  // The range projection of the isometry goes to 1 as well, so 1 - S S* dies.
  EXPECT_TRUE(h(AlgebraElement::unit(h.source()) - se * star(se)).is_zero());
}

TEST(Induced, PreconditionsAreChecked) {
  EXPECT_EQ(code_of([] { InducedHom::cohn(*builtin::morphism("rose2_nonmonotone")); }), ErrorCode::NotMonotone);
  EXPECT_EQ(code_of([] { InducedHom::leavitt(*builtin::morphism("branch_map")); }), ErrorCode::NotRegular);
  auto line = builtin::graph("line3"), point = builtin::graph("point");
  auto collapse = builtin::hom(line, point, {{"a", "v"}, {"b", "v"}, {"c", "v"}}, {{"x", "v"}, {"y", "v"}});
  EXPECT_EQ(code_of([&] { InducedHom::path(collapse); }), ErrorCode::NotVertexInjective);
  // Monotone but not regular is still fine for the Cohn algebra.
  EXPECT_NO_THROW(InducedHom::cohn(*builtin::morphism("branch_map")));
}

TEST(Induced, RelationWitnessForNonMonotoneMap) {
  auto report = verify_relations_preserved(*builtin::morphism("rose2_nonmonotone"), InducedKind::Cohn);
  EXPECT_FALSE(report.all_hold());
  std::map<std::string, std::string> images;
  for (const auto& r : report.relations) images[r.relation] = r.image;
  EXPECT_EQ(images.at("e2* e1"), "e");
  EXPECT_EQ(images.at("e1* e2"), "e*");
  EXPECT_EQ(images.at("e2* e2 - v"), "0");
}

TEST(Induced, ProjectivePlaneRelations) {
  auto report = verify_relations_preserved(builtin::rp2_phi(), InducedKind::Leavitt);
  EXPECT_TRUE(report.all_hold());
  EXPECT_EQ(report.relations.size(), 10u);
  EXPECT_FALSE(report.first_failure());
}

TEST(Induced, RelationsFailForNonRegularLeavittMap) {
  auto report = verify_relations_preserved(*builtin::morphism("star_into_loop"), InducedKind::Leavitt);
  ASSERT_FALSE(report.all_hold());
  EXPECT_EQ(report.first_failure()->relation, "f1 f1* + f2 f2* - v");
}

TEST(Induced, ImageWordSubstitutesPaths) {
  auto phi = builtin::rp2_phi();
  const Graph& g = phi.dom();
  GeneratorWord w{2, {Letter::edge(g.edge_of("s")), Letter::ghost(g.edge_of("t"))}};
  auto img = image_word(phi, w);
  EXPECT_EQ(format_word(phi.cod(), img), "2 e e f* e*");
  EXPECT_EQ(img.coefficient, 2);
}

TEST(Induced, LineIntoCycleIsInjectiveOnMatrixUnits) {
  auto h = InducedHom::leavitt(builtin::line_to_cycle(4));
  auto ps = paths_up_to(h.source()->graph(), 3);
  std::set<std::string> images;
  std::size_t units = 0;
  for (const auto& a : ps)
    for (const auto& b : ps)
      if (a.target() == b.target() && a.target().index == 3) {
        ++units;
        auto img = h(AlgebraElement::monomial(h.source(), a, b));
        ASSERT_EQ(img.terms().size(), 1u);
        images.insert(img.to_string());
      }
  EXPECT_EQ(units, 16u);
  EXPECT_EQ(images.size(), 16u);
}

TEST(InducedProperty, HomomorphismLaws) {
  Rng rng(41);
  for (const auto& h : sample_homs())
    for (int trial = 0; trial < 30; ++trial) {
      auto a = random_element(h.source(), 3, 5, rng), b = random_element(h.source(), 3, 5, rng);
      ASSERT_EQ(h(a * b), h(a) * h(b)) << h.source()->describe() << " " << a.to_string() << " | " << b.to_string();
      ASSERT_EQ(h(a + b), h(a) + h(b));
      if (h.source()->allows_star()) ASSERT_EQ(h(star(a)), star(h(a)));
    }
}

TEST(InducedProperty, UnitalOnVertexBijections) {
  for (const auto& h : sample_homs()) {
    if (!classify(h.morphism()).vertex_bijective_finite) continue;
    ASSERT_EQ(h(AlgebraElement::unit(h.source())), AlgebraElement::unit(h.target()));
  }
}

TEST(InducedProperty, Functoriality) {
  auto graphs = small_graphs(2, 2);
  std::size_t pairs = 0;
  for (const auto& a : graphs)
    for (const auto& b : graphs)
      for (const auto& f : mipg_homs(a, b, 2)) {
        if (!is_regular(f).regular) continue;
        for (const auto& c : graphs)
          for (const auto& g : mipg_homs(b, c, 2)) {
            if (!is_regular(g).regular) continue;
            auto hf = InducedHom::leavitt(f), hg = InducedHom::leavitt(g), hgf = InducedHom::leavitt(compose(g, f));
            for (const auto& x : generators(hf.source())) ASSERT_EQ(hgf(x), hg(hf(x)));
            ++pairs;
          }
      }
  EXPECT_GT(pairs, 100u);
}

TEST(InducedProperty, RegularMapsPreserveAllRelations) {
  auto graphs = small_graphs(3, 2);
  for (const auto& a : graphs)
    for (const auto& b : graphs)
      for (const auto& f : mipg_homs(a, b, 2)) {
        ASSERT_TRUE(verify_relations_preserved(f, InducedKind::Cohn).all_hold());
        if (is_regular(f).regular) ASSERT_TRUE(verify_relations_preserved(f, InducedKind::Leavitt).all_hold());
      }
}
