#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pathalg/builtins.hpp"
#include "pathalg/error.hpp"
#include "pathalg/expression.hpp"
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

std::string eval(const ContextPtr& ctx, std::string_view text) { return parse_expression(ctx, text).to_string(); }

std::vector<ContextPtr> star_contexts() {
  return {AlgebraContext::leavitt(builtin::graph("loop")),   AlgebraContext::cohn(builtin::graph("loop")),
          AlgebraContext::leavitt(builtin::graph("rose2")),  AlgebraContext::leavitt(builtin::graph("rp2_E1")),
          AlgebraContext::cohn(builtin::graph("rp2_E2")),    AlgebraContext::leavitt(builtin::graph("branching")),
          AlgebraContext::relative_cohn(builtin::graph("rp2_E1"), {Vertex{0}})};
}

}  // namespace

TEST(Algebra, LeavittLoopExamples) {
  auto ctx = AlgebraContext::leavitt(builtin::graph("loop"));
  EXPECT_EQ(eval(ctx, "e* e e"), "e");
  EXPECT_EQ(eval(ctx, "e e* - v"), "0");
  EXPECT_EQ(eval(ctx, "e e*"), "v");
  EXPECT_EQ(eval(ctx, "e* e* e e"), "v");
}

TEST(Algebra, CohnKeepsRangeProjection) {
  auto ctx = AlgebraContext::cohn(builtin::graph("loop"));
  EXPECT_EQ(eval(ctx, "e e*"), "e e*");
  EXPECT_EQ(eval(ctx, "e* e"), "v");
  EXPECT_EQ(eval(ctx, "1/2 e e* + 1/2 e e*"), "e e*");
}

TEST(Algebra, SpecialEdgeIsFirstOutEdge) {
  auto g = builtin::graph("rp2_E2");
  auto ctx = AlgebraContext::leavitt(g);
  EXPECT_EQ(ctx->special_edge(g->vertex_of("v")), g->edge_of("e"));
  EXPECT_FALSE(ctx->special_edge(g->vertex_of("w")));
  // e e* is rewritten through the relation at v; f f* is already normal.
  EXPECT_EQ(eval(ctx, "e e*"), "v - f f*");
  EXPECT_EQ(eval(ctx, "f f*"), "f f*");
}

TEST(Algebra, PrintsTermsInFixedOrder) {
  auto ctx = AlgebraContext::leavitt(builtin::graph("loop"));
  EXPECT_EQ(eval(ctx, "e* e e + 2/3 e e* - v"), "-1/3 v + e");
  EXPECT_EQ(eval(ctx, "-e"), "-e");
  EXPECT_EQ(eval(ctx, "e e - 3 e*"), "-3 e* + e e");
}

TEST(Algebra, PathModeHasNoStar) {
  auto ctx = AlgebraContext::path(builtin::graph("loop"));
  EXPECT_EQ(eval(ctx, "e e"), "e e");
  EXPECT_EQ(code_of([&] { parse_expression(ctx, "e*"); }), ErrorCode::StarInPathMode);
  EXPECT_EQ(code_of([&] { star(AlgebraElement::edge(ctx, Edge{0})); }), ErrorCode::StarInPathMode);
}

TEST(Algebra, RelativeCohnNeedsRegularVertices) {
  auto g = builtin::graph("rp2_E1");
  EXPECT_EQ(code_of([&] { AlgebraContext::relative_cohn(g, {g->vertex_of("w")}); }), ErrorCode::ContextMismatch);
  // X = reg(E) is the Leavitt algebra.
  EXPECT_TRUE(AlgebraContext::relative_cohn(g, {g->vertex_of("v")})->is_leavitt());
  auto line = builtin::graph("line3");
  EXPECT_EQ(AlgebraContext::relative_cohn(line, {line->vertex_of("a")})->describe(), "relcohn[a]");
}

TEST(Algebra, ContextsDoNotMix) {
  auto a = AlgebraElement::vertex(AlgebraContext::leavitt(builtin::graph("loop")), Vertex{0});
  auto b = AlgebraElement::vertex(AlgebraContext::cohn(builtin::graph("loop")), Vertex{0});
  EXPECT_EQ(code_of([&] { a + b; }), ErrorCode::ContextMismatch);
}

TEST(Algebra, EmptyGraphGivesZeroAlgebra) {
  auto ctx = AlgebraContext::leavitt(make_graph(0, {}));
  EXPECT_TRUE(AlgebraElement::unit(ctx).is_zero());
  EXPECT_TRUE(normal_form(ctx, GeneratorWord{}).is_zero());
}

TEST(Algebra, UnitIsSumOfVertices) {
  auto ctx = AlgebraContext::leavitt(builtin::graph("line3"));
  auto one = AlgebraElement::unit(ctx);
  EXPECT_EQ(one.to_string(), "a + b + c");
  for (const auto& g : generators(ctx)) {
    EXPECT_EQ(one * g, g);
    EXPECT_EQ(g * one, g);
  }
}

TEST(Rewriting, IrreducibleWordsAreNormal) {
  auto ctx = AlgebraContext::cohn(builtin::graph("rp2_E2"));
  const Graph& g = ctx->graph();
  GeneratorWord w{1, {Letter::edge(g.edge_of("e")), Letter::edge(g.edge_of("f")), Letter::ghost(g.edge_of("f"))}};
  EXPECT_EQ(format_word(g, w), "e f f*");
  EXPECT_EQ(normal_form(ctx, w).to_string(), "e f f*");
}

TEST(Rewriting, AdjacencyMismatchIsZero) {
  auto ctx = AlgebraContext::leavitt(builtin::graph("line3"));
  EXPECT_EQ(eval(ctx, "y x"), "0");
  EXPECT_EQ(eval(ctx, "a b"), "0");
  EXPECT_EQ(eval(ctx, "x* y"), "0");
  EXPECT_EQ(eval(ctx, "a x b y c"), "x y");
}

TEST(RewritingProperty, MatrixOracleForLines) {
  Rng rng(31);
  for (std::size_t n = 2; n <= 5; ++n) {
    auto ctx = AlgebraContext::leavitt(builtin::line(n));
    for (int trial = 0; trial < 200; ++trial) {
      auto w = random_word(*ctx, 6, rng);
      ASSERT_EQ(matrix_of_element(n, normal_form(ctx, w)), matrix_of_word(n, w)) << format_word(ctx->graph(), w);
    }
  }
}

TEST(RewritingProperty, LaurentOracleForLoop) {
  Rng rng(32);
  auto ctx = AlgebraContext::leavitt(builtin::graph("loop"));
  for (int trial = 0; trial < 300; ++trial) {
    auto w = random_word(*ctx, 8, rng);
    ASSERT_EQ(laurent_of_element(normal_form(ctx, w)), laurent_of_word(w)) << format_word(ctx->graph(), w);
  }
}

TEST(RewritingProperty, ReductionOrderDoesNotMatter) {
  Rng rng(33);
  auto chooser = [&rng](std::size_t count) { return std::uniform_int_distribution<std::size_t>(0, count - 1)(rng); };
  for (const auto& ctx : star_contexts())
    for (int trial = 0; trial < 200; ++trial) {
      auto w = random_word(*ctx, 8, rng);
      ASSERT_EQ(normal_form(ctx, w, chooser), normal_form(ctx, w)) << format_word(ctx->graph(), w);
    }
}

TEST(AlgebraProperty, NormalFormsAvoidSpecialTails) {
  Rng rng(34);
  for (const auto& ctx : star_contexts())
    for (int trial = 0; trial < 200; ++trial) {
      auto a = random_element(ctx, 3, 6, rng);
      ASSERT_TRUE(is_normal(a));
      for (const auto& [m, c] : a.terms()) {
        ASSERT_EQ(m.alpha.target(), m.beta.target());
        if (m.alpha.is_vertex() || m.beta.is_vertex()) continue;
        if (m.alpha.last_edge() != m.beta.last_edge()) continue;
        auto sp = ctx->special_edge(ctx->graph().source(m.alpha.last_edge()));
        ASSERT_FALSE(sp && *sp == m.alpha.last_edge());
      }
    }
}

TEST(AlgebraProperty, CohnMonomialsAreAllNormal) {
  for (const char* name : {"rose2", "rp2_E1", "branching"}) {
    auto ctx = AlgebraContext::cohn(builtin::graph(name));
    auto ps = paths_up_to(ctx->graph(), 3);
    for (const auto& a : ps)
      for (const auto& b : ps) {
        if (a.target() != b.target()) continue;
        auto m = AlgebraElement::monomial(ctx, a, b);
        ASSERT_EQ(m.terms().size(), 1u);
        ASSERT_EQ(m.terms().begin()->first.alpha, a);
        ASSERT_EQ(m.terms().begin()->first.beta, b);
      }
  }
}

TEST(AlgebraProperty, RingAndStarAxioms) {
  Rng rng(35);
  std::uniform_int_distribution<int> num(-4, 4);
  for (const auto& ctx : star_contexts())
    for (int trial = 0; trial < 60; ++trial) {
      auto a = random_element(ctx, 3, 4, rng), b = random_element(ctx, 3, 4, rng), c = random_element(ctx, 3, 4, rng);
      Scalar k(num(rng));
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a * (b + c), a * b + a * c);
      ASSERT_EQ((a + b) * c, a * c + b * c);
      ASSERT_EQ(a + b, b + a);
      ASSERT_TRUE((a - a).is_zero());
      ASSERT_EQ(k * (a * b), (k * a) * b);
      ASSERT_EQ(star(star(a)), a);
      ASSERT_EQ(star(a * b), star(b) * star(a));
      ASSERT_EQ(star(a + b), star(a) + star(b));
    }
}

TEST(AlgebraProperty, PrintedFormsParseBack) {
  Rng rng(36);
  for (const auto& ctx : star_contexts())
    for (int trial = 0; trial < 100; ++trial) {
      auto a = random_element(ctx, 4, 6, rng);
      if (a.is_zero()) continue;  // "0" has no factor, so it is not an expression
      ASSERT_EQ(parse_expression(ctx, a.to_string()), a) << a.to_string();
    }
}

namespace {

// Random well-formed expression text together with its value computed
// directly from the algebra operations.
struct Generated {
  std::string text;
  AlgebraElement value;
};

Generated gen_expr(const ContextPtr& ctx, Rng& rng, int depth);

Generated gen_factor(const ContextPtr& ctx, Rng& rng, int depth) {
  const Graph& g = ctx->graph();
  std::uniform_int_distribution<int> coin(0, 5);
  if (depth > 0 && coin(rng) == 0) {
    auto inner = gen_expr(ctx, rng, depth - 1);
    return {"(" + inner.text + ")", inner.value};
  }
  std::size_t nv = g.vertex_count(), ne = g.edge_count();
  std::size_t k = std::uniform_int_distribution<std::size_t>(0, nv + ne - 1)(rng);
  bool starred = coin(rng) < 2;
  if (k < nv) {
    Vertex v{std::uint32_t(k)};
    return {g.name(v) + (starred ? "*" : ""), AlgebraElement::vertex(ctx, v)};
  }
  Edge e{std::uint32_t(k - nv)};
  return {g.name(e) + (starred ? "*" : ""), starred ? AlgebraElement::ghost(ctx, e) : AlgebraElement::edge(ctx, e)};
}

Generated gen_term(const ContextPtr& ctx, Rng& rng, int depth) {
  std::uniform_int_distribution<int> coin(0, 3), small(1, 5);
  std::string text;
  Scalar c = 1;
  if (coin(rng) == 0) {
    int p = small(rng), q = small(rng);
    c = Scalar(p, q);
    c.canonicalize();
    text = std::to_string(p) + (coin(rng) < 2 ? "/" + std::to_string(q) : "");
    if (text.find('/') == std::string::npos) c = p;
    text += coin(rng) < 2 ? " * " : " ";
  }
  auto value = AlgebraElement::unit(ctx);
  std::size_t n = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
  for (std::size_t i = 0; i < n; ++i) {
    auto f = gen_factor(ctx, rng, depth);
    text += (i ? " " : "") + f.text;
    value = value * f.value;
  }
  return {text, c * value};
}

Generated gen_expr(const ContextPtr& ctx, Rng& rng, int depth) {
  std::uniform_int_distribution<int> coin(0, 2);
  auto first = gen_term(ctx, rng, depth);
  Generated out = first;
  if (coin(rng) == 0) out = {"-" + first.text, -first.value};
  std::size_t n = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
  for (std::size_t i = 0; i < n; ++i) {
    auto t = gen_term(ctx, rng, depth);
    bool minus = coin(rng) == 0;
    out.text += (minus ? " - " : " + ") + t.text;
    out.value = minus ? out.value - t.value : out.value + t.value;
  }
  return out;
}

}  // namespace

TEST(ExpressionProperty, GrammarRoundTrip) {
  Rng rng(37);
  for (const auto& ctx : star_contexts())
    for (int trial = 0; trial < 200; ++trial) {
      auto g = gen_expr(ctx, rng, 2);
      ASSERT_EQ(parse_expression(ctx, g.text), g.value) << g.text;
    }
}

TEST(Expression, Errors) {
  auto ctx = AlgebraContext::leavitt(builtin::graph("loop"));
  EXPECT_EQ(code_of([&] { parse_expression(ctx, "e + q"); }), ErrorCode::UnknownIdentifier);
  EXPECT_EQ(code_of([&] { parse_expression(ctx, "e +"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([&] { parse_expression(ctx, "(e"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([&] { parse_expression(ctx, "1/0 e"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([&] { parse_expression(ctx, ""); }), ErrorCode::ParseError);
  try {
    parse_expression(ctx, "e e ) e");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("column 5"), std::string::npos) << e.what();
  }
}

TEST(Expression, ScalarOnlyTerm) {
  auto ctx = AlgebraContext::leavitt(builtin::graph("line3"));
  EXPECT_EQ(eval(ctx, "2 (a + b) - 2 b"), "2 a");
  EXPECT_EQ(eval(ctx, "3/6 * x x*"), "1/2 a");
}
