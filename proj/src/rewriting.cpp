#include <algorithm>
#include <cassert>

#include "pathalg/algebra.hpp"
#include "pathalg/error.hpp"

namespace pathalg {

std::vector<Letter> path_letters(const Path& p) {
  if (p.is_vertex()) return {Letter::vertex(p.source())};
  std::vector<Letter> out;
  for (auto e : p.edges()) out.push_back(Letter::edge(e));
  return out;
}

std::vector<Letter> ghost_letters(const Path& p) {
  if (p.is_vertex()) return {Letter::vertex(p.source())};
  std::vector<Letter> out;
  auto edges = p.edges();
  for (auto it = edges.rbegin(); it != edges.rend(); ++it) out.push_back(Letter::ghost(*it));
  return out;
}

std::string format_word(const Graph& g, const GeneratorWord& w) {
  std::string out;
  if (w.coefficient != 1) out = format_scalar(w.coefficient);
  for (const auto& l : w.letters) {
    if (!out.empty()) out += ' ';
    switch (l.kind) {
      case Letter::Kind::Vertex: out += g.name(Vertex{l.index}); break;
      case Letter::Kind::Edge: out += g.name(Edge{l.index}); break;
      case Letter::Kind::Ghost: out += g.name(Edge{l.index}) + "*"; break;
    }
  }
  return out.empty() ? "1" : out;
}

namespace {

using Kind = Letter::Kind;

// Endpoints of a letter viewed as an edge of the extended graph.
Vertex letter_source(const Graph& g, const Letter& l) {
  switch (l.kind) {
    case Kind::Vertex: return Vertex{l.index};
    case Kind::Edge: return g.source(Edge{l.index});
    case Kind::Ghost: return g.target(Edge{l.index});
  }
  return {};
}

Vertex letter_target(const Graph& g, const Letter& l) {
  switch (l.kind) {
    case Kind::Vertex: return Vertex{l.index};
    case Kind::Edge: return g.target(Edge{l.index});
    case Kind::Ghost: return g.source(Edge{l.index});
  }
  return {};
}

bool is_redex(const AlgebraContext& ctx, const Letter& a, const Letter& b) {
  const Graph& g = ctx.graph();
  if (a.kind == Kind::Vertex || b.kind == Kind::Vertex) return true;
  if (letter_target(g, a) != letter_source(g, b)) return true;
  if (a.kind == Kind::Ghost && b.kind == Kind::Edge) return true;
  if (a.kind == Kind::Edge && b.kind == Kind::Ghost && a.index == b.index) {
    Edge e{a.index};
    return ctx.special_edge(g.source(e)) == e;
  }
  return false;
}

struct Pending {
  Scalar coefficient;
  std::vector<Letter> letters;
};

// Replaces letters [i, i+2) of `w` and pushes the resulting words.
void rewrite_at(const AlgebraContext& ctx, const Pending& w, std::size_t i, std::vector<Pending>& out) {
  const Graph& g = ctx.graph();
  const Letter a = w.letters[i], b = w.letters[i + 1];
  auto splice = [&](std::vector<Letter> middle, const Scalar& c) {
    Pending p{w.coefficient * c, {}};
    p.letters.reserve(w.letters.size() + middle.size());
    p.letters.insert(p.letters.end(), w.letters.begin(), w.letters.begin() + static_cast<std::ptrdiff_t>(i));
    p.letters.insert(p.letters.end(), middle.begin(), middle.end());
    p.letters.insert(p.letters.end(), w.letters.begin() + static_cast<std::ptrdiff_t>(i + 2), w.letters.end());
    out.push_back(std::move(p));
  };

  if (letter_target(g, a) != letter_source(g, b)) return;  // mismatched adjacency: 0
  if (a.kind == Kind::Vertex) return splice({b}, 1);
  if (b.kind == Kind::Vertex) return splice({a}, 1);
  if (a.kind == Kind::Ghost && b.kind == Kind::Edge) {
    if (a.index == b.index) splice({Letter::vertex(g.target(Edge{a.index}))}, 1);
    return;
  }
  // S_γ S_γ* at a vertex of the relation set.
  Edge gamma{a.index};
  Vertex w0 = g.source(gamma);
  splice({Letter::vertex(w0)}, 1);
  for (auto e : g.out_edges(w0))
    if (e != gamma) splice({Letter::edge(e), Letter::ghost(e)}, -1);
}

// Reads an irreducible word E…E G…G (or a lone vertex) as a monomial.
Monomial as_monomial(const Graph& g, const std::vector<Letter>& letters) {
  if (letters.size() == 1 && letters[0].kind == Kind::Vertex) {
    Vertex v{letters[0].index};
    return {Path::vertex(v), Path::vertex(v)};
  }
  std::vector<Edge> alpha, beta;
  for (const auto& l : letters) (l.kind == Kind::Edge ? alpha : beta).push_back(Edge{l.index});
  std::reverse(beta.begin(), beta.end());
  Path a = alpha.empty() ? Path() : g.make_path(alpha);
  Path b = beta.empty() ? Path() : g.make_path(beta);
  if (alpha.empty()) a = Path::vertex(b.target());
  if (beta.empty()) b = Path::vertex(a.target());
  return {std::move(a), std::move(b)};
}

}  // namespace

AlgebraElement normal_form(const ContextPtr& ctx, const GeneratorWord& w, const RedexChooser& choose) {
  const Graph& g = ctx->graph();
  for (const auto& l : w.letters) {
    bool in_range = l.kind == Kind::Vertex ? l.index < g.vertex_count() : l.index < g.edge_count();
    if (!in_range) throw Error(ErrorCode::UnknownIdentifier, "letter outside the context graph");
    if (l.kind == Kind::Ghost && !ctx->allows_star())
      throw Error(ErrorCode::StarInPathMode, "ghost letter " + g.name(Edge{l.index}) + "* in the path algebra");
  }

  AlgebraElement result(ctx);
  if (w.coefficient == 0) return result;
  if (w.letters.empty()) return scalar_mul(w.coefficient, AlgebraElement::unit(ctx));

  TermBuilder terms(ctx);
  std::vector<Pending> stack{{w.coefficient, w.letters}};
  std::vector<std::size_t> redexes;
  while (!stack.empty()) {
    Pending cur = std::move(stack.back());
    stack.pop_back();
    if (cur.coefficient == 0) continue;
    if (cur.letters.empty()) {
      result += scalar_mul(cur.coefficient, AlgebraElement::unit(ctx));
      continue;
    }
    redexes.clear();
    for (std::size_t i = 0; i + 1 < cur.letters.size(); ++i)
      if (is_redex(*ctx, cur.letters[i], cur.letters[i + 1])) redexes.push_back(i);
    if (redexes.empty()) {
      Monomial m = as_monomial(g, cur.letters);
      terms.add(std::move(m.alpha), std::move(m.beta), cur.coefficient);
      continue;
    }
    std::size_t pick = choose ? choose(redexes.size()) : 0;
    assert(pick < redexes.size());
    rewrite_at(*ctx, cur, redexes[pick], stack);
  }
  result += std::move(terms).build();
  return result;
}

}  // namespace pathalg
