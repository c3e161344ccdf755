#include "pathalg/algebra.hpp"

#include <algorithm>

#include "pathalg/error.hpp"

namespace pathalg {

std::string format_scalar(const Scalar& c) { return c.get_str(); }

AlgebraContext::AlgebraContext(GraphPtr g, AlgebraMode mode, std::vector<Vertex> relation_set)
    : graph_(std::move(g)), mode_(mode), relation_set_(std::move(relation_set)) {
  graph_->require_finite_emitters("algebra context");
  std::sort(relation_set_.begin(), relation_set_.end());
  relation_set_.erase(std::unique(relation_set_.begin(), relation_set_.end()), relation_set_.end());
  special_.assign(graph_->vertex_count(), std::nullopt);
  for (auto v : relation_set_) {
    if (v.index >= graph_->vertex_count() || !is_regular_vertex(*graph_, v))
      throw Error(ErrorCode::ContextMismatch,
                  "relation set vertex " +
                      (v.index < graph_->vertex_count() ? graph_->name(v) : std::to_string(v.index)) +
                      " is not regular");
    special_[v.index] = graph_->out_edges(v).front();
  }
}

ContextPtr AlgebraContext::path(GraphPtr g) {
  return ContextPtr(new AlgebraContext(std::move(g), AlgebraMode::Path, {}));
}

ContextPtr AlgebraContext::cohn(GraphPtr g) {
  return ContextPtr(new AlgebraContext(std::move(g), AlgebraMode::RelativeCohn, {}));
}

ContextPtr AlgebraContext::leavitt(GraphPtr g) {
  g->require_finite_emitters("leavitt");
  auto reg = regular_vertices(*g);
  return ContextPtr(new AlgebraContext(std::move(g), AlgebraMode::RelativeCohn, std::move(reg)));
}

ContextPtr AlgebraContext::relative_cohn(GraphPtr g, std::vector<Vertex> relation_set) {
  return ContextPtr(new AlgebraContext(std::move(g), AlgebraMode::RelativeCohn, std::move(relation_set)));
}

bool AlgebraContext::is_leavitt() const {
  return mode_ == AlgebraMode::RelativeCohn && relation_set_ == regular_vertices(*graph_);
}

std::string AlgebraContext::describe() const {
  if (mode_ == AlgebraMode::Path) return "path";
  if (is_leavitt() && !relation_set_.empty()) return "leavitt";
  if (relation_set_.empty()) return "cohn";
  std::string out = "relcohn[";
  for (std::size_t i = 0; i < relation_set_.size(); ++i) {
    if (i) out += ',';
    out += graph_->name(relation_set_[i]);
  }
  return out + "]";
}

bool operator==(const AlgebraContext& a, const AlgebraContext& b) {
  return a.mode_ == b.mode_ && a.relation_set_ == b.relation_set_ &&
         (a.graph_ == b.graph_ || *a.graph_ == *b.graph_);
}

bool same_context(const ContextPtr& a, const ContextPtr& b) { return a == b || *a == *b; }

namespace {

void require_same(const AlgebraElement& a, const AlgebraElement& b) {
  if (!same_context(a.context_ptr(), b.context_ptr()))
    throw Error(ErrorCode::ContextMismatch, "operands live in different algebras (" + a.context().describe() +
                                                " vs " + b.context().describe() + ")");
}

void accumulate(TermMap& terms, Monomial m, const Scalar& c) {
  auto [it, inserted] = terms.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

// Product of two monomials in a star context, or nullopt when it vanishes:
// S_β* S_γ is S_γ' if γ = βγ', S_β'* if β = γβ', and 0 otherwise.
std::optional<Monomial> monomial_product(const Graph& g, const Monomial& a, const Monomial& b) {
  if (prefix_leq(a.beta, b.alpha)) return Monomial{a.alpha * g.suffix(b.alpha, a.beta.length()), b.beta};
  if (prefix_leq(b.alpha, a.beta)) return Monomial{a.alpha, b.beta * g.suffix(a.beta, b.alpha.length())};
  return std::nullopt;
}

}  // namespace

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = (a.alpha.length() + a.beta.length()) <=> (b.alpha.length() + b.beta.length()); c != 0) return c;
  if (auto c = a.alpha <=> b.alpha; c != 0) return c;
  return a.beta <=> b.beta;
}

void TermBuilder::add(Path alpha, Path beta, const Scalar& c) {
  if (c == 0) return;
  const Graph& g = ctx_->graph();
  if (alpha.target() != beta.target())
    throw Error(ErrorCode::InvalidPath, "monomial " + g.format(alpha) + " / " + g.format(beta) +
                                            " has mismatched targets");
  if (!ctx_->allows_star() && !beta.is_vertex())
    throw Error(ErrorCode::StarInPathMode, "ghost letters are not available in the path algebra");

  // Tail reduction. The correction terms (α₁e, β₁e) end in a non-special edge
  // of w, so only the shortened monomial can need another step.
  while (!alpha.is_vertex() && !beta.is_vertex() && alpha.last_edge() == beta.last_edge()) {
    Edge gamma = alpha.last_edge();
    Vertex w = g.source(gamma);
    if (ctx_->special_edge(w) != gamma) break;
    Path a1 = g.drop_last(alpha), b1 = g.drop_last(beta);
    for (auto e : g.out_edges(w)) {
      if (e == gamma) continue;
      accumulate(terms_, Monomial{a1 * g.edge_path(e), b1 * g.edge_path(e)}, -c);
    }
    alpha = std::move(a1);
    beta = std::move(b1);
  }
  accumulate(terms_, Monomial{std::move(alpha), std::move(beta)}, c);
}

AlgebraElement TermBuilder::build() && { return AlgebraElement(std::move(ctx_), std::move(terms_)); }

AlgebraElement::AlgebraElement(ContextPtr ctx) : ctx_(std::move(ctx)) {}

AlgebraElement AlgebraElement::monomial(ContextPtr ctx, const Path& alpha, const Path& beta, const Scalar& c) {
  TermBuilder b(std::move(ctx));
  b.add(alpha, beta, c);
  return std::move(b).build();
}

AlgebraElement AlgebraElement::vertex(ContextPtr ctx, Vertex v) {
  return monomial(ctx, Path::vertex(v), Path::vertex(v));
}

AlgebraElement AlgebraElement::edge(ContextPtr ctx, Edge e) {
  Path p = ctx->graph().edge_path(e);
  return monomial(ctx, p, Path::vertex(p.target()));
}

AlgebraElement AlgebraElement::ghost(ContextPtr ctx, Edge e) {
  Path p = ctx->graph().edge_path(e);
  return monomial(ctx, Path::vertex(p.target()), p);
}

AlgebraElement AlgebraElement::path(ContextPtr ctx, const Path& p) {
  return monomial(ctx, p, Path::vertex(p.target()));
}

AlgebraElement AlgebraElement::unit(ContextPtr ctx) {
  TermBuilder b(ctx);
  for (auto v : ctx->graph().vertices()) b.add(Path::vertex(v), Path::vertex(v), 1);
  return std::move(b).build();
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  const Graph& g = ctx_->graph();
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    Scalar mag = abs(c);
    if (mag != 1) out += format_scalar(mag) + " ";
    if (m.alpha.is_vertex() && m.beta.is_vertex()) {
      out += g.name(m.alpha.source());
      continue;
    }
    std::string word;
    for (auto e : m.alpha.edges()) {
      if (!word.empty()) word += ' ';
      word += g.name(e);
    }
    auto be = m.beta.edges();
    for (auto it = be.rbegin(); it != be.rend(); ++it) {
      if (!word.empty()) word += ' ';
      word += g.name(*it) + "*";
    }
    out += word;
  }
  return out;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
  require_same(*this, rhs);
  for (const auto& [m, c] : rhs.terms_) accumulate(terms_, m, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs) {
  require_same(*this, rhs);
  for (const auto& [m, c] : rhs.terms_) accumulate(terms_, m, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return same_context(a.ctx_, b.ctx_) && a.terms_ == b.terms_;
}

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out = a;
  out += b;
  return out;
}

AlgebraElement scalar_mul(const Scalar& c, const AlgebraElement& a) {
  AlgebraElement out = a;
  out *= c;
  return out;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  require_same(a, b);
  const Graph& g = a.context().graph();
  TermBuilder out(a.context_ptr());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms())
      if (auto m = monomial_product(g, ma, mb)) out.add(std::move(m->alpha), std::move(m->beta), ca * cb);
  return std::move(out).build();
}

AlgebraElement star(const AlgebraElement& a) {
  if (!a.context().allows_star())
    throw Error(ErrorCode::StarInPathMode, "the path algebra has no involution");
  TermBuilder out(a.context_ptr());
  for (const auto& [m, c] : a.terms()) out.add(m.beta, m.alpha, c);
  return std::move(out).build();
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) { return add(a, b); }
AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out = a;
  out -= b;
  return out;
}
AlgebraElement operator-(const AlgebraElement& a) { return scalar_mul(-1, a); }
AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) { return multiply(a, b); }
AlgebraElement operator*(const Scalar& c, const AlgebraElement& a) { return scalar_mul(c, a); }

bool is_normal(const AlgebraElement& a) {
  const auto& ctx = a.context();
  for (const auto& [m, c] : a.terms()) {
    if (c == 0) return false;
    if (m.alpha.is_vertex() || m.beta.is_vertex()) continue;
    Edge e = m.alpha.last_edge();
    if (e == m.beta.last_edge() && ctx.special_edge(ctx.graph().source(e)) == e) return false;
  }
  return true;
}

}  // namespace pathalg
