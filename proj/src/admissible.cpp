#include "pathalg/admissible.hpp"

#include <algorithm>

#include "pathalg/error.hpp"

namespace pathalg {

GraphInclusion::GraphInclusion(GraphPtr sub, GraphPtr amb, std::vector<Vertex> vmap, std::vector<Edge> emap)
    : sub_(std::move(sub)), amb_(std::move(amb)), vmap_(std::move(vmap)), emap_(std::move(emap)) {
  if (!sub_ || !amb_) throw Error(ErrorCode::InvalidInclusion, "missing graph");
  if (sub_->has_infinite_emitters())
    throw Error(ErrorCode::InvalidInclusion, "the included graph may not carry infinite emitters");
  if (vmap_.size() != sub_->vertex_count() || emap_.size() != sub_->edge_count())
    throw Error(ErrorCode::InvalidInclusion, "maps do not cover the included graph");
  vpre_.assign(amb_->vertex_count(), std::nullopt);
  epre_.assign(amb_->edge_count(), std::nullopt);
  for (std::uint32_t i = 0; i < vmap_.size(); ++i) {
    Vertex v = vmap_[i];
    if (v.index >= amb_->vertex_count())
      throw Error(ErrorCode::InvalidInclusion, "vertex " + sub_->name(Vertex{i}) + " maps outside the ambient graph");
    if (vpre_[v.index])
      throw Error(ErrorCode::InvalidInclusion, "vertex map is not injective at " + amb_->name(v));
    vpre_[v.index] = i;
  }
  for (std::uint32_t i = 0; i < emap_.size(); ++i) {
    Edge e = emap_[i];
    Edge x{i};
    if (e.index >= amb_->edge_count())
      throw Error(ErrorCode::InvalidInclusion, "edge " + sub_->name(x) + " maps outside the ambient graph");
    if (epre_[e.index]) throw Error(ErrorCode::InvalidInclusion, "edge map is not injective at " + amb_->name(e));
    epre_[e.index] = i;
    if (amb_->source(e) != vmap_[sub_->source(x).index] || amb_->target(e) != vmap_[sub_->target(x).index])
      throw Error(ErrorCode::InvalidInclusion, "edge " + sub_->name(x) + " maps to " + amb_->name(e) +
                                                   ", whose endpoints do not match");
  }
}

GraphInclusion GraphInclusion::identity(GraphPtr g) {
  auto vs = g->vertices();
  auto es = g->edge_list();
  return GraphInclusion(g, g, std::move(vs), std::move(es));
}

Path GraphInclusion::operator()(const Path& p) const {
  if (p.is_vertex()) return Path::vertex(vmap_[p.source().index]);
  std::vector<Edge> edges;
  for (auto e : p.edges()) edges.push_back(emap_[e.index]);
  return amb_->make_path(std::move(edges));
}

std::optional<Vertex> GraphInclusion::preimage(Vertex v) const {
  if (auto i = vpre_[v.index]) return Vertex{*i};
  return std::nullopt;
}

std::optional<Edge> GraphInclusion::preimage(Edge e) const {
  if (auto i = epre_[e.index]) return Edge{*i};
  return std::nullopt;
}

std::optional<Path> GraphInclusion::preimage(const Path& p) const {
  if (p.is_vertex()) {
    if (auto v = preimage(p.source())) return Path::vertex(*v);
    return std::nullopt;
  }
  std::vector<Edge> edges;
  for (auto e : p.edges()) {
    auto x = preimage(e);
    if (!x) return std::nullopt;
    edges.push_back(*x);
  }
  return sub_->make_path(std::move(edges));
}

std::vector<Vertex> GraphInclusion::image_vertices() const {
  std::vector<Vertex> out;
  for (auto v : amb_->vertices())
    if (in_image(v)) out.push_back(v);
  return out;
}

std::vector<Vertex> GraphInclusion::complement() const {
  std::vector<Vertex> out;
  for (auto v : amb_->vertices())
    if (!in_image(v)) out.push_back(v);
  return out;
}

PathHom GraphInclusion::as_path_hom() const {
  std::vector<Path> emap;
  for (auto e : emap_) emap.push_back(amb_->edge_path(e));
  return PathHom(sub_, amb_, vmap_, std::move(emap));
}

namespace {

std::vector<bool> membership(const Graph& g, const std::vector<Vertex>& H) {
  std::vector<bool> in(g.vertex_count(), false);
  for (auto v : H) in.at(v.index) = true;
  return in;
}

// Declared targets of the unlisted edges of an infinite emitter.
std::vector<Vertex> unlisted_or_throw(const Graph& g, Vertex v, std::string_view operation) {
  auto targets = g.unlisted_targets(v);
  if (!targets)
    throw Error(ErrorCode::AmbiguousInfiniteEmitter,
                std::string(operation) + " depends on where the unlisted edges of " + g.name(v) +
                    " land; declare unlisted_targets");
  return *targets;
}

}  // namespace

SetVerdict is_saturated(const Graph& g, const std::vector<Vertex>& H) {
  auto in = membership(g, H);
  for (auto v : g.vertices()) {
    if (in[v.index] || !is_regular_vertex(g, v)) continue;
    auto out = g.out_edges(v);
    if (std::all_of(out.begin(), out.end(), [&](Edge e) { return in[g.target(e).index]; }))
      return {false, v, std::nullopt, "regular vertex " + g.name(v) + " outside the set emits only into it"};
  }
  return {};
}

SetVerdict is_hereditary(const Graph& g, const std::vector<Vertex>& H) {
  auto in = membership(g, H);
  for (auto e : g.edge_list())
    if (in[g.source(e).index] && !in[g.target(e).index])
      return {false, std::nullopt, e, "edge " + g.name(e) + " leaves the set"};
  for (auto v : H) {
    if (!g.is_infinite_emitter(v)) continue;
    for (auto w : unlisted_or_throw(g, v, "heredity"))
      if (!in[w.index])
        return {false, v, std::nullopt, "unlisted edges of " + g.name(v) + " reach " + g.name(w)};
  }
  return {};
}

AdmissibilityVerdict is_admissible(const GraphInclusion& inc) {
  const Graph& amb = inc.amb();
  AdmissibilityVerdict out;
  auto H = inc.complement();
  out.a1 = is_saturated(amb, H);

  for (auto e : amb.edge_list())
    if (inc.in_image(amb.target(e)) && !inc.in_image(e)) {
      out.a2 = {false, std::nullopt, e,
                "edge " + amb.name(e) + " enters the image at " + amb.name(amb.target(e)) + " but is not in it"};
      break;
    }
  if (out.a2.holds)
    for (auto v : amb.vertices()) {
      if (!amb.is_infinite_emitter(v)) continue;
      for (auto w : unlisted_or_throw(amb, v, "(A2)"))
        if (inc.in_image(w)) {
          out.a2 = {false, v, std::nullopt, "unlisted edges of " + amb.name(v) + " enter the image at " + amb.name(w)};
          break;
        }
      if (!out.a2.holds) break;
    }

  out.hereditary = is_hereditary(amb, H);
  return out;
}

std::vector<Vertex> breaking_vertices(const Graph& g, const std::vector<Vertex>& H) {
  auto in = membership(g, H);
  std::vector<Vertex> out;
  for (auto v : g.vertices()) {
    if (in[v.index] || !g.is_infinite_emitter(v)) continue;
    for (auto w : unlisted_or_throw(g, v, "breaking-vertex test"))
      if (!in[w.index])
        throw Error(ErrorCode::AmbiguousInfiniteEmitter,
                    "unlisted edges of " + g.name(v) + " may reach " + g.name(w) +
                        " outside the set, so their number there is unknown");
    auto edges = g.out_edges(v);
    if (std::any_of(edges.begin(), edges.end(), [&](Edge e) { return !in[g.target(e).index]; })) out.push_back(v);
  }
  return out;
}

namespace {

void require_admissible(const GraphInclusion& inc) {
  auto verdict = is_admissible(inc);
  if (!verdict.a1.holds) throw Error(ErrorCode::NotAdmissible, "(A1) fails: " + verdict.a1.summary);
  if (!verdict.a2.holds) throw Error(ErrorCode::NotAdmissible, "(A2) fails: " + verdict.a2.summary);
}

}  // namespace

QuotientMap::QuotientMap(GraphInclusion inc) : inc_(std::move(inc)) {
  inc_.amb().require_finite_emitters("quotient map");
  require_admissible(inc_);
  source_ = AlgebraContext::leavitt(inc_.amb_ptr());
  target_ = AlgebraContext::leavitt(inc_.sub_ptr());
}

AlgebraElement QuotientMap::operator()(const AlgebraElement& a) const {
  if (!same_context(a.context_ptr(), source_))
    throw Error(ErrorCode::ContextMismatch, "quotient map expects an element of the Leavitt algebra of the ambient graph");
  TermBuilder out(target_);
  for (const auto& [m, c] : a.terms()) {
    auto alpha = inc_.preimage(m.alpha);
    auto beta = inc_.preimage(m.beta);
    if (alpha && beta) out.add(std::move(*alpha), std::move(*beta), c);
  }
  return std::move(out).build();
}

AlgebraElement quotient_map(const GraphInclusion& inc, const AlgebraElement& a) { return QuotientMap(inc)(a); }

KernelGenerators kernel_generators(const GraphInclusion& inc) {
  require_admissible(inc);
  KernelGenerators out;
  auto H = inc.complement();
  out.vertex_projections = H;
  for (auto w : breaking_vertices(inc.amb(), H)) {
    BreakingCorrection c{w, {}};
    Vertex x = *inc.preimage(w);
    for (auto e : inc.sub().out_edges(x)) c.edges.push_back(inc(e));
    out.breaking_corrections.push_back(std::move(c));
  }
  return out;
}

}  // namespace pathalg
