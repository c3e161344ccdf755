#include "pathalg/morphism.hpp"

#include <algorithm>
#include <set>

#include "pathalg/error.hpp"

namespace pathalg {

PathHom::PathHom(GraphPtr dom, GraphPtr cod, std::vector<Vertex> vmap, std::vector<Path> emap)
    : dom_(std::move(dom)), cod_(std::move(cod)), vmap_(std::move(vmap)), emap_(std::move(emap)) {
  if (!dom_ || !cod_) throw Error(ErrorCode::InvalidMorphism, "missing domain or codomain");
  if (vmap_.size() != dom_->vertex_count())
    throw Error(ErrorCode::InvalidMorphism, "vertex map does not cover the domain");
  if (emap_.size() != dom_->edge_count())
    throw Error(ErrorCode::InvalidMorphism, "edge map does not cover the domain");
  for (std::size_t i = 0; i < vmap_.size(); ++i)
    if (vmap_[i].index >= cod_->vertex_count())
      throw Error(ErrorCode::InvalidMorphism,
                  "vertex '" + dom_->name(Vertex{static_cast<std::uint32_t>(i)}) + "' maps outside the codomain");
  for (auto e : dom_->edge_list()) {
    const Path& img = emap_[e.index];
    if (!cod_->contains(img))
      throw Error(ErrorCode::InvalidMorphism, "image of edge '" + dom_->name(e) + "' is not a path");
    if (img.source() != vmap_[dom_->source(e).index] || img.target() != vmap_[dom_->target(e).index])
      throw Error(ErrorCode::InvalidMorphism, "image of edge '" + dom_->name(e) + "' (" + cod_->format(img) +
                                                  ") does not match the images of its endpoints");
  }
}

PathHom PathHom::identity(GraphPtr g) {
  std::vector<Vertex> vmap = g->vertices();
  std::vector<Path> emap;
  for (auto e : g->edge_list()) emap.push_back(g->edge_path(e));
  return PathHom(g, g, std::move(vmap), std::move(emap));
}

Path PathHom::operator()(const Path& p) const {
  if (p.is_vertex()) return Path::vertex(vmap_[p.source().index]);
  Path out = Path::vertex(vmap_[p.source().index]);
  for (auto e : p.edges()) out = out * emap_[e.index];
  return out;
}

bool operator==(const PathHom& a, const PathHom& b) {
  return *a.dom_ == *b.dom_ && *a.cod_ == *b.cod_ && a.vmap_ == b.vmap_ && a.emap_ == b.emap_;
}

Path apply(const PathHom& f, const Path& p) { return f(p); }

namespace {

bool same_graph(const GraphPtr& a, const GraphPtr& b) { return a == b || *a == *b; }

}  // namespace

PathHom compose(const PathHom& g, const PathHom& f) {
  if (!same_graph(f.cod_ptr(), g.dom_ptr()))
    throw Error(ErrorCode::DomainMismatch, "codomain of the first map is not the domain of the second");
  std::vector<Vertex> vmap;
  for (auto v : f.vertex_map()) vmap.push_back(g(v));
  std::vector<Path> emap;
  for (const auto& p : f.edge_map()) emap.push_back(g(p));
  return PathHom(f.dom_ptr(), g.cod_ptr(), std::move(vmap), std::move(emap));
}

PathHom extended_lift(const PathHom& f) {
  auto dom = std::make_shared<const Graph>(extended_graph(f.dom()));
  auto cod = std::make_shared<const Graph>(extended_graph(f.cod()));
  std::vector<Path> emap = f.edge_map();
  for (const auto& p : f.edge_map()) emap.push_back(ghost_star(p, f.cod().edge_count()));
  return PathHom(dom, cod, f.vertex_map(), std::move(emap));
}

std::string_view to_string(Predicate p) {
  switch (p) {
    case Predicate::PathHom: return "path_hom";
    case Predicate::VertexInjective: return "vertex_injective";
    case Predicate::VertexBijective: return "vertex_bijective";
    case Predicate::Monotone: return "monotone";
    case Predicate::Regular: return "regular";
  }
  return "?";
}

std::string_view to_string(Category c) {
  switch (c) {
    case Category::PG: return "PG";
    case Category::IPG: return "IPG";
    case Category::BPG: return "BPG";
    case Category::MIPG: return "MIPG";
    case Category::MBPG: return "MBPG";
    case Category::RMIPG: return "RMIPG";
    case Category::RMBPG: return "RMBPG";
  }
  return "?";
}

std::optional<Category> parse_category(std::string_view name) {
  for (auto c : {Category::PG, Category::IPG, Category::BPG, Category::MIPG, Category::MBPG, Category::RMIPG,
                 Category::RMBPG})
    if (to_string(c) == name) return c;
  return std::nullopt;
}

bool CategoryVerdict::in(Category c) const {
  switch (c) {
    case Category::PG: return is_path_hom;
    case Category::IPG: return is_path_hom && vertex_injective;
    case Category::BPG: return is_path_hom && vertex_bijective_finite;
    case Category::MIPG: return in(Category::IPG) && monotone;
    case Category::MBPG: return in(Category::BPG) && monotone;
    case Category::RMIPG: return in(Category::MIPG) && regular;
    case Category::RMBPG: return in(Category::MBPG) && regular;
  }
  return false;
}

std::optional<Witness> vertex_injectivity_violation(const PathHom& f) {
  const auto& vm = f.vertex_map();
  for (std::size_t i = 0; i < vm.size(); ++i)
    for (std::size_t j = i + 1; j < vm.size(); ++j)
      if (vm[i] == vm[j]) {
        Vertex a{static_cast<std::uint32_t>(i)}, b{static_cast<std::uint32_t>(j)};
        return Witness{"vertices " + f.dom().name(a) + " and " + f.dom().name(b) + " both map to " +
                           f.cod().name(vm[i]),
                       {a, b}, {}, {}};
      }
  return std::nullopt;
}

std::optional<Witness> monotonicity_violation(const PathHom& f) {
  const auto edges = f.dom().edge_list();
  for (auto e : edges)
    for (auto e2 : edges) {
      if (e == e2) continue;
      if (prefix_leq(f(e), f(e2))) {
        return Witness{"f(" + f.dom().name(e) + ") = " + f.cod().format(f(e)) + " is a prefix of f(" +
                           f.dom().name(e2) + ") = " + f.cod().format(f(e2)),
                       {}, {e, e2}, {f(e), f(e2)}};
      }
    }
  return std::nullopt;
}

namespace {

// Expansion-tree reading of the regularity clause (b)(i)-(iii). A finite set S
// of paths from x satisfies (i)-(iii) exactly when it is built by the
// following recursion: the first edges of S are precisely s⁻¹(x); for each
// such edge a, either S contains a and nothing else starting with a (a leaf),
// or the residuals {r : a·r ∈ S} form such a set at t(a). (ii) forbids a leaf
// with extensions, (iii) forbids a missing sibling at any level, and (i)
// excludes the root itself from being a leaf. When i = 1 in (iii) the empty
// prefix is read as "some path of S starts with e".
std::optional<Witness> expansion_defect_at(const Graph& g, const Path& prefix, const std::vector<Path>& residuals) {
  const Vertex x = prefix.target();
  bool has_leaf = std::any_of(residuals.begin(), residuals.end(), [](const Path& p) { return p.is_vertex(); });
  if (has_leaf) {
    if (residuals.size() == 1) return std::nullopt;
    for (const auto& r : residuals)
      if (!r.is_vertex())
        return Witness{"image " + g.format(prefix) + " is a proper prefix of image " + g.format(prefix * r),
                       {}, {}, {prefix, prefix * r}};
  }
  for (auto a : g.out_edges(x)) {
    std::vector<Path> sub;
    for (const auto& r : residuals)
      if (r.first_edge() == a) sub.push_back(g.drop_first(r));
    Path extended = prefix * g.edge_path(a);
    if (sub.empty())
      return Witness{"image set misses the branch " + g.format(extended), {}, {}, {extended}};
    if (auto defect = expansion_defect_at(g, extended, sub)) return defect;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Witness> expansion_defect(const Graph& g, Vertex root, const std::vector<Path>& images) {
  for (const auto& p : images)
    if (p.is_vertex())
      return Witness{"image " + g.format(p) + " has length 0", {}, {}, {p}};
  if (images.empty()) return Witness{"empty image set", {}, {}, {}};
  return expansion_defect_at(g, Path::vertex(root), images);
}

RegularityResult is_regular(const PathHom& f) {
  f.dom().require_finite_emitters("is_regular");
  f.cod().require_finite_emitters("is_regular");
  const Graph& dom = f.dom();
  for (auto v : dom.vertices()) {
    if (!is_regular_vertex(dom, v)) continue;
    auto out = dom.out_edges(v);
    if (is_reg0_vertex(dom, v) && f(out.front()) == Path::vertex(f(v))) continue;

    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t j = i + 1; j < out.size(); ++j)
        if (f(out[i]) == f(out[j]))
          return {false, Witness{"at vertex " + dom.name(v) + ": edges " + dom.name(out[i]) + " and " +
                                     dom.name(out[j]) + " have the same image",
                                 {v}, {out[i], out[j]}, {f(out[i])}}};

    std::vector<Path> images;
    for (auto e : out) images.push_back(f(e));
    if (auto defect = expansion_defect(f.cod(), f(v), images)) {
      defect->summary = "at vertex " + dom.name(v) + ": " + defect->summary;
      defect->vertices.insert(defect->vertices.begin(), v);
      return {false, std::move(*defect)};
    }
  }
  return {};
}

CategoryVerdict classify(const PathHom& f) {
  f.dom().require_finite_emitters("classify");
  f.cod().require_finite_emitters("classify");
  CategoryVerdict verdict;

  if (auto w = vertex_injectivity_violation(f)) {
    verdict.vertex_injective = false;
    verdict.vertex_bijective_finite = false;
    verdict.witnesses[Predicate::VertexInjective] = *w;
    verdict.witnesses[Predicate::VertexBijective] = *w;
  } else if (f.dom().vertex_count() != f.cod().vertex_count()) {
    std::set<Vertex> hit(f.vertex_map().begin(), f.vertex_map().end());
    for (auto w : f.cod().vertices())
      if (!hit.contains(w)) {
        verdict.vertex_bijective_finite = false;
        verdict.witnesses[Predicate::VertexBijective] =
            Witness{"codomain vertex " + f.cod().name(w) + " is not hit", {}, {}, {Path::vertex(w)}};
        break;
      }
  }

  if (auto w = monotonicity_violation(f)) {
    verdict.monotone = false;
    verdict.witnesses[Predicate::Monotone] = std::move(*w);
  }

  if (auto r = is_regular(f); !r.regular) {
    verdict.regular = false;
    verdict.witnesses[Predicate::Regular] = std::move(*r.witness);
  }
  return verdict;
}

}  // namespace pathalg
