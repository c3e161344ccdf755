#pragma once

// Path homomorphisms of graphs and decision procedures for the category
// tower PG ⊃ IPG ⊃ MIPG ⊃ RMIPG (and the vertex-bijective BPG, MBPG, RMBPG).

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pathalg/graph.hpp"

namespace pathalg {

using GraphPtr = std::shared_ptr<const Graph>;

/// A vertex map plus an edge-to-path map, extended multiplicatively to all
/// finite paths. Construction checks s(f(e)) = f(s(e)) and t(f(e)) = f(t(e));
/// the remaining path-homomorphism axioms follow from that.
class PathHom {
 public:
  PathHom(GraphPtr dom, GraphPtr cod, std::vector<Vertex> vmap, std::vector<Path> emap);

  static PathHom identity(GraphPtr g);

  const Graph& dom() const { return *dom_; }
  const Graph& cod() const { return *cod_; }
  const GraphPtr& dom_ptr() const { return dom_; }
  const GraphPtr& cod_ptr() const { return cod_; }

  Vertex operator()(Vertex v) const { return vmap_[v.index]; }
  const Path& operator()(Edge e) const { return emap_[e.index]; }
  Path operator()(const Path& p) const;

  const std::vector<Vertex>& vertex_map() const { return vmap_; }
  const std::vector<Path>& edge_map() const { return emap_; }

  friend bool operator==(const PathHom& a, const PathHom& b);

 private:
  GraphPtr dom_, cod_;
  std::vector<Vertex> vmap_;
  std::vector<Path> emap_;
};

Path apply(const PathHom& f, const Path& p);

/// Throws DomainMismatch unless cod(f) = dom(g).
PathHom compose(const PathHom& g, const PathHom& f);

/// The lift f̄ : Ē → F̄ with f̄(e*) = f(e)*.
PathHom extended_lift(const PathHom& f);

enum class Predicate { PathHom, VertexInjective, VertexBijective, Monotone, Regular };
std::string_view to_string(Predicate p);

enum class Category { PG, IPG, BPG, MIPG, MBPG, RMIPG, RMBPG };
std::string_view to_string(Category c);
std::optional<Category> parse_category(std::string_view name);

/// Counterexample attached to a failed predicate. Vertices and edges live in
/// the domain, paths in the codomain.
struct Witness {
  std::string summary;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<Path> paths;
};

struct CategoryVerdict {
  bool is_path_hom = true;
  bool vertex_injective = true;
  bool vertex_bijective_finite = true;
  bool monotone = true;
  bool regular = true;
  std::map<Predicate, Witness> witnesses;

  bool in(Category c) const;
};

/// First (lexicographic) ordered pair of distinct edges e, e' with
/// f(e) ⪯ f(e'), if any.
std::optional<Witness> monotonicity_violation(const PathHom& f);
std::optional<Witness> vertex_injectivity_violation(const PathHom& f);

struct RegularityResult {
  bool regular = true;
  std::optional<Witness> witness;
};
RegularityResult is_regular(const PathHom& f);

/// Nullopt when `images` (distinct positive-length paths starting at `root`)
/// is the leaf set of a complete expansion tree rooted at `root`; otherwise a
/// description of the first defect.
std::optional<Witness> expansion_defect(const Graph& g, Vertex root, const std::vector<Path>& images);

/// Throws UnsupportedInfiniteEmitter when either graph is annotated.
CategoryVerdict classify(const PathHom& f);

}  // namespace pathalg
