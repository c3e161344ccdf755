#pragma once

// Injective graph homomorphisms π : F ↪ E, the admissibility axioms
//   (A1) E⁰ ∖ π⁰(F⁰) is saturated,
//   (A2) t_E⁻¹(π⁰(F⁰)) ⊆ π¹(F¹),
// breaking vertices, the quotient map π* : L(E) → L(F) and the generators of
// its kernel.
//
// The ambient graph may carry infinite-emitter annotations. An annotated
// vertex emits its listed edges plus unlisted ones landing in its declared
// `unlisted_targets`; when that set is not declared and the answer depends on
// it, the operation throws AmbiguousInfiniteEmitter.

#include <optional>
#include <string>
#include <vector>

#include "pathalg/algebra.hpp"
#include "pathalg/morphism.hpp"

namespace pathalg {

class GraphInclusion {
 public:
  /// Throws InvalidInclusion unless both maps are injective and intertwine
  /// the source and target maps. The subgraph must be finite.
  GraphInclusion(GraphPtr sub, GraphPtr amb, std::vector<Vertex> vmap, std::vector<Edge> emap);

  static GraphInclusion identity(GraphPtr g);

  const Graph& sub() const { return *sub_; }
  const Graph& amb() const { return *amb_; }
  const GraphPtr& sub_ptr() const { return sub_; }
  const GraphPtr& amb_ptr() const { return amb_; }

  Vertex operator()(Vertex v) const { return vmap_[v.index]; }
  Edge operator()(Edge e) const { return emap_[e.index]; }
  Path operator()(const Path& p) const;

  const std::vector<Vertex>& vertex_map() const { return vmap_; }
  const std::vector<Edge>& edge_map() const { return emap_; }

  std::optional<Vertex> preimage(Vertex v) const;
  std::optional<Edge> preimage(Edge e) const;
  /// nullopt when some vertex or edge of `p` is outside the image.
  std::optional<Path> preimage(const Path& p) const;

  bool in_image(Vertex v) const { return preimage(v).has_value(); }
  bool in_image(Edge e) const { return preimage(e).has_value(); }

  /// π⁰(F⁰) in ambient index order.
  std::vector<Vertex> image_vertices() const;
  /// E⁰ ∖ π⁰(F⁰) in ambient index order.
  std::vector<Vertex> complement() const;

  PathHom as_path_hom() const;

 private:
  GraphPtr sub_, amb_;
  std::vector<Vertex> vmap_;
  std::vector<Edge> emap_;
  std::vector<std::optional<std::uint32_t>> vpre_, epre_;
};

/// Verdict on a vertex set, with the first offending vertex or edge.
struct SetVerdict {
  bool holds = true;
  std::optional<Vertex> vertex;
  std::optional<Edge> edge;
  std::string summary;
};

/// No regular v ∉ H has t(s⁻¹(v)) ⊆ H.
SetVerdict is_saturated(const Graph& g, const std::vector<Vertex>& H);
/// No edge runs from H to E⁰ ∖ H.
SetVerdict is_hereditary(const Graph& g, const std::vector<Vertex>& H);

struct AdmissibilityVerdict {
  SetVerdict a1;          // saturation of the complement
  SetVerdict a2;          // incoming edges of the image are in the image
  SetVerdict hereditary;  // diagnostic: implied by (A2)
  bool admissible() const { return a1.holds && a2.holds; }
};

AdmissibilityVerdict is_admissible(const GraphInclusion& inc);

/// {v ∉ H : v is an infinite emitter with 0 < |s⁻¹(v) ∩ t⁻¹(E⁰∖H)| < ∞}.
std::vector<Vertex> breaking_vertices(const Graph& g, const std::vector<Vertex>& H);

/// π* : L_ℚ(amb) → L_ℚ(sub). Construction throws NotAdmissible or
/// UnsupportedInfiniteEmitter; application throws ContextMismatch when the
/// argument is not in L_ℚ(amb).
class QuotientMap {
 public:
  explicit QuotientMap(GraphInclusion inc);

  const GraphInclusion& inclusion() const { return inc_; }
  const ContextPtr& source() const { return source_; }
  const ContextPtr& target() const { return target_; }

  AlgebraElement operator()(const AlgebraElement& a) const;

 private:
  GraphInclusion inc_;
  ContextPtr source_, target_;
};

AlgebraElement quotient_map(const GraphInclusion& inc, const AlgebraElement& a);

struct BreakingCorrection {
  Vertex vertex;             // in amb
  std::vector<Edge> edges;   // π¹ of the subgraph edges leaving its preimage
};

struct KernelGenerators {
  std::vector<Vertex> vertex_projections;
  std::vector<BreakingCorrection> breaking_corrections;
};

/// Throws NotAdmissible.
KernelGenerators kernel_generators(const GraphInclusion& inc);

}  // namespace pathalg
