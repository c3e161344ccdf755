#pragma once

// Named graphs, morphisms and the projective-plane pullback instance used by
// the examples, the CLI and the tests.
//
// Graphs: point, loop, rose2, edge, line3, branching, branch_domain, star2,
// star2_loop, parallel_pair, loop_exit, rp2_E1, rp2_E2, rp2_F1, rp2_F2, plus
// the generated families A<n> (line v1 → … → vn) and C<n> (n-cycle).

#include <optional>
#include <string>
#include <vector>

#include "pathalg/admissible.hpp"
#include "pathalg/morphism.hpp"
#include "pathalg/pullback.hpp"

namespace pathalg::builtin {

/// nullptr for unknown names.
GraphPtr graph(const std::string& name);
std::vector<std::string> graph_names();

/// Vertices v1..vn, edges e1..e(n-1) with ei : vi → v(i+1).
GraphPtr line(std::size_t n);
/// Vertices v1..vn, edges c1..cn with ci : vi → v(i mod n + 1).
GraphPtr cycle(std::size_t n);

/// Builds a morphism from id pairs; each edge image is a space-separated edge
/// list or a single vertex id.
PathHom hom(GraphPtr dom, GraphPtr cod, const std::vector<std::pair<std::string, std::string>>& vmap,
            const std::vector<std::pair<std::string, std::string>>& emap);

std::optional<PathHom> morphism(const std::string& name);
std::vector<std::string> morphism_names();

/// A<n> → C<n>, vi ↦ vi, ei ↦ ci.
PathHom line_to_cycle(std::size_t n);

/// φ : E₁ → E₂ with s ↦ e e, r ↦ f, t ↦ e f.
PathHom rp2_phi();
GraphInclusion rp2_pi1();
GraphInclusion rp2_pi2();
PathHom rp2_phi_res();
PullbackInstance rp2_instance(std::size_t length_bound);

/// Single-hypothesis mutations of the projective-plane instance.
enum class Rp2Mutation {
  NoExit,       // E₁ loses r and t, so the loop s has no exit (H2)
  TToF,         // t ↦ f, so φ(r) = φ(t) and φ is not monotone (H3)
  EnlargedF2,   // F₂ := E₂ with π₂ the identity (H5)
};
std::string_view target_hypothesis(Rp2Mutation m);
PullbackInstance rp2_mutation(Rp2Mutation m, std::size_t length_bound);

}  // namespace pathalg::builtin
