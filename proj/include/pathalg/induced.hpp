#pragma once

// Algebra homomorphisms induced by path homomorphisms:
//   f_*   : kE     → kF      for f ∈ IPG,
//   f_*^C : C_ℚ(E) → C_ℚ(F)  for f ∈ MIPG,
//   f_*^L : L_ℚ(E) → L_ℚ(F)  for f ∈ RMIPG,
// all given on generators by P_v ↦ P_{f(v)}, S_e ↦ S_{f(e)}, S_e* ↦ S_{f(e)}*.

#include <string>
#include <vector>

#include "pathalg/algebra.hpp"
#include "pathalg/morphism.hpp"

namespace pathalg {

enum class InducedKind { Path, Cohn, Leavitt };
std::string_view to_string(InducedKind k);

class InducedHom {
 public:
  /// Throws NotVertexInjective.
  static InducedHom path(const PathHom& f);
  /// Throws NotVertexInjective or NotMonotone.
  static InducedHom cohn(const PathHom& f);
  /// Throws NotVertexInjective, NotMonotone or NotRegular.
  static InducedHom leavitt(const PathHom& f);
  static InducedHom make(const PathHom& f, InducedKind kind);

  const PathHom& morphism() const { return f_; }
  InducedKind kind() const { return kind_; }
  const ContextPtr& source() const { return source_; }
  const ContextPtr& target() const { return target_; }

  /// Throws ContextMismatch unless `a` lives in source().
  AlgebraElement operator()(const AlgebraElement& a) const;

 private:
  InducedHom(PathHom f, InducedKind kind, ContextPtr source, ContextPtr target)
      : f_(std::move(f)), kind_(kind), source_(std::move(source)), target_(std::move(target)) {}

  PathHom f_;
  InducedKind kind_;
  ContextPtr source_, target_;
};

AlgebraElement induce_path(const PathHom& f, const AlgebraElement& a);
AlgebraElement induce_cohn(const PathHom& f, const AlgebraElement& a);
AlgebraElement induce_leavitt(const PathHom& f, const AlgebraElement& a);

/// Generator-level image of a word: each letter goes to the letters of its
/// image path under the extended lift.
GeneratorWord image_word(const PathHom& f, const GeneratorWord& w);

struct RelationVerdict {
  std::string relation;  // e.g. "e2* e1" or "e e* + f f* - v"
  std::string image;     // normal form of the image in the codomain
  bool holds = true;
};

struct RelationReport {
  InducedKind kind;
  std::vector<RelationVerdict> relations;
  bool all_hold() const;
  /// First failing relation, if any.
  const RelationVerdict* first_failure() const;
};

/// Pushes every defining relation of the domain algebra through the generator
/// assignment and normalizes it in the codomain. Does not require `f` to be in
/// the matching category; that is what makes it useful as a diagnostic.
RelationReport verify_relations_preserved(const PathHom& f, InducedKind kind);

}  // namespace pathalg
