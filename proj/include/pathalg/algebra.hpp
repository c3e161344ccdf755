#pragma once

// Elements of the path algebra kE and of the relative Cohn algebras C^X(E)
// (Cohn for X = ∅, Leavitt for X = reg(E)) over k = ℚ.
//
// A RELATIVE_COHN element is a finite combination of monomials S_α S_β* with
// t(α) = t(β). Each vertex w ∈ X has a special edge γ_w (its first outgoing
// edge in declaration order), and a monomial is in normal form when α and β do
// not both end in the same special edge. Rewriting a forbidden tail uses
//
//   S_α₁ S_γ S_γ* S_β₁* = S_α₁ S_β₁* − Σ_{e ∈ s⁻¹(w), e ≠ γ} S_α₁e S_β₁e*,
//
// which strictly shortens the monomial, so normalization terminates.

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "pathalg/graph.hpp"
#include "pathalg/morphism.hpp"

namespace pathalg {

/// Exact rational scalars. Star conjugation is the identity on ℚ.
using Scalar = mpq_class;
std::string format_scalar(const Scalar& c);

enum class AlgebraMode { Path, RelativeCohn };

class AlgebraContext;
using ContextPtr = std::shared_ptr<const AlgebraContext>;

class AlgebraContext {
 public:
  static ContextPtr path(GraphPtr g);
  static ContextPtr cohn(GraphPtr g);
  static ContextPtr leavitt(GraphPtr g);
  /// Throws ContextMismatch when some vertex of `relation_set` is not regular.
  static ContextPtr relative_cohn(GraphPtr g, std::vector<Vertex> relation_set);

  const Graph& graph() const { return *graph_; }
  const GraphPtr& graph_ptr() const { return graph_; }
  AlgebraMode mode() const { return mode_; }
  bool allows_star() const { return mode_ == AlgebraMode::RelativeCohn; }

  const std::vector<Vertex>& relation_vertices() const { return relation_set_; }
  bool in_relation_set(Vertex v) const { return special_[v.index].has_value(); }
  /// The special edge of a vertex in X.
  std::optional<Edge> special_edge(Vertex v) const { return special_[v.index]; }

  bool is_cohn() const { return mode_ == AlgebraMode::RelativeCohn && relation_set_.empty(); }
  bool is_leavitt() const;

  /// "path", "cohn", "leavitt" or "relcohn[v,w]".
  std::string describe() const;

  friend bool operator==(const AlgebraContext& a, const AlgebraContext& b);

 private:
  AlgebraContext(GraphPtr g, AlgebraMode mode, std::vector<Vertex> relation_set);

  GraphPtr graph_;
  AlgebraMode mode_;
  std::vector<Vertex> relation_set_;
  std::vector<std::optional<Edge>> special_;
};

bool same_context(const ContextPtr& a, const ContextPtr& b);

/// S_α S_β*. In PATH mode β is always the vertex t(α).
struct Monomial {
  Path alpha;
  Path beta;

  /// Total length first, then α, then β.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

using TermMap = std::map<Monomial, Scalar>;

class AlgebraElement {
 public:
  /// The zero element.
  explicit AlgebraElement(ContextPtr ctx);

  /// c·S_α S_β*, normalized. Throws StarInPathMode if β is not a vertex in
  /// PATH mode.
  static AlgebraElement monomial(ContextPtr ctx, const Path& alpha, const Path& beta, const Scalar& c = 1);
  static AlgebraElement vertex(ContextPtr ctx, Vertex v);
  static AlgebraElement edge(ContextPtr ctx, Edge e);
  static AlgebraElement ghost(ContextPtr ctx, Edge e);
  /// S_p (P_v for a vertex path).
  static AlgebraElement path(ContextPtr ctx, const Path& p);
  /// Σ_v P_v.
  static AlgebraElement unit(ContextPtr ctx);

  const AlgebraContext& context() const { return *ctx_; }
  const ContextPtr& context_ptr() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Canonical text form, parseable by the expression grammar.
  std::string to_string() const;

  AlgebraElement& operator+=(const AlgebraElement& rhs);
  AlgebraElement& operator-=(const AlgebraElement& rhs);
  AlgebraElement& operator*=(const Scalar& c);

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

 private:
  friend class TermBuilder;
  AlgebraElement(ContextPtr ctx, TermMap terms) : ctx_(std::move(ctx)), terms_(std::move(terms)) {}

  ContextPtr ctx_;
  TermMap terms_;
};

/// Accumulates c·S_α S_β* terms, normalizing each one as it is added.
class TermBuilder {
 public:
  explicit TermBuilder(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  void add(Path alpha, Path beta, const Scalar& c);
  AlgebraElement build() &&;

 private:
  ContextPtr ctx_;
  TermMap terms_;
};

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement scalar_mul(const Scalar& c, const AlgebraElement& a);
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
/// (S_α S_β*)* = S_β S_α*. Throws StarInPathMode.
AlgebraElement star(const AlgebraElement& a);

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator-(const AlgebraElement& a);
AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator*(const Scalar& c, const AlgebraElement& a);

/// True when no monomial of `a` ends in a special edge on both sides.
bool is_normal(const AlgebraElement& a);

// ---------------------------------------------------------------------------
// Generator words and the Cuntz–Krieger rewriting system.

struct Letter {
  enum class Kind : std::uint8_t { Vertex, Edge, Ghost };
  Kind kind;
  std::uint32_t index;

  static Letter vertex(Vertex v) { return {Kind::Vertex, v.index}; }
  static Letter edge(Edge e) { return {Kind::Edge, e.index}; }
  static Letter ghost(Edge e) { return {Kind::Ghost, e.index}; }

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// c · L₁ L₂ … Lₙ with each Lᵢ one of P_v, S_e, S_e*. The empty word is c·1.
struct GeneratorWord {
  Scalar coefficient = 1;
  std::vector<Letter> letters;
};

std::string format_word(const Graph& g, const GeneratorWord& w);

/// Picks which of `count` available redexes to rewrite next.
using RedexChooser = std::function<std::size_t(std::size_t count)>;

/// Class of `w` in the algebra of `ctx`, computed by rewriting with
///   P_v P_w → δ P_v,  P_{s(e)} S_e → S_e → S_e P_{t(e)} (and starred),
///   mismatched adjacency → 0,  S_e* S_f → δ_{e,f} P_{t(e)},
///   S_γ S_γ* → P_w − Σ_{e ≠ γ} S_e S_e*  for w ∈ X with special edge γ.
/// The leftmost redex is rewritten unless `choose` says otherwise.
/// Throws StarInPathMode for ghost letters in PATH mode.
AlgebraElement normal_form(const ContextPtr& ctx, const GeneratorWord& w, const RedexChooser& choose = {});

/// Letters spelling S_p, and S_p* (a single vertex letter for a vertex path).
std::vector<Letter> path_letters(const Path& p);
std::vector<Letter> ghost_letters(const Path& p);

}  // namespace pathalg
