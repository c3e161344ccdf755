#pragma once

// Finite directed graphs, their finite paths, the prefix order and the
// extended (double) graph.
//
// Vertices and edges are addressed by dense indices in declaration order.
// Every enumeration in the library walks these indices in increasing order,
// so all downstream normal forms and reports are deterministic.

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace pathalg {

struct Vertex {
  std::uint32_t index = 0;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

struct Edge {
  std::uint32_t index = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct EdgeDecl {
  std::string id;
  std::string src;
  std::string tgt;
  friend bool operator==(const EdgeDecl&, const EdgeDecl&) = default;
};

/// Symbolic annotation: the vertex emits the listed edges plus infinitely many
/// unlisted ones. When known, `unlisted_targets` bounds where the unlisted
/// edges land.
struct InfiniteEmitterDecl {
  std::string vertex;
  std::optional<std::vector<std::string>> unlisted_targets;
  friend bool operator==(const InfiniteEmitterDecl&, const InfiniteEmitterDecl&) = default;
};

struct GraphDecl {
  std::vector<std::string> vertices;
  std::vector<EdgeDecl> edges;
  std::vector<InfiniteEmitterDecl> infinite_emitters;
  friend bool operator==(const GraphDecl&, const GraphDecl&) = default;
};

/// Throws Error(DanglingEndpoint | DuplicateId) unless `decl` describes a
/// graph. Vertex and edge identifiers share one namespace.
void validate_graph(const GraphDecl& decl);

/// A finite path: a vertex (length 0) or a composable edge sequence. Source
/// and target are stored so that length-0 paths keep their vertex.
class Path {
 public:
  Path() = default;
  static Path vertex(Vertex v) { return Path(v, v, {}); }

  Vertex source() const { return source_; }
  Vertex target() const { return target_; }
  std::size_t length() const { return edges_.size(); }
  bool is_vertex() const { return edges_.empty(); }
  std::span<const Edge> edges() const { return edges_; }
  Edge first_edge() const { return edges_.front(); }
  Edge last_edge() const { return edges_.back(); }

  /// Concatenation; requires target() == rhs.source().
  Path operator*(const Path& rhs) const;

  /// Ordered by length, then lexicographically by edge index, then by vertex.
  friend std::strong_ordering operator<=>(const Path& a, const Path& b);
  friend bool operator==(const Path& a, const Path& b) = default;

 private:
  friend class Graph;
  friend Path ghost_star(const Path& p, std::size_t base_edges);
  Path(Vertex s, Vertex t, std::vector<Edge> edges)
      : source_(s), target_(t), edges_(std::move(edges)) {}

  Vertex source_{};
  Vertex target_{};
  std::vector<Edge> edges_;
};

class Graph {
 public:
  Graph() = default;
  explicit Graph(GraphDecl decl);

  const GraphDecl& decl() const { return decl_; }

  std::size_t vertex_count() const { return decl_.vertices.size(); }
  std::size_t edge_count() const { return decl_.edges.size(); }
  bool empty() const { return vertex_count() == 0; }

  std::vector<Vertex> vertices() const;
  std::vector<Edge> edge_list() const;

  const std::string& name(Vertex v) const { return decl_.vertices[v.index]; }
  const std::string& name(Edge e) const { return decl_.edges[e.index].id; }

  Vertex source(Edge e) const { return src_[e.index]; }
  Vertex target(Edge e) const { return tgt_[e.index]; }
  std::span<const Edge> out_edges(Vertex v) const { return out_[v.index]; }
  std::span<const Edge> in_edges(Vertex v) const { return in_[v.index]; }

  std::optional<Vertex> find_vertex(const std::string& id) const;
  std::optional<Edge> find_edge(const std::string& id) const;
  Vertex vertex_of(const std::string& id) const;  // throws UnknownIdentifier
  Edge edge_of(const std::string& id) const;      // throws UnknownIdentifier

  bool has_infinite_emitters() const { return !decl_.infinite_emitters.empty(); }
  bool is_infinite_emitter(Vertex v) const { return infinite_[v.index]; }
  /// nullopt when the annotation does not declare where unlisted edges land.
  std::optional<std::vector<Vertex>> unlisted_targets(Vertex v) const;

  /// Throws UnsupportedInfiniteEmitter when the graph carries the annotation.
  void require_finite_emitters(std::string_view operation) const;

  // Path construction and inspection.
  Path vertex_path(Vertex v) const { return Path::vertex(v); }
  Path edge_path(Edge e) const { return Path(source(e), target(e), {e}); }
  /// Throws Error(InvalidPath) unless the edges compose and are nonempty.
  Path make_path(std::vector<Edge> edges) const;
  std::optional<Path> try_make_path(std::vector<Edge> edges) const;
  /// True when `p` is a path of this graph.
  bool contains(const Path& p) const;
  Path drop_last(const Path& p) const;
  Path drop_first(const Path& p) const { return suffix(p, 1); }
  /// `p` without its first `count` edges (count ≤ length).
  Path suffix(const Path& p, std::size_t count) const;
  std::string format(const Path& p) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.decl_ == b.decl_; }

 private:
  GraphDecl decl_;
  std::vector<Vertex> src_, tgt_;
  std::vector<std::vector<Edge>> out_, in_;
  std::vector<bool> infinite_;
  std::vector<std::optional<std::vector<Vertex>>> unlisted_;
  std::unordered_map<std::string, std::uint32_t> vertex_index_, edge_index_;
};

/// {v : v emits at least one and finitely many edges}.
std::vector<Vertex> regular_vertices(const Graph& g);
/// Regular vertices whose only outgoing edge is a loop at the vertex.
std::vector<Vertex> reg0_vertices(const Graph& g);
bool is_regular_vertex(const Graph& g, Vertex v);
bool is_reg0_vertex(const Graph& g, Vertex v);

/// a ⪯ b iff b = a·γ for some path γ.
bool prefix_leq(const Path& a, const Path& b);

/// Edge e of g keeps index e; its ghost e* gets index |E¹| + e and runs from
/// t(e) to s(e). Ghost identifiers are the original ones with a trailing '*'.
Graph extended_graph(const Graph& g);

/// The involution p ↦ p* on paths of extended_graph(g), where `base_edges` is
/// the edge count of g.
Path ghost_star(const Path& p, std::size_t base_edges);

/// All paths of length ≤ max_length, ordered by length, then lexicographically
/// in edge declaration order (vertices in declaration order first).
std::vector<Path> paths_up_to(const Graph& g, std::size_t max_length);

/// Vertex-simple loops: cycles that visit each of their vertices once. Each
/// loop is reported once, rotated to start at its smallest vertex.
std::vector<Path> vertex_simple_loops(const Graph& g);
bool loop_has_exit(const Graph& g, const Path& loop);

struct LoopExitResult {
  bool all_have_exits = true;
  std::optional<Path> witness;  // first loop without an exit
};
LoopExitResult vertex_simple_loops_have_exits(const Graph& g);

/// Finite set of paths with union as sum and concatenation as product.
class PathSet {
 public:
  PathSet() = default;
  PathSet(std::initializer_list<Path> paths) : paths_(paths) {}
  explicit PathSet(std::set<Path> paths) : paths_(std::move(paths)) {}

  /// The multiplicative unit E⁰.
  static PathSet unit(const Graph& g);

  const std::set<Path>& paths() const { return paths_; }
  std::size_t size() const { return paths_.size(); }
  bool contains(const Path& p) const { return paths_.contains(p); }

  friend bool operator==(const PathSet&, const PathSet&) = default;

 private:
  std::set<Path> paths_;
};

PathSet pathset_add(const PathSet& a, const PathSet& b);
PathSet pathset_mul(const PathSet& a, const PathSet& b);

}  // namespace pathalg
