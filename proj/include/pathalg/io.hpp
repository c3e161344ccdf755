#pragma once

// JSON formats for graphs, morphisms, inclusions and pullback instances.
//
//   graph      {"vertices": [...], "edges": [{"id","src","tgt"}, ...],
//               "infinite_emitters": ["v" | {"vertex","unlisted_targets"}]}
//   morphism   {"dom": G, "cod": G, "vmap": {"v": "w"},
//               "emap": {"e": ["f", "g"] | {"vertex": "w"}}}
//   inclusion  {"sub": G, "amb": G, "vmap": {"v": "w"}, "emap": {"e": "f"}}
//   instance   {"graphs": {"E1": graph, ...}, "pi1": inclusion, "pi2": inclusion,
//               "f": morphism, "f_res": morphism, "length_bound": n}
//
// G is an inline graph or a graph name. Serialization is canonical
// (declaration order, two-space indent, trailing newline), so parsing and
// re-serializing a canonical file reproduces it byte for byte.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "pathalg/admissible.hpp"
#include "pathalg/morphism.hpp"
#include "pathalg/pullback.hpp"

namespace pathalg {

/// Resolves a graph name; returns nullptr for unknown names.
using GraphResolver = std::function<GraphPtr(const std::string&)>;

/// Space-separated edge ids, or a single vertex id for a length-0 path.
/// Throws UnknownIdentifier or InvalidPath.
Path parse_path(const Graph& g, std::string_view text);

Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

/// A graph reference as written in a file: a name, or an inline graph.
struct GraphRef {
  std::optional<std::string> name;
  GraphPtr graph;
};

struct MorphismFile {
  GraphRef dom, cod;
  PathHom hom;
};
MorphismFile parse_morphism(std::string_view text, const GraphResolver& resolve);
std::string serialize_morphism(const MorphismFile& m);

struct InclusionFile {
  GraphRef sub, amb;
  GraphInclusion inclusion;
};
InclusionFile parse_inclusion(std::string_view text, const GraphResolver& resolve);
std::string serialize_inclusion(const InclusionFile& m);

struct InstanceFile {
  std::vector<std::pair<std::string, GraphPtr>> graphs;  // local graph table
  InclusionFile pi1, pi2;
  MorphismFile f, f_res;
  PullbackInstance instance;
};
/// Names inside the instance resolve against its "graphs" table first.
InstanceFile parse_instance(std::string_view text, const GraphResolver& resolve);
std::string serialize_instance(const InstanceFile& m);

/// Reads a whole file; throws ParseError when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace pathalg
