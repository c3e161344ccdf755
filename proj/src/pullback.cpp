#include "pathalg/pullback.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "pathalg/error.hpp"
#include "pathalg/induced.hpp"

namespace pathalg {

PullbackInstance::PullbackInstance(GraphInclusion pi1, GraphInclusion pi2, PathHom f, PathHom f_res,
                                   std::size_t length_bound)
    : pi1_(std::move(pi1)), pi2_(std::move(pi2)), f_(std::move(f)), f_res_(std::move(f_res)), bound_(length_bound) {
  if (!(f_.dom() == pi1_.amb())) throw Error(ErrorCode::DomainMismatch, "domain of f is not the ambient graph of pi1");
  if (!(f_.cod() == pi2_.amb())) throw Error(ErrorCode::DomainMismatch, "codomain of f is not the ambient graph of pi2");
  if (!(f_res_.dom() == pi1_.sub()))
    throw Error(ErrorCode::DomainMismatch, "domain of f_res is not the included graph of pi1");
  if (!(f_res_.cod() == pi2_.sub()))
    throw Error(ErrorCode::DomainMismatch, "codomain of f_res is not the included graph of pi2");
}

PullbackInstance PullbackInstance::with_bound(std::size_t bound) const {
  PullbackInstance out = *this;
  out.bound_ = bound;
  return out;
}

std::string_view to_string(HypothesisStatus s) {
  switch (s) {
    case HypothesisStatus::Pass: return "PASS";
    case HypothesisStatus::PassUpToBound: return "PASS_UP_TO_BOUND";
    case HypothesisStatus::Fail: return "FAIL";
    case HypothesisStatus::Undecided: return "UNDECIDED";
  }
  return "?";
}

std::string_view to_string(Overall o) {
  switch (o) {
    case Overall::Pass: return "PASS";
    case Overall::PassUpToBound: return "PASS_UP_TO_BOUND";
    case Overall::Fail: return "FAIL";
  }
  return "?";
}

std::optional<std::string> HypothesisReport::first_failure() const {
  for (const auto& h : hypotheses)
    if (h.status == HypothesisStatus::Fail || h.status == HypothesisStatus::Undecided) return h.id;
  return std::nullopt;
}

const HypothesisVerdict& HypothesisReport::at(std::string_view id) const {
  for (const auto& h : hypotheses)
    if (h.id == id) return h;
  throw std::out_of_range("no hypothesis " + std::string(id));
}

std::string HypothesisReport::to_text() const {
  std::ostringstream out;
  for (const auto& h : hypotheses) {
    std::string head = h.id + "  " + h.title + " ";
    if (head.size() < 46) head.append(46 - head.size(), '.');
    out << head << ' ' << to_string(h.status) << '\n';
    if (!h.detail.empty()) out << "      " << h.detail << '\n';
  }
  for (const auto& n : notes) out << "note: " << n << '\n';
  out << "overall: " << to_string(overall) << " (length bound " << length_bound << ")\n";
  return out.str();
}

std::string HypothesisReport::to_json() const {
  nlohmann::ordered_json j;
  j["overall"] = std::string(to_string(overall));
  j["length_bound"] = length_bound;
  j["first_failure"] = first_failure() ? nlohmann::ordered_json(*first_failure()) : nlohmann::ordered_json(nullptr);
  auto& hs = j["hypotheses"] = nlohmann::ordered_json::array();
  for (const auto& h : hypotheses)
    hs.push_back({{"id", h.id}, {"title", h.title}, {"status", std::string(to_string(h.status))}, {"detail", h.detail}});
  j["notes"] = notes;
  return j.dump(2);
}

// ---------------------------------------------------------------------------
// Preimage search

PreimageSearch preimage_depth(const PathHom& f, std::size_t length_bound) {
  std::size_t c = 1;
  for (const auto& p : f.edge_map()) c = std::max(c, p.length());
  std::size_t sufficient = length_bound * c + c;
  std::size_t cap = 4 * length_bound;
  if (sufficient <= cap) return {sufficient, false};
  return {cap, true};
}

namespace {

bool image_matches(const Path& image, const Path& p, std::size_t pos) {
  auto img = image.edges();
  auto target = p.edges();
  if (pos + img.size() > target.size()) return false;
  return std::equal(img.begin(), img.end(), target.begin() + static_cast<std::ptrdiff_t>(pos));
}

bool extend(const PathHom& f, const Path& p, Vertex at, std::size_t pos, std::size_t remaining,
            std::vector<Edge>& trail) {
  if (remaining == 0) return pos == p.length();
  for (auto e : f.dom().out_edges(at)) {
    const Path& img = f(e);
    if (!image_matches(img, p, pos)) continue;
    trail.push_back(e);
    if (extend(f, p, f.dom().target(e), pos + img.length(), remaining - 1, trail)) return true;
    trail.pop_back();
  }
  return false;
}

}  // namespace

std::optional<Path> find_preimage(const PathHom& f, const Path& p, std::size_t depth) {
  const Graph& dom = f.dom();
  for (auto u : dom.vertices())
    if (p.is_vertex() && f(u) == p.source()) return Path::vertex(u);
  std::vector<Edge> trail;
  for (std::size_t len = 1; len <= depth; ++len) {
    // First edges in global index order so the result is the first path of
    // its length in path order.
    for (auto e : dom.edge_list()) {
      if (f(dom.source(e)) != p.source() || !image_matches(f(e), p, 0)) continue;
      trail.assign(1, e);
      if (extend(f, p, dom.target(e), f(e).length(), len - 1, trail)) return dom.make_path(trail);
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Hypotheses

namespace {

std::string names(const Graph& g, const std::vector<Vertex>& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? ", " : "") + g.name(vs[i]);
  return out + "}";
}

std::string describe_admissibility(const std::string& label, const GraphInclusion& inc, bool& ok) {
  auto v = is_admissible(inc);
  ok = v.admissible();
  if (ok) return label + ": (A1) and (A2) hold";
  return label + ": " + (v.a1.holds ? "(A2) fails, " + v.a2.summary : "(A1) fails, " + v.a1.summary);
}

std::string category_failure(const CategoryVerdict& v) {
  for (auto p : {Predicate::VertexInjective, Predicate::Monotone, Predicate::Regular}) {
    auto it = v.witnesses.find(p);
    if (it != v.witnesses.end()) return "not " + std::string(to_string(p)) + ": " + it->second.summary;
  }
  return "";
}

struct Breaking {
  std::vector<Vertex> b1, b2;
};

// Whether the set of paths of g ending in `targets` is finite, and if so the
// length of the longest one.
std::optional<std::size_t> longest_path_into(const Graph& g, const std::vector<Vertex>& targets) {
  std::vector<bool> reach(g.vertex_count(), false);
  std::vector<Vertex> queue(targets.begin(), targets.end());
  for (auto v : targets) reach[v.index] = true;
  while (!queue.empty()) {
    Vertex v = queue.back();
    queue.pop_back();
    for (auto e : g.in_edges(v))
      if (!reach[g.source(e).index]) {
        reach[g.source(e).index] = true;
        queue.push_back(g.source(e));
      }
  }
  // Longest path ending in the target set inside the reachable part; a cycle
  // there means unboundedly long paths.
  enum class Mark { New, Active, Done };
  std::vector<Mark> mark(g.vertex_count(), Mark::New);
  std::vector<std::size_t> longest(g.vertex_count(), 0);  // longest path from v to the targets
  bool cyclic = false;
  std::function<void(Vertex)> visit = [&](Vertex v) {
    mark[v.index] = Mark::Active;
    for (auto e : g.out_edges(v)) {
      Vertex w = g.target(e);
      if (!reach[w.index]) continue;
      if (mark[w.index] == Mark::Active) cyclic = true;
      if (mark[w.index] == Mark::New) visit(w);
      if (cyclic) return;
      longest[v.index] = std::max(longest[v.index], longest[w.index] + 1);
    }
    mark[v.index] = Mark::Done;
  };
  std::size_t best = 0;
  for (auto v : g.vertices()) {
    if (!reach[v.index]) continue;
    if (mark[v.index] == Mark::New) visit(v);
    if (cyclic) return std::nullopt;
    best = std::max(best, longest[v.index]);
  }
  return best;
}

}  // namespace

HypothesisReport check_hypotheses(const PullbackInstance& inst) {
  HypothesisReport report;
  report.length_bound = inst.length_bound();
  const Graph& e1 = inst.f().dom();
  const Graph& e2 = inst.f().cod();
  const PathHom& f = inst.f();
  const PathHom& f_res = inst.f_res();

  auto run = [&](std::string id, std::string title, auto body) {
    HypothesisVerdict h{std::move(id), std::move(title), HypothesisStatus::Pass, ""};
    try {
      body(h);
    } catch (const Error& err) {
      if (is_input_error(err.code()) && err.code() != ErrorCode::UnsupportedInfiniteEmitter &&
          err.code() != ErrorCode::AmbiguousInfiniteEmitter)
        throw;
      h.status = HypothesisStatus::Undecided;
      h.detail = err.what();
      report.notes.push_back(h.id + " could not be decided: " + err.what());
    }
    report.hypotheses.push_back(std::move(h));
  };

  run("H1", "inclusions are admissible", [&](HypothesisVerdict& h) {
    bool ok1 = false, ok2 = false;
    h.detail = describe_admissibility("pi1", inst.pi1(), ok1) + "; " + describe_admissibility("pi2", inst.pi2(), ok2);
    if (!ok1 || !ok2) h.status = HypothesisStatus::Fail;
  });

  run("H2", "every vertex-simple loop of E1 has an exit", [&](HypothesisVerdict& h) {
    auto r = vertex_simple_loops_have_exits(e1);
    if (r.all_have_exits) {
      h.detail = std::to_string(vertex_simple_loops(e1).size()) + " vertex-simple loop(s), all with exits";
    } else {
      h.status = HypothesisStatus::Fail;
      h.detail = "loop [" + e1.format(*r.witness) + "] has no exit";
    }
  });

  run("H3", "f is in RMIPG", [&](HypothesisVerdict& h) {
    auto v = classify(f);
    if (v.in(Category::RMIPG)) {
      h.detail = "vertex-injective, monotone and regular";
    } else {
      h.status = HypothesisStatus::Fail;
      h.detail = category_failure(v);
    }
  });

  std::optional<Breaking> breaking;
  run("H4", "f maps only breaking vertices to breaking vertices", [&](HypothesisVerdict& h) {
    Breaking b{breaking_vertices(e1, inst.pi1().complement()), breaking_vertices(e2, inst.pi2().complement())};
    breaking = b;
    for (auto v : e1.vertices()) {
      bool hits = std::find(b.b2.begin(), b.b2.end(), f(v)) != b.b2.end();
      bool is_b1 = std::find(b.b1.begin(), b.b1.end(), v) != b.b1.end();
      if (hits && !is_b1) {
        h.status = HypothesisStatus::Fail;
        h.detail = "vertex " + e1.name(v) + " maps to breaking vertex " + e2.name(f(v)) + " but is not breaking";
        return;
      }
    }
    h.detail = b.b1.empty() && b.b2.empty() ? "no breaking vertices"
                                            : "B1 = " + names(e1, b.b1) + ", B2 = " + names(e2, b.b2);
  });

  run("H5", "f^-1(pi2(F2)) is contained in pi1(F1)", [&](HypothesisVerdict& h) {
    for (auto v : e1.vertices())
      if (inst.pi2().in_image(f(v)) && !inst.pi1().in_image(v)) {
        h.status = HypothesisStatus::Fail;
        h.detail = "vertex " + e1.name(v) + " maps into pi2(F2) at " + e2.name(f(v)) + " but is outside pi1(F1)";
        return;
      }
    h.detail = "checked " + std::to_string(e1.vertex_count()) + " vertices";
  });

  run("H6", "f restricts to f_res and f_res is in RMIPG", [&](HypothesisVerdict& h) {
    const Graph& f1 = f_res.dom();
    for (auto x : f1.vertices())
      if (inst.pi2()(f_res(x)) != f(inst.pi1()(x))) {
        h.status = HypothesisStatus::Fail;
        h.detail = "at vertex " + f1.name(x) + ": f_res gives " + e2.name(inst.pi2()(f_res(x))) + ", f gives " +
                   e2.name(f(inst.pi1()(x)));
        return;
      }
    for (auto x : f1.edge_list()) {
      Path via_res = inst.pi2()(f_res(x));
      Path via_f = f(e1.edge_path(inst.pi1()(x)));
      if (via_res != via_f) {
        h.status = HypothesisStatus::Fail;
        h.detail = "at edge " + f1.name(x) + ": f_res gives " + e2.format(via_res) + ", f gives " + e2.format(via_f);
        return;
      }
    }
    auto v = classify(f_res);
    if (!v.in(Category::RMIPG)) {
      h.status = HypothesisStatus::Fail;
      h.detail = "f_res " + category_failure(v);
      return;
    }
    h.detail = "restriction agrees on all generators of F1; f_res is vertex-injective, monotone and regular";
  });

  run("H7", "f_res sends edges at breaking preimages to edges", [&](HypothesisVerdict& h) {
    if (!breaking) throw Error(ErrorCode::AmbiguousInfiniteEmitter, "breaking vertices of E1 are undetermined");
    const Graph& f1 = f_res.dom();
    std::size_t checked = 0;
    for (auto x : f1.vertices()) {
      Vertex v = inst.pi1()(x);
      if (std::find(breaking->b1.begin(), breaking->b1.end(), v) == breaking->b1.end()) continue;
      for (auto e : f1.out_edges(x)) {
        ++checked;
        if (f_res(e).length() != 1) {
          h.status = HypothesisStatus::Fail;
          h.detail = "f_res(" + f1.name(e) + ") = " + f_res.cod().format(f_res(e)) + " is not a single edge";
          return;
        }
      }
    }
    h.detail = checked == 0 ? "vacuous: no breaking vertices in E1" : std::to_string(checked) + " edge(s) checked";
  });

  run("H8", "paths ending outside pi2(F2) or in B2 lie in the image of f", [&](HypothesisVerdict& h) {
    e2.require_finite_emitters("path surjectivity");
    if (!breaking) throw Error(ErrorCode::AmbiguousInfiniteEmitter, "breaking vertices of E2 are undetermined");
    std::vector<Vertex> targets = inst.pi2().complement();
    for (auto v : breaking->b2)
      if (std::find(targets.begin(), targets.end(), v) == targets.end()) targets.push_back(v);
    std::vector<bool> is_target(e2.vertex_count(), false);
    for (auto v : targets) is_target[v.index] = true;

    const std::size_t L = inst.length_bound();
    auto search = preimage_depth(f, L);
    std::size_t covered = 0;
    std::string sample;
    for (const auto& p : paths_up_to(e2, L)) {
      if (!is_target[p.target().index]) continue;
      auto q = find_preimage(f, p, search.depth);
      if (!q) {
        h.status = HypothesisStatus::Fail;
        h.detail = "path " + e2.format(p) + " has no preimage of length <= " + std::to_string(search.depth);
        if (search.capped)
          report.notes.push_back("InexhaustiveSearch: preimage depth capped at " + std::to_string(search.depth));
        return;
      }
      ++covered;
      if (!p.is_vertex()) {
        if (!sample.empty()) sample += ", ";
        sample += e2.format(p) + " = f(" + e1.format(*q) + ")";
      }
    }
    auto longest = longest_path_into(e2, targets);
    if (longest && *longest <= L) {
      h.detail = "all " + std::to_string(covered) + " path(s) covered; no longer ones exist";
    } else {
      h.status = HypothesisStatus::PassUpToBound;
      h.detail = std::to_string(covered) + " path(s) of length <= " + std::to_string(L) + " covered";
      if (!sample.empty()) h.detail += ": " + sample;
    }
  });

  bool any_fail = false, any_bound = false;
  for (const auto& h : report.hypotheses) {
    if (h.status == HypothesisStatus::Fail || h.status == HypothesisStatus::Undecided) any_fail = true;
    if (h.status == HypothesisStatus::PassUpToBound) any_bound = true;
  }
  report.overall = any_fail ? Overall::Fail : any_bound ? Overall::PassUpToBound : Overall::Pass;
  if (any_bound) {
    std::string note = "H8 was checked only for paths of length <= " + std::to_string(inst.length_bound());
    if (inst.length_bound() == 0) note += "; bound 0 checks vertices only";
    report.notes.push_back(note);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Generator-level conclusions

bool CommutativityReport::commutes() const { return first_mismatch() == nullptr; }

const GeneratorCheck* CommutativityReport::first_mismatch() const {
  for (const auto& g : generators)
    if (!g.equal) return &g;
  return nullptr;
}

CommutativityReport check_commutativity(const PullbackInstance& inst) {
  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::HypothesisNotMet, what);
  };
  require(is_admissible(inst.pi1()).admissible() && is_admissible(inst.pi2()).admissible(),
          "H1: inclusions are not admissible");
  require(classify(inst.f()).in(Category::RMIPG), "H3: f is not in RMIPG");
  for (auto v : inst.f().dom().vertices())
    require(!inst.pi2().in_image(inst.f()(v)) || inst.pi1().in_image(v), "H5 fails at " + inst.f().dom().name(v));
  require(classify(inst.f_res()).in(Category::RMIPG), "H6: f_res is not in RMIPG");

  auto f_star = InducedHom::leavitt(inst.f());
  auto f_res_star = InducedHom::leavitt(inst.f_res());
  QuotientMap q1(inst.pi1()), q2(inst.pi2());

  const Graph& e1 = inst.f().dom();
  const ContextPtr& ctx = f_star.source();
  CommutativityReport report;
  auto check = [&](std::string label, const AlgebraElement& x) {
    AlgebraElement a = q2(f_star(x));
    AlgebraElement b = f_res_star(q1(x));
    report.generators.push_back({std::move(label), a.to_string(), b.to_string(), a == b});
  };
  for (auto v : e1.vertices()) check("P_" + e1.name(v), AlgebraElement::vertex(ctx, v));
  for (auto e : e1.edge_list()) check("S_" + e1.name(e), AlgebraElement::edge(ctx, e));
  for (auto e : e1.edge_list()) check("S_" + e1.name(e) + "*", AlgebraElement::ghost(ctx, e));
  return report;
}

bool KernelInclusionReport::holds() const {
  bool ok = std::all_of(elements.begin(), elements.end(),
                        [](const KernelElementCheck& k) { return k.killed_by_pi1 && k.maps_onto; });
  return ok && std::none_of(notes.begin(), notes.end(),
                            [](const std::string& n) { return n.rfind("correction mismatch", 0) == 0; });
}

KernelInclusionReport check_kernel_inclusion(const PullbackInstance& inst) {
  auto hyp = check_hypotheses(inst);
  if (hyp.overall == Overall::Fail)
    throw Error(ErrorCode::HypothesisNotMet, "hypothesis " + hyp.first_failure().value_or("?") + " fails");

  const PathHom& f = inst.f();
  const Graph& e2 = f.cod();
  auto f_star = InducedHom::leavitt(f);
  QuotientMap q1(inst.pi1());
  const std::size_t L = inst.length_bound();
  auto search = preimage_depth(f, L);

  KernelInclusionReport report;
  std::vector<Path> tails;
  for (const auto& p : paths_up_to(e2, L))
    if (!inst.pi2().in_image(p.target())) tails.push_back(p);

  std::map<Path, Path> pre;
  for (const auto& p : tails) {
    auto q = find_preimage(f, p, search.depth);
    if (!q)
      throw Error(ErrorCode::PreimageNotFound, "path " + e2.format(p) + " has no preimage of length <= " +
                                                   std::to_string(search.depth));
    pre.emplace(p, *q);
  }

  for (const auto& a : tails)
    for (const auto& b : tails) {
      if (a.target() != b.target()) continue;
      const Path& ap = pre.at(a);
      const Path& bp = pre.at(b);
      AlgebraElement x = AlgebraElement::monomial(f_star.source(), ap, bp);
      KernelElementCheck k{a, b, ap, bp, q1(x).is_zero(),
                           f_star(x) == AlgebraElement::monomial(f_star.target(), a, b)};
      report.elements.push_back(std::move(k));
    }

  // Structural check of the breaking-vertex corrections: each correction of
  // π₂ must be the image of a correction of π₁.
  auto k1 = kernel_generators(inst.pi1());
  auto k2 = kernel_generators(inst.pi2());
  for (const auto& c2 : k2.breaking_corrections) {
    ++report.corrections_checked;
    std::optional<Vertex> u;
    for (auto v : f.dom().vertices())
      if (f(v) == c2.vertex) u = v;
    auto it = std::find_if(k1.breaking_corrections.begin(), k1.breaking_corrections.end(),
                           [&](const BreakingCorrection& c) { return u && c.vertex == *u; });
    bool ok = it != k1.breaking_corrections.end();
    if (ok) {
      std::vector<Edge> mapped;
      for (auto e : it->edges) {
        const Path& img = f(e);
        if (img.length() != 1) {
          ok = false;
          break;
        }
        mapped.push_back(img.first_edge());
      }
      std::vector<Edge> want = c2.edges;
      std::sort(mapped.begin(), mapped.end());
      std::sort(want.begin(), want.end());
      ok = ok && mapped == want;
    }
    if (!ok) report.notes.push_back("correction mismatch at " + e2.name(c2.vertex));
  }
  if (search.capped)
    report.notes.push_back("InexhaustiveSearch: preimage depth capped at " + std::to_string(search.depth));
  return report;
}

}  // namespace pathalg
