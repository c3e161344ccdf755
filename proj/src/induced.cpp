#include "pathalg/induced.hpp"

#include "pathalg/error.hpp"

namespace pathalg {

std::string_view to_string(InducedKind k) {
  switch (k) {
    case InducedKind::Path: return "path";
    case InducedKind::Cohn: return "cohn";
    case InducedKind::Leavitt: return "leavitt";
  }
  return "?";
}

namespace {

void require_vertex_injective(const PathHom& f) {
  if (auto w = vertex_injectivity_violation(f)) throw Error(ErrorCode::NotVertexInjective, w->summary);
}

void require_monotone(const PathHom& f) {
  if (auto w = monotonicity_violation(f)) throw Error(ErrorCode::NotMonotone, w->summary);
}

void require_regular(const PathHom& f) {
  if (auto r = is_regular(f); !r.regular) throw Error(ErrorCode::NotRegular, r.witness->summary);
}

ContextPtr context_for(GraphPtr g, InducedKind kind) {
  switch (kind) {
    case InducedKind::Path: return AlgebraContext::path(std::move(g));
    case InducedKind::Cohn: return AlgebraContext::cohn(std::move(g));
    case InducedKind::Leavitt: return AlgebraContext::leavitt(std::move(g));
  }
  return nullptr;
}

}  // namespace

InducedHom InducedHom::make(const PathHom& f, InducedKind kind) {
  f.dom().require_finite_emitters("induced homomorphism");
  f.cod().require_finite_emitters("induced homomorphism");
  require_vertex_injective(f);
  if (kind != InducedKind::Path) require_monotone(f);
  if (kind == InducedKind::Leavitt) require_regular(f);
  return InducedHom(f, kind, context_for(f.dom_ptr(), kind), context_for(f.cod_ptr(), kind));
}

InducedHom InducedHom::path(const PathHom& f) { return make(f, InducedKind::Path); }
InducedHom InducedHom::cohn(const PathHom& f) { return make(f, InducedKind::Cohn); }
InducedHom InducedHom::leavitt(const PathHom& f) { return make(f, InducedKind::Leavitt); }

AlgebraElement InducedHom::operator()(const AlgebraElement& a) const {
  if (!same_context(a.context_ptr(), source_))
    throw Error(ErrorCode::ContextMismatch, "element of " + a.context().describe() + " algebra passed to " +
                                                std::string(to_string(kind_)) + " homomorphism");
  TermBuilder out(target_);
  for (const auto& [m, c] : a.terms()) out.add(f_(m.alpha), f_(m.beta), c);
  return std::move(out).build();
}

AlgebraElement induce_path(const PathHom& f, const AlgebraElement& a) { return InducedHom::path(f)(a); }
AlgebraElement induce_cohn(const PathHom& f, const AlgebraElement& a) { return InducedHom::cohn(f)(a); }
AlgebraElement induce_leavitt(const PathHom& f, const AlgebraElement& a) { return InducedHom::leavitt(f)(a); }

GeneratorWord image_word(const PathHom& f, const GeneratorWord& w) {
  GeneratorWord out{w.coefficient, {}};
  for (const auto& l : w.letters) {
    std::vector<Letter> img;
    switch (l.kind) {
      case Letter::Kind::Vertex: img = {Letter::vertex(f(Vertex{l.index}))}; break;
      case Letter::Kind::Edge: img = path_letters(f(Edge{l.index})); break;
      case Letter::Kind::Ghost: img = ghost_letters(f(Edge{l.index})); break;
    }
    out.letters.insert(out.letters.end(), img.begin(), img.end());
  }
  return out;
}

bool RelationReport::all_hold() const { return first_failure() == nullptr; }

const RelationVerdict* RelationReport::first_failure() const {
  for (const auto& r : relations)
    if (!r.holds) return &r;
  return nullptr;
}

RelationReport verify_relations_preserved(const PathHom& f, InducedKind kind) {
  RelationReport report{kind, {}};
  if (kind == InducedKind::Path) return report;

  const Graph& dom = f.dom();
  ContextPtr target = context_for(f.cod_ptr(), kind);
  auto push = [&](std::string label, const AlgebraElement& image) {
    report.relations.push_back({std::move(label), image.to_string(), image.is_zero()});
  };

  // S_e* S_e' − δ P_{t(e)}
  for (auto e : dom.edge_list())
    for (auto e2 : dom.edge_list()) {
      AlgebraElement img = normal_form(target, image_word(f, {1, {Letter::ghost(e), Letter::edge(e2)}}));
      std::string label = dom.name(e) + "* " + dom.name(e2);
      if (e == e2) {
        img -= normal_form(target, image_word(f, {1, {Letter::vertex(dom.target(e))}}));
        label += " - " + dom.name(dom.target(e));
      }
      push(std::move(label), img);
    }

  if (kind == InducedKind::Leavitt) {
    // Σ_{s(e)=v} S_e S_e* − P_v at each regular v.
    for (auto v : regular_vertices(dom)) {
      AlgebraElement img = -normal_form(target, image_word(f, {1, {Letter::vertex(v)}}));
      std::string label;
      for (auto e : dom.out_edges(v)) {
        img += normal_form(target, image_word(f, {1, {Letter::edge(e), Letter::ghost(e)}}));
        if (!label.empty()) label += " + ";
        label += dom.name(e) + " " + dom.name(e) + "*";
      }
      label += " - " + dom.name(v);
      push(std::move(label), img);
    }
  }
  return report;
}

}  // namespace pathalg
