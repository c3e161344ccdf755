#include "pathalg/examples.hpp"

#include <set>

#include "pathalg/builtins.hpp"
#include "pathalg/error.hpp"
#include "pathalg/expression.hpp"
#include "pathalg/induced.hpp"
#include "pathalg/pullback.hpp"

namespace pathalg {

std::string_view to_string(Origin o) {
  switch (o) {
    case Origin::Reference: return "reference";
    case Origin::Computed: return "computed";
    case Origin::Elementary: return "elementary";
  }
  return "?";
}

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string attempt(const std::function<std::string()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    return "error " + std::string(to_string(e.code()));
  }
}

std::string membership(const PathHom& f) {
  auto v = classify(f);
  std::string out;
  for (auto c : {Category::PG, Category::IPG, Category::BPG, Category::MIPG, Category::MBPG, Category::RMIPG,
                 Category::RMBPG})
    if (v.in(c)) out += (out.empty() ? "" : " ") + std::string(to_string(c));
  return out.empty() ? "none" : out;
}

std::string witness(const CategoryVerdict& v, Predicate p) {
  auto it = v.witnesses.find(p);
  return it == v.witnesses.end() ? "none" : it->second.summary;
}

std::string eval(const ContextPtr& ctx, std::string_view expr) { return parse_expression(ctx, expr).to_string(); }

std::vector<BuiltinExample> make_examples() {
  using namespace builtin;
  std::vector<BuiltinExample> ex;

  ex.push_back({"toeplitz-ev1", "Cohn map of the constant map from the loop to a point sends S_e and S_e* to 1",
                Origin::Reference, [] {
                  auto f = *morphism("loop_to_point");
                  auto h = InducedHom::cohn(f);
                  auto se = AlgebraElement::edge(h.source(), Edge{0});
                  auto unit = AlgebraElement::unit(h.target());
                  std::string actual = "S_e -> " + h(se).to_string() + ", S_e* -> " + h(star(se)).to_string() +
                                       ", unit " + yes_no(h(se) == unit && h(star(se)) == unit);
                  return ExampleOutcome{"S_e -> v, S_e* -> v, unit yes", actual};
                }});

  ex.push_back({"constant-loop-regular", "the constant map from the loop to a point is MIPG and regular",
                Origin::Reference, [] {
                  auto v = classify(*morphism("loop_to_point"));
                  return ExampleOutcome{"MIPG yes, regular yes",
                                        "MIPG " + yes_no(v.in(Category::MIPG)) + ", regular " + yes_no(v.regular)};
                }});

  ex.push_back({"constant-rose-not-monotone", "the constant map from the two-petal rose to a point is not monotone",
                Origin::Reference, [] {
                  auto v = classify(*morphism("rose2_to_point"));
                  return ExampleOutcome{"monotone no: f(e1) = v is a prefix of f(e2) = v",
                                        "monotone " + yes_no(v.monotone) + ": " + witness(v, Predicate::Monotone)};
                }});

  ex.push_back({"nonmonotone-rose", "e1 -> e e, e2 -> e is rejected by the Cohn functor; e2* e1 maps to e",
                Origin::Reference, [] {
                  auto f = *morphism("rose2_nonmonotone");
                  std::string err = attempt([&] { return InducedHom::cohn(f).target()->describe(); });
                  auto rel = verify_relations_preserved(f, InducedKind::Cohn);
                  std::string image = "missing";
                  for (const auto& r : rel.relations)
                    if (r.relation == "e2* e1") image = r.image;
                  std::string actual = err + "; e2* e1 -> " + image;
                  return ExampleOutcome{"error NotMonotone; e2* e1 -> e", actual};
                }});

  ex.push_back({"regular-edge-to-line", "e -> x y into the three-vertex line is regular", Origin::Reference, [] {
                  return ExampleOutcome{"regular yes", "regular " + yes_no(is_regular(*morphism("edge_to_line3")).regular)};
                }});

  ex.push_back({"missing-branch", "e0 -> x1 y1, e1 -> x1 y2, e2 -> x2 y2 is not regular", Origin::Reference, [] {
                  auto r = is_regular(*morphism("branch_map"));
                  return ExampleOutcome{"regular no: at vertex v: image set misses the branch x2 y1",
                                        "regular " + yes_no(r.regular) + ": " + (r.witness ? r.witness->summary : "")};
                }});

  ex.push_back({"star-into-loop", "the identity on a two-edge star is not regular into the star with a loop",
                Origin::Reference, [] {
                  auto r = is_regular(*morphism("star_into_loop"));
                  return ExampleOutcome{"regular no: at vertex v: image set misses the branch u",
                                        "regular " + yes_no(r.regular) + ": " + (r.witness ? r.witness->summary : "")};
                }});

  ex.push_back({"extended-lift-not-monotone", "e1 -> g, e2 -> e g is monotone but its extended lift is not",
                Origin::Reference, [] {
                  auto f = *morphism("pair_to_loop_exit");
                  auto lift = extended_lift(f);
                  auto w = monotonicity_violation(lift);
                  return ExampleOutcome{"f monotone yes, lift monotone no: f(e1*) = g* is a prefix of f(e2*) = g* e*",
                                        "f monotone " + yes_no(!monotonicity_violation(f)) + ", lift monotone " +
                                            yes_no(!w) + (w ? ": " + w->summary : "")};
                }});

  ex.push_back({"leavitt-loop-eval", "in L(loop), e* e e = e and e e* - v = 0", Origin::Reference, [] {
                  auto ctx = AlgebraContext::leavitt(graph("loop"));
                  return ExampleOutcome{"e* e e = e; e e* - v = 0",
                                        "e* e e = " + eval(ctx, "e* e e") + "; e e* - v = " + eval(ctx, "e e* - v")};
                }});

  ex.push_back({"cohn-loop-irreducible", "in C(loop), e e* is already reduced", Origin::Elementary, [] {
                  auto ctx = AlgebraContext::cohn(graph("loop"));
                  return ExampleOutcome{"e e*", eval(ctx, "e e*")};
                }});

  ex.push_back({"rp2q-classify", "the projective-plane map s -> e e, r -> f, t -> e f", Origin::Reference, [] {
                  return ExampleOutcome{"PG IPG BPG MIPG MBPG RMIPG RMBPG", membership(rp2_phi())};
                }});

  ex.push_back({"rp2q-relations", "every Leavitt relation of E1 maps to 0 under the projective-plane map",
                Origin::Computed, [] {
                  auto rel = verify_relations_preserved(rp2_phi(), InducedKind::Leavitt);
                  std::string ck2;
                  for (const auto& r : rel.relations)
                    if (r.relation == "s s* + r r* + t t* - v") ck2 = r.image;
                  return ExampleOutcome{"10 relations hold; s s* + r r* + t t* - v -> 0",
                                        std::to_string(rel.relations.size()) + " relations " +
                                            (rel.all_hold() ? "hold" : "fail") + "; s s* + r r* + t t* - v -> " + ck2};
                }});

  ex.push_back({"line-to-cycle", "the Leavitt map of A3 -> C3 is injective on the 9 matrix units",
                Origin::Reference, [] {
                  auto f = line_to_cycle(3);
                  auto h = InducedHom::leavitt(f);
                  const Graph& g = f.dom();
                  std::vector<Path> to_sink;
                  for (const auto& p : paths_up_to(g, 2))
                    if (p.target() == g.vertex_of("v3")) to_sink.push_back(p);
                  std::set<std::string> images;
                  bool monomial = true;
                  for (const auto& a : to_sink)
                    for (const auto& b : to_sink) {
                      auto img = h(AlgebraElement::monomial(h.source(), a, b));
                      monomial = monomial && img.terms().size() == 1;
                      images.insert(img.to_string());
                    }
                  return ExampleOutcome{"9 distinct monomial images",
                                        std::to_string(images.size()) + " distinct " +
                                            (monomial ? "monomial" : "non-monomial") + " images"};
                }});

  ex.push_back({"rp2q-pullback", "the projective-plane square satisfies all hypotheses and commutes",
                Origin::Reference, [] {
                  auto inst = rp2_instance(6);
                  auto report = check_hypotheses(inst);
                  auto comm = check_commutativity(inst);
                  auto kernel = check_kernel_inclusion(rp2_instance(4));
                  return ExampleOutcome{"PASS_UP_TO_BOUND; commutes yes; kernel covered yes",
                                        std::string(to_string(report.overall)) + "; commutes " +
                                            yes_no(comm.commutes()) + "; kernel covered " + yes_no(kernel.holds())};
                }});

  ex.push_back({"rp2q-no-exit", "removing r and t leaves the loop s without an exit", Origin::Elementary, [] {
                  auto report = check_hypotheses(rp2_mutation(Rp2Mutation::NoExit, 6));
                  return ExampleOutcome{"FAIL at H2: loop [s] has no exit",
                                        std::string(to_string(report.overall)) + " at " +
                                            report.first_failure().value_or("none") + ": " +
                                            report.at(report.first_failure().value_or("H1")).detail};
                }});

  return ex;
}

}  // namespace

const std::vector<BuiltinExample>& builtin_examples() {
  static const std::vector<BuiltinExample> ex = make_examples();
  return ex;
}

const BuiltinExample* find_example(std::string_view name) {
  for (const auto& e : builtin_examples())
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace pathalg
