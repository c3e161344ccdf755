#pragma once

// Checker for the mixed-pullback square
//
//        F₁ --f_res--> F₂
//        |π₁           |π₂
//        v             v
//        E₁ ----f----> E₂
//
// Hypotheses H1..H8 are evaluated in a fixed order. The surjectivity
// hypothesis H8 quantifies over all finite paths; it is checked up to
// `length_bound` and reported as PASS_UP_TO_BOUND unless the relevant path
// set is finite and fully covered.

#include <optional>
#include <string>
#include <vector>

#include "pathalg/admissible.hpp"
#include "pathalg/algebra.hpp"
#include "pathalg/morphism.hpp"

namespace pathalg {

class PullbackInstance {
 public:
  /// Throws DomainMismatch unless the four graphs line up (compared by value).
  PullbackInstance(GraphInclusion pi1, GraphInclusion pi2, PathHom f, PathHom f_res, std::size_t length_bound);

  const GraphInclusion& pi1() const { return pi1_; }
  const GraphInclusion& pi2() const { return pi2_; }
  const PathHom& f() const { return f_; }
  const PathHom& f_res() const { return f_res_; }
  std::size_t length_bound() const { return bound_; }

  PullbackInstance with_bound(std::size_t bound) const;

 private:
  GraphInclusion pi1_, pi2_;
  PathHom f_, f_res_;
  std::size_t bound_;
};

enum class HypothesisStatus { Pass, PassUpToBound, Fail, Undecided };
std::string_view to_string(HypothesisStatus s);

struct HypothesisVerdict {
  std::string id;     // "H1" .. "H8"
  std::string title;
  HypothesisStatus status = HypothesisStatus::Pass;
  std::string detail;  // witness on failure, certificate otherwise
};

enum class Overall { Pass, PassUpToBound, Fail };
std::string_view to_string(Overall o);

struct HypothesisReport {
  std::vector<HypothesisVerdict> hypotheses;
  Overall overall = Overall::Pass;
  std::size_t length_bound = 0;
  std::vector<std::string> notes;

  /// Id of the first hypothesis that is not PASS / PASS_UP_TO_BOUND.
  std::optional<std::string> first_failure() const;
  const HypothesisVerdict& at(std::string_view id) const;

  std::string to_text() const;
  std::string to_json() const;
};

HypothesisReport check_hypotheses(const PullbackInstance& inst);

/// Options for the bounded preimage search used by H8 and the kernel check.
struct PreimageSearch {
  std::size_t depth = 0;  // max domain path length
  bool capped = false;    // the hard cap was below the sufficient depth
};
/// depth = min(L·c + c, 4L) with c = max(1, longest edge image).
PreimageSearch preimage_depth(const PathHom& f, std::size_t length_bound);

/// Shortest domain path q with f(q) = p and |q| ≤ depth (first in path order
/// among the shortest).
std::optional<Path> find_preimage(const PathHom& f, const Path& p, std::size_t depth);

struct GeneratorCheck {
  std::string generator;  // "P_v", "S_e" or "S_e*"
  std::string via_f;      // π₂* ∘ f_*
  std::string via_f_res;  // f_res,* ∘ π₁*
  bool equal = true;
};

struct CommutativityReport {
  std::vector<GeneratorCheck> generators;
  bool commutes() const;
  const GeneratorCheck* first_mismatch() const;
};

/// Throws HypothesisNotMet unless H1, H3, H5 hold and f_res ∈ RMIPG. The
/// restriction equations of H6 are not required: comparing the two routes is
/// exactly what this check does.
CommutativityReport check_commutativity(const PullbackInstance& inst);

struct KernelElementCheck {
  Path alpha, beta;               // in E₂, t(α) = t(β) outside π₂⁰(F₂⁰)
  Path alpha_pre, beta_pre;       // in E₁
  bool killed_by_pi1 = true;      // π₁*(S_α̃ S_β̃*) = 0
  bool maps_onto = true;          // f_*(S_α̃ S_β̃*) = S_α S_β*
};

struct KernelInclusionReport {
  std::vector<KernelElementCheck> elements;
  std::size_t corrections_checked = 0;
  std::vector<std::string> notes;
  bool holds() const;
};

/// Throws HypothesisNotMet when check_hypotheses fails, PreimageNotFound when
/// a path of a spanning element has no preimage within the search depth.
KernelInclusionReport check_kernel_inclusion(const PullbackInstance& inst);

}  // namespace pathalg
