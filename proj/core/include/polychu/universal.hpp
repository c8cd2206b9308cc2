#pragma once

#include <optional>
#include <string>

#include "polychu/poly_ops.hpp"

namespace polychu {

enum class UniversalKind {
  kTensor,
  kUnit,
  kCotensor,
  kCounit,
  kDual,
  kStrongHom,
  kWeakHom,
};

std::string kind_name(UniversalKind k);
std::optional<UniversalKind> kind_from_name(const std::string& s);

// A candidate piece of universal structure: the carrier object plus its
// defining arrow(s). For duals the two arrows are η and ε.
struct UniversalWitness {
  UniversalKind kind = UniversalKind::kTensor;
  Elem carrier;
  ArrowRef structure;         // defining morphism
  std::optional<ArrowRef> counterpart;  // ε for duals
};

struct DualityWitness {
  Elem object, dual;
  ArrowRef eta;  // () -> (A, A•)
  ArrowRef eps;  // (A•, A) -> ()
};

enum class Verdict { kYes, kNo, kInconclusive };

struct CheckOutcome {
  Verdict verdict = Verdict::kNo;
  // failing frame / reason, for No and Inconclusive
  std::string detail;

  bool yes() const { return verdict == Verdict::kYes; }
};

// Bijection checks for Definition-of-structure universal properties,
// quantified over every in-budget frame (Γ;Δ) drawn from the view's
// carrier. A pass means "verified up to the view's budget".
CheckOutcome is_tensor(const PolyView& p, const Elem& a, const Elem& b,
                       const Elem& t, const Elem& u, const WorkBudget& wb = {});
CheckOutcome is_unit(const PolyView& p, const Elem& t, const Elem& u,
                     const WorkBudget& wb = {}, bool positive_only = false);
CheckOutcome is_cotensor(const PolyView& p, const Elem& a, const Elem& b,
                         const Elem& t, const Elem& u,
                         const WorkBudget& wb = {});
CheckOutcome is_counit(const PolyView& p, const Elem& t, const Elem& u,
                       const WorkBudget& wb = {}, bool positive_only = false);
CheckOutcome is_dual(const PolyView& p, const Elem& a, const Elem& b,
                     const ArrowRef& eta, const ArrowRef& eps);
CheckOutcome is_hom(const PolyView& p, const Elem& a, const Elem& b,
                    const Elem& h, const Elem& e, bool strong,
                    const WorkBudget& wb = {});

struct SearchResult {
  Verdict verdict = Verdict::kNo;  // kYes = found
  std::optional<UniversalWitness> witness;
  std::optional<DualityWitness> duality;
  std::string detail;
};

SearchResult find_tensor(const PolyView& p, const Elem& a, const Elem& b,
                         const WorkBudget& wb = {});
SearchResult find_unit(const PolyView& p, const WorkBudget& wb = {});
SearchResult find_cotensor(const PolyView& p, const Elem& a, const Elem& b,
                           const WorkBudget& wb = {});
SearchResult find_counit(const PolyView& p, const WorkBudget& wb = {});
SearchResult find_dual(const PolyView& p, const Elem& a,
                       const WorkBudget& wb = {});
SearchResult find_hom(const PolyView& p, const Elem& a, const Elem& b,
                      bool strong, const WorkBudget& wb = {});

}  // namespace polychu
