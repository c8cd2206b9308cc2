#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polychu/perm.hpp"
#include "polychu/sequent.hpp"

namespace polychu {

// Raised when an enumeration would exceed the configured work caps. Checks
// catch it and report "budget-inconclusive" instead of guessing.
struct TooLarge : std::runtime_error {
  explicit TooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct WorkBudget {
  long long max_hom_size = 200000;
  long long max_slot_candidates = 200000;
  long long max_pairs = 4000000;

  void charge_hom(long long n) const {
    if (n > max_hom_size) throw TooLarge("hom-set larger than work cap");
  }
  void charge_slot(long long n) const {
    if (n > max_slot_candidates)
      throw TooLarge("slot candidate set larger than work cap");
  }
};

enum class ComposeStatus {
  kOk,
  kTruncated,      // composite sequent exceeds the arity budget
  kCutMismatch,    // objects at the cut positions differ
  kMissing,        // table has no entry (structural defect)
};

struct ComposeResult {
  ComposeStatus status = ComposeStatus::kOk;
  Elem arrow;  // valid when status == kOk

  bool ok() const { return status == ComposeStatus::kOk; }
};

// A polycategory presented computationally: hom-sets are enumerable per
// sequent, composition cuts one codomain object of f against one domain
// object of g, and symmetric groups act on hom-sets. Implementations are
// either explicit tables or lazily evaluated constructions.
class PolyOps {
public:
  virtual ~PolyOps() = default;

  virtual int budget() const = 0;

  // Sorted arrow ids at this sequent; empty if the hom-set is empty.
  // May throw TooLarge.
  virtual std::vector<Elem> hom(const Sequent& s) const = 0;

  virtual Elem identity(const Elem& object) const = 0;

  // g composed with f along dom(g)[i] = cod(f)[j]; the result lives at
  // (Λ1,Γ,Λ2; Δ1,Σ,Δ2) per the cut-interleaving rule.
  virtual ComposeResult compose(const Sequent& gs, const Elem& g, int i,
                                const Sequent& fs, const Elem& f,
                                int j) const = 0;

  // The symmetric action P(Γ;Δ) -> P(ρΓ; τΔ), f ↦ τ f ρ.
  virtual Elem act(const Sequent& s, const Elem& f, const Perm& rho,
                   const Perm& tau) const = 0;
};

// PolyOps plus a finite object carrier; enough for universal-structure
// search and materialization.
class PolyView : public PolyOps {
public:
  virtual const ElemList& objects() const = 0;

  bool has_object(const Elem& x) const {
    for (const Elem& o : objects())
      if (o == x) return true;
    return false;
  }
};

// Enumerates every sequent over `objects` with arity <= budget, in canonical
// order (by total arity, then domain size, then lexicographic entries).
std::vector<Sequent> all_sequents(const ElemList& objects, int budget);

// Same, but with `extra_arity` slots reserved (for universal-property frames
// that append objects to the sequent).
std::vector<Sequent> frame_sequents(const ElemList& objects, int budget,
                                    int extra_arity);

// The composite sequent of a cut, with provenance labels for every slot.
// Labels are unique: [tag, side, index] for tag in {"g","f"}.
struct CutShape {
  Sequent result;
  ElemList dom_labels, cod_labels;
};
CutShape cut_shape(const Sequent& gs, int i, const Sequent& fs, int j);

}  // namespace polychu
