#pragma once

#include <map>
#include <optional>
#include <set>

#include "polychu/poly_ops.hpp"
#include "polychu/report.hpp"

namespace polychu {

// Generator of a symmetric action: an adjacent transposition on one side of
// a sequent. side 0 = domain, 1 = codomain; index = left position swapped.
struct ActionGen {
  int side = 0;
  int index = 0;

  friend bool operator<(const ActionGen& a, const ActionGen& b) {
    if (a.side != b.side) return a.side < b.side;
    return a.index < b.index;
  }
  std::string key() const {
    return (side == 0 ? "d" : "c") + std::to_string(index);
  }
};

struct CompKey {
  Sequent gs;
  Elem g;
  int i = 0;
  Sequent fs;
  Elem f;
  int j = 0;

  friend bool operator<(const CompKey& a, const CompKey& b) {
    if (!(a.gs == b.gs)) return a.gs < b.gs;
    if (!(a.g == b.g)) return a.g < b.g;
    if (a.i != b.i) return a.i < b.i;
    if (!(a.fs == b.fs)) return a.fs < b.fs;
    if (!(a.f == b.f)) return a.f < b.f;
    return a.j < b.j;
  }
};

// Exact finite presentation of a symmetric polycategory, truncated at an
// arity budget. Hom-sets are stored per ordered sequent; the symmetric
// action is stored on adjacent-transposition generators; composition is an
// explicit table over in-budget cuts.
class TablePoly : public PolyView {
public:
  ElemList object_list;  // sorted, unique
  int arity_budget = 4;
  std::map<Sequent, ElemList> homs;  // absent key = empty hom-set
  std::map<Elem, Elem> identities;   // object -> arrow id in P(A;A)
  std::map<std::pair<Sequent, ActionGen>, std::map<Elem, Elem>> action;
  std::map<CompKey, Elem> composition;

  // --- PolyView ---
  const ElemList& objects() const override { return object_list; }
  int budget() const override { return arity_budget; }
  std::vector<Elem> hom(const Sequent& s) const override;
  Elem identity(const Elem& object) const override;
  ComposeResult compose(const Sequent& gs, const Elem& g, int i,
                        const Sequent& fs, const Elem& f, int j) const override;
  Elem act(const Sequent& s, const Elem& f, const Perm& rho,
           const Perm& tau) const override;

  // --- construction helpers ---
  void add_arrow(const Sequent& s, const Elem& id);
  bool has_arrow(const Sequent& s, const Elem& id) const;
  Elem act_gen(const Sequent& s, const ActionGen& g, const Elem& f) const;

  // Restriction to a smaller budget K' < K: drops out-of-budget hom-sets and
  // every table entry mentioning them.
  TablePoly restricted(int new_budget) const;

  // Keeps only the named objects (and all tables over them).
  TablePoly restricted_to_objects(const ElemList& keep) const;

  // Drops arrows at non-co-unary sequents. With `strict`, reports a witness
  // arrow of codomain arity != 1 instead.
  std::optional<Sequent> co_unary_witness() const;
};

struct ValidateOptions {
  CheckLevel level = CheckLevel::kFull;
};

// Exhaustive validator: structural integrity first, then the symmetric
// group relations, identity laws, the three associativity shapes and
// equivariance, all within the arity budget. Every failure carries a
// concrete witness.
Report validate(const TablePoly& p, const ValidateOptions& opts = {});

// Materializes a PolyView (e.g. a lazily evaluated construction) into an
// explicit table over the view's carrier. Throws TooLarge if a hom-set
// exceeds the work caps.
TablePoly materialize(const PolyView& view, const WorkBudget& wb = {});

}  // namespace polychu
