#pragma once

#include <memory>

#include "polychu/poly_ops.hpp"
#include "polychu/table_poly.hpp"

namespace polychu {

// A symmetric multicategory presented computationally. Arrows are Elems
// interpreted relative to their home (dom list, codomain object).
class MultiOps {
public:
  virtual ~MultiOps() = default;

  virtual const ElemList& objects() const = 0;
  virtual int budget() const = 0;

  virtual std::vector<Elem> hom(const ElemList& dom, const Elem& cod,
                                const WorkBudget& wb) const = 0;
  virtual long long hom_size(const ElemList& dom, const Elem& cod) const = 0;
  virtual Elem identity(const Elem& object) const = 0;

  // g ∘_i f for g: (Λ1,A,Λ2) -> B and f: Γ -> A; the result lives at
  // (Λ1,Γ,Λ2) -> B.
  virtual Elem compose_at(const ElemList& gdom, const Elem& gcod,
                          const Elem& g, int i, const ElemList& fdom,
                          const Elem& f) const = 0;

  // The symmetric action C(Γ;A) -> C(ρΓ;A).
  virtual Elem act(const ElemList& dom, const Elem& cod, const Elem& f,
                   const Perm& rho) const = 0;
};

// A co-unary TablePoly viewed as a multicategory.
class TableMulti : public MultiOps {
public:
  explicit TableMulti(const TablePoly& t);

  const ElemList& objects() const override { return table_->object_list; }
  int budget() const override { return table_->arity_budget; }
  std::vector<Elem> hom(const ElemList& dom, const Elem& cod,
                        const WorkBudget& wb) const override;
  long long hom_size(const ElemList& dom, const Elem& cod) const override;
  Elem identity(const Elem& object) const override;
  Elem compose_at(const ElemList& gdom, const Elem& gcod, const Elem& g, int i,
                  const ElemList& fdom, const Elem& f) const override;
  Elem act(const ElemList& dom, const Elem& cod, const Elem& f,
           const Perm& rho) const override;

  const TablePoly& table() const { return *table_; }

private:
  std::shared_ptr<const TablePoly> table_;
};

// Checks whether every nonempty hom-set of `p` is co-unary; on success wraps
// it, otherwise reports the witness sequent.
struct AsMulticategory {
  std::optional<TablePoly> multicategory;
  std::optional<Sequent> witness;  // set on failure
};
AsMulticategory as_multicategory(const TablePoly& p);

}  // namespace polychu
