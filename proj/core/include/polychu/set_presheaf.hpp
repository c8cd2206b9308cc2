#pragma once

#include <map>
#include <memory>

#include "polychu/multicat.hpp"

namespace polychu {

// A Set-valued presheaf on a multicategory: a value set per object list,
// permutation actions, and reindexing along multimorphisms.
class SetPshOps {
public:
  virtual ~SetPshOps() = default;

  virtual std::vector<Elem> values(const ElemList& ctx,
                                   const WorkBudget& wb) const = 0;
  virtual long long value_count(const ElemList& ctx) const = 0;

  // f ∈ C(f_dom; src_ctx[pos]); maps M(Δ1,A,Δ2) -> M(Δ1,Γ,Δ2).
  virtual Elem reindex(const ElemList& src_ctx, int pos, const ElemList& f_dom,
                       const Elem& f, const Elem& elem) const = 0;

  // M(ctx) -> M(π·ctx).
  virtual Elem act(const ElemList& ctx, const Perm& pi,
                   const Elem& elem) const = 0;
};

// Explicit tables (the JSON-facing form).
class TableSetPresheaf : public SetPshOps {
public:
  std::map<ElemList, ElemList> value_sets;  // ctx -> sorted elements
  // (ctx, adjacent transposition index) -> bijection
  std::map<std::pair<ElemList, int>, std::map<Elem, Elem>> actions;
  // (src_ctx, pos, f_dom, f) -> elementwise map
  struct ReindexKey {
    ElemList src_ctx;
    int pos;
    ElemList f_dom;
    Elem f;
    friend bool operator<(const ReindexKey& a, const ReindexKey& b) {
      if (a.src_ctx != b.src_ctx) return a.src_ctx < b.src_ctx;
      if (a.pos != b.pos) return a.pos < b.pos;
      if (a.f_dom != b.f_dom) return a.f_dom < b.f_dom;
      return a.f < b.f;
    }
  };
  std::map<ReindexKey, std::map<Elem, Elem>> reindex_maps;

  std::vector<Elem> values(const ElemList& ctx,
                           const WorkBudget& wb) const override;
  long long value_count(const ElemList& ctx) const override;
  Elem reindex(const ElemList& src_ctx, int pos, const ElemList& f_dom,
               const Elem& f, const Elem& elem) const override;
  Elem act(const ElemList& ctx, const Perm& pi, const Elem& elem) const override;
};

// The representable presheaf C(-;A).
class RepresentablePresheaf : public SetPshOps {
public:
  RepresentablePresheaf(const MultiOps& c, Elem a) : c_(c), a_(std::move(a)) {}

  std::vector<Elem> values(const ElemList& ctx,
                           const WorkBudget& wb) const override {
    return c_.hom(ctx, a_, wb);
  }
  long long value_count(const ElemList& ctx) const override {
    return c_.hom_size(ctx, a_);
  }
  Elem reindex(const ElemList& src_ctx, int pos, const ElemList& f_dom,
               const Elem& f, const Elem& elem) const override {
    return c_.compose_at(src_ctx, a_, elem, pos, f_dom, f);
  }
  Elem act(const ElemList& ctx, const Perm& pi, const Elem& elem) const override {
    return c_.act(ctx, a_, elem, pi);
  }
  const Elem& target() const { return a_; }

private:
  const MultiOps& c_;
  Elem a_;
};

// The shifted presheaf M[Δ](Γ) = M(Γ,Δ).
class ShiftedPresheaf : public SetPshOps {
public:
  ShiftedPresheaf(const SetPshOps& m, ElemList delta)
      : m_(m), delta_(std::move(delta)) {}

  std::vector<Elem> values(const ElemList& ctx,
                           const WorkBudget& wb) const override;
  long long value_count(const ElemList& ctx) const override;
  Elem reindex(const ElemList& src_ctx, int pos, const ElemList& f_dom,
               const Elem& f, const Elem& elem) const override;
  Elem act(const ElemList& ctx, const Perm& pi, const Elem& elem) const override;

  const ElemList& delta() const { return delta_; }

private:
  const SetPshOps& m_;
  ElemList delta_;
};

// Materializes a presheaf over the multicategory's carrier, up to the given
// context length.
TableSetPresheaf materialize_presheaf(const MultiOps& c, const SetPshOps& m,
                                      int max_ctx_len,
                                      const WorkBudget& wb = {});

// Presheaf laws: unit reindexing, the two commuting squares, the composition
// triangle and the permutation-compatibility squares, swept over the stored
// contexts.
Report validate_presheaf(const MultiOps& c, const SetPshOps& m, int max_ctx_len,
                         const WorkBudget& wb = {});

// The co-subunary polycategory with P(Γ;A) = C(Γ;A) and P(Γ;) = M(Γ).
TablePoly cosubunary(const MultiOps& c, const SetPshOps& m,
                     const WorkBudget& wb = {});

// True iff the induced maps M(Γ,T) -> M(Γ,A,B) are bijections for every
// in-budget Γ. `u` must already be a tensor in C (caller's obligation).
struct PreserveOutcome {
  bool preserved = true;
  std::string detail;
};
PreserveOutcome preserves_tensor(const MultiOps& c, const SetPshOps& m,
                                 const ElemList& ab, const Elem& t,
                                 const Elem& u, const WorkBudget& wb = {});
PreserveOutcome preserves_unit(const MultiOps& c, const SetPshOps& m,
                               const Elem& t, const Elem& u,
                               const WorkBudget& wb = {});

}  // namespace polychu
