#pragma once

#include <memory>
#include <optional>

#include "polychu/fincat.hpp"
#include "polychu/set_presheaf.hpp"

namespace polychu {

struct FiberDuality {
  Elem dual_obj;
  Elem eta;  // fiber arrow () -> (x, x•)
  Elem eps;  // fiber arrow (x•, x) -> ()
};

// A presheaf of polycategories Ω on a multicategory: per-context fiber
// polycategory operations, reindexing functors (on objects and arrows) and
// permutation actions, all lazily evaluated.
class PshPolyOps {
public:
  virtual ~PshPolyOps() = default;

  // fiber polycategory Ω(ctx)
  virtual std::vector<Elem> fiber_hom(const ElemList& ctx, const ElemList& fdom,
                                      const ElemList& fcod,
                                      const WorkBudget& wb) const = 0;
  virtual Elem fiber_identity(const ElemList& ctx, const Elem& obj) const = 0;
  virtual Elem fiber_compose(const ElemList& ctx, const ElemList& gdom,
                             const ElemList& gcod, const Elem& g, int i,
                             const ElemList& fdom, const ElemList& fcod,
                             const Elem& f, int j) const = 0;
  virtual Elem fiber_act(const ElemList& ctx, const ElemList& fdom,
                         const ElemList& fcod, const Elem& arrow,
                         const Perm& rho, const Perm& tau) const = 0;

  // reindexing functor along f ∈ C(f_dom; src_ctx[pos])
  virtual Elem reindex_obj(const ElemList& src_ctx, int pos,
                           const ElemList& f_dom, const Elem& f,
                           const Elem& obj) const = 0;
  virtual Elem reindex_arrow(const ElemList& src_ctx, int pos,
                             const ElemList& f_dom, const Elem& f,
                             const ElemList& fdom, const ElemList& fcod,
                             const Elem& arrow) const = 0;

  // permutation of the context, Ω(ctx) -> Ω(π·ctx)
  virtual Elem act_obj(const ElemList& ctx, const Perm& pi,
                       const Elem& obj) const = 0;
  virtual Elem act_arrow(const ElemList& ctx, const Perm& pi,
                         const ElemList& fdom, const ElemList& fcod,
                         const Elem& arrow) const = 0;

  // duality structure of the fiber, when available
  virtual std::optional<FiberDuality> fiber_dual(const ElemList& ctx,
                                                 const Elem& obj) const = 0;

  // enumeration hints
  virtual bool thin() const { return false; }     // poly-poset fibers
  virtual bool fd_like() const { return false; }  // Frobenius-discrete fibers
};

// Frobenius-discrete fibers over a Set-valued presheaf: an arrow is a single
// element with every boundary entry equal to it.
class FdPresheaf : public PshPolyOps {
public:
  explicit FdPresheaf(const SetPshOps& m) : m_(m) {}

  std::vector<Elem> fiber_hom(const ElemList& ctx, const ElemList& fdom,
                              const ElemList& fcod,
                              const WorkBudget& wb) const override;
  Elem fiber_identity(const ElemList& ctx, const Elem& obj) const override;
  Elem fiber_compose(const ElemList& ctx, const ElemList& gdom,
                     const ElemList& gcod, const Elem& g, int i,
                     const ElemList& fdom, const ElemList& fcod, const Elem& f,
                     int j) const override;
  Elem fiber_act(const ElemList& ctx, const ElemList& fdom,
                 const ElemList& fcod, const Elem& arrow, const Perm& rho,
                 const Perm& tau) const override;
  Elem reindex_obj(const ElemList& src_ctx, int pos, const ElemList& f_dom,
                   const Elem& f, const Elem& obj) const override;
  Elem reindex_arrow(const ElemList& src_ctx, int pos, const ElemList& f_dom,
                     const Elem& f, const ElemList& fdom, const ElemList& fcod,
                     const Elem& arrow) const override;
  Elem act_obj(const ElemList& ctx, const Perm& pi,
               const Elem& obj) const override;
  Elem act_arrow(const ElemList& ctx, const Perm& pi, const ElemList& fdom,
                 const ElemList& fcod, const Elem& arrow) const override;
  std::optional<FiberDuality> fiber_dual(const ElemList& ctx,
                                         const Elem& obj) const override;
  bool fd_like() const override { return true; }

  const SetPshOps& underlying() const { return m_; }

private:
  const SetPshOps& m_;
};

// A presheaf of categories: fiber category operations, lazily evaluated.
class CatPshOps {
public:
  virtual ~CatPshOps() = default;

  virtual std::vector<Elem> fiber_isos(const ElemList& ctx, const Elem& a,
                                       const Elem& b,
                                       const WorkBudget& wb) const = 0;
  virtual Elem fiber_id(const ElemList& ctx, const Elem& a) const = 0;
  // g: b -> c after f: a -> b
  virtual Elem fiber_compose(const ElemList& ctx, const Elem& a, const Elem& b,
                             const Elem& c, const Elem& g,
                             const Elem& f) const = 0;
  virtual Elem fiber_inverse(const ElemList& ctx, const Elem& a, const Elem& b,
                             const Elem& iso) const = 0;
  virtual Elem reindex_obj(const ElemList& src_ctx, int pos,
                           const ElemList& f_dom, const Elem& f,
                           const Elem& obj) const = 0;
  virtual Elem reindex_mor(const ElemList& src_ctx, int pos,
                           const ElemList& f_dom, const Elem& f, const Elem& a,
                           const Elem& b, const Elem& mor) const = 0;
  virtual Elem act_obj(const ElemList& ctx, const Perm& pi,
                       const Elem& obj) const = 0;
  virtual Elem act_mor(const ElemList& ctx, const Perm& pi, const Elem& a,
                       const Elem& b, const Elem& mor) const = 0;
};

// Frobenius pseudo-discrete fibers over a presheaf of categories: arrows are
// cliques, stored as full matrices of isomorphisms.
class FpdPresheaf : public PshPolyOps {
public:
  explicit FpdPresheaf(const CatPshOps& k) : k_(k) {}

  std::vector<Elem> fiber_hom(const ElemList& ctx, const ElemList& fdom,
                              const ElemList& fcod,
                              const WorkBudget& wb) const override;
  Elem fiber_identity(const ElemList& ctx, const Elem& obj) const override;
  Elem fiber_compose(const ElemList& ctx, const ElemList& gdom,
                     const ElemList& gcod, const Elem& g, int i,
                     const ElemList& fdom, const ElemList& fcod, const Elem& f,
                     int j) const override;
  Elem fiber_act(const ElemList& ctx, const ElemList& fdom,
                 const ElemList& fcod, const Elem& arrow, const Perm& rho,
                 const Perm& tau) const override;
  Elem reindex_obj(const ElemList& src_ctx, int pos, const ElemList& f_dom,
                   const Elem& f, const Elem& obj) const override;
  Elem reindex_arrow(const ElemList& src_ctx, int pos, const ElemList& f_dom,
                     const Elem& f, const ElemList& fdom, const ElemList& fcod,
                     const Elem& arrow) const override;
  Elem act_obj(const ElemList& ctx, const Perm& pi,
               const Elem& obj) const override;
  Elem act_arrow(const ElemList& ctx, const Perm& pi, const ElemList& fdom,
                 const ElemList& fcod, const Elem& arrow) const override;
  std::optional<FiberDuality> fiber_dual(const ElemList& ctx,
                                         const Elem& obj) const override;

  const CatPshOps& underlying() const { return k_; }

  // Cliques on a list of fiber objects, as full matrices.
  std::vector<Elem> cliques(const ElemList& ctx, const ElemList& carrier,
                            const WorkBudget& wb) const;

private:
  const CatPshOps& k_;
};

// A presheaf of categories whose fibers are explicit FinCategory tables,
// keyed by context (the JSON-facing form).
class TableCatPresheaf : public CatPshOps {
public:
  std::map<ElemList, FinCategory> fibers;
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
  // object map and morphism map of the reindexing functor
  std::map<ReindexKey, std::pair<std::map<Elem, Elem>, std::map<Elem, Elem>>>
      reindexes;
  std::map<std::pair<ElemList, int>,
           std::pair<std::map<Elem, Elem>, std::map<Elem, Elem>>>
      transpositions;

  const FinCategory& fiber(const ElemList& ctx) const;

  std::vector<Elem> fiber_isos(const ElemList& ctx, const Elem& a,
                               const Elem& b,
                               const WorkBudget& wb) const override;
  Elem fiber_id(const ElemList& ctx, const Elem& a) const override;
  Elem fiber_compose(const ElemList& ctx, const Elem& a, const Elem& b,
                     const Elem& c, const Elem& g, const Elem& f) const override;
  Elem fiber_inverse(const ElemList& ctx, const Elem& a, const Elem& b,
                     const Elem& iso) const override;
  Elem reindex_obj(const ElemList& src_ctx, int pos, const ElemList& f_dom,
                   const Elem& f, const Elem& obj) const override;
  Elem reindex_mor(const ElemList& src_ctx, int pos, const ElemList& f_dom,
                   const Elem& f, const Elem& a, const Elem& b,
                   const Elem& mor) const override;
  Elem act_obj(const ElemList& ctx, const Perm& pi,
               const Elem& obj) const override;
  Elem act_mor(const ElemList& ctx, const Perm& pi, const Elem& a,
               const Elem& b, const Elem& mor) const override;
};

}  // namespace polychu
