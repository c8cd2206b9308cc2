#pragma once

#include <map>
#include <optional>
#include <vector>

#include "polychu/elem.hpp"
#include "polychu/report.hpp"

namespace polychu {

// A finite category as explicit tables. Morphism ids are unique across the
// whole category; composition is stored as (g, f) -> g∘f with src(g)=tgt(f).
struct FinCategory {
  Elem name;
  ElemList objects;
  struct Mor {
    Elem id, src, tgt;
    friend bool operator<(const Mor& a, const Mor& b) { return a.id < b.id; }
  };
  std::vector<Mor> morphisms;  // sorted by id
  std::map<std::pair<Elem, Elem>, Elem> comp;  // (g,f) -> g after f
  std::map<Elem, Elem> ids;                    // object -> identity

  const Mor& mor(const Elem& id) const;
  bool has_object(const Elem& o) const;
  Elem compose(const Elem& g, const Elem& f) const;
  Elem identity(const Elem& o) const { return ids.at(o); }
  std::vector<Elem> hom(const Elem& a, const Elem& b) const;
  std::optional<Elem> inverse(const Elem& m) const;
  std::vector<Elem> isos(const Elem& a, const Elem& b) const;
  bool thin() const;  // at most one morphism per hom-set

  Report validate() const;
};

FinCategory opposite(const FinCategory& a);

// Product of finitely many categories; objects and morphisms are tuples.
// The empty product is the terminal category.
FinCategory product(const std::vector<const FinCategory*>& factors);

struct Functor {
  Elem dom, cod;  // category names
  std::map<Elem, Elem> on_obj;
  std::map<Elem, Elem> on_mor;

  Elem obj(const Elem& o) const { return on_obj.at(o); }
  Elem mor(const Elem& m) const { return on_mor.at(m); }
  Elem key() const;  // canonical content id

  friend bool operator<(const Functor& a, const Functor& b);
  friend bool operator==(const Functor& a, const Functor& b);
};

Functor identity_functor(const FinCategory& a);
Functor compose_functors(const FinCategory& a, const Functor& g,
                         const Functor& f);  // g after f
bool functor_ok(const FinCategory& a, const FinCategory& b, const Functor& f);
std::vector<Functor> enumerate_functors(const FinCategory& a,
                                        const FinCategory& b,
                                        long long cap = 2000000);

struct NatTrans {
  std::map<Elem, Elem> component;  // object of dom -> morphism of cod

  Elem at(const Elem& o) const { return component.at(o); }
  Elem key() const;
  friend bool operator==(const NatTrans& a, const NatTrans& b) {
    return a.component == b.component;
  }
  friend bool operator<(const NatTrans& a, const NatTrans& b) {
    return a.component < b.component;
  }
};

bool naturality_ok(const FinCategory& a, const FinCategory& b,
                   const Functor& f, const Functor& g, const NatTrans& t);
std::vector<NatTrans> enumerate_nat_trans(const FinCategory& a,
                                          const FinCategory& b,
                                          const Functor& f, const Functor& g,
                                          long long cap = 2000000);

// Small stock categories used across tests and demos.
FinCategory chain_poset(int n, const std::string& name);  // 0 < 1 < ... < n-1
FinCategory walking_iso(const std::string& name);
FinCategory cyclic_group_cat(int n, const std::string& name);  // B(Z/n)
FinCategory discrete_cat(const ElemList& objects, const std::string& name);
FinCategory parallel_pair(const std::string& name);  // two parallel arrows

}  // namespace polychu
