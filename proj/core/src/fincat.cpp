#include "polychu/fincat.hpp"

#include <algorithm>
#include <stdexcept>

namespace polychu {

const FinCategory::Mor& FinCategory::mor(const Elem& id) const {
  auto it = std::lower_bound(morphisms.begin(), morphisms.end(),
                             Mor{id, Elem(), Elem()});
  if (it == morphisms.end() || !(it->id == id))
    throw std::runtime_error("unknown morphism " + id.key() + " in " +
                             name.key());
  return *it;
}

bool FinCategory::has_object(const Elem& o) const {
  for (const Elem& x : objects)
    if (x == o) return true;
  return false;
}

Elem FinCategory::compose(const Elem& g, const Elem& f) const {
  auto it = comp.find({g, f});
  if (it == comp.end())
    throw std::runtime_error("composition undefined: " + g.key() + " after " +
                             f.key() + " in " + name.key());
  return it->second;
}

std::vector<Elem> FinCategory::hom(const Elem& a, const Elem& b) const {
  std::vector<Elem> out;
  for (const Mor& m : morphisms)
    if (m.src == a && m.tgt == b) out.push_back(m.id);
  return out;
}

std::optional<Elem> FinCategory::inverse(const Elem& m) const {
  const Mor& mm = mor(m);
  for (const Elem& cand : hom(mm.tgt, mm.src)) {
    if (compose(cand, m) == ids.at(mm.src) &&
        compose(m, cand) == ids.at(mm.tgt))
      return cand;
  }
  return std::nullopt;
}

std::vector<Elem> FinCategory::isos(const Elem& a, const Elem& b) const {
  std::vector<Elem> out;
  for (const Elem& m : hom(a, b))
    if (inverse(m)) out.push_back(m);
  return out;
}

bool FinCategory::thin() const {
  for (const Elem& a : objects)
    for (const Elem& b : objects)
      if (hom(a, b).size() > 1) return false;
  return true;
}

Report FinCategory::validate() const {
  Report rep;
  for (const Mor& m : morphisms) {
    if (!has_object(m.src) || !has_object(m.tgt))
      rep.add_structural("structural", "morphism with dangling endpoint",
                         {{"morphism", m.id.key()}});
  }
  for (const Elem& o : objects) {
    auto it = ids.find(o);
    if (it == ids.end()) {
      rep.add_structural("structural", "missing identity",
                         {{"object", o.key()}});
      continue;
    }
    const Mor& m = mor(it->second);
    if (!(m.src == o) || !(m.tgt == o))
      rep.add_structural("structural", "identity with wrong endpoints",
                         {{"object", o.key()}});
  }
  if (!rep.structural.empty()) {
    rep.normalize();
    return rep;
  }
  for (const Mor& g : morphisms)
    for (const Mor& f : morphisms) {
      bool composable = f.tgt == g.src;
      auto it = comp.find({g.id, f.id});
      if (composable && it == comp.end())
        rep.add_structural("structural", "composition table not total",
                           {{"g", g.id.key()}, {"f", f.id.key()}});
      if (!composable && it != comp.end())
        rep.add_structural("structural", "composition of non-composable pair",
                           {{"g", g.id.key()}, {"f", f.id.key()}});
      if (composable && it != comp.end()) {
        const Mor& r = mor(it->second);
        if (!(r.src == f.src) || !(r.tgt == g.tgt))
          rep.add_structural("structural", "composite with wrong endpoints",
                             {{"g", g.id.key()}, {"f", f.id.key()}});
      }
    }
  if (!rep.structural.empty()) {
    rep.normalize();
    return rep;
  }
  for (const Mor& f : morphisms) {
    if (!(compose(ids.at(f.tgt), f.id) == f.id))
      rep.add_violation("category-id", "left identity fails",
                        {{"morphism", f.id.key()}});
    if (!(compose(f.id, ids.at(f.src)) == f.id))
      rep.add_violation("category-id", "right identity fails",
                        {{"morphism", f.id.key()}});
  }
  for (const Mor& h : morphisms)
    for (const Mor& g : morphisms) {
      if (!(g.tgt == h.src)) continue;
      for (const Mor& f : morphisms) {
        if (!(f.tgt == g.src)) continue;
        if (!(compose(compose(h.id, g.id), f.id) ==
              compose(h.id, compose(g.id, f.id))))
          rep.add_violation("category-assoc", "associativity fails",
                            {{"h", h.id.key()},
                             {"g", g.id.key()},
                             {"f", f.id.key()}});
      }
    }
  rep.normalize();
  return rep;
}

FinCategory opposite(const FinCategory& a) {
  FinCategory b;
  b.name = Elem(ElemList{Elem("op"), a.name});
  b.objects = a.objects;
  for (const auto& m : a.morphisms) b.morphisms.push_back({m.id, m.tgt, m.src});
  std::sort(b.morphisms.begin(), b.morphisms.end());
  for (const auto& [gf, r] : a.comp) b.comp[{gf.second, gf.first}] = r;
  b.ids = a.ids;
  return b;
}

FinCategory product(const std::vector<const FinCategory*>& factors) {
  FinCategory p;
  ElemList names;
  for (const auto* f : factors) names.push_back(f->name);
  p.name = Elem(ElemList{Elem("prod"), Elem(names)});
  // objects and morphisms are tuples, built in lexicographic order
  std::vector<ElemList> objs{{}};
  for (const auto* f : factors) {
    std::vector<ElemList> next;
    for (const auto& t : objs)
      for (const Elem& o : f->objects) {
        ElemList u = t;
        u.push_back(o);
        next.push_back(std::move(u));
      }
    objs = std::move(next);
  }
  for (const auto& t : objs) p.objects.push_back(Elem(t));
  std::vector<ElemList> mors{{}};
  for (const auto* f : factors) {
    std::vector<ElemList> next;
    for (const auto& t : mors)
      for (const auto& m : f->morphisms) {
        ElemList u = t;
        u.push_back(m.id);
        next.push_back(std::move(u));
      }
    mors = std::move(next);
  }
  for (const auto& t : mors) {
    ElemList src, tgt;
    for (size_t k = 0; k < t.size(); ++k) {
      const auto& m = factors[k]->mor(t[k]);
      src.push_back(m.src);
      tgt.push_back(m.tgt);
    }
    p.morphisms.push_back({Elem(t), Elem(src), Elem(tgt)});
  }
  std::sort(p.morphisms.begin(), p.morphisms.end());
  for (const auto& g : p.morphisms)
    for (const auto& f : p.morphisms) {
      if (!(f.tgt == g.src)) continue;
      ElemList r;
      const ElemList& gs = g.id.as_list();
      const ElemList& fs = f.id.as_list();
      bool ok = true;
      for (size_t k = 0; k < gs.size(); ++k) {
        auto it = factors[k]->comp.find({gs[k], fs[k]});
        if (it == factors[k]->comp.end()) {
          ok = false;
          break;
        }
        r.push_back(it->second);
      }
      if (ok) p.comp[{g.id, f.id}] = Elem(r);
    }
  for (const Elem& o : p.objects) {
    ElemList id;
    const ElemList& t = o.as_list();
    for (size_t k = 0; k < t.size(); ++k)
      id.push_back(factors[k]->ids.at(t[k]));
    p.ids[o] = Elem(id);
  }
  return p;
}

Elem Functor::key() const {
  ElemList o, m;
  for (const auto& [a, b] : on_obj) o.push_back(Elem(ElemList{a, b}));
  for (const auto& [a, b] : on_mor) m.push_back(Elem(ElemList{a, b}));
  return Elem(ElemList{Elem(o), Elem(m)});
}

bool operator<(const Functor& a, const Functor& b) {
  if (!(a.on_obj == b.on_obj)) return a.on_obj < b.on_obj;
  return a.on_mor < b.on_mor;
}
bool operator==(const Functor& a, const Functor& b) {
  return a.on_obj == b.on_obj && a.on_mor == b.on_mor;
}

Functor identity_functor(const FinCategory& a) {
  Functor f;
  f.dom = f.cod = a.name;
  for (const Elem& o : a.objects) f.on_obj[o] = o;
  for (const auto& m : a.morphisms) f.on_mor[m.id] = m.id;
  return f;
}

Functor compose_functors(const FinCategory& a, const Functor& g,
                         const Functor& f) {
  Functor r;
  r.dom = f.dom;
  r.cod = g.cod;
  for (const Elem& o : a.objects) r.on_obj[o] = g.obj(f.obj(o));
  for (const auto& m : a.morphisms) r.on_mor[m.id] = g.mor(f.mor(m.id));
  return r;
}

bool functor_ok(const FinCategory& a, const FinCategory& b, const Functor& f) {
  for (const Elem& o : a.objects) {
    auto it = f.on_obj.find(o);
    if (it == f.on_obj.end() || !b.has_object(it->second)) return false;
  }
  for (const auto& m : a.morphisms) {
    auto it = f.on_mor.find(m.id);
    if (it == f.on_mor.end()) return false;
    const auto& im = b.mor(it->second);
    if (!(im.src == f.obj(m.src)) || !(im.tgt == f.obj(m.tgt))) return false;
  }
  for (const Elem& o : a.objects)
    if (!(f.mor(a.ids.at(o)) == b.ids.at(f.obj(o)))) return false;
  for (const auto& g : a.morphisms)
    for (const auto& h : a.morphisms) {
      if (!(h.tgt == g.src)) continue;
      if (!(f.mor(a.compose(g.id, h.id)) ==
            b.compose(f.mor(g.id), f.mor(h.id))))
        return false;
    }
  return true;
}

namespace {

// Depth-first assignment of morphism images with functoriality pruning.
void enumerate_mor_maps(const FinCategory& a, const FinCategory& b,
                        Functor& partial, size_t next, long long cap,
                        std::vector<Functor>& out) {
  if (static_cast<long long>(out.size()) > cap)
    throw std::runtime_error("functor enumeration exceeded cap");
  if (next == a.morphisms.size()) {
    if (functor_ok(a, b, partial)) out.push_back(partial);
    return;
  }
  const auto& m = a.morphisms[next];
  // identities are forced
  if (m.id == a.ids.at(m.src) && m.src == m.tgt) {
    partial.on_mor[m.id] = b.ids.at(partial.obj(m.src));
    enumerate_mor_maps(a, b, partial, next + 1, cap, out);
    partial.on_mor.erase(m.id);
    return;
  }
  for (const Elem& cand :
       b.hom(partial.obj(m.src), partial.obj(m.tgt))) {
    partial.on_mor[m.id] = cand;
    // prune: any already-assigned composite must match
    bool ok = true;
    for (const auto& g : a.morphisms) {
      auto git = partial.on_mor.find(g.id);
      if (git == partial.on_mor.end()) continue;
      if (g.src == m.tgt) {
        auto rit = partial.on_mor.find(a.compose(g.id, m.id));
        if (rit != partial.on_mor.end() &&
            !(b.compose(git->second, cand) == rit->second))
          ok = false;
      }
      if (m.src == g.tgt) {
        auto rit = partial.on_mor.find(a.compose(m.id, g.id));
        if (rit != partial.on_mor.end() &&
            !(b.compose(cand, git->second) == rit->second))
          ok = false;
      }
      if (!ok) break;
    }
    if (ok) enumerate_mor_maps(a, b, partial, next + 1, cap, out);
    partial.on_mor.erase(m.id);
  }
}

}  // namespace

std::vector<Functor> enumerate_functors(const FinCategory& a,
                                        const FinCategory& b,
                                        long long cap) {
  std::vector<Functor> out;
  size_t nobj = a.objects.size();
  std::vector<size_t> choice(nobj, 0);
  if (b.objects.empty() && nobj > 0) return out;
  while (true) {
    Functor f;
    f.dom = a.name;
    f.cod = b.name;
    for (size_t k = 0; k < nobj; ++k)
      f.on_obj[a.objects[k]] = b.objects[choice[k]];
    enumerate_mor_maps(a, b, f, 0, cap, out);
    // next object assignment
    size_t k = 0;
    while (k < nobj) {
      if (++choice[k] < b.objects.size()) break;
      choice[k] = 0;
      ++k;
    }
    if (k == nobj) break;
    if (nobj == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Elem NatTrans::key() const {
  ElemList xs;
  for (const auto& [o, m] : component) xs.push_back(Elem(ElemList{o, m}));
  return Elem(xs);
}

bool naturality_ok(const FinCategory& a, const FinCategory& b,
                   const Functor& f, const Functor& g, const NatTrans& t) {
  for (const Elem& o : a.objects) {
    auto it = t.component.find(o);
    if (it == t.component.end()) return false;
    const auto& m = b.mor(it->second);
    if (!(m.src == f.obj(o)) || !(m.tgt == g.obj(o))) return false;
  }
  for (const auto& m : a.morphisms) {
    if (!(b.compose(g.mor(m.id), t.at(m.src)) ==
          b.compose(t.at(m.tgt), f.mor(m.id))))
      return false;
  }
  return true;
}

std::vector<NatTrans> enumerate_nat_trans(const FinCategory& a,
                                          const FinCategory& b,
                                          const Functor& f, const Functor& g,
                                          long long cap) {
  std::vector<NatTrans> out;
  std::vector<std::vector<Elem>> cands;
  for (const Elem& o : a.objects) cands.push_back(b.hom(f.obj(o), g.obj(o)));
  long long total = 1;
  for (const auto& c : cands) {
    total *= static_cast<long long>(c.size());
    if (total == 0) return out;
    if (total > cap) throw std::runtime_error("nat-trans enumeration cap");
  }
  std::vector<size_t> idx(cands.size(), 0);
  while (true) {
    NatTrans t;
    for (size_t k = 0; k < cands.size(); ++k)
      t.component[a.objects[k]] = cands[k][idx[k]];
    if (naturality_ok(a, b, f, g, t)) out.push_back(t);
    size_t k = 0;
    while (k < idx.size()) {
      if (++idx[k] < cands[k].size()) break;
      idx[k] = 0;
      ++k;
    }
    if (k == idx.size()) break;
    if (idx.empty()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

FinCategory chain_poset(int n, const std::string& name) {
  FinCategory c;
  c.name = Elem(name);
  for (int i = 0; i < n; ++i) c.objects.push_back(Elem(i));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Elem id(ElemList{Elem("le"), Elem(i), Elem(j)});
      c.morphisms.push_back({id, Elem(i), Elem(j)});
      if (i == j) c.ids[Elem(i)] = id;
    }
  std::sort(c.morphisms.begin(), c.morphisms.end());
  for (const auto& g : c.morphisms)
    for (const auto& f : c.morphisms)
      if (f.tgt == g.src) {
        const ElemList& gt = g.id.as_list();
        const ElemList& ft = f.id.as_list();
        c.comp[{g.id, f.id}] =
            Elem(ElemList{Elem("le"), ft[1], gt[2]});
      }
  return c;
}

FinCategory walking_iso(const std::string& name) {
  FinCategory c;
  c.name = Elem(name);
  c.objects = {Elem("x"), Elem("y")};
  auto m = [](const char* s) { return Elem(s); };
  c.morphisms = {{m("1x"), Elem("x"), Elem("x")},
                 {m("1y"), Elem("y"), Elem("y")},
                 {m("i"), Elem("x"), Elem("y")},
                 {m("j"), Elem("y"), Elem("x")}};
  std::sort(c.morphisms.begin(), c.morphisms.end());
  c.ids[Elem("x")] = m("1x");
  c.ids[Elem("y")] = m("1y");
  auto& cp = c.comp;
  cp[{m("1x"), m("1x")}] = m("1x");
  cp[{m("1y"), m("1y")}] = m("1y");
  cp[{m("i"), m("1x")}] = m("i");
  cp[{m("1y"), m("i")}] = m("i");
  cp[{m("j"), m("1y")}] = m("j");
  cp[{m("1x"), m("j")}] = m("j");
  cp[{m("j"), m("i")}] = m("1x");
  cp[{m("i"), m("j")}] = m("1y");
  return c;
}

FinCategory cyclic_group_cat(int n, const std::string& name) {
  FinCategory c;
  c.name = Elem(name);
  c.objects = {Elem("*")};
  for (int k = 0; k < n; ++k) {
    Elem id(ElemList{Elem("g"), Elem(k)});
    c.morphisms.push_back({id, Elem("*"), Elem("*")});
    if (k == 0) c.ids[Elem("*")] = id;
  }
  std::sort(c.morphisms.begin(), c.morphisms.end());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      c.comp[{Elem(ElemList{Elem("g"), Elem(a)}),
              Elem(ElemList{Elem("g"), Elem(b)})}] =
          Elem(ElemList{Elem("g"), Elem((a + b) % n)});
  return c;
}

FinCategory discrete_cat(const ElemList& objects, const std::string& name) {
  FinCategory c;
  c.name = Elem(name);
  c.objects = objects;
  for (const Elem& o : objects) {
    Elem id(ElemList{Elem("id"), o});
    c.morphisms.push_back({id, o, o});
    c.ids[o] = id;
    c.comp[{id, id}] = id;
  }
  std::sort(c.morphisms.begin(), c.morphisms.end());
  return c;
}

FinCategory parallel_pair(const std::string& name) {
  FinCategory c;
  c.name = Elem(name);
  c.objects = {Elem("a"), Elem("b")};
  auto m = [](const char* s) { return Elem(s); };
  c.morphisms = {{m("1a"), Elem("a"), Elem("a")},
                 {m("1b"), Elem("b"), Elem("b")},
                 {m("u"), Elem("a"), Elem("b")},
                 {m("v"), Elem("a"), Elem("b")}};
  std::sort(c.morphisms.begin(), c.morphisms.end());
  c.ids[Elem("a")] = m("1a");
  c.ids[Elem("b")] = m("1b");
  auto& cp = c.comp;
  cp[{m("1a"), m("1a")}] = m("1a");
  cp[{m("1b"), m("1b")}] = m("1b");
  cp[{m("u"), m("1a")}] = m("u");
  cp[{m("1b"), m("u")}] = m("u");
  cp[{m("v"), m("1a")}] = m("v");
  cp[{m("1b"), m("v")}] = m("v");
  return c;
}

}  // namespace polychu
