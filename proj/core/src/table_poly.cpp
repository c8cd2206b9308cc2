#include "polychu/table_poly.hpp"

#include <algorithm>

namespace polychu {

std::vector<Sequent> all_sequents(const ElemList& objects, int budget) {
  return frame_sequents(objects, budget, 0);
}

std::vector<Sequent> frame_sequents(const ElemList& objects, int budget,
                                    int extra_arity) {
  std::vector<Sequent> out;
  int limit = budget - extra_arity;
  if (limit < 0) return out;
  // tuples of a given length over `objects`, lexicographic
  auto tuples = [&](int len) {
    std::vector<ElemList> res;
    res.push_back({});
    for (int k = 0; k < len; ++k) {
      std::vector<ElemList> next;
      for (const auto& t : res)
        for (const Elem& o : objects) {
          ElemList u = t;
          u.push_back(o);
          next.push_back(std::move(u));
        }
      res = std::move(next);
    }
    return res;
  };
  for (int total = 0; total <= limit; ++total) {
    for (int m = 0; m <= total; ++m) {
      int n = total - m;
      for (const auto& d : tuples(m))
        for (const auto& c : tuples(n)) out.emplace_back(d, c);
    }
  }
  return out;
}

CutShape cut_shape(const Sequent& gs, int i, const Sequent& fs, int j) {
  CutShape sh;
  auto label = [](const char* tag, int side, int idx) {
    return Elem(ElemList{Elem(tag), Elem(side), Elem(idx)});
  };
  // domain: Λ1, Γ, Λ2  (dom(g) with position i replaced by dom(f))
  for (int k = 0; k < i; ++k) {
    sh.result.dom.push_back(gs.dom[k]);
    sh.dom_labels.push_back(label("g", 0, k));
  }
  for (size_t k = 0; k < fs.dom.size(); ++k) {
    sh.result.dom.push_back(fs.dom[k]);
    sh.dom_labels.push_back(label("f", 0, static_cast<int>(k)));
  }
  for (size_t k = i + 1; k < gs.dom.size(); ++k) {
    sh.result.dom.push_back(gs.dom[k]);
    sh.dom_labels.push_back(label("g", 0, static_cast<int>(k)));
  }
  // codomain: Δ1, Σ, Δ2  (cod(f) with position j replaced by cod(g))
  for (int k = 0; k < j; ++k) {
    sh.result.cod.push_back(fs.cod[k]);
    sh.cod_labels.push_back(label("f", 1, k));
  }
  for (size_t k = 0; k < gs.cod.size(); ++k) {
    sh.result.cod.push_back(gs.cod[k]);
    sh.cod_labels.push_back(label("g", 1, static_cast<int>(k)));
  }
  for (size_t k = j + 1; k < fs.cod.size(); ++k) {
    sh.result.cod.push_back(fs.cod[k]);
    sh.cod_labels.push_back(label("f", 1, static_cast<int>(k)));
  }
  return sh;
}

std::vector<Elem> TablePoly::hom(const Sequent& s) const {
  auto it = homs.find(s);
  if (it == homs.end()) return {};
  return it->second;
}

Elem TablePoly::identity(const Elem& object) const {
  auto it = identities.find(object);
  if (it == identities.end())
    throw std::runtime_error("no identity for object " + object.key());
  return it->second;
}

bool TablePoly::has_arrow(const Sequent& s, const Elem& id) const {
  auto it = homs.find(s);
  if (it == homs.end()) return false;
  return std::binary_search(it->second.begin(), it->second.end(), id);
}

void TablePoly::add_arrow(const Sequent& s, const Elem& id) {
  auto& v = homs[s];
  auto it = std::lower_bound(v.begin(), v.end(), id);
  if (it == v.end() || !(*it == id)) v.insert(it, id);
}

Elem TablePoly::act_gen(const Sequent& s, const ActionGen& g,
                        const Elem& f) const {
  auto it = action.find({s, g});
  if (it == action.end())
    throw std::runtime_error("missing action table at " + s.key() + " " +
                             g.key());
  auto jt = it->second.find(f);
  if (jt == it->second.end())
    throw std::runtime_error("action table at " + s.key() + " " + g.key() +
                             " lacks arrow " + f.key());
  return jt->second;
}

Elem TablePoly::act(const Sequent& s, const Elem& f, const Perm& rho,
                    const Perm& tau) const {
  if (rho.size() != static_cast<int>(s.dom.size()) ||
      tau.size() != static_cast<int>(s.cod.size()))
    throw std::invalid_argument("act: permutation sized to the wrong sequent");
  Sequent cur = s;
  Elem arrow = f;
  for (int idx : rho.adjacent_factorization()) {
    arrow = act_gen(cur, ActionGen{0, idx}, arrow);
    std::swap(cur.dom[idx], cur.dom[idx + 1]);
  }
  for (int idx : tau.adjacent_factorization()) {
    arrow = act_gen(cur, ActionGen{1, idx}, arrow);
    std::swap(cur.cod[idx], cur.cod[idx + 1]);
  }
  return arrow;
}

ComposeResult TablePoly::compose(const Sequent& gs, const Elem& g, int i,
                                 const Sequent& fs, const Elem& f,
                                 int j) const {
  ComposeResult r;
  if (i < 0 || i >= static_cast<int>(gs.dom.size()) || j < 0 ||
      j >= static_cast<int>(fs.cod.size()) || !(gs.dom[i] == fs.cod[j])) {
    r.status = ComposeStatus::kCutMismatch;
    return r;
  }
  CutShape sh = cut_shape(gs, i, fs, j);
  if (sh.result.arity() > arity_budget) {
    r.status = ComposeStatus::kTruncated;
    return r;
  }
  auto it = composition.find({gs, g, i, fs, f, j});
  if (it == composition.end()) {
    r.status = ComposeStatus::kMissing;
    return r;
  }
  r.arrow = it->second;
  return r;
}

TablePoly TablePoly::restricted(int new_budget) const {
  TablePoly q;
  q.object_list = object_list;
  q.arity_budget = new_budget;
  q.identities = identities;
  for (const auto& [s, v] : homs)
    if (s.arity() <= new_budget) q.homs[s] = v;
  for (const auto& [k, m] : action)
    if (k.first.arity() <= new_budget) q.action[k] = m;
  for (const auto& [k, r] : composition) {
    if (k.gs.arity() > new_budget || k.fs.arity() > new_budget) continue;
    if (cut_shape(k.gs, k.i, k.fs, k.j).result.arity() > new_budget) continue;
    q.composition[k] = r;
  }
  return q;
}

TablePoly TablePoly::restricted_to_objects(const ElemList& keep) const {
  std::set<Elem> ok(keep.begin(), keep.end());
  auto seq_ok = [&](const Sequent& s) {
    for (const Elem& o : s.dom)
      if (!ok.count(o)) return false;
    for (const Elem& o : s.cod)
      if (!ok.count(o)) return false;
    return true;
  };
  TablePoly q;
  q.arity_budget = arity_budget;
  for (const Elem& o : object_list)
    if (ok.count(o)) q.object_list.push_back(o);
  for (const auto& [o, id] : identities)
    if (ok.count(o)) q.identities[o] = id;
  for (const auto& [s, v] : homs)
    if (seq_ok(s)) q.homs[s] = v;
  for (const auto& [k, m] : action)
    if (seq_ok(k.first)) q.action[k] = m;
  for (const auto& [k, r] : composition)
    if (seq_ok(k.gs) && seq_ok(k.fs)) q.composition[k] = r;
  return q;
}

std::optional<Sequent> TablePoly::co_unary_witness() const {
  for (const auto& [s, v] : homs)
    if (!v.empty() && s.cod.size() != 1) return s;
  return std::nullopt;
}

TablePoly materialize(const PolyView& view, const WorkBudget& wb) {
  TablePoly t;
  t.object_list = view.objects();
  std::sort(t.object_list.begin(), t.object_list.end());
  t.arity_budget = view.budget();
  for (const Sequent& s : all_sequents(t.object_list, t.arity_budget)) {
    std::vector<Elem> arrows = view.hom(s);
    wb.charge_hom(static_cast<long long>(arrows.size()));
    if (!arrows.empty()) {
      std::sort(arrows.begin(), arrows.end());
      t.homs[s] = std::move(arrows);
    }
  }
  for (const Elem& o : t.object_list) t.identities[o] = view.identity(o);
  // action tables on generators
  for (const auto& [s, arrows] : t.homs) {
    int m = static_cast<int>(s.dom.size());
    int n = static_cast<int>(s.cod.size());
    for (int side = 0; side < 2; ++side) {
      int len = side == 0 ? m : n;
      for (int idx = 0; idx + 1 < len; ++idx) {
        ActionGen gen{side, idx};
        Perm rho = side == 0 ? Perm::transposition(m, idx) : Perm::identity(m);
        Perm tau = side == 1 ? Perm::transposition(n, idx) : Perm::identity(n);
        std::map<Elem, Elem> table;
        for (const Elem& a : arrows) table[a] = view.act(s, a, rho, tau);
        t.action[{s, gen}] = std::move(table);
      }
    }
  }
  // composition over all in-budget cuts
  for (const auto& [gs, gv] : t.homs) {
    for (const auto& [fs, fv] : t.homs) {
      for (int i = 0; i < static_cast<int>(gs.dom.size()); ++i) {
        for (int j = 0; j < static_cast<int>(fs.cod.size()); ++j) {
          if (!(gs.dom[i] == fs.cod[j])) continue;
          if (cut_shape(gs, i, fs, j).result.arity() > t.arity_budget)
            continue;
          for (const Elem& g : gv)
            for (const Elem& f : fv) {
              ComposeResult r = view.compose(gs, g, i, fs, f, j);
              if (!r.ok())
                throw std::runtime_error(
                    "materialize: construction failed to compose at " +
                    gs.key() + " x " + fs.key());
              t.composition[{gs, g, i, fs, f, j}] = r.arrow;
            }
        }
      }
    }
  }
  return t;
}

}  // namespace polychu
