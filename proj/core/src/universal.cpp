#include "polychu/universal.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace polychu {

std::string kind_name(UniversalKind k) {
  switch (k) {
    case UniversalKind::kTensor: return "tensor";
    case UniversalKind::kUnit: return "unit";
    case UniversalKind::kCotensor: return "cotensor";
    case UniversalKind::kCounit: return "counit";
    case UniversalKind::kDual: return "dual";
    case UniversalKind::kStrongHom: return "strong-hom";
    case UniversalKind::kWeakHom: return "weak-hom";
  }
  return "?";
}

std::optional<UniversalKind> kind_from_name(const std::string& s) {
  for (UniversalKind k :
       {UniversalKind::kTensor, UniversalKind::kUnit, UniversalKind::kCotensor,
        UniversalKind::kCounit, UniversalKind::kDual, UniversalKind::kStrongHom,
        UniversalKind::kWeakHom})
    if (kind_name(k) == s) return k;
  return std::nullopt;
}

namespace {

struct FrameCheck {
  const PolyView& p;
  const WorkBudget& wb;

  // Verifies that h ↦ image(h) is a bijection hom(src) -> hom(dst).
  CheckOutcome run(const std::vector<std::pair<Sequent, Sequent>>& pairs,
                   const std::function<std::optional<Elem>(
                       const Sequent&, const Elem&, const Sequent&)>& image) {
    for (const auto& [src_seq, dst_seq] : pairs) {
      try {
        std::vector<Elem> src = p.hom(src_seq);
        std::vector<Elem> dst = p.hom(dst_seq);
        wb.charge_hom(static_cast<long long>(src.size()));
        wb.charge_hom(static_cast<long long>(dst.size()));
        std::set<Elem> remaining(dst.begin(), dst.end());
        if (src.size() != dst.size()) {
          return {Verdict::kNo, "size mismatch at frame " + src_seq.key() +
                                    " vs " + dst_seq.key()};
        }
        for (const Elem& h : src) {
          std::optional<Elem> img = image(src_seq, h, dst_seq);
          if (!img) return {Verdict::kNo, "map undefined at " + src_seq.key()};
          auto it = remaining.find(*img);
          if (it == remaining.end())
            return {Verdict::kNo, "not injective/surjective at frame " +
                                      src_seq.key() + " arrow " + h.key()};
          remaining.erase(it);
        }
        if (!remaining.empty())
          return {Verdict::kNo, "not surjective at frame " + src_seq.key()};
      } catch (const TooLarge& e) {
        return {Verdict::kInconclusive,
                std::string(e.what()) + " at frame " + src_seq.key()};
      }
    }
    return {Verdict::kYes, ""};
  }
};

Sequent with_appended_dom(const Sequent& frame, const ElemList& objs) {
  Sequent s = frame;
  for (const Elem& o : objs) s.dom.push_back(o);
  return s;
}

Sequent with_prepended_cod(const Sequent& frame, const ElemList& objs) {
  Sequent s = frame;
  ElemList cod;
  cod.insert(cod.end(), objs.begin(), objs.end());
  cod.insert(cod.end(), frame.cod.begin(), frame.cod.end());
  s.cod = std::move(cod);
  return s;
}

}  // namespace

CheckOutcome is_tensor(const PolyView& p, const Elem& a, const Elem& b,
                       const Elem& t, const Elem& u, const WorkBudget& wb) {
  // u ∈ P(A,B;T); precomposition P(Γ,T;Δ) -> P(Γ,A,B;Δ) must be bijective.
  Sequent uhome({a, b}, {t});
  std::vector<std::pair<Sequent, Sequent>> pairs;
  for (const Sequent& f : frame_sequents(p.objects(), p.budget(), 2))
    pairs.push_back({with_appended_dom(f, {t}), with_appended_dom(f, {a, b})});
  FrameCheck fc{p, wb};
  return fc.run(pairs, [&](const Sequent& src, const Elem& h,
                           const Sequent&) -> std::optional<Elem> {
    int i = static_cast<int>(src.dom.size()) - 1;
    ComposeResult r = p.compose(src, h, i, uhome, u, 0);
    if (!r.ok()) return std::nullopt;
    return r.arrow;
  });
}

CheckOutcome is_unit(const PolyView& p, const Elem& t, const Elem& u,
                     const WorkBudget& wb, bool positive_only) {
  Sequent uhome({}, {t});
  std::vector<std::pair<Sequent, Sequent>> pairs;
  for (const Sequent& f : frame_sequents(p.objects(), p.budget(), 1)) {
    if (positive_only && f.arity() == 0) continue;
    pairs.push_back({with_appended_dom(f, {t}), f});
  }
  FrameCheck fc{p, wb};
  return fc.run(pairs, [&](const Sequent& src, const Elem& h,
                           const Sequent&) -> std::optional<Elem> {
    int i = static_cast<int>(src.dom.size()) - 1;
    ComposeResult r = p.compose(src, h, i, uhome, u, 0);
    if (!r.ok()) return std::nullopt;
    return r.arrow;
  });
}

CheckOutcome is_cotensor(const PolyView& p, const Elem& a, const Elem& b,
                         const Elem& t, const Elem& u, const WorkBudget& wb) {
  // u ∈ P(T;A,B); postcomposition P(Γ;T,Δ) -> P(Γ;A,B,Δ).
  Sequent uhome({t}, {a, b});
  std::vector<std::pair<Sequent, Sequent>> pairs;
  for (const Sequent& f : frame_sequents(p.objects(), p.budget(), 2))
    pairs.push_back(
        {with_prepended_cod(f, {t}), with_prepended_cod(f, {a, b})});
  FrameCheck fc{p, wb};
  return fc.run(pairs, [&](const Sequent& src, const Elem& h,
                           const Sequent&) -> std::optional<Elem> {
    ComposeResult r = p.compose(uhome, u, 0, src, h, 0);
    if (!r.ok()) return std::nullopt;
    return r.arrow;
  });
}

CheckOutcome is_counit(const PolyView& p, const Elem& t, const Elem& u,
                       const WorkBudget& wb, bool positive_only) {
  Sequent uhome({t}, {});
  std::vector<std::pair<Sequent, Sequent>> pairs;
  for (const Sequent& f : frame_sequents(p.objects(), p.budget(), 1)) {
    if (positive_only && f.arity() == 0) continue;
    pairs.push_back({with_prepended_cod(f, {t}), f});
  }
  FrameCheck fc{p, wb};
  return fc.run(pairs, [&](const Sequent& src, const Elem& h,
                           const Sequent&) -> std::optional<Elem> {
    ComposeResult r = p.compose(uhome, u, 0, src, h, 0);
    if (!r.ok()) return std::nullopt;
    return r.arrow;
  });
}

CheckOutcome is_dual(const PolyView& p, const Elem& a, const Elem& b,
                     const ArrowRef& eta, const ArrowRef& eps) {
  // η ∈ P(;A,B), ε ∈ P(B,A;): ε∘_A η = 1_B and ε∘_B η = 1_A.
  Sequent eta_home({}, {a, b});
  Sequent eps_home({b, a}, {});
  if (!(eta.home == eta_home))
    return {Verdict::kNo, "eta not at (;A,B)"};
  if (!(eps.home == eps_home))
    return {Verdict::kNo, "eps not at (B,A;)"};
  ComposeResult t1 = p.compose(eps_home, eps.id, 1, eta_home, eta.id, 0);
  if (!t1.ok() || !(t1.arrow == p.identity(b)))
    return {Verdict::kNo, "eps ∘_A eta != 1 on " + b.key()};
  ComposeResult t2 = p.compose(eps_home, eps.id, 0, eta_home, eta.id, 1);
  if (!t2.ok() || !(t2.arrow == p.identity(a)))
    return {Verdict::kNo, "eps ∘_A• eta != 1 on " + a.key()};
  return {Verdict::kYes, ""};
}

CheckOutcome is_hom(const PolyView& p, const Elem& a, const Elem& b,
                    const Elem& h, const Elem& e, bool strong,
                    const WorkBudget& wb) {
  // e ∈ P(H,A;B); P(Γ;Δ,H) -> P(Γ,A;Δ,B); weak homs only need Δ = ∅.
  Sequent ehome({h, a}, {b});
  std::vector<std::pair<Sequent, Sequent>> pairs;
  for (const Sequent& f : frame_sequents(p.objects(), p.budget(), 2)) {
    if (!strong && !f.cod.empty()) continue;
    Sequent src = f;
    src.cod.push_back(h);
    Sequent dst = f;
    dst.dom.push_back(a);
    dst.cod.push_back(b);
    pairs.push_back({src, dst});
  }
  FrameCheck fc{p, wb};
  return fc.run(pairs, [&](const Sequent& src, const Elem& x,
                           const Sequent&) -> std::optional<Elem> {
    int j = static_cast<int>(src.cod.size()) - 1;
    ComposeResult r = p.compose(ehome, e, 0, src, x, j);
    if (!r.ok()) return std::nullopt;
    return r.arrow;
  });
}

namespace {

SearchResult search_binary(const PolyView& p, UniversalKind kind,
                           const Elem& a, const Elem& b, const WorkBudget& wb) {
  SearchResult res;
  bool saw_inconclusive = false;
  for (const Elem& t : p.objects()) {
    Sequent home = kind == UniversalKind::kTensor ? Sequent({a, b}, {t})
                                                  : Sequent({t}, {a, b});
    std::vector<Elem> us;
    try {
      us = p.hom(home);
    } catch (const TooLarge&) {
      saw_inconclusive = true;
      continue;
    }
    for (const Elem& u : us) {
      CheckOutcome c = kind == UniversalKind::kTensor
                           ? is_tensor(p, a, b, t, u, wb)
                           : is_cotensor(p, a, b, t, u, wb);
      if (c.verdict == Verdict::kYes) {
        res.verdict = Verdict::kYes;
        res.witness = UniversalWitness{kind, t, ArrowRef{home, u}, {}};
        if (saw_inconclusive)
          res.detail = "earlier candidates were inconclusive";
        return res;
      }
      if (c.verdict == Verdict::kInconclusive) saw_inconclusive = true;
    }
  }
  res.verdict = saw_inconclusive ? Verdict::kInconclusive : Verdict::kNo;
  res.detail = saw_inconclusive ? "search hit work caps" : "exhaustive search";
  return res;
}

SearchResult search_nullary(const PolyView& p, UniversalKind kind,
                            const WorkBudget& wb) {
  SearchResult res;
  bool saw_inconclusive = false;
  for (const Elem& t : p.objects()) {
    Sequent home = kind == UniversalKind::kUnit ? Sequent({}, {t})
                                                : Sequent({t}, {});
    std::vector<Elem> us;
    try {
      us = p.hom(home);
    } catch (const TooLarge&) {
      saw_inconclusive = true;
      continue;
    }
    for (const Elem& u : us) {
      CheckOutcome c = kind == UniversalKind::kUnit
                           ? is_unit(p, t, u, wb)
                           : is_counit(p, t, u, wb);
      if (c.verdict == Verdict::kYes) {
        res.verdict = Verdict::kYes;
        res.witness = UniversalWitness{kind, t, ArrowRef{home, u}, {}};
        return res;
      }
      if (c.verdict == Verdict::kInconclusive) saw_inconclusive = true;
    }
  }
  res.verdict = saw_inconclusive ? Verdict::kInconclusive : Verdict::kNo;
  res.detail = saw_inconclusive ? "search hit work caps" : "exhaustive search";
  return res;
}

}  // namespace

SearchResult find_tensor(const PolyView& p, const Elem& a, const Elem& b,
                         const WorkBudget& wb) {
  return search_binary(p, UniversalKind::kTensor, a, b, wb);
}

SearchResult find_cotensor(const PolyView& p, const Elem& a, const Elem& b,
                           const WorkBudget& wb) {
  return search_binary(p, UniversalKind::kCotensor, a, b, wb);
}

SearchResult find_unit(const PolyView& p, const WorkBudget& wb) {
  return search_nullary(p, UniversalKind::kUnit, wb);
}

SearchResult find_counit(const PolyView& p, const WorkBudget& wb) {
  return search_nullary(p, UniversalKind::kCounit, wb);
}

SearchResult find_dual(const PolyView& p, const Elem& a, const WorkBudget& wb) {
  SearchResult res;
  bool saw_inconclusive = false;
  for (const Elem& b : p.objects()) {
    Sequent eta_home({}, {a, b});
    Sequent eps_home({b, a}, {});
    std::vector<Elem> etas, epss;
    try {
      etas = p.hom(eta_home);
      epss = p.hom(eps_home);
    } catch (const TooLarge&) {
      saw_inconclusive = true;
      continue;
    }
    for (const Elem& eta : etas)
      for (const Elem& eps : epss) {
        CheckOutcome c = is_dual(p, a, b, ArrowRef{eta_home, eta},
                                 ArrowRef{eps_home, eps});
        if (c.verdict == Verdict::kYes) {
          res.verdict = Verdict::kYes;
          res.duality = DualityWitness{a, b, ArrowRef{eta_home, eta},
                                       ArrowRef{eps_home, eps}};
          return res;
        }
      }
  }
  res.verdict = saw_inconclusive ? Verdict::kInconclusive : Verdict::kNo;
  res.detail = saw_inconclusive ? "search hit work caps" : "exhaustive search";
  return res;
}

SearchResult find_hom(const PolyView& p, const Elem& a, const Elem& b,
                      bool strong, const WorkBudget& wb) {
  SearchResult res;
  bool saw_inconclusive = false;
  for (const Elem& h : p.objects()) {
    Sequent home({h, a}, {b});
    std::vector<Elem> es;
    try {
      es = p.hom(home);
    } catch (const TooLarge&) {
      saw_inconclusive = true;
      continue;
    }
    for (const Elem& e : es) {
      CheckOutcome c = is_hom(p, a, b, h, e, strong, wb);
      if (c.verdict == Verdict::kYes) {
        res.verdict = Verdict::kYes;
        res.witness = UniversalWitness{
            strong ? UniversalKind::kStrongHom : UniversalKind::kWeakHom, h,
            ArrowRef{home, e}, {}};
        return res;
      }
      if (c.verdict == Verdict::kInconclusive) saw_inconclusive = true;
    }
  }
  res.verdict = saw_inconclusive ? Verdict::kInconclusive : Verdict::kNo;
  res.detail = saw_inconclusive ? "search hit work caps" : "exhaustive search";
  return res;
}

}  // namespace polychu
