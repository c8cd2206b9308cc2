#include "polychu/perm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace polychu {

Perm Perm::identity(int n) {
  std::vector<int> t(n);
  std::iota(t.begin(), t.end(), 0);
  return Perm(std::move(t));
}

Perm Perm::transposition(int n, int i) {
  Perm p = identity(n);
  if (i < 0 || i + 1 >= n) throw std::out_of_range("transposition index");
  std::swap(p.to[i], p.to[i + 1]);
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (to[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm r;
  r.to.assign(to.size(), 0);
  for (int i = 0; i < size(); ++i) r.to[to[i]] = i;
  return r;
}

Perm Perm::after(const Perm& p) const {
  if (size() != p.size()) throw std::invalid_argument("perm size mismatch");
  Perm r;
  r.to.resize(to.size());
  for (int i = 0; i < size(); ++i) r.to[i] = to[p.to[i]];
  return r;
}

std::vector<int> Perm::adjacent_factorization() const {
  // Bubble the target arrangement back to sorted order; reversing that
  // sequence builds this permutation out of adjacent swaps.
  std::vector<int> arrangement = inverse().to;  // arrangement[j] = source index
  std::vector<int> swaps;
  int n = size();
  for (int pass = 0; pass < n; ++pass) {
    bool moved = false;
    for (int j = 0; j + 1 < n; ++j) {
      if (arrangement[j] > arrangement[j + 1]) {
        std::swap(arrangement[j], arrangement[j + 1]);
        swaps.push_back(j);
        moved = true;
      }
    }
    if (!moved) break;
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

std::string Perm::key() const {
  std::string s = "(";
  for (size_t i = 0; i < to.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(to[i]);
  }
  s += ')';
  return s;
}

std::vector<Perm> all_perms(int n) {
  std::vector<int> t(n);
  std::iota(t.begin(), t.end(), 0);
  std::vector<Perm> out;
  do {
    out.push_back(Perm(t));
  } while (std::next_permutation(t.begin(), t.end()));
  return out;
}

Perm provenance_perm(const ElemList& source, const ElemList& target) {
  if (source.size() != target.size())
    throw std::invalid_argument("provenance_perm: size mismatch");
  std::map<Elem, int> where;
  for (size_t j = 0; j < target.size(); ++j) {
    if (!where.emplace(target[j], static_cast<int>(j)).second)
      throw std::invalid_argument("provenance_perm: duplicate target label " +
                                  target[j].key());
  }
  Perm p;
  p.to.resize(source.size());
  for (size_t i = 0; i < source.size(); ++i) {
    auto it = where.find(source[i]);
    if (it == where.end())
      throw std::invalid_argument("provenance_perm: unmatched label " +
                                  source[i].key());
    p.to[i] = it->second;
    where.erase(it);
  }
  return p;
}

Perm block_subst(const Perm& outer, const std::vector<int>& block_sizes,
                 const std::vector<Perm>& inners) {
  int n = outer.size();
  if (static_cast<int>(block_sizes.size()) != n ||
      static_cast<int>(inners.size()) != n)
    throw std::invalid_argument("block_subst: arity mismatch");
  std::vector<int> src_off(n, 0), dst_off(n, 0);
  int total = 0;
  for (int i = 0; i < n; ++i) {
    src_off[i] = total;
    total += block_sizes[i];
  }
  // Destination offset of block i is determined by the blocks landing
  // before position outer.to[i].
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return outer.to[a] < outer.to[b]; });
  int acc = 0;
  for (int slot : order) {
    dst_off[slot] = acc;
    acc += block_sizes[slot];
  }
  Perm r;
  r.to.assign(total, 0);
  for (int i = 0; i < n; ++i) {
    const Perm& inner = inners[i];
    if (inner.size() != block_sizes[i])
      throw std::invalid_argument("block_subst: inner size mismatch");
    for (int k = 0; k < block_sizes[i]; ++k)
      r.to[src_off[i] + k] = dst_off[i] + inner.to[k];
  }
  return r;
}

}  // namespace polychu
