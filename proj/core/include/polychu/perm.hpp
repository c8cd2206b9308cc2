#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "polychu/elem.hpp"

namespace polychu {

// Permutation of {0..n-1} in the "destination" convention: the entry at
// position i of the source list moves to position to[i] of the target list,
// i.e. apply(p, xs)[p.to[i]] = xs[i].
struct Perm {
  std::vector<int> to;

  Perm() = default;
  explicit Perm(std::vector<int> t) : to(std::move(t)) {}

  static Perm identity(int n);
  static Perm transposition(int n, int i);  // swaps positions i, i+1

  int size() const { return static_cast<int>(to.size()); }
  bool is_identity() const;
  Perm inverse() const;

  // q.after(p): first p, then q (sizes must agree).
  Perm after(const Perm& p) const;

  template <typename T>
  std::vector<T> apply(const std::vector<T>& xs) const {
    std::vector<T> out(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) out[to[i]] = xs[i];
    return out;
  }

  // Factorization p = t_k ∘ ... ∘ t_1 into adjacent transpositions,
  // returned in application order (apply indices[0] first).
  std::vector<int> adjacent_factorization() const;

  std::string key() const;
  friend bool operator==(const Perm& a, const Perm& b) { return a.to == b.to; }
  friend bool operator<(const Perm& a, const Perm& b) { return a.to < b.to; }
};

// All permutations of size n in lexicographic order of their `to` vector.
std::vector<Perm> all_perms(int n);

// The permutation sending the source label list to the target label list.
// Labels must be unique and target must be a rearrangement of source.
Perm provenance_perm(const ElemList& source, const ElemList& target);

// Substitutes blocks into an outer permutation: outer permutes n slots, slot i
// carrying block_sizes[i] positions and an inner permutation inners[i]. The
// result acts on the concatenation of the blocks the way "outer with each
// slot treated as a block, then inners inside each block" does.
Perm block_subst(const Perm& outer, const std::vector<int>& block_sizes,
                 const std::vector<Perm>& inners);

}  // namespace polychu
