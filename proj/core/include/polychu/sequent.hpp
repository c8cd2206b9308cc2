#pragma once

#include <stdexcept>
#include <string>

#include "polychu/elem.hpp"
#include "polychu/perm.hpp"

namespace polychu {

// A sequent (Γ; Δ): ordered domain and codomain object lists.
struct Sequent {
  ElemList dom, cod;

  Sequent() = default;
  Sequent(ElemList d, ElemList c) : dom(std::move(d)), cod(std::move(c)) {}

  int arity() const { return static_cast<int>(dom.size() + cod.size()); }

  // Canonical encoding "A,B;C". Empty lists encode as empty strings.
  std::string key() const {
    return encode_list(dom, ',') + ";" + encode_list(cod, ',');
  }
  static Sequent parse(const std::string& s);

  Sequent permuted(const Perm& rho, const Perm& tau) const {
    return Sequent(rho.apply(dom), tau.apply(cod));
  }

  friend bool operator<(const Sequent& a, const Sequent& b) {
    if (a.dom != b.dom) return a.dom < b.dom;
    return a.cod < b.cod;
  }
  friend bool operator==(const Sequent& a, const Sequent& b) {
    return a.dom == b.dom && a.cod == b.cod;
  }
  friend bool operator!=(const Sequent& a, const Sequent& b) {
    return !(a == b);
  }
};

inline Sequent Sequent::parse(const std::string& s) {
  auto semi = s.find(';');
  if (semi == std::string::npos)
    throw std::runtime_error("sequent key lacks ';': " + s);
  auto split = [](const std::string& part) {
    ElemList xs;
    size_t i = 0;
    while (i < part.size()) {
      size_t j = part.find(',', i);
      if (j == std::string::npos) j = part.size();
      xs.push_back(Elem::parse_key(part.substr(i, j - i)));
      i = j + 1;
    }
    return xs;
  };
  return Sequent(split(s.substr(0, semi)), split(s.substr(semi + 1)));
}

// An arrow reference: its home sequent plus its id within that hom-set.
struct ArrowRef {
  Sequent home;
  Elem id;

  friend bool operator<(const ArrowRef& a, const ArrowRef& b) {
    if (!(a.home == b.home)) return a.home < b.home;
    return a.id < b.id;
  }
  friend bool operator==(const ArrowRef& a, const ArrowRef& b) {
    return a.home == b.home && a.id == b.id;
  }
};

}  // namespace polychu
