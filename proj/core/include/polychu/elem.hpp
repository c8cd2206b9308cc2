#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace polychu {

// Canonical immutable value used for object ids, arrow ids and structure
// elements. Everything that names a piece of a finite structure is an Elem,
// so identifiers are content-derived and orderings are reproducible.
class Elem {
public:
  using List = std::vector<Elem>;

  Elem() : v_(std::int64_t{0}) {}
  Elem(std::int64_t n) : v_(n) {}
  Elem(int n) : v_(std::int64_t{n}) {}
  Elem(std::string s) : v_(std::move(s)) {}
  Elem(const char* s) : v_(std::string(s)) {}
  Elem(List xs) : v_(std::move(xs)) {}

  bool is_int() const { return std::holds_alternative<std::int64_t>(v_); }
  bool is_str() const { return std::holds_alternative<std::string>(v_); }
  bool is_list() const { return std::holds_alternative<List>(v_); }

  std::int64_t as_int() const { return std::get<std::int64_t>(v_); }
  const std::string& as_str() const { return std::get<std::string>(v_); }
  const List& as_list() const { return std::get<List>(v_); }

  // Total order: ints < strings < lists, then by value. Keeps every
  // enumeration in the workbench deterministic.
  friend bool operator<(const Elem& a, const Elem& b);
  friend bool operator==(const Elem& a, const Elem& b);
  friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }
  friend bool operator>(const Elem& a, const Elem& b) { return b < a; }
  friend bool operator<=(const Elem& a, const Elem& b) { return !(b < a); }
  friend bool operator>=(const Elem& a, const Elem& b) { return !(a < b); }

  // Compact printable key, injective on Elems. Ints print as digits,
  // safe strings print bare, lists as [k1|k2|...].
  std::string key() const;
  static Elem parse_key(const std::string& s);

private:
  std::variant<std::int64_t, std::string, List> v_;
};

using ElemList = Elem::List;

std::string encode_list(const ElemList& xs, char sep);

}  // namespace polychu
