#pragma once

#include <map>
#include <string>
#include <vector>

namespace polychu {

// One finding of a validation pass. `axiom` carries the verbatim identifier
// ("Eq.(3)", "structural", "action-braid", ...) and `witness` the concrete
// offending data, both as flat string maps so reports serialize canonically.
struct Finding {
  std::string axiom;
  std::string message;
  std::map<std::string, std::string> witness;

  friend bool operator<(const Finding& a, const Finding& b) {
    if (a.axiom != b.axiom) return a.axiom < b.axiom;
    if (a.message != b.message) return a.message < b.message;
    return a.witness < b.witness;
  }
  friend bool operator==(const Finding& a, const Finding& b) {
    return a.axiom == b.axiom && a.message == b.message &&
           a.witness == b.witness;
  }
};

struct Report {
  std::vector<Finding> structural;
  std::vector<Finding> violations;
  std::vector<std::string> truncations;  // "verified up to budget K" notes

  bool ok() const { return structural.empty() && violations.empty(); }
  bool structurally_ok() const { return structural.empty(); }

  void add_structural(std::string axiom, std::string msg,
                      std::map<std::string, std::string> w = {}) {
    structural.push_back({std::move(axiom), std::move(msg), std::move(w)});
  }
  void add_violation(std::string axiom, std::string msg,
                     std::map<std::string, std::string> w = {}) {
    violations.push_back({std::move(axiom), std::move(msg), std::move(w)});
  }
  void note(std::string s) { truncations.push_back(std::move(s)); }

  void absorb(const Report& r) {
    structural.insert(structural.end(), r.structural.begin(),
                      r.structural.end());
    violations.insert(violations.end(), r.violations.begin(),
                      r.violations.end());
    truncations.insert(truncations.end(), r.truncations.begin(),
                       r.truncations.end());
  }

  // Canonical form: findings sorted, duplicates removed.
  void normalize();
};

enum class CheckLevel {
  // Equivariance checked on generator tuples only; full coverage follows
  // from functoriality of the actions, which is checked separately.
  kGenerators,
  // Equivariance checked on every permutation tuple that type-checks.
  kFull,
};

}  // namespace polychu
