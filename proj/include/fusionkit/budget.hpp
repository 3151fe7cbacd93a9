#pragma once

// Resource caps for the enumeration-heavy parts of the engine.  Every
// exhaustive search (subgroup enumeration, morphism closure, injective-hom
// backtracking) consults these limits and throws BudgetError instead of
// running away.  The FUSIONKIT_BUDGET environment variable overrides the
// defaults: either a single integer (group order cap) or a comma list of
// key=value pairs with keys group, subgroups, morphisms, homsearch.

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace fusionkit {

struct Budget {
  long group_order = 4096;        // max |S| for subgroup enumeration
  long subgroup_count = 200000;   // max subgroups collected per group
  long morphism_count = 2000000;  // max stored morphisms per fusion system
  long hom_search_nodes = 50000000; // max backtracking nodes per hom search
};

class BudgetError : public std::runtime_error {
public:
  std::string kind;
  long actual = 0;
  long cap = 0;
  BudgetError(const std::string& k, long a, long c)
      : std::runtime_error("budget exceeded: " + k + " needs " +
                           std::to_string(a) + " but cap is " +
                           std::to_string(c)),
        kind(k), actual(a), cap(c) {}
};

// violated precondition on otherwise well-formed input (e.g. quotient by a
// subgroup that is not strongly closed); the CLI maps this to a usage error
// rather than a failed check
class PreconditionError : public std::runtime_error {
public:
  explicit PreconditionError(const std::string& what)
      : std::runtime_error(what) {}
};

namespace detail {
inline Budget parse_budget_env(const char* raw) {
  Budget b;
  if (!raw || !*raw) return b;
  std::string s(raw);
  auto set_key = [&](const std::string& key, long v) {
    if (key == "group") b.group_order = v;
    else if (key == "subgroups") b.subgroup_count = v;
    else if (key == "morphisms") b.morphism_count = v;
    else if (key == "homsearch") b.hom_search_nodes = v;
  };
  if (s.find('=') == std::string::npos) {
    try { b.group_order = std::stol(s); } catch (...) {}
    return b;
  }
  size_t pos = 0;
  while (pos < s.size()) {
    size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    std::string item = s.substr(pos, comma - pos);
    size_t eq = item.find('=');
    if (eq != std::string::npos) {
      try { set_key(item.substr(0, eq), std::stol(item.substr(eq + 1))); }
      catch (...) {}
    }
    pos = comma + 1;
  }
  return b;
}
} // namespace detail

inline Budget& budget() {
  static Budget b = detail::parse_budget_env(std::getenv("FUSIONKIT_BUDGET"));
  return b;
}

inline void require_budget(const char* kind, long actual, long cap) {
  if (actual > cap) throw BudgetError(kind, actual, cap);
}

} // namespace fusionkit
