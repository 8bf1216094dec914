#pragma once
// Variable registry: a frozen, ordered list of named variables shared by all
// polynomials of one equation system.
//
// Reserved names follow the chart conventions:
//   m            meridian eigenvalue (unit: never vanishes on the variety)
//   v(i,L/R)     diagonal label of edge i on a side (unit)
//   u(i,L/R)     off-diagonal label of edge i on a side
//   w(j)         crossing unit w_j = c_j^2 (unit)
//   x, z         character-variety coordinates (trace coordinates)
//   L, M         longitude / meridian eigenvalues for elimination
//
// "Unit" variables may carry negative exponents (Laurent directions); the
// remaining variables must stay polynomial.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "knotrep/common.hpp"

namespace knotrep {

class VarRegistry {
 public:
  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int idx) const { return names_.at(idx); }
  bool is_unit(int idx) const { return unit_.at(idx); }
  // Returns -1 when the name is unknown.
  int find(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
  }
  int index_of(const std::string& name) const;  // throws input_error if absent

  static std::string v_name(int edge, Side s);
  static std::string u_name(int edge, Side s);
  static std::string w_name(int crossing);

 private:
  friend class VarRegistryBuilder;
  std::vector<std::string> names_;
  std::vector<bool> unit_;
  std::map<std::string, int> index_;
};

using RegistryPtr = std::shared_ptr<const VarRegistry>;

class VarRegistryBuilder {
 public:
  // Returns the index of the new (or existing, if names match) variable.
  int add(const std::string& name, bool unit);
  RegistryPtr finalize();

 private:
  VarRegistry reg_;
};

// Convenience: registry over plain polynomial variables (tests, standalone
// elimination fixtures).
RegistryPtr make_simple_registry(const std::vector<std::string>& names,
                                 const std::vector<std::string>& units = {});

}  // namespace knotrep
