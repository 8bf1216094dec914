#include "knotrep/varreg.hpp"

#include <algorithm>

namespace knotrep {

Budget& global_budget() {
  static Budget b;
  return b;
}

int VarRegistry::index_of(const std::string& name) const {
  int idx = find(name);
  if (idx < 0) throw input_error("unknown variable: " + name);
  return idx;
}

std::string VarRegistry::v_name(int edge, Side s) {
  return "v(" + std::to_string(edge) + "," + side_char(s) + ")";
}
std::string VarRegistry::u_name(int edge, Side s) {
  return "u(" + std::to_string(edge) + "," + side_char(s) + ")";
}
std::string VarRegistry::w_name(int crossing) {
  return "w(" + std::to_string(crossing) + ")";
}

int VarRegistryBuilder::add(const std::string& name, bool unit) {
  auto it = reg_.index_.find(name);
  if (it != reg_.index_.end()) {
    if (reg_.unit_[it->second] != unit)
      throw input_error("variable re-registered with different unit flag: " + name);
    return it->second;
  }
  int idx = static_cast<int>(reg_.names_.size());
  reg_.names_.push_back(name);
  reg_.unit_.push_back(unit);
  reg_.index_[name] = idx;
  return idx;
}

RegistryPtr VarRegistryBuilder::finalize() {
  return std::make_shared<const VarRegistry>(std::move(reg_));
}

RegistryPtr make_simple_registry(const std::vector<std::string>& names,
                                 const std::vector<std::string>& units) {
  VarRegistryBuilder b;
  for (const auto& n : names) {
    bool unit = std::find(units.begin(), units.end(), n) != units.end();
    b.add(n, unit);
  }
  return b.finalize();
}

}  // namespace knotrep
