#include "recirc/identity/roles.hpp"

namespace recirc::identity {

std::string_view role_name(Role r) {
  switch (r) {
    case Role::Prosumer: return "prosumer";
    case Role::Manufacturer: return "manufacturer";
    case Role::Utility: return "utility";
    case Role::Recycler: return "recycler";
    case Role::Refurbisher: return "refurbisher";
    case Role::Regulator: return "regulator";
  }
  return "unknown";
}

std::optional<Role> role_from_name(std::string_view name) {
  if (name == "prosumer") return Role::Prosumer;
  if (name == "manufacturer") return Role::Manufacturer;
  if (name == "utility") return Role::Utility;
  if (name == "recycler") return Role::Recycler;
  if (name == "refurbisher") return Role::Refurbisher;
  if (name == "regulator") return Role::Regulator;
  return std::nullopt;
}

std::string_view node_class_name(NodeClass c) {
  return c == NodeClass::Full ? "full" : "light";
}

std::optional<NodeClass> node_class_from_name(std::string_view name) {
  if (name == "full") return NodeClass::Full;
  if (name == "light") return NodeClass::Light;
  return std::nullopt;
}

NodeClass default_node_class(Role r) {
  switch (r) {
    case Role::Manufacturer:
    case Role::Utility:
    case Role::Recycler:
    case Role::Regulator:
      return NodeClass::Full;
    case Role::Prosumer:
    case Role::Refurbisher:
      return NodeClass::Light;
  }
  return NodeClass::Light;
}

bool node_class_allowed(Role r, NodeClass c) {
  if (c == NodeClass::Light) return true;
  return default_node_class(r) == NodeClass::Full;
}

}  // namespace recirc::identity
