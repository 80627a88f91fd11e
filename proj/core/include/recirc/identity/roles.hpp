#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace recirc::identity {

enum class Role { Prosumer, Manufacturer, Utility, Recycler, Refurbisher, Regulator };

// Full nodes store the chain and may propose blocks; light nodes only
// create transactions.
enum class NodeClass { Full, Light };

std::string_view role_name(Role r);
std::optional<Role> role_from_name(std::string_view name);

std::string_view node_class_name(NodeClass c);
std::optional<NodeClass> node_class_from_name(std::string_view name);

// Consortium members run full nodes; prosumers and refurbishers are light.
NodeClass default_node_class(Role r);
bool node_class_allowed(Role r, NodeClass c);

}  // namespace recirc::identity
