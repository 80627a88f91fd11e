#include "recirc/ledger/merkle.hpp"

namespace recirc::ledger {

Digest compute_merkle_root(std::span<const Digest> tx_ids) {
  if (tx_ids.empty()) return Digest::zero();
  std::vector<Digest> level(tx_ids.begin(), tx_ids.end());
  do {
    std::vector<Digest> next;
    next.reserve((level.size() + 1) / 2);
    for (size_t i = 0; i < level.size(); i += 2) {
      const Digest& left = level[i];
      const Digest& right = (i + 1 < level.size()) ? level[i + 1] : level[i];
      next.push_back(sha256_concat(left, right));
    }
    level = std::move(next);
  } while (level.size() > 1);
  return level[0];
}

}  // namespace recirc::ledger
