#pragma once

#include <span>
#include <vector>

#include "recirc/ledger/digest.hpp"

namespace recirc::ledger {

// Binary Merkle tree over transaction ids. An odd node at any level is
// paired with itself; the empty list maps to the all-zero digest. A single
// leaf therefore hashes with itself rather than passing through.
Digest compute_merkle_root(std::span<const Digest> tx_ids);

}  // namespace recirc::ledger
