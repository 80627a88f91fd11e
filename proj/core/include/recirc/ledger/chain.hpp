#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "recirc/common/error.hpp"
#include "recirc/ledger/block.hpp"
#include "recirc/ledger/merkle.hpp"

namespace recirc::ledger {

struct AppendResult {
  bool ok = false;
  Errc error{};
  std::string detail;
};

enum class IntegrityIssue {
  BadGenesis,
  BrokenParentLink,
  MerkleMismatch,
  TxIdMismatch,
  BadTxSignature,
  UnknownAuthor,
  BadValidatorSignature,
  NotAValidatorBlock,
  CorruptAncestor,
};

std::string_view integrity_issue_name(IntegrityIssue i);

struct IntegrityFinding {
  uint64_t height = 0;
  Digest block_id;
  IntegrityIssue issue{};
  // index of the offending tx within the body, or npos for header findings
  size_t tx_index = static_cast<size_t>(-1);
  std::string detail;
};

struct IntegrityReport {
  std::vector<IntegrityFinding> findings;
  bool clean() const { return findings.empty(); }
};

// Append-only block store with fork bookkeeping. One logical writer; committed
// blocks are immutable values.
class Chain {
 public:
  Chain();

  const Block& genesis() const { return entries_.front().block; }

  // Assembles and signs a block extending `parent`. Validates the proposer
  // and every transaction; rejects transactions already committed on the
  // branch ending at `parent`. Throws Error on violation.
  Block create_block(const Digest& parent_id, std::vector<Transaction> txs,
                     const std::string& validator, const SecretKey& validator_key,
                     uint64_t timestamp, const KeyBook& keys,
                     SignatureCache* cache = nullptr) const;

  // Full verification, then append to the tip it extends. On failure the
  // chain is unchanged and the result names the violated rule. Forks are
  // recorded as additional tips in arrival order.
  AppendResult validate_and_append(Block block, const KeyBook& keys,
                                   SignatureCache* cache = nullptr);

  // Longest-chain rule, ties broken by earliest-received tip.
  Digest resolve_fork() const;

  const std::vector<Digest>& tips() const { return tips_; }
  uint64_t height() const;  // height of the canonical head
  size_t block_count() const { return entries_.size(); }

  const Block* find_block(const Digest& block_id) const;
  bool tx_committed(const Digest& tx_id) const;  // anywhere in the store

  // Genesis..head along the canonical branch.
  std::vector<const Block*> canonical_blocks() const;

  // Verifies every stored block (all branches). Blocks whose ancestors carry
  // findings are additionally flagged as corrupt-by-descent.
  IntegrityReport verify_integrity(SignatureCache* cache = nullptr) const;

 private:
  struct Entry {
    Block block;
    Digest id;
    size_t parent_index;
  };

  const Entry* find_entry(const Digest& id) const;

  std::vector<Entry> entries_;  // arrival order, genesis first
  std::unordered_map<Digest, size_t, DigestHasher> by_id_;
  std::vector<Digest> tips_;  // arrival order
  std::unordered_set<Digest, DigestHasher> all_tx_ids_;
};

// Structural verification of an exported height-ordered block sequence.
// Builds the key book from the registrations it encounters, so a bare file
// is self-verifying. Used by the audit pipeline and tamper tests.
IntegrityReport verify_blocks(std::span<const Block> blocks,
                              SignatureCache* cache = nullptr);

}  // namespace recirc::ledger
