#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "recirc/identity/roles.hpp"
#include "recirc/ledger/tx.hpp"

namespace recirc::ledger {

struct BlockHeader {
  Digest parent_hash;  // digest of the parent block's header; zero for genesis
  Digest merkle_root;  // over the body's tx ids
  uint64_t timestamp = 0;  // simulation tick, not wall clock
  uint64_t height = 0;
  std::string validator;
  Signature validator_signature;

  // What the validator signs: every header field except the signature.
  Digest signing_digest() const;
  // What children link to: the full header including the signature.
  Digest digest() const;
};

struct Block {
  BlockHeader header;
  std::vector<Transaction> body;

  std::vector<Digest> tx_ids() const;
};

// Fixed genesis: all-zero parent, empty body, timestamp 0, no validator.
Block genesis_block();

// Minimal ledger-side identity view, reconstructible from the chain itself:
// public keys and roles come from committed registration transactions, so an
// exported chain can be re-verified offline.
class KeyBook {
 public:
  void add(const std::string& actor_id, const PublicKey& pk, identity::Role role,
           identity::NodeClass node_class);
  void absorb(const Transaction& tx);  // picks up registrations, ignores the rest

  const PublicKey* find_key(const std::string& actor_id) const;
  bool is_validator(const std::string& actor_id) const;  // full node
  bool has_role(const std::string& actor_id, identity::Role role) const;
  bool known(const std::string& actor_id) const;

 private:
  struct Entry {
    PublicKey key;
    identity::Role role;
    identity::NodeClass node_class;
  };
  std::map<std::string, Entry> entries_;
};

// Structural validity of a single transaction under the ledger rule set:
// consistent id, verifiable author signature, author key known (registration
// is self-certifying), balance postings only from utility-role authors.
// Returns an empty string when valid, otherwise a reason.
std::string check_transaction(const Transaction& tx, const KeyBook& keys,
                              SignatureCache* cache = nullptr);

}  // namespace recirc::ledger
