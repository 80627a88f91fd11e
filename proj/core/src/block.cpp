#include "recirc/ledger/block.hpp"

namespace recirc::ledger {

Digest BlockHeader::signing_digest() const {
  CanonicalWriter w;
  w.digest(parent_hash);
  w.digest(merkle_root);
  w.u64(timestamp);
  w.u64(height);
  w.str(validator);
  return w.sha256();
}

Digest BlockHeader::digest() const {
  CanonicalWriter w;
  w.digest(parent_hash);
  w.digest(merkle_root);
  w.u64(timestamp);
  w.u64(height);
  w.str(validator);
  w.bytes(std::span<const uint8_t>(validator_signature.bytes.data(),
                                   validator_signature.bytes.size()));
  return w.sha256();
}

std::vector<Digest> Block::tx_ids() const {
  std::vector<Digest> ids;
  ids.reserve(body.size());
  for (const auto& tx : body) ids.push_back(tx.tx_id);
  return ids;
}

Block genesis_block() {
  Block g;
  g.header.parent_hash = Digest::zero();
  g.header.merkle_root = Digest::zero();
  g.header.timestamp = 0;
  g.header.height = 0;
  return g;
}

void KeyBook::add(const std::string& actor_id, const PublicKey& pk, identity::Role role,
                  identity::NodeClass node_class) {
  entries_[actor_id] = Entry{pk, role, node_class};
}

void KeyBook::absorb(const Transaction& tx) {
  if (tx.kind != TxKind::Registration) return;
  const auto& reg = std::get<RegistrationPayload>(tx.payload);
  add(reg.actor_id, reg.public_key, reg.role, reg.node_class);
}

const PublicKey* KeyBook::find_key(const std::string& actor_id) const {
  auto it = entries_.find(actor_id);
  return it == entries_.end() ? nullptr : &it->second.key;
}

bool KeyBook::is_validator(const std::string& actor_id) const {
  auto it = entries_.find(actor_id);
  return it != entries_.end() && it->second.node_class == identity::NodeClass::Full;
}

bool KeyBook::has_role(const std::string& actor_id, identity::Role role) const {
  auto it = entries_.find(actor_id);
  return it != entries_.end() && it->second.role == role;
}

bool KeyBook::known(const std::string& actor_id) const {
  return entries_.contains(actor_id);
}

std::string check_transaction(const Transaction& tx, const KeyBook& keys,
                              SignatureCache* cache) {
  if (!tx.id_consistent()) return "tx_id does not match canonical serialization";

  const PublicKey* pk = nullptr;
  if (tx.kind == TxKind::Registration) {
    const auto& reg = std::get<RegistrationPayload>(tx.payload);
    if (reg.actor_id != tx.author) return "registration author differs from actor_id";
    pk = &reg.public_key;  // self-certifying
  } else {
    pk = keys.find_key(tx.author);
    if (!pk) return "author has no registered key: " + tx.author;
  }

  bool ok = cache ? cache->verify(*pk, tx.tx_id, tx.signature)
                  : verify_digest(*pk, tx.tx_id, tx.signature);
  if (!ok) return "signature does not verify under author key";

  if (tx.kind == TxKind::BalancePosting &&
      !keys.has_role(tx.author, identity::Role::Utility)) {
    return "balance posting from non-utility author";
  }
  return {};
}

}  // namespace recirc::ledger
