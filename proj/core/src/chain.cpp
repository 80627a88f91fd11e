#include "recirc/ledger/chain.hpp"

#include <algorithm>

namespace recirc::ledger {

namespace {
constexpr size_t kNoParent = static_cast<size_t>(-1);
constexpr size_t kHeaderFinding = static_cast<size_t>(-1);

bool verify_sig(const PublicKey& pk, const Digest& msg, const Signature& sig,
                SignatureCache* cache) {
  return cache ? cache->verify(pk, msg, sig) : verify_digest(pk, msg, sig);
}

// Per-transaction integrity findings, fine-grained so audits can name the
// exact failure. Registrations are absorbed by the caller after the check.
void check_tx_integrity(const Transaction& tx, size_t index, uint64_t height,
                        const Digest& block_id, const KeyBook& keys,
                        SignatureCache* cache, std::vector<IntegrityFinding>& out) {
  if (!tx.id_consistent()) {
    out.push_back({height, block_id, IntegrityIssue::TxIdMismatch, index,
                   "tx_id does not match canonical serialization"});
  }
  const PublicKey* pk = nullptr;
  if (tx.kind == TxKind::Registration) {
    pk = &std::get<RegistrationPayload>(tx.payload).public_key;
  } else {
    pk = keys.find_key(tx.author);
  }
  if (!pk) {
    out.push_back({height, block_id, IntegrityIssue::UnknownAuthor, index,
                   "no registered key for author " + tx.author});
    return;
  }
  if (!verify_sig(*pk, tx.tx_id, tx.signature, cache)) {
    out.push_back({height, block_id, IntegrityIssue::BadTxSignature, index,
                   "signature fails under author key"});
  }
}

// Header-level checks common to the in-memory store and exported sequences.
void check_block_integrity(const Block& block, const Digest& recomputed_parent,
                           uint64_t parent_height, const KeyBook& keys,
                           SignatureCache* cache, std::vector<IntegrityFinding>& out) {
  const Digest id = block.header.digest();
  const uint64_t h = block.header.height;

  if (block.header.parent_hash != recomputed_parent) {
    out.push_back({h, id, IntegrityIssue::BrokenParentLink, kHeaderFinding,
                   "parent_hash does not match parent header digest"});
  }
  if (h != parent_height + 1) {
    out.push_back({h, id, IntegrityIssue::BrokenParentLink, kHeaderFinding,
                   "height is not parent height + 1"});
  }
  auto ids = block.tx_ids();
  if (block.header.merkle_root != compute_merkle_root(ids)) {
    out.push_back({h, id, IntegrityIssue::MerkleMismatch, kHeaderFinding,
                   "merkle_root does not match body"});
  }
  const PublicKey* vk = keys.find_key(block.header.validator);
  if (!vk) {
    out.push_back({h, id, IntegrityIssue::BadValidatorSignature, kHeaderFinding,
                   "unknown validator " + block.header.validator});
  } else {
    if (!keys.is_validator(block.header.validator)) {
      out.push_back({h, id, IntegrityIssue::NotAValidatorBlock, kHeaderFinding,
                     "proposer is not a full node"});
    }
    if (!verify_sig(*vk, block.header.signing_digest(), block.header.validator_signature,
                    cache)) {
      out.push_back({h, id, IntegrityIssue::BadValidatorSignature, kHeaderFinding,
                     "validator signature fails"});
    }
  }
}

bool genesis_well_formed(const Block& g) {
  return g.header.height == 0 && g.header.parent_hash.is_zero() &&
         g.header.merkle_root.is_zero() && g.header.timestamp == 0 && g.body.empty();
}

}  // namespace

std::string_view integrity_issue_name(IntegrityIssue i) {
  switch (i) {
    case IntegrityIssue::BadGenesis: return "bad-genesis";
    case IntegrityIssue::BrokenParentLink: return "broken-parent-link";
    case IntegrityIssue::MerkleMismatch: return "merkle-mismatch";
    case IntegrityIssue::TxIdMismatch: return "tx-id-mismatch";
    case IntegrityIssue::BadTxSignature: return "bad-tx-signature";
    case IntegrityIssue::UnknownAuthor: return "unknown-author";
    case IntegrityIssue::BadValidatorSignature: return "bad-validator-signature";
    case IntegrityIssue::NotAValidatorBlock: return "not-a-validator";
    case IntegrityIssue::CorruptAncestor: return "corrupt-ancestor";
  }
  return "unknown";
}

Chain::Chain() {
  Block g = genesis_block();
  Digest id = g.header.digest();
  entries_.push_back(Entry{std::move(g), id, kNoParent});
  by_id_.emplace(id, 0);
  tips_.push_back(id);
}

const Chain::Entry* Chain::find_entry(const Digest& id) const {
  auto it = by_id_.find(id);
  return it == by_id_.end() ? nullptr : &entries_[it->second];
}

const Block* Chain::find_block(const Digest& block_id) const {
  const Entry* e = find_entry(block_id);
  return e ? &e->block : nullptr;
}

bool Chain::tx_committed(const Digest& tx_id) const { return all_tx_ids_.contains(tx_id); }

Block Chain::create_block(const Digest& parent_id, std::vector<Transaction> txs,
                          const std::string& validator, const SecretKey& validator_key,
                          uint64_t timestamp, const KeyBook& keys,
                          SignatureCache* cache) const {
  if (!keys.is_validator(validator))
    throw Error(Errc::NotAValidator, validator + " cannot create blocks");
  const Entry* parent = find_entry(parent_id);
  if (!parent) throw Error(Errc::BadParentHash, "unknown parent block");

  KeyBook book = keys;
  std::unordered_set<Digest, DigestHasher> seen;
  for (const auto& tx : txs) {
    if (all_tx_ids_.contains(tx.tx_id) || seen.contains(tx.tx_id))
      throw Error(Errc::DuplicateTransaction, "tx already committed: " + tx.tx_id.hex());
    std::string reason = check_transaction(tx, book, cache);
    if (!reason.empty()) throw Error(Errc::InvalidTransactionInBody, reason);
    seen.insert(tx.tx_id);
    book.absorb(tx);
  }

  Block b;
  b.body = std::move(txs);
  b.header.parent_hash = parent->id;
  b.header.merkle_root = compute_merkle_root(b.tx_ids());
  b.header.timestamp = timestamp;
  b.header.height = parent->block.header.height + 1;
  b.header.validator = validator;
  b.header.validator_signature = sign_digest(validator_key, b.header.signing_digest());
  return b;
}

AppendResult Chain::validate_and_append(Block block, const KeyBook& keys,
                                        SignatureCache* cache) {
  const Entry* parent = find_entry(block.header.parent_hash);
  if (!parent)
    return {false, Errc::BadParentHash, "parent_hash does not name a known block"};
  if (block.header.height != parent->block.header.height + 1)
    return {false, Errc::BadParentHash, "height is not parent height + 1"};

  if (block.header.merkle_root != compute_merkle_root(block.tx_ids()))
    return {false, Errc::BadMerkleRoot, "merkle_root does not match body"};

  const PublicKey* vk = keys.find_key(block.header.validator);
  if (!vk || !keys.is_validator(block.header.validator))
    return {false, Errc::BadValidatorSignature,
            "validator is not a registered full node: " + block.header.validator};
  if (!verify_sig(*vk, block.header.signing_digest(), block.header.validator_signature,
                  cache))
    return {false, Errc::BadValidatorSignature, "validator signature fails"};

  KeyBook book = keys;
  std::unordered_set<Digest, DigestHasher> seen;
  for (size_t i = 0; i < block.body.size(); ++i) {
    const Transaction& tx = block.body[i];
    if (all_tx_ids_.contains(tx.tx_id) || seen.contains(tx.tx_id))
      return {false, Errc::InvalidBody,
              "duplicate transaction at index " + std::to_string(i)};
    std::string reason = check_transaction(tx, book, cache);
    if (!reason.empty())
      return {false, Errc::InvalidBody,
              "tx " + std::to_string(i) + " invalid: " + reason};
    seen.insert(tx.tx_id);
    book.absorb(tx);
  }

  Digest id = block.header.digest();
  if (by_id_.contains(id)) return {false, Errc::InvalidBody, "block already present"};

  const Digest parent_id = block.header.parent_hash;
  size_t parent_index = by_id_.at(parent_id);
  for (const auto& tx : block.body) all_tx_ids_.insert(tx.tx_id);
  entries_.push_back(Entry{std::move(block), id, parent_index});
  by_id_.emplace(id, entries_.size() - 1);

  // Extending a tip keeps that branch's arrival slot; a new fork gets a new
  // slot at the end. Tie-breaking in resolve_fork depends on this order.
  auto it = std::find(tips_.begin(), tips_.end(), parent_id);
  if (it != tips_.end()) {
    *it = id;
  } else {
    tips_.push_back(id);
  }
  return {true, Errc{}, {}};
}

Digest Chain::resolve_fork() const {
  Digest best = tips_.front();
  uint64_t best_height = find_entry(best)->block.header.height;
  for (const Digest& t : tips_) {
    uint64_t h = find_entry(t)->block.header.height;
    if (h > best_height) {
      best = t;
      best_height = h;
    }
  }
  return best;
}

uint64_t Chain::height() const {
  return find_entry(resolve_fork())->block.header.height;
}

std::vector<const Block*> Chain::canonical_blocks() const {
  std::vector<const Block*> out;
  const Entry* e = find_entry(resolve_fork());
  while (true) {
    out.push_back(&e->block);
    if (e->parent_index == kNoParent) break;
    e = &entries_[e->parent_index];
  }
  std::reverse(out.begin(), out.end());
  return out;
}

IntegrityReport Chain::verify_integrity(SignatureCache* cache) const {
  IntegrityReport report;
  std::vector<char> flagged(entries_.size(), 0);

  if (!genesis_well_formed(entries_[0].block)) {
    report.findings.push_back({0, entries_[0].block.header.digest(),
                               IntegrityIssue::BadGenesis, kHeaderFinding,
                               "genesis block malformed"});
    flagged[0] = 1;
  }

  // Arrival order is topological: parents precede children.
  KeyBook keys;
  for (size_t i = 0; i < entries_.size(); ++i) {
    const Block& block = entries_[i].block;
    size_t before = report.findings.size();
    if (i != 0) {
      const Entry& parent = entries_[entries_[i].parent_index];
      check_block_integrity(block, parent.block.header.digest(),
                            parent.block.header.height, keys, cache, report.findings);
      const Digest id = block.header.digest();
      for (size_t t = 0; t < block.body.size(); ++t) {
        check_tx_integrity(block.body[t], t, block.header.height, id, keys, cache,
                           report.findings);
        keys.absorb(block.body[t]);
      }
    }
    bool own = report.findings.size() > before;
    bool ancestor = i != 0 && flagged[entries_[i].parent_index];
    flagged[i] = own || ancestor;
    if (ancestor && !own) {
      report.findings.push_back({block.header.height, block.header.digest(),
                                 IntegrityIssue::CorruptAncestor, kHeaderFinding,
                                 "descends from a block with integrity findings"});
    }
  }
  return report;
}

IntegrityReport verify_blocks(std::span<const Block> blocks, SignatureCache* cache) {
  IntegrityReport report;
  if (blocks.empty()) {
    report.findings.push_back({0, Digest::zero(), IntegrityIssue::BadGenesis,
                               kHeaderFinding, "empty chain"});
    return report;
  }

  bool ancestor_flagged = false;
  if (!genesis_well_formed(blocks[0])) {
    report.findings.push_back({blocks[0].header.height, blocks[0].header.digest(),
                               IntegrityIssue::BadGenesis, kHeaderFinding,
                               "genesis block malformed"});
    ancestor_flagged = true;
  }

  KeyBook keys;
  for (size_t i = 1; i < blocks.size(); ++i) {
    const Block& block = blocks[i];
    size_t before = report.findings.size();
    check_block_integrity(block, blocks[i - 1].header.digest(),
                          blocks[i - 1].header.height, keys, cache, report.findings);
    const Digest id = block.header.digest();
    for (size_t t = 0; t < block.body.size(); ++t) {
      check_tx_integrity(block.body[t], t, block.header.height, id, keys, cache,
                         report.findings);
      keys.absorb(block.body[t]);
    }
    bool own = report.findings.size() > before;
    if (ancestor_flagged && !own) {
      report.findings.push_back({block.header.height, id, IntegrityIssue::CorruptAncestor,
                                 kHeaderFinding,
                                 "descends from a block with integrity findings"});
    }
    ancestor_flagged = ancestor_flagged || own;
  }
  return report;
}

}  // namespace recirc::ledger
