#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>

#include "recirc/ledger/digest.hpp"

namespace recirc::ledger {

// Ed25519 keys and detached signatures. Signatures are always made over a
// 32-byte digest of the canonical payload, never over raw structures.

struct PublicKey {
  std::array<uint8_t, 32> bytes{};
  std::string hex() const;
  static std::optional<PublicKey> from_hex(std::string_view hex);
  auto operator<=>(const PublicKey&) const = default;
};

struct SecretKey {
  std::array<uint8_t, 64> bytes{};
};

struct Signature {
  std::array<uint8_t, 64> bytes{};
  std::string hex() const;
  static std::optional<Signature> from_hex(std::string_view hex);
  auto operator<=>(const Signature&) const = default;
};

struct KeyPair {
  PublicKey public_key;
  SecretKey private_key;

  // Deterministic: the same seed always yields the same keypair.
  static KeyPair from_seed(const Digest& seed);
};

Signature sign_digest(const SecretKey& sk, const Digest& message);
bool verify_digest(const PublicKey& pk, const Digest& message, const Signature& sig);

// Memoizes successful verifications keyed by sha256(pk || message || sig).
// Only positive results are cached, so a hit is always sound; integrity
// sweeps over mostly-unchanged chains skip redundant curve operations.
class SignatureCache {
 public:
  bool verify(const PublicKey& pk, const Digest& message, const Signature& sig);
  size_t size() const { return seen_.size(); }

 private:
  std::unordered_set<Digest, DigestHasher> seen_;
};

}  // namespace recirc::ledger
