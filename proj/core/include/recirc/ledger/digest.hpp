#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace recirc::ledger {

// 32-byte SHA-256 digest. The hash is fixed repo-wide; every identifier on
// the chain (tx ids, header links, merkle roots) is one of these.
struct Digest {
  std::array<uint8_t, 32> bytes{};

  static Digest zero() { return Digest{}; }
  bool is_zero() const;

  std::string hex() const;  // lowercase
  static std::optional<Digest> from_hex(std::string_view hex);

  auto operator<=>(const Digest&) const = default;
};

Digest sha256(std::span<const uint8_t> data);
Digest sha256(std::string_view data);
Digest sha256_concat(const Digest& a, const Digest& b);

struct DigestHasher {
  size_t operator()(const Digest& d) const {
    size_t v;
    static_assert(sizeof v <= 32);
    __builtin_memcpy(&v, d.bytes.data(), sizeof v);
    return v;
  }
};

// Incremental hasher for streamed chain exports.
class Sha256Stream {
 public:
  Sha256Stream();
  void update(std::span<const uint8_t> data);
  void update(std::string_view data);
  Digest finish();

 private:
  std::array<uint8_t, 416> state_;  // large enough for crypto_hash_sha256_state
};

}  // namespace recirc::ledger
