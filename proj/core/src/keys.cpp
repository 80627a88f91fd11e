#include "recirc/ledger/keys.hpp"

#include <sodium.h>

#include <cstring>
#include <stdexcept>

namespace recirc::ledger {

namespace {

void ensure_sodium() {
  static const int rc = sodium_init();
  if (rc < 0) throw std::runtime_error("libsodium initialization failed");
}

template <size_t N>
std::string to_hex(const std::array<uint8_t, N>& a) {
  static const char* digits = "0123456789abcdef";
  std::string out(2 * N, '0');
  for (size_t i = 0; i < N; ++i) {
    out[2 * i] = digits[a[i] >> 4];
    out[2 * i + 1] = digits[a[i] & 0xf];
  }
  return out;
}

template <size_t N>
bool from_hex(std::string_view hex, std::array<uint8_t, N>& out) {
  if (hex.size() != 2 * N) return false;
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  for (size_t i = 0; i < N; ++i) {
    int hi = nibble(hex[2 * i]);
    int lo = nibble(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) return false;
    out[i] = static_cast<uint8_t>((hi << 4) | lo);
  }
  return true;
}

}  // namespace

std::string PublicKey::hex() const { return to_hex(bytes); }

std::optional<PublicKey> PublicKey::from_hex(std::string_view hex) {
  PublicKey pk;
  if (!::recirc::ledger::from_hex(hex, pk.bytes)) return std::nullopt;
  return pk;
}

std::string Signature::hex() const { return to_hex(bytes); }

std::optional<Signature> Signature::from_hex(std::string_view hex) {
  Signature s;
  if (!::recirc::ledger::from_hex(hex, s.bytes)) return std::nullopt;
  return s;
}

KeyPair KeyPair::from_seed(const Digest& seed) {
  ensure_sodium();
  static_assert(crypto_sign_SEEDBYTES == 32);
  KeyPair kp;
  crypto_sign_seed_keypair(kp.public_key.bytes.data(), kp.private_key.bytes.data(),
                           seed.bytes.data());
  return kp;
}

Signature sign_digest(const SecretKey& sk, const Digest& message) {
  ensure_sodium();
  Signature sig;
  unsigned long long len = 0;
  crypto_sign_detached(sig.bytes.data(), &len, message.bytes.data(), 32,
                       sk.bytes.data());
  return sig;
}

bool verify_digest(const PublicKey& pk, const Digest& message, const Signature& sig) {
  ensure_sodium();
  return crypto_sign_verify_detached(sig.bytes.data(), message.bytes.data(), 32,
                                     pk.bytes.data()) == 0;
}

bool SignatureCache::verify(const PublicKey& pk, const Digest& message,
                            const Signature& sig) {
  std::array<uint8_t, 32 + 32 + 64> buf;
  std::memcpy(buf.data(), pk.bytes.data(), 32);
  std::memcpy(buf.data() + 32, message.bytes.data(), 32);
  std::memcpy(buf.data() + 64, sig.bytes.data(), 64);
  Digest key = sha256(std::span<const uint8_t>(buf.data(), buf.size()));
  if (seen_.contains(key)) return true;
  if (!verify_digest(pk, message, sig)) return false;
  seen_.insert(key);
  return true;
}

}  // namespace recirc::ledger
