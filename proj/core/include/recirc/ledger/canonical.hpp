#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "recirc/ledger/digest.hpp"

namespace recirc::ledger {

// Canonical serialization: length-prefixed field concatenation in declared
// field order. Integers are 8-byte little-endian two's complement, each field
// is prefixed with a 4-byte little-endian byte count. Unambiguous by
// construction, so digests over it are stable identifiers.
class CanonicalWriter {
 public:
  void u64(uint64_t v);
  void i64(int64_t v) { u64(static_cast<uint64_t>(v)); }
  void str(std::string_view s);
  void bytes(std::span<const uint8_t> b);
  void digest(const Digest& d) { bytes(std::span<const uint8_t>(d.bytes.data(), 32)); }

  std::span<const uint8_t> view() const { return buf_; }
  Digest sha256() const { return ledger::sha256(view()); }

 private:
  void len_prefix(size_t n);
  std::vector<uint8_t> buf_;
};

}  // namespace recirc::ledger
