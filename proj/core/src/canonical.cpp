#include "recirc/ledger/canonical.hpp"

namespace recirc::ledger {

void CanonicalWriter::len_prefix(size_t n) {
  uint32_t len = static_cast<uint32_t>(n);
  for (int i = 0; i < 4; ++i) buf_.push_back(static_cast<uint8_t>(len >> (8 * i)));
}

void CanonicalWriter::u64(uint64_t v) {
  len_prefix(8);
  for (int i = 0; i < 8; ++i) buf_.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

void CanonicalWriter::str(std::string_view s) {
  len_prefix(s.size());
  buf_.insert(buf_.end(), s.begin(), s.end());
}

void CanonicalWriter::bytes(std::span<const uint8_t> b) {
  len_prefix(b.size());
  buf_.insert(buf_.end(), b.begin(), b.end());
}

}  // namespace recirc::ledger
