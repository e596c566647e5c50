// Group privacy for a bubble of n members.
//
// The leader draws an n x n matrix of 16-byte AES keys and hands member j
// column j. Every packet is encrypted under a fresh single-use key K; the
// header carries one 16-byte field per member holding K wrapped under the
// pairwise key, except the originator's own field (all ones, which also
// identifies the originator) and the fields of repudiated members (zeros).
//
// Integrity is a CRC32 inside the encryption. It catches wrong-key decodes
// and corruption; it is not a MAC and gives no authentication.
#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bb {

using Bytes = std::vector<std::uint8_t>;
using Key = std::array<std::uint8_t, 16>;
using MemberId = std::uint16_t;

inline constexpr std::size_t kKeyBytes = 16;
inline constexpr std::size_t kChecksumBytes = 4;
inline constexpr std::size_t kMaxMembers = 50;

/// Marks the originator's own header field.
inline constexpr Key kOriginatorMarker = {0xFF, 0xFF, 0xFF, 0xFF, 0xFF, 0xFF, 0xFF, 0xFF,
                                          0xFF, 0xFF, 0xFF, 0xFF, 0xFF, 0xFF, 0xFF, 0xFF};
inline constexpr Key kRepudiatedField = {};

class CryptoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Deterministic AES-128-CTR keystream generator keyed by SHA-256 of a seed.
class Drbg {
 public:
  explicit Drbg(std::uint64_t seed);
  explicit Drbg(std::span<const std::uint8_t> seed_material);
  static Drbg from_system_entropy();

  void fill(std::span<std::uint8_t> out);
  Key key();
  std::uint64_t next_u64();

 private:
  Key key_{};
  std::uint64_t counter_ = 0;
  std::array<std::uint8_t, 16> block_{};
  std::size_t used_ = 16;
};

struct KeyMatrix {
  std::size_t n = 0;
  std::vector<Key> keys;  // row-major, keys[i * n + j]

  const Key& at(std::size_t i, std::size_t j) const { return keys.at(i * n + j); }
};

struct KeyColumn {
  MemberId owner = 0;
  std::vector<Key> column;     // column[i] = K[i][owner]
  std::vector<bool> revoked;   // size n

  std::size_t size() const { return column.size(); }
  bool is_revoked(MemberId m) const { return m < revoked.size() && revoked[m]; }

  friend bool operator==(const KeyColumn&, const KeyColumn&) = default;
};

struct SealedPacket {
  std::vector<Key> key_fields;
  Bytes ciphertext;

  friend bool operator==(const SealedPacket&, const SealedPacket&) = default;
};

/// Pairwise keys are symmetric (K[i][j] == K[j][i]) so that the column each
/// member holds contains the key it shares with every other member.
KeyMatrix generate_matrix(std::size_t n, Drbg& rng, std::size_t max_members = kMaxMembers);
KeyColumn column_for(const KeyMatrix& m, std::size_t member);

SealedPacket seal(const KeyColumn& col, std::span<const std::uint8_t> plaintext, Drbg& rng);

enum class OpenStatus {
  ok,
  no_marker,
  multiple_markers,
  originator_revoked,
  self_field_zero,
  checksum_mismatch,
  own_packet,
  malformed,
};

std::string to_string(OpenStatus s);

struct OpenResult {
  OpenStatus status = OpenStatus::malformed;
  MemberId originator = 0;
  Bytes plaintext;

  bool ok() const { return status == OpenStatus::ok; }
};

OpenResult open(const KeyColumn& col, const SealedPacket& pkt);

/// Returns a copy with `member` revoked. Idempotent.
KeyColumn repudiate(const KeyColumn& col, std::size_t member);

/// Index of the all-ones field, if exactly one exists.
OpenStatus find_originator(const SealedPacket& pkt, MemberId& originator);

Bytes to_wire(const SealedPacket& pkt);
SealedPacket from_wire(std::span<const std::uint8_t> wire, std::size_t n);

// Column file: "BBKC", version byte, n (u16 BE), owner (u16 BE), n x 16 key
// bytes, revoked bitmap of ceil(n/8) bytes (bit i%8 of byte i/8, LSB first).
inline constexpr std::uint8_t kColumnFileVersion = 1;
Bytes serialize_column(const KeyColumn& col);
KeyColumn parse_column(std::span<const std::uint8_t> bytes);
void write_column_file(const std::string& path, const KeyColumn& col);
KeyColumn read_column_file(const std::string& path);

std::uint32_t crc32_of(std::span<const std::uint8_t> data);
std::array<std::uint8_t, 32> sha256(std::span<const std::uint8_t> data);
std::string hex(std::span<const std::uint8_t> data);

}  // namespace bb
