#include "bubbleblue/crypto.hpp"

#include <fmt/format.h>
#include <openssl/evp.h>
#include <openssl/rand.h>
#include <zlib.h>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <memory>

namespace bb {

namespace {

struct CtxDeleter {
  void operator()(EVP_CIPHER_CTX* ctx) const { EVP_CIPHER_CTX_free(ctx); }
};
using CipherCtx = std::unique_ptr<EVP_CIPHER_CTX, CtxDeleter>;

CipherCtx new_ctx() {
  CipherCtx ctx(EVP_CIPHER_CTX_new());
  if (!ctx) throw CryptoError("EVP_CIPHER_CTX_new failed");
  return ctx;
}

// Raw single-block AES-128 (ECB, no padding): exactly C(key, block).
Key block_cipher(const Key& key, const Key& block, bool encrypt) {
  auto ctx = new_ctx();
  if (EVP_CipherInit_ex(ctx.get(), EVP_aes_128_ecb(), nullptr, key.data(), nullptr, encrypt ? 1 : 0) != 1) {
    throw CryptoError("AES-128-ECB init failed");
  }
  EVP_CIPHER_CTX_set_padding(ctx.get(), 0);
  Key out{};
  int len = 0;
  if (EVP_CipherUpdate(ctx.get(), out.data(), &len, block.data(), static_cast<int>(block.size())) != 1 ||
      len != static_cast<int>(kKeyBytes)) {
    throw CryptoError("AES-128-ECB block operation failed");
  }
  return out;
}

// AES-128-CTR with an all-zero IV. Safe only because every K is single-use.
Bytes ctr_crypt(const Key& key, std::span<const std::uint8_t> in) {
  auto ctx = new_ctx();
  const std::array<std::uint8_t, 16> iv{};
  if (EVP_EncryptInit_ex(ctx.get(), EVP_aes_128_ctr(), nullptr, key.data(), iv.data()) != 1) {
    throw CryptoError("AES-128-CTR init failed");
  }
  Bytes out(in.size());
  int len = 0;
  if (!in.empty() && EVP_EncryptUpdate(ctx.get(), out.data(), &len, in.data(), static_cast<int>(in.size())) != 1) {
    throw CryptoError("AES-128-CTR update failed");
  }
  return out;
}

void put_u16(Bytes& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

}  // namespace

std::uint32_t crc32_of(std::span<const std::uint8_t> data) {
  uLong crc = crc32(0L, Z_NULL, 0);
  return static_cast<std::uint32_t>(crc32(crc, data.data(), static_cast<uInt>(data.size())));
}

std::array<std::uint8_t, 32> sha256(std::span<const std::uint8_t> data) {
  std::array<std::uint8_t, 32> out{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw CryptoError("SHA-256 failed");
  }
  return out;
}

std::string hex(std::span<const std::uint8_t> data) {
  std::string s;
  s.reserve(data.size() * 2);
  for (auto b : data) s += fmt::format("{:02x}", b);
  return s;
}

Drbg::Drbg(std::uint64_t seed) {
  std::array<std::uint8_t, 8> material{};
  for (int i = 0; i < 8; ++i) material[i] = static_cast<std::uint8_t>(seed >> (56 - 8 * i));
  auto digest = sha256(material);
  std::copy_n(digest.begin(), kKeyBytes, key_.begin());
}

Drbg::Drbg(std::span<const std::uint8_t> seed_material) {
  auto digest = sha256(seed_material);
  std::copy_n(digest.begin(), kKeyBytes, key_.begin());
}

Drbg Drbg::from_system_entropy() {
  std::array<std::uint8_t, 32> material{};
  if (RAND_bytes(material.data(), static_cast<int>(material.size())) != 1) throw CryptoError("RAND_bytes failed");
  return Drbg(std::span<const std::uint8_t>(material));
}

void Drbg::fill(std::span<std::uint8_t> out) {
  for (auto& byte : out) {
    if (used_ == block_.size()) {
      Key counter{};
      for (int i = 0; i < 8; ++i) counter[8 + i] = static_cast<std::uint8_t>(counter_ >> (56 - 8 * i));
      ++counter_;
      block_ = block_cipher(key_, counter, true);
      used_ = 0;
    }
    byte = block_[used_++];
  }
}

Key Drbg::key() {
  Key k{};
  fill(k);
  return k;
}

std::uint64_t Drbg::next_u64() {
  std::array<std::uint8_t, 8> b{};
  fill(b);
  std::uint64_t v = 0;
  for (auto x : b) v = (v << 8) | x;
  return v;
}

KeyMatrix generate_matrix(std::size_t n, Drbg& rng, std::size_t max_members) {
  if (n < 2 || n > max_members) throw CryptoError(fmt::format("member count {} outside 2..{}", n, max_members));
  KeyMatrix m;
  m.n = n;
  m.keys.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      m.keys[i * n + j] = rng.key();
      m.keys[j * n + i] = m.keys[i * n + j];
    }
  }
  return m;
}

KeyColumn column_for(const KeyMatrix& m, std::size_t member) {
  if (member >= m.n) throw CryptoError(fmt::format("member {} outside 0..{}", member, m.n - 1));
  KeyColumn col;
  col.owner = static_cast<MemberId>(member);
  col.column.reserve(m.n);
  for (std::size_t i = 0; i < m.n; ++i) col.column.push_back(m.at(i, member));
  col.revoked.assign(m.n, false);
  return col;
}

SealedPacket seal(const KeyColumn& col, std::span<const std::uint8_t> plaintext, Drbg& rng) {
  if (plaintext.empty()) throw CryptoError("refusing to seal an empty plaintext");
  if (col.is_revoked(col.owner)) throw CryptoError("sealing member is revoked");

  const Key packet_key = rng.key();
  Bytes inner;
  inner.reserve(kChecksumBytes + plaintext.size());
  const auto crc = crc32_of(plaintext);
  for (int shift = 24; shift >= 0; shift -= 8) inner.push_back(static_cast<std::uint8_t>(crc >> shift));
  inner.insert(inner.end(), plaintext.begin(), plaintext.end());

  SealedPacket pkt;
  pkt.key_fields.resize(col.size());
  for (std::size_t i = 0; i < col.size(); ++i) {
    if (i == col.owner) {
      pkt.key_fields[i] = kOriginatorMarker;
    } else if (col.revoked[i]) {
      pkt.key_fields[i] = kRepudiatedField;
    } else {
      pkt.key_fields[i] = block_cipher(col.column[i], packet_key, true);
    }
  }
  pkt.ciphertext = ctr_crypt(packet_key, inner);
  return pkt;
}

std::string to_string(OpenStatus s) {
  switch (s) {
    case OpenStatus::ok: return "ok";
    case OpenStatus::no_marker: return "no-marker";
    case OpenStatus::multiple_markers: return "multiple-markers";
    case OpenStatus::originator_revoked: return "originator-revoked";
    case OpenStatus::self_field_zero: return "self-field-zero";
    case OpenStatus::checksum_mismatch: return "checksum-mismatch";
    case OpenStatus::own_packet: return "own-packet";
    case OpenStatus::malformed: return "malformed";
  }
  return "unknown";
}

OpenStatus find_originator(const SealedPacket& pkt, MemberId& originator) {
  std::size_t markers = 0;
  for (std::size_t i = 0; i < pkt.key_fields.size(); ++i) {
    if (pkt.key_fields[i] == kOriginatorMarker) {
      ++markers;
      originator = static_cast<MemberId>(i);
    }
  }
  if (markers == 0) return OpenStatus::no_marker;
  if (markers > 1) return OpenStatus::multiple_markers;
  return OpenStatus::ok;
}

OpenResult open(const KeyColumn& col, const SealedPacket& pkt) {
  OpenResult r;
  if (pkt.key_fields.size() != col.size() || pkt.ciphertext.size() < kChecksumBytes) {
    r.status = OpenStatus::malformed;
    return r;
  }
  r.status = find_originator(pkt, r.originator);
  if (r.status != OpenStatus::ok) return r;
  if (col.is_revoked(r.originator)) {
    r.status = OpenStatus::originator_revoked;
    return r;
  }
  if (r.originator == col.owner) {
    r.status = OpenStatus::own_packet;
    return r;
  }
  const Key& wrapped = pkt.key_fields[col.owner];
  if (wrapped == kRepudiatedField) {
    r.status = OpenStatus::self_field_zero;
    return r;
  }

  const Key packet_key = block_cipher(col.column[r.originator], wrapped, false);
  Bytes inner = ctr_crypt(packet_key, pkt.ciphertext);
  std::uint32_t stored = 0;
  for (std::size_t i = 0; i < kChecksumBytes; ++i) stored = (stored << 8) | inner[i];
  std::span<const std::uint8_t> body(inner.begin() + kChecksumBytes, inner.end());
  if (crc32_of(body) != stored) {
    r.status = OpenStatus::checksum_mismatch;
    return r;
  }
  r.plaintext.assign(body.begin(), body.end());
  r.status = OpenStatus::ok;
  return r;
}

KeyColumn repudiate(const KeyColumn& col, std::size_t member) {
  if (member >= col.size()) throw CryptoError(fmt::format("cannot repudiate unknown member {}", member));
  KeyColumn out = col;
  out.revoked[member] = true;
  return out;
}

Bytes to_wire(const SealedPacket& pkt) {
  Bytes out;
  out.reserve(pkt.key_fields.size() * kKeyBytes + pkt.ciphertext.size());
  for (const auto& f : pkt.key_fields) out.insert(out.end(), f.begin(), f.end());
  out.insert(out.end(), pkt.ciphertext.begin(), pkt.ciphertext.end());
  return out;
}

SealedPacket from_wire(std::span<const std::uint8_t> wire, std::size_t n) {
  if (wire.size() <= n * kKeyBytes + kChecksumBytes) throw CryptoError("sealed packet has no payload after its header");
  SealedPacket pkt;
  pkt.key_fields.resize(n);
  for (std::size_t i = 0; i < n; ++i) std::copy_n(wire.begin() + i * kKeyBytes, kKeyBytes, pkt.key_fields[i].begin());
  pkt.ciphertext.assign(wire.begin() + n * kKeyBytes, wire.end());
  return pkt;
}

Bytes serialize_column(const KeyColumn& col) {
  Bytes out{'B', 'B', 'K', 'C', kColumnFileVersion};
  put_u16(out, static_cast<std::uint16_t>(col.size()));
  put_u16(out, col.owner);
  for (const auto& k : col.column) out.insert(out.end(), k.begin(), k.end());
  Bytes bitmap((col.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < col.size(); ++i) {
    if (col.revoked[i]) bitmap[i / 8] |= static_cast<std::uint8_t>(1u << (i % 8));
  }
  out.insert(out.end(), bitmap.begin(), bitmap.end());
  return out;
}

KeyColumn parse_column(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 9 || !std::equal(bytes.begin(), bytes.begin() + 4, "BBKC")) {
    throw CryptoError("not a key column file");
  }
  if (bytes[4] != kColumnFileVersion) throw CryptoError(fmt::format("unsupported column file version {}", bytes[4]));
  const std::size_t n = (std::size_t{bytes[5]} << 8) | bytes[6];
  const auto owner = static_cast<MemberId>((bytes[7] << 8) | bytes[8]);
  const std::size_t expected = 9 + n * kKeyBytes + (n + 7) / 8;
  if (bytes.size() != expected) throw CryptoError("key column file has the wrong length");
  if (owner >= n) throw CryptoError("column owner outside member range");
  KeyColumn col;
  col.owner = owner;
  col.column.resize(n);
  for (std::size_t i = 0; i < n; ++i) std::copy_n(bytes.begin() + 9 + i * kKeyBytes, kKeyBytes, col.column[i].begin());
  col.revoked.assign(n, false);
  const auto bitmap = bytes.subspan(9 + n * kKeyBytes);
  for (std::size_t i = 0; i < n; ++i) col.revoked[i] = (bitmap[i / 8] >> (i % 8)) & 1u;
  return col;
}

void write_column_file(const std::string& path, const KeyColumn& col) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CryptoError("cannot write " + path);
  auto bytes = serialize_column(col);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw CryptoError("short write to " + path);
}

KeyColumn read_column_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CryptoError("cannot read " + path);
  Bytes bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_column(bytes);
}

}  // namespace bb
