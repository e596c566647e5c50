// Decoded interior of a sealed packet and the bodies of each subtype.
//
// Layout (big-endian): kind u8, subtype u8, originator u16, stamp (u64
// timestamp for control, u32 sequence number for information), body length
// u16, body.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bubbleblue/crypto.hpp"

namespace bb {

enum class Kind : std::uint8_t { control = 0, information = 1 };

// Values outside the named set are kept as-is so newer subtypes survive a
// decode/encode pass.
enum class Subtype : std::uint8_t {
  hello = 0,
  chat = 1,
  multimedia = 2,
  tc = 3,
  arq = 4,
  geo = 5,
  mute = 6,
  fail = 7,
  repudiation = 8,
  addition = 9,
  merge = 10,
};

std::string to_string(Subtype s);
Subtype parse_subtype(const std::string& name);

class WireError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DataField {
  Kind kind = Kind::information;
  Subtype subtype = Subtype::chat;
  MemberId originator = 0;
  std::uint64_t stamp = 0;  // timestamp (control) or sequence number (information)
  Bytes body;

  friend bool operator==(const DataField&, const DataField&) = default;
};

Bytes encode_data(const DataField& d);
DataField decode_data(std::span<const std::uint8_t> bytes);

// Hello: u8 S-count, S ids (u16), u8 A-count, A ids. A third list of the same
// shape carries the sender's MPR set when MPR-CDS election is in use.
struct HelloBody {
  std::vector<MemberId> sym;
  std::vector<MemberId> asym;
  std::optional<std::vector<MemberId>> mprs;

  friend bool operator==(const HelloBody&, const HelloBody&) = default;
};

// TC: u8 count, then (id u16, timestamp u64) pairs.
struct TcBody {
  std::vector<std::pair<MemberId, std::uint64_t>> neighbors;

  friend bool operator==(const TcBody&, const TcBody&) = default;
};

struct ArqBody {
  MemberId origin = 0;
  std::uint32_t seq = 0;

  friend bool operator==(const ArqBody&, const ArqBody&) = default;
};

// Latitude then longitude in degrees, IEEE-754 doubles.
struct GeoBody {
  double latitude = 0.0;
  double longitude = 0.0;

  friend bool operator==(const GeoBody&, const GeoBody&) = default;
};

// Empty body: no declared offset. Eight bytes: offset in microseconds, with
// all ones meaning indefinite.
struct MuteBody {
  std::optional<std::uint64_t> offset_us;
  bool indefinite = false;

  friend bool operator==(const MuteBody&, const MuteBody&) = default;
};

struct MemberBody {
  MemberId member = 0;

  friend bool operator==(const MemberBody&, const MemberBody&) = default;
};

struct MergeBody {
  MemberId bridge = 0;
  std::vector<MemberId> members;

  friend bool operator==(const MergeBody&, const MergeBody&) = default;
};

// One piece of a split multimedia file.
struct MultimediaChunk {
  std::uint32_t file_id = 0;
  std::uint16_t index = 0;
  std::uint16_t total = 0;
  Bytes data;

  friend bool operator==(const MultimediaChunk&, const MultimediaChunk&) = default;
};

Bytes encode(const HelloBody& b);
Bytes encode(const TcBody& b);
Bytes encode(const ArqBody& b);
Bytes encode(const GeoBody& b);
Bytes encode(const MuteBody& b);
Bytes encode(const MemberBody& b);
Bytes encode(const MergeBody& b);
Bytes encode(const MultimediaChunk& b);

HelloBody decode_hello(std::span<const std::uint8_t> body);
TcBody decode_tc(std::span<const std::uint8_t> body);
ArqBody decode_arq(std::span<const std::uint8_t> body);
GeoBody decode_geo(std::span<const std::uint8_t> body);
MuteBody decode_mute(std::span<const std::uint8_t> body);
MemberBody decode_member(std::span<const std::uint8_t> body);
MergeBody decode_merge(std::span<const std::uint8_t> body);
MultimediaChunk decode_chunk(std::span<const std::uint8_t> body);

std::vector<MultimediaChunk> split_multimedia(std::uint32_t file_id, std::span<const std::uint8_t> content,
                                              std::size_t chunk_size);

inline bool is_control(Subtype s) { return s == Subtype::hello; }

}  // namespace bb
