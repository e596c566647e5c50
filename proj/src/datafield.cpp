#include "bubbleblue/datafield.hpp"

#include <fmt/format.h>

#include <bit>
#include <cstring>
#include <limits>

namespace bb {

namespace {

class Writer {
 public:
  void u8(std::uint8_t v) { out_.push_back(v); }
  void u16(std::uint16_t v) { be(v, 2); }
  void u32(std::uint32_t v) { be(v, 4); }
  void u64(std::uint64_t v) { be(v, 8); }
  void bytes(std::span<const std::uint8_t> b) { out_.insert(out_.end(), b.begin(), b.end()); }
  void ids(const std::vector<MemberId>& list) {
    if (list.size() > std::numeric_limits<std::uint8_t>::max()) throw WireError("id list longer than 255");
    u8(static_cast<std::uint8_t>(list.size()));
    for (auto id : list) u16(id);
  }
  Bytes take() { return std::move(out_); }

 private:
  void be(std::uint64_t v, int width) {
    for (int i = width - 1; i >= 0; --i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  Bytes out_;
};

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> in) : in_(in) {}

  std::uint8_t u8() { return static_cast<std::uint8_t>(be(1)); }
  std::uint16_t u16() { return static_cast<std::uint16_t>(be(2)); }
  std::uint32_t u32() { return static_cast<std::uint32_t>(be(4)); }
  std::uint64_t u64() { return be(8); }
  Bytes bytes(std::size_t n) {
    need(n);
    Bytes b(in_.begin() + pos_, in_.begin() + pos_ + n);
    pos_ += n;
    return b;
  }
  std::vector<MemberId> ids() {
    std::vector<MemberId> list(u8());
    for (auto& id : list) id = u16();
    return list;
  }
  bool done() const { return pos_ == in_.size(); }
  void finish(const char* what) const {
    if (!done()) throw WireError(fmt::format("{}: {} trailing bytes", what, in_.size() - pos_));
  }

 private:
  void need(std::size_t n) const {
    if (in_.size() - pos_ < n) throw WireError("truncated buffer");
  }
  std::uint64_t be(std::size_t width) {
    need(width);
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < width; ++i) v = (v << 8) | in_[pos_ + i];
    pos_ += width;
    return v;
  }

  std::span<const std::uint8_t> in_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(Subtype s) {
  switch (s) {
    case Subtype::hello: return "hello";
    case Subtype::chat: return "chat";
    case Subtype::multimedia: return "multimedia";
    case Subtype::tc: return "tc";
    case Subtype::arq: return "arq";
    case Subtype::geo: return "geo";
    case Subtype::mute: return "mute";
    case Subtype::fail: return "fail";
    case Subtype::repudiation: return "repudiation";
    case Subtype::addition: return "addition";
    case Subtype::merge: return "merge";
  }
  return fmt::format("subtype-{}", static_cast<int>(s));
}

Subtype parse_subtype(const std::string& name) {
  for (int v = 0; v <= static_cast<int>(Subtype::merge); ++v) {
    if (to_string(static_cast<Subtype>(v)) == name) return static_cast<Subtype>(v);
  }
  throw WireError("unknown subtype: " + name);
}

Bytes encode_data(const DataField& d) {
  if (d.body.size() > std::numeric_limits<std::uint16_t>::max()) throw WireError("body longer than 65535 bytes");
  Writer w;
  w.u8(static_cast<std::uint8_t>(d.kind));
  w.u8(static_cast<std::uint8_t>(d.subtype));
  w.u16(d.originator);
  if (d.kind == Kind::control) {
    w.u64(d.stamp);
  } else {
    if (d.stamp > std::numeric_limits<std::uint32_t>::max()) throw WireError("sequence number exceeds 32 bits");
    w.u32(static_cast<std::uint32_t>(d.stamp));
  }
  w.u16(static_cast<std::uint16_t>(d.body.size()));
  w.bytes(d.body);
  return w.take();
}

DataField decode_data(std::span<const std::uint8_t> bytes) {
  Reader r(bytes);
  DataField d;
  const auto kind = r.u8();
  if (kind > 1) throw WireError(fmt::format("bad kind tag {}", kind));
  d.kind = static_cast<Kind>(kind);
  d.subtype = static_cast<Subtype>(r.u8());
  d.originator = r.u16();
  d.stamp = d.kind == Kind::control ? r.u64() : r.u32();
  d.body = r.bytes(r.u16());
  r.finish("data field");
  return d;
}

Bytes encode(const HelloBody& b) {
  Writer w;
  w.ids(b.sym);
  w.ids(b.asym);
  if (b.mprs) w.ids(*b.mprs);
  return w.take();
}

HelloBody decode_hello(std::span<const std::uint8_t> body) {
  Reader r(body);
  HelloBody b;
  b.sym = r.ids();
  b.asym = r.ids();
  if (!r.done()) b.mprs = r.ids();
  r.finish("hello body");
  return b;
}

Bytes encode(const TcBody& b) {
  if (b.neighbors.size() > std::numeric_limits<std::uint8_t>::max()) throw WireError("TC list longer than 255");
  Writer w;
  w.u8(static_cast<std::uint8_t>(b.neighbors.size()));
  for (auto [id, ts] : b.neighbors) {
    w.u16(id);
    w.u64(ts);
  }
  return w.take();
}

TcBody decode_tc(std::span<const std::uint8_t> body) {
  Reader r(body);
  TcBody b;
  b.neighbors.resize(r.u8());
  for (auto& [id, ts] : b.neighbors) {
    id = r.u16();
    ts = r.u64();
  }
  r.finish("TC body");
  return b;
}

Bytes encode(const ArqBody& b) {
  Writer w;
  w.u16(b.origin);
  w.u32(b.seq);
  return w.take();
}

ArqBody decode_arq(std::span<const std::uint8_t> body) {
  Reader r(body);
  ArqBody b;
  b.origin = r.u16();
  b.seq = r.u32();
  r.finish("ARQ body");
  return b;
}

Bytes encode(const GeoBody& b) {
  Writer w;
  w.u64(std::bit_cast<std::uint64_t>(b.latitude));
  w.u64(std::bit_cast<std::uint64_t>(b.longitude));
  return w.take();
}

GeoBody decode_geo(std::span<const std::uint8_t> body) {
  Reader r(body);
  GeoBody b;
  b.latitude = std::bit_cast<double>(r.u64());
  b.longitude = std::bit_cast<double>(r.u64());
  r.finish("geo body");
  return b;
}

Bytes encode(const MuteBody& b) {
  Writer w;
  if (b.indefinite) {
    w.u64(std::numeric_limits<std::uint64_t>::max());
  } else if (b.offset_us) {
    w.u64(*b.offset_us);
  }
  return w.take();
}

MuteBody decode_mute(std::span<const std::uint8_t> body) {
  MuteBody b;
  if (body.empty()) return b;
  Reader r(body);
  auto v = r.u64();
  r.finish("mute body");
  if (v == std::numeric_limits<std::uint64_t>::max()) {
    b.indefinite = true;
  } else {
    b.offset_us = v;
  }
  return b;
}

Bytes encode(const MemberBody& b) {
  Writer w;
  w.u16(b.member);
  return w.take();
}

MemberBody decode_member(std::span<const std::uint8_t> body) {
  Reader r(body);
  MemberBody b{r.u16()};
  r.finish("member body");
  return b;
}

Bytes encode(const MergeBody& b) {
  Writer w;
  w.u16(b.bridge);
  w.ids(b.members);
  return w.take();
}

MergeBody decode_merge(std::span<const std::uint8_t> body) {
  Reader r(body);
  MergeBody b;
  b.bridge = r.u16();
  b.members = r.ids();
  r.finish("merge body");
  return b;
}

Bytes encode(const MultimediaChunk& b) {
  Writer w;
  w.u32(b.file_id);
  w.u16(b.index);
  w.u16(b.total);
  w.bytes(b.data);
  return w.take();
}

MultimediaChunk decode_chunk(std::span<const std::uint8_t> body) {
  Reader r(body);
  MultimediaChunk c;
  c.file_id = r.u32();
  c.index = r.u16();
  c.total = r.u16();
  c.data = r.bytes(body.size() - 8);
  if (c.total == 0 || c.index >= c.total) throw WireError("multimedia chunk index out of range");
  return c;
}

std::vector<MultimediaChunk> split_multimedia(std::uint32_t file_id, std::span<const std::uint8_t> content,
                                              std::size_t chunk_size) {
  if (chunk_size == 0) throw WireError("chunk size must be positive");
  if (content.empty()) throw WireError("nothing to split");
  const std::size_t total = (content.size() + chunk_size - 1) / chunk_size;
  if (total > std::numeric_limits<std::uint16_t>::max()) throw WireError("file needs more than 65535 chunks");
  std::vector<MultimediaChunk> out;
  for (std::size_t i = 0; i < total; ++i) {
    auto piece = content.subspan(i * chunk_size, std::min(chunk_size, content.size() - i * chunk_size));
    out.push_back({file_id, static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(total),
                   Bytes(piece.begin(), piece.end())});
  }
  return out;
}

}  // namespace bb
