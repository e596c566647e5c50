#include "bubbleblue/node.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace bb {

std::string to_string(EventKind k) {
  switch (k) {
    case EventKind::delivered: return "deliver";
    case EventKind::duplicate: return "duplicate";
    case EventKind::discarded: return "discard";
    case EventKind::stale: return "stale";
    case EventKind::gap: return "gap";
    case EventKind::arq_sent: return "arq-sent";
    case EventKind::arq_answered: return "arq-answered";
    case EventKind::arq_forwarded: return "arq-forwarded";
    case EventKind::arq_cache_miss: return "arq-cache-miss";
    case EventKind::gap_abandoned: return "gap-abandoned";
    case EventKind::muted: return "muted";
    case EventKind::unmuted: return "unmuted";
    case EventKind::demute_rejected: return "demute-rejected";
    case EventKind::wiped: return "wiped";
    case EventKind::mute_overdue: return "mute-overdue";
    case EventKind::member_failed: return "member-failed";
    case EventKind::member_repudiated: return "repudiated";
    case EventKind::repudiation_ignored: return "repudiation-ignored";
    case EventKind::geo_warning: return "geo-warning";
    case EventKind::multimedia_complete: return "multimedia-complete";
    case EventKind::addition: return "addition";
    case EventKind::merge: return "merge";
  }
  return "unknown";
}

double haversine_meters(const GeoBody& a, const GeoBody& b) {
  constexpr double kEarthRadius = 6371000.0;
  constexpr double kRad = std::numbers::pi / 180.0;
  const double dlat = (b.latitude - a.latitude) * kRad;
  const double dlon = (b.longitude - a.longitude) * kRad;
  const double h = std::sin(dlat / 2) * std::sin(dlat / 2) +
                   std::cos(a.latitude * kRad) * std::cos(b.latitude * kRad) * std::sin(dlon / 2) * std::sin(dlon / 2);
  return 2 * kEarthRadius * std::asin(std::min(1.0, std::sqrt(h)));
}

namespace {

template <typename Map>
NodeSet keys_of(const Map& m) {
  NodeSet s;
  for (const auto& [k, _] : m) s.insert(k);
  return s;
}

std::vector<MemberId> sorted_ids(const NodeSet& s) { return {s.begin(), s.end()}; }

}  // namespace

Node::Node(NodeConfig config, KeyColumn column, std::uint64_t rng_seed)
    : config_(std::move(config)), column_(std::move(column)), rng_(rng_seed) {
  if (column_.owner != config_.id) throw ProtoError("key column does not belong to this member");
  if (config_.hello_period.count() <= 0 || config_.tc_period.count() <= 0 || config_.arq_timeout.count() <= 0) {
    throw ProtoError("periods must be positive");
  }
  if (config_.hold_multiplier <= 0 || config_.tc_expiry_multiplier <= 0 || config_.seq_window == 0) {
    throw ProtoError("multipliers and window must be positive");
  }
  next_hello_ = config_.hello_offset;
  next_tc_ = config_.hello_offset + config_.tc_period;
}

bool Node::can_transmit() const { return !muted_ && !wiped_ && !column_.is_revoked(config_.id); }

void Node::note(Micros now, EventKind kind, MemberId origin, std::uint64_t stamp, std::optional<Subtype> subtype,
                std::string detail) {
  events_.push_back({now, kind, origin, stamp, subtype, std::move(detail)});
}

Bytes Node::seal_field(const DataField& field) { return to_wire(seal(column_, encode_data(field), rng_)); }

void Node::transmit(const DataField& field, const Bytes& wire, bool relay) {
  outbox_.push_back({wire, field.subtype, field.originator, field.stamp, relay});
}

std::vector<Transmission> Node::take_outbox() { return std::exchange(outbox_, {}); }

std::vector<NodeEvent> Node::take_events() { return std::exchange(events_, {}); }

// Receive path

void Node::receive(std::span<const std::uint8_t> wire, Micros now) {
  if (wiped_) return;
  SealedPacket pkt;
  try {
    pkt = from_wire(wire, column_.size());
  } catch (const CryptoError& e) {
    note(now, EventKind::discarded, 0, 0, std::nullopt, e.what());
    return;
  }
  OpenResult opened = open(column_, pkt);
  if (opened.status == OpenStatus::own_packet) return;
  if (!opened.ok()) {
    note(now, EventKind::discarded, opened.originator, 0, std::nullopt, to_string(opened.status));
    return;
  }
  DataField field;
  try {
    field = decode_data(opened.plaintext);
  } catch (const WireError& e) {
    note(now, EventKind::discarded, opened.originator, 0, std::nullopt, e.what());
    return;
  }
  if (field.kind == Kind::control) {
    on_control(opened.originator, field, now);
  } else {
    on_information(field, wire, now);
  }
}

void Node::on_control(MemberId sealed_by, const DataField& field, Micros now) {
  if (field.originator != sealed_by) {
    note(now, EventKind::discarded, sealed_by, field.stamp, field.subtype, "control originator mismatch");
    return;
  }
  const auto stamp = static_cast<std::int64_t>(field.stamp);
  if (std::llabs(now.count() - stamp) > config_.tolerance().count()) {
    note(now, EventKind::stale, sealed_by, field.stamp, field.subtype);
    return;
  }
  auto& recent = control_stamps_[sealed_by];
  if (std::find(recent.begin(), recent.end(), field.stamp) != recent.end()) {
    note(now, EventKind::duplicate, sealed_by, field.stamp, field.subtype);
    return;
  }
  recent.push_back(field.stamp);
  while (recent.size() > config_.control_stamp_memory) recent.pop_front();
  heard_from(sealed_by);

  if (field.subtype == Subtype::hello) {
    try {
      on_hello(sealed_by, decode_hello(field.body), now);
    } catch (const WireError& e) {
      note(now, EventKind::discarded, sealed_by, field.stamp, field.subtype, e.what());
    }
  } else {
    note(now, EventKind::discarded, sealed_by, field.stamp, field.subtype, "unhandled control subtype");
  }
}

void Node::on_hello(MemberId from, const HelloBody& hello, Micros now) {
  if (from == config_.id) return;
  auto lists = [&](const std::vector<MemberId>& v) { return std::find(v.begin(), v.end(), config_.id) != v.end(); };
  if (lists(hello.sym) || lists(hello.asym)) {
    tables_.asym.erase(from);
    tables_.sym[from] = now;
    tables_.two_hop[from] = {NodeSet(hello.sym.begin(), hello.sym.end()), now};
    if (hello.mprs) {
      tables_.mprs_of[from] = NodeSet(hello.mprs->begin(), hello.mprs->end());
    } else {
      tables_.mprs_of.erase(from);
    }
  } else {
    // The sender no longer hears us: the link is one-way again.
    tables_.sym.erase(from);
    tables_.two_hop.erase(from);
    tables_.mprs_of.erase(from);
    tables_.asym[from] = now;
  }
  recompute_cds();
}

void Node::on_information(const DataField& field, std::span<const std::uint8_t> wire,
                          Micros now) {
  if (column_.is_revoked(field.originator)) {
    note(now, EventKind::discarded, field.originator, field.stamp, field.subtype, "originator-revoked");
    return;
  }
  if (field.subtype == Subtype::arq) {
    // ARQs run on their own counter and never enter the gap ledger, so a lost
    // ARQ cannot itself be asked for again.
    auto& seen = arq_seen_[field.originator];
    const auto seq = static_cast<std::uint32_t>(field.stamp);
    if (!seen.insert(seq).second) {
      note(now, EventKind::duplicate, field.originator, field.stamp, field.subtype);
      return;
    }
    while (seen.size() > config_.seq_window) seen.erase(seen.begin());
    try {
      on_arq(field, decode_arq(field.body), wire, now);
    } catch (const WireError& e) {
      note(now, EventKind::discarded, field.originator, field.stamp, field.subtype, e.what());
    }
    return;
  }

  const auto seq = static_cast<std::uint32_t>(field.stamp);
  if (!accept_sequence(field.originator, seq, now)) {
    note(now, EventKind::duplicate, field.originator, field.stamp, field.subtype);
    return;
  }
  // Fresh traffic from a member that announced a mute means it is back.
  if (auto pm = peer_mutes_.find(field.originator); pm != peer_mutes_.end() && seq > pm->second.seq) {
    peer_mutes_.erase(pm);
  }
  Bytes bytes(wire.begin(), wire.end());
  cache_put(field, bytes);
  if (cds_ && can_transmit()) transmit(field, bytes, true);
  apply(field, now);
}

bool Node::accept_sequence(MemberId origin, std::uint32_t seq, Micros now) {
  if (seq == 0) return false;
  auto& ledger = ledgers_[origin];
  const std::uint32_t window = static_cast<std::uint32_t>(config_.seq_window);
  if (seq > ledger.highest) {
    const std::uint32_t first = std::max<std::uint32_t>(ledger.highest + 1, seq > window ? seq - window + 1 : 1);
    for (std::uint32_t g = first; g < seq; ++g) {
      ledger.gaps[g] = Gap{now, now + config_.arq_timeout, 0};
      note(now, EventKind::gap, origin, g, std::nullopt);
    }
    ledger.highest = seq;
    ledger.recent.insert(seq);
    const std::uint32_t floor = seq > window ? seq - window + 1 : 1;
    ledger.recent.erase(ledger.recent.begin(), ledger.recent.lower_bound(floor));
    ledger.gaps.erase(ledger.gaps.begin(), ledger.gaps.lower_bound(floor));
    return true;
  }
  if (seq + window <= ledger.highest) return false;
  if (!ledger.recent.insert(seq).second) return false;
  ledger.gaps.erase(seq);
  return true;
}

void Node::apply(const DataField& field, Micros now) {
  const auto seq = static_cast<std::uint32_t>(field.stamp);
  deliveries_.push_back({now, field.originator, seq, field.subtype, field.body});
  note(now, EventKind::delivered, field.originator, field.stamp, field.subtype);

  try {
    switch (field.subtype) {
      case Subtype::tc:
        on_tc(field.originator, decode_tc(field.body), now);
        break;
      case Subtype::geo: {
        auto fix = decode_geo(field.body);
        if (last_geo_member_ && *last_geo_member_ != field.originator) {
          const double d = haversine_meters(last_geo_[*last_geo_member_], fix);
          if (d > config_.geo_warning_meters) {
            note(now, EventKind::geo_warning, field.originator, field.stamp, field.subtype,
                 fmt::format("{:.0f}m from member {}", d, *last_geo_member_));
          }
        }
        last_geo_[field.originator] = fix;
        last_geo_member_ = field.originator;
        break;
      }
      case Subtype::mute: {
        auto body = decode_mute(field.body);
        PeerMute pm;
        pm.declared = now;
        pm.seq = seq;
        if (body.offset_us) pm.deadline = now + Micros(*body.offset_us);
        peer_mutes_[field.originator] = pm;
        break;
      }
      case Subtype::fail:
        note(now, EventKind::member_failed, field.originator, field.stamp, field.subtype);
        break;
      case Subtype::repudiation:
        on_repudiation(field.originator, decode_member(field.body).member, now);
        break;
      case Subtype::multimedia: {
        auto chunk = decode_chunk(field.body);
        auto& parts = reassembly_[{field.originator, chunk.file_id}];
        parts[chunk.index] = std::move(chunk.data);
        if (parts.size() == chunk.total) {
          std::size_t bytes = 0;
          for (const auto& [_, p] : parts) bytes += p.size();
          note(now, EventKind::multimedia_complete, field.originator, chunk.file_id, field.subtype,
               fmt::format("{} chunks {} bytes", chunk.total, bytes));
          reassembly_.erase({field.originator, chunk.file_id});
        }
        break;
      }
      case Subtype::addition:
        note(now, EventKind::addition, field.originator, field.stamp, field.subtype,
             fmt::format("member {}", decode_member(field.body).member));
        break;
      case Subtype::merge: {
        auto m = decode_merge(field.body);
        note(now, EventKind::merge, field.originator, field.stamp, field.subtype,
             fmt::format("bridge {} with {} members", m.bridge, m.members.size()));
        break;
      }
      default:
        break;
    }
  } catch (const WireError& e) {
    note(now, EventKind::discarded, field.originator, field.stamp, field.subtype, e.what());
  }
}

void Node::on_arq(const DataField& field, const ArqBody& arq, std::span<const std::uint8_t> wire, Micros now) {
  if (arq.origin == config_.id) {
    if (const auto* entry = cache_get(arq.origin, arq.seq)) {
      if (can_transmit()) {
        transmit(entry->field, entry->wire, false);
        note(now, EventKind::arq_answered, arq.origin, arq.seq, entry->field.subtype);
      }
    } else {
      note(now, EventKind::arq_cache_miss, arq.origin, arq.seq, Subtype::arq);
    }
    return;
  }
  if (!cds_ || !can_transmit()) return;
  if (const auto* entry = cache_get(arq.origin, arq.seq)) {
    // Resealed by us: the header names us, the payload still names the origin.
    DataField copy = entry->field;
    transmit(copy, seal_field(copy), false);
    note(now, EventKind::arq_answered, arq.origin, arq.seq, copy.subtype);
    return;
  }
  transmit(field, Bytes(wire.begin(), wire.end()), true);
  note(now, EventKind::arq_forwarded, arq.origin, arq.seq, Subtype::arq);
}

// Neighborhood and election

bool Node::recompute_cds() {
  const TwoHopView v = view();
  bool flag = true;
  if (config_.election == CdsAlgorithm::mpr_cds) {
    static const NodeSet none;
    const NodeSet* mprs = &none;
    if (!v.sym_neighbors.empty()) {
      auto it = tables_.mprs_of.find(static_cast<MemberId>(*v.sym_neighbors.begin()));
      if (it != tables_.mprs_of.end()) mprs = &it->second;
    }
    flag = mpr_cds_flag(v, *mprs);
  } else {
    flag = wu_li_flag(v);
  }
  cds_ = flag;
  return cds_;
}

TwoHopView Node::view() const {
  TwoHopView v;
  v.owner = config_.id;
  v.sym_neighbors = keys_of(tables_.sym);
  for (NodeId y : v.sym_neighbors) {
    auto it = tables_.two_hop.find(static_cast<MemberId>(y));
    if (it != tables_.two_hop.end()) v.neighbor_of[y] = it->second.neighbors;
  }
  return v;
}

MprSelection Node::own_mprs() const { return select_mprs(view()); }

NodeSnapshot Node::snapshot() const {
  NodeSnapshot s;
  s.sym = keys_of(tables_.sym);
  s.asym = keys_of(tables_.asym);
  for (const auto& [y, entry] : tables_.two_hop) s.two_hop[y] = entry.neighbors;
  s.cds = cds_;
  return s;
}

std::optional<DataField> Node::tick_hello(Micros now) {
  if (!can_transmit()) return std::nullopt;
  HelloBody body;
  body.sym = sorted_ids(keys_of(tables_.sym));
  body.asym = sorted_ids(keys_of(tables_.asym));
  if (config_.election == CdsAlgorithm::mpr_cds) body.mprs = sorted_ids(own_mprs().mprs);
  DataField field{Kind::control, Subtype::hello, config_.id, static_cast<std::uint64_t>(now.count()), encode(body)};
  transmit(field, seal_field(field), false);
  return field;
}

void Node::sweep_neighbors(Micros now) {
  const Micros hold = config_.hold_time();
  bool changed = false;
  for (auto* table : {&tables_.sym, &tables_.asym}) {
    for (auto it = table->begin(); it != table->end();) {
      if (now - it->second > hold) {
        tables_.two_hop.erase(it->first);
        tables_.mprs_of.erase(it->first);
        it = table->erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }
  if (changed) recompute_cds();
}

void Node::heard_from(MemberId member) { peer_mutes_.erase(member); }

// Topology control

std::optional<DataField> Node::tick_tc(Micros now) {
  if (!config_.tc_enabled || !cds_ || !can_transmit()) return std::nullopt;
  TcBody body;
  for (const auto& [id, heard] : tables_.sym) body.neighbors.emplace_back(id, static_cast<std::uint64_t>(heard.count()));
  return originate(Subtype::tc, encode(body), now);
}

void Node::on_tc(MemberId from, const TcBody& tc, Micros now) {
  auto [it, created] = directory_.try_emplace(from);
  auto& entry = it->second;
  bool changed = created;
  for (auto [id, ts] : tc.neighbors) {
    auto [slot, fresh] = entry.neighbors.try_emplace(id, ts);
    if (fresh) {
      changed = true;
    } else if (ts > slot->second) {
      slot->second = ts;
      changed = true;
    }
  }
  if (changed) entry.updated = now;
}

// Origination

DataField Node::originate(Subtype subtype, Bytes body, Micros now) {
  if (wiped_) throw ProtoError("node has been wiped");
  if (muted_) throw ProtoError("node is muted");
  if (column_.is_revoked(config_.id)) throw ProtoError("node has been repudiated");
  if (subtype == Subtype::hello || subtype == Subtype::arq) {
    throw ProtoError(fmt::format("{} is not originated by the application", to_string(subtype)));
  }
  DataField field{Kind::information, subtype, config_.id, ++own_seq_, std::move(body)};
  Bytes wire = seal_field(field);
  accept_sequence(config_.id, own_seq_, now);
  cache_put(field, wire);
  transmit(field, wire, false);
  return field;
}

std::vector<DataField> Node::send_multimedia(std::span<const std::uint8_t> content, Micros now) {
  std::vector<DataField> sent;
  for (const auto& chunk : split_multimedia(next_file_id_++, content, config_.multimedia_chunk)) {
    sent.push_back(originate(Subtype::multimedia, encode(chunk), now));
  }
  return sent;
}

DataField Node::send_geo(double latitude, double longitude, Micros now) {
  GeoBody fix{latitude, longitude};
  auto field = originate(Subtype::geo, encode(fix), now);
  last_geo_[config_.id] = fix;
  last_geo_member_ = config_.id;
  return field;
}

DataField Node::repudiate_member(MemberId member, Micros now) {
  if (config_.id != config_.leader) throw ProtoError("only the leader may repudiate");
  if (member >= column_.size()) throw ProtoError(fmt::format("unknown member {}", member));
  auto field = originate(Subtype::repudiation, encode(MemberBody{member}), now);
  on_repudiation(config_.id, member, now);
  return field;
}

void Node::on_repudiation(MemberId sender, MemberId member, Micros now) {
  if (sender != config_.leader) {
    note(now, EventKind::repudiation_ignored, sender, member, Subtype::repudiation, "sender is not the leader");
    return;
  }
  if (member >= column_.size() || column_.is_revoked(member)) return;
  column_ = repudiate(column_, member);
  note(now, EventKind::member_repudiated, sender, member, Subtype::repudiation);
  tables_.sym.erase(member);
  tables_.asym.erase(member);
  tables_.two_hop.erase(member);
  tables_.mprs_of.erase(member);
  directory_.erase(member);
  recompute_cds();
}

// Mute

std::optional<DataField> Node::set_mute(bool on, std::optional<Micros> declared_offset, Micros now, bool indefinite) {
  if (wiped_) return std::nullopt;
  if (!on) {
    if (!muted_) return std::nullopt;
    muted_ = false;
    note(now, EventKind::unmuted, config_.id, 0, Subtype::mute);
    // Catch up on whatever went missing while silent.
    for (auto& [_, ledger] : ledgers_) {
      for (auto& [seq, gap] : ledger.gaps) gap.next_arq = std::min(gap.next_arq, now);
    }
    fire_arqs(now);
    next_hello_ = now;
    return std::nullopt;
  }
  if (muted_) return std::nullopt;
  std::optional<DataField> announced;
  if (can_transmit()) {
    MuteBody body;
    body.indefinite = indefinite;
    if (!indefinite && declared_offset) body.offset_us = static_cast<std::uint64_t>(declared_offset->count());
    announced = originate(Subtype::mute, encode(body), now);
  }
  muted_ = true;
  note(now, EventKind::muted, config_.id, 0, Subtype::mute);
  return announced;
}

DemuteOutcome Node::demute_with_password(const std::string& attempt, Micros deadline, Micros now) {
  if (wiped_) return DemuteOutcome::failed;
  if (!muted_) return DemuteOutcome::unmuted;
  if (now > deadline) {
    muted_ = false;
    if (can_transmit()) originate(Subtype::fail, {}, now);
    wipe(now);
    return DemuteOutcome::failed;
  }
  if (sha256(std::span(reinterpret_cast<const std::uint8_t*>(attempt.data()), attempt.size())) !=
      sha256(std::span(reinterpret_cast<const std::uint8_t*>(config_.password.data()), config_.password.size()))) {
    note(now, EventKind::demute_rejected, config_.id, 0, Subtype::mute);
    return DemuteOutcome::rejected;
  }
  set_mute(false, std::nullopt, now);
  return DemuteOutcome::unmuted;
}

void Node::wipe(Micros now) {
  tables_ = {};
  ledgers_.clear();
  arq_seen_.clear();
  control_stamps_.clear();
  directory_.clear();
  peer_mutes_.clear();
  last_geo_.clear();
  last_geo_member_.reset();
  reassembly_.clear();
  cache_.clear();
  cache_order_.clear();
  deliveries_.clear();
  for (auto& k : column_.column) k.fill(0);
  cds_ = false;
  wiped_ = true;
  note(now, EventKind::wiped, config_.id, 0, Subtype::fail);
}

// Timers

void Node::expire(Micros now) {
  if (wiped_) return;
  sweep_neighbors(now);

  const Micros tc_expiry = config_.tc_expiry();
  for (auto it = directory_.begin(); it != directory_.end();) {
    if (now - it->second.updated > tc_expiry) {
      it = directory_.erase(it);
      continue;
    }
    auto& nb = it->second.neighbors;
    for (auto n = nb.begin(); n != nb.end();) {
      if (now.count() - static_cast<std::int64_t>(n->second) > tc_expiry.count()) {
        n = nb.erase(n);
      } else {
        ++n;
      }
    }
    ++it;
  }

  for (auto& [member, pm] : peer_mutes_) {
    if (pm.flagged || !pm.deadline || now <= *pm.deadline) continue;
    pm.flagged = true;
    note(now, EventKind::mute_overdue, member, 0, Subtype::mute);
    if (config_.id == config_.leader && config_.repudiate_overdue_mute && can_transmit() &&
        !column_.is_revoked(member)) {
      repudiate_member(member, now);
    }
  }
}

void Node::fire_arqs(Micros now) {
  if (!can_transmit()) return;
  for (auto& [origin, ledger] : ledgers_) {
    for (auto it = ledger.gaps.begin(); it != ledger.gaps.end();) {
      auto& [seq, gap] = *it;
      if (gap.next_arq > now) {
        ++it;
        continue;
      }
      if (gap.attempts >= config_.arq_max_attempts) {
        note(now, EventKind::gap_abandoned, origin, seq, Subtype::arq);
        it = ledger.gaps.erase(it);
        continue;
      }
      DataField field{Kind::information, Subtype::arq, config_.id, ++own_arq_seq_, encode(ArqBody{origin, seq})};
      transmit(field, seal_field(field), false);
      note(now, EventKind::arq_sent, origin, seq, Subtype::arq);
      ++gap.attempts;
      gap.next_arq = now + config_.arq_timeout;
      ++it;
    }
  }
}

void Node::advance(Micros now) {
  if (wiped_) return;
  expire(now);
  if (now >= next_hello_) {
    tick_hello(now);
    while (next_hello_ <= now) next_hello_ += config_.hello_period;
  }
  if (config_.tc_enabled && now >= next_tc_) {
    tick_tc(now);
    while (next_tc_ <= now) next_tc_ += config_.tc_period;
  }
  fire_arqs(now);
}

std::optional<Micros> Node::next_wakeup() const {
  if (wiped_) return std::nullopt;
  Micros next = next_hello_;
  if (config_.tc_enabled) next = std::min(next, next_tc_);
  if (can_transmit()) {
    for (const auto& [_, ledger] : ledgers_) {
      for (const auto& [seq, gap] : ledger.gaps) next = std::min(next, gap.next_arq);
    }
  }
  for (const auto& [_, pm] : peer_mutes_) {
    if (!pm.flagged && pm.deadline) next = std::min(next, *pm.deadline + Micros(1));
  }
  return next;
}

// Packet cache (LRU)

void Node::cache_put(const DataField& field, Bytes wire) {
  const CacheKey key{field.originator, static_cast<std::uint32_t>(field.stamp)};
  if (auto it = cache_.find(key); it != cache_.end()) {
    cache_order_.erase(it->second.second);
    cache_.erase(it);
  }
  cache_order_.push_front(key);
  cache_.emplace(key, std::make_pair(CacheEntry{field, std::move(wire)}, cache_order_.begin()));
  while (cache_.size() > config_.cache_capacity) {
    cache_.erase(cache_order_.back());
    cache_order_.pop_back();
  }
}

const Node::CacheEntry* Node::cache_get(MemberId origin, std::uint32_t seq) const {
  auto it = cache_.find({origin, seq});
  return it == cache_.end() ? nullptr : &it->second.first;
}

bool Node::cached(MemberId origin, std::uint32_t seq) const { return cache_get(origin, seq) != nullptr; }

}  // namespace bb
