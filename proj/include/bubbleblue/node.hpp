// One bubble member's protocol state.
//
// A Node never reads a clock: every entry point takes the current time, and
// the owner asks next_wakeup() when to call advance() again. Anything the
// node sends is queued in its outbox as a sealed packet; the owner fans each
// one out as a unicast to every Bluetooth neighbor.
#pragma once

#include <chrono>
#include <deque>
#include <list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bubbleblue/cds.hpp"
#include "bubbleblue/crypto.hpp"
#include "bubbleblue/datafield.hpp"

namespace bb {

using Micros = std::chrono::microseconds;
using namespace std::chrono_literals;

struct NodeConfig {
  MemberId id = 0;
  MemberId leader = 0;
  Micros hello_period = 1s;
  Micros hello_offset = 0us;  // phase of this node's hello ticks
  Micros tc_period = 5s;
  bool tc_enabled = true;
  int hold_multiplier = 3;
  int tc_expiry_multiplier = 3;
  Micros arq_timeout = 500ms;
  int arq_max_attempts = 3;
  Micros timestamp_tolerance = 0us;  // 0 selects 2 x hello_period
  std::size_t seq_window = 64;
  std::size_t cache_capacity = 128;
  std::size_t control_stamp_memory = 10;
  CdsAlgorithm election = CdsAlgorithm::wu_li_1999;
  std::size_t multimedia_chunk = 8192;
  double geo_warning_meters = 200.0;
  std::string password;
  bool repudiate_overdue_mute = false;  // leader only

  Micros tolerance() const { return timestamp_tolerance.count() > 0 ? timestamp_tolerance : 2 * hello_period; }
  Micros hold_time() const { return hold_multiplier * hello_period; }
  Micros tc_expiry() const { return tc_expiry_multiplier * tc_period; }
};

class ProtoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A packet handed to the link layer.
struct Transmission {
  Bytes wire;
  Subtype subtype = Subtype::chat;
  MemberId origin = 0;  // DataField originator
  std::uint64_t stamp = 0;
  bool relay = false;
};

enum class EventKind {
  delivered,
  duplicate,
  discarded,
  stale,
  gap,
  arq_sent,
  arq_answered,
  arq_forwarded,
  arq_cache_miss,
  gap_abandoned,
  muted,
  unmuted,
  demute_rejected,
  wiped,
  mute_overdue,
  member_failed,
  member_repudiated,
  repudiation_ignored,
  geo_warning,
  multimedia_complete,
  addition,
  merge,
};

std::string to_string(EventKind k);

struct NodeEvent {
  Micros time{};
  EventKind kind = EventKind::delivered;
  MemberId origin = 0;
  std::uint64_t stamp = 0;
  std::optional<Subtype> subtype;  // unset when the packet could not be opened
  std::string detail;
};

struct Delivery {
  Micros time{};
  MemberId origin = 0;
  std::uint32_t seq = 0;
  Subtype subtype = Subtype::chat;
  Bytes body;
};

struct NeighborTables {
  std::map<MemberId, Micros> sym;
  std::map<MemberId, Micros> asym;
  struct TwoHop {
    NodeSet neighbors;
    Micros heard{};
  };
  std::map<MemberId, TwoHop> two_hop;
  std::map<MemberId, NodeSet> mprs_of;  // MPR sets advertised in hellos
};

struct Gap {
  Micros detected{};
  Micros next_arq{};
  int attempts = 0;
};

struct OriginLedger {
  std::uint32_t highest = 0;
  std::set<std::uint32_t> recent;
  std::map<std::uint32_t, Gap> gaps;
};

struct DirectoryEntry {
  Micros updated{};
  std::map<MemberId, std::uint64_t> neighbors;
};

struct PeerMute {
  Micros declared{};
  std::uint32_t seq = 0;  // sequence number of the mute announcement
  std::optional<Micros> deadline;
  bool flagged = false;
};

enum class DemuteOutcome { unmuted, rejected, failed };

/// Comparable slice of the state, used to detect hello fixpoints.
struct NodeSnapshot {
  NodeSet sym;
  NodeSet asym;
  std::map<NodeId, NodeSet> two_hop;
  bool cds = false;

  friend bool operator==(const NodeSnapshot&, const NodeSnapshot&) = default;
};

class Node {
 public:
  Node(NodeConfig config, KeyColumn column, std::uint64_t rng_seed);

  MemberId id() const { return config_.id; }
  const NodeConfig& config() const { return config_; }

  // Entry points driven by the owner.
  void receive(std::span<const std::uint8_t> wire, Micros now);
  void advance(Micros now);
  std::optional<Micros> next_wakeup() const;

  /// Originates an information packet; throws ProtoError when muted, wiped
  /// or revoked.
  DataField originate(Subtype subtype, Bytes body, Micros now);
  std::vector<DataField> send_multimedia(std::span<const std::uint8_t> content, Micros now);
  DataField send_geo(double latitude, double longitude, Micros now);
  /// Leader only: floods a repudiation and applies it locally.
  DataField repudiate_member(MemberId member, Micros now);

  std::optional<DataField> set_mute(bool on, std::optional<Micros> declared_offset, Micros now,
                                    bool indefinite = false);
  DemuteOutcome demute_with_password(const std::string& attempt, Micros deadline, Micros now);

  // Protocol steps, exposed for direct testing.
  std::optional<DataField> tick_hello(Micros now);
  void on_hello(MemberId from, const HelloBody& hello, Micros now);
  bool recompute_cds();
  std::optional<DataField> tick_tc(Micros now);
  void on_tc(MemberId from, const TcBody& tc, Micros now);
  void on_repudiation(MemberId sender, MemberId member, Micros now);
  void expire(Micros now);

  TwoHopView view() const;
  MprSelection own_mprs() const;
  NodeSnapshot snapshot() const;

  bool cds_flag() const { return cds_; }
  bool muted() const { return muted_; }
  bool wiped() const { return wiped_; }
  std::uint32_t own_seq() const { return own_seq_; }
  const NeighborTables& tables() const { return tables_; }
  const std::map<MemberId, DirectoryEntry>& directory() const { return directory_; }
  const std::map<MemberId, OriginLedger>& ledgers() const { return ledgers_; }
  const KeyColumn& column() const { return column_; }
  bool cached(MemberId origin, std::uint32_t seq) const;

  const std::vector<Delivery>& deliveries() const { return deliveries_; }
  std::vector<Transmission> take_outbox();
  std::vector<NodeEvent> take_events();
  const std::vector<NodeEvent>& events() const { return events_; }

 private:
  struct CacheEntry {
    DataField field;
    Bytes wire;  // sealed bytes exactly as first seen or sent
  };
  using CacheKey = std::pair<MemberId, std::uint32_t>;

  bool can_transmit() const;
  void transmit(const DataField& field, const Bytes& wire, bool relay);
  Bytes seal_field(const DataField& field);
  void note(Micros now, EventKind kind, MemberId origin, std::uint64_t stamp, std::optional<Subtype> subtype,
            std::string detail = {});

  void on_control(MemberId sealed_by, const DataField& field, Micros now);
  void on_information(const DataField& field, std::span<const std::uint8_t> wire, Micros now);
  void on_arq(const DataField& field, const ArqBody& arq, std::span<const std::uint8_t> wire, Micros now);
  void apply(const DataField& field, Micros now);
  bool accept_sequence(MemberId origin, std::uint32_t seq, Micros now);
  void fire_arqs(Micros now);
  void sweep_neighbors(Micros now);
  void heard_from(MemberId member);

  void cache_put(const DataField& field, Bytes wire);
  const CacheEntry* cache_get(MemberId origin, std::uint32_t seq) const;

  void wipe(Micros now);

  NodeConfig config_;
  KeyColumn column_;
  Drbg rng_;

  NeighborTables tables_;
  bool cds_ = true;
  std::uint32_t own_seq_ = 0;
  std::uint32_t own_arq_seq_ = 0;
  std::uint32_t next_file_id_ = 1;
  std::map<MemberId, OriginLedger> ledgers_;
  std::map<MemberId, std::set<std::uint32_t>> arq_seen_;
  std::map<MemberId, std::deque<std::uint64_t>> control_stamps_;
  std::map<MemberId, DirectoryEntry> directory_;
  std::map<MemberId, PeerMute> peer_mutes_;
  std::map<MemberId, GeoBody> last_geo_;
  std::optional<MemberId> last_geo_member_;
  std::map<std::pair<MemberId, std::uint32_t>, std::map<std::uint16_t, Bytes>> reassembly_;

  std::list<CacheKey> cache_order_;  // front = most recent
  std::map<CacheKey, std::pair<CacheEntry, std::list<CacheKey>::iterator>> cache_;

  Micros next_hello_{};
  Micros next_tc_{};
  bool muted_ = false;
  bool wiped_ = false;

  std::vector<Transmission> outbox_;
  std::vector<NodeEvent> events_;
  std::vector<Delivery> deliveries_;
};

/// Great-circle distance in meters.
double haversine_meters(const GeoBody& a, const GeoBody& b);

}  // namespace bb
