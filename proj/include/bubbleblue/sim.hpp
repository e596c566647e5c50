// Discrete-event simulation of a bubble over a unit disk graph.
//
// Every transmission is fanned out as one unicast per current neighbor, each
// with its own seeded delay and loss draw. Runs are deterministic for a given
// scenario, so the trace (and its hash) is reproducible.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <queue>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "bubbleblue/node.hpp"
#include "bubbleblue/scenario.hpp"

namespace bb {

class SimError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Identifies one flood: (originator, sequence number, subtype).
using FloodKey = std::tuple<MemberId, std::uint32_t, Subtype>;

struct CdsSample {
  Micros time{};
  std::size_t size = 0;
  std::size_t degree_sum = 0;
};

struct Metrics {
  std::size_t unicasts = 0;
  std::size_t receptions = 0;  // unicasts that reached a live node
  std::size_t losses = 0;      // unicasts dropped by the link or a dead peer
  std::size_t in_flight = 0;
  std::vector<std::size_t> unicasts_per_node;
  std::map<Subtype, std::size_t> unicasts_by_subtype;
  std::map<FloodKey, std::size_t> flood_unicasts;
  std::map<FloodKey, Micros> flood_started;
  std::map<FloodKey, Micros> flood_last_delivery;
  std::size_t deliveries = 0;
  std::size_t duplicates = 0;
  std::size_t arq_sent = 0;
  std::size_t arq_answered = 0;
  std::size_t arq_forwarded = 0;
  std::size_t gaps_abandoned = 0;
  std::vector<CdsSample> cds_samples;

  /// Every unicast ends up received, lost, or still in flight.
  bool conserved() const { return unicasts == receptions + losses + in_flight; }
};

struct ConvergeReport {
  std::size_t periods = 0;  // hello periods until the fixpoint was reached
  std::vector<NodeSnapshot> snapshots;
  NodeSet cds;
};

class Simulator {
 public:
  explicit Simulator(Scenario scenario);

  const Scenario& scenario() const { return scenario_; }
  /// Ground-truth topology as deployed.
  const Graph& graph() const { return graph_; }
  /// Topology right now: dropped links, active partitions and dead nodes removed.
  Graph live_graph() const;
  Micros now() const { return now_; }

  Node& node(NodeId id);
  const Node& node(NodeId id) const;
  std::size_t size() const { return nodes_.size(); }

  void run_until(Micros t);
  void run() { run_until(scenario_.duration); }

  /// Runs whole hello periods until the neighbor tables and CDS flags stop
  /// changing. Throws SimError when no fixpoint shows up within max_periods.
  ConvergeReport converge(std::size_t max_periods = 10);

  /// Members whose CDS flag is set (dead or wiped nodes excluded).
  NodeSet live_cds() const;

  // Immediate actions, applied at the current time.
  void perform(const Action& action);
  DataField originate(NodeId id, Subtype subtype, Bytes body);

  const Metrics& metrics() const { return metrics_; }
  const std::vector<std::string>& trace() const { return trace_; }
  std::string trace_text() const;
  std::string trace_hash() const;

 private:
  enum class EventType { deliver, wakeup, action };
  struct Event {
    Micros time{};
    std::uint64_t order = 0;
    EventType type = EventType::wakeup;
    NodeId from = 0;
    NodeId to = 0;
    std::shared_ptr<const Transmission> packet;
    std::size_t action = 0;
  };
  struct Later {
    bool operator()(const Event& a, const Event& b) const {
      return std::tie(a.time, a.order) > std::tie(b.time, b.order);
    }
  };

  void push(Event e);
  void schedule_wakeup(NodeId id);
  void pump(NodeId id);
  void fan_out(NodeId from, const Transmission& tx);
  bool link_up(NodeId u, NodeId v) const;
  void sample_cds();
  void log(const std::string& line);

  Scenario scenario_;
  Graph graph_;
  std::vector<Node> nodes_;
  std::vector<bool> dead_;
  std::vector<bool> flag_;
  std::vector<std::optional<Micros>> wake_at_;
  std::set<std::pair<NodeId, NodeId>> dropped_;
  std::map<DirectedLink, std::size_t> drop_next_;
  std::map<DirectedLink, double> link_loss_;

  std::priority_queue<Event, std::vector<Event>, Later> queue_;
  std::uint64_t order_ = 0;
  Micros now_{};
  std::mt19937_64 rng_;

  Metrics metrics_;
  std::vector<std::string> trace_;
};

/// Convenience: simulate a scenario to its end.
struct RunResult {
  Metrics metrics;
  std::vector<std::string> trace;
  std::string trace_hash;
};
RunResult run_scenario(const Scenario& scenario);

}  // namespace bb
