#include "bubbleblue/sim.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <sstream>

namespace bb {

namespace {

std::pair<NodeId, NodeId> undirected(NodeId u, NodeId v) { return u < v ? std::pair{u, v} : std::pair{v, u}; }

bool is_flooded(Subtype s) { return s != Subtype::hello && s != Subtype::tc; }

std::string describe(const Action& a) {
  std::string out = fmt::format("{} {}", to_string(a.kind), a.node);
  switch (a.kind) {
    case ActionKind::chat: out += " " + a.text; break;
    case ActionKind::geo: out += fmt::format(" {:.6f} {:.6f}", a.x, a.y); break;
    case ActionKind::multimedia: out += fmt::format(" {}B", a.count); break;
    case ActionKind::mute:
      if (a.indefinite) out += " indefinite";
      else if (a.offset) out += " " + format_duration(*a.offset);
      break;
    case ActionKind::demute: out += a.deadline ? " deadline=" + format_duration(*a.deadline) : ""; break;
    case ActionKind::repudiate:
    case ActionKind::drop_link:
    case ActionKind::restore_link: out += fmt::format(" {}", a.other); break;
    case ActionKind::drop_next: out += fmt::format(" {} x{}", a.other, a.count); break;
    case ActionKind::loss: out += fmt::format(" {} p={:.4f}", a.other, a.x); break;
    case ActionKind::kill: break;
  }
  return out;
}

}  // namespace

Simulator::Simulator(Scenario scenario)
    : scenario_(std::move(scenario)), graph_(resolve_graph(scenario_)), rng_(scenario_.seed) {
  const std::size_t n = graph_.size();
  if (n == 0) throw SimError("scenario has no nodes");
  if (n > kMaxMembers) throw SimError(fmt::format("bubbles hold at most {} members", kMaxMembers));
  for (const auto& [link, p] : scenario_.link.link_loss) {
    if (link.first >= n || link.second >= n || !graph_.adjacent(link.first, link.second)) {
      throw ScenarioError(fmt::format("unknown edge {}-{}", link.first, link.second));
    }
    if (p < 0.0 || p >= 1.0) throw ScenarioError("loss probability must be in [0, 1)");
  }
  for (const auto& part : scenario_.partitions) {
    for (auto [u, v] : part.cut) {
      if (u >= n || v >= n || !graph_.adjacent(u, v)) throw ScenarioError(fmt::format("unknown edge {}-{}", u, v));
    }
  }
  for (const auto& a : scenario_.actions) {
    if (a.node >= n) throw ScenarioError(fmt::format("action names unknown node {}", a.node));
    const bool pairwise = a.kind == ActionKind::drop_link || a.kind == ActionKind::restore_link ||
                          a.kind == ActionKind::drop_next || a.kind == ActionKind::loss;
    if (pairwise && (a.other >= n || !graph_.adjacent(a.node, a.other))) {
      throw ScenarioError(fmt::format("unknown edge {}-{}", a.node, a.other));
    }
    if (a.kind == ActionKind::repudiate && a.other >= n) throw ScenarioError(fmt::format("unknown member {}", a.other));
  }
  link_loss_ = scenario_.link.link_loss;

  Drbg key_rng(scenario_.seed ^ 0x6b65792d6d6174ULL);
  const KeyMatrix matrix = generate_matrix(n, key_rng);
  const auto period = scenario_.node_defaults.hello_period.count();
  const auto jitter = std::max<long long>(1, period / 10);
  nodes_.reserve(n);
  for (NodeId id = 0; id < n; ++id) {
    NodeConfig config = scenario_.node_defaults;
    config.id = static_cast<MemberId>(id);
    config.hello_offset = Micros(static_cast<long long>(rng_() % static_cast<std::uint64_t>(jitter)));
    if (auto it = scenario_.passwords.find(id); it != scenario_.passwords.end()) config.password = it->second;
    nodes_.emplace_back(config, column_for(matrix, id), scenario_.seed * 1000003ULL + id);
  }
  dead_.assign(n, false);
  flag_.assign(n, true);
  wake_at_.assign(n, std::nullopt);
  metrics_.unicasts_per_node.assign(n, 0);
  for (NodeId id = 0; id < n; ++id) schedule_wakeup(id);
  for (std::size_t i = 0; i < scenario_.actions.size(); ++i) {
    push({scenario_.actions[i].time, 0, EventType::action, 0, 0, nullptr, i});
  }
  sample_cds();
}

Node& Simulator::node(NodeId id) {
  if (id >= nodes_.size()) throw SimError(fmt::format("unknown node {}", id));
  return nodes_[id];
}

const Node& Simulator::node(NodeId id) const {
  if (id >= nodes_.size()) throw SimError(fmt::format("unknown node {}", id));
  return nodes_[id];
}

void Simulator::push(Event e) {
  e.order = order_++;
  queue_.push(std::move(e));
}

void Simulator::log(const std::string& line) { trace_.push_back(fmt::format("t={} {}", now_.count(), line)); }

bool Simulator::link_up(NodeId u, NodeId v) const {
  if (dead_[u] || dead_[v] || !graph_.adjacent(u, v)) return false;
  if (dropped_.count(undirected(u, v))) return false;
  for (const auto& part : scenario_.partitions) {
    if (now_ < part.start || now_ >= part.end) continue;
    for (auto [a, b] : part.cut) {
      if (undirected(a, b) == undirected(u, v)) return false;
    }
  }
  return true;
}

Graph Simulator::live_graph() const {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId u = 0; u < graph_.size(); ++u) {
    for (NodeId v : graph_.neighbors(u)) {
      if (u < v && link_up(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(graph_.size(), edges);
}

NodeSet Simulator::live_cds() const {
  NodeSet out;
  for (NodeId id = 0; id < nodes_.size(); ++id) {
    const Node& n = nodes_[id];
    if (!dead_[id] && !n.wiped() && !n.column().is_revoked(n.id()) && n.cds_flag()) out.insert(id);
  }
  return out;
}

void Simulator::sample_cds() {
  NodeSet cds = live_cds();
  metrics_.cds_samples.push_back({now_, cds.size(), set_degree(graph_, cds)});
}

void Simulator::schedule_wakeup(NodeId id) {
  if (dead_[id]) return;
  auto next = nodes_[id].next_wakeup();
  if (!next) {
    wake_at_[id].reset();
    return;
  }
  Micros t = std::max(*next, now_);
  if (wake_at_[id] && *wake_at_[id] == t) return;
  wake_at_[id] = t;
  push({t, 0, EventType::wakeup, id, id, nullptr, 0});
}

void Simulator::fan_out(NodeId from, const Transmission& tx) {
  auto packet = std::make_shared<const Transmission>(tx);
  std::vector<NodeId> targets;
  for (NodeId v : graph_.neighbors(from)) {
    if (link_up(from, v)) targets.push_back(v);
  }
  std::string list;
  for (NodeId v : targets) list += (list.empty() ? "" : ",") + std::to_string(v);
  log(fmt::format("tx {} {} o={} s={}{} -> {}", from, to_string(tx.subtype), tx.origin, tx.stamp,
                  tx.relay ? " relay" : "", list.empty() ? "-" : list));

  const FloodKey key{tx.origin, static_cast<std::uint32_t>(tx.stamp), tx.subtype};
  if (is_flooded(tx.subtype) && !tx.relay && tx.origin == from && !metrics_.flood_started.count(key)) {
    metrics_.flood_started[key] = now_;
  }
  for (NodeId v : targets) {
    ++metrics_.unicasts;
    ++metrics_.unicasts_per_node[from];
    ++metrics_.unicasts_by_subtype[tx.subtype];
    if (is_flooded(tx.subtype)) ++metrics_.flood_unicasts[key];

    bool lost = false;
    if (auto it = drop_next_.find({from, v}); it != drop_next_.end() && it->second > 0) {
      --it->second;
      lost = true;
    } else {
      auto p = scenario_.link.loss;
      if (auto l = link_loss_.find({from, v}); l != link_loss_.end()) p = l->second;
      if (p > 0.0 && unit_interval(rng_()) < p) lost = true;
    }
    if (lost) {
      ++metrics_.losses;
      log(fmt::format("lost {}->{} {} o={} s={}", from, v, to_string(tx.subtype), tx.origin, tx.stamp));
      continue;
    }
    const auto lo = scenario_.link.delay_min.count();
    const auto span = static_cast<std::uint64_t>(scenario_.link.delay_max.count() - lo) + 1;
    const Micros delay(lo + static_cast<long long>(rng_() % span));
    ++metrics_.in_flight;
    push({now_ + delay, 0, EventType::deliver, from, v, packet, 0});
  }
}

void Simulator::pump(NodeId id) {
  Node& n = nodes_[id];
  for (const auto& ev : n.take_events()) {
    switch (ev.kind) {
      case EventKind::delivered: {
        ++metrics_.deliveries;
        metrics_.flood_last_delivery[{ev.origin, static_cast<std::uint32_t>(ev.stamp), ev.subtype.value_or(Subtype::chat)}] =
            now_;
        break;
      }
      case EventKind::duplicate: ++metrics_.duplicates; break;
      case EventKind::arq_sent: ++metrics_.arq_sent; break;
      case EventKind::arq_answered: ++metrics_.arq_answered; break;
      case EventKind::arq_forwarded: ++metrics_.arq_forwarded; break;
      case EventKind::gap_abandoned: ++metrics_.gaps_abandoned; break;
      default: break;
    }
    log(fmt::format("node {} {} o={} s={} {}{}", id, to_string(ev.kind), ev.origin, ev.stamp,
                    ev.subtype ? to_string(*ev.subtype) : "?",
                    ev.detail.empty() ? "" : " " + ev.detail));
  }
  auto outbox = n.take_outbox();
  if (!dead_[id]) {
    for (const auto& tx : outbox) fan_out(id, tx);
  }
  const bool flag = !n.wiped() && !n.column().is_revoked(n.id()) && n.cds_flag();
  if (flag != flag_[id]) {
    flag_[id] = flag;
    log(fmt::format("cds {} {}", id, flag ? "on" : "off"));
    sample_cds();
  }
  schedule_wakeup(id);
}

DataField Simulator::originate(NodeId id, Subtype subtype, Bytes body) {
  auto field = node(id).originate(subtype, std::move(body), now_);
  pump(id);
  return field;
}

void Simulator::perform(const Action& a) {
  log("action " + describe(a));
  Node& n = node(a.node);
  try {
    switch (a.kind) {
      case ActionKind::chat:
        n.originate(Subtype::chat, Bytes(a.text.begin(), a.text.end()), now_);
        break;
      case ActionKind::geo:
        n.send_geo(a.x, a.y, now_);
        break;
      case ActionKind::multimedia: {
        Bytes content(a.count);
        for (std::size_t i = 0; i < content.size(); ++i) content[i] = static_cast<std::uint8_t>(i * 31 + 7);
        n.send_multimedia(content, now_);
        break;
      }
      case ActionKind::mute:
        n.set_mute(true, a.offset, now_, a.indefinite);
        break;
      case ActionKind::demute: {
        auto outcome = n.demute_with_password(a.text, a.deadline.value_or(Micros::max()), now_);
        if (outcome == DemuteOutcome::rejected) log(fmt::format("demute {} rejected", a.node));
        break;
      }
      case ActionKind::repudiate:
        n.repudiate_member(static_cast<MemberId>(a.other), now_);
        break;
      case ActionKind::drop_link:
        dropped_.insert(undirected(a.node, a.other));
        break;
      case ActionKind::restore_link:
        dropped_.erase(undirected(a.node, a.other));
        break;
      case ActionKind::kill:
        dead_[a.node] = true;
        wake_at_[a.node].reset();
        break;
      case ActionKind::drop_next:
        drop_next_[{a.node, a.other}] += a.count;
        break;
      case ActionKind::loss:
        if (a.x < 0.0 || a.x >= 1.0) throw ScenarioError("loss probability must be in [0, 1)");
        link_loss_[{a.node, a.other}] = a.x;
        break;
    }
  } catch (const ProtoError& e) {
    log(fmt::format("refused {}: {}", a.node, e.what()));
  }
  pump(a.node);
  if (a.kind == ActionKind::kill) sample_cds();
}

void Simulator::run_until(Micros t) {
  while (!queue_.empty() && queue_.top().time <= t) {
    Event e = queue_.top();
    queue_.pop();
    now_ = e.time;
    switch (e.type) {
      case EventType::deliver:
        --metrics_.in_flight;
        if (dead_[e.to]) {
          ++metrics_.losses;
          break;
        }
        ++metrics_.receptions;
        nodes_[e.to].receive(e.packet->wire, now_);
        pump(e.to);
        break;
      case EventType::wakeup:
        if (dead_[e.to] || !wake_at_[e.to] || *wake_at_[e.to] != e.time) break;
        wake_at_[e.to].reset();
        nodes_[e.to].advance(now_);
        pump(e.to);
        if (wake_at_[e.to] && *wake_at_[e.to] <= now_) {
          // A wakeup that did not move forward would spin; nudge it.
          wake_at_[e.to] = now_ + Micros(1);
          push({now_ + Micros(1), 0, EventType::wakeup, e.to, e.to, nullptr, 0});
        }
        break;
      case EventType::action:
        perform(scenario_.actions[e.action]);
        break;
    }
  }
  now_ = std::max(now_, t);
}

ConvergeReport Simulator::converge(std::size_t max_periods) {
  const Micros base = now_;
  const Micros period = scenario_.node_defaults.hello_period;
  std::vector<NodeSnapshot> previous;
  std::size_t last_change = 0;
  for (std::size_t r = 1; r <= max_periods; ++r) {
    run_until(base + static_cast<long long>(r) * period);
    std::vector<NodeSnapshot> snaps;
    snaps.reserve(nodes_.size());
    for (const auto& n : nodes_) snaps.push_back(n.snapshot());
    if (r > 1 && snaps == previous) return {last_change, std::move(snaps), live_cds()};
    last_change = r;
    previous = std::move(snaps);
  }
  throw SimError(fmt::format("no hello fixpoint within {} periods", max_periods));
}

std::string Simulator::trace_text() const {
  std::string out;
  for (const auto& line : trace_) {
    out += line;
    out += '\n';
  }
  return out;
}

std::string Simulator::trace_hash() const {
  const std::string text = trace_text();
  return hex(sha256(std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size())));
}

RunResult run_scenario(const Scenario& scenario) {
  Simulator sim(scenario);
  sim.run();
  return {sim.metrics(), sim.trace(), sim.trace_hash()};
}

}  // namespace bb
