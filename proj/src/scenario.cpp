#include "bubbleblue/scenario.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace bb {

std::string to_string(ActionKind k) {
  switch (k) {
    case ActionKind::chat: return "chat";
    case ActionKind::geo: return "geo";
    case ActionKind::multimedia: return "multimedia";
    case ActionKind::mute: return "mute";
    case ActionKind::demute: return "demute";
    case ActionKind::repudiate: return "repudiate";
    case ActionKind::drop_link: return "drop-link";
    case ActionKind::restore_link: return "restore-link";
    case ActionKind::kill: return "kill";
    case ActionKind::drop_next: return "drop-next";
    case ActionKind::loss: return "loss";
  }
  return "unknown";
}

Micros parse_duration(const std::string& text) {
  std::size_t pos = 0;
  long long value = 0;
  try {
    value = std::stoll(text, &pos);
  } catch (const std::exception&) {
    throw ScenarioError("bad duration: " + text);
  }
  const std::string unit = text.substr(pos);
  if (value < 0) throw ScenarioError("negative duration: " + text);
  if (unit.empty() || unit == "us") return Micros(value);
  if (unit == "ms") return Micros(value * 1000);
  if (unit == "s") return Micros(value * 1000000);
  throw ScenarioError("unknown duration unit in: " + text);
}

std::string format_duration(Micros d) { return fmt::format("{}us", d.count()); }

namespace {

bool parse_flag(const std::string& v) {
  if (v == "on" || v == "true" || v == "1" || v == "yes") return true;
  if (v == "off" || v == "false" || v == "0" || v == "no") return false;
  throw ScenarioError("expected on/off, got " + v);
}

std::pair<std::string, std::string> split_kv(const std::string& token) {
  auto eq = token.find('=');
  if (eq == std::string::npos) throw ScenarioError("expected key=value, got " + token);
  return {token.substr(0, eq), token.substr(eq + 1)};
}

NodeId parse_node(const std::string& s) {
  try {
    std::size_t pos = 0;
    auto v = std::stoul(s, &pos);
    if (pos != s.size()) throw ScenarioError("bad node id: " + s);
    return static_cast<NodeId>(v);
  } catch (const std::logic_error&) {
    throw ScenarioError("bad node id: " + s);
  }
}

double parse_real(const std::string& s) {
  try {
    return std::stod(s);
  } catch (const std::logic_error&) {
    throw ScenarioError("bad number: " + s);
  }
}

std::vector<std::pair<NodeId, NodeId>> parse_cut(const std::string& list) {
  std::vector<std::pair<NodeId, NodeId>> cut;
  std::istringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto dash = item.find('-');
    if (dash == std::string::npos) throw ScenarioError("bad edge in cut: " + item);
    cut.emplace_back(parse_node(item.substr(0, dash)), parse_node(item.substr(dash + 1)));
  }
  return cut;
}

Action parse_action(Micros time, const std::vector<std::string>& args, std::size_t line_no) {
  auto need = [&](std::size_t n) {
    if (args.size() < n) throw ScenarioError(fmt::format("line {}: '{}' needs more arguments", line_no, args[0]));
  };
  Action a;
  a.time = time;
  const std::string& verb = args[0];
  need(2);
  a.node = parse_node(args[1]);
  if (verb == "chat") {
    a.kind = ActionKind::chat;
    need(3);
    for (std::size_t i = 2; i < args.size(); ++i) a.text += (i > 2 ? " " : "") + args[i];
  } else if (verb == "geo") {
    a.kind = ActionKind::geo;
    need(4);
    a.x = parse_real(args[2]);
    a.y = parse_real(args[3]);
  } else if (verb == "multimedia") {
    a.kind = ActionKind::multimedia;
    need(3);
    a.count = parse_node(args[2]);
  } else if (verb == "mute") {
    a.kind = ActionKind::mute;
    if (args.size() > 2) {
      if (args[2] == "indefinite") {
        a.indefinite = true;
      } else {
        a.offset = parse_duration(args[2]);
      }
    }
  } else if (verb == "demute") {
    a.kind = ActionKind::demute;
    need(3);
    a.text = args[2];
    if (args.size() > 3) a.deadline = parse_duration(args[3]);
  } else if (verb == "repudiate") {
    a.kind = ActionKind::repudiate;
    need(3);
    a.other = parse_node(args[2]);
  } else if (verb == "drop-link" || verb == "restore-link") {
    a.kind = verb == "drop-link" ? ActionKind::drop_link : ActionKind::restore_link;
    need(3);
    a.other = parse_node(args[2]);
  } else if (verb == "kill") {
    a.kind = ActionKind::kill;
  } else if (verb == "drop-next") {
    a.kind = ActionKind::drop_next;
    need(4);
    a.other = parse_node(args[2]);
    a.count = parse_node(args[3]);
  } else if (verb == "loss") {
    a.kind = ActionKind::loss;
    need(4);
    a.other = parse_node(args[2]);
    a.x = parse_real(args[3]);
  } else {
    throw ScenarioError(fmt::format("line {}: unknown action '{}'", line_no, verb));
  }
  return a;
}

}  // namespace

void apply_config_option(NodeConfig& c, const std::string& key, const std::string& value) {
  if (key == "hello_period") {
    c.hello_period = parse_duration(value);
  } else if (key == "tc_period") {
    c.tc_period = parse_duration(value);
  } else if (key == "tc") {
    c.tc_enabled = parse_flag(value);
  } else if (key == "hold") {
    c.hold_multiplier = static_cast<int>(parse_node(value));
  } else if (key == "tc_expiry") {
    c.tc_expiry_multiplier = static_cast<int>(parse_node(value));
  } else if (key == "arq_timeout") {
    c.arq_timeout = parse_duration(value);
  } else if (key == "arq_attempts") {
    c.arq_max_attempts = static_cast<int>(parse_node(value));
  } else if (key == "tolerance") {
    c.timestamp_tolerance = parse_duration(value);
  } else if (key == "window") {
    c.seq_window = parse_node(value);
  } else if (key == "cache") {
    c.cache_capacity = parse_node(value);
  } else if (key == "election") {
    c.election = parse_cds_algorithm(value);
    if (c.election == CdsAlgorithm::optimal) throw ScenarioError("live election supports wu-li or mpr-cds");
  } else if (key == "leader") {
    c.leader = static_cast<MemberId>(parse_node(value));
  } else if (key == "chunk") {
    c.multimedia_chunk = parse_node(value);
  } else if (key == "geo_warning") {
    c.geo_warning_meters = parse_real(value);
  } else if (key == "repudiate_overdue_mute") {
    c.repudiate_overdue_mute = parse_flag(value);
  } else {
    throw ScenarioError("unknown config option: " + key);
  }
}

void add_action(Scenario& s, Action a) {
  auto pos = std::upper_bound(s.actions.begin(), s.actions.end(), a.time,
                              [](Micros t, const Action& other) { return t < other.time; });
  s.actions.insert(pos, std::move(a));
}

Scenario parse_scenario(std::istream& in) {
  Scenario s;
  std::optional<std::size_t> node_count;
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    std::vector<std::string> tok;
    for (std::string t; row >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string& head = tok[0];
    auto need = [&](std::size_t n) {
      if (tok.size() < n) throw ScenarioError(fmt::format("line {}: '{}' needs more arguments", line_no, head));
    };
    try {
      if (head == "name") {
        need(2);
        s.name = tok[1];
      } else if (head == "seed") {
        need(2);
        s.seed = std::stoull(tok[1]);
      } else if (head == "duration") {
        need(2);
        s.duration = parse_duration(tok[1]);
      } else if (head == "nodes") {
        need(2);
        node_count = parse_node(tok[1]);
      } else if (head == "edge") {
        need(3);
        edges.emplace_back(parse_node(tok[1]), parse_node(tok[2]));
      } else if (head == "deployment") {
        DeploymentSpec d;
        d.seed = s.seed;
        for (std::size_t i = 1; i < tok.size(); ++i) {
          auto [k, v] = split_kv(tok[i]);
          if (k == "dim") d.dimension = static_cast<int>(parse_node(v));
          else if (k == "ell") d.length = parse_real(v);
          else if (k == "lambda") d.density = parse_real(v);
          else if (k == "seed") d.seed = std::stoull(v);
          else if (k == "placement") d.placement = v == "poisson" ? Placement::poisson : Placement::fixed_n;
          else throw ScenarioError("unknown deployment key: " + k);
        }
        s.deployment = d;
      } else if (head == "config") {
        for (std::size_t i = 1; i < tok.size(); ++i) {
          auto [k, v] = split_kv(tok[i]);
          apply_config_option(s.node_defaults, k, v);
        }
      } else if (head == "password") {
        need(3);
        s.passwords[parse_node(tok[1])] = tok[2];
      } else if (head == "link") {
        for (std::size_t i = 1; i < tok.size(); ++i) {
          auto [k, v] = split_kv(tok[i]);
          if (k == "delay_min") s.link.delay_min = parse_duration(v);
          else if (k == "delay_max") s.link.delay_max = parse_duration(v);
          else if (k == "loss") s.link.loss = parse_real(v);
          else throw ScenarioError("unknown link key: " + k);
        }
      } else if (head == "loss") {
        need(4);
        s.link.link_loss[{parse_node(tok[1]), parse_node(tok[2])}] = parse_real(tok[3]);
      } else if (head == "partition") {
        need(4);
        s.partitions.push_back({parse_cut(tok[1]), parse_duration(tok[2]), parse_duration(tok[3])});
      } else if (head == "at") {
        need(3);
        std::vector<std::string> args(tok.begin() + 2, tok.end());
        add_action(s, parse_action(parse_duration(tok[1]), args, line_no));
      } else {
        throw ScenarioError(fmt::format("unknown directive '{}'", head));
      }
    } catch (const ScenarioError& e) {
      const std::string what = e.what();
      if (what.rfind("line ", 0) == 0) throw;
      throw ScenarioError(fmt::format("line {}: {}", line_no, what));
    } catch (const std::logic_error& e) {
      throw ScenarioError(fmt::format("line {}: {}", line_no, e.what()));
    }
  }
  if (node_count) {
    if (s.deployment) throw ScenarioError("use either nodes/edge or deployment, not both");
    s.graph = Graph::from_edges(*node_count, edges);
  } else if (!edges.empty()) {
    throw ScenarioError("edge lines need a preceding 'nodes' count");
  }
  if (!s.graph && !s.deployment) throw ScenarioError("scenario has no topology");
  if (s.link.delay_min.count() <= 0 || s.link.delay_max < s.link.delay_min) {
    throw ScenarioError("link delays must satisfy 0 < delay_min <= delay_max");
  }
  if (s.link.loss < 0.0 || s.link.loss >= 1.0) throw ScenarioError("loss probability must be in [0, 1)");
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot open scenario " + path);
  return parse_scenario(in);
}

Graph resolve_graph(const Scenario& s) {
  if (s.graph) return *s.graph;
  if (!s.deployment) throw ScenarioError("scenario has no topology");
  return generate_connected(*s.deployment).graph;
}

Scenario inject_loss(Scenario s, NodeId u, NodeId v, double p) {
  if (p < 0.0 || p >= 1.0) throw ScenarioError("loss probability must be in [0, 1)");
  Graph g = resolve_graph(s);
  if (u >= g.size() || v >= g.size() || !g.adjacent(u, v)) throw ScenarioError(fmt::format("unknown edge {}-{}", u, v));
  s.link.link_loss[{u, v}] = p;
  return s;
}

Scenario partition(Scenario s, std::vector<std::pair<NodeId, NodeId>> cut, Micros start, Micros end) {
  Graph g = resolve_graph(s);
  for (auto [u, v] : cut) {
    if (u >= g.size() || v >= g.size() || !g.adjacent(u, v)) throw ScenarioError(fmt::format("unknown edge {}-{}", u, v));
  }
  if (end <= start) throw ScenarioError("partition interval is empty");
  s.partitions.push_back({std::move(cut), start, end});
  return s;
}

}  // namespace bb
