// Scripted simulation scenarios.
//
// Text format, one directive per line, '#' starts a comment. Durations take
// a us/ms/s suffix (bare numbers are microseconds).
//
//   name <label>
//   seed <u64>
//   duration <duration>
//   nodes <n>                       explicit topology, followed by edge lines
//   edge <u> <v>
//   deployment dim=1 ell=10 lambda=3 [placement=fixed-n|poisson] [seed=..]
//   config key=value ...            node defaults (see apply_config_option)
//   password <node> <secret>
//   link delay_min=4ms delay_max=8ms loss=0
//   loss <u> <v> <p>                per-directed-link loss probability
//   partition <u-v,u-v,...> <start> <end>
//   at <time> <action> <args...>
//
// Actions: chat <node> <text...> | geo <node> <lat> <lon> |
// multimedia <node> <bytes> | mute <node> [<offset>|indefinite] |
// demute <node> <password> [<deadline>] | repudiate <leader> <member> |
// drop-link <u> <v> | restore-link <u> <v> | kill <node> |
// drop-next <from> <to> <count> | loss <from> <to> <p>
#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bubbleblue/node.hpp"
#include "bubbleblue/udg.hpp"

namespace bb {

class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ActionKind {
  chat,
  geo,
  multimedia,
  mute,
  demute,
  repudiate,
  drop_link,
  restore_link,
  kill,
  drop_next,
  loss,
};

std::string to_string(ActionKind k);

struct Action {
  Micros time{};
  ActionKind kind = ActionKind::chat;
  NodeId node = 0;
  NodeId other = 0;
  std::string text;
  double x = 0.0;
  double y = 0.0;
  std::size_t count = 0;
  std::optional<Micros> offset;
  bool indefinite = false;
  std::optional<Micros> deadline;
};

using DirectedLink = std::pair<NodeId, NodeId>;

struct LinkModel {
  Micros delay_min = 4ms;
  Micros delay_max = 8ms;
  double loss = 0.0;
  std::map<DirectedLink, double> link_loss;
};

struct Partition {
  std::vector<std::pair<NodeId, NodeId>> cut;
  Micros start{};
  Micros end{};
};

struct Scenario {
  std::string name = "scenario";
  std::uint64_t seed = 1;
  Micros duration = 30s;
  std::optional<Graph> graph;
  std::optional<DeploymentSpec> deployment;
  NodeConfig node_defaults;
  std::map<NodeId, std::string> passwords;
  LinkModel link;
  std::vector<Partition> partitions;
  std::vector<Action> actions;  // kept sorted by time (stable)
};

Micros parse_duration(const std::string& text);
std::string format_duration(Micros d);

/// Applies one `key=value` node option; throws ScenarioError on unknown keys.
void apply_config_option(NodeConfig& config, const std::string& key, const std::string& value);

Scenario parse_scenario(std::istream& in);
Scenario load_scenario(const std::string& path);

/// Explicit graph, or a connected sample of the deployment.
Graph resolve_graph(const Scenario& s);

/// Copies with per-link loss or a timed partition added. Unknown edges throw.
Scenario inject_loss(Scenario s, NodeId u, NodeId v, double p);
Scenario partition(Scenario s, std::vector<std::pair<NodeId, NodeId>> cut, Micros start, Micros end);

void add_action(Scenario& s, Action a);

}  // namespace bb
