#include <gtest/gtest.h>

#include <algorithm>

#include "bubbleblue/node.hpp"
#include "support.hpp"

using namespace bb;
using bbt::path;

namespace {

/// Nodes wired along a graph; packets are handed over synchronously.
struct Bench {
  Graph g;
  KeyMatrix matrix;
  std::vector<Node> nodes;

  explicit Bench(Graph graph, NodeConfig base = {}) : g(std::move(graph)) {
    Drbg rng(77);
    matrix = generate_matrix(g.size(), rng);
    for (NodeId u = 0; u < g.size(); ++u) {
      NodeConfig c = base;
      c.id = static_cast<MemberId>(u);
      nodes.emplace_back(c, column_for(matrix, u), 1000 + u);
    }
  }

  Node& operator[](NodeId u) { return nodes[u]; }

  /// Delivers every queued transmission to graph neighbors until quiet.
  std::size_t flush(Micros t, const std::set<std::pair<NodeId, NodeId>>& drop = {}) {
    std::size_t unicasts = 0;
    for (bool busy = true; busy;) {
      busy = false;
      for (NodeId u = 0; u < g.size(); ++u) {
        for (const auto& tx : nodes[u].take_outbox()) {
          busy = true;
          for (NodeId v : g.neighbors(u)) {
            ++unicasts;
            if (!drop.count({u, v})) nodes[v].receive(tx.wire, t);
          }
        }
      }
    }
    return unicasts;
  }

  void hello_rounds(int rounds, Micros start = 0s) {
    for (int r = 0; r < rounds; ++r) {
      const Micros t = start + r * 1s;
      for (auto& n : nodes) n.tick_hello(t);
      flush(t);
    }
  }

  static bool has_event(const Node& n, EventKind k) {
    return std::any_of(n.events().begin(), n.events().end(), [&](const NodeEvent& e) { return e.kind == k; });
  }
  static std::size_t count_events(const Node& n, EventKind k) {
    return static_cast<std::size_t>(
        std::count_if(n.events().begin(), n.events().end(), [&](const NodeEvent& e) { return e.kind == k; }));
  }
};

Bytes chat(const std::string& s) { return Bytes(s.begin(), s.end()); }

HelloBody hello_of(const DataField& f) { return decode_hello(f.body); }

}  // namespace

TEST(Hello, FreshNodeAdvertisesNothing) {
  Bench b(path(2));
  auto h = b[0].tick_hello(0s);
  ASSERT_TRUE(h);
  EXPECT_TRUE(hello_of(*h).sym.empty());
  EXPECT_TRUE(hello_of(*h).asym.empty());
}

TEST(Hello, HeardOnceGoesToAsymmetric) {
  Bench b(path(2));
  b[1].tick_hello(0s);
  b.flush(0s);
  EXPECT_EQ(b[0].snapshot().asym, (NodeSet{1}));
  auto h = b[0].tick_hello(1s);
  EXPECT_EQ(hello_of(*h).asym, (std::vector<MemberId>{1}));
  EXPECT_TRUE(hello_of(*h).sym.empty());
}

TEST(Hello, ListedByPeerGoesToSymmetric) {
  Bench b(path(2));
  b[1].tick_hello(0s);
  b.flush(0s);
  b[0].tick_hello(0s);
  b.flush(0s);
  EXPECT_EQ(b[1].snapshot().sym, (NodeSet{0}));
  EXPECT_TRUE(b[1].snapshot().asym.empty());
  auto h = b[1].tick_hello(1s);
  EXPECT_EQ(hello_of(*h).sym, (std::vector<MemberId>{0}));
}

TEST(Hello, OnHelloDirect) {
  Bench b(path(3));
  b[1].on_hello(2, HelloBody{{}, {}, std::nullopt}, 0s);
  EXPECT_EQ(b[1].snapshot().asym, (NodeSet{2}));
  b[1].on_hello(2, HelloBody{{}, {1}, std::nullopt}, 0s);
  EXPECT_EQ(b[1].snapshot().sym, (NodeSet{2}));
  EXPECT_TRUE(b[1].snapshot().asym.empty());
  // A later hello that forgets us demotes the link again.
  b[1].on_hello(2, HelloBody{{}, {}, std::nullopt}, 1s);
  EXPECT_TRUE(b[1].snapshot().sym.empty());
  EXPECT_EQ(b[1].snapshot().asym, (NodeSet{2}));
}

TEST(Hello, SilentNeighborExpiresAfterHoldTime) {
  Bench b(path(2));
  b.hello_rounds(2);
  ASSERT_EQ(b[0].snapshot().sym, (NodeSet{1}));
  b[0].expire(1s + 3s);
  EXPECT_EQ(b[0].snapshot().sym, (NodeSet{1}));
  b[0].expire(1s + 3s + 1us);
  EXPECT_TRUE(b[0].snapshot().sym.empty());
  EXPECT_TRUE(b[0].snapshot().two_hop.empty());
}

TEST(Hello, StaleOrReplayedControlIsDropped) {
  Bench b(path(2));
  b[1].tick_hello(0s);
  auto out = b[1].take_outbox();
  b[0].receive(out[0].wire, 5s);  // 5 s late with a 2 s tolerance
  EXPECT_TRUE(Bench::has_event(b[0], EventKind::stale));
  b[0].receive(out[0].wire, 0s);
  b[0].receive(out[0].wire, 0s);
  EXPECT_EQ(Bench::count_events(b[0], EventKind::duplicate), 1u);
}

TEST(Election, IsolatedNodeIsMember) {
  Bench b(Graph::from_edges(2, {}));
  b.hello_rounds(2);
  EXPECT_TRUE(b[0].recompute_cds());
  EXPECT_TRUE(b[1].recompute_cds());
}

TEST(Election, PathOfThreeConverges) {
  Bench b(path(3));
  b.hello_rounds(3);
  EXPECT_TRUE(b[0].cds_flag());
  EXPECT_TRUE(b[1].cds_flag());
  EXPECT_FALSE(b[2].cds_flag());
  EXPECT_EQ(b[2].recompute_cds(), false);
  EXPECT_EQ(b[2].recompute_cds(), false);
}

TEST(Election, LiveFlagsMatchOfflineRules) {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    Graph g = generate_connected({2, 2.0, 8.0, seed, Placement::fixed_n}).graph;
    for (auto algo : {CdsAlgorithm::wu_li_1999, CdsAlgorithm::mpr_cds}) {
      NodeConfig c;
      c.election = algo;
      Bench b(g, c);
      b.hello_rounds(4);
      NodeSet live;
      for (NodeId u = 0; u < g.size(); ++u) {
        if (b[u].cds_flag()) live.insert(u);
      }
      ASSERT_EQ(live, elect(g, algo).members) << to_string(algo) << " seed " << seed;
    }
  }
}

TEST(Originate, SequenceAndCache) {
  Bench b(path(2));
  auto a = b[0].originate(Subtype::chat, chat("one"), 0s);
  auto c = b[0].originate(Subtype::chat, chat("two"), 0s);
  EXPECT_EQ(c.stamp, a.stamp + 1);
  EXPECT_TRUE(b[0].cached(0, static_cast<std::uint32_t>(a.stamp)));
  EXPECT_THROW(b[0].originate(Subtype::hello, {}, 0s), ProtoError);
  EXPECT_THROW(b[0].originate(Subtype::arq, {}, 0s), ProtoError);
}

TEST(Originate, GeoCarriesCoordinates) {
  Bench b(path(2));
  auto f = b[0].send_geo(45.5, -73.6, 0s);
  auto fix = decode_geo(f.body);
  EXPECT_EQ(fix.latitude, 45.5);
  EXPECT_EQ(fix.longitude, -73.6);
  b.flush(0s);
  ASSERT_EQ(b[1].deliveries().size(), 1u);
  EXPECT_EQ(b[1].deliveries()[0].subtype, Subtype::geo);
}

TEST(Information, DuplicateDeliveredOnce) {
  Bench b(path(2));
  b[0].originate(Subtype::chat, chat("x"), 0s);
  auto out = b[0].take_outbox();
  b[1].receive(out[0].wire, 0s);
  b[1].receive(out[0].wire, 0s);
  EXPECT_EQ(b[1].deliveries().size(), 1u);
  EXPECT_EQ(Bench::count_events(b[1], EventKind::duplicate), 1u);
}

TEST(Information, GapSchedulesArq) {
  Bench b(path(2));
  std::vector<Bytes> wires;
  for (int i = 1; i <= 7; ++i) {
    b[0].originate(Subtype::chat, chat(std::to_string(i)), 0s);
    wires.push_back(b[0].take_outbox()[0].wire);
  }
  b[1].receive(wires[4], 1s);  // seq 5
  b[1].receive(wires[6], 1s);  // seq 7
  const auto& ledger = b[1].ledgers().at(0);
  ASSERT_EQ(ledger.gaps.size(), 5u);  // 1..4 and 6
  EXPECT_TRUE(ledger.gaps.count(6));
  EXPECT_EQ(ledger.gaps.at(6).next_arq, 1s + 500ms);
  EXPECT_LE(*b[1].next_wakeup(), 1s + 500ms);

  b[1].advance(1s + 500ms);
  std::vector<ArqBody> asked;
  for (const auto& tx : b[1].take_outbox()) {
    if (tx.subtype == Subtype::arq) {
      auto opened = open(column_for(b.matrix, 0), from_wire(tx.wire, 2));
      asked.push_back(decode_arq(decode_data(opened.plaintext).body));
    }
  }
  ASSERT_EQ(asked.size(), 5u);
  EXPECT_TRUE(std::any_of(asked.begin(), asked.end(), [](const ArqBody& a) { return a.origin == 0 && a.seq == 6; }));
}

TEST(Information, NonCdsNodeNeverRelays) {
  Bench b(path(3));
  b.hello_rounds(3);
  ASSERT_FALSE(b[2].cds_flag());
  b[1].originate(Subtype::chat, chat("hi"), 4s);
  for (const auto& tx : b[1].take_outbox()) b[2].receive(tx.wire, 4s);
  EXPECT_EQ(b[2].deliveries().size(), 1u);
  EXPECT_TRUE(b[2].take_outbox().empty());
}

TEST(Information, CdsNodeRelaysOnce) {
  Bench b(path(3));
  b.hello_rounds(3);
  b[0].originate(Subtype::chat, chat("hi"), 4s);
  auto tx = b[0].take_outbox();
  b[1].receive(tx[0].wire, 4s);
  b[1].receive(tx[0].wire, 4s);
  auto relays = b[1].take_outbox();
  ASSERT_EQ(relays.size(), 1u);
  EXPECT_TRUE(relays[0].relay);
  EXPECT_EQ(relays[0].wire, tx[0].wire);
}

TEST(Tc, OnlyCdsMembersAdvertise) {
  Bench b(bbt::star(2));  // 0 centre, leaves 1 and 2
  b.hello_rounds(3);
  EXPECT_FALSE(b[2].tick_tc(4s));
  auto tc = b[0].tick_tc(4s);
  ASSERT_TRUE(tc);
  auto body = decode_tc(tc->body);
  std::vector<MemberId> ids;
  for (auto [id, _] : body.neighbors) ids.push_back(id);
  EXPECT_EQ(ids, (std::vector<MemberId>{1, 2}));
  auto next = b[0].tick_tc(9s);
  ASSERT_TRUE(next);
  EXPECT_GT(next->stamp, tc->stamp);
}

TEST(Tc, DirectoryUpdatesAndExpiry) {
  Bench b(path(2));
  b[0].on_tc(5, TcBody{{{1, 1000}, {2, 2000}}}, 1s);
  ASSERT_EQ(b[0].directory().at(5).neighbors.size(), 2u);
  b[0].on_tc(5, TcBody{{{1, 500}}}, 2s);
  EXPECT_EQ(b[0].directory().at(5).neighbors.at(1), 1000u);
  EXPECT_EQ(b[0].directory().at(5).updated, 1s);
  b[0].expire(1s + 15s);
  EXPECT_TRUE(b[0].directory().count(5));
  b[0].expire(1s + 15s + 1us);
  EXPECT_FALSE(b[0].directory().count(5));
}

TEST(Expire, EmptyStateIsNoOp) {
  Bench b(path(2));
  b[0].expire(100s);
  EXPECT_TRUE(b[0].events().empty());
  EXPECT_EQ(b[0].snapshot(), (NodeSnapshot{{}, {}, {}, true}));
}

TEST(Arq, OriginAnswersFromCache) {
  Bench b(path(2));
  b.hello_rounds(3);
  auto f = b[0].originate(Subtype::chat, chat("lost"), 4s);
  b[0].take_outbox();
  b[1].originate(Subtype::chat, chat("after"), 4s);  // irrelevant traffic
  b[1].take_outbox();
  // Node 1 asks for (0, seq) by ARQ.
  DataField arq{Kind::information, Subtype::arq, 1, 1, encode(ArqBody{0, static_cast<std::uint32_t>(f.stamp)})};
  Drbg rng(5);
  b[0].receive(to_wire(seal(column_for(b.matrix, 1), encode_data(arq), rng)), 5s);
  auto out = b[0].take_outbox();
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].subtype, Subtype::chat);
  EXPECT_EQ(out[0].stamp, f.stamp);
  EXPECT_TRUE(Bench::has_event(b[0], EventKind::arq_answered));
}

TEST(Arq, CdsHolderAnswersNonCdsStaysSilent) {
  Bench b(path(3));
  b.hello_rounds(3);
  b[0].originate(Subtype::chat, chat("a"), 4s);
  b.flush(4s);
  ASSERT_TRUE(b[1].cached(0, 1));
  ASSERT_TRUE(b[2].cached(0, 1));
  DataField arq{Kind::information, Subtype::arq, 2, 1, encode(ArqBody{0, 1})};
  Drbg rng(6);
  auto wire = to_wire(seal(column_for(b.matrix, 2), encode_data(arq), rng));
  b[1].receive(wire, 5s);
  auto answer = b[1].take_outbox();
  ASSERT_EQ(answer.size(), 1u);
  EXPECT_EQ(answer[0].subtype, Subtype::chat);

  // Node 2 is not in the CDS: it holds the packet but keeps quiet.
  DataField arq2{Kind::information, Subtype::arq, 1, 1, encode(ArqBody{0, 1})};
  b[2].receive(to_wire(seal(column_for(b.matrix, 1), encode_data(arq2), rng)), 5s);
  EXPECT_TRUE(b[2].take_outbox().empty());
}

TEST(Arq, LeafRecoversDroppedCopy) {
  Bench b(path(4));
  b.hello_rounds(3);
  b[0].originate(Subtype::chat, chat("first"), 2100ms);
  b.flush(2100ms, {{2, 3}});
  EXPECT_EQ(b[3].deliveries().size(), 0u);
  b[0].originate(Subtype::chat, chat("second"), 2200ms);
  b.flush(2200ms);
  ASSERT_TRUE(b[3].ledgers().at(0).gaps.count(1));
  b[3].advance(2700ms);
  b.flush(2700ms);
  ASSERT_EQ(b[3].deliveries().size(), 2u);
  EXPECT_EQ(b[3].deliveries()[1].seq, 1u);
  EXPECT_EQ(b[3].deliveries()[1].body, chat("first"));
  EXPECT_TRUE(b[3].ledgers().at(0).gaps.empty());
  EXPECT_EQ(Bench::count_events(b[3], EventKind::arq_sent), 1u);
}

TEST(Arq, LostArqIsNotItselfRequested) {
  Bench b(path(4));
  b.hello_rounds(3);
  b[0].originate(Subtype::chat, chat("first"), 2100ms);
  b.flush(2100ms, {{2, 3}});
  b[0].originate(Subtype::chat, chat("second"), 2200ms);
  b.flush(2200ms);
  b[3].advance(2700ms);
  b.flush(2700ms, {{3, 2}});  // the ARQ itself is lost
  b[3].advance(3200ms);
  b.flush(3200ms);
  EXPECT_EQ(b[3].deliveries().size(), 2u);
  EXPECT_EQ(Bench::count_events(b[3], EventKind::arq_sent), 2u);
  for (NodeId u = 0; u < 4; ++u) {
    for (const auto& e : b[u].events()) {
      if (e.kind == EventKind::gap || e.kind == EventKind::arq_sent) { EXPECT_EQ(e.origin, 0) << "node " << u; }
    }
    EXPECT_FALSE(b[u].ledgers().count(3)) << "ARQ sequence numbers entered node " << u << "'s ledger";
  }
}

TEST(Arq, AbandonsAfterMaxAttempts) {
  Bench b(path(2));
  b.hello_rounds(3);
  b[0].originate(Subtype::chat, chat("1"), 4s);
  b[0].take_outbox();
  b[0].originate(Subtype::chat, chat("2"), 4s);
  b.flush(4s);
  for (int i = 1; i <= 4; ++i) {
    b[1].advance(4s + i * 500ms);
    b[1].take_outbox();  // every ARQ is lost
  }
  EXPECT_EQ(Bench::count_events(b[1], EventKind::arq_sent), 3u);
  EXPECT_TRUE(Bench::has_event(b[1], EventKind::gap_abandoned));
  EXPECT_TRUE(b[1].ledgers().at(0).gaps.empty());
}

TEST(Mute, MutedNodeIsSilent) {
  Bench b(path(2));
  auto announce = b[0].set_mute(true, 2s, 0s);
  ASSERT_TRUE(announce);
  EXPECT_EQ(decode_mute(announce->body).offset_us, 2'000'000u);
  b[0].take_outbox();
  EXPECT_TRUE(b[0].muted());
  EXPECT_FALSE(b[0].tick_hello(1s));
  EXPECT_THROW(b[0].originate(Subtype::chat, chat("x"), 1s), ProtoError);
  b[0].advance(5s);
  EXPECT_TRUE(b[0].take_outbox().empty());
}

TEST(Mute, MutedNodeStillReceivesAndCatchesUp) {
  Bench b(path(2));
  b.hello_rounds(3);
  b[1].set_mute(true, std::nullopt, 3s);
  b.flush(3s);
  b[0].originate(Subtype::chat, chat("1"), 4s);
  b[0].take_outbox();
  b[0].originate(Subtype::chat, chat("2"), 4s);
  b.flush(4s);
  EXPECT_EQ(b[1].deliveries().size(), 1u);
  b[1].advance(5s);
  EXPECT_TRUE(b[1].take_outbox().empty());
  b[1].set_mute(false, std::nullopt, 6s);
  auto out = b[1].take_outbox();
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].subtype, Subtype::arq);
}

TEST(Mute, OverdueOffsetFlagsAndLeaderRepudiates) {
  NodeConfig c;
  c.repudiate_overdue_mute = true;
  Bench b(path(3), c);
  b.hello_rounds(3);
  b[2].set_mute(true, 1s, 3s);
  b.flush(3s);
  b[0].expire(4s);
  EXPECT_FALSE(Bench::has_event(b[0], EventKind::mute_overdue));
  b[0].expire(4s + 1us);
  b[1].expire(4s + 1us);
  EXPECT_TRUE(Bench::has_event(b[0], EventKind::mute_overdue));
  EXPECT_TRUE(Bench::has_event(b[1], EventKind::mute_overdue));
  EXPECT_TRUE(b[0].column().is_revoked(2));
  b.flush(4s + 1us);
  EXPECT_TRUE(b[1].column().is_revoked(2));
  EXPECT_TRUE(b[2].column().is_revoked(2));
}

TEST(Mute, DemutePasswordPaths) {
  NodeConfig c;
  c.password = "pw";
  Bench b(path(2), c);
  b[0].set_mute(true, std::nullopt, 0s);
  EXPECT_EQ(b[0].demute_with_password("nope", 10s, 1s), DemuteOutcome::rejected);
  EXPECT_TRUE(b[0].muted());
  EXPECT_EQ(b[0].demute_with_password("pw", 10s, 2s), DemuteOutcome::unmuted);
  EXPECT_FALSE(b[0].muted());
  EXPECT_EQ(b[0].next_wakeup(), std::optional<Micros>(2s));
}

TEST(Mute, LateDemuteWipes) {
  NodeConfig c;
  c.password = "pw";
  Bench b(path(2), c);
  b.hello_rounds(3);
  b[0].originate(Subtype::chat, chat("held"), 3s);
  b.flush(3s);
  b[1].set_mute(true, std::nullopt, 3s);
  b.flush(3s);
  EXPECT_EQ(b[1].demute_with_password("wrong", 5s, 6s), DemuteOutcome::failed);
  auto out = b[1].take_outbox();
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].subtype, Subtype::fail);
  EXPECT_TRUE(b[1].wiped());
  EXPECT_TRUE(b[1].deliveries().empty());
  EXPECT_TRUE(b[1].ledgers().empty());
  EXPECT_EQ(b[1].snapshot(), (NodeSnapshot{{}, {}, {}, false}));
  for (const auto& k : b[1].column().column) EXPECT_EQ(k, kRepudiatedField);
  EXPECT_FALSE(b[1].next_wakeup());
  EXPECT_FALSE(b[1].tick_hello(7s));

  for (const auto& tx : out) b[0].receive(tx.wire, 6s);
  EXPECT_TRUE(Bench::has_event(b[0], EventKind::member_failed));
}

TEST(Repudiation, LeaderOrdersAreApplied) {
  Bench b(path(3));
  b.hello_rounds(3);
  b[0].repudiate_member(2, 4s);
  b.flush(4s);
  for (NodeId u = 0; u < 3; ++u) EXPECT_TRUE(b[u].column().is_revoked(2)) << u;
  EXPECT_THROW(b[2].originate(Subtype::chat, chat("x"), 5s), ProtoError);
}

TEST(Repudiation, PacketsFromRevokedMemberAreDropped) {
  Bench b(path(3));
  b.hello_rounds(3);
  // Node 2 seals a chat with its old column after the leader acted.
  DataField late{Kind::information, Subtype::chat, 2, 9, chat("sneaky")};
  Drbg rng(8);
  auto wire = to_wire(seal(column_for(b.matrix, 2), encode_data(late), rng));
  b[0].repudiate_member(2, 4s);
  b.flush(4s);
  b[1].receive(wire, 5s);
  b[0].receive(wire, 5s);
  EXPECT_TRUE(std::none_of(b[1].deliveries().begin(), b[1].deliveries().end(),
                           [](const Delivery& d) { return d.origin == 2; }));
  EXPECT_TRUE(std::none_of(b[0].deliveries().begin(), b[0].deliveries().end(),
                           [](const Delivery& d) { return d.origin == 2; }));
  EXPECT_TRUE(b[1].take_outbox().empty());
}

TEST(Repudiation, NonLeaderIgnoredAndRepeatIsNoOp) {
  Bench b(path(3));
  EXPECT_THROW(b[1].repudiate_member(2, 0s), ProtoError);
  b[0].on_repudiation(1, 2, 0s);
  EXPECT_FALSE(b[0].column().is_revoked(2));
  EXPECT_TRUE(Bench::has_event(b[0], EventKind::repudiation_ignored));
  b[1].on_repudiation(0, 2, 0s);
  const auto events = b[1].events().size();
  b[1].on_repudiation(0, 2, 1s);
  EXPECT_EQ(b[1].events().size(), events);
}

TEST(Multimedia, ReassemblesAcrossChunks) {
  NodeConfig c;
  c.multimedia_chunk = 100;
  Bench b(path(2), c);
  Bytes content(250, 0x5A);
  auto sent = b[0].send_multimedia(content, 0s);
  EXPECT_EQ(sent.size(), 3u);
  b.flush(0s);
  EXPECT_EQ(Bench::count_events(b[1], EventKind::multimedia_complete), 1u);
}

TEST(Geo, FarApartFixesWarn) {
  Bench b(path(3));
  b[0].send_geo(48.8566, 2.3522, 0s);
  b[2].send_geo(48.8570, 2.3525, 0s);
  b.flush(0s);
  EXPECT_FALSE(Bench::has_event(b[1], EventKind::geo_warning));
  b[2].send_geo(48.8800, 2.3522, 1s);
  b[0].send_geo(48.8566, 2.3522, 1s);
  b.flush(1s);
  EXPECT_TRUE(Bench::has_event(b[1], EventKind::geo_warning));
  EXPECT_NEAR(haversine_meters({48.8566, 2.3522}, {48.8800, 2.3522}), 2602.0, 5.0);
}

TEST(Node, RejectsBadConfiguration) {
  Drbg rng(1);
  auto m = generate_matrix(2, rng);
  NodeConfig c;
  c.id = 1;
  EXPECT_THROW(Node(c, column_for(m, 0), 1), ProtoError);
  c.hello_period = 0s;
  EXPECT_THROW(Node(c, column_for(m, 1), 1), ProtoError);
}
