#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "cycleflow/errors.hpp"
#include "cycleflow/model.hpp"
#include "cycleflow/prng.hpp"

using namespace cycleflow;

namespace {

// Independent edge-load oracle: walks vertex by vertex instead of using
// ArcPath::edges, so the two computations share no code.
std::vector<Rational> oracle_edge_flows(const CycleInstance& instance,
                                        const FlowAssignment& flow) {
  const int n = instance.vertex_count();
  std::vector<Rational> load(static_cast<std::size_t>(n), Rational(0));
  for (int i = 0; i < instance.commodity_count(); ++i) {
    const Commodity& c = instance.commodity(i);
    const Rational& forward = flow.clockwise(i);
    for (int v = c.source; v != c.target; v = (v + 1) % n) {
      load[static_cast<std::size_t>(v)] += forward;
    }
    const Rational backward = c.demand - forward;
    for (int v = c.source; v != c.target; v = (v - 1 + n) % n) {
      load[static_cast<std::size_t>((v - 1 + n) % n)] += backward;
    }
  }
  return load;
}

CycleInstance crossing_fixture() {
  return CycleInstance(4, {{0, 2, Rational(1)}, {1, 3, Rational(1)}});
}

FlowAssignment grid_point(const CycleInstance& instance, SplitMix64& rng, int denom) {
  std::vector<Rational> x;
  for (const Commodity& c : instance.commodities()) {
    x.push_back(c.demand * Rational(Integer(rng.below(static_cast<std::uint64_t>(denom) + 1)),
                                    Integer(denom)));
  }
  return FlowAssignment(instance, std::move(x));
}

CycleInstance random_small_instance(SplitMix64& rng) {
  const int n = 3 + static_cast<int>(rng.below(10));
  const int k = 1 + static_cast<int>(rng.below(3));
  std::vector<Commodity> commodities;
  for (int i = 0; i < k; ++i) {
    const int s = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    const int t = (s + 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)))) % n;
    const Rational demand(Integer(1 + rng.below(16)), Integer(1 + rng.below(16)));
    commodities.push_back({s, t, demand});
  }
  return CycleInstance(n, std::move(commodities));
}

}  // namespace

TEST_CASE("arc paths enumerate clockwise edge runs") {
  const ArcPath wrap(6, 4, 1);
  CHECK(wrap.length() == 3);
  CHECK(wrap.edges() == std::vector<int>{4, 5, 0});
  for (int e : {4, 5, 0}) CHECK(wrap.contains_edge(e));
  for (int e : {1, 2, 3}) CHECK_FALSE(wrap.contains_edge(e));
  CHECK_FALSE(wrap.contains_edge(-1));
  CHECK_FALSE(wrap.contains_edge(6));

  CHECK(wrap.complement() == ArcPath(6, 1, 4));
  CHECK(wrap.complement().edges() == std::vector<int>{1, 2, 3});
  CHECK(ArcPath(5, 2, 3).edges() == std::vector<int>{2});

  CHECK_THROWS_AS(ArcPath(6, 2, 2), DomainError);
  CHECK_THROWS_AS(ArcPath(6, -1, 2), DomainError);
  CHECK_THROWS_AS(ArcPath(6, 0, 6), DomainError);
  CHECK_THROWS_AS(ArcPath(2, 0, 1), DomainError);
}

TEST_CASE("a path and its complement partition the cycle") {
  SplitMix64 rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(14));
    const int s = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    const int t = (s + 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)))) % n;
    const ArcPath path(n, s, t);
    const ArcPath other = path.complement();
    CHECK(path.length() + other.length() == n);

    std::vector<int> all = path.edges();
    const std::vector<int> rest = other.edges();
    all.insert(all.end(), rest.begin(), rest.end());
    std::sort(all.begin(), all.end());
    std::vector<int> expected(static_cast<std::size_t>(n));
    for (int e = 0; e < n; ++e) expected[static_cast<std::size_t>(e)] = e;
    CHECK(all == expected);

    for (int e = 0; e < n; ++e) {
      const auto edges = path.edges();
      const bool member = std::find(edges.begin(), edges.end(), e) != edges.end();
      CHECK(path.contains_edge(e) == member);
    }
  }
}

TEST_CASE("commodity paths and per-path amounts") {
  const CycleInstance instance(6, {{4, 1, Rational(2)}});
  const auto [forward, backward] = paths_of(instance, 0);
  CHECK(forward.edges() == std::vector<int>{4, 5, 0});
  CHECK(backward.edges() == std::vector<int>{1, 2, 3});
  CHECK(forward == clockwise_path(instance, 4, 1));

  const FlowAssignment flow(instance, {Rational(1, 2)});
  CHECK(path_flow(instance, flow, 0, forward) == Rational(1, 2));
  CHECK(path_flow(instance, flow, 0, backward) == Rational(3, 2));
  CHECK_THROWS_AS(path_flow(instance, flow, 0, ArcPath(6, 4, 2)), DomainError);
  CHECK_THROWS_AS(paths_of(instance, 1), DomainError);
}

TEST_CASE("edge flows: interleaved fixture") {
  const CycleInstance instance = crossing_fixture();

  const FlowAssignment all_forward(instance, {Rational(1), Rational(1)});
  CHECK(edge_flows(instance, all_forward) ==
        EdgeFlowProfile{Rational(1), Rational(2), Rational(1), Rational(0)});

  const FlowAssignment all_backward(instance, {Rational(0), Rational(0)});
  CHECK(edge_flows(instance, all_backward) ==
        EdgeFlowProfile{Rational(1), Rational(0), Rational(1), Rational(2)});
}

TEST_CASE("edge flows agree with the vertex-walk oracle") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const CycleInstance instance = random_small_instance(rng);
    const FlowAssignment flow = grid_point(instance, rng, 16);
    CHECK(edge_flows(instance, flow) == oracle_edge_flows(instance, flow));
  }
}

TEST_CASE("instance construction validation") {
  CHECK_THROWS_AS(CycleInstance(2, {{0, 1, Rational(1)}}), DomainError);
  CHECK_THROWS_AS(CycleInstance(4, {}), DomainError);
  CHECK_THROWS_AS(CycleInstance(4, {{0, 4, Rational(1)}}), DomainError);
  CHECK_THROWS_AS(CycleInstance(4, {{-1, 2, Rational(1)}}), DomainError);
  CHECK_THROWS_AS(CycleInstance(4, {{2, 2, Rational(1)}}), DomainError);
  CHECK_THROWS_AS(CycleInstance(4, {{0, 2, Rational(0)}}), DomainError);
  CHECK_THROWS_AS(CycleInstance(4, {{0, 2, Rational(-1)}}), DomainError);
}

TEST_CASE("flow assignment validation") {
  const CycleInstance instance = crossing_fixture();
  CHECK_THROWS_AS(FlowAssignment(instance, {Rational(1)}), DomainError);
  CHECK_THROWS_AS(FlowAssignment(instance, {Rational(-1, 2), Rational(0)}), DomainError);
  CHECK_THROWS_WITH_AS(FlowAssignment(instance, {Rational(0), Rational(3, 2)}),
                       "x_2 exceeds demand 1", DomainError);
}

TEST_CASE("instance text round-trips") {
  const std::string text =
      "# ring with two demands\n"
      "cycle 6\n"
      "\n"
      "commodity 0 3 3\n"
      "commodity 1 4 5/2   # reduced rational\n";
  const CycleInstance instance = parse_instance(text);
  CHECK(instance.vertex_count() == 6);
  CHECK(instance.commodity_count() == 2);
  CHECK(instance.commodity(1).demand == Rational(5, 2));

  const std::string canonical = serialize_instance(instance);
  CHECK(canonical == "cycle 6\ncommodity 0 3 3\ncommodity 1 4 5/2\n");
  CHECK(parse_instance(canonical) == instance);
}

TEST_CASE("instance parse errors carry line numbers") {
  const auto line_of = [](const std::string& text) {
    try {
      parse_instance(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };

  CHECK(line_of("") == 1);
  CHECK(line_of("# only comments\n") == 1);
  CHECK(line_of("commodity 0 1 1\n") == 1);
  CHECK(line_of("cycle 2\n") == 1);
  CHECK(line_of("cycle six\n") == 1);
  CHECK(line_of("cycle 6 6\n") == 1);
  CHECK(line_of("cycle 6\n") == 1);  // no commodities
  CHECK(line_of("cycle 6\ncommodity 0 1\n") == 2);
  CHECK(line_of("cycle 6\n\ncommodity 0 9 1\n") == 3);
  CHECK(line_of("cycle 6\ncommodity 2 2 1\n") == 2);
  CHECK(line_of("cycle 6\ncommodity 0 1 0\n") == 2);
  CHECK(line_of("cycle 6\ncommodity 0 1 -2\n") == 2);
  CHECK(line_of("cycle 6\ncommodity 0 1 1/0\n") == 2);
  CHECK(line_of("cycle 6\ncommodity 0 1 1\ncycle 6\n") == 3);

  CHECK_THROWS_WITH_AS(parse_instance("cycle 6\ncommodity 0 1 0\n"),
                       "line 2: demand must be positive", ParseError);
}

TEST_CASE("flow text round-trips") {
  const CycleInstance instance = parse_instance("cycle 4\ncommodity 0 2 1\ncommodity 1 3 2\n");
  const FlowAssignment flow = parse_flow("# comment\nflow 2/4 3/2\n", instance);
  CHECK(flow.clockwise(0) == Rational(1, 2));
  CHECK(flow.clockwise(1) == Rational(3, 2));
  CHECK(serialize_flow(flow) == "flow 1/2 3/2\n");
  CHECK(parse_flow(serialize_flow(flow), instance) == flow);
}

TEST_CASE("flow parse errors carry line numbers") {
  const CycleInstance instance = crossing_fixture();
  const auto error_of = [&](const std::string& text) {
    try {
      parse_flow(text, instance);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };

  CHECK(error_of("") == "line 1: expected a 'flow <x_1> ... <x_k>' line");
  CHECK(error_of("flow 1\n") == "line 1: expected 2 flow values, got 1");
  CHECK(error_of("flow 1 1 1\n") == "line 1: expected 2 flow values, got 3");
  CHECK(error_of("flows 1 1\n") == "line 1: expected 'flow <x_1> ... <x_k>'");
  CHECK(error_of("\nflow -1/2 0\n") == "line 2: x_1 is negative");
  CHECK(error_of("flow 0 5/4\n") == "line 1: x_2 exceeds demand 1");
  CHECK(error_of("flow 0 one\n") == "line 1: x_2 must be a rational, got 'one'");
  CHECK(error_of("flow 0 0\nflow 1 1\n") == "line 2: unexpected extra line after the flow line");
}

TEST_CASE("rational formatting and parsing") {
  CHECK(format_rational(Rational(3)) == "3");
  CHECK(format_rational(Rational(0)) == "0");
  CHECK(format_rational(Rational(Integer(2), Integer(4))) == "1/2");
  CHECK(format_rational(Rational(Integer(-3), Integer(6))) == "-1/2");

  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("-3/6") == Rational(Integer(-1), Integer(2)));
  CHECK(parse_rational("0/5") == Rational(0));

  for (const char* bad : {"", "x", "1/", "/2", "1/0", "+2", "1.5", "1/-2", "--1", "2/2/2"}) {
    CHECK_THROWS_AS(parse_rational(bad), DomainError);
  }
}

TEST_CASE("rational round-trip on random values") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::int64_t numerator =
        static_cast<std::int64_t>(rng.below(2000001)) - 1000000;
    const std::int64_t denominator = static_cast<std::int64_t>(rng.below(999)) + 1;
    const Rational value{Integer(numerator), Integer(denominator)};
    CHECK(parse_rational(format_rational(value)) == value);
  }
}
