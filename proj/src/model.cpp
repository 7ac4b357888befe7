#include "cycleflow/model.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

#include "cycleflow/errors.hpp"

namespace cycleflow {

CycleInstance::CycleInstance(int vertex_count, std::vector<Commodity> commodities)
    : n_(vertex_count), commodities_(std::move(commodities)) {
  if (n_ < 3) {
    throw DomainError("cycle needs at least 3 vertices, got " + std::to_string(n_));
  }
  if (commodities_.empty()) {
    throw DomainError("at least one commodity is required");
  }
  for (std::size_t i = 0; i < commodities_.size(); ++i) {
    const Commodity& c = commodities_[i];
    const std::string who = "commodity " + std::to_string(i);
    if (c.source < 0 || c.source >= n_ || c.target < 0 || c.target >= n_) {
      throw DomainError(who + ": endpoint out of range 0.." + std::to_string(n_ - 1));
    }
    if (c.source == c.target) {
      throw DomainError(who + ": source equals target");
    }
    if (c.demand <= 0) {
      throw DomainError(who + ": demand must be positive");
    }
  }
}

const Commodity& CycleInstance::commodity(int i) const {
  if (i < 0 || i >= commodity_count()) {
    throw DomainError("commodity index " + std::to_string(i) + " out of range");
  }
  return commodities_[static_cast<std::size_t>(i)];
}

ArcPath::ArcPath(int cycle_size, int start, int end)
    : n_(cycle_size), start_(start), end_(end) {
  if (n_ < 3) {
    throw DomainError("arc on a cycle of size " + std::to_string(n_));
  }
  if (start_ < 0 || start_ >= n_ || end_ < 0 || end_ >= n_) {
    throw DomainError("arc endpoint out of range 0.." + std::to_string(n_ - 1));
  }
  if (start_ == end_) {
    throw DomainError("arc must be nonempty and shorter than the cycle");
  }
}

bool ArcPath::contains_edge(int edge) const {
  if (edge < 0 || edge >= n_) return false;
  return (edge - start_ + n_) % n_ < length();
}

std::vector<int> ArcPath::edges() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(length()));
  for (int j = 0; j < length(); ++j) {
    out.push_back((start_ + j) % n_);
  }
  return out;
}

FlowAssignment::FlowAssignment(const CycleInstance& instance, std::vector<Rational> clockwise)
    : x_(std::move(clockwise)) {
  if (static_cast<int>(x_.size()) != instance.commodity_count()) {
    throw DomainError("flow has " + std::to_string(x_.size()) + " values but instance has " +
                      std::to_string(instance.commodity_count()) + " commodities");
  }
  for (std::size_t i = 0; i < x_.size(); ++i) {
    const std::string who = "x_" + std::to_string(i + 1);
    if (x_[i] < 0) {
      throw DomainError(who + " is negative");
    }
    if (x_[i] > instance.commodity(static_cast<int>(i)).demand) {
      throw DomainError(who + " exceeds demand " +
                        format_rational(instance.commodity(static_cast<int>(i)).demand));
    }
  }
}

const Rational& FlowAssignment::clockwise(int i) const {
  if (i < 0 || i >= size()) {
    throw DomainError("commodity index " + std::to_string(i) + " out of range");
  }
  return x_[static_cast<std::size_t>(i)];
}

ArcPath clockwise_path(const CycleInstance& instance, int source, int target) {
  return ArcPath(instance.vertex_count(), source, target);
}

std::pair<ArcPath, ArcPath> paths_of(const CycleInstance& instance, int commodity) {
  const Commodity& c = instance.commodity(commodity);
  ArcPath cw = clockwise_path(instance, c.source, c.target);
  return {cw, cw.complement()};
}

Rational path_flow(const CycleInstance& instance, const FlowAssignment& flow,
                   int commodity, const ArcPath& path) {
  const auto [cw, ccw] = paths_of(instance, commodity);
  if (path == cw) return flow.clockwise(commodity);
  if (path == ccw) return instance.commodity(commodity).demand - flow.clockwise(commodity);
  throw DomainError("path is not one of the two paths of commodity " +
                    std::to_string(commodity));
}

EdgeFlowProfile edge_flows(const CycleInstance& instance, const FlowAssignment& flow) {
  if (flow.size() != instance.commodity_count()) {
    throw DomainError("flow and instance disagree on the number of commodities");
  }
  EdgeFlowProfile profile(static_cast<std::size_t>(instance.edge_count()), Rational(0));
  for (int i = 0; i < instance.commodity_count(); ++i) {
    const auto [cw, ccw] = paths_of(instance, i);
    const Rational& forward = flow.clockwise(i);
    const Rational backward = instance.commodity(i).demand - forward;
    for (int e : cw.edges()) profile[static_cast<std::size_t>(e)] += forward;
    for (int e : ccw.edges()) profile[static_cast<std::size_t>(e)] += backward;
  }
  return profile;
}

namespace {

struct Line {
  int number = 0;  // 1-based position in the original text
  std::vector<std::string> tokens;
};

// Comment-stripped, tokenized content lines.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    ++number;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    const std::size_t hash = raw.find('#');
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::istringstream words{std::string(raw)};
    std::string word;
    while (words >> word) line.tokens.push_back(word);
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (eol == std::string_view::npos) break;
  }
  return out;
}

int parse_label(const Line& line, const std::string& token, const char* what) {
  if (token.empty() || !std::all_of(token.begin(), token.end(),
                                    [](unsigned char c) { return std::isdigit(c); })) {
    throw ParseError(line.number, std::string(what) + " must be a nonnegative integer, got '" +
                                      token + "'");
  }
  try {
    const long long value = std::stoll(token);
    if (value > 1'000'000'000LL) throw std::out_of_range(token);
    return static_cast<int>(value);
  } catch (const std::out_of_range&) {
    throw ParseError(line.number, std::string(what) + " out of range: '" + token + "'");
  }
}

Rational parse_rational_at(const Line& line, const std::string& token, const char* what) {
  try {
    return parse_rational(token);
  } catch (const DomainError&) {
    throw ParseError(line.number, std::string(what) + " must be a rational, got '" + token + "'");
  }
}

}  // namespace

CycleInstance parse_instance(std::string_view text) {
  const std::vector<Line> lines = content_lines(text);
  if (lines.empty()) {
    throw ParseError(1, "expected a 'cycle <n>' line");
  }

  const Line& head = lines.front();
  if (head.tokens[0] != "cycle" || head.tokens.size() != 2) {
    throw ParseError(head.number, "expected 'cycle <n>', got '" + head.tokens[0] + "' line");
  }
  const int n = parse_label(head, head.tokens[1], "cycle size");
  if (n < 3) {
    throw ParseError(head.number, "cycle needs at least 3 vertices, got " + std::to_string(n));
  }

  std::vector<Commodity> commodities;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    if (line.tokens[0] != "commodity" || line.tokens.size() != 4) {
      throw ParseError(line.number, "expected 'commodity <source> <target> <demand>'");
    }
    Commodity c;
    c.source = parse_label(line, line.tokens[1], "source");
    c.target = parse_label(line, line.tokens[2], "target");
    c.demand = parse_rational_at(line, line.tokens[3], "demand");
    if (c.source >= n || c.target >= n) {
      throw ParseError(line.number, "endpoint out of range 0.." + std::to_string(n - 1));
    }
    if (c.source == c.target) {
      throw ParseError(line.number, "source equals target");
    }
    if (c.demand <= 0) {
      throw ParseError(line.number, "demand must be positive");
    }
    commodities.push_back(std::move(c));
  }
  if (commodities.empty()) {
    throw ParseError(head.number, "expected at least one commodity line");
  }
  return CycleInstance(n, std::move(commodities));
}

FlowAssignment parse_flow(std::string_view text, const CycleInstance& instance) {
  const std::vector<Line> lines = content_lines(text);
  if (lines.empty()) {
    throw ParseError(1, "expected a 'flow <x_1> ... <x_k>' line");
  }
  if (lines.size() > 1) {
    throw ParseError(lines[1].number, "unexpected extra line after the flow line");
  }

  const Line& line = lines.front();
  const std::size_t k = static_cast<std::size_t>(instance.commodity_count());
  if (line.tokens[0] != "flow") {
    throw ParseError(line.number, "expected 'flow <x_1> ... <x_k>'");
  }
  if (line.tokens.size() != k + 1) {
    throw ParseError(line.number, "expected " + std::to_string(k) + " flow values, got " +
                                      std::to_string(line.tokens.size() - 1));
  }

  std::vector<Rational> values;
  values.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::string who = "x_" + std::to_string(i + 1);
    Rational x = parse_rational_at(line, line.tokens[i + 1], who.c_str());
    if (x < 0) {
      throw ParseError(line.number, who + " is negative");
    }
    if (x > instance.commodity(static_cast<int>(i)).demand) {
      throw ParseError(line.number,
                       who + " exceeds demand " +
                           format_rational(instance.commodity(static_cast<int>(i)).demand));
    }
    values.push_back(std::move(x));
  }
  return FlowAssignment(instance, std::move(values));
}

std::string serialize_instance(const CycleInstance& instance) {
  std::string out = "cycle " + std::to_string(instance.vertex_count()) + "\n";
  for (const Commodity& c : instance.commodities()) {
    out += "commodity " + std::to_string(c.source) + " " + std::to_string(c.target) + " " +
           format_rational(c.demand) + "\n";
  }
  return out;
}

std::string serialize_flow(const FlowAssignment& flow) {
  std::string out = "flow";
  for (const Rational& x : flow.clockwise()) {
    out += " " + format_rational(x);
  }
  out += "\n";
  return out;
}

}  // namespace cycleflow
