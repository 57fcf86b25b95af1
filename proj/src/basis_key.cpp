#include "grhopf/basis_key.hpp"

#include <algorithm>

#include "grhopf/errors.hpp"

namespace grhopf {

std::string_view key_kind_name(KeyKind kind) {
  switch (kind) {
    case KeyKind::Unit:
      return "Unit";
    case KeyKind::LinearOrder:
      return "LinearOrder";
    case KeyKind::Orientation:
      return "AcyclicOrientation";
    case KeyKind::Composition:
      return "SetComposition";
    case KeyKind::PartitionM:
      return "SetPartitionM";
    case KeyKind::PartitionP:
      return "SetPartitionP";
    case KeyKind::FlatM:
      return "FlatM";
    case KeyKind::FlatP:
      return "FlatP";
    case KeyKind::MatchingM:
      return "MatchingM";
    case KeyKind::MatchingP:
      return "MatchingP";
  }
  return "?";
}

bool is_partition_kind(KeyKind kind) { return kind == KeyKind::PartitionM || kind == KeyKind::PartitionP; }

bool is_edge_set_kind(KeyKind kind) {
  return kind == KeyKind::FlatM || kind == KeyKind::FlatP || kind == KeyKind::MatchingM ||
         kind == KeyKind::MatchingP;
}

BasisKey BasisKey::unit() { return BasisKey(KeyKind::Unit, std::monostate{}); }

BasisKey BasisKey::linear_order(std::vector<Label> order) {
  if (vset::make(order).size() != order.size()) throw InputError("linear order repeats a label");
  return BasisKey(KeyKind::LinearOrder, std::move(order));
}

BasisKey BasisKey::orientation(std::vector<Arc> arcs) {
  std::sort(arcs.begin(), arcs.end());
  return BasisKey(KeyKind::Orientation, std::move(arcs));
}

BasisKey BasisKey::composition(std::vector<VertexSet> blocks) {
  std::size_t total = 0;
  std::vector<Label> all;
  for (auto& b : blocks) {
    if (b.empty()) throw InputError("composition block must be nonempty");
    b = vset::make(std::move(b));
    total += b.size();
    all.insert(all.end(), b.begin(), b.end());
  }
  if (vset::make(std::move(all)).size() != total) throw InputError("composition blocks overlap");
  return BasisKey(KeyKind::Composition, std::move(blocks));
}

BasisKey BasisKey::partition(KeyKind kind, const VertexPartition& pi) {
  if (!is_partition_kind(kind)) throw InputError("partition key needs an m or p tag");
  return BasisKey(kind, pi.blocks());
}

BasisKey BasisKey::edge_set(KeyKind kind, std::vector<Edge> edges) {
  if (!is_edge_set_kind(kind)) throw InputError("edge-set key needs a flat or matching tag");
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return BasisKey(kind, std::move(edges));
}

const std::vector<Label>& BasisKey::order() const { return std::get<std::vector<Label>>(payload_); }
const std::vector<Arc>& BasisKey::arcs() const { return std::get<std::vector<Arc>>(payload_); }
const std::vector<VertexSet>& BasisKey::blocks() const { return std::get<std::vector<VertexSet>>(payload_); }
const std::vector<Edge>& BasisKey::edges() const { return std::get<std::vector<Edge>>(payload_); }

BasisKey BasisKey::retagged(KeyKind kind) const {
  bool ok = (is_partition_kind(kind) && is_partition_kind(kind_)) ||
            (is_edge_set_kind(kind) && is_edge_set_kind(kind_)) || kind == kind_;
  if (!ok) {
    throw InputError(std::string("cannot retag ") + std::string(key_kind_name(kind_)) + " as " +
                     std::string(key_kind_name(kind)));
  }
  return BasisKey(kind, payload_);
}

namespace {

std::string join_set(const VertexSet& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += s[i];
  }
  return out;
}

std::string edge_literal(const Label& a, const Label& b, const char* sep) {
  if (a.size() == 1 && b.size() == 1) return a + b;
  return a + sep + b;
}

std::vector<std::pair<std::string, std::size_t>> split(std::string_view text, char sep, std::size_t offset) {
  std::vector<std::pair<std::string, std::size_t>> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == sep) {
      parts.emplace_back(std::string(text.substr(start, i - start)), offset + start);
      start = i + 1;
    }
  }
  return parts;
}

std::string trim(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

Label require_label(const std::string& raw, std::size_t col) {
  Label label = trim(raw);
  if (label.empty()) throw InputError("empty vertex label in key literal", 1, static_cast<int>(col) + 1);
  return label;
}

VertexSet parse_block(const std::string& text, std::size_t col) {
  std::vector<Label> labels;
  for (auto& [part, c] : split(text, ',', col)) labels.push_back(require_label(part, c));
  VertexSet set = vset::make(labels);
  if (set.size() != labels.size()) throw InputError("repeated label in block", 1, static_cast<int>(col) + 1);
  return set;
}

}  // namespace

std::string BasisKey::literal() const {
  std::string out;
  switch (kind_) {
    case KeyKind::Unit:
      return "1";
    case KeyKind::LinearOrder:
      for (std::size_t i = 0; i < order().size(); ++i) out += (i ? "<" : "") + order()[i];
      return out;
    case KeyKind::Orientation:
      for (std::size_t i = 0; i < arcs().size(); ++i) {
        out += (i ? "," : "") + arcs()[i].from + ">" + arcs()[i].to;
      }
      return out;
    case KeyKind::Composition:
      for (std::size_t i = 0; i < blocks().size(); ++i) out += (i ? "|" : "") + join_set(blocks()[i]);
      return out;
    case KeyKind::PartitionM:
    case KeyKind::PartitionP:
      for (std::size_t i = 0; i < blocks().size(); ++i) out += (i ? "/" : "") + join_set(blocks()[i]);
      return out;
    default:
      for (std::size_t i = 0; i < edges().size(); ++i) {
        out += (i ? "," : "") + edge_literal(edges()[i].u, edges()[i].v, "-");
      }
      return out;
  }
}

namespace {

// Appends a block, rejecting labels already used by an earlier block.
void push_disjoint(std::vector<VertexSet>& blocks, VertexSet block, std::size_t column) {
  for (const auto& b : blocks) {
    if (!vset::disjoint(b, block)) {
      throw InputError("block {" + vset::to_string(block) + "} repeats a label", 1, static_cast<int>(column) + 1);
    }
  }
  blocks.push_back(std::move(block));
}

}  // namespace

BasisKey parse_key_literal(KeyKind kind, std::string_view raw) {
  std::string text = trim(std::string(raw));
  switch (kind) {
    case KeyKind::Unit:
      if (text != "1" && !text.empty()) throw InputError("unit key literal must be `1`", 1, 1);
      return BasisKey::unit();
    case KeyKind::LinearOrder: {
      std::vector<Label> order;
      if (!text.empty()) {
        for (auto& [part, c] : split(text, '<', 0)) order.push_back(require_label(part, c));
      }
      if (vset::make(order).size() != order.size()) throw InputError("linear order repeats a label", 1, 1);
      return BasisKey::linear_order(std::move(order));
    }
    case KeyKind::Orientation: {
      std::vector<Arc> arcs;
      if (!text.empty()) {
        for (auto& [part, c] : split(text, ',', 0)) {
          auto ends = split(part, '>', c);
          if (ends.size() != 2) throw InputError("expected `u>v` arc", 1, static_cast<int>(c) + 1);
          arcs.push_back({require_label(ends[0].first, ends[0].second),
                          require_label(ends[1].first, ends[1].second)});
        }
      }
      return BasisKey::orientation(std::move(arcs));
    }
    case KeyKind::Composition: {
      std::vector<VertexSet> blocks;
      if (!text.empty()) {
        for (auto& [part, c] : split(text, '|', 0)) push_disjoint(blocks, parse_block(part, c), c);
      }
      return BasisKey::composition(std::move(blocks));
    }
    case KeyKind::PartitionM:
    case KeyKind::PartitionP: {
      std::vector<VertexSet> blocks;
      if (!text.empty()) {
        for (auto& [part, c] : split(text, '/', 0)) push_disjoint(blocks, parse_block(part, c), c);
      }
      return BasisKey::partition(kind, VertexPartition(std::move(blocks)));
    }
    default: {
      std::vector<Edge> edges;
      if (!text.empty()) {
        for (auto& [part, c] : split(text, ',', 0)) {
          std::string token = trim(part);
          Edge e;
          if (auto dash = token.find('-'); dash != std::string::npos) {
            e = Edge(require_label(token.substr(0, dash), c), require_label(token.substr(dash + 1), c + dash + 1));
          } else if (token.size() == 2) {
            e = Edge(token.substr(0, 1), token.substr(1, 1));
          } else {
            throw InputError("edge `" + token + "` must be two one-character labels or `u-v`", 1,
                             static_cast<int>(c) + 1);
          }
          if (e.u == e.v) throw InputError("edge literal is a loop", 1, static_cast<int>(c) + 1);
          edges.push_back(std::move(e));
        }
      }
      return BasisKey::edge_set(kind, std::move(edges));
    }
  }
}

}  // namespace grhopf
