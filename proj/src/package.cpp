// Copyright 2026 The approxdd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "approxdd/package.hpp"

#include <bit>
#include <cassert>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>
#include <unordered_map>

#include "approxdd/errors.hpp"

namespace approxdd {
namespace {

constexpr std::size_t kInitialBuckets = std::size_t{1} << 12;

std::uint64_t mix(std::uint64_t h, std::uint64_t v) noexcept {
  v *= 0x9E3779B97F4A7C15ULL;
  v ^= v >> 29;
  h ^= v + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
  return h;
}

std::uint64_t bits(double d) noexcept { return std::bit_cast<std::uint64_t>(d); }

Edge scaled(const Edge& e, const Complex& factor) {
  if (e.is_zero()) {
    return Edge::zero();
  }
  const Complex w = e.weight * factor;
  if (approximately_zero(w)) {
    return Edge::zero();
  }
  return {e.node, w};
}

}  // namespace

// --- NodeStore -------------------------------------------------------------

template <std::size_t Arity>
NodeStore<Arity>::NodeStore() : buckets_(kInitialBuckets, kNoNode) {
  NodeType terminal;
  terminal.alive = true;
  terminal.shared = false;
  terminal.identity = true;
  nodes_.push_back(terminal);
}

template <std::size_t Arity>
std::size_t NodeStore<Arity>::hash(const NodeType& node) const noexcept {
  std::uint64_t h = static_cast<std::uint64_t>(node.level + 1);
  for (const Edge& e : node.succ) {
    h = mix(h, e.node);
    h = mix(h, bits(e.weight.real()));
    h = mix(h, bits(e.weight.imag()));
  }
  return static_cast<std::size_t>(h);
}

template <std::size_t Arity>
NodeId NodeStore<Arity>::allocate(const NodeType& candidate) {
  NodeId id = 0;
  if (!free_.empty()) {
    id = free_.back();
    free_.pop_back();
    nodes_[id] = candidate;
  } else {
    id = static_cast<NodeId>(nodes_.size());
    nodes_.push_back(candidate);
  }
  NodeType& node = nodes_[id];
  node.alive = true;
  node.ref = 0;
  node.next = kNoNode;
  for (const Edge& e : node.succ) {
    inc_ref(e.node);
  }
  ++live_;
  return id;
}

template <std::size_t Arity>
NodeId NodeStore<Arity>::intern(const NodeType& candidate) {
  const std::size_t bucket = hash(candidate) & (buckets_.size() - 1);
  for (NodeId id = buckets_[bucket]; id != kNoNode; id = nodes_[id].next) {
    const NodeType& node = nodes_[id];
    if (node.level == candidate.level && node.succ == candidate.succ) {
      return id;
    }
  }
  const NodeId id = allocate(candidate);
  nodes_[id].shared = true;
  nodes_[id].next = buckets_[bucket];
  buckets_[bucket] = id;
  if (++shared_live_ > 2 * buckets_.size()) {
    grow_buckets();
  }
  return id;
}

template <std::size_t Arity>
NodeId NodeStore<Arity>::insert_unshared(const NodeType& candidate) {
  const NodeId id = allocate(candidate);
  nodes_[id].shared = false;
  return id;
}

template <std::size_t Arity>
void NodeStore<Arity>::inc_ref(NodeId id) noexcept {
  if (id != kTerminal) {
    ++nodes_[id].ref;
  }
}

template <std::size_t Arity>
void NodeStore<Arity>::dec_ref(NodeId id) noexcept {
  if (id != kTerminal && nodes_[id].ref > 0) {
    --nodes_[id].ref;
  }
}

template <std::size_t Arity>
void NodeStore<Arity>::unlink(NodeId id) {
  const std::size_t bucket = hash(nodes_[id]) & (buckets_.size() - 1);
  NodeId* link = &buckets_[bucket];
  while (*link != kNoNode) {
    if (*link == id) {
      *link = nodes_[id].next;
      --shared_live_;
      return;
    }
    link = &nodes_[*link].next;
  }
  assert(false && "shared node missing from unique table");
}

template <std::size_t Arity>
void NodeStore<Arity>::grow_buckets() {
  buckets_.assign(buckets_.size() * 2, kNoNode);
  for (NodeId id = 1; id < nodes_.size(); ++id) {
    NodeType& node = nodes_[id];
    if (node.alive && node.shared) {
      const std::size_t bucket = hash(node) & (buckets_.size() - 1);
      node.next = buckets_[bucket];
      buckets_[bucket] = id;
    }
  }
}

template <std::size_t Arity>
std::size_t NodeStore<Arity>::collect() {
  std::vector<NodeId> pending;
  for (NodeId id = 1; id < nodes_.size(); ++id) {
    if (nodes_[id].alive && nodes_[id].ref == 0) {
      pending.push_back(id);
    }
  }
  std::size_t freed = 0;
  while (!pending.empty()) {
    const NodeId id = pending.back();
    pending.pop_back();
    NodeType& node = nodes_[id];
    if (!node.alive || node.ref != 0) {
      continue;
    }
    if (node.shared) {
      unlink(id);
    }
    for (const Edge& e : node.succ) {
      if (e.node != kTerminal) {
        NodeType& child = nodes_[e.node];
        if (child.ref > 0 && --child.ref == 0) {
          pending.push_back(e.node);
        }
      }
    }
    node.alive = false;
    free_.push_back(id);
    --live_;
    ++freed;
  }
  return freed;
}

template class NodeStore<2>;
template class NodeStore<4>;

// --- compute-table keys ----------------------------------------------------

namespace detail {

std::size_t PairKeyHash::operator()(const PairKey& k) const noexcept {
  return static_cast<std::size_t>(mix(mix(0, k.a), k.b));
}

std::size_t AddKeyHash::operator()(const AddKey& k) const noexcept {
  std::uint64_t h = mix(mix(0, k.a), k.b);
  h = mix(h, bits(k.ratio_re));
  return static_cast<std::size_t>(mix(h, bits(k.ratio_im)));
}

}  // namespace detail

// --- Package ---------------------------------------------------------------

PackageConfig PackageConfig::from_environment() {
  PackageConfig config;
  if (const char* raw = std::getenv("APPROXDD_CT_LOG2"); raw != nullptr) {
    unsigned value = 0;
    const char* end = raw + std::strlen(raw);
    auto [ptr, ec] = std::from_chars(raw, end, value);
    if (ec != std::errc{} || ptr != end || value < 4 || value > 28) {
      throw InputError("APPROXDD_CT_LOG2 must be an integer in [4, 28], got '" +
                       std::string(raw) + "'");
    }
    config.compute_table_log2 = value;
  }
  if (const char* raw = std::getenv("APPROXDD_NODE_LIMIT"); raw != nullptr) {
    std::size_t value = 0;
    const char* end = raw + std::strlen(raw);
    auto [ptr, ec] = std::from_chars(raw, end, value);
    if (ec != std::errc{} || ptr != end || value < 2) {
      throw InputError("APPROXDD_NODE_LIMIT must be an integer >= 2, got '" + std::string(raw) +
                       "'");
    }
    config.node_limit = value;
  }
  return config;
}

Package::Package(PackageConfig config)
    : config_(config),
      add_table_(config.compute_table_log2),
      multiply_table_(config.compute_table_log2),
      inner_table_(config.compute_table_log2) {}

template <std::size_t Arity>
Edge Package::normalize(std::array<Edge, Arity>& succ) {
  std::size_t best = Arity;
  double best_magnitude = 0.0;
  for (std::size_t i = 0; i < Arity; ++i) {
    Edge& e = succ[i];
    if (approximately_zero(e.weight)) {
      e = Edge::zero();
      continue;
    }
    assert(e.node == kTerminal ? level == 0 : true);
    const double magnitude = std::abs(e.weight);
    if (best == Arity || magnitude > best_magnitude + kWeightTolerance) {
      best = i;
      best_magnitude = magnitude;
    }
  }
  if (best == Arity) {
    return Edge::zero();
  }
  const Complex divisor = succ[best].weight;
  for (std::size_t i = 0; i < Arity; ++i) {
    Edge& e = succ[i];
    if (e.is_zero()) {
      continue;
    }
    if (i == best) {
      e.weight = {1.0, 0.0};
      continue;
    }
    e.weight = weights_.canonical(e.weight / divisor);
    if (e.weight == Complex{}) {
      e = Edge::zero();
    }
  }
  return {kNoNode, divisor};
}

void Package::check_capacity() const {
  if (vectors_.live() + matrices_.live() > config_.node_limit) {
    throw ResourceError("node limit of " + std::to_string(config_.node_limit) +
                        " live nodes exceeded");
  }
}

Edge Package::make_vector_node(int level, std::array<Edge, 2> succ) {
  Edge top = normalize(succ);
  if (top.is_zero()) {
    return top;
  }
  VectorNode candidate;
  candidate.succ = succ;
  candidate.level = level;
  top.node = vectors_.intern(candidate);
  check_capacity();
  return top;
}

Edge Package::make_unshared_vector_node(int level, std::array<Edge, 2> succ) {
  Edge top = normalize(succ);
  if (top.is_zero()) {
    return top;
  }
  VectorNode candidate;
  candidate.succ = succ;
  candidate.level = level;
  top.node = vectors_.insert_unshared(candidate);
  return top;
}

Edge Package::make_matrix_node(int level, std::array<Edge, 4> succ) {
  Edge top = normalize(succ);
  if (top.is_zero()) {
    return top;
  }
  MatrixNode candidate;
  candidate.succ = succ;
  candidate.level = level;
  candidate.identity = succ[1].is_zero() && succ[2].is_zero() && succ[0] == succ[3] &&
                       succ[0].weight == Complex{1.0, 0.0} &&
                       matrices_[succ[0].node].identity;
  top.node = matrices_.intern(candidate);
  check_capacity();
  return top;
}

Edge Package::add(const Edge& x, const Edge& y) { return add_rec(x, y); }

Edge Package::add_rec(const Edge& x, const Edge& y) {
  if (x.is_zero()) {
    return y;
  }
  if (y.is_zero()) {
    return x;
  }
  if (x.node == y.node) {
    const Complex w = x.weight + y.weight;
    return approximately_zero(w) ? Edge::zero() : Edge{x.node, w};
  }
  const Complex ratio = y.weight / x.weight;
  const detail::AddKey key{x.node, y.node, ratio.real(), ratio.imag()};
  if (config_.memoize) {
    if (const Edge* hit = add_table_.find(key)) {
      return scaled(*hit, x.weight);
    }
  }
  const VectorNode& xn = vectors_[x.node];
  const int level = xn.level;
  const std::array<Edge, 2> xs = xn.succ;
  const std::array<Edge, 2> ys = vectors_[y.node].succ;
  std::array<Edge, 2> sum;
  for (std::size_t i = 0; i < 2; ++i) {
    sum[i] = add_rec(xs[i], scaled(ys[i], ratio));
  }
  const Edge result = make_vector_node(level, sum);
  if (config_.memoize) {
    add_table_.insert(key, result);
  }
  return scaled(result, x.weight);
}

Edge Package::multiply(const Edge& matrix, const Edge& vector) {
  return multiply_rec(matrix, vector);
}

Edge Package::multiply_rec(const Edge& m, const Edge& v) {
  if (m.is_zero() || v.is_zero()) {
    return Edge::zero();
  }
  const Complex factor = m.weight * v.weight;
  if (m.node == kTerminal) {
    assert(v.node == kTerminal);
    return approximately_zero(factor) ? Edge::zero() : Edge{kTerminal, factor};
  }
  const MatrixNode& mn = matrices_[m.node];
  if (mn.identity) {
    return scaled(Edge{v.node, {1.0, 0.0}}, factor);
  }
  const detail::PairKey key{m.node, v.node};
  if (config_.memoize) {
    if (const Edge* hit = multiply_table_.find(key)) {
      return scaled(*hit, factor);
    }
  }
  const int level = mn.level;
  const std::array<Edge, 4> ms = mn.succ;
  const std::array<Edge, 2> vs = vectors_[v.node].succ;
  std::array<Edge, 2> rows;
  for (std::size_t row = 0; row < 2; ++row) {
    const Edge left = multiply_rec(ms[2 * row], vs[0]);
    const Edge right = multiply_rec(ms[2 * row + 1], vs[1]);
    rows[row] = add_rec(left, right);
  }
  const Edge result = make_vector_node(level, rows);
  if (config_.memoize) {
    multiply_table_.insert(key, result);
  }
  return scaled(result, factor);
}

Complex Package::inner_product(const Edge& a, const Edge& b) { return inner_rec(a, b); }

Complex Package::inner_rec(const Edge& a, const Edge& b) {
  if (a.is_zero() || b.is_zero()) {
    return {};
  }
  const Complex factor = std::conj(a.weight) * b.weight;
  if (a.node == kTerminal) {
    return factor;
  }
  const detail::PairKey key{a.node, b.node};
  if (config_.memoize) {
    if (const Complex* hit = inner_table_.find(key)) {
      return factor * *hit;
    }
  }
  const std::array<Edge, 2> as = vectors_[a.node].succ;
  const std::array<Edge, 2> bs = vectors_[b.node].succ;
  const Complex sum = inner_rec(as[0], bs[0]) + inner_rec(as[1], bs[1]);
  if (config_.memoize) {
    inner_table_.insert(key, sum);
  }
  return factor * sum;
}

double Package::squared_norm(const Edge& e) const {
  std::unordered_map<NodeId, double> memo;
  auto rec = [&](auto&& self, NodeId id) -> double {
    if (id == kTerminal) {
      return 1.0;
    }
    if (auto it = memo.find(id); it != memo.end()) {
      return it->second;
    }
    double total = 0.0;
    for (const Edge& child : vectors_[id].succ) {
      if (!child.is_zero()) {
        total += std::norm(child.weight) * self(self, child.node);
      }
    }
    memo.emplace(id, total);
    return total;
  };
  if (e.is_zero()) {
    return 0.0;
  }
  return std::norm(e.weight) * rec(rec, e.node);
}

std::size_t Package::collect_garbage() {
  const std::size_t freed = vectors_.collect() + matrices_.collect();
  add_table_.invalidate();
  multiply_table_.invalidate();
  inner_table_.invalidate();
  weights_.clear();
  auto keep = [this](NodeId, const auto& node) {
    for (const Edge& e : node.succ) {
      (void)weights_.canonical(e.weight);
    }
  };
  vectors_.for_each_live(keep);
  matrices_.for_each_live(keep);
  return freed;
}

}  // namespace approxdd
