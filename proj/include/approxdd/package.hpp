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

#ifndef APPROXDD_PACKAGE_HPP
#define APPROXDD_PACKAGE_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "approxdd/weights.hpp"

namespace approxdd {

using NodeId = std::uint32_t;

/// Slot 0 of every node store is the shared terminal (level -1, value 1).
inline constexpr NodeId kTerminal = 0;
inline constexpr int kTerminalLevel = -1;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

struct Edge {
  NodeId node = kTerminal;
  Complex weight{};

  [[nodiscard]] bool is_zero() const noexcept { return weight == Complex{}; }
  [[nodiscard]] bool is_terminal() const noexcept { return node == kTerminal; }

  [[nodiscard]] static Edge zero() noexcept { return {}; }
  [[nodiscard]] static Edge one() noexcept { return {kTerminal, {1.0, 0.0}}; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Successor order: vectors {bit 0, bit 1}; matrices {00, 01, 10, 11} as
/// (row bit, column bit).
template <std::size_t Arity>
struct Node {
  std::array<Edge, Arity> succ{};
  std::int32_t level = kTerminalLevel;
  std::uint32_t ref = 0;
  NodeId next = kNoNode;
  bool alive = false;
  bool shared = true;
  bool identity = false;
};

using VectorNode = Node<2>;
using MatrixNode = Node<4>;

/// Node storage plus the unique table (bucket chains threaded through
/// Node::next). Freed slots are recycled in LIFO order, so ids are a pure
/// function of the operation sequence.
template <std::size_t Arity>
class NodeStore {
 public:
  using NodeType = Node<Arity>;

  NodeStore();

  [[nodiscard]] const NodeType& operator[](NodeId id) const { return nodes_[id]; }

  /// Returns the stored node equal to `candidate`, creating it if needed.
  NodeId intern(const NodeType& candidate);
  /// Stores `candidate` without registering it for sharing.
  NodeId insert_unshared(const NodeType& candidate);

  void inc_ref(NodeId id) noexcept;
  void dec_ref(NodeId id) noexcept;

  /// Frees every unreferenced node, cascading into children.
  std::size_t collect();

  [[nodiscard]] std::size_t live() const noexcept { return live_; }

  template <class Fn>
  void for_each_live(Fn&& fn) const {
    for (NodeId id = 1; id < nodes_.size(); ++id) {
      if (nodes_[id].alive) {
        fn(id, nodes_[id]);
      }
    }
  }

 private:
  [[nodiscard]] std::size_t hash(const NodeType& node) const noexcept;
  NodeId allocate(const NodeType& candidate);
  void unlink(NodeId id);
  void grow_buckets();

  std::vector<NodeType> nodes_;
  std::vector<NodeId> free_;
  std::vector<NodeId> buckets_;
  std::size_t live_ = 0;
  std::size_t shared_live_ = 0;
};

/// Fixed-size memo table, overwrite on collision. Entries are validated by
/// full key comparison, and invalidate() bumps a generation stamp so a
/// garbage collection never lets a stale node id hit.
template <class Key, class Value, class Hasher>
class ComputeTable {
 public:
  explicit ComputeTable(unsigned log2_size) : log2_size_(log2_size) {}

  [[nodiscard]] const Value* find(const Key& key) const {
    if (slots_.empty()) {
      return nullptr;
    }
    const Slot& slot = slots_[index(key)];
    if (slot.generation == generation_ && slot.key == key) {
      return &slot.value;
    }
    return nullptr;
  }

  void insert(const Key& key, const Value& value) {
    if (slots_.empty()) {
      slots_.resize(std::size_t{1} << log2_size_);
    }
    slots_[index(key)] = Slot{key, value, generation_};
  }

  void invalidate() noexcept { ++generation_; }

 private:
  struct Slot {
    Key key{};
    Value value{};
    std::uint32_t generation = 0;
  };

  [[nodiscard]] std::size_t index(const Key& key) const noexcept {
    return Hasher{}(key) & ((std::size_t{1} << log2_size_) - 1);
  }

  unsigned log2_size_;
  std::uint32_t generation_ = 1;
  std::vector<Slot> slots_;
};

struct PackageConfig {
  /// log2 of the entry count of each compute table.
  unsigned compute_table_log2 = 20;
  bool memoize = true;
  /// Live-node ceiling across both stores; exceeding it raises ResourceError.
  std::size_t node_limit = std::size_t{1} << 25;

  /// Defaults, with APPROXDD_CT_LOG2 overriding compute_table_log2 and
  /// APPROXDD_NODE_LIMIT overriding node_limit.
  static PackageConfig from_environment();
};

namespace detail {

struct PairKey {
  NodeId a = kNoNode;
  NodeId b = kNoNode;
  friend bool operator==(const PairKey&, const PairKey&) = default;
};

struct AddKey {
  NodeId a = kNoNode;
  NodeId b = kNoNode;
  double ratio_re = 0.0;
  double ratio_im = 0.0;
  friend bool operator==(const AddKey&, const AddKey&) = default;
};

struct PairKeyHash {
  std::size_t operator()(const PairKey& k) const noexcept;
};
struct AddKeyHash {
  std::size_t operator()(const AddKey& k) const noexcept;
};

}  // namespace detail

/// A simulation context: both node stores, the weight table and the compute
/// tables. Not thread-safe; use one Package per thread.
///
/// Garbage is only reclaimed by collect_garbage(); nothing in here collects
/// implicitly, so node ids and counts are reproducible.
class Package {
 public:
  explicit Package(PackageConfig config = PackageConfig{});
  Package(const Package&) = delete;
  Package& operator=(const Package&) = delete;

  [[nodiscard]] const PackageConfig& config() const noexcept { return config_; }
  void set_memoization(bool enabled) noexcept { config_.memoize = enabled; }

  // Normalizes the successors (largest-magnitude weight becomes 1, ties to the
  // lower index) and returns the shared node with the factor on the edge.
  Edge make_vector_node(int level, std::array<Edge, 2> succ);
  Edge make_matrix_node(int level, std::array<Edge, 4> succ);
  /// Same normalization, but the node is not shared with structurally equal
  /// ones. Lets tests spell out non-reduced diagrams node for node.
  Edge make_unshared_vector_node(int level, std::array<Edge, 2> succ);

  [[nodiscard]] const VectorNode& vector_node(NodeId id) const { return vectors_[id]; }
  [[nodiscard]] const MatrixNode& matrix_node(NodeId id) const { return matrices_[id]; }
  [[nodiscard]] int vector_level(const Edge& e) const { return vectors_[e.node].level; }

  /// Sum of two vector edges on the same level.
  Edge add(const Edge& x, const Edge& y);
  /// Matrix edge times vector edge; both rooted at the same level.
  Edge multiply(const Edge& matrix, const Edge& vector);
  /// <a|b>, conjugating the left operand.
  Complex inner_product(const Edge& a, const Edge& b);
  /// Squared l2 norm of the vector an edge represents.
  double squared_norm(const Edge& e) const;

  void inc_ref_vector(const Edge& e) noexcept { vectors_.inc_ref(e.node); }
  void dec_ref_vector(const Edge& e) noexcept { vectors_.dec_ref(e.node); }
  void inc_ref_matrix(const Edge& e) noexcept { matrices_.inc_ref(e.node); }
  void dec_ref_matrix(const Edge& e) noexcept { matrices_.dec_ref(e.node); }

  /// Frees unreferenced nodes, invalidates compute tables and rebuilds the
  /// weight table from surviving weights. Returns the number of nodes freed.
  std::size_t collect_garbage();

  [[nodiscard]] std::size_t live_vector_nodes() const noexcept { return vectors_.live(); }
  [[nodiscard]] std::size_t live_matrix_nodes() const noexcept { return matrices_.live(); }

 private:
  template <std::size_t Arity>
  Edge normalize(std::array<Edge, Arity>& succ);
  void check_capacity() const;

  Edge add_rec(const Edge& x, const Edge& y);
  Edge multiply_rec(const Edge& m, const Edge& v);
  Complex inner_rec(const Edge& a, const Edge& b);

  PackageConfig config_;
  RealTable weights_;
  NodeStore<2> vectors_;
  NodeStore<4> matrices_;
  ComputeTable<detail::AddKey, Edge, detail::AddKeyHash> add_table_;
  ComputeTable<detail::PairKey, Edge, detail::PairKeyHash> multiply_table_;
  ComputeTable<detail::PairKey, Complex, detail::PairKeyHash> inner_table_;
};

/// Owning handle to a rooted diagram: keeps the root referenced for as long
/// as the handle lives. Arity 2 is a state vector, arity 4 a matrix.
template <std::size_t Arity>
class DecisionDiagram {
 public:
  DecisionDiagram() = default;
  DecisionDiagram(Package& package, Edge root, std::size_t num_qubits)
      : package_(&package), root_(root), num_qubits_(num_qubits) {
    retain();
  }
  DecisionDiagram(const DecisionDiagram& other)
      : package_(other.package_), root_(other.root_), num_qubits_(other.num_qubits_) {
    retain();
  }
  DecisionDiagram(DecisionDiagram&& other) noexcept
      : package_(std::exchange(other.package_, nullptr)),
        root_(std::exchange(other.root_, Edge{})),
        num_qubits_(std::exchange(other.num_qubits_, 0)) {}
  DecisionDiagram& operator=(DecisionDiagram other) noexcept {
    std::swap(package_, other.package_);
    std::swap(root_, other.root_);
    std::swap(num_qubits_, other.num_qubits_);
    return *this;
  }
  ~DecisionDiagram() { release(); }

  [[nodiscard]] Package& package() const { return *package_; }
  [[nodiscard]] const Edge& root() const noexcept { return root_; }
  [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }
  [[nodiscard]] bool valid() const noexcept { return package_ != nullptr; }

 private:
  void retain() noexcept {
    if (package_ == nullptr) {
      return;
    }
    if constexpr (Arity == 2) {
      package_->inc_ref_vector(root_);
    } else {
      package_->inc_ref_matrix(root_);
    }
  }
  void release() noexcept {
    if (package_ == nullptr) {
      return;
    }
    if constexpr (Arity == 2) {
      package_->dec_ref_vector(root_);
    } else {
      package_->dec_ref_matrix(root_);
    }
  }

  Package* package_ = nullptr;
  Edge root_{};
  std::size_t num_qubits_ = 0;
};

using StateDD = DecisionDiagram<2>;
using MatrixDD = DecisionDiagram<4>;

}  // namespace approxdd

#endif  // APPROXDD_PACKAGE_HPP
