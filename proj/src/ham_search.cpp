#include "psg/ham_search.hpp"

#include <algorithm>

#include "psg/face_dual.hpp"

namespace psg {

namespace {

class Backtracker {
 public:
  Backtracker(const PlaneSignedGraph& graph, std::size_t limit)
      : graph_(graph), limit_(limit), n_(graph.vertex_count()), adj_(n_), on_path_(n_, false) {
    for (VertexId v = 0; v < n_; ++v) {
      adj_[v] = graph.neighbors(v);
      std::sort(adj_[v].begin(), adj_[v].end());
    }
  }

  EnumerationResult run() {
    if (n_ >= 3 && std::all_of(adj_.begin(), adj_.end(), [](const auto& a) { return a.size() >= 2; })) {
      push(0);
      extend();
    }
    std::sort(result_.circles.begin(), result_.circles.end());
    return std::move(result_);
  }

 private:
  void push(VertexId v) {
    path_.push_back(v);
    on_path_[v] = true;
  }
  void pop() {
    on_path_[path_.back()] = false;
    path_.pop_back();
  }

  // Returns false once the limit has been overrun.
  bool extend() {
    const VertexId head = path_.back();
    if (path_.size() == n_) {
      if (path_[1] < path_.back() && std::binary_search(adj_[head].begin(), adj_[head].end(), 0))
        return record();
      return true;
    }
    for (VertexId w : adj_[head]) {
      if (on_path_[w]) continue;
      push(w);
      const bool viable = feasible(head);
      const bool keep_going = !viable || extend();
      pop();
      if (!keep_going) return false;
    }
    return true;
  }

  std::size_t usable(VertexId w) const {
    std::size_t count = 0;
    for (VertexId x : adj_[w])
      if (!on_path_[x] || x == path_.back() || x == path_.front()) ++count;
    return count;
  }

  // `left` just became an inner path vertex.
  bool feasible(VertexId left) const {
    const VertexId head = path_.back();
    if (path_.size() == n_) return true;
    for (VertexId w : adj_[left])
      if (!on_path_[w] && usable(w) < 2) return false;

    // Every unvisited vertex must be reachable from the head through
    // unvisited vertices, and the walk must be able to come back to the start.
    std::vector<bool> seen(n_, false);
    std::vector<VertexId> stack{head};
    seen[head] = true;
    std::size_t reached = 0;
    bool closes = false;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (VertexId x : adj_[v]) {
        if (x == path_.front() && v != head) closes = true;
        if (on_path_[x] || seen[x]) continue;
        seen[x] = true;
        ++reached;
        stack.push_back(x);
      }
    }
    return closes && reached == n_ - path_.size();
  }

  bool record() {
    if (result_.circles.size() == limit_) {
      result_.truncated = true;
      return false;
    }
    result_.circles.push_back(Circle::from_vertices(graph_, path_));
    return true;
  }

  const PlaneSignedGraph& graph_;
  std::size_t limit_;
  std::size_t n_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<bool> on_path_;
  std::vector<VertexId> path_;
  EnumerationResult result_;
};

}  // namespace

EnumerationResult enumerate_hamiltonian(const PlaneSignedGraph& graph, std::size_t limit) {
  if (limit == 0) throw Error(ErrorCode::LimitExceeded, "limit must be at least 1");
  return Backtracker(graph, limit).run();
}

SignCensus sign_census(const PlaneSignedGraph& graph, std::size_t limit) {
  const auto found = enumerate_hamiltonian(graph, limit);
  if (found.truncated)
    throw Error(ErrorCode::LimitExceeded, "more than " + std::to_string(limit) + " Hamiltonian circles");
  SignCensus census;
  for (const auto& c : found.circles) {
    if (circle_sign(graph, c) == Sign::Plus) {
      if (census.positives++ == 0) census.positive_witness = c;
    } else {
      if (census.negatives++ == 0) census.negative_witness = c;
    }
  }
  return census;
}

std::optional<OppositeSignWitness> opposite_sign_witness(const PlaneSignedGraph& graph,
                                                         std::size_t limit) {
  if (!is_two_connected(graph)) throw Error(ErrorCode::NotTwoConnected, "graph has a cut vertex");
  const auto census = sign_census(graph, limit);
  if (census.positives + census.negatives == 0)
    throw Error(ErrorCode::NoHamiltonianCircle, "graph has no Hamiltonian circle");
  if (!census.both_signs()) return std::nullopt;
  return OppositeSignWitness{coham_from_circle(graph, *census.positive_witness),
                             coham_from_circle(graph, *census.negative_witness)};
}

bool symmetric_difference_sign_check(const PlaneSignedGraph& graph, const HamiltonianSet& first,
                                     const HamiltonianSet& second) {
  auto a = first.faces;
  auto b = second.faces;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<FaceId> only_first, only_second;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(only_first));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(only_second));
  if (only_first.size() != 1 || only_second.size() != 1)
    throw Error(ErrorCode::BadSymmetricDifference,
                "symmetric difference has " + std::to_string(only_first.size()) + " + " +
                    std::to_string(only_second.size()) + " faces, need 1 + 1");
  const Sign s1 = hamiltonian_set_sign(graph, first);
  const Sign s2 = hamiltonian_set_sign(graph, second);
  const Sign sa = face_sign(graph, only_first.front());
  const Sign sb = face_sign(graph, only_second.front());
  return (s1 == s2) == (sa == sb);
}

}  // namespace psg
