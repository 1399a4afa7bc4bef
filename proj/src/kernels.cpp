#include "mcan/kernels.hpp"

#include <map>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mcan::kernels {

namespace {

// Below this many candidate pairs the thread start-up costs more than the work.
constexpr std::size_t kParallelThreshold = 4096;

using Key = std::vector<const Term*>;

struct KeyHash {
  std::size_t operator()(const Key& key) const noexcept {
    std::size_t h = 0;
    for (const Term* t : key) h = h * 1000003u ^ TermHash{}(*t);
    return h;
  }
};

struct KeyEqual {
  bool operator()(const Key& a, const Key& b) const noexcept {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (*a[i] != *b[i]) return false;
    }
    return true;
  }
};

using Index = std::unordered_map<Key, std::vector<std::size_t>, KeyHash, KeyEqual>;

Key keyOf(const SolutionMapping& m, const std::vector<Variable>& shared) {
  Key key;
  key.reserve(shared.size());
  for (const Variable& v : shared) key.push_back(m.find(v));
  return key;
}

// Mappings of one set grouped by domain, with a hash index per pair of
// (left domain, right domain) keyed on the variables the two share.
class Partition {
 public:
  Partition(const MappingSet& left, const MappingSet& right) : left_(left), right_(right) {
    leftGroup_.reserve(left.size());
    for (const auto& m : left) leftGroup_.push_back(groupOf(m.domain(), leftDomains_));
    std::vector<std::size_t> rightGroup;
    for (const auto& m : right) rightGroup.push_back(groupOf(m.domain(), rightDomains_));

    rightMembers_.resize(rightDomains_.size());
    for (std::size_t j = 0; j < right.size(); ++j) rightMembers_[rightGroup[j]].push_back(j);

    shared_.resize(leftDomains_.size());
    indexes_.resize(leftDomains_.size());
    for (std::size_t l = 0; l < leftDomains_.size(); ++l) {
      for (std::size_t r = 0; r < rightDomains_.size(); ++r) {
        VarSet common = intersect(leftDomains_[l], rightDomains_[r]);
        shared_[l].emplace_back(common.begin(), common.end());
        Index index;
        for (std::size_t j : rightMembers_[r]) index[keyOf(right_.mappings()[j], shared_[l][r])].push_back(j);
        indexes_[l].push_back(std::move(index));
      }
    }
  }

  // Calls f(j) for every right-hand mapping compatible with left mapping i;
  // stops early when f returns false.
  template <typename F>
  void forEachCompatible(std::size_t i, F f) const {
    const auto& m = left_.mappings()[i];
    std::size_t l = leftGroup_[i];
    for (std::size_t r = 0; r < rightDomains_.size(); ++r) {
      const Index& index = indexes_[l][r];
      auto it = index.find(keyOf(m, shared_[l][r]));
      if (it == index.end()) continue;
      for (std::size_t j : it->second) {
        if (!f(j)) return;
      }
    }
  }

 private:
  static std::size_t groupOf(const VarSet& domain, std::vector<VarSet>& domains) {
    for (std::size_t g = 0; g < domains.size(); ++g) {
      if (domains[g] == domain) return g;
    }
    domains.push_back(domain);
    return domains.size() - 1;
  }

  const MappingSet& left_;
  const MappingSet& right_;
  std::vector<VarSet> leftDomains_;
  std::vector<VarSet> rightDomains_;
  std::vector<std::size_t> leftGroup_;
  std::vector<std::vector<std::size_t>> rightMembers_;
  std::vector<std::vector<std::vector<Variable>>> shared_;
  std::vector<std::vector<Index>> indexes_;
};

template <typename Body>
std::vector<SolutionMapping> collect(std::size_t n, bool parallel, Body body) {
  std::vector<std::vector<SolutionMapping>> perThread(1);
#ifdef _OPENMP
  if (parallel) perThread.resize(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t slot = 0;
#ifdef _OPENMP
    slot = static_cast<std::size_t>(omp_get_thread_num());
#endif
    body(i, perThread[slot]);
  }
  std::vector<SolutionMapping> out;
  for (auto& chunk : perThread) {
    out.insert(out.end(), std::make_move_iterator(chunk.begin()), std::make_move_iterator(chunk.end()));
  }
  return out;
}

}  // namespace

MappingSet parallelJoin(const MappingSet& a, const MappingSet& b) {
  if (a.empty() || b.empty()) return {};
  Partition partition(a, b);
  bool parallel = a.size() * b.size() >= kParallelThreshold;
  auto out = collect(a.size(), parallel, [&](std::size_t i, std::vector<SolutionMapping>& sink) {
    partition.forEachCompatible(i, [&](std::size_t j) {
      sink.push_back(*merge(a.mappings()[i], b.mappings()[j]));
      return true;
    });
  });
  return MappingSet::fromUnsorted(std::move(out));
}

MappingSet parallelDiff(const MappingSet& a, const MappingSet& b) {
  if (a.empty() || b.empty()) return a;
  Partition partition(a, b);
  bool parallel = a.size() * b.size() >= kParallelThreshold;
  auto out = collect(a.size(), parallel, [&](std::size_t i, std::vector<SolutionMapping>& sink) {
    bool matched = false;
    partition.forEachCompatible(i, [&](std::size_t) {
      matched = true;
      return false;
    });
    if (!matched) sink.push_back(a.mappings()[i]);
  });
  return MappingSet::fromUnsorted(std::move(out));
}

}  // namespace mcan::kernels
