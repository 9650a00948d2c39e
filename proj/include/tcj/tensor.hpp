#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace tcj {

struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Labeled multi-index array of complex scalars; only nonzero entries are
// stored. Axis labels are edge indices of the diagram being contracted, so a
// label is shared by at most two tensors (or twice by one, a self-trace).
//
// Index tuples are packed into 64 bits at a fixed width `bits` per axis;
// all tensors in one contraction use the same width.
template <class R>
struct SparseTensor {
  using C = std::complex<R>;

  std::vector<int> axes;  // axis labels
  std::vector<int> dims;  // dimension per axis
  int bits = 8;
  std::unordered_map<std::uint64_t, C> entries;

  int arity() const { return static_cast<int>(axes.size()); }

  static SparseTensor make(std::vector<int> axes_, std::vector<int> dims_, int bits_) {
    SparseTensor t;
    t.axes = std::move(axes_);
    t.dims = std::move(dims_);
    t.bits = bits_;
    if (t.axes.size() * static_cast<std::size_t>(bits_) > 64)
      throw resource_error("tensor arity exceeds 64-bit index packing");
    return t;
  }

  std::uint64_t pack(const std::vector<int>& idx) const {
    std::uint64_t key = 0;
    for (std::size_t k = 0; k < idx.size(); ++k)
      key |= static_cast<std::uint64_t>(idx[k]) << (bits * k);
    return key;
  }
  std::vector<int> unpack(std::uint64_t key) const {
    std::vector<int> idx(axes.size());
    std::uint64_t mask = (bits == 64) ? ~0ull : ((1ull << bits) - 1);
    for (std::size_t k = 0; k < axes.size(); ++k)
      idx[k] = static_cast<int>((key >> (bits * k)) & mask);
    return idx;
  }

  void add(const std::vector<int>& idx, C v) {
    if (v == C{}) return;
    auto [it, fresh] = entries.try_emplace(pack(idx), v);
    if (!fresh) {
      it->second += v;
      if (it->second == C{}) entries.erase(it);
    }
  }

  // Sums over any axis label that appears twice (an edge with both ends on
  // the same node).
  void resolve_self_traces() {
    for (;;) {
      int a = -1, b = -1;
      for (std::size_t i = 0; i < axes.size() && a < 0; ++i)
        for (std::size_t j = i + 1; j < axes.size(); ++j)
          if (axes[i] == axes[j]) { a = static_cast<int>(i); b = static_cast<int>(j); break; }
      if (a < 0) return;
      SparseTensor out;
      out.bits = bits;
      for (std::size_t k = 0; k < axes.size(); ++k) {
        if (static_cast<int>(k) == a || static_cast<int>(k) == b) continue;
        out.axes.push_back(axes[k]);
        out.dims.push_back(dims[k]);
      }
      for (auto& [key, v] : entries) {
        auto idx = unpack(key);
        if (idx[a] != idx[b]) continue;
        std::vector<int> nidx;
        nidx.reserve(idx.size() - 2);
        for (std::size_t k = 0; k < idx.size(); ++k)
          if (static_cast<int>(k) != a && static_cast<int>(k) != b) nidx.push_back(idx[k]);
        out.add(nidx, v);
      }
      *this = std::move(out);
    }
  }
};

// Merges two tensors, summing over every shared axis label.
template <class R>
SparseTensor<R> contract_pair(const SparseTensor<R>& t1, const SparseTensor<R>& t2,
                              std::size_t max_entries) {
  if (t1.bits != t2.bits) throw std::logic_error("contract_pair: bit width mismatch");
  std::vector<int> shared;
  for (int a : t1.axes)
    if (std::find(t2.axes.begin(), t2.axes.end(), a) != t2.axes.end())
      shared.push_back(a);

  std::vector<int> pos1s, pos2s;  // positions of shared axes
  std::vector<int> keep1, keep2;  // positions of kept axes
  for (std::size_t k = 0; k < t1.axes.size(); ++k) {
    if (std::find(shared.begin(), shared.end(), t1.axes[k]) != shared.end())
      pos1s.push_back(static_cast<int>(k));
    else
      keep1.push_back(static_cast<int>(k));
  }
  for (int a : shared) {
    auto it = std::find(t2.axes.begin(), t2.axes.end(), a);
    pos2s.push_back(static_cast<int>(it - t2.axes.begin()));
  }
  // align pos1s to the order of `shared`
  {
    std::vector<int> aligned;
    for (int a : shared) {
      auto it = std::find(t1.axes.begin(), t1.axes.end(), a);
      aligned.push_back(static_cast<int>(it - t1.axes.begin()));
    }
    pos1s = std::move(aligned);
  }
  for (std::size_t k = 0; k < t2.axes.size(); ++k)
    if (std::find(shared.begin(), shared.end(), t2.axes[k]) == shared.end())
      keep2.push_back(static_cast<int>(k));

  SparseTensor<R> out;
  out.bits = t1.bits;
  for (int k : keep1) { out.axes.push_back(t1.axes[k]); out.dims.push_back(t1.dims[k]); }
  for (int k : keep2) { out.axes.push_back(t2.axes[k]); out.dims.push_back(t2.dims[k]); }
  if (out.axes.size() * static_cast<std::size_t>(out.bits) > 64)
    throw resource_error("contraction intermediate exceeds index packing width");

  // bucket t2 by its shared-index projection
  std::unordered_map<std::uint64_t, std::vector<std::pair<std::uint64_t, typename SparseTensor<R>::C>>>
      buckets;
  for (auto& [key, v] : t2.entries) {
    auto idx = t2.unpack(key);
    std::uint64_t proj = 0;
    for (std::size_t k = 0; k < pos2s.size(); ++k)
      proj |= static_cast<std::uint64_t>(idx[pos2s[k]]) << (t2.bits * k);
    std::uint64_t kept = 0;
    for (std::size_t k = 0; k < keep2.size(); ++k)
      kept |= static_cast<std::uint64_t>(idx[keep2[k]]) << (t2.bits * k);
    buckets[proj].push_back({kept, v});
  }

  for (auto& [key, v1] : t1.entries) {
    auto idx = t1.unpack(key);
    std::uint64_t proj = 0;
    for (std::size_t k = 0; k < pos1s.size(); ++k)
      proj |= static_cast<std::uint64_t>(idx[pos1s[k]]) << (t1.bits * k);
    auto bit = buckets.find(proj);
    if (bit == buckets.end()) continue;
    std::uint64_t kept1 = 0;
    for (std::size_t k = 0; k < keep1.size(); ++k)
      kept1 |= static_cast<std::uint64_t>(idx[keep1[k]]) << (t1.bits * k);
    for (auto& [kept2, v2] : bit->second) {
      std::uint64_t okey = kept1 | (kept2 << (t1.bits * keep1.size()));
      auto [it, fresh] = out.entries.try_emplace(okey, v1 * v2);
      if (!fresh) it->second += v1 * v2;
      if (out.entries.size() > max_entries)
        throw resource_error("contraction intermediate exceeds the tensor-entry cap");
    }
  }
  return out;
}

// Pairwise contraction schedule over a list of axis-label signatures.
// Greedy: among pairs sharing an axis, take the one whose result has least
// arity; ties break on the (i, j) step indices so plans are deterministic.
struct ContractionPlan {
  std::vector<std::pair<int, int>> steps;  // indices into the evolving list
  int peak_arity = 0;
};

ContractionPlan plan_over_signatures(std::vector<std::vector<int>> sigs);

}  // namespace tcj
