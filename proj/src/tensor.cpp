#include "tcj/tensor.hpp"

namespace tcj {

// peak_arity counts merge intermediates; the fixed node tensors themselves
// are not "plan" cost
ContractionPlan plan_over_signatures(std::vector<std::vector<int>> sigs) {
  ContractionPlan plan;
  std::vector<bool> alive(sigs.size(), true);
  for (;;) {
    int bi = -1, bj = -1, barity = 1 << 30;
    for (std::size_t i = 0; i < sigs.size(); ++i) {
      if (!alive[i]) continue;
      for (std::size_t j = i + 1; j < sigs.size(); ++j) {
        if (!alive[j]) continue;
        int shared = 0;
        for (int a : sigs[i])
          if (std::find(sigs[j].begin(), sigs[j].end(), a) != sigs[j].end()) ++shared;
        if (shared == 0) continue;
        int arity = int(sigs[i].size() + sigs[j].size()) - 2 * shared;
        if (arity < barity) { barity = arity; bi = int(i); bj = int(j); }
      }
    }
    if (bi < 0) break;
    std::vector<int> merged;
    for (int a : sigs[bi])
      if (std::find(sigs[bj].begin(), sigs[bj].end(), a) == sigs[bj].end())
        merged.push_back(a);
    for (int a : sigs[bj])
      if (std::find(sigs[bi].begin(), sigs[bi].end(), a) == sigs[bi].end())
        merged.push_back(a);
    plan.steps.push_back({bi, bj});
    plan.peak_arity = std::max(plan.peak_arity, int(merged.size()));
    alive[bi] = alive[bj] = false;
    sigs.push_back(std::move(merged));
    alive.push_back(true);
  }
  return plan;
}

}  // namespace tcj
