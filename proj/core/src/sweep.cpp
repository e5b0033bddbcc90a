#include "hexaframe/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <climits>
#include <stdexcept>

#include "hexaframe/matching.hpp"
#include "hexaframe/parallel.hpp"
#include "hexaframe/tableau.hpp"

namespace hexaframe {
namespace {

constexpr std::uint32_t kAllVarieties = (1u << kNumVarieties) - 1;

struct Pick {
  int group = 0;
  int repetition = 1;
  int left_in_group = 0;  // free picks of the same group after this one
};

struct Plan {
  std::vector<Pick> picks;
  std::vector<int> free_per_group;
  int chunk_end = 0;  // picks [0, chunk_end) form the canonical chunk
  std::uint32_t fixed_mask = 0;
  std::vector<const std::array<std::uint8_t, kNumVarieties>*> stabilizer;
};

Plan make_plan(const SweepSpec& spec) {
  if (spec.groups.empty()) throw std::invalid_argument("sweep shape has no groups");
  int distinct = 0;
  for (const auto& g : spec.groups) {
    if (g.repetition < 1 || g.size < 1) throw std::invalid_argument("sweep groups need positive sizes");
    distinct += g.size;
  }
  if (distinct > kNumVarieties) throw std::invalid_argument("sweep shape needs more than 30 varieties");
  if (static_cast<int>(spec.fixed.size()) > spec.groups[0].size)
    throw std::invalid_argument("more fixed varieties than the first group holds");
  if (spec.stabilizer_reduction && spec.fixed.size() != 1)
    throw std::invalid_argument("stabilizer reduction needs exactly one fixed variety");

  Plan plan;
  for (const auto& v : spec.fixed) {
    const std::uint32_t bit = 1u << v.index();
    if (plan.fixed_mask & bit) throw std::invalid_argument("duplicate fixed variety");
    plan.fixed_mask |= bit;
  }
  for (std::size_t g = 0; g < spec.groups.size(); ++g) {
    const int free = spec.groups[g].size - (g == 0 ? static_cast<int>(spec.fixed.size()) : 0);
    plan.free_per_group.push_back(free);
    for (int j = 0; j < free; ++j)
      plan.picks.push_back({static_cast<int>(g), spec.groups[g].repetition, free - 1 - j});
  }
  if (!plan.picks.empty()) {
    const int g0 = plan.picks.front().group;
    while (plan.chunk_end < static_cast<int>(plan.picks.size()) && plan.picks[plan.chunk_end].group == g0)
      ++plan.chunk_end;
  }
  if (spec.stabilizer_reduction) {
    const auto& table = variety_action_table();
    for (const auto& pi : variety_stabilizer(spec.fixed.front()))
      if (!(pi == ColorPermutation{})) plan.stabilizer.push_back(&table[s6_index(pi)]);
  }
  return plan;
}

struct TaskResult {
  std::uint64_t cases = 0;
  std::uint64_t failure_count = 0;
  std::uint64_t solver_calls = 0;
  std::vector<CubeMultiset> failures;
  bool hit_failure = false;
};

class Task {
 public:
  Task(const SweepSpec& spec, const Plan& plan, int index, std::atomic<int>& first_failure)
      : spec_(spec), plan_(plan), index_(index), first_failure_(first_failure) {
    const auto& g = spec.groups.front();
    for (const auto& v : spec.fixed) set(v.index(), g.repetition);
    picked_.resize(plan.picks.size());
  }

  TaskResult run_single() {
    ++result_.cases;
    check_leaf();
    return std::move(result_);
  }

  TaskResult run_first(int v) {
    place(0, v);
    return std::move(result_);
  }

 private:
  void set(int v, int repetition) {
    counts_[v] = static_cast<std::uint8_t>(std::min(repetition, kNumCorners));
    reps_[v] = repetition;
    used_ |= 1u << v;
    union_ |= cube_corner_graph().triples_of[v];
  }

  bool aborted() const {
    return abort_ || (spec_.stop_at_first_failure && first_failure_.load(std::memory_order_relaxed) < index_);
  }

  void place(int i, int v) {
    const auto saved_union = union_;
    const auto saved_used = used_;
    set(v, plan_.picks[i].repetition);
    picked_[i] = v;
    visit(i, v);
    counts_[v] = 0;
    reps_[v] = 0;
    union_ = saved_union;
    used_ = saved_used;
  }

  void descend(int i, int min_v) {
    const int need = plan_.picks[i].left_in_group;
    for (int v = min_v; v < kNumVarieties && !aborted(); ++v) {
      if (used_ & (1u << v)) continue;
      const std::uint32_t above = kAllVarieties & ~used_ & ~((2u << v) - 1);
      if (std::popcount(above) < need) break;
      place(i, v);
    }
  }

  bool chunk_is_canonical() const {
    std::array<int, kNumVarieties> chunk{};
    std::array<int, kNumVarieties> image{};
    const int len = plan_.chunk_end;
    std::copy(picked_.begin(), picked_.begin() + len, chunk.begin());
    for (const auto* act : plan_.stabilizer) {
      for (int j = 0; j < len; ++j) image[j] = (*act)[chunk[j]];
      std::sort(image.begin(), image.begin() + len);
      if (std::lexicographical_compare(image.begin(), image.begin() + len, chunk.begin(), chunk.begin() + len))
        return false;
    }
    return true;
  }

  std::uint64_t completions(int i, int v) const {
    const int left = plan_.picks[i].left_in_group;
    const std::uint32_t above = kAllVarieties & ~used_ & ~((2u << v) - 1);
    std::uint64_t total = binomial(std::popcount(above), left);
    int pool = kNumVarieties - std::popcount(used_) - left;
    for (std::size_t g = plan_.picks[i].group + 1; g < plan_.free_per_group.size(); ++g) {
      total *= binomial(pool, plan_.free_per_group[g]);
      pool -= plan_.free_per_group[g];
    }
    return total;
  }

  void check_leaf() {
    ++result_.solver_calls;
    if (corner_kernel::first_model(counts_, union_) >= 0) return;
    ++result_.failure_count;
    result_.hit_failure = true;
    if (result_.failures.size() < spec_.failure_limit) result_.failures.emplace_back(reps_);
    if (spec_.stop_at_first_failure) {
      abort_ = true;
      int seen = first_failure_.load();
      while (index_ < seen && !first_failure_.compare_exchange_weak(seen, index_)) {
      }
    }
  }

  void visit(int i, int v) {
    const int next = i + 1;
    if (spec_.stabilizer_reduction && next == plan_.chunk_end && !chunk_is_canonical()) return;
    if (next == static_cast<int>(plan_.picks.size())) {
      ++result_.cases;
      check_leaf();
      return;
    }
    const bool may_prune =
        spec_.prune_solvable_prefixes && (!spec_.stabilizer_reduction || next >= plan_.chunk_end);
    if (may_prune) {
      ++result_.solver_calls;
      if (corner_kernel::first_model(counts_, union_) >= 0) {
        result_.cases += completions(i, v);
        return;
      }
    }
    descend(next, plan_.picks[next].group == plan_.picks[i].group ? v + 1 : 0);
  }

  const SweepSpec& spec_;
  const Plan& plan_;
  int index_;
  std::atomic<int>& first_failure_;
  corner_kernel::PackedCounts counts_{};
  CubeMultiset::Counts reps_{};
  std::uint64_t union_ = 0;
  std::uint32_t used_ = 0;
  bool abort_ = false;
  std::vector<int> picked_;
  TaskResult result_;
};

}  // namespace

int shape_total(const std::vector<ShapeGroup>& groups) {
  int total = 0;
  for (const auto& g : groups) total += g.repetition * g.size;
  return total;
}

std::uint64_t shape_case_count(const SweepSpec& spec) {
  const Plan plan = make_plan(spec);
  std::uint64_t total = 1;
  int pool = kNumVarieties - static_cast<int>(spec.fixed.size());
  for (int free : plan.free_per_group) {
    total *= binomial(pool, free);
    pool -= free;
  }
  return total;
}

SweepResult run_sweep(const SweepSpec& spec) {
  const Plan plan = make_plan(spec);
  std::atomic<int> first_failure{INT_MAX};

  std::vector<int> firsts;
  if (!plan.picks.empty()) {
    const int need = plan.picks.front().left_in_group;
    for (int v = 0; v < kNumVarieties; ++v) {
      if (plan.fixed_mask & (1u << v)) continue;
      const std::uint32_t above = kAllVarieties & ~plan.fixed_mask & ~((2u << v) - 1);
      if (std::popcount(above) < need) break;
      firsts.push_back(v);
    }
  }
  const int tasks = plan.picks.empty() ? 1 : static_cast<int>(firsts.size());
  std::vector<TaskResult> results(tasks);
  parallel_for(tasks, spec.workers, [&](int t) {
    if (spec.stop_at_first_failure && first_failure.load() < t) return;
    Task task(spec, plan, t, first_failure);
    results[t] = plan.picks.empty() ? task.run_single() : task.run_first(firsts[t]);
  });

  SweepResult out;
  const int last = first_failure.load() == INT_MAX ? tasks - 1 : first_failure.load();
  out.stopped_early = spec.stop_at_first_failure && first_failure.load() != INT_MAX;
  for (int t = 0; t <= last; ++t) {
    out.cases += results[t].cases;
    out.failure_count += results[t].failure_count;
    out.solver_calls += results[t].solver_calls;
    for (auto& f : results[t].failures)
      if (out.failures.size() < spec.failure_limit) out.failures.push_back(std::move(f));
  }
  std::sort(out.failures.begin(), out.failures.end());
  return out;
}

}  // namespace hexaframe
