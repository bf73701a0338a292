#include "reconf/solver.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "reconf/search.hpp"

namespace reconf {

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::FeasibleSuboptimal: return "feasible";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;
constexpr Weight kInfinity = std::numeric_limits<Weight>::max();

// Depth-first branch-and-bound over the SearchSpace decisions in four phases:
// things to cabinets, cabinet fate and height, cabinets to rooms, then room
// fate and ownership. Children are generated in a fixed order, so the first
// optimum found is deterministic for a single worker.
class BranchAndBound {
 public:
  BranchAndBound(const ReconfigProblem& problem, const CostModel& model, const SolveOptions& options)
      : problem_(problem), model_(model), options_(options), space_(problem, model) {}

  SolveResult run() {
    start_ = Clock::now();
    const PartialAssignment root = space_.root();
    if (options_.workers <= 1) {
      dfs(root);
    } else {
      run_parallel(root);
    }
    SolveResult out;
    out.best = std::move(best_);
    out.optima = std::move(optima_);
    out.incumbents = std::move(incumbents_);
    out.nodes = nodes_.load();
    out.elapsedMs = elapsed_ms();
    if (stop_.load()) {
      out.status = out.best ? SolveStatus::FeasibleSuboptimal : SolveStatus::Unknown;
    } else {
      out.status = out.best ? SolveStatus::Optimal : SolveStatus::Infeasible;
    }
    if (out.status != SolveStatus::Optimal) out.optima.clear();
    return out;
  }

 private:
  enum class Kind { Pruned, Leaf, Branch };

  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
  }

  bool out_of_budget() {
    if (stop_.load(std::memory_order_relaxed)) return true;
    const std::uint64_t n = ++nodes_;
    const SearchBudget& b = options_.budget;
    if ((b.nodeLimit && n > *b.nodeLimit) ||
        (b.timeLimit && Clock::now() - start_ >= *b.timeLimit)) {
      stop_ = true;
      return true;
    }
    return false;
  }

  bool admits(Weight lb) const {
    const Weight best = best_cost_.load(std::memory_order_relaxed);
    return options_.allOptimal > 0 ? lb <= best : lb < best;
  }

  void dfs(const PartialAssignment& pa) {
    std::vector<PartialAssignment> kids;
    if (expand(pa, kids) != Kind::Branch) return;
    for (const PartialAssignment& kid : kids) {
      if (stop_.load(std::memory_order_relaxed)) return;
      dfs(kid);
    }
  }

  void run_parallel(const PartialAssignment& root) {
    // Split breadth-first until there is enough work to share, keeping the
    // sequential child order.
    std::vector<PartialAssignment> level{root};
    const std::size_t target = static_cast<std::size_t>(options_.workers) * 4;
    while (!level.empty() && level.size() < target && !stop_) {
      std::vector<PartialAssignment> next;
      bool branched = false;
      for (const PartialAssignment& pa : level) {
        std::vector<PartialAssignment> kids;
        if (expand(pa, kids) == Kind::Branch) {
          branched = true;
          for (auto& k : kids) next.push_back(std::move(k));
        }
      }
      level = std::move(next);
      if (!branched) break;
    }
    std::atomic<std::size_t> cursor{0};
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failureMu;
    for (int w = 0; w < options_.workers; ++w) {
      pool.emplace_back([&] {
        try {
          for (std::size_t i = cursor++; i < level.size() && !stop_; i = cursor++) dfs(level[i]);
        } catch (...) {
          std::lock_guard lock(failureMu);
          if (!failure) failure = std::current_exception();
          stop_ = true;
        }
      });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  template <typename Mutate>
  PartialAssignment child(const PartialAssignment& pa, Mutate&& mutate) const {
    PartialAssignment kid = pa;
    mutate(kid);
    return kid;
  }

  // Orders sibling alternatives by their bound; stable, so the listed order
  // breaks ties.
  void push_by_bound(std::vector<PartialAssignment>& alternatives, std::vector<PartialAssignment>& kids) const {
    std::vector<std::pair<Weight, std::size_t>> keyed;
    for (std::size_t i = 0; i < alternatives.size(); ++i) {
      keyed.emplace_back(space_.lower_bound(alternatives[i]), i);
    }
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [lb, i] : keyed) {
      if (admits(lb)) kids.push_back(std::move(alternatives[i]));
    }
  }

  std::vector<HeightChoice> height_options(const PartialAssignment& pa, int c) const {
    if (!space_.heights()) return {HeightChoice::None};
    if (pa.cabinets[c].hasLong) return {HeightChoice::High};
    if (!space_.can_be_high(c)) return {HeightChoice::Small};
    return {HeightChoice::Small, HeightChoice::High};
  }

  // Persons a room may be given to: its legacy owners first.
  std::vector<int> owner_options(int r) const {
    std::vector<int> order;
    if (space_.is_legacy_room(r)) {
      for (int p : space_.legacy_owners_of(r)) {
        if (p >= 0 && std::find(order.begin(), order.end(), p) == order.end()) order.push_back(p);
      }
    }
    for (int p = 0; p < space_.person_count(); ++p) {
      if (std::find(order.begin(), order.end(), p) == order.end()) order.push_back(p);
    }
    return order;
  }

  Kind expand(const PartialAssignment& pa, std::vector<PartialAssignment>& kids) {
    if (out_of_budget()) return Kind::Pruned;
    const Domains d = space_.propagate(pa);
    if (d.conflict) return Kind::Pruned;
    const Weight lb = space_.lower_bound(pa);
    if (!admits(lb)) return Kind::Pruned;
    const Instance& in = problem_.instance;

    // Phase 1: the unplaced thing with the fewest cabinets, long ones first.
    int pick = -1;
    for (int t = 0; t < space_.thing_count(); ++t) {
      if (pa.thingCabinet[t] >= 0) continue;
      if (pick < 0) {
        pick = t;
        continue;
      }
      const auto a = d.thingCabinets[t].size();
      const auto b = d.thingCabinets[pick].size();
      const bool la = space_.heights() && space_.thing_long(t);
      const bool lb2 = space_.heights() && space_.thing_long(pick);
      if (a < b || (a == b && la && !lb2)) pick = t;
    }
    if (pick >= 0) {
      const auto& own = space_.legacy_cabinets_of(pick);
      auto rank = [&](int c) {
        if (std::find(own.begin(), own.end(), c) != own.end()) return 0;
        if (space_.is_legacy_cabinet(c)) return pa.cabinets[c].count > 0 ? 1 : 3;
        return space_.cabinet_present(pa, c) ? 2 : 4;
      };
      std::vector<int> values = d.thingCabinets[pick];
      std::stable_sort(values.begin(), values.end(), [&](int x, int y) { return rank(x) < rank(y); });
      for (int c : values) kids.push_back(child(pa, [&](auto& k) { space_.place(k, pick, c); }));
      return Kind::Branch;
    }

    // Phase 2: fate of empty legacy cabinets and heights.
    const bool mayOpenCabinet = space_.present_cabinets(pa) < in.cabinet.upper;
    for (int c = 0; c < space_.cabinet_count(); ++c) {
      const CabinetState& cs = pa.cabinets[c];
      const bool undecided = space_.is_legacy_cabinet(c) && cs.fate == Fate::Undecided;
      const bool heightless = space_.cabinet_present(pa, c) && cs.height == HeightChoice::Unset;
      if (!undecided && !heightless) continue;
      std::vector<PartialAssignment> alternatives;
      if (heightless || mayOpenCabinet) {
        for (HeightChoice h : height_options(pa, c)) {
          alternatives.push_back(child(pa, [&](auto& k) { space_.decide_cabinet(k, c, Fate::Kept, h); }));
        }
      }
      if (undecided) {
        alternatives.push_back(child(pa, [&](auto& k) {
          space_.decide_cabinet(k, c, Fate::Deleted, HeightChoice::Unset);
        }));
      }
      push_by_bound(alternatives, kids);
      return Kind::Branch;
    }
    if (space_.present_cabinets(pa) < in.cabinet.lower) {
      const int c = space_.legacy_cabinets() + pa.openCabinets;
      if (c >= space_.cabinet_count()) return Kind::Pruned;
      std::vector<PartialAssignment> alternatives;
      for (HeightChoice h : height_options(pa, c)) {
        alternatives.push_back(child(pa, [&](auto& k) { space_.decide_cabinet(k, c, Fate::Kept, h); }));
      }
      push_by_bound(alternatives, kids);
      return Kind::Branch;
    }

    // Phase 3: rooms for present cabinets, most constrained cabinet first.
    int roomless = -1;
    for (int c = 0; c < space_.cabinet_count(); ++c) {
      if (!space_.cabinet_present(pa, c) || pa.cabinets[c].room >= 0) continue;
      if (roomless < 0 || d.cabinetRooms[c].size() < d.cabinetRooms[roomless].size()) roomless = c;
    }
    if (roomless >= 0) {
      const auto& own = space_.legacy_rooms_of(roomless);
      auto rank = [&](int r) {
        if (std::find(own.begin(), own.end(), r) != own.end()) return 0;
        if (space_.room_present(pa, r)) return 1;
        return space_.is_legacy_room(r) ? 2 : 3;
      };
      std::vector<int> values = d.cabinetRooms[roomless];
      std::stable_sort(values.begin(), values.end(), [&](int x, int y) { return rank(x) < rank(y); });
      for (int r : values) kids.push_back(child(pa, [&](auto& k) { space_.assign_room(k, roomless, r); }));
      return Kind::Branch;
    }

    // Phase 4: remaining legacy rooms, owners, and padding up to the lower bound.
    const bool mayOpenRoom = space_.present_rooms(pa) < in.room.upper;
    for (int r = 0; r < space_.room_count(); ++r) {
      const RoomState& rs = pa.rooms[r];
      const bool undecided = space_.is_legacy_room(r) && rs.fate == Fate::Undecided;
      const bool ownerless = space_.room_present(pa, r) && rs.owner < 0;
      if (!undecided && !ownerless) continue;
      std::vector<PartialAssignment> alternatives;
      if (ownerless || mayOpenRoom) {
        for (int p : owner_options(r)) {
          alternatives.push_back(child(pa, [&](auto& k) { space_.decide_room(k, r, Fate::Kept, p); }));
        }
      }
      if (undecided) {
        alternatives.push_back(child(pa, [&](auto& k) { space_.decide_room(k, r, Fate::Deleted, -1); }));
      }
      push_by_bound(alternatives, kids);
      return Kind::Branch;
    }
    if (space_.present_rooms(pa) < in.room.lower) {
      const int r = space_.legacy_rooms() + pa.openRooms;
      if (r >= space_.room_count()) return Kind::Pruned;
      std::vector<PartialAssignment> alternatives;
      for (int p : owner_options(r)) {
        alternatives.push_back(child(pa, [&](auto& k) { space_.decide_room(k, r, Fate::Kept, p); }));
      }
      push_by_bound(alternatives, kids);
      return Kind::Branch;
    }

    if (!space_.complete(pa)) return Kind::Pruned;
    record(pa, lb);
    return Kind::Leaf;
  }

  void record(const PartialAssignment& pa, Weight lb) {
    Solution s;
    s.config = canonicalize(space_.to_configuration(pa), problem_.instance);
    s.actions = make_actions(problem_, s.config);
    s.cost = reconfig_cost(problem_.legacy, s.config, s.actions, model_);
    if (s.cost.total != lb) {
      throw std::logic_error("search bound " + std::to_string(lb) + " differs from leaf cost " +
                             std::to_string(s.cost.total));
    }
    std::lock_guard lock(mu_);
    const Weight best = best_cost_.load();
    if (s.cost.total < best) {
      best_cost_ = s.cost.total;
      ProgressEvent ev{s.cost.total, nodes_.load(), elapsed_ms()};
      incumbents_.push_back(ev);
      optima_.clear();
      if (options_.allOptimal > 0) optima_.push_back(s);
      best_ = std::move(s);
      if (options_.onIncumbent) options_.onIncumbent(ev);
    } else if (options_.allOptimal > 0 && s.cost.total == best &&
               optima_.size() < static_cast<std::size_t>(options_.allOptimal)) {
      const bool seen = std::any_of(optima_.begin(), optima_.end(),
                                    [&](const Solution& o) { return o.config == s.config; });
      if (!seen) optima_.push_back(std::move(s));
    }
  }

  const ReconfigProblem& problem_;
  const CostModel& model_;
  const SolveOptions& options_;
  SearchSpace space_;
  Clock::time_point start_;

  std::atomic<Weight> best_cost_{kInfinity};
  std::atomic<bool> stop_{false};
  std::atomic<std::uint64_t> nodes_{0};
  std::mutex mu_;
  std::optional<Solution> best_;
  std::vector<Solution> optima_;
  std::vector<ProgressEvent> incumbents_;
};

}  // namespace

SolveResult solve_reconfiguration(const ReconfigProblem& problem, const CostModel& model,
                                  const SolveOptions& options) {
  return BranchAndBound(problem, model, options).run();
}

SolveResult solve_configuration(const Instance& instance, const CostModel& model, const SolveOptions& options) {
  ReconfigProblem problem;
  problem.instance = derive_bounds(instance);
  check_instance(problem.instance);
  return solve_reconfiguration(problem, model, options);
}

}  // namespace reconf
