#ifndef HEVFLEX_REACHABLE_SET_HPP
#define HEVFLEX_REACHABLE_SET_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hevflex/grids.hpp"

namespace hevflex {

// How the battery deliverable-power limit is treated during backward
// sweeps. `clamp` replaces infeasible-power transitions by boundary-rate
// ones instead of pruning them; it exists to probe how much the limit
// shrinks the sets.
enum class BatteryLimit { enforce, clamp };

// Mask over grid cells whose centers lie in the closed terminal box.
// Throws ConfigError if the terminal box leaves the grid box or selects
// no cell.
std::vector<std::uint8_t> terminal_set(const StateBox& terminal,
                                       const StateGrid& grid);

// One backward sweep: a cell is kept iff some input grid point maps its
// center into a kept cell of `next_mask` without violating feasibility.
// An all-false result is valid output.
std::vector<std::uint8_t> backward_step(const std::vector<std::uint8_t>& next_mask,
                                        int k, const DemandTrace& trace,
                                        const StateGrid& grid,
                                        const InputGrid& inputs,
                                        const ModelParams& model,
                                        BatteryLimit limit = BatteryLimit::enforce);

// Per-step reachability masks for k = 0..N.
class ReachableSet {
 public:
  static ReachableSet compute(const DemandTrace& trace, const StateGrid& grid,
                              const InputGrid& inputs, const StateBox& terminal,
                              const ModelParams& model,
                              BatteryLimit limit = BatteryLimit::enforce);

  const StateGrid& grid() const { return grid_; }
  int horizon() const { return static_cast<int>(masks_.size()) - 1; }
  const std::vector<std::uint8_t>& mask(int k) const { return masks_.at(k); }
  bool at(int k, int i, int j, int l) const {
    return masks_.at(k)[grid_.flatten(i, j, l)] != 0;
  }
  // Membership by cell containment; false outside the outer box.
  bool contains(int k, const DeviationState& x) const;
  std::size_t true_count(int k) const;

  // Inspection dump, one "k,i,j,l,reachable" row per cell and step.
  void dump_csv(const std::string& path) const;

  // Compact binary cache format; round-trips exactly.
  void save_binary(const std::string& path) const;
  static ReachableSet load_binary(const std::string& path);

  ReachableSet(StateGrid grid, std::vector<std::vector<std::uint8_t>> masks);

 private:
  StateGrid grid_;
  std::vector<std::vector<std::uint8_t>> masks_;
};

// Cache key over everything reachability depends on: cycle samples and
// spacing, dynamics parameters, boxes and grid resolutions.
std::uint64_t reachability_digest(const DemandTrace& trace, const StateGrid& grid,
                                  const InputGrid& inputs, const StateBox& terminal,
                                  const ModelParams& model);

}  // namespace hevflex

#endif
