#ifndef HEVFLEX_GRIDS_HPP
#define HEVFLEX_GRIDS_HPP

#include <array>
#include <cstddef>
#include <optional>

#include "hevflex/flex_dynamics.hpp"

namespace hevflex {

// Uniform cell decomposition of the state box. Cells are addressed by
// (i, j, l) over (dx, dv, soc); the representative of a cell is its center.
// A point exactly on a shared cell face belongs to the lower-index cell.
class StateGrid {
 public:
  StateGrid(const StateBox& box, int n_dx, int n_dv, int n_soc);

  const StateBox& box() const { return box_; }
  int n_dx() const { return n_[0]; }
  int n_dv() const { return n_[1]; }
  int n_soc() const { return n_[2]; }
  std::size_t cell_count() const {
    return static_cast<std::size_t>(n_[0]) * n_[1] * n_[2];
  }

  double center(int dim, int i) const { return lo_[dim] + (i + 0.5) * width_[dim]; }
  double width(int dim) const { return width_[dim]; }

  DeviationState cell_center(int i, int j, int l) const {
    return {center(0, i), center(1, j), center(2, l)};
  }

  // Index of the cell containing x along one dimension, or -1 outside the
  // box. Face ties resolve to the lower-index cell.
  int cell_index(int dim, double x) const;

  std::optional<std::array<int, 3>> locate(const DeviationState& x) const;

  std::size_t flatten(int i, int j, int l) const {
    return (static_cast<std::size_t>(i) * n_[1] + j) * n_[2] + l;
  }
  std::array<int, 3> unflatten(std::size_t idx) const;

 private:
  StateBox box_;
  std::array<int, 3> n_;
  std::array<double, 3> lo_, hi_, width_;
};

// Evenly spaced input values including both endpoints.
struct InputAxis {
  double lo = 0.0, hi = 0.0;
  int n = 2;

  double value(int i) const {
    return (n == 1) ? lo : lo + (hi - lo) * static_cast<double>(i) / (n - 1);
  }
  void validate() const;
};

struct InputGrid {
  InputAxis omega_e{0.0, 450.0, 31};
  InputAxis dtd{-150.0, 150.0, 31};

  ControlInput input(int iw, int it) const {
    return {omega_e.value(iw), dtd.value(it)};
  }
  void validate() const;
};

}  // namespace hevflex

#endif
