#include "hevflex/grids.hpp"

#include <cmath>

#include "hevflex/errors.hpp"

namespace hevflex {

StateGrid::StateGrid(const StateBox& box, int n_dx, int n_dv, int n_soc)
    : box_(box), n_{n_dx, n_dv, n_soc} {
  box_.validate();
  for (int d = 0; d < 3; ++d)
    if (n_[d] < 2) throw ConfigError("state grid needs >= 2 cells per dimension");
  lo_ = {box.dx_min, box.dv_min, box.soc_min};
  hi_ = {box.dx_max, box.dv_max, box.soc_max};
  for (int d = 0; d < 3; ++d) width_[d] = (hi_[d] - lo_[d]) / n_[d];
}

int StateGrid::cell_index(int dim, double x) const {
  if (x < lo_[dim] || x > hi_[dim]) return -1;
  const double t = (x - lo_[dim]) / width_[dim];
  int i = static_cast<int>(std::floor(t));
  // Face ties go to the lower cell; this also maps x == hi into the last cell.
  if (i > 0 && static_cast<double>(i) == t) --i;
  if (i >= n_[dim]) i = n_[dim] - 1;
  return i;
}

std::optional<std::array<int, 3>> StateGrid::locate(const DeviationState& x) const {
  const int i = cell_index(0, x.dx);
  const int j = cell_index(1, x.dv);
  const int l = cell_index(2, x.soc);
  if (i < 0 || j < 0 || l < 0) return std::nullopt;
  return std::array<int, 3>{i, j, l};
}

std::array<int, 3> StateGrid::unflatten(std::size_t idx) const {
  const int l = static_cast<int>(idx % n_[2]);
  idx /= n_[2];
  const int j = static_cast<int>(idx % n_[1]);
  const int i = static_cast<int>(idx / n_[1]);
  return {i, j, l};
}

void InputAxis::validate() const {
  if (n < 2) throw ConfigError("input axis needs >= 2 grid points");
  if (!(hi >= lo)) throw ConfigError("input axis bounds must satisfy hi >= lo");
}

void InputGrid::validate() const {
  omega_e.validate();
  dtd.validate();
  if (omega_e.lo < 0.0) throw ConfigError("engine speed grid cannot go negative");
}

}  // namespace hevflex
