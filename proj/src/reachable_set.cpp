#include "hevflex/reachable_set.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "hevflex/errors.hpp"
#include "hevflex/parallel.hpp"

namespace hevflex {

std::vector<std::uint8_t> terminal_set(const StateBox& terminal,
                                       const StateGrid& grid) {
  const StateBox& box = grid.box();
  if (terminal.dx_min < box.dx_min || terminal.dx_max > box.dx_max ||
      terminal.dv_min < box.dv_min || terminal.dv_max > box.dv_max ||
      terminal.soc_min < box.soc_min || terminal.soc_max > box.soc_max)
    throw ConfigError("terminal box must lie inside the state box");
  std::vector<std::uint8_t> mask(grid.cell_count(), 0);
  std::size_t count = 0;
  for (int i = 0; i < grid.n_dx(); ++i)
    for (int j = 0; j < grid.n_dv(); ++j)
      for (int l = 0; l < grid.n_soc(); ++l) {
        const DeviationState c = grid.cell_center(i, j, l);
        if (terminal.contains(c)) {
          mask[grid.flatten(i, j, l)] = 1;
          ++count;
        }
      }
  if (count == 0)
    throw ConfigError("terminal box contains no grid cell center");
  return mask;
}

namespace {

// Transition quantities that do not depend on dx or soc, tabulated per
// (dv cell, omega_e point, dtd point). Expressions mirror try_step exactly
// so masks agree bit-for-bit with the reference transition.
struct StepTables {
  int n_dv, n_we, n_td;
  std::vector<std::uint8_t> speed_ok;   // [j]
  std::vector<double> dv_next;          // [j][it]
  std::vector<double> dsoc;             // [j][iw][it]
  std::vector<std::uint8_t> power_ok;   // [j][iw][it]

  std::size_t jt(int j, int it) const { return static_cast<std::size_t>(j) * n_td + it; }
  std::size_t jwt(int j, int iw, int it) const {
    return (static_cast<std::size_t>(j) * n_we + iw) * n_td + it;
  }
};

StepTables build_tables(int k, const DemandTrace& trace, const StateGrid& grid,
                        const InputGrid& inputs, const ModelParams& model,
                        BatteryLimit limit) {
  const VehicleParams& veh = model.vehicle;
  const PowertrainParams& pt = model.powertrain;
  const BatteryParams& bat = model.battery;
  const double dt = trace.dt;
  const double v_plan = trace.v[static_cast<std::size_t>(k)];
  const double td_plan = trace.torque_d[static_cast<std::size_t>(k)];
  const double ratio_sum = pt.sun_radius + pt.ring_radius;

  StepTables tb;
  tb.n_dv = grid.n_dv();
  tb.n_we = inputs.omega_e.n;
  tb.n_td = inputs.dtd.n;
  tb.speed_ok.resize(tb.n_dv);
  tb.dv_next.resize(static_cast<std::size_t>(tb.n_dv) * tb.n_td);
  tb.dsoc.resize(static_cast<std::size_t>(tb.n_dv) * tb.n_we * tb.n_td);
  tb.power_ok.assign(tb.dsoc.size(), 0);

  std::vector<double> te(tb.n_we), tr(tb.n_we), tg(tb.n_we);
  for (int iw = 0; iw < tb.n_we; ++iw) {
    const double we = inputs.omega_e.value(iw);
    te[iw] = optimal_engine_torque(we, model.fuel_map.max_speed());
    tg[iw] = -(pt.sun_radius / ratio_sum) * te[iw];
    tr[iw] = (pt.ring_radius / ratio_sum) * te[iw];
  }

  for (int j = 0; j < tb.n_dv; ++j) {
    const double dv = grid.center(1, j);
    const double v_actual = v_plan + dv;
    tb.speed_ok[j] = v_actual >= 0.0 ? 1 : 0;
    const double v_eval = v_actual < 0.0 ? 0.0 : v_actual;
    const double omega_d = v_eval / veh.wheel_radius;
    const double omega_m = pt.coupler_ratio * omega_d;

    for (int it = 0; it < tb.n_td; ++it) {
      const double dtd = inputs.dtd.value(it);
      const double drag = -0.5 * veh.air_density * veh.drag_coeff *
                          veh.frontal_area * dv * (2.0 * v_plan + dv);
      const double dv_dot = (drag + dtd / veh.wheel_radius) / veh.mass;
      tb.dv_next[tb.jt(j, it)] = dv + dt * dv_dot;
    }

    for (int iw = 0; iw < tb.n_we; ++iw) {
      const double we = inputs.omega_e.value(iw);
      const double omega_g =
          (ratio_sum * we - pt.ring_radius * omega_m) / pt.sun_radius;
      const double power_g = tg[iw] * omega_g;
      const double eg = (power_g > 0.0) ? 1.0 / pt.gen_eff : pt.gen_eff;
      const double g_term = eg * power_g;
      for (int it = 0; it < tb.n_td; ++it) {
        const double dtd = inputs.dtd.value(it);
        const double torque_m = (td_plan + dtd) / pt.coupler_ratio - tr[iw];
        const double power_m = torque_m * omega_m;
        const double em = (power_m > 0.0) ? 1.0 / pt.motor_eff : pt.motor_eff;
        const double p_batt = em * power_m + g_term;
        const double disc = bat.voltage * bat.voltage - 4.0 * bat.resistance * p_batt;
        const std::size_t at = tb.jwt(j, iw, it);
        if (disc < 0.0) {
          if (limit == BatteryLimit::enforce) continue;  // power_ok stays 0
          tb.dsoc[at] = dt * (-bat.voltage / (2.0 * bat.resistance * bat.capacity));
          tb.power_ok[at] = 1;
          continue;
        }
        const double soc_dot = -(bat.voltage - std::sqrt(disc)) /
                               (2.0 * bat.resistance * bat.capacity);
        tb.dsoc[at] = dt * soc_dot;
        tb.power_ok[at] = 1;
      }
    }
  }
  return tb;
}

}  // namespace

std::vector<std::uint8_t> backward_step(const std::vector<std::uint8_t>& next_mask,
                                        int k, const DemandTrace& trace,
                                        const StateGrid& grid,
                                        const InputGrid& inputs,
                                        const ModelParams& model,
                                        BatteryLimit limit) {
  if (next_mask.size() != grid.cell_count())
    throw ConfigError("mask size does not match the state grid");
  inputs.validate();
  if (inputs.omega_e.hi > model.fuel_map.max_speed())
    throw ConfigError("engine speed grid exceeds the fuel map range");

  const StepTables tb = build_tables(k, trace, grid, inputs, model, limit);
  const double dt = trace.dt;
  const int n_dx = grid.n_dx(), n_dv = grid.n_dv(), n_soc = grid.n_soc();

  std::vector<std::uint8_t> mask(grid.cell_count(), 0);
  const std::size_t n_columns = static_cast<std::size_t>(n_dx) * n_dv;

  parallel_for_chunks(n_columns, 8, [&](std::size_t cb, std::size_t ce) {
    for (std::size_t col = cb; col < ce; ++col) {
      const int i = static_cast<int>(col) / n_dv;
      const int j = static_cast<int>(col) % n_dv;
      if (!tb.speed_ok[j]) continue;
      const double dx_next = grid.center(0, i) + dt * grid.center(1, j);
      const int i2 = grid.cell_index(0, dx_next);
      if (i2 < 0) continue;

      for (int l = 0; l < n_soc; ++l) {
        const double soc = grid.center(2, l);
        bool reach = false;
        for (int it = 0; it < tb.n_td && !reach; ++it) {
          const int j2 = grid.cell_index(1, tb.dv_next[tb.jt(j, it)]);
          if (j2 < 0) continue;
          const std::size_t base = grid.flatten(i2, j2, 0);
          for (int iw = 0; iw < tb.n_we; ++iw) {
            const std::size_t at = tb.jwt(j, iw, it);
            if (!tb.power_ok[at]) continue;
            const int l2 = grid.cell_index(2, soc + tb.dsoc[at]);
            if (l2 < 0) continue;
            if (next_mask[base + static_cast<std::size_t>(l2)]) {
              reach = true;
              break;
            }
          }
        }
        if (reach) mask[grid.flatten(i, j, l)] = 1;
      }
    }
  });
  return mask;
}

ReachableSet::ReachableSet(StateGrid grid, std::vector<std::vector<std::uint8_t>> masks)
    : grid_(std::move(grid)), masks_(std::move(masks)) {
  if (masks_.empty()) throw ConfigError("reachable set needs >= 1 step mask");
  for (const auto& m : masks_)
    if (m.size() != grid_.cell_count())
      throw ConfigError("reachable mask size does not match grid");
}

ReachableSet ReachableSet::compute(const DemandTrace& trace, const StateGrid& grid,
                                   const InputGrid& inputs, const StateBox& terminal,
                                   const ModelParams& model, BatteryLimit limit) {
  const int n = trace.steps();
  if (n < 0) throw ConfigError("demand trace is empty");
  std::vector<std::vector<std::uint8_t>> masks(static_cast<std::size_t>(n) + 1);
  masks[static_cast<std::size_t>(n)] = terminal_set(terminal, grid);
  for (int k = n - 1; k >= 0; --k)
    masks[static_cast<std::size_t>(k)] = backward_step(
        masks[static_cast<std::size_t>(k) + 1], k, trace, grid, inputs, model, limit);
  return ReachableSet(grid, std::move(masks));
}

bool ReachableSet::contains(int k, const DeviationState& x) const {
  const auto cell = grid_.locate(x);
  if (!cell) return false;
  return at(k, (*cell)[0], (*cell)[1], (*cell)[2]);
}

std::size_t ReachableSet::true_count(int k) const {
  std::size_t c = 0;
  for (std::uint8_t b : masks_.at(k)) c += b;
  return c;
}

void ReachableSet::dump_csv(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write mask dump: " + path);
  out << "k,i,j,l,reachable\n";
  for (int k = 0; k <= horizon(); ++k)
    for (int i = 0; i < grid_.n_dx(); ++i)
      for (int j = 0; j < grid_.n_dv(); ++j)
        for (int l = 0; l < grid_.n_soc(); ++l)
          out << k << ',' << i << ',' << j << ',' << l << ','
              << (at(k, i, j, l) ? 1 : 0) << '\n';
  if (!out) throw IoError("failed writing mask dump: " + path);
}

namespace {
constexpr char kMaskMagic[8] = {'H', 'V', 'R', 'S', '1', '\n', 0, 0};

void put_u64(std::ofstream& out, std::uint64_t v) {
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b, 8);
}
std::uint64_t get_u64(std::ifstream& in) {
  unsigned char b[8];
  in.read(reinterpret_cast<char*>(b), 8);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  return v;
}
void put_f64(std::ofstream& out, double d) { put_u64(out, std::bit_cast<std::uint64_t>(d)); }
double get_f64(std::ifstream& in) { return std::bit_cast<double>(get_u64(in)); }
}  // namespace

void ReachableSet::save_binary(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write reachable-set cache: " + path);
  out.write(kMaskMagic, 8);
  const StateBox& b = grid_.box();
  for (double d : {b.dx_min, b.dx_max, b.dv_min, b.dv_max, b.soc_min, b.soc_max})
    put_f64(out, d);
  put_u64(out, static_cast<std::uint64_t>(grid_.n_dx()));
  put_u64(out, static_cast<std::uint64_t>(grid_.n_dv()));
  put_u64(out, static_cast<std::uint64_t>(grid_.n_soc()));
  put_u64(out, static_cast<std::uint64_t>(horizon()));
  for (const auto& m : masks_) {
    std::vector<char> packed((m.size() + 7) / 8, 0);
    for (std::size_t c = 0; c < m.size(); ++c)
      if (m[c]) packed[c / 8] |= static_cast<char>(1 << (c % 8));
    out.write(packed.data(), static_cast<std::streamsize>(packed.size()));
  }
  if (!out) throw IoError("failed writing reachable-set cache: " + path);
}

ReachableSet ReachableSet::load_binary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open reachable-set cache: " + path);
  char magic[8];
  in.read(magic, 8);
  if (!in || std::memcmp(magic, kMaskMagic, 8) != 0)
    throw IoError("bad reachable-set cache header: " + path);
  StateBox b;
  b.dx_min = get_f64(in);
  b.dx_max = get_f64(in);
  b.dv_min = get_f64(in);
  b.dv_max = get_f64(in);
  b.soc_min = get_f64(in);
  b.soc_max = get_f64(in);
  const int n_dx = static_cast<int>(get_u64(in));
  const int n_dv = static_cast<int>(get_u64(in));
  const int n_soc = static_cast<int>(get_u64(in));
  const int horizon = static_cast<int>(get_u64(in));
  if (!in || horizon < 0) throw IoError("truncated reachable-set cache: " + path);
  StateGrid grid(b, n_dx, n_dv, n_soc);
  std::vector<std::vector<std::uint8_t>> masks(static_cast<std::size_t>(horizon) + 1);
  for (auto& m : masks) {
    m.assign(grid.cell_count(), 0);
    std::vector<char> packed((m.size() + 7) / 8, 0);
    in.read(packed.data(), static_cast<std::streamsize>(packed.size()));
    if (!in) throw IoError("truncated reachable-set cache: " + path);
    for (std::size_t c = 0; c < m.size(); ++c)
      if (packed[c / 8] & (1 << (c % 8))) m[c] = 1;
  }
  return ReachableSet(std::move(grid), std::move(masks));
}

namespace {
struct Fnv {
  std::uint64_t h = 1469598103934665603ull;
  void add(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  }
  void add(double d) { add(std::bit_cast<std::uint64_t>(d)); }
  void add(int v) { add(static_cast<std::uint64_t>(static_cast<std::int64_t>(v))); }
};
}  // namespace

std::uint64_t reachability_digest(const DemandTrace& trace, const StateGrid& grid,
                                  const InputGrid& inputs, const StateBox& terminal,
                                  const ModelParams& model) {
  Fnv f;
  f.add(trace.dt);
  f.add(static_cast<int>(trace.v.size()));
  for (double s : trace.v) f.add(s);
  const StateBox& b = grid.box();
  for (double d : {b.dx_min, b.dx_max, b.dv_min, b.dv_max, b.soc_min, b.soc_max}) f.add(d);
  f.add(grid.n_dx());
  f.add(grid.n_dv());
  f.add(grid.n_soc());
  for (double d : {inputs.omega_e.lo, inputs.omega_e.hi, inputs.dtd.lo, inputs.dtd.hi})
    f.add(d);
  f.add(inputs.omega_e.n);
  f.add(inputs.dtd.n);
  for (double d : {terminal.dx_min, terminal.dx_max, terminal.dv_min, terminal.dv_max,
                   terminal.soc_min, terminal.soc_max})
    f.add(d);
  const VehicleParams& v = model.vehicle;
  for (double d : {v.mass, v.wheel_radius, v.frontal_area, v.air_density, v.drag_coeff,
                   v.rolling_coeff, v.gravity})
    f.add(d);
  const PowertrainParams& p = model.powertrain;
  for (double d : {p.ring_radius, p.sun_radius, p.coupler_ratio, p.motor_eff, p.gen_eff})
    f.add(d);
  const BatteryParams& bt = model.battery;
  for (double d : {bt.voltage, bt.resistance, bt.capacity}) f.add(d);
  f.add(model.fuel_map.max_speed());
  return f.h;
}

}  // namespace hevflex
