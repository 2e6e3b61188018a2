#include "sphconf/sweep.hpp"

#include <cmath>
#include <future>

#include "sphconf/geometry.hpp"
#include "sphconf/potential.hpp"

namespace sphconf {

namespace {

double pyramid_height_energy(double t, const Potential& pot) {
  return energy(square_pyramid(t), pot);
}

double bipyramid_energy(const Potential& pot) {
  return energy(orthogonal_simplexes(Partition::of({3, 2})), pot);
}

}  // namespace

HeightOpt optimal_pyramid_height(double s) {
  const Potential pot = Potential::riesz(s);
  const double lo = -1.0 + 1e-6;
  const double hi = 1.0 - 1e-6;
  const int grid = 256;

  int best = 0;
  double best_e = std::numeric_limits<double>::infinity();
  std::vector<double> ts(grid);
  for (int k = 0; k < grid; ++k) {
    ts[k] = lo + k * (hi - lo) / (grid - 1);
    double e = pyramid_height_energy(ts[k], pot);
    if (e < best_e) {
      best_e = e;
      best = k;
    }
  }

  double a = ts[std::max(0, best - 1)];
  double b = ts[std::min(grid - 1, best + 1)];
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - gr * (b - a);
  double d = a + gr * (b - a);
  double fc = pyramid_height_energy(c, pot);
  double fd = pyramid_height_energy(d, pot);
  while (b - a > 1e-12) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = pyramid_height_energy(c, pot);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = pyramid_height_energy(d, pot);
    }
  }
  HeightOpt opt;
  opt.t_star = 0.5 * (a + b);
  opt.energy = pyramid_height_energy(opt.t_star, pot);
  return opt;
}

double riesz_gap(double s) {
  return bipyramid_energy(Potential::riesz(s)) - optimal_pyramid_height(s).energy;
}

double find_crossover(double lo, double hi, double tol) {
  if (!(lo < hi)) throw ArgumentError("crossover bracket must have lo < hi");
  if (!(tol > 0)) throw ArgumentError("crossover tolerance must be positive");
  double glo = riesz_gap(lo);
  double ghi = riesz_gap(hi);
  if (glo == 0) return lo;
  if (ghi == 0) return hi;
  if ((glo > 0) == (ghi > 0))
    throw BracketError("gap has the same sign at both bracket ends");
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    double gm = riesz_gap(mid);
    if (gm == 0) return mid;
    if ((gm > 0) == (glo > 0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

SweepResult riesz_sweep(double from, double to, double step, int jobs) {
  if (!(step > 0)) throw ArgumentError("sweep step must be positive");
  if (!(from <= to)) throw ArgumentError("sweep range must have from <= to");
  if (jobs < 1) throw ArgumentError("job count must be positive");

  int count = static_cast<int>(std::floor((to - from) / step + 1e-9)) + 1;
  std::vector<SweepRow> rows(count);
  auto shard = [&](int offset) {
    for (int i = offset; i < count; i += jobs) {
      double s = from + i * step;
      SweepRow& row = rows[i];
      row.s = s;
      row.tbp_energy = bipyramid_energy(Potential::riesz(s));
      HeightOpt opt = optimal_pyramid_height(s);
      row.t_star = opt.t_star;
      row.fp_energy = opt.energy;
      row.gap = row.tbp_energy - row.fp_energy;
    }
  };
  if (jobs == 1) {
    shard(0);
  } else {
    std::vector<std::future<void>> futures;
    futures.reserve(jobs);
    for (int w = 0; w < jobs; ++w)
      futures.push_back(std::async(std::launch::async, shard, w));
    for (auto& f : futures) f.get();
  }

  SweepResult result;
  result.rows = std::move(rows);
  for (size_t i = 0; i + 1 < result.rows.size(); ++i) {
    double g0 = result.rows[i].gap;
    double g1 = result.rows[i + 1].gap;
    if (g0 == 0) {
      result.crossover = result.rows[i].s;
      break;
    }
    if ((g0 > 0) != (g1 > 0)) {
      result.crossover = find_crossover(result.rows[i].s, result.rows[i + 1].s);
      break;
    }
  }
  if (!result.crossover && !result.rows.empty() && result.rows.back().gap == 0)
    result.crossover = result.rows.back().s;
  return result;
}

}  // namespace sphconf
