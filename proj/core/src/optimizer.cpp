#include "hvsim/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "hvsim/parallel.hpp"
#include "hvsim/rng.hpp"
#include "hvsim/sampling.hpp"

namespace hvsim {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kMaxIterations = 5000;
constexpr double kDiameterTolerance = 1e-8;
constexpr double kValueSpreadTolerance = 1e-10;

using Objective = std::function<double(const AngleParams&)>;

struct LocalResult {
  AngleParams x{};
  double value{};  // maximized objective value
  int iterations{};
  bool converged{};
};

// Standard simplex search (reflection 1, expansion 2, contraction 1/2,
// shrink 1/2) minimizing -f over the eight angles.
LocalResult nelder_mead_maximize(const Objective& f, const AngleParams& x0) {
  constexpr int n = 8;
  std::array<AngleParams, n + 1> pts;
  std::array<double, n + 1> vals;  // g = -f
  pts[0] = x0;
  for (int i = 1; i <= n; ++i) {
    pts[i] = x0;
    pts[i][i - 1] += 0.25;
  }
  for (int i = 0; i <= n; ++i) vals[i] = -f(pts[i]);

  std::array<int, n + 1> order;
  LocalResult result;
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    result.iterations = iter + 1;
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int lhs, int rhs) {
      if (vals[lhs] != vals[rhs]) return vals[lhs] < vals[rhs];
      return lhs < rhs;
    });
    const int best = order[0];
    const int second_worst = order[n - 1];
    const int worst = order[n];

    double diameter = 0.0;
    for (int i = 0; i <= n; ++i) {
      double dist_sq = 0.0;
      for (int d = 0; d < n; ++d) {
        const double delta = pts[i][d] - pts[best][d];
        dist_sq += delta * delta;
      }
      diameter = std::max(diameter, std::sqrt(dist_sq));
    }
    if (diameter < kDiameterTolerance ||
        vals[worst] - vals[best] < kValueSpreadTolerance) {
      result.converged = true;
      break;
    }

    AngleParams centroid{};
    for (int i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (int d = 0; d < n; ++d) centroid[d] += pts[i][d];
    }
    for (int d = 0; d < n; ++d) centroid[d] /= n;

    const auto blend = [&](double coeff) {
      AngleParams p;
      for (int d = 0; d < n; ++d) {
        p[d] = centroid[d] + coeff * (centroid[d] - pts[worst][d]);
      }
      return p;
    };

    const AngleParams reflected = blend(1.0);
    const double fr = -f(reflected);
    if (fr < vals[best]) {
      const AngleParams expanded = blend(2.0);
      const double fe = -f(expanded);
      if (fe < fr) {
        pts[worst] = expanded;
        vals[worst] = fe;
      } else {
        pts[worst] = reflected;
        vals[worst] = fr;
      }
      continue;
    }
    if (fr < vals[second_worst]) {
      pts[worst] = reflected;
      vals[worst] = fr;
      continue;
    }
    // Contract toward the better of the reflected/worst points.
    const bool outside = fr < vals[worst];
    const AngleParams contracted = blend(outside ? 0.5 : -0.5);
    const double fc = -f(contracted);
    if (fc < std::min(fr, vals[worst])) {
      pts[worst] = contracted;
      vals[worst] = fc;
      continue;
    }
    // Shrink everything toward the best vertex.
    for (int i = 0; i <= n; ++i) {
      if (i == best) continue;
      for (int d = 0; d < n; ++d) {
        pts[i][d] = pts[best][d] + 0.5 * (pts[i][d] - pts[best][d]);
      }
      vals[i] = -f(pts[i]);
    }
  }

  int best = 0;
  for (int i = 1; i <= 8; ++i) {
    if (vals[i] < vals[best]) best = i;
  }
  result.x = pts[best];
  result.value = -vals[best];
  return result;
}

// Coarse stage: all four vectors in the x-z plane, polar angles on a
// 15-degree grid.  Returns the best 8-angle start (azimuths zero).
AngleParams coarse_coplanar_start(const Objective& f) {
  constexpr int kSteps = 24;
  constexpr double kStep = 2.0 * kPi / kSteps;
  AngleParams best{};
  double best_value = -1e300;
  AngleParams probe{};
  for (int ia = 0; ia < kSteps; ++ia) {
    probe[0] = ia * kStep;
    for (int iap = 0; iap < kSteps; ++iap) {
      probe[2] = iap * kStep;
      for (int ib = 0; ib < kSteps; ++ib) {
        probe[4] = ib * kStep;
        for (int ibp = 0; ibp < kSteps; ++ibp) {
          probe[6] = ibp * kStep;
          const double value = f(probe);
          if (value > best_value) {
            best_value = value;
            best = probe;
          }
        }
      }
    }
  }
  return best;
}

}  // namespace

MeasurementSettings settings_from_angles(const AngleParams& angles) {
  const auto dir = [](double theta, double phi) -> UnitVector3 {
    const double st = std::sin(theta);
    return {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
  };
  MeasurementSettings s;
  s.a = dir(angles[0], angles[1]);
  s.a_prime = dir(angles[2], angles[3]);
  s.b = dir(angles[4], angles[5]);
  s.b_prime = dir(angles[6], angles[7]);
  return s;
}

OptResult maximize_chsh(const QuantumState& state, int restarts,
                        std::uint64_t seed, int threads) {
  if (!state.is_two_qubit()) {
    throw std::invalid_argument("maximize_chsh: needs a two-qubit state");
  }
  if (restarts < 1) {
    throw std::invalid_argument("maximize_chsh: restarts < 1");
  }
  const auto t = pauli_correlation_matrix(state);
  const Objective objective = [&t](const AngleParams& angles) {
    return chsh_expectation_fast(t, settings_from_angles(angles));
  };

  const AngleParams coarse = coarse_coplanar_start(objective);
  std::vector<LocalResult> locals(restarts);
  parallel_for(restarts, threads, [&](int r) {
    AngleParams start;
    if (r == 0) {
      start = coarse;
    } else {
      RandomStream rng(seed, 1000 + static_cast<std::uint64_t>(r));
      for (int d = 0; d < 8; d += 2) {
        start[d] = rng.uniform(0.0, kPi);
        start[d + 1] = rng.uniform(0.0, 2.0 * kPi);
      }
    }
    locals[r] = nelder_mead_maximize(objective, start);
  });

  int winner = 0;
  int total_iterations = 0;
  for (int r = 0; r < restarts; ++r) {
    total_iterations += locals[r].iterations;
    if (locals[r].value > locals[winner].value) winner = r;
  }

  OptResult result;
  result.best_settings = settings_from_angles(locals[winner].x);
  // Re-evaluate through the full operator so the reported value is
  // exactly what expectation(state, chsh_operator(best_settings)) gives.
  result.best_value = expectation(state, chsh_operator(result.best_settings));
  result.iterations = total_iterations;
  result.converged = locals[winner].converged;
  return result;
}

std::vector<std::pair<double, OptResult>> saturation_scan(
    StateFamily family, const std::vector<double>& param_grid,
    std::uint64_t seed, int restarts, int threads) {
  std::vector<std::pair<double, OptResult>> results;
  results.reserve(param_grid.size());
  for (std::size_t i = 0; i < param_grid.size(); ++i) {
    const double param = param_grid[i];
    QuantumState state = [&] {
      if (family == StateFamily::Werner) return werner_density(param);
      RandomStream rng(seed, 2000 + static_cast<std::uint64_t>(i));
      const UnitVector3 n_a = random_unit_vector(rng);
      const UnitVector3 n_b = random_unit_vector(rng);
      return separable_density(n_a, n_b);
    }();
    results.emplace_back(param, maximize_chsh(state, restarts, seed, threads));
  }
  return results;
}

}  // namespace hvsim
