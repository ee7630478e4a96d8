#include "quatopt/demo.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "quatopt/optimize.hpp"
#include "quatopt/random.hpp"
#include "quatopt/serialization.hpp"

namespace quatopt {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void append_quaternion_csv(std::string& row, const Quaternion& q) {
  row += ',' + num(q.a()) + ',' + num(q.b()) + ',' + num(q.c()) + ',' + num(q.d());
}

void validate(const DemoConfig& cfg) {
  if (cfg.n < 1) throw ParseError("demo needs n >= 1");
  if (cfg.snapshots < 10 * cfg.n) throw ParseError("demo needs at least 10*n snapshots");
  if (std::isnan(cfg.snr_db)) throw ParseError("snr_db must be a number or +inf");
}

// Additive white quaternion noise with total power sigma2 (sigma2/4 per
// real component).
Quaternion noise_sample(double sigma2, Rng& rng) {
  if (sigma2 <= 0.0) return {};
  std::normal_distribution<double> comp(0.0, std::sqrt(sigma2 / 4.0));
  const double a = comp(rng), b = comp(rng), c = comp(rng), d = comp(rng);
  return {a, b, c, d};
}

double noise_power_for(double signal_power, double snr_db) {
  if (std::isinf(snr_db)) return 0.0;
  return signal_power / std::pow(10.0, snr_db / 10.0);
}

nlohmann::json config_json(const DemoConfig& cfg, double noise_power) {
  nlohmann::json j{{"scenario", to_string(cfg.scenario)},
                   {"n", cfg.n},
                   {"snapshots", cfg.snapshots},
                   {"seed", cfg.seed},
                   {"noise_power", noise_power}};
  if (std::isinf(cfg.snr_db))
    j["snr_db"] = "inf";
  else
    j["snr_db"] = cfg.snr_db;
  return j;
}

struct SampleMoments {
  QMatrix R;
  QVector p;
  double d_power = 0.0;
};

SampleMoments sample_moments(const DemoDataset& data) {
  const std::size_t n = data.X.rows(), N = data.X.cols();
  SampleMoments m{QMatrix(n, n), QVector(n)};
  for (std::size_t t = 0; t < N; ++t) {
    const QVector x = column(data.X, t);
    m.R = add(m.R, outer_conj(x, x));
    m.p = add(m.p, scale_right(x, conjugate(data.d[t])));
    m.d_power += norm_sq(data.d[t]);
  }
  const double inv = 1.0 / static_cast<double>(N);
  m.R = scale(inv, m.R);
  m.p = scale(inv, m.p);
  m.d_power *= inv;
  return m;
}

}  // namespace

Scenario scenario_from_string(const std::string& name) {
  if (name == "filter") return Scenario::Filter;
  if (name == "projection") return Scenario::Projection;
  if (name == "beamform") return Scenario::Beamform;
  throw BadScenario("unknown demo scenario: " + name);
}

const char* to_string(Scenario s) {
  switch (s) {
    case Scenario::Filter: return "filter";
    case Scenario::Projection: return "projection";
    case Scenario::Beamform: return "beamform";
  }
  return "unknown";
}

DemoDataset make_demo_dataset(const DemoConfig& cfg) {
  validate(cfg);
  Rng rng(cfg.seed);
  const std::size_t n = cfg.n, N = cfg.snapshots;

  if (cfg.scenario == Scenario::Beamform) {
    // Unit-modulus steering entries from normalized random quaternions.
    QVector a(n);
    for (std::size_t s = 0; s < n; ++s) {
      Quaternion q = random_quaternion(rng);
      while (norm(q) < 1e-6) q = random_quaternion(rng);
      a[s] = q / norm(q);
    }
    const double noise_power = noise_power_for(4.0, cfg.snr_db);  // per-entry signal power
    DemoDataset data{QMatrix(n, N), QVector(N), a, noise_power, cfg.seed};
    for (std::size_t t = 0; t < N; ++t) {
      const Quaternion s = random_quaternion(rng);
      data.d[t] = s;
      for (std::size_t u = 0; u < n; ++u)
        data.X.at(u, t) = a[u] * s + noise_sample(noise_power, rng);
    }
    return data;
  }

  // Filter scenario (also the raw material for projection inputs): white
  // snapshots, d(t) = w^H x(t) + noise.
  const QVector w = random_qvector(n, rng);
  const double signal_power = 4.0 * norm_sq(w);  // E|w^H x|^2 for unit-variance components
  const double noise_power = noise_power_for(signal_power, cfg.snr_db);
  DemoDataset data{QMatrix(n, N), QVector(N), w, noise_power, cfg.seed};
  for (std::size_t t = 0; t < N; ++t) {
    QVector x(n);
    for (std::size_t u = 0; u < n; ++u) {
      x[u] = random_quaternion(rng);
      data.X.at(u, t) = x[u];
    }
    data.d[t] = inner_h(w, x) + noise_sample(noise_power, rng);
  }
  return data;
}

namespace {

DemoResult run_filter(const DemoConfig& cfg) {
  const DemoDataset data = make_demo_dataset(cfg);
  const SampleMoments m = sample_moments(data);
  const SolveResult wiener = wiener_solve(m.R, m.p);
  const QuadraticObjective obj(m.R, m.p, m.d_power);

  std::string csv = "iter,objective,grad_norm,error_to_wiener\n";
  const IterationCallback trace = [&](int iter, const QVector& q, double objective,
                                      double grad_norm) {
    csv += std::to_string(iter) + ',' + num(objective) + ',' + num(grad_norm) + ',' +
           num(norm(sub(q, wiener.q_opt))) + '\n';
  };
  const SolveResult descent =
      gradient_descent(obj, QVector(cfg.n), safe_step(obj), 1e-10, 20000, trace);

  DemoResult out;
  out.csv = std::move(csv);
  out.summary = config_json(cfg, data.noise_power);
  out.summary["w_error"] = norm(sub(wiener.q_opt, data.w_true));
  out.summary["sampling_bound"] = 5.0 / std::sqrt(static_cast<double>(cfg.snapshots));
  out.summary["mse_at_wiener"] = obj.evaluate(wiener.q_opt);
  out.summary["wiener"] = encode(wiener);
  out.summary["descent"] = encode(descent);
  out.summary["descent_gap"] = norm(sub(descent.q_opt, wiener.q_opt));
  return out;
}

DemoResult run_projection(const DemoConfig& cfg) {
  if (cfg.n < 2) throw ParseError("projection demo needs n >= 2");
  validate(cfg);
  Rng rng(cfg.seed);
  const std::size_t n = cfg.n, p = n / 2;
  const QMatrix A = random_qmatrix(p, n, rng);
  const QVector b = random_qvector(p, rng);
  const QVector y = random_qvector(n, rng);
  const SolveResult proj = affine_projection(A, b, y);

  // Multiplier reconstruction x = y - A^H lam / 2 with
  // lam = 2 (A A^H)^{-1} (A y - b).
  const QMatrix Ah = hermitian_transpose(A);
  const QVector lam = scale(2.0, solve(matmul(A, Ah), sub(matvec(A, y), b)));
  const QVector x_kkt = sub(y, scale(0.5, matvec(Ah, lam)));

  std::string csv = "index,y_a,y_b,y_c,y_d,x_a,x_b,x_c,x_d\n";
  for (std::size_t s = 0; s < n; ++s) {
    std::string row = std::to_string(s);
    append_quaternion_csv(row, y[s]);
    append_quaternion_csv(row, proj.q_opt[s]);
    csv += row + '\n';
  }

  DemoResult out;
  out.csv = std::move(csv);
  out.summary = config_json(cfg, 0.0);
  out.summary["constraint_rows"] = p;
  out.summary["distance"] = std::sqrt(proj.objective_value);
  out.summary["kkt_deviation"] = norm(sub(x_kkt, proj.q_opt));
  out.summary["result"] = encode(proj);
  return out;
}

DemoResult run_beamform(const DemoConfig& cfg) {
  const DemoDataset data = make_demo_dataset(cfg);
  const SampleMoments m = sample_moments(data);
  const SolveResult mvdr = mvdr_beamform(m.R, data.w_true);

  std::string csv = "index,a_a,a_b,a_c,a_d,w_a,w_b,w_c,w_d\n";
  for (std::size_t s = 0; s < cfg.n; ++s) {
    std::string row = std::to_string(s);
    append_quaternion_csv(row, data.w_true[s]);
    append_quaternion_csv(row, mvdr.q_opt[s]);
    csv += row + '\n';
  }

  DemoResult out;
  out.csv = std::move(csv);
  out.summary = config_json(cfg, data.noise_power);
  out.summary["output_power"] = mvdr.objective_value;
  out.summary["result"] = encode(mvdr);
  return out;
}

}  // namespace

DemoResult run_demo(const DemoConfig& cfg) {
  validate(cfg);
  switch (cfg.scenario) {
    case Scenario::Filter: return run_filter(cfg);
    case Scenario::Projection: return run_projection(cfg);
    case Scenario::Beamform: return run_beamform(cfg);
  }
  throw BadScenario("unknown demo scenario");
}

}  // namespace quatopt
