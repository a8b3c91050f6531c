#include "renlab/masses.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "renlab/errors.hpp"
#include "renlab/util.hpp"

namespace renlab {

Rational MassVector::mean() const {
  Rational e = 0;
  for (int l = 1; l <= k; ++l) e += Rational(l) * p[l - 1];
  return e;
}

SamplePlan SamplePlan::grid(int resolution) {
  SamplePlan plan;
  plan.mode = SampleMode::Grid;
  plan.resolution = resolution;
  return plan;
}

SamplePlan SamplePlan::random(std::uint64_t count, std::uint64_t seed) {
  SamplePlan plan;
  plan.mode = SampleMode::Random;
  plan.count = count;
  plan.seed = seed;
  return plan;
}

std::string SamplePlan::describe() const {
  std::ostringstream os;
  if (mode == SampleMode::Grid)
    os << "grid r=" << resolution;
  else
    os << "random count=" << count << " seed=" << seed;
  return os.str();
}

MassVector make_masses(const std::vector<Rational>& values) {
  if (values.empty()) throw Error("EmptySupport", "mass list is empty");
  Rational sum = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0)
      throw Error("NegativeMass", "p_" + std::to_string(i + 1) + " = " +
                                      rational_to_string(values[i]) + " is negative");
    sum += values[i];
  }
  if (sum != 1)
    throw Error("NotNormalized",
                "masses sum to " + rational_to_string(sum) + ", expected 1");
  std::size_t k = values.size();
  while (k > 0 && values[k - 1] == 0) --k;
  // sum == 1 with all entries >= 0 guarantees k >= 1 here.
  MassVector m;
  m.k = static_cast<int>(k);
  m.p.assign(values.begin(), values.begin() + static_cast<long>(k));
  return m;
}

MassVector parse_masses(const std::string& csv) {
  std::vector<Rational> values;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t stop = csv.find(',', start);
    if (stop == std::string::npos) stop = csv.size();
    values.push_back(rational_from_string(csv.substr(start, stop - start)));
    start = stop + 1;
  }
  return make_masses(values);
}

MassVector from_simplex_point(const SimplexPoint& pt) {
  std::vector<Rational> values = pt.q;
  Rational sum = std::accumulate(pt.q.begin(), pt.q.end(), Rational(0));
  values.push_back(1 - sum);
  return make_masses(values);
}

SimplexPoint truncate_to_simplex(const MassVector& m, int k) {
  SimplexPoint pt;
  pt.k = k;
  pt.q.assign(k - 1, Rational(0));
  for (int i = 0; i < k - 1 && i < m.k; ++i) pt.q[i] = m.p[i];
  return pt;
}

SimplexPoint make_simplex_point(int k, const std::vector<Rational>& coords) {
  if (k < 1) throw Error("EmptySupport", "arity must be at least 1");
  if (coords.size() != static_cast<std::size_t>(k - 1))
    throw Error("ArityMismatch", "expected " + std::to_string(k - 1) +
                                     " coordinates, got " + std::to_string(coords.size()));
  Rational sum = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] < 0)
      throw Error("NegativeMass", "coordinate " + std::to_string(i + 1) + " = " +
                                      rational_to_string(coords[i]) + " is negative");
    sum += coords[i];
  }
  if (sum > 1)
    throw Error("NotNormalized",
                "coordinates sum to " + rational_to_string(sum) + " > 1");
  SimplexPoint pt;
  pt.k = k;
  pt.q = coords;
  return pt;
}

int period(const MassVector& m) {
  int g = 0;
  for (int l = 1; l <= m.k; ++l)
    if (m.p[l - 1] > 0) g = std::gcd(g, l);
  return g == 0 ? 0 : g;
}

std::uint64_t sample_count(int k, const SamplePlan& plan) {
  if (plan.mode == SampleMode::Random) return plan.count;
  if (plan.resolution < 1) throw Error("ResolutionZero", "grid resolution must be >= 1");
  return binomial(static_cast<unsigned>(plan.resolution + k - 1),
                  static_cast<unsigned>(k - 1));
}

namespace {

void enumerate_grid(int dim, int pos, long remaining, long r,
                    std::vector<long>& a, std::uint64_t& index, int k,
                    const std::function<void(const SimplexPoint&, std::uint64_t)>& fn) {
  if (pos == dim) {
    SimplexPoint pt;
    pt.k = k;
    pt.q.reserve(dim);
    for (int i = 0; i < dim; ++i) {
      Rational c(Integer(a[i]), Integer(r));
      c.canonicalize();
      pt.q.push_back(c);
    }
    fn(pt, index++);
    return;
  }
  for (long v = 0; v <= remaining; ++v) {
    a[pos] = v;
    enumerate_grid(dim, pos + 1, remaining - v, r, a, index, k, fn);
  }
}

}  // namespace

void for_each_sample(int k, const SamplePlan& plan,
                     const std::function<void(const SimplexPoint&, std::uint64_t)>& fn) {
  if (k < 1) throw Error("EmptySupport", "arity must be at least 1");
  if (plan.mode == SampleMode::Grid) {
    if (plan.resolution < 1)
      throw Error("ResolutionZero", "grid resolution must be >= 1");
    std::vector<long> a(static_cast<std::size_t>(k - 1), 0);
    std::uint64_t index = 0;
    enumerate_grid(k - 1, 0, plan.resolution, plan.resolution, a, index, k, fn);
  } else {
    for (std::uint64_t i = 0; i < plan.count; ++i)
      fn(random_simplex_point(k, plan.seed, i), i);
  }
}

std::vector<SimplexPoint> sample_simplex(int k, const SamplePlan& plan) {
  std::vector<SimplexPoint> out;
  out.reserve(sample_count(k, plan));
  for_each_sample(k, plan, [&](const SimplexPoint& pt, std::uint64_t) { out.push_back(pt); });
  return out;
}

std::string simplex_point_text(const SimplexPoint& pt) {
  std::string out = "(";
  for (std::size_t i = 0; i < pt.q.size(); ++i) {
    if (i) out += ", ";
    out += rational_to_string(pt.q[i]);
  }
  return out + ")";
}

std::string masses_text(const MassVector& m) {
  std::string out;
  for (int l = 0; l < m.k; ++l) {
    if (l) out += ",";
    out += rational_to_string(m.p[static_cast<std::size_t>(l)]);
  }
  return out;
}

SimplexPoint random_simplex_point(int k, std::uint64_t seed, std::uint64_t index) {
  // Sorted-spacings construction on a 2^32 lattice: draw k-1 levels, sort,
  // and take successive gaps from 0. The implied last mass is the gap up to
  // 2^32, so the full law is uniform over lattice compositions of 2^32.
  SplitMix64 rng = stream_rng(seed, index);
  std::vector<std::uint64_t> levels(static_cast<std::size_t>(k - 1));
  for (auto& v : levels) v = rng.next_u32();
  std::sort(levels.begin(), levels.end());
  const Integer scale = Integer(1) << 32;
  SimplexPoint pt;
  pt.k = k;
  pt.q.reserve(levels.size());
  std::uint64_t prev = 0;
  for (std::uint64_t v : levels) {
    Rational c(Integer(v - prev), scale);
    c.canonicalize();
    pt.q.push_back(c);
    prev = v;
  }
  return pt;
}

}  // namespace renlab
