#include "rinv/generate.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "rinv/errors.hpp"

namespace rinv {

GenKind gen_kind_from_string(const std::string& name) {
  if (name == "identity") return GenKind::kIdentity;
  if (name == "random-unit") return GenKind::kRandomUnit;
  if (name == "coherent-pairs") return GenKind::kCoherentPairs;
  if (name == "spiked") return GenKind::kSpiked;
  throw PreconditionError("unknown generator kind: " + name);
}

std::string to_string(GenKind kind) {
  switch (kind) {
    case GenKind::kIdentity: return "identity";
    case GenKind::kRandomUnit: return "random-unit";
    case GenKind::kCoherentPairs: return "coherent-pairs";
    case GenKind::kSpiked: return "spiked";
  }
  return "unknown";
}

namespace {

// Bit-reproducible uniform and normal draws (the standard library
// distributions are not pinned across implementations).
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
}

double gaussian(std::mt19937_64& rng) {
  const double u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

std::vector<double> random_unit(std::size_t d, std::mt19937_64& rng) {
  std::vector<double> v(d);
  double len = 0.0;
  while (len == 0.0) {
    for (double& x : v) x = gaussian(rng);
    len = norm(v);
  }
  for (double& x : v) x /= len;
  return v;
}

// Draws unit vectors orthogonal to everything drawn before, falling back
// to plain random units once the basis is full.
class DirectionStream {
 public:
  DirectionStream(std::size_t d, std::mt19937_64& rng) : d_(d), rng_(rng) {}

  std::vector<double> next() {
    std::vector<double> v = random_unit(d_, rng_);
    if (basis_.size() < d_) {
      for (const auto& q : basis_) {
        const double c = dot(v, q);
        for (std::size_t i = 0; i < d_; ++i) v[i] -= c * q[i];
      }
      double len = norm(v);
      while (len < 1e-6) {  // degenerate draw, retry
        v = random_unit(d_, rng_);
        for (const auto& q : basis_) {
          const double c = dot(v, q);
          for (std::size_t i = 0; i < d_; ++i) v[i] -= c * q[i];
        }
        len = norm(v);
      }
      for (double& x : v) x /= len;
      basis_.push_back(v);
    }
    return v;
  }

 private:
  std::size_t d_;
  std::mt19937_64& rng_;
  std::vector<std::vector<double>> basis_;
};

void set_column(Matrix& m, std::size_t j, std::span<const double> v) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = v[i];
}

}  // namespace

Matrix generate(GenKind kind, std::size_t d, std::size_t n, std::uint64_t seed,
                double coherence) {
  if (d == 0 || n == 0) throw PreconditionError("dimensions must be positive");
  if (!(coherence >= 0.0 && coherence < 1.0))
    throw PreconditionError("coherence must lie in [0, 1)");
  std::mt19937_64 rng(seed);
  Matrix m(d, n);

  switch (kind) {
    case GenKind::kIdentity: {
      if (d != n) throw PreconditionError("identity generator requires d = n");
      for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0;
      break;
    }
    case GenKind::kRandomUnit: {
      for (std::size_t j = 0; j < n; ++j) set_column(m, j, random_unit(d, rng));
      break;
    }
    case GenKind::kCoherentPairs: {
      if (d < 2) throw PreconditionError("coherent pairs require d >= 2");
      DirectionStream stream(d, rng);
      const double sine = std::sqrt(1.0 - coherence * coherence);
      for (std::size_t j = 0; j < n; j += 2) {
        const std::vector<double> a = stream.next();
        set_column(m, j, a);
        if (j + 1 >= n) break;
        std::vector<double> b = stream.next();
        // force exact orthogonality to the partner even past the basis cap
        const double c = dot(b, a);
        for (std::size_t i = 0; i < d; ++i) b[i] -= c * a[i];
        const double len = norm(b);
        for (std::size_t i = 0; i < d; ++i)
          b[i] = coherence * a[i] + sine * b[i] / len;
        set_column(m, j + 1, b);
      }
      break;
    }
    case GenKind::kSpiked: {
      const std::vector<double> spike = random_unit(d, rng);
      const double sine = std::sqrt(1.0 - coherence * coherence);
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<double> g = random_unit(d, rng);
        const double c = dot(g, spike);
        for (std::size_t i = 0; i < d; ++i) g[i] -= c * spike[i];
        double len = norm(g);
        while (len < 1e-6) {
          g = random_unit(d, rng);
          const double c2 = dot(g, spike);
          for (std::size_t i = 0; i < d; ++i) g[i] -= c2 * spike[i];
          len = norm(g);
        }
        for (std::size_t i = 0; i < d; ++i) g[i] = coherence * spike[i] + sine * g[i] / len;
        set_column(m, j, g);
      }
      break;
    }
  }
  return m;
}

}  // namespace rinv
