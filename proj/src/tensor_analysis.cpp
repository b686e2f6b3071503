#include "holo/tensor_analysis.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "holo/errors.hpp"
#include "holo/gf2.hpp"

namespace holo {

Bipartition::Bipartition(std::size_t leg_count, std::vector<std::size_t> a_legs)
    : leg_count_(leg_count), a_legs_(std::move(a_legs)) {
  std::vector<std::size_t> sorted = a_legs_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("bipartition repeats a leg");
  }
  if (!sorted.empty() && sorted.back() >= leg_count_) {
    throw std::invalid_argument("bipartition leg " + std::to_string(sorted.back()) + " out of range");
  }
  if (2 * a_legs_.size() > leg_count_) {
    throw std::invalid_argument("input side of a bipartition may hold at most half the legs");
  }
}

Bipartition Bipartition::window(std::size_t leg_count, std::size_t start, std::size_t length) {
  std::vector<std::size_t> legs;
  legs.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    legs.push_back((start + i) % leg_count);
  }
  return {leg_count, std::move(legs)};
}

std::vector<std::size_t> Bipartition::complement() const {
  std::vector<std::size_t> out;
  for (std::size_t leg = 0; leg < leg_count_; ++leg) {
    if (!contains(leg)) {
      out.push_back(leg);
    }
  }
  return out;
}

bool Bipartition::contains(std::size_t leg) const {
  return std::find(a_legs_.begin(), a_legs_.end(), leg) != a_legs_.end();
}

namespace {

void require_matching(const SeedCode& seed, const Bipartition& part) {
  if (part.leg_count() != seed.leg_count()) {
    throw std::invalid_argument("bipartition is for " + std::to_string(part.leg_count()) + " legs but the seed has " +
                                std::to_string(seed.leg_count()));
  }
}

BitMatrix restricted_generators(const SeedCode& seed, const std::vector<std::size_t>& legs) {
  BitMatrix m(seed.stabilizers.size(), 2 * legs.size());
  for (std::size_t g = 0; g < seed.stabilizers.size(); ++g) {
    const auto& s = seed.stabilizers[g];
    for (std::size_t i = 0; i < legs.size(); ++i) {
      m.set(g, 2 * i, s.x_bits().get(legs[i]));
      m.set(g, 2 * i + 1, s.z_bits().get(legs[i]));
    }
  }
  return m;
}

std::vector<std::size_t> all_legs(std::size_t n) {
  std::vector<std::size_t> legs(n);
  for (std::size_t i = 0; i < n; ++i) {
    legs[i] = i;
  }
  return legs;
}

}  // namespace

bool is_isometry_for(const SeedCode& seed, const Bipartition& part) {
  require_matching(seed, part);
  // Group elements supported inside A are the combinations that vanish on the
  // complement; their count is rank(G) - rank(G restricted to the complement).
  const std::size_t full = rank(restricted_generators(seed, all_legs(seed.leg_count())));
  const std::size_t outside = rank(restricted_generators(seed, part.complement()));
  return full == outside;
}

bool check_block_perfect(const SeedCode& seed) {
  const std::size_t legs = seed.leg_count();
  for (std::size_t length = 1; 2 * length <= legs; ++length) {
    for (std::size_t start = 0; start < legs; ++start) {
      if (!is_isometry_for(seed, Bipartition::window(legs, start, length))) {
        return false;
      }
    }
  }
  return true;
}

std::optional<Bipartition> find_non_isometric_subset(const SeedCode& seed) {
  const std::size_t legs = seed.leg_count();
  if (legs >= 31) {
    throw capacity_error("subset sweep limited to 30 legs");
  }
  for (std::size_t size = 1; 2 * size <= legs; ++size) {
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << legs); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != size) {
        continue;
      }
      std::vector<std::size_t> a;
      for (std::size_t i = 0; i < legs; ++i) {
        if ((mask >> i) & 1U) {
          a.push_back(i);
        }
      }
      Bipartition part(legs, std::move(a));
      if (!is_isometry_for(seed, part)) {
        return part;
      }
    }
  }
  return std::nullopt;
}

bool check_perfect(const SeedCode& seed) { return !find_non_isometric_subset(seed).has_value(); }

bool dense_isometry_oracle(const SeedCode& seed, const Bipartition& part) {
  require_matching(seed, part);
  const std::size_t legs = seed.leg_count();
  if (legs > kDenseOracleMaxLegs) {
    throw capacity_error("dense isometry oracle supports at most " + std::to_string(kDenseOracleMaxLegs) +
                         " legs, got " + std::to_string(legs));
  }
  using cplx = std::complex<double>;
  const std::size_t dim = std::size_t{1} << legs;
  static const cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

  auto apply = [&](const PauliString& p, const Eigen::VectorXcd& v) {
    std::uint64_t xmask = 0;
    std::uint64_t zmask = 0;
    for (std::size_t i = 0; i < legs; ++i) {
      xmask |= static_cast<std::uint64_t>(p.x_bits().get(i)) << i;
      zmask |= static_cast<std::uint64_t>(p.z_bits().get(i)) << i;
    }
    const int y_count = std::popcount(xmask & zmask);
    const cplx base = kIPow[(p.phase_exponent() + y_count) % 4];
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
    for (std::uint64_t b = 0; b < dim; ++b) {
      const double s = (std::popcount(zmask & b) % 2 == 0) ? 1.0 : -1.0;
      out[static_cast<Eigen::Index>(b ^ xmask)] += base * s * v[static_cast<Eigen::Index>(b)];
    }
    return out;
  };

  Eigen::VectorXcd psi;
  for (std::size_t start = 0; start < dim; ++start) {
    psi = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
    psi[static_cast<Eigen::Index>(start)] = 1.0;
    for (const auto& s : seed.stabilizers) {
      psi = 0.5 * (psi + apply(s, psi));
    }
    if (psi.norm() > 1e-6) {
      break;
    }
  }
  psi.normalize();

  const auto& a = part.a_legs();
  const auto abar = part.complement();
  const std::size_t cols = std::size_t{1} << a.size();
  const std::size_t rows = std::size_t{1} << abar.size();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::uint64_t b = 0; b < dim; ++b) {
    std::size_t r = 0;
    std::size_t c = 0;
    for (std::size_t i = 0; i < abar.size(); ++i) {
      r |= ((b >> abar[i]) & 1U) << i;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      c |= ((b >> a[i]) & 1U) << i;
    }
    m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = psi[static_cast<Eigen::Index>(b)];
  }
  const Eigen::MatrixXcd gram = m.adjoint() * m;
  const cplx scale = gram.trace() / static_cast<double>(cols);
  if (std::abs(scale) < 1e-12) {
    return false;
  }
  const Eigen::MatrixXcd deviation =
      gram / scale - Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(cols), static_cast<Eigen::Index>(cols));
  return deviation.cwiseAbs().maxCoeff() <= 1e-9;
}

}  // namespace holo
