#include "tqasm/spin_sector.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "tqasm/errors.hpp"

namespace tqasm {

namespace {

void require_chain(int n) {
  if (n < 1 || n > kMaxChainLength) {
    throw std::out_of_range("chain length must be in 1.." + std::to_string(kMaxChainLength) + ", got " +
                            std::to_string(n));
  }
}

std::uint32_t rotate_down(std::uint32_t m, int n) {
  // position p -> p - 1, position 1 -> N
  return (m >> 1U) | ((m & 1U) << static_cast<unsigned>(n - 1));
}

std::uint32_t reflect_mask(std::uint32_t m, int n) {
  std::uint32_t r = 0;
  for (int i = 0; i < n; ++i) {
    if ((m >> static_cast<unsigned>(i)) & 1U) r |= 1U << static_cast<unsigned>(n - 1 - i);
  }
  return r;
}

void for_each_subset(int m, int r, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> chosen;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(chosen.size()) == r) {
      fn(chosen);
      return;
    }
    for (int i = start; i <= m - (r - static_cast<int>(chosen.size())) + 1; ++i) {
      chosen.push_back(i);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(1);
}

}  // namespace

std::uint32_t SpinBasisState::mask() const {
  std::uint32_t m = 0;
  for (int p : positions) m |= 1U << static_cast<unsigned>(p - 1);
  return m;
}

SpinBasisState SpinBasisState::from_mask(int n, std::uint32_t mask) {
  SpinBasisState s;
  s.n = n;
  for (int p = 1; p <= n; ++p) {
    if ((mask >> static_cast<unsigned>(p - 1)) & 1U) s.positions.push_back(p);
  }
  return s;
}

std::string SpinBasisState::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (i != 0) out += ",";
    out += std::to_string(positions[i]);
  }
  return out;
}

std::vector<SpinBasisState> enumerate_sector(int n, int k) {
  require_chain(n);
  if (k < 0 || k > n) throw std::out_of_range("sector K must satisfy 0 <= K <= N");
  std::vector<SpinBasisState> out;
  SpinBasisState cur;
  cur.n = n;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.positions.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int p = start; p <= n - (k - static_cast<int>(cur.positions.size())) + 1; ++p) {
      cur.positions.push_back(p);
      rec(p + 1);
      cur.positions.pop_back();
    }
  };
  rec(1);
  return out;
}

std::vector<std::pair<SpinBasisState, Rational>> hamiltonian_action(const SpinBasisState& state,
                                                                    const Rational& delta) {
  const int n = state.n;
  const std::uint32_t m = state.mask();
  auto down = [&](int site) { return ((m >> static_cast<unsigned>(site)) & 1U) != 0; };

  int zz = 0;
  std::vector<std::pair<SpinBasisState, Rational>> out;
  std::vector<std::pair<SpinBasisState, Rational>> exchange;
  for (int j = 0; j < n; ++j) {
    const int next = (j + 1) % n;
    if (down(j) == down(next)) {
      ++zz;
    } else {
      --zz;
      const std::uint32_t swapped = m ^ (1U << static_cast<unsigned>(j)) ^ (1U << static_cast<unsigned>(next));
      exchange.emplace_back(SpinBasisState::from_mask(n, swapped), Rational(-1));
    }
  }
  const Rational diag = -(delta / Rational(2)) * Rational(zz);
  if (!diag.is_zero()) out.emplace_back(state, diag);
  for (auto& e : exchange) out.push_back(std::move(e));
  return out;
}

SpinBasisState shift(const SpinBasisState& s) { return SpinBasisState::from_mask(s.n, rotate_down(s.mask(), s.n)); }

SpinBasisState reflect(const SpinBasisState& s) { return SpinBasisState::from_mask(s.n, reflect_mask(s.mask(), s.n)); }

SpinBasisState spin_flip(const SpinBasisState& s) {
  const std::uint32_t full = s.n == 32 ? ~0U : ((1U << static_cast<unsigned>(s.n)) - 1U);
  return SpinBasisState::from_mask(s.n, ~s.mask() & full);
}

SymmetrySector::SymmetrySector(int n, int k) : n_(n), k_(k) {
  for (const auto& s : enumerate_sector(n, k)) {
    const std::uint32_t m = s.mask();
    if (index_.count(m) != 0) continue;
    std::vector<std::uint32_t> images;
    std::uint32_t rot = m;
    for (int i = 0; i < n; ++i) {
      images.push_back(rot);
      images.push_back(reflect_mask(rot, n));
      rot = rotate_down(rot, n);
    }
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());

    SymmetryOrbit orbit;
    for (std::uint32_t im : images) orbit.members.push_back(SpinBasisState::from_mask(n, im));
    std::sort(orbit.members.begin(), orbit.members.end());
    orbit.representative = orbit.members.front();
    const std::size_t id = orbits_.size();
    for (std::uint32_t im : images) index_.emplace(im, id);
    orbits_.push_back(std::move(orbit));
  }
}

std::size_t SymmetrySector::orbit_of(std::uint32_t mask) const {
  auto it = index_.find(mask);
  if (it == index_.end()) throw std::out_of_range("state is not in this sector");
  return it->second;
}

std::vector<SymmetryOrbit> orbit_decompose(int n, int k) { return SymmetrySector(n, k).orbits(); }

SectorVector::SectorVector(std::shared_ptr<const SymmetrySector> sector, std::vector<Rational> values)
    : sector_(std::move(sector)), values_(std::move(values)) {
  if (values_.size() != sector_->orbits().size()) throw std::invalid_argument("SectorVector: one value per orbit");
}

Rational SectorVector::component(const std::vector<int>& positions) const {
  if (static_cast<int>(positions.size()) != k()) {
    throw std::invalid_argument("component: expected " + std::to_string(k()) + " positions, got " +
                                std::to_string(positions.size()));
  }
  std::uint32_t m = 0;
  for (int p : positions) {
    const int q = ((p - 1) % n() + n()) % n();
    const std::uint32_t bit = 1U << static_cast<unsigned>(q);
    if (m & bit) throw std::invalid_argument("component: repeated position " + std::to_string(p));
    m |= bit;
  }
  return values_[sector_->orbit_of(m)];
}

std::vector<Rational> SectorVector::expand() const {
  std::vector<Rational> out;
  for (const auto& s : enumerate_sector(n(), k())) out.push_back(component(s));
  return out;
}

Rational SectorVector::max_component() const { return *std::max_element(values_.begin(), values_.end()); }
Rational SectorVector::min_component() const { return *std::min_element(values_.begin(), values_.end()); }

SparseRationalMatrix sector_hamiltonian(int n, int k, const Rational& delta, const Rational& energy) {
  const auto basis = enumerate_sector(n, k);
  std::unordered_map<std::uint32_t, std::size_t> idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i].mask(), i);
  SparseRationalMatrix h(basis.size(), basis.size());
  // Column j holds H|basis_j>.
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (const auto& [img, c] : hamiltonian_action(basis[j], delta)) h.add(idx.at(img.mask()), j, c);
    if (!energy.is_zero()) h.add(j, j, -energy);
  }
  return h;
}

SparseRationalMatrix orbit_reduced_hamiltonian(const SymmetrySector& sector, const Rational& delta,
                                               const Rational& energy) {
  const auto& orbits = sector.orbits();
  SparseRationalMatrix h(orbits.size(), orbits.size());
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    for (const auto& [img, c] : hamiltonian_action(orbits[i].representative, delta)) {
      h.add(i, sector.orbit_of(img), c);
    }
    if (!energy.is_zero()) h.add(i, i, -energy);
  }
  return h;
}

namespace {

void require_odd_chain(int n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("N must be odd and >= 3, got " + std::to_string(n));
  require_chain(n);
}

const Rational kDelta(-1, 2);

Rational target_energy(int n) { return Rational(-3 * n, 4); }

// Divides by the smallest nonzero |component|, fixing the sign so that
// component is +1.
std::vector<Rational> normalize_min(const std::vector<BigInt>& v) {
  const BigInt* smallest = nullptr;
  for (const auto& x : v) {
    if (x == 0) continue;
    if (smallest == nullptr || abs(x) < abs(*smallest)) smallest = &x;
  }
  if (smallest == nullptr) throw InvariantViolation("null vector is zero");
  const Rational scale(*smallest);
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(Rational(x) / scale);
  return out;
}

}  // namespace

GroundCandidate ground_candidate(int n) {
  require_odd_chain(n);
  const int k = (n - 1) / 2;
  auto sector = std::make_shared<const SymmetrySector>(n, k);
  const auto h = orbit_reduced_hamiltonian(*sector, kDelta, target_energy(n));
  auto ns = exact_nullspace(h);
  if (ns.dimension() != 1) {
    throw InvariantViolation("orbit-reduced nullspace for N=" + std::to_string(n) + " has dimension " +
                             std::to_string(ns.dimension()) + ", expected 1");
  }
  auto values = normalize_min(ns.basis.front());
  const bool integral = std::all_of(values.begin(), values.end(), [](const Rational& x) { return x.is_integer(); });
  const bool positive = std::all_of(values.begin(), values.end(), [](const Rational& x) { return x.sign() > 0; });
  return GroundCandidate{SectorVector(std::move(sector), std::move(values)), ns.dimension(), integral, positive,
                         ns.stats};
}

std::vector<Rational> ground_candidate_full(int n) {
  require_odd_chain(n);
  const auto h = sector_hamiltonian(n, (n - 1) / 2, kDelta, target_energy(n));
  auto ns = exact_nullspace(h);
  if (ns.dimension() != 1) {
    throw InvariantViolation("full-sector nullspace for N=" + std::to_string(n) + " has dimension " +
                             std::to_string(ns.dimension()) + ", expected 1");
  }
  return normalize_min(ns.basis.front());
}

namespace {

Rational shifted_sum(const SectorVector& v, int r, int step) {
  const int m = v.k();
  if (v.n() != 2 * m + 1) throw std::invalid_argument("increment sums need N = 2K + 1");
  if (r < 0 || r > m) throw std::out_of_range("r must be in 0..M");
  Rational total;
  for_each_subset(m, r, [&](const std::vector<int>& chosen) {
    std::vector<int> pos(static_cast<std::size_t>(m));
    for (int j = 1; j <= m; ++j) pos[static_cast<std::size_t>(j - 1)] = 2 * j - 1;
    for (int c : chosen) pos[static_cast<std::size_t>(c - 1)] += step;
    total += v.component(pos);
  });
  return total;
}

}  // namespace

Rational increment_sum(const SectorVector& v, int r) { return shifted_sum(v, r, +1); }

Rational decrement_sum(const SectorVector& v, int r) { return shifted_sum(v, r, -1); }

std::vector<VerificationReport> check_operator_symmetries(const SectorVector& v) {
  const int n = v.n();
  const int k = v.k();
  const std::string params = "N=" + std::to_string(n);
  const auto basis = enumerate_sector(n, k);
  const auto x = v.expand();
  std::unordered_map<std::uint32_t, std::size_t> idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i].mask(), i);

  std::vector<VerificationReport> out;

  out.push_back(timed_check("shift_reflection_invariance", params, CheckMode::Exact, [&] {
    VerificationReport r;
    r.passed = true;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (x[idx.at(shift(basis[i]).mask())] != x[i]) r.fail("S", basis[i].to_string());
      if (x[idx.at(reflect(basis[i]).mask())] != x[i]) r.fail("R", basis[i].to_string());
    }
    r.add("states", std::to_string(basis.size()));
    return r;
  }));

  out.push_back(timed_check("sigma_eigenvalue", params, CheckMode::Exact, [&] {
    VerificationReport r;
    r.passed = true;
    for (const auto& s : basis) {
      const int minus = static_cast<int>(s.positions.size());
      if ((n - minus) - minus != n - 2 * k) r.fail("state", s.to_string());
    }
    r.add("eigenvalue", std::to_string(n - 2 * k));
    return r;
  }));

  const bool odd_target = n % 2 == 1 && k == (n - 1) / 2;
  const Rational energy = target_energy(n);

  out.push_back(timed_check("eigen_equation_full_sector", params, CheckMode::Exact, [&] {
    VerificationReport r;
    const auto hx = sector_hamiltonian(n, k, kDelta).multiply(x);
    r.passed = true;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (hx[i] != energy * x[i]) {
        r.fail("residual_at", basis[i].to_string());
        break;
      }
    }
    r.add("energy", energy.to_string());
    return r;
  }));

  out.push_back(timed_check("spin_flip_companion", params, CheckMode::Exact, [&] {
    VerificationReport r;
    const auto flipped_basis = enumerate_sector(n, n - k);
    std::unordered_map<std::uint32_t, std::size_t> fidx;
    for (std::size_t i = 0; i < flipped_basis.size(); ++i) fidx.emplace(flipped_basis[i].mask(), i);
    std::vector<Rational> y(flipped_basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) y[fidx.at(spin_flip(basis[i]).mask())] = x[i];
    const auto hy = sector_hamiltonian(n, n - k, kDelta).multiply(y);
    r.passed = true;
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (hy[i] != energy * y[i]) {
        r.fail("residual_at", flipped_basis[i].to_string());
        break;
      }
    }
    r.add("sector", "K=" + std::to_string(n - k));
    return r;
  }));

  if (odd_target) {
    const int m = k;
    out.push_back(timed_check("increment_complement_symmetry", params, CheckMode::Exact, [&] {
      VerificationReport r;
      r.passed = true;
      for (int j = 0; j <= m; ++j) {
        const Rational a = increment_sum(v, j);
        const Rational b = increment_sum(v, m - j);
        if (a != b) r.fail("r=" + std::to_string(j), a.to_string() + " != " + b.to_string());
      }
      return r;
    }));
    out.push_back(timed_check("decrement_equals_increment", params, CheckMode::Exact, [&] {
      VerificationReport r;
      r.passed = true;
      for (int j = 0; j <= m; ++j) {
        const Rational a = increment_sum(v, j);
        const Rational b = decrement_sum(v, j);
        if (a != b) r.fail("r=" + std::to_string(j), a.to_string() + " != " + b.to_string());
      }
      return r;
    }));
  }
  return out;
}

}  // namespace tqasm
