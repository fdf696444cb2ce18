#ifndef TQASM_SPIN_SECTOR_HPP
#define TQASM_SPIN_SECTOR_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tqasm/rational.hpp"
#include "tqasm/report.hpp"
#include "tqasm/sparse_nullspace.hpp"

namespace tqasm {

/// Basis vector |n_1, ..., n_K> of the periodic chain of length N: the
/// 1-based positions of the down spins, strictly increasing.
struct SpinBasisState {
  int n = 0;
  std::vector<int> positions;

  std::uint32_t mask() const;
  static SpinBasisState from_mask(int n, std::uint32_t mask);
  std::string to_string() const;  // "1,3,5"

  friend bool operator==(const SpinBasisState&, const SpinBasisState&) = default;
  friend auto operator<=>(const SpinBasisState& a, const SpinBasisState& b) { return a.positions <=> b.positions; }
};

constexpr int kMaxChainLength = 30;

/// All C(N, K) states with K down spins, in lexicographic order of positions.
std::vector<SpinBasisState> enumerate_sector(int n, int k);

/// H|s> for H = -1/2 sum_j [sx_j sx_{j+1} + sy_j sy_{j+1} + delta sz_j sz_{j+1}]
/// with periodic boundary. The diagonal term comes first (if nonzero), then
/// one -1 exchange term per antiparallel bond, bonds taken in order j = 1..N.
std::vector<std::pair<SpinBasisState, Rational>> hamiltonian_action(const SpinBasisState& state,
                                                                    const Rational& delta);

/// Cyclic shift S and reflection R on down-spin positions.
SpinBasisState shift(const SpinBasisState& s);
SpinBasisState reflect(const SpinBasisState& s);
/// Global spin flip P; maps sector K to sector N - K.
SpinBasisState spin_flip(const SpinBasisState& s);

/// One orbit under the dihedral group generated by S and R.
struct SymmetryOrbit {
  SpinBasisState representative;  // lexicographically least member
  std::vector<SpinBasisState> members;

  std::size_t size() const { return members.size(); }
};

/// Orbit decomposition of a sector together with the state -> orbit map.
class SymmetrySector {
 public:
  SymmetrySector(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<SymmetryOrbit>& orbits() const { return orbits_; }
  std::size_t orbit_of(std::uint32_t mask) const;
  std::size_t orbit_of(const SpinBasisState& s) const { return orbit_of(s.mask()); }

 private:
  int n_;
  int k_;
  std::vector<SymmetryOrbit> orbits_;
  std::unordered_map<std::uint32_t, std::size_t> index_;
};

std::vector<SymmetryOrbit> orbit_decompose(int n, int k);

/// Exact sector vector constant on S/R orbits; one value per orbit.
class SectorVector {
 public:
  SectorVector(std::shared_ptr<const SymmetrySector> sector, std::vector<Rational> values);

  int n() const { return sector_->n(); }
  int k() const { return sector_->k(); }
  const SymmetrySector& sector() const { return *sector_; }
  const std::vector<Rational>& orbit_values() const { return values_; }

  /// Component Psi^{positions}; positions need not be sorted or canonical
  /// and are taken mod N (0 means N).
  Rational component(const std::vector<int>& positions) const;
  Rational component(const SpinBasisState& s) const { return values_[sector_->orbit_of(s)]; }

  /// Components over enumerate_sector(N, K) order.
  std::vector<Rational> expand() const;

  Rational max_component() const;
  Rational min_component() const;

 private:
  std::shared_ptr<const SymmetrySector> sector_;
  std::vector<Rational> values_;
};

/// Sector matrix of H - energy*I over enumerate_sector(n, k).
SparseRationalMatrix sector_hamiltonian(int n, int k, const Rational& delta, const Rational& energy = Rational(0));

/// Row-reduced matrix of H - energy*I on orbit representatives: row i is
/// (H - energy) applied to representative i with images folded onto their
/// orbits. Its null vectors are the S,R-invariant eigenvectors.
SparseRationalMatrix orbit_reduced_hamiltonian(const SymmetrySector& sector, const Rational& delta,
                                               const Rational& energy);

struct GroundCandidate {
  SectorVector psi;
  std::size_t nullity = 0;
  bool integral = false;  // every normalized component is an integer
  bool positive = false;  // every normalized component is > 0
  EliminationStats stats;
};

/// The delta = -1/2 eigenvector with energy -3N/4 in sector K = (N-1)/2,
/// from the orbit-reduced exact nullspace, normalized so its smallest
/// component is 1. Requires odd N >= 3; throws InvariantViolation when the
/// nullspace is not one-dimensional.
GroundCandidate ground_candidate(int n);

/// Same eigenvector solved on the full sector without symmetry reduction,
/// normalized the same way, in enumerate_sector order.
std::vector<Rational> ground_candidate_full(int n);

/// sum over r-subsets {m_1 < ... < m_r} of F_{m_1..m_r}, the component at
/// (1, 3, ..., 2M-1) with the chosen entries incremented by one.
Rational increment_sum(const SectorVector& v, int r);

/// As increment_sum but with the chosen entries decremented (position 0 wraps to N).
Rational decrement_sum(const SectorVector& v, int r);

/// S and R invariance, the Sigma eigenvalue, the eigen-equation on the full
/// sector, the spin-flipped companion in sector N - K, and the
/// increment/decrement and complement symmetries of the increment sums.
std::vector<VerificationReport> check_operator_symmetries(const SectorVector& v);

}  // namespace tqasm

#endif  // TQASM_SPIN_SECTOR_HPP
