// Copyright 2026 The zenophoton authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZENOPHOTON_FOCK_HPP
#define ZENOPHOTON_FOCK_HPP

#include <array>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "zenophoton/errors.hpp"

namespace zeno {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

enum class Mode { z = 0, c = 1, t = 2 };

/// Photon numbers in the three optical modes z, c, t.
struct Occupation {
    int z = 0;
    int c = 0;
    int t = 0;

    int total() const { return z + c + t; }
    int operator[](int mode) const { return mode == 0 ? z : (mode == 1 ? c : t); }
    bool operator==(const Occupation&) const = default;
};

/// The truncated three-mode number basis: vacuum, the three single-photon
/// states |001>, |010>, |100>, then the six two-photon states in the order
/// |011>, |002>, |020>, |101>, |110>, |200>.  A ket |zct> lists the photon
/// number in each mode.
class StateSpace {
  public:
    static constexpr int kDim = 10;

    static const StateSpace& canonical();

    int dim() const { return kDim; }
    const std::array<Occupation, kDim>& basis() const { return basis_; }
    const Occupation& occupation(int index) const { return basis_.at(index); }

    /// Index of |n_z n_c n_t>; throws out_of_space for occupations outside
    /// the two-photon truncation.
    int index(int n_z, int n_c, int n_t) const;
    int index(const Occupation& occ) const { return index(occ.z, occ.c, occ.t); }
    bool contains(int n_z, int n_c, int n_t) const;

  private:
    StateSpace();
    std::array<Occupation, kDim> basis_;
};

/// Diagonal photon-number probabilities for a single mode, indexed 0..n_max.
/// Entries are nonnegative and sum to at most 1; any deficit is absorbed or
/// truncated mass.
struct PhotonDistribution {
    std::vector<double> probs;

    int n_max() const { return static_cast<int>(probs.size()) - 1; }
    double total() const;
    double prob(int n) const {
        return (n >= 0 && n < static_cast<int>(probs.size())) ? probs[n] : 0.0;
    }
};

/// Phase-averaged coherent state with mean photon number mu: Poissonian
/// weights e^{-mu} mu^n / n! truncated at n_max.
PhotonDistribution poisson_distribution(double mu, int n_max);

/// Smallest n_max whose Poisson tail mass is below 1e-12 (never below 1).
int auto_nmax(double mu);

/// Hermitian density matrix over a StateSpace plus the probability mass that
/// has been removed to an absorbing continuum.
struct DensityMatrix {
    const StateSpace* space = &StateSpace::canonical();
    CMatrix elements = CMatrix::Zero(StateSpace::kDim, StateSpace::kDim);
    double absorbed = 0.0;

    double trace() const { return elements.trace().real(); }
};

/// Pure-state projector |n_z n_c n_t><n_z n_c n_t|.
DensityMatrix basis_state(const StateSpace& space, int n_z, int n_c, int n_t);

/// Photon-number distribution of one mode, read off the diagonal.  Absorbed
/// mass is excluded, so the result sums to trace(rho).
PhotonDistribution mode_number_marginal(const DensityMatrix& rho, Mode mode);

// Diagnostics used by the test and verify suites.
double hermiticity_defect(const CMatrix& m);
double min_diagonal(const CMatrix& m);
double min_eigenvalue(const CMatrix& m);

}  // namespace zeno

#endif
