#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace ontolab::quantum {

using cxd = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

// Construction-time tolerance (norms, Hermiticity, trace).
inline constexpr double kAssemblyTol = 1e-12;
// Tolerance for derived algebra (idempotency, orthogonality, positivity).
inline constexpr double kAlgebraTol = 1e-10;

CMat hermitize(const CMat& m); // (M + M^dag) / 2
double max_abs(const CMat& m);
bool approx_equal(const CMat& a, const CMat& b, double tol);
// Extremal eigenvalues of the Hermitian part; matrices are symmetrized
// before the eigensolve to wash roundoff.
double min_eigenvalue(const CMat& m);
double max_eigenvalue(const CMat& m);

/// Normalized state vector, dimension >= 2.
class Ket {
public:
    explicit Ket(CVec amplitudes);
    int dim() const { return static_cast<int>(amps_.size()); }
    const CVec& amplitudes() const { return amps_; }
    cxd amplitude(int i) const { return amps_(i); }
    static Ket basis_state(int dim, int index);

private:
    CVec amps_;
};

/**
 * Projective ray of a Ket with the global phase gauged away: the first
 * amplitude with modulus above 1e-12 is made real positive, so two Kets
 * differing by a global phase map to the same representative.
 */
class Ray {
public:
    explicit Ray(const Ket& k);
    const Ket& representative() const { return rep_; }
    int dim() const { return rep_.dim(); }
    CMat projector_matrix() const; // |psi><psi|
    bool approx_equal(const Ray& other, double tol = 1e-9) const;

private:
    Ket rep_;
};

/// Hermitian idempotent operator.
class Projector {
public:
    explicit Projector(CMat matrix);
    static Projector onto(const Ket& k);
    static Projector onto(const Ray& r);
    static Projector zero(int dim);
    static Projector identity(int dim);
    const CMat& matrix() const { return mat_; }
    int dim() const { return static_cast<int>(mat_.rows()); }
    int rank() const { return rank_; }

private:
    CMat mat_;
    int rank_;
};

/// Complete set of pairwise-orthogonal projectors summing to identity.
class ProjectiveMeasurement {
public:
    explicit ProjectiveMeasurement(std::vector<Projector> projectors);
    static ProjectiveMeasurement computational_basis(int dim);
    int size() const { return static_cast<int>(projs_.size()); }
    int dim() const { return projs_.front().dim(); }
    const Projector& operator[](int k) const { return projs_[k]; }
    const std::vector<Projector>& projectors() const { return projs_; }

private:
    std::vector<Projector> projs_;
};

/// POVM element: Hermitian, 0 <= E <= I.
class Effect {
public:
    explicit Effect(CMat matrix);
    Effect(const Projector& p) : Effect(p.matrix()) {} // NOLINT: deliberate conversion
    const CMat& matrix() const { return mat_; }
    int dim() const { return static_cast<int>(mat_.rows()); }

private:
    CMat mat_;
};

/// Effects summing to identity.
class Povm {
public:
    explicit Povm(std::vector<Effect> effects);
    int size() const { return static_cast<int>(effects_.size()); }
    int dim() const { return effects_.front().dim(); }
    const Effect& operator[](int k) const { return effects_[k]; }
    const std::vector<Effect>& effects() const { return effects_; }

private:
    std::vector<Effect> effects_;
};

/// Positive semidefinite, trace-one Hermitian operator.
class DensityOperator {
public:
    explicit DensityOperator(CMat matrix);
    static DensityOperator pure(const Ray& r);
    static DensityOperator pure(const Ket& k);
    static DensityOperator maximally_mixed(int dim);
    const CMat& matrix() const { return mat_; }
    int dim() const { return static_cast<int>(mat_.rows()); }

private:
    CMat mat_;
};

/// Unit vector on the Bloch sphere (pure qubit state or event direction).
class BlochVector {
public:
    BlochVector(double x, double y, double z);
    explicit BlochVector(const Eigen::Vector3d& v);
    const Eigen::Vector3d& vec() const { return v_; }
    double x() const { return v_.x(); }
    double y() const { return v_.y(); }
    double z() const { return v_.z(); }
    double dot(const BlochVector& o) const { return v_.dot(o.v_); }

private:
    Eigen::Vector3d v_;
};

// --- Born-rule probabilities ------------------------------------------

double born_probability(const Ket& state, const Projector& event);
double trace_probability(const DensityOperator& rho, const Effect& event);

// --- Composition and dilation -----------------------------------------

// Kronecker composite, system-major / ancilla-minor index ordering:
// (a b)(i j) -> row a*dim_b + i. Fixed once for the whole artifact.
CMat kron(const CMat& a, const CMat& b);
Ket tensor(const Ket& a, const Ket& b);
Projector tensor(const Projector& a, const Projector& b);
DensityOperator tensor(const DensityOperator& a, const DensityOperator& b);

/// Trace over the minor (ancilla) index block; preserves the total trace.
CMat partial_trace_b(const CMat& op, int dim_b);

/**
 * Effects of the POVM realized by measuring `joint` on system (x) ancilla
 * with the ancilla prepared in `ancilla`:  Q_k = Tr_B[(I_A (x) rho_B) E_k].
 * The reduced statistics reproduce the joint Born probabilities for every
 * system state.
 */
Povm povm_from_dilation(const ProjectiveMeasurement& joint,
                        const DensityOperator& ancilla);

// --- Qubit / Bloch-sphere dictionary ----------------------------------

Ket ket_from_bloch(const BlochVector& b);
BlochVector bloch_from_ray(const Ray& r);
Projector projector_from_bloch(const BlochVector& b);

/// Pauli expansion of a Hermitian 2x2 matrix: M = a*I + w . sigma.
struct PauliForm {
    double a;
    Eigen::Vector3d w;
};
PauliForm pauli_form(const CMat& hermitian2x2);

} // namespace ontolab::quantum
