#include "ontolab/quantum.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ontolab::quantum {

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw std::invalid_argument(what);
}

std::string dim_str(int a, int b) {
    std::ostringstream os;
    os << a << " vs " << b;
    return os.str();
}

} // namespace

CMat hermitize(const CMat& m) { return 0.5 * (m + m.adjoint()); }

double max_abs(const CMat& m) { return m.cwiseAbs().maxCoeff(); }

bool approx_equal(const CMat& a, const CMat& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return max_abs(a - b) <= tol;
}

double min_eigenvalue(const CMat& m) {
    Eigen::SelfAdjointEigenSolver<CMat> es(hermitize(m), Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

double max_eigenvalue(const CMat& m) {
    Eigen::SelfAdjointEigenSolver<CMat> es(hermitize(m), Eigen::EigenvaluesOnly);
    return es.eigenvalues().maxCoeff();
}

// --- Ket ----------------------------------------------------------------

Ket::Ket(CVec amplitudes) : amps_(std::move(amplitudes)) {
    require(amps_.size() >= 2, "Ket: dimension must be >= 2");
    require(std::abs(amps_.squaredNorm() - 1.0) <= kAssemblyTol,
            "Ket: squared norm must be 1 within 1e-12");
}

Ket Ket::basis_state(int dim, int index) {
    require(dim >= 2 && index >= 0 && index < dim, "Ket::basis_state: bad index");
    CVec v = CVec::Zero(dim);
    v(index) = 1.0;
    return Ket(v);
}

// --- Ray ----------------------------------------------------------------

namespace {
CVec gauge_fix(const CVec& amps) {
    for (Eigen::Index i = 0; i < amps.size(); ++i) {
        double r = std::abs(amps(i));
        if (r > 1e-12) {
            return amps * (std::conj(amps(i)) / r);
        }
    }
    return amps; // unreachable for a normalized vector
}
} // namespace

Ray::Ray(const Ket& k) : rep_(Ket(gauge_fix(k.amplitudes()))) {}

CMat Ray::projector_matrix() const {
    const CVec& a = rep_.amplitudes();
    return a * a.adjoint();
}

bool Ray::approx_equal(const Ray& other, double tol) const {
    if (dim() != other.dim()) return false;
    return (rep_.amplitudes() - other.rep_.amplitudes()).cwiseAbs().maxCoeff() <= tol;
}

// --- Projector ------------------------------------------------------------

Projector::Projector(CMat matrix) : mat_(std::move(matrix)) {
    require(mat_.rows() == mat_.cols(), "Projector: matrix must be square");
    require(max_abs(mat_ - mat_.adjoint()) <= kAssemblyTol,
            "Projector: matrix must be Hermitian within 1e-12");
    mat_ = hermitize(mat_);
    require(max_abs(mat_ * mat_ - mat_) <= kAlgebraTol,
            "Projector: matrix must be idempotent within 1e-10");
    rank_ = static_cast<int>(std::lround(mat_.trace().real()));
}

Projector Projector::onto(const Ket& k) {
    const CVec& a = k.amplitudes();
    return Projector(a * a.adjoint());
}

Projector Projector::onto(const Ray& r) { return Projector(r.projector_matrix()); }

Projector Projector::zero(int dim) { return Projector(CMat::Zero(dim, dim)); }

Projector Projector::identity(int dim) { return Projector(CMat::Identity(dim, dim)); }

// --- ProjectiveMeasurement -------------------------------------------------

ProjectiveMeasurement::ProjectiveMeasurement(std::vector<Projector> projectors)
    : projs_(std::move(projectors)) {
    require(!projs_.empty(), "ProjectiveMeasurement: empty projector list");
    const int d = projs_.front().dim();
    CMat sum = CMat::Zero(d, d);
    for (const auto& p : projs_) {
        require(p.dim() == d, "ProjectiveMeasurement: mixed dimensions");
        sum += p.matrix();
    }
    require(max_abs(sum - CMat::Identity(d, d)) <= kAlgebraTol,
            "ProjectiveMeasurement: projectors must sum to identity within 1e-10");
    for (std::size_t i = 0; i < projs_.size(); ++i) {
        for (std::size_t j = i + 1; j < projs_.size(); ++j) {
            require(max_abs(projs_[i].matrix() * projs_[j].matrix()) <= kAlgebraTol,
                    "ProjectiveMeasurement: projectors must be pairwise orthogonal");
        }
    }
}

ProjectiveMeasurement ProjectiveMeasurement::computational_basis(int dim) {
    std::vector<Projector> ps;
    ps.reserve(dim);
    for (int i = 0; i < dim; ++i) ps.push_back(Projector::onto(Ket::basis_state(dim, i)));
    return ProjectiveMeasurement(std::move(ps));
}

// --- Effect / Povm ----------------------------------------------------------

Effect::Effect(CMat matrix) : mat_(std::move(matrix)) {
    require(mat_.rows() == mat_.cols(), "Effect: matrix must be square");
    require(max_abs(mat_ - mat_.adjoint()) <= kAssemblyTol,
            "Effect: matrix must be Hermitian within 1e-12");
    mat_ = hermitize(mat_);
    require(min_eigenvalue(mat_) >= -kAlgebraTol,
            "Effect: matrix must be positive semidefinite");
    require(max_eigenvalue(mat_) <= 1.0 + kAlgebraTol,
            "Effect: eigenvalues must not exceed 1");
}

Povm::Povm(std::vector<Effect> effects) : effects_(std::move(effects)) {
    require(!effects_.empty(), "Povm: empty effect list");
    const int d = effects_.front().dim();
    CMat sum = CMat::Zero(d, d);
    for (const auto& e : effects_) {
        require(e.dim() == d, "Povm: mixed dimensions");
        sum += e.matrix();
    }
    require(max_abs(sum - CMat::Identity(d, d)) <= kAlgebraTol,
            "Povm: effects must sum to identity within 1e-10");
}

// --- DensityOperator ---------------------------------------------------------

DensityOperator::DensityOperator(CMat matrix) : mat_(std::move(matrix)) {
    require(mat_.rows() == mat_.cols(), "DensityOperator: matrix must be square");
    require(max_abs(mat_ - mat_.adjoint()) <= kAssemblyTol,
            "DensityOperator: matrix must be Hermitian within 1e-12");
    mat_ = hermitize(mat_);
    require(std::abs(mat_.trace().real() - 1.0) <= kAssemblyTol,
            "DensityOperator: trace must be 1 within 1e-12");
    require(min_eigenvalue(mat_) >= -kAlgebraTol,
            "DensityOperator: matrix must be positive semidefinite");
}

DensityOperator DensityOperator::pure(const Ray& r) {
    return DensityOperator(r.projector_matrix());
}

DensityOperator DensityOperator::pure(const Ket& k) {
    const CVec& a = k.amplitudes();
    return DensityOperator(a * a.adjoint());
}

DensityOperator DensityOperator::maximally_mixed(int dim) {
    return DensityOperator(CMat::Identity(dim, dim) / static_cast<double>(dim));
}

// --- BlochVector --------------------------------------------------------------

BlochVector::BlochVector(double x, double y, double z) : BlochVector(Eigen::Vector3d(x, y, z)) {}

BlochVector::BlochVector(const Eigen::Vector3d& v) : v_(v) {
    require(std::abs(v_.norm() - 1.0) <= kAssemblyTol,
            "BlochVector: must have unit norm within 1e-12");
}

// --- probabilities --------------------------------------------------------------

double born_probability(const Ket& state, const Projector& event) {
    require(state.dim() == event.dim(),
            "born_probability: dimension mismatch " + dim_str(state.dim(), event.dim()));
    const CVec& a = state.amplitudes();
    cxd val = (a.adjoint() * event.matrix() * a)(0, 0);
    if (std::abs(val.imag()) > 1e-12)
        throw std::runtime_error("born_probability: imaginary residue exceeds 1e-12");
    double p = val.real();
    return std::min(1.0, std::max(0.0, p));
}

double trace_probability(const DensityOperator& rho, const Effect& event) {
    require(rho.dim() == event.dim(),
            "trace_probability: dimension mismatch " + dim_str(rho.dim(), event.dim()));
    double p = (event.matrix() * rho.matrix()).trace().real();
    if (p < -1e-12 || p > 1.0 + 1e-12)
        throw std::runtime_error("trace_probability: result escapes [0,1] beyond tolerance");
    return std::min(1.0, std::max(0.0, p));
}

// --- composition -----------------------------------------------------------------

CMat kron(const CMat& a, const CMat& b) {
    CMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Ket tensor(const Ket& a, const Ket& b) {
    CVec out(a.dim() * b.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j) out(i * b.dim() + j) = a.amplitude(i) * b.amplitude(j);
    return Ket(out);
}

Projector tensor(const Projector& a, const Projector& b) {
    return Projector(kron(a.matrix(), b.matrix()));
}

DensityOperator tensor(const DensityOperator& a, const DensityOperator& b) {
    return DensityOperator(kron(a.matrix(), b.matrix()));
}

CMat partial_trace_b(const CMat& op, int dim_b) {
    require(op.rows() == op.cols(), "partial_trace_b: matrix must be square");
    require(dim_b >= 1 && op.rows() % dim_b == 0,
            "partial_trace_b: dimension does not factorize by dim_b");
    const int da = static_cast<int>(op.rows()) / dim_b;
    CMat out = CMat::Zero(da, da);
    for (int a = 0; a < da; ++a)
        for (int ap = 0; ap < da; ++ap)
            for (int i = 0; i < dim_b; ++i) out(a, ap) += op(a * dim_b + i, ap * dim_b + i);
    return out;
}

Povm povm_from_dilation(const ProjectiveMeasurement& joint, const DensityOperator& ancilla) {
    const int db = ancilla.dim();
    require(joint.dim() % db == 0,
            "povm_from_dilation: joint dimension does not factorize by the ancilla");
    const int da = joint.dim() / db;
    const CMat weighted = kron(CMat::Identity(da, da), ancilla.matrix());
    std::vector<Effect> effects;
    effects.reserve(joint.size());
    for (int k = 0; k < joint.size(); ++k) {
        CMat q = partial_trace_b(weighted * joint[k].matrix(), db);
        effects.emplace_back(hermitize(q));
    }
    return Povm(std::move(effects));
}

// --- Bloch dictionary -----------------------------------------------------------------

Ket ket_from_bloch(const BlochVector& b) {
    const double theta = std::acos(std::clamp(b.z(), -1.0, 1.0));
    const double phi = std::atan2(b.y(), b.x());
    CVec v(2);
    v(0) = std::cos(theta / 2.0);
    v(1) = std::polar(std::sin(theta / 2.0), phi);
    return Ket(v);
}

BlochVector bloch_from_ray(const Ray& r) {
    if (r.dim() != 2) throw std::invalid_argument("bloch_from_ray: qubit rays only");
    const CVec& a = r.representative().amplitudes();
    const cxd c = std::conj(a(0)) * a(1);
    Eigen::Vector3d v(2.0 * c.real(), 2.0 * c.imag(),
                      std::norm(a(0)) - std::norm(a(1)));
    return BlochVector(v / v.norm()); // renormalize away roundoff
}

Projector projector_from_bloch(const BlochVector& b) {
    CMat m(2, 2);
    m(0, 0) = 0.5 * (1.0 + b.z());
    m(1, 1) = 0.5 * (1.0 - b.z());
    m(0, 1) = 0.5 * cxd(b.x(), -b.y());
    m(1, 0) = 0.5 * cxd(b.x(), b.y());
    return Projector(m);
}

PauliForm pauli_form(const CMat& m) {
    if (m.rows() != 2 || m.cols() != 2)
        throw std::invalid_argument("pauli_form: 2x2 matrices only");
    PauliForm pf;
    pf.a = 0.5 * m.trace().real();
    pf.w.x() = 0.5 * (m(0, 1) + m(1, 0)).real();
    pf.w.y() = 0.5 * (cxd(0, 1) * (m(0, 1) - m(1, 0))).real();
    pf.w.z() = 0.5 * (m(0, 0) - m(1, 1)).real();
    return pf;
}

} // namespace ontolab::quantum
