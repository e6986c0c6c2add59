#ifndef SKEINLAB_FUSION_HPP
#define SKEINLAB_FUSION_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace skeinlab {

struct FusionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Fusion rings and quantum dimensions
// ---------------------------------------------------------------------------

// A fusion ring presented by structure constants N[i][j][k] = N^{ij}_k >= 0,
// with labels[0] the unit and `dual` an involution on label indices.
struct FusionRingData {
    int rank = 0;
    std::vector<std::string> labels;
    std::vector<int> dual;
    // N[i][j][k]; rank x rank x rank.
    std::vector<std::vector<std::vector<int>>> N;

    // Throws FusionError unless the unit/dual axioms and associativity hold.
    void validate() const;
    bool multiplicity_free() const;
    int label_index(const std::string& name) const;

    static FusionRingData trivial();
    static FusionRingData fibonacci();  // labels 1, tau;  tau^2 = 1 + tau
    static FusionRingData ising();      // labels 1, sigma, psi

    std::string to_json() const;
    static FusionRingData from_json(const std::string& text);
};

// Positive quantum dimensions, d[0] = 1.
struct QDimVector {
    std::vector<double> d;
    // Largest |d_i d_j - sum_k N^{ij}_k d_k| over all i, j.
    double residual = 0.0;
    // True when every entry is within 1e-9 of 1 or >= sqrt(2) - 1e-9, the
    // range realizable in a unitary ribbon category.
    bool ribbon_range_ok = false;
};

// Perron-Frobenius dimensions from power iteration on the fusion matrix of
// label q.  Throws on non-convergence or nonpositive entries.
QDimVector qdims(const FusionRingData& ring, int q);

// ---------------------------------------------------------------------------
// F-matrices for q (x) q = 1 (+) x_1 (+) ... (+) x_k,  k <= 2
// ---------------------------------------------------------------------------

enum class FusionVariant { Dubrovnik, Kauffman };

std::string fusion_variant_name(FusionVariant v);

struct QqqFMatrix {
    double d_q = 1.0;
    // d[0] = 1, then d_{x_1}, ..., d_{x_k}.
    std::vector<double> d;
    int kappa = 1;
    FusionVariant variant = FusionVariant::Dubrovnik;  // meaningful at k = 2
    // (k+1) x (k+1), rows/cols indexed by {1, x_1, ..., x_k}.
    std::vector<std::vector<double>> M;

    std::size_t size() const { return M.size(); }
    int k() const { return static_cast<int>(M.size()) - 1; }
};

// Closed-form F^{qqq}_q.  `dims` holds the k summand dimensions d_{x_i}
// (excluding the unit), so k = dims.size() must be 0, 1 or 2 and
// d_q^2 = 1 + sum dims must hold within 1e-9.  At k = 2, kappa = -1 is
// rejected: a unitary ribbon category forces symmetric self-duality there.
QqqFMatrix f_matrix(double d_q, const std::vector<double>& dims, int kappa,
                    FusionVariant variant = FusionVariant::Dubrovnik);

// Eigendecomposition of a small real-symmetric matrix by cyclic Jacobi
// rotations.  Returns eigenvalues ascending; columns of `vectors` match.
struct SymEigen {
    std::vector<double> values;
    std::vector<std::vector<double>> vectors;
};
SymEigen jacobi_eigen(std::vector<std::vector<double>> m);

// Residuals for the structural identities of an F-matrix.  All residuals are
// max-norm; `ok()` applies the default 1e-9 tolerance.
struct FIdentityReport {
    double first_row = 0.0;    // M[0][l] = kappa sqrt(d_l)/d_q
    double column_sum = 0.0;   // delta_{l0} = kappa sum_r (sqrt(d_r)/d_q) M[r][l]
    double symmetry = 0.0;     // M = M^T
    double involution = 0.0;   // M^2 = I
    double orthogonality = 0.0;// M^T M = I
    double trace = 0.0;        // tr(M)
    bool trace_bound = false;  // |tr(M)| < k+1
    double eigen_residual = 0.0;  // eigenvalues of kappa*M off {+1,-1}
    int mult_plus = 0;         // multiplicity of +1 in kappa*M
    int mult_minus = 0;        // multiplicity of -1
    bool ok(double tol = 1e-9) const;
    std::string to_json() const;
};
FIdentityReport verify_f_identities(const QqqFMatrix& F);

// ---------------------------------------------------------------------------
// The algebra End(q (x) q) in jack coordinates
// ---------------------------------------------------------------------------

// Coefficient vector over the unnormalized basis {cupcap = jack_0, jack_i}.
struct EndQ2Element {
    double d_q = 1.0;
    std::vector<double> d;  // as in QqqFMatrix
    std::vector<double> c;  // same length as d

    static EndQ2Element zero(const QqqFMatrix& F);
    static EndQ2Element jack(const QqqFMatrix& F, int lambda);
    static EndQ2Element cupcap(const QqqFMatrix& F) { return jack(F, 0); }
    // Identity morphism sum_l (sqrt(d_l)/d_q) jack_l.
    static EndQ2Element identity(const QqqFMatrix& F);
    // Projector P_l = (sqrt(d_l)/d_q) jack_l.
    static EndQ2Element projector(const QqqFMatrix& F, int lambda);

    EndQ2Element operator+(const EndQ2Element& o) const;
    EndQ2Element operator-(const EndQ2Element& o) const;
    EndQ2Element scaled(double s) const;
    double norm() const;  // Euclidean norm of the coefficient vector
};

// Distance in coefficients; throws on dimension mismatch.
double distance(const EndQ2Element& x, const EndQ2Element& y);

// Vertical composition: jacks are orthogonal idempotents up to scale,
// (x o y)_l = x_l y_l d_q / sqrt(d_l).
EndQ2Element compose(const EndQ2Element& x, const EndQ2Element& y);

// Quantum trace: the closure of jack_l is the theta net d_q sqrt(d_l).
double qtrace(const EndQ2Element& x);

// Quarter-turn rotation: kappa F applied to the jack coefficient vector.
// Sends jack_l to the corresponding bone and is an involution.
EndQ2Element rotate(const EndQ2Element& x, const QqqFMatrix& F);

// Bone morphisms expanded over jacks: bone_l = kappa F e_l; for l = 0 this
// reproduces the identity decomposition.
EndQ2Element bone_in_jacks(int lambda, const QqqFMatrix& F);

// Vertex normalization nu^{xy}_z = (d_z/(d_x d_y))^{1/4} and theta net
// Theta = sqrt(d_x d_y d_z); they satisfy nu^2 * Theta = d_z.
double nu_factor(double d_x, double d_y, double d_z);
double theta_net(double d_x, double d_y, double d_z);

// ---------------------------------------------------------------------------
// Skein-parameter consistency (R-matrix side)
// ---------------------------------------------------------------------------

// k = 1 (q (x) q = 1 (+) x): from the braiding eigenvalue beta on x,
//   alpha = -beta^-3,  d_q = -kappa (beta^2 + beta^-2),  theta = kappa/alpha.
// Throws when d_q fails to be a positive real in {1} U [sqrt(2), inf).
struct K1Report {
    std::complex<double> alpha;
    std::complex<double> theta;
    double d_q = 0.0;
    // Residual of the twist formula theta = (1/d_q)(alpha + beta (d_q^2-1)).
    double twist_residual = 0.0;
};
K1Report skein_consistency_k1(std::complex<double> beta, int kappa);

// k = 2 (q (x) q = 1 (+) x (+) y): R^{qq} = diag(alpha, beta, gamma) with
// beta gamma = -1 (Dubrovnik family) or +1 (Kauffman family).  Computes d_q
// three ways (the closed theorem form in alpha and z = beta + gamma, and the
// per-case forms in gamma and in beta) and demands agreement.  When z = 0
// the tuple is degenerate and only classified.
struct K2Report {
    FusionVariant variant = FusionVariant::Dubrovnik;
    int kappa = 1;
    bool degenerate = false;
    std::string degenerate_class;  // "pm1" (D=0) or "pmi" (K=0)
    double d_q = 0.0;
    double residual = 0.0;  // max disagreement between the three d_q forms
};
K2Report skein_consistency_k2(std::complex<double> alpha, std::complex<double> beta,
                              std::complex<double> gamma, int kappa);

// ---------------------------------------------------------------------------
// New bases and the eigenspaces of rotation at k = 2
// ---------------------------------------------------------------------------

// For J_x = jack_x + bone_x, J'_y = bone_y - jack_y and
// J+- = sqrt(d_x) J_x +- sqrt(d_y) J'_y, checks that
// {J+, J-, id + cupcap} (Dubrovnik) resp. {J+, J-, id - cupcap} (Kauffman)
// is a basis, that rotate(J+) = J-, and that rotation acts as +1 on the
// V_1 spans and as -1 on the V_{-1} spans with dimensions (2,1) resp. (1,2).
struct NewBasesReport {
    FusionVariant variant = FusionVariant::Dubrovnik;
    double gram_det = 0.0;         // Gram determinant of the basis
    double gram_det_normalized = 0.0;  // scaled by the vector norms
    double rotate_plus_residual = 0.0; // |rotate(J+) - J-|
    double v1_residual = 0.0;      // rotation fixing the V_1 spans
    double vm1_residual = 0.0;     // rotation negating the V_{-1} spans
    int dim_v1 = 0;
    int dim_vm1 = 0;
    bool ok(double tol = 1e-10) const;
    std::string to_json() const;
};
NewBasesReport new_bases(const QqqFMatrix& F);

}  // namespace skeinlab

#endif  // SKEINLAB_FUSION_HPP
