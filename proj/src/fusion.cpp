#include "skeinlab/fusion.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace skeinlab {

namespace {

using nlohmann::json;

constexpr double kTol = 1e-9;

void require(bool cond, const std::string& msg) {
    if (!cond) throw FusionError(msg);
}

double max_abs(double a, double b) { return std::max(std::abs(a), std::abs(b)); }

}  // namespace

// ---------------------------------------------------------------------------
// FusionRingData
// ---------------------------------------------------------------------------

void FusionRingData::validate() const {
    require(rank >= 1, "fusion ring must have positive rank");
    require(static_cast<int>(labels.size()) == rank, "labels size mismatch");
    require(static_cast<int>(dual.size()) == rank, "dual size mismatch");
    require(static_cast<int>(N.size()) == rank, "N tensor rank mismatch");
    for (const auto& plane : N) {
        require(static_cast<int>(plane.size()) == rank, "N tensor rank mismatch");
        for (const auto& row : plane) {
            require(static_cast<int>(row.size()) == rank, "N tensor rank mismatch");
            for (int v : row) require(v >= 0, "fusion coefficients must be nonnegative");
        }
    }
    for (int i = 0; i < rank; ++i) {
        require(dual[i] >= 0 && dual[i] < rank, "dual index out of range");
        require(dual[dual[i]] == i, "dual must be an involution");
    }
    require(dual[0] == 0, "unit must be self-dual");
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            require(N[i][0][j] == (i == j ? 1 : 0), "unit axiom N^{i1}_j = delta_ij fails");
            require(N[0][i][j] == (i == j ? 1 : 0), "unit axiom N^{1i}_j = delta_ij fails");
            require(N[i][j][0] == (dual[i] == j ? 1 : 0),
                    "duality axiom N^{ij}_1 = delta_{i,j*} fails");
        }
    // Associativity: sum_e N^{ab}_e N^{ec}_d = sum_f N^{af}_d N^{bc}_f.
    for (int a = 0; a < rank; ++a)
        for (int b = 0; b < rank; ++b)
            for (int c = 0; c < rank; ++c)
                for (int d = 0; d < rank; ++d) {
                    long lhs = 0, rhs = 0;
                    for (int e = 0; e < rank; ++e) lhs += long(N[a][b][e]) * N[e][c][d];
                    for (int f = 0; f < rank; ++f) rhs += long(N[a][f][d]) * N[b][c][f];
                    require(lhs == rhs, "fusion coefficients are not associative");
                }
}

bool FusionRingData::multiplicity_free() const {
    for (const auto& plane : N)
        for (const auto& row : plane)
            for (int v : row)
                if (v > 1) return false;
    return true;
}

int FusionRingData::label_index(const std::string& name) const {
    for (int i = 0; i < rank; ++i)
        if (labels[i] == name) return i;
    throw FusionError("unknown fusion label: " + name);
}

FusionRingData FusionRingData::trivial() {
    FusionRingData r;
    r.rank = 1;
    r.labels = {"1"};
    r.dual = {0};
    r.N = {{{1}}};
    return r;
}

FusionRingData FusionRingData::fibonacci() {
    FusionRingData r;
    r.rank = 2;
    r.labels = {"1", "tau"};
    r.dual = {0, 1};
    r.N.assign(2, std::vector<std::vector<int>>(2, std::vector<int>(2, 0)));
    r.N[0][0][0] = r.N[0][1][1] = r.N[1][0][1] = 1;
    r.N[1][1][0] = 1;  // tau (x) tau = 1 + tau
    r.N[1][1][1] = 1;
    return r;
}

FusionRingData FusionRingData::ising() {
    FusionRingData r;
    r.rank = 3;
    r.labels = {"1", "sigma", "psi"};
    r.dual = {0, 1, 2};
    r.N.assign(3, std::vector<std::vector<int>>(3, std::vector<int>(3, 0)));
    auto set = [&r](int i, int j, int k) { r.N[i][j][k] = 1; };
    for (int i = 0; i < 3; ++i) {
        set(i, 0, i);
        set(0, i, i);
    }
    set(1, 1, 0);  // sigma^2 = 1 + psi
    set(1, 1, 2);
    set(1, 2, 1);  // sigma psi = sigma
    set(2, 1, 1);
    set(2, 2, 0);  // psi^2 = 1
    return r;
}

std::string FusionRingData::to_json() const {
    json j;
    j["labels"] = labels;
    j["dual"] = dual;
    j["N"] = N;
    return j.dump();
}

FusionRingData FusionRingData::from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw FusionError(std::string("invalid fusion ring JSON: ") + e.what());
    }
    FusionRingData r;
    try {
        r.labels = j.at("labels").get<std::vector<std::string>>();
        r.dual = j.at("dual").get<std::vector<int>>();
        r.N = j.at("N").get<std::vector<std::vector<std::vector<int>>>>();
    } catch (const json::exception& e) {
        throw FusionError(std::string("invalid fusion ring JSON: ") + e.what());
    }
    r.rank = static_cast<int>(r.labels.size());
    r.validate();
    return r;
}

// ---------------------------------------------------------------------------
// Quantum dimensions
// ---------------------------------------------------------------------------

QDimVector qdims(const FusionRingData& ring, int q) {
    ring.validate();
    require(q >= 0 && q < ring.rank, "label index out of range");
    const int n = ring.rank;
    // Fusion matrix of q: A[i][k] = N^{qi}_k, so A d = d_q d.  The identity
    // shift keeps the Perron root strictly dominant even when the fusion
    // graph is bipartite (eigenvalue pairs +-r).
    std::vector<std::vector<double>> A(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) A[i][k] = ring.N[q][i][k] + (i == k ? 1.0 : 0.0);

    std::vector<double> v(n, 1.0), w(n, 0.0);
    double rayleigh = 0.0, prev = -1.0;
    int it = 0;
    const int max_it = 100000;
    for (; it < max_it; ++it) {
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) s += A[i][k] * v[k];
            w[i] = s;
        }
        double num = 0.0, den = 0.0;
        for (int i = 0; i < n; ++i) {
            num += w[i] * v[i];
            den += v[i] * v[i];
        }
        rayleigh = num / den;
        double scale = 0.0;
        for (double x : w) scale = std::max(scale, std::abs(x));
        require(scale > 0.0, "fusion matrix of q is nilpotent on the support");
        double change = 0.0;
        for (int i = 0; i < n; ++i) {
            change = std::max(change, std::abs(v[i] - w[i] / scale));
            v[i] = w[i] / scale;
        }
        if (it > 0 && std::abs(rayleigh - prev) < 1e-12 && change < 1e-14) break;
        prev = rayleigh;
    }
    require(it < max_it, "quantum dimension power iteration did not converge");
    require(v[0] > 1e-12, "Perron vector not supported on the unit; fusion matrix not irreducible");

    QDimVector out;
    out.d.resize(n);
    for (int i = 0; i < n; ++i) {
        out.d[i] = v[i] / v[0];
        require(out.d[i] > 0.0, "nonpositive quantum dimension");
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) s += ring.N[i][j][k] * out.d[k];
            out.residual = std::max(out.residual, std::abs(out.d[i] * out.d[j] - s));
        }
    require(out.residual < kTol, "dimension equation residual too large");
    out.ribbon_range_ok = true;
    for (double x : out.d)
        if (std::abs(x - 1.0) > kTol && x < std::sqrt(2.0) - kTol) out.ribbon_range_ok = false;
    return out;
}

// ---------------------------------------------------------------------------
// F-matrices
// ---------------------------------------------------------------------------

std::string fusion_variant_name(FusionVariant v) {
    return v == FusionVariant::Dubrovnik ? "dubrovnik" : "kauffman";
}

QqqFMatrix f_matrix(double d_q, const std::vector<double>& dims, int kappa,
                    FusionVariant variant) {
    require(kappa == 1 || kappa == -1, "kappa must be +1 or -1");
    const int k = static_cast<int>(dims.size());
    require(k <= 2, "only up to two nontrivial summands are supported");
    require(d_q > 0.0, "d_q must be positive");
    double sum = 1.0;
    for (double x : dims) {
        require(x > 0.0, "summand dimensions must be positive");
        sum += x;
    }
    require(std::abs(d_q * d_q - sum) < kTol,
            "dimension constraint d_q^2 = 1 + sum d_x violated");

    QqqFMatrix F;
    F.d_q = d_q;
    F.kappa = kappa;
    F.variant = variant;
    F.d.assign(1, 1.0);
    for (double x : dims) F.d.push_back(x);
    F.M.assign(k + 1, std::vector<double>(k + 1, 0.0));

    if (k == 0) {
        F.M[0][0] = kappa;  // = kappa sqrt(d_0)/d_q with d_q = 1
        return F;
    }
    if (k == 1) {
        const double s = std::sqrt(dims[0]);
        F.M[0][0] = kappa / d_q;
        F.M[0][1] = F.M[1][0] = kappa * s / d_q;
        F.M[1][1] = -kappa / d_q;
        return F;
    }
    require(kappa == 1,
            "antisymmetric self-duality excluded: at two nontrivial summands q must be "
            "symmetrically self-dual, so kappa = -1 is not realizable");
    const double dx = dims[0], dy = dims[1];
    const double sx = std::sqrt(dx), sy = std::sqrt(dy), sxy = std::sqrt(dx * dy);
    F.M[0][0] = 1.0 / d_q;
    F.M[0][1] = F.M[1][0] = sx / d_q;
    F.M[0][2] = F.M[2][0] = sy / d_q;
    if (variant == FusionVariant::Dubrovnik) {
        const double den = (d_q - 1.0) * d_q;
        F.M[1][1] = 1.0 - dx / den;
        F.M[1][2] = F.M[2][1] = -sxy / den;
        F.M[2][2] = 1.0 - dy / den;
    } else {
        const double den = (d_q + 1.0) * d_q;
        F.M[1][1] = dx / den - 1.0;
        F.M[1][2] = F.M[2][1] = sxy / den;
        F.M[2][2] = dy / den - 1.0;
    }
    return F;
}

// ---------------------------------------------------------------------------
// Jacobi eigensolver
// ---------------------------------------------------------------------------

SymEigen jacobi_eigen(std::vector<std::vector<double>> m) {
    const int n = static_cast<int>(m.size());
    std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) v[i][i] = 1.0;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += m[p][q] * m[p][q];
        if (off < 1e-24) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(m[p][q]) < 1e-15) continue;
                const double theta = (m[q][q] - m[p][p]) / (2.0 * m[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
                for (int i = 0; i < n; ++i) {
                    const double mip = m[i][p], miq = m[i][q];
                    m[i][p] = c * mip - s * miq;
                    m[i][q] = s * mip + c * miq;
                }
                for (int i = 0; i < n; ++i) {
                    const double mpi = m[p][i], mqi = m[q][i];
                    m[p][i] = c * mpi - s * mqi;
                    m[q][i] = s * mpi + c * mqi;
                }
                for (int i = 0; i < n; ++i) {
                    const double vip = v[i][p], viq = v[i][q];
                    v[i][p] = c * vip - s * viq;
                    v[i][q] = s * vip + c * viq;
                }
            }
    }
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&m](int a, int b) { return m[a][a] < m[b][b]; });
    SymEigen out;
    out.values.resize(n);
    out.vectors.assign(n, std::vector<double>(n, 0.0));
    for (int c = 0; c < n; ++c) {
        out.values[c] = m[order[c]][order[c]];
        for (int r = 0; r < n; ++r) out.vectors[r][c] = v[r][order[c]];
    }
    return out;
}

// ---------------------------------------------------------------------------
// F-matrix identity verification
// ---------------------------------------------------------------------------

bool FIdentityReport::ok(double tol) const {
    return first_row < tol && column_sum < tol && symmetry < tol && involution < tol &&
           orthogonality < tol && trace_bound && eigen_residual < tol;
}

std::string FIdentityReport::to_json() const {
    json j;
    auto put = [&j](const char* name, double residual, bool pass) {
        j["identities"].push_back({{"name", name}, {"residual", residual}, {"pass", pass}});
    };
    put("first_row", first_row, first_row < kTol);
    put("column_sum", column_sum, column_sum < kTol);
    put("symmetry", symmetry, symmetry < kTol);
    put("involution", involution, involution < kTol);
    put("orthogonality", orthogonality, orthogonality < kTol);
    put("eigenvalues_pm1", eigen_residual, eigen_residual < kTol);
    j["trace"] = trace;
    j["trace_bound_ok"] = trace_bound;
    j["multiplicity_plus"] = mult_plus;
    j["multiplicity_minus"] = mult_minus;
    j["pass"] = ok();
    return j.dump();
}

FIdentityReport verify_f_identities(const QqqFMatrix& F) {
    const int n = static_cast<int>(F.size());
    FIdentityReport r;
    for (int l = 0; l < n; ++l) {
        r.first_row = std::max(
            r.first_row, std::abs(F.M[0][l] - F.kappa * std::sqrt(F.d[l]) / F.d_q));
        double s = 0.0;
        for (int rho = 0; rho < n; ++rho)
            s += std::sqrt(F.d[rho]) / F.d_q * F.M[rho][l];
        r.column_sum = std::max(r.column_sum, std::abs(F.kappa * s - (l == 0 ? 1.0 : 0.0)));
    }
    for (int i = 0; i < n; ++i) {
        r.trace += F.M[i][i];
        for (int j = 0; j < n; ++j) {
            r.symmetry = std::max(r.symmetry, std::abs(F.M[i][j] - F.M[j][i]));
            double sq = 0.0, ortho = 0.0;
            for (int l = 0; l < n; ++l) {
                sq += F.M[i][l] * F.M[l][j];
                ortho += F.M[l][i] * F.M[l][j];
            }
            const double target = (i == j ? 1.0 : 0.0);
            r.involution = std::max(r.involution, std::abs(sq - target));
            r.orthogonality = std::max(r.orthogonality, std::abs(ortho - target));
        }
    }
    r.trace_bound = std::abs(r.trace) < n - kTol;

    std::vector<std::vector<double>> kf(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) kf[i][j] = F.kappa * F.M[i][j];
    SymEigen eig = jacobi_eigen(kf);
    for (double e : eig.values) {
        const double dist = std::min(std::abs(e - 1.0), std::abs(e + 1.0));
        r.eigen_residual = std::max(r.eigen_residual, dist);
        if (std::abs(e - 1.0) < 1e-6)
            ++r.mult_plus;
        else if (std::abs(e + 1.0) < 1e-6)
            ++r.mult_minus;
    }
    return r;
}

// ---------------------------------------------------------------------------
// End(q (x) q) in jack coordinates
// ---------------------------------------------------------------------------

EndQ2Element EndQ2Element::zero(const QqqFMatrix& F) {
    EndQ2Element x;
    x.d_q = F.d_q;
    x.d = F.d;
    x.c.assign(F.size(), 0.0);
    return x;
}

EndQ2Element EndQ2Element::jack(const QqqFMatrix& F, int lambda) {
    if (lambda < 0 || lambda >= static_cast<int>(F.size()))
        throw FusionError("jack index out of range");
    EndQ2Element x = zero(F);
    x.c[lambda] = 1.0;
    return x;
}

EndQ2Element EndQ2Element::identity(const QqqFMatrix& F) {
    EndQ2Element x = zero(F);
    for (std::size_t l = 0; l < F.size(); ++l) x.c[l] = std::sqrt(F.d[l]) / F.d_q;
    return x;
}

EndQ2Element EndQ2Element::projector(const QqqFMatrix& F, int lambda) {
    EndQ2Element x = jack(F, lambda);
    x.c[lambda] = std::sqrt(F.d[lambda]) / F.d_q;
    return x;
}

static void check_same_space(const EndQ2Element& x, const EndQ2Element& y) {
    if (x.c.size() != y.c.size() || std::abs(x.d_q - y.d_q) > kTol)
        throw FusionError("End(q^2) elements live in different spaces");
}

EndQ2Element EndQ2Element::operator+(const EndQ2Element& o) const {
    check_same_space(*this, o);
    EndQ2Element r = *this;
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    return r;
}

EndQ2Element EndQ2Element::operator-(const EndQ2Element& o) const {
    check_same_space(*this, o);
    EndQ2Element r = *this;
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
    return r;
}

EndQ2Element EndQ2Element::scaled(double s) const {
    EndQ2Element r = *this;
    for (double& x : r.c) x *= s;
    return r;
}

double EndQ2Element::norm() const {
    double s = 0.0;
    for (double x : c) s += x * x;
    return std::sqrt(s);
}

double distance(const EndQ2Element& x, const EndQ2Element& y) {
    check_same_space(x, y);
    double m = 0.0;
    for (std::size_t i = 0; i < x.c.size(); ++i)
        m = std::max(m, std::abs(x.c[i] - y.c[i]));
    return m;
}

EndQ2Element compose(const EndQ2Element& x, const EndQ2Element& y) {
    check_same_space(x, y);
    EndQ2Element r = x;
    for (std::size_t l = 0; l < x.c.size(); ++l)
        r.c[l] = x.c[l] * y.c[l] * x.d_q / std::sqrt(x.d[l]);
    return r;
}

double qtrace(const EndQ2Element& x) {
    double s = 0.0;
    for (std::size_t l = 0; l < x.c.size(); ++l) s += x.c[l] * x.d_q * std::sqrt(x.d[l]);
    return s;
}

EndQ2Element rotate(const EndQ2Element& x, const QqqFMatrix& F) {
    if (x.c.size() != F.size()) throw FusionError("element does not match the F-matrix");
    EndQ2Element r = EndQ2Element::zero(F);
    for (std::size_t i = 0; i < F.size(); ++i)
        for (std::size_t j = 0; j < F.size(); ++j)
            r.c[i] += F.kappa * F.M[i][j] * x.c[j];
    return r;
}

EndQ2Element bone_in_jacks(int lambda, const QqqFMatrix& F) {
    return rotate(EndQ2Element::jack(F, lambda), F);
}

double nu_factor(double d_x, double d_y, double d_z) {
    return std::pow(d_z / (d_x * d_y), 0.25);
}

double theta_net(double d_x, double d_y, double d_z) {
    return std::sqrt(d_x * d_y * d_z);
}

// ---------------------------------------------------------------------------
// Skein-parameter consistency
// ---------------------------------------------------------------------------

using cplx = std::complex<double>;

static void require_unit(cplx z, const char* name) {
    require(std::abs(std::abs(z) - 1.0) < kTol,
            std::string(name) + " must be a complex number of modulus 1");
}

K1Report skein_consistency_k1(cplx beta, int kappa) {
    require(kappa == 1 || kappa == -1, "kappa must be +1 or -1");
    require_unit(beta, "beta");
    K1Report r;
    r.alpha = -1.0 / (beta * beta * beta);
    r.theta = double(kappa) / r.alpha;
    const cplx dq = -double(kappa) * (beta * beta + 1.0 / (beta * beta));
    require(std::abs(dq.imag()) < kTol, "d_q is not real");
    r.d_q = dq.real();
    require(r.d_q > 0.0, "d_q is not positive for this (beta, kappa)");
    require(std::abs(r.d_q - 1.0) < kTol || r.d_q >= std::sqrt(2.0) - kTol,
            "d_q falls outside {1} U [sqrt(2), inf)");
    // Twist formula theta = (1/d_q) sum_k R^{qq}_k d_k with R = diag(alpha, beta)
    // and d_x = d_q^2 - 1.
    const cplx via_r = (r.alpha + beta * (r.d_q * r.d_q - 1.0)) / r.d_q;
    r.twist_residual = std::abs(r.theta - via_r);
    return r;
}

K2Report skein_consistency_k2(cplx alpha, cplx beta, cplx gamma, int kappa) {
    require(kappa == 1 || kappa == -1, "kappa must be +1 or -1");
    require_unit(alpha, "alpha");
    require_unit(beta, "beta");
    require_unit(gamma, "gamma");
    require(std::abs(beta - gamma) > kTol, "beta and gamma must be distinct");

    K2Report r;
    r.kappa = kappa;
    const cplx bg = beta * gamma;
    if (std::abs(bg + 1.0) < kTol)
        r.variant = FusionVariant::Dubrovnik;
    else if (std::abs(bg - 1.0) < kTol)
        r.variant = FusionVariant::Kauffman;
    else
        throw FusionError("beta*gamma must be -1 (Dubrovnik family) or +1 (Kauffman family)");

    const cplx z = beta + gamma;
    if (std::abs(z) < kTol) {
        r.degenerate = true;
        const bool dub = r.variant == FusionVariant::Dubrovnik;
        r.degenerate_class = dub ? "pm1" : "pmi";
        auto in_set = [dub](cplx w) {
            return dub ? (std::abs(w - 1.0) < kTol || std::abs(w + 1.0) < kTol)
                       : (std::abs(w - cplx(0, 1)) < kTol || std::abs(w + cplx(0, 1)) < kTol);
        };
        require(in_set(alpha) && in_set(beta) && in_set(gamma),
                dub ? "degenerate D=0 family requires alpha, beta, gamma in {+1,-1}"
                    : "degenerate K=0 family requires alpha, beta, gamma in {+i,-i}");
        return r;
    }

    // d_q three ways: the closed form in z = beta + gamma, and the case forms
    // in gamma and in beta separately (equal to z exactly, up to roundoff).
    const cplx ai = 1.0 / alpha;
    auto dq_from = [&](cplx w) {
        if (r.variant == FusionVariant::Dubrovnik)
            return double(kappa) * ((ai - alpha) / w + 1.0);
        return double(kappa) * ((ai + alpha) / w - 1.0);
    };
    const cplx w_gamma = r.variant == FusionVariant::Dubrovnik ? gamma - 1.0 / gamma
                                                               : gamma + 1.0 / gamma;
    const cplx w_beta = r.variant == FusionVariant::Dubrovnik ? beta - 1.0 / beta
                                                              : beta + 1.0 / beta;
    const cplx d1 = dq_from(z), d2 = dq_from(w_gamma), d3 = dq_from(w_beta);
    r.residual = std::max({std::abs(d1 - d2), std::abs(d1 - d3), std::abs(d2 - d3),
                           std::abs(d1.imag())});
    require(r.residual < kTol, "the d_q formulas disagree for this parameter tuple");
    r.d_q = d1.real();
    require(r.d_q > kTol, "d_q is not positive for this parameter tuple");
    return r;
}

// ---------------------------------------------------------------------------
// New bases at k = 2
// ---------------------------------------------------------------------------

bool NewBasesReport::ok(double tol) const {
    const bool dims_ok = variant == FusionVariant::Dubrovnik ? (dim_v1 == 2 && dim_vm1 == 1)
                                                             : (dim_v1 == 1 && dim_vm1 == 2);
    return std::abs(gram_det_normalized) > tol && rotate_plus_residual < tol &&
           v1_residual < tol && vm1_residual < tol && dims_ok;
}

std::string NewBasesReport::to_json() const {
    json j;
    j["variant"] = fusion_variant_name(variant);
    j["gram_det"] = gram_det;
    j["gram_det_normalized"] = gram_det_normalized;
    j["rotate_plus_residual"] = rotate_plus_residual;
    j["v1_residual"] = v1_residual;
    j["vm1_residual"] = vm1_residual;
    j["dim_v1"] = dim_v1;
    j["dim_vm1"] = dim_vm1;
    j["pass"] = ok();
    return j.dump();
}

NewBasesReport new_bases(const QqqFMatrix& F) {
    require(F.k() == 2, "new bases are defined for exactly two nontrivial summands");
    NewBasesReport r;
    r.variant = F.variant;
    const bool dub = F.variant == FusionVariant::Dubrovnik;

    const EndQ2Element jack_x = EndQ2Element::jack(F, 1);
    const EndQ2Element jack_y = EndQ2Element::jack(F, 2);
    const EndQ2Element bone_x = bone_in_jacks(1, F);
    const EndQ2Element bone_y = bone_in_jacks(2, F);
    const EndQ2Element J_x = jack_x + bone_x;
    const EndQ2Element J_y = jack_y + bone_y;
    const EndQ2Element Jp_x = bone_x - jack_x;
    const EndQ2Element Jp_y = bone_y - jack_y;
    const double sx = std::sqrt(F.d[1]), sy = std::sqrt(F.d[2]);
    const EndQ2Element Jplus = J_x.scaled(sx) + Jp_y.scaled(sy);
    const EndQ2Element Jminus = J_x.scaled(sx) - Jp_y.scaled(sy);
    const EndQ2Element id = EndQ2Element::identity(F);
    const EndQ2Element cc = EndQ2Element::cupcap(F);
    const EndQ2Element third = dub ? id + cc : id - cc;

    // Gram determinant of {J+, J-, id +- cupcap} under <u,v> = qtrace(u o v).
    const EndQ2Element basis[3] = {Jplus, Jminus, third};
    double g[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) g[i][j] = qtrace(compose(basis[i], basis[j]));
    r.gram_det = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
                 g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
                 g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
    r.gram_det_normalized = r.gram_det / (g[0][0] * g[1][1] * g[2][2]);

    r.rotate_plus_residual = distance(rotate(Jplus, F), Jminus);

    // Rotation fixes the V_1 spans and negates the V_{-1} spans; the remark's
    // label swap x <-> y is included.
    auto fix_res = [&](const EndQ2Element& u) {
        return distance(rotate(u, F), u) / std::max(1.0, u.norm());
    };
    auto neg_res = [&](const EndQ2Element& u) {
        return distance(rotate(u, F), u.scaled(-1.0)) / std::max(1.0, u.norm());
    };
    if (dub) {
        r.v1_residual = std::max({fix_res(J_x), fix_res(J_y), fix_res(id + cc)});
        r.vm1_residual = std::max(neg_res(Jp_y), neg_res(Jp_x));
    } else {
        r.v1_residual = std::max(fix_res(J_x), fix_res(J_y));
        r.vm1_residual = std::max({neg_res(Jp_y), neg_res(Jp_x), neg_res(id - cc)});
    }

    const FIdentityReport fid = verify_f_identities(F);
    r.dim_v1 = fid.mult_plus;
    r.dim_vm1 = fid.mult_minus;
    return r;
}

}  // namespace skeinlab
