#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "skeinlab/fusion.hpp"

using namespace skeinlab;

namespace {

const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;

EndQ2Element random_element(std::mt19937& rng, const QqqFMatrix& F) {
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    EndQ2Element x = EndQ2Element::zero(F);
    for (double& c : x.c) c = coeff(rng);
    return x;
}

QqqFMatrix random_k2(std::mt19937& rng, FusionVariant v) {
    std::uniform_real_distribution<double> dim(0.3, 9.0);
    const double dx = dim(rng), dy = dim(rng);
    return f_matrix(std::sqrt(1.0 + dx + dy), {dx, dy}, 1, v);
}

}  // namespace

TEST_CASE("fusion ring validation") {
    CHECK_NOTHROW(FusionRingData::trivial().validate());
    CHECK_NOTHROW(FusionRingData::fibonacci().validate());
    CHECK_NOTHROW(FusionRingData::ising().validate());
    CHECK(FusionRingData::ising().multiplicity_free());

    FusionRingData bad = FusionRingData::ising();
    bad.N[1][2][1] = 0;  // sigma psi = psi breaks associativity of (ss)p
    bad.N[1][2][2] = 1;
    CHECK_THROWS_AS(bad.validate(), FusionError);

    FusionRingData bad2 = FusionRingData::ising();
    bad2.dual = {0, 2, 1};  // psi* = sigma contradicts N^{ij}_0
    CHECK_THROWS_AS(bad2.validate(), FusionError);
}

TEST_CASE("fusion ring json round-trip") {
    for (const auto& ring : {FusionRingData::trivial(), FusionRingData::fibonacci(),
                             FusionRingData::ising()}) {
        FusionRingData back = FusionRingData::from_json(ring.to_json());
        CHECK(back.labels == ring.labels);
        CHECK(back.dual == ring.dual);
        CHECK(back.N == ring.N);
    }
    CHECK_THROWS_AS(FusionRingData::from_json("not json"), FusionError);
    CHECK_THROWS_AS(FusionRingData::from_json("{\"labels\": [\"1\"]}"), FusionError);
}

TEST_CASE("quantum dimensions") {
    QDimVector fib = qdims(FusionRingData::fibonacci(), 1);
    CHECK(fib.d[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fib.d[1] == doctest::Approx(kPhi).epsilon(1e-10));
    CHECK(fib.residual < 1e-9);
    CHECK(fib.ribbon_range_ok);

    QDimVector ising = qdims(FusionRingData::ising(), 1);
    CHECK(ising.d[1] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
    CHECK(ising.d[2] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(ising.ribbon_range_ok);

    CHECK(qdims(FusionRingData::trivial(), 0).d == std::vector<double>{1.0});
    CHECK_THROWS_AS(qdims(FusionRingData::ising(), 7), FusionError);
}

TEST_CASE("closed-form f-matrices at k <= 1") {
    QqqFMatrix k0 = f_matrix(1.0, {}, 1);
    CHECK(k0.M[0][0] == doctest::Approx(1.0));
    CHECK(f_matrix(1.0, {}, -1).M[0][0] == doctest::Approx(-1.0));

    const double s2 = std::sqrt(2.0);
    QqqFMatrix ising = f_matrix(s2, {1.0}, 1);
    CHECK(ising.M[0][0] == doctest::Approx(1.0 / s2).epsilon(1e-12));
    CHECK(ising.M[0][1] == doctest::Approx(1.0 / s2).epsilon(1e-12));
    CHECK(ising.M[1][0] == doctest::Approx(1.0 / s2).epsilon(1e-12));
    CHECK(ising.M[1][1] == doctest::Approx(-1.0 / s2).epsilon(1e-12));

    QqqFMatrix fib = f_matrix(kPhi, {kPhi}, 1);
    CHECK(fib.M[0][0] == doctest::Approx(1.0 / kPhi).epsilon(1e-12));
    CHECK(fib.M[0][1] == doctest::Approx(std::pow(kPhi, -0.5)).epsilon(1e-12));
    CHECK(fib.M[1][1] == doctest::Approx(-1.0 / kPhi).epsilon(1e-12));

    CHECK_THROWS_AS(f_matrix(2.0, {1.0}, 1), FusionError);     // d_q^2 != 1 + d_x
    CHECK_THROWS_AS(f_matrix(kPhi, {kPhi}, 0), FusionError);   // bad kappa
    CHECK_THROWS_AS(f_matrix(0.5, {}, 1), FusionError);        // k=0 needs d_q=1
}

TEST_CASE("closed-form f-matrix at k = 2") {
    QqqFMatrix F = f_matrix(2.0, {2.0, 1.0}, 1, FusionVariant::Dubrovnik);
    const double h = 0.5, s = std::sqrt(2.0) / 2.0;
    const double expect[3][3] = {{h, s, h}, {s, 0.0, -s}, {h, -s, h}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(F.M[i][j] == doctest::Approx(expect[i][j]).epsilon(1e-12));

    // Antisymmetric self-duality is excluded at two summands.
    CHECK_THROWS_AS(f_matrix(2.0, {2.0, 1.0}, -1, FusionVariant::Dubrovnik), FusionError);
    CHECK_THROWS_AS(f_matrix(2.0, {2.0, 1.0}, -1, FusionVariant::Kauffman), FusionError);
}

TEST_CASE("f-matrix identities: concrete cases") {
    FIdentityReport fib = verify_f_identities(f_matrix(kPhi, {kPhi}, 1));
    CHECK(fib.ok(1e-10));
    CHECK(fib.mult_plus == 1);
    CHECK(fib.mult_minus == 1);

    FIdentityReport dub =
        verify_f_identities(f_matrix(2.0, {2.0, 1.0}, 1, FusionVariant::Dubrovnik));
    CHECK(dub.ok(1e-10));
    CHECK(dub.trace == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(dub.mult_plus == 2);
    CHECK(dub.mult_minus == 1);

    FIdentityReport kau =
        verify_f_identities(f_matrix(2.0, {2.0, 1.0}, 1, FusionVariant::Kauffman));
    CHECK(kau.ok(1e-10));
    CHECK(kau.trace == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(kau.mult_plus == 1);
    CHECK(kau.mult_minus == 2);
}

TEST_CASE("f-matrix identity battery over random dimensions") {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> dim(0.3, 9.0);
    for (int it = 0; it < 1000; ++it) {
        FIdentityReport rep;
        double trace_target;
        if (it % 3 == 0) {
            const double dx = dim(rng);
            rep = verify_f_identities(f_matrix(std::sqrt(1.0 + dx), {dx}, it % 2 ? 1 : -1));
            trace_target = 0.0;
        } else {
            FusionVariant v = it % 2 ? FusionVariant::Dubrovnik : FusionVariant::Kauffman;
            rep = verify_f_identities(random_k2(rng, v));
            trace_target = v == FusionVariant::Dubrovnik ? 1.0 : -1.0;
        }
        REQUIRE(rep.ok(1e-10));
        REQUIRE(std::abs(rep.trace - trace_target) < 1e-10);
    }
}

TEST_CASE("jacobi eigensolver sanity") {
    SymEigen e = jacobi_eigen({{2.0, 1.0}, {1.0, 2.0}});
    CHECK(e.values[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(e.values[1] == doctest::Approx(3.0).epsilon(1e-12));
    // Columns are eigenvectors: A v = lambda v.
    for (int c = 0; c < 2; ++c) {
        const double v0 = e.vectors[0][c], v1 = e.vectors[1][c];
        CHECK(2.0 * v0 + v1 == doctest::Approx(e.values[c] * v0).epsilon(1e-10));
        CHECK(v0 + 2.0 * v1 == doctest::Approx(e.values[c] * v1).epsilon(1e-10));
    }
}

TEST_CASE("compose, qtrace and projectors") {
    std::mt19937 rng(7);
    for (int it = 0; it < 40; ++it) {
        QqqFMatrix F = random_k2(rng, it % 2 ? FusionVariant::Dubrovnik
                                             : FusionVariant::Kauffman);
        const EndQ2Element cc = EndQ2Element::cupcap(F);
        CHECK(distance(compose(cc, cc), cc.scaled(F.d_q)) < 1e-12);
        CHECK(qtrace(cc) == doctest::Approx(F.d_q).epsilon(1e-12));

        const EndQ2Element id = EndQ2Element::identity(F);
        CHECK(qtrace(id) == doctest::Approx(F.d_q * F.d_q).epsilon(1e-10));

        EndQ2Element sum = EndQ2Element::zero(F);
        for (int l = 0; l < 3; ++l) {
            EndQ2Element p = EndQ2Element::projector(F, l);
            CHECK(distance(compose(p, p), p) < 1e-10);  // idempotent
            CHECK(qtrace(p) == doctest::Approx(F.d[l]).epsilon(1e-10));
            sum = sum + p;
        }
        CHECK(distance(sum, id) < 1e-12);  // identity decomposition

        // Orthogonality of distinct jacks and completeness on a random element.
        CHECK(compose(EndQ2Element::jack(F, 1), EndQ2Element::jack(F, 2)).norm() < 1e-12);
        EndQ2Element x = random_element(rng, F);
        CHECK(distance(compose(id, x), x) < 1e-10);
        CHECK(distance(compose(x, id), x) < 1e-10);
    }
}

TEST_CASE("rotation is an involution and an isometry") {
    std::mt19937 rng(11);
    for (int it = 0; it < 40; ++it) {
        QqqFMatrix F = it % 3 == 0
                           ? f_matrix(std::sqrt(1.0 + 3.7), {3.7}, it % 2 ? 1 : -1)
                           : random_k2(rng, it % 2 ? FusionVariant::Dubrovnik
                                                   : FusionVariant::Kauffman);
        EndQ2Element x = random_element(rng, F), y = random_element(rng, F);
        CHECK(distance(rotate(rotate(x, F), F), x) < 1e-10);
        CHECK(qtrace(compose(rotate(x, F), rotate(y, F))) ==
              doctest::Approx(qtrace(compose(x, y))).epsilon(1e-9));
        // Rotation swaps the identity and the cup-cap element.
        CHECK(distance(rotate(EndQ2Element::identity(F), F),
                       EndQ2Element::cupcap(F).scaled(F.kappa == 1 ? 1.0 : 1.0)) < 1e-10);
    }
}

TEST_CASE("bones expanded over jacks") {
    // lambda = 0 reproduces the identity decomposition.
    QqqFMatrix fib = f_matrix(kPhi, {kPhi}, 1);
    CHECK(distance(bone_in_jacks(0, fib), EndQ2Element::identity(fib)) < 1e-12);
    EndQ2Element bx = bone_in_jacks(1, fib);
    CHECK(bx.c[0] == doctest::Approx(std::sqrt(kPhi) / kPhi).epsilon(1e-12));
    CHECK(bx.c[1] == doctest::Approx(-1.0 / kPhi).epsilon(1e-12));

    QqqFMatrix dub = f_matrix(2.0, {2.0, 1.0}, 1, FusionVariant::Dubrovnik);
    EndQ2Element b = bone_in_jacks(1, dub);
    CHECK(b.c[0] == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-12));
    CHECK(b.c[1] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(b.c[2] == doctest::Approx(-std::sqrt(2.0) / 2.0).epsilon(1e-12));
}

TEST_CASE("pretzel trace identity") {
    std::mt19937 rng(13);
    for (int it = 0; it < 30; ++it) {
        QqqFMatrix F = random_k2(rng, it % 2 ? FusionVariant::Dubrovnik
                                             : FusionVariant::Kauffman);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                const double lhs = qtrace(compose(bone_in_jacks(j, F), EndQ2Element::jack(F, i)));
                CHECK(lhs == doctest::Approx(F.kappa * F.d_q * F.d_q * F.M[i][j])
                                 .epsilon(1e-9));
            }
    }
}

TEST_CASE("vertex normalization") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> dim(0.2, 12.0);
    for (int it = 0; it < 100; ++it) {
        const double dx = dim(rng), dy = dim(rng), dz = dim(rng);
        const double nu = nu_factor(dx, dy, dz);
        CHECK(nu * nu * theta_net(dx, dy, dz) == doctest::Approx(dz).epsilon(1e-10));
    }
}

TEST_CASE("k=1 skein consistency") {
    using namespace std::complex_literals;
    K1Report fib = skein_consistency_k1(std::polar(1.0, 2.0 * M_PI / 5.0), 1);
    CHECK(fib.d_q == doctest::Approx(kPhi).epsilon(1e-12));
    CHECK(fib.twist_residual < 1e-12);

    K1Report ising = skein_consistency_k1(std::polar(1.0, 3.0 * M_PI / 8.0), 1);
    CHECK(ising.d_q == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(ising.twist_residual < 1e-12);

    // Twin counterpart: kappa = -1 flips the sign of beta^2 + beta^-2.
    K1Report twin = skein_consistency_k1(std::polar(1.0, M_PI / 8.0), -1);
    CHECK(twin.d_q == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(twin.twist_residual < 1e-12);

    // beta^2 + beta^-2 > 0 with kappa = 1 makes d_q negative.
    CHECK_THROWS_AS(skein_consistency_k1(std::polar(1.0, M_PI / 8.0), 1), FusionError);
    CHECK_THROWS_AS(skein_consistency_k1(2.0 + 0.0i, 1), FusionError);
    CHECK_THROWS_AS(skein_consistency_k1(std::polar(1.0, 2.0 * M_PI / 5.0), 3), FusionError);
}

TEST_CASE("k=2 skein consistency over random admissible tuples") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> angle(-M_PI, M_PI);
    std::uniform_int_distribution<int> pick(0, 3);
    int accepted = 0;
    while (accepted < 100) {
        const int c = pick(rng);
        const bool dub_family = c == 0 || c == 2;
        const int kappa = c < 2 ? 1 : -1;
        const double aa = angle(rng), ab = angle(rng);
        const std::complex<double> alpha = std::polar(1.0, aa);
        const std::complex<double> beta = std::polar(1.0, ab);
        const std::complex<double> gamma = dub_family ? -1.0 / beta : 1.0 / beta;
        if (std::abs(beta - gamma) < 1e-3) continue;
        const std::complex<double> z = beta + gamma;
        if (std::abs(z) < 1e-3) continue;
        const std::complex<double> quot =
            dub_family ? (1.0 / alpha - alpha) / z : (1.0 / alpha + alpha) / z;
        const double expect = kappa * (quot.real() + (dub_family ? 1.0 : -1.0));
        if (expect < 0.1) continue;

        K2Report rep = skein_consistency_k2(alpha, beta, gamma, kappa);
        REQUIRE(!rep.degenerate);
        REQUIRE(rep.variant ==
                (dub_family ? FusionVariant::Dubrovnik : FusionVariant::Kauffman));
        REQUIRE(rep.d_q == doctest::Approx(expect).epsilon(1e-9));
        REQUIRE(rep.residual < 1e-9);
        ++accepted;
    }
}

TEST_CASE("k=2 skein consistency: degenerate and invalid tuples") {
    using C = std::complex<double>;
    K2Report d0 = skein_consistency_k2(C(1), C(1), C(-1), 1);
    CHECK(d0.degenerate);
    CHECK(d0.degenerate_class == "pm1");
    CHECK(d0.variant == FusionVariant::Dubrovnik);

    K2Report k0 = skein_consistency_k2(C(0, 1), C(0, 1), C(0, -1), -1);
    CHECK(k0.degenerate);
    CHECK(k0.degenerate_class == "pmi");
    CHECK(k0.variant == FusionVariant::Kauffman);

    // beta*gamma off the unit pair, and a degenerate tuple with alpha outside
    // the allowed set.
    CHECK_THROWS_AS(skein_consistency_k2(C(1), std::polar(1.0, 0.3), std::polar(1.0, 0.4), 1),
                    FusionError);
    CHECK_THROWS_AS(skein_consistency_k2(C(0, 1), C(1), C(-1), 1), FusionError);
}

TEST_CASE("new bases at k = 2") {
    QqqFMatrix dub = f_matrix(2.0, {2.0, 1.0}, 1, FusionVariant::Dubrovnik);
    NewBasesReport rd = new_bases(dub);
    CHECK(rd.ok());
    CHECK(rd.dim_v1 == 2);
    CHECK(rd.dim_vm1 == 1);

    QqqFMatrix kau = f_matrix(2.0, {2.0, 1.0}, 1, FusionVariant::Kauffman);
    NewBasesReport rk = new_bases(kau);
    CHECK(rk.ok());
    CHECK(rk.dim_v1 == 1);
    CHECK(rk.dim_vm1 == 2);

    // Label swap x <-> y keeps the eigenspace dimensions.
    NewBasesReport swapped =
        new_bases(f_matrix(2.0, {1.0, 2.0}, 1, FusionVariant::Dubrovnik));
    CHECK(swapped.ok());
    CHECK(swapped.dim_v1 == 2);
    CHECK(swapped.dim_vm1 == 1);

    std::mt19937 rng(29);
    for (int it = 0; it < 50; ++it) {
        FusionVariant v = it % 2 ? FusionVariant::Dubrovnik : FusionVariant::Kauffman;
        NewBasesReport rep = new_bases(random_k2(rng, v));
        REQUIRE(rep.ok());
    }

    CHECK_THROWS_AS(new_bases(f_matrix(kPhi, {kPhi}, 1)), FusionError);
}
