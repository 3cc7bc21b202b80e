#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "pluri/density.hpp"
#include "pluri/error.hpp"
#include "pluri/fit_solver.hpp"
#include "pluri/kernels.hpp"
#include "pluri/poly_text.hpp"

using namespace pluri;

namespace {

HoloPoly P(const char* s, int nv = 2) { return parse_poly(s, nv); }

PluriharmonicMap re_map(std::initializer_list<const char*> gs, int n = 2) {
  std::vector<PluriharmonicFn> fs;
  for (const char* g : gs) fs.push_back(re_part(P(g, n)));
  return PluriharmonicMap(n, std::move(fs));
}

}  // namespace

TEST_CASE("sample grids") {
  const auto torus = sample_domain({DomainKind::Torus2, 8});
  CHECK(torus.size() == 64);
  for (std::size_t i = 0; i < torus.size(); ++i)
    for (cd c : torus.point(i)) CHECK(std::abs(std::abs(c) - 1.0) < 1e-14);

  const auto disk = sample_domain({DomainKind::ClosedDisk, 8});
  CHECK(disk.dim == 1);
  bool center = false, boundary = false;
  for (std::size_t i = 0; i < disk.size(); ++i) {
    const double r = std::abs(disk.point(i)[0]);
    CHECK(r <= 1.0 + 1e-15);
    center |= r == 0.0;
    boundary |= std::abs(r - 1.0) < 1e-15;
  }
  CHECK(center);
  CHECK(boundary);

  const auto fiber = sample_domain({DomainKind::FiberDisk, 8, 0.0});
  for (std::size_t i = 0; i < fiber.size(); ++i) {
    CHECK(fiber.point(i)[0] == cd(0.0));
    CHECK(std::abs(fiber.point(i)[1]) <= 1.0 + 1e-15);
  }

  SampleDomain face{DomainKind::Face, 16, cd(0.0, 1.0), 1};
  const auto fp = sample_domain(face);
  for (std::size_t i = 0; i < fp.size(); ++i) CHECK(fp.point(i)[1] == cd(0.0, 1.0));

  // deterministic, and validation strictly finer
  for (auto kind : {DomainKind::ClosedBidisk, DomainKind::Torus2, DomainKind::ClosedDisk, DomainKind::FiberDisk}) {
    SampleDomain d{kind, 16};
    const auto a = sample_domain(d), b = sample_domain(d), v = validation_grid(d);
    CHECK(a.coords == b.coords);
    CHECK(v.size() >= 2 * a.size());
    for (std::size_t i = 0; i < v.size(); ++i) CHECK(d.contains(v.point(i)));
  }
}

TEST_CASE("domain membership") {
  const SampleDomain bidisk{DomainKind::ClosedBidisk};
  const cd in[2] = {0.5, cd(0, 1)}, out[2] = {1.1, 0.0};
  CHECK(bidisk.contains(in));
  CHECK(!bidisk.contains(out));
  const SampleDomain torus{DomainKind::Torus2};
  CHECK(!torus.contains(in));
  const cd on[2] = {1.0, cd(0, -1)};
  CHECK(torus.contains(on));
}

TEST_CASE("basis sizes") {
  const PluriharmonicMap coord(1, {holomorphic(P("z1", 1))});
  CHECK(generator_basis(coord, 2).size() == 3);
  CHECK(generator_basis(re_map({"z1"}), 1).size() == 4);
  CHECK(generator_basis(re_map({"z1"}), 2).size() == 10);
  // holomorphic generator equal to a coordinate is deduplicated
  PluriharmonicMap dup(2, {holomorphic(P("z1"))});
  CHECK(generator_basis(dup, 2).size() == 6);
  const auto b = generator_basis(re_map({"z1", "z2^2"}), 4);
  for (std::size_t i = 1; i < b.size(); ++i) CHECK(b.monomials[i - 1].degree <= b.monomials[i].degree);
  CHECK(b.degree_end.back() == b.size());
  CHECK_THROWS_AS(generator_basis(re_map({"z1", "z2"}), 30, 100), Error);
}

TEST_CASE("basis evaluation matches direct products") {
  const auto map = re_map({"z1 z2"});
  const auto basis = generator_basis(map, 4);
  const auto pts = sample_domain({DomainKind::ClosedBidisk, 16});
  const auto vals = evaluate_basis(map, basis, basis.size(), pts);
  const std::size_t m = pts.size();
  for (std::size_t c = 0; c < basis.size(); ++c)
    for (std::size_t i = 0; i < m; i += 7) {
      const auto z = pts.point(i);
      const auto h = map.evaluate(z);
      cd want = 1.0;
      const auto& pw = basis.monomials[c].powers;
      for (int k = 0; k < 2; ++k) want *= std::pow(z[k], int(pw[k]));
      want *= std::pow(h[0], int(pw[2]));
      CHECK(std::abs(vals[c * m + i] - want) < 1e-12);
    }
}

TEST_CASE("conjugate on the circle is bounded away from polynomials") {
  const PluriharmonicMap none(1, {holomorphic(P("z1", 1))});
  const SampleDomain disk{DomainKind::ClosedDisk, 64};
  const auto train = sample_domain(disk), validate = validation_grid(disk);
  const auto t = make_target("conj_z1", none);
  for (int d : {2, 6, 10}) {
    const auto basis = generator_basis(none, d);
    const auto r = fit_residual(none, basis, basis.size(), t, train, validate);
    CHECK(r.sup_residual == doctest::Approx(1.0).epsilon(1e-2));
  }
  // with conj z in the basis the residual vanishes
  const PluriharmonicMap with_conj(1, {re_part(P("z1", 1))});
  const auto basis = generator_basis(with_conj, 2);
  const auto r = fit_residual(with_conj, basis, basis.size(), t, train, validate);
  CHECK(r.train_residual < 1e-10);
  CHECK(r.sup_residual < 1e-10);
}

TEST_CASE("fiber disk stays flat") {
  const auto map = re_map({"z1"});
  const SampleDomain fiber{DomainKind::FiberDisk, 96, 0.0};
  const auto rep = decay_report(map, fiber, {"conj_z2"}, {2, 4, 6, 8, 10, 12}, false);
  for (double s : rep.sup_residuals[0]) CHECK(s >= 0.9);
}

TEST_CASE("monotone training residuals and members") {
  const auto map = re_map({"z1 z2"});
  const SampleDomain bidisk{DomainKind::ClosedBidisk, 32};
  const auto rep = decay_report(map, bidisk, {"conj_z1", "bump", "h1", "z2"}, {1, 2, 3, 4, 5, 6}, false);
  for (std::size_t t = 0; t < 2; ++t)
    for (std::size_t d = 1; d < rep.degrees.size(); ++d)
      CHECK(rep.train_residuals[t][d] <= rep.train_residuals[t][d - 1] * (1 + 1e-9) + 1e-14);
  for (std::size_t t = 2; t < 4; ++t)
    for (std::size_t d = 0; d < rep.degrees.size(); ++d) {
      CHECK(rep.train_residuals[t][d] < 1e-10);
      CHECK(rep.sup_residuals[t][d] < 1e-8);
    }
  for (const auto& row : rep.sup_residuals)
    for (double v : row) CHECK(std::isfinite(v));
  const auto csv = rep.to_csv();
  CHECK(csv.rfind("target,degree,train_residual,sup_residual\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 4 * 6);
}

TEST_CASE("decay on the torus for a separating generator") {
  const auto map = re_map({"z1 + (1/2,1/3) z2"});
  const SampleDomain torus{DomainKind::Torus2, 64};
  const auto rep = decay_report(map, torus, {"conj_z1"}, {2, 4, 6, 8}, true);
  const auto& tr = rep.train_residuals[0];
  for (std::size_t d = 1; d < tr.size(); ++d) CHECK(tr[d] < tr[d - 1]);
  CHECK(rep.sup_residuals[0].back() * 2 <= rep.sup_residuals[0].front());
  for (double s : rep.stability[0]) CHECK(s < 0.1);
}

TEST_CASE("decay report argument checks") {
  const auto map = re_map({"z1"});
  CHECK_THROWS_AS(decay_report(map, {DomainKind::ClosedBidisk, 16}, {"conj_z1"}, {4, 2}), Error);
  CHECK_THROWS_AS(decay_report(map, {DomainKind::FiberDisk, 8}, {"conj_z1"}, {12}), Error);
  CHECK_THROWS_AS(make_target("nope", map), Error);
}

TEST_CASE("separation certificates") {
  const auto graph = sample_domain({DomainKind::ClosedBidisk, 32});
  const SampleDomain bidisk{DomainKind::ClosedBidisk};
  {
    const auto map = re_map({"z1"});
    const cd z[2] = {0.0, 0.0}, w[1] = {1.0};
    const auto out = separation_certificate(map, bidisk, z, w, graph);
    REQUIRE(out.status == CertificateStatus::Certified);
    CHECK(out.certificate->generator == 0);
    CHECK(std::abs(out.certificate->theta) < 1e-6);
    CHECK(out.certificate->margin == doctest::Approx(1.0).epsilon(1e-9));
  }
  {
    const auto map = re_map({"z1"});
    const cd z[2] = {0.5, 0.0}, w[1] = {0.5};
    CHECK(separation_certificate(map, bidisk, z, w, graph).status == CertificateStatus::OnGraph);
    const cd far[2] = {2.0, 0.0};
    CHECK(separation_certificate(map, bidisk, far, w, graph).status == CertificateStatus::OutsideDomain);
  }
  {
    // brute-force phase oracle
    const auto map = re_map({"z1 z2"});
    const cd z[2] = {0.5, 0.5}, w[1] = {cd(0, 1)};
    const auto out = separation_certificate(map, bidisk, z, w, graph);
    REQUIRE(out.status == CertificateStatus::Certified);
    const cd v = w[0] - 0.25;
    double best = -1e300, arg = 0;
    for (int k = 0; k < 4096; ++k) {
      const double th = -std::numbers::pi + 2 * std::numbers::pi * k / 4096;
      const double val = (std::polar(1.0, th) * v).real();
      if (val > best) best = val, arg = th;
    }
    CHECK(out.certificate->value_at_query == doctest::Approx(best).epsilon(1e-6));
    CHECK(std::abs(out.certificate->theta - arg) < 2e-3);
    CHECK(out.certificate->margin == doctest::Approx(std::sqrt(17.0) / 4).epsilon(1e-9));

    // soundness on fresh graph samples
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int s = 0; s < 10000; ++s) {
      cd q[2];
      for (cd& c : q) {
        do c = {u(rng), u(rng)};
        while (std::abs(c) > 1);
      }
      const auto h = map.evaluate(q);
      CHECK(out.certificate->evaluate(map, q, h) < out.certificate->value_at_query);
    }
  }
  {
    // several generators: the best separating one wins
    const auto map = re_map({"z1", "z2"});
    const cd z[2] = {0.0, 0.0}, w[2] = {0.1, cd(0, 3)};
    const auto out = separation_certificate(map, bidisk, z, w, graph);
    REQUIRE(out.status == CertificateStatus::Certified);
    CHECK(out.certificate->generator == 1);
    CHECK(out.certificate->margin == doctest::Approx(3.0));
  }
}

TEST_CASE("dense solver variants agree") {
  using pluri::detail::cd;
  if (!pluri::kernels::avx2_available()) return;
  std::mt19937_64 rng(7);
  std::normal_distribution<double> nd;
  for (std::size_t p : {1u, 17u, 120u}) {
    const std::size_t m = 3 * p + 5, t = 3;
    std::vector<cd> a(m * p), b(m * t);
    for (auto& v : a) v = cd(nd(rng), nd(rng));
    for (auto& v : b) v = cd(nd(rng), nd(rng));
    if (p > 1)  // a repeated column exercises the rank cut
      std::copy(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(m), a.begin() + static_cast<std::ptrdiff_t>(m));
    auto a1 = a, a2 = a, b1 = b, b2 = b;
    std::vector<cd> x1(p * t), x2(p * t);
    std::vector<double> r1(t), r2(t);
    const int k1 = pluri::detail::scalar_solver::solve(a1.data(), m, p, b1.data(), t, 1e-10, x1.data(), r1.data());
    const int k2 = pluri::detail::avx2_solver::solve(a2.data(), m, p, b2.data(), t, 1e-10, x2.data(), r2.data());
    CHECK(k1 == k2);
    CHECK(k1 == static_cast<int>(p > 1 ? p - 1 : p));
    for (std::size_t i = 0; i < x1.size(); ++i) CHECK(std::abs(x1[i] - x2[i]) < 1e-10);
    for (std::size_t j = 0; j < t; ++j) CHECK(std::abs(r1[j] - r2[j]) < 1e-9 * std::max(1.0, r1[j]));
  }
}
