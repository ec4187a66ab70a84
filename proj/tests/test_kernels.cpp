#include "centilink/kernels.hpp"

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "centilink/centrality.hpp"
#include "doctest.h"
#include "testutil.hpp"

using namespace centilink;

namespace {

std::vector<double> random_values(std::mt19937& rng, std::size_t n) {
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  std::vector<double> v(n);
  for (double& x : v) x = dist(rng);
  return v;
}

}  // namespace

TEST_CASE("scalar kernels compute the expected values") {
  const std::vector<double> x = {1.0, -2.0, 3.0};
  const std::vector<double> y = {0.5, 0.0, -1.0};
  const auto& k = kernels::scalar_kernels();
  CHECK(k.l1_norm(x.data(), x.size()) == doctest::Approx(6.0));
  CHECK(k.l1_distance(x.data(), y.data(), x.size()) == doctest::Approx(0.5 + 2.0 + 4.0));

  std::vector<double> z = x;
  k.scale(z.data(), z.size(), -2.0);
  CHECK(z == std::vector<double>{-2.0, 4.0, -6.0});

  std::vector<double> dst(3);
  k.scale_add(dst.data(), x.data(), 3, 2.0, 1.0);
  CHECK(dst == std::vector<double>{3.0, -3.0, 7.0});

  CHECK(k.l1_norm(nullptr, 0) == 0.0);
}

TEST_CASE("registry always offers the scalar set and a valid active set") {
  const auto sets = kernels::available_kernels();
  REQUIRE(!sets.empty());
  bool has_scalar = false;
  for (const auto* s : sets) has_scalar = has_scalar || std::string_view(s->name) == "scalar";
  CHECK(has_scalar);
  CHECK(kernels::active_kernels().name != nullptr);
  CHECK(!kernels::select_kernels("no-such-isa"));
  CHECK(kernels::select_kernels(kernels::active_kernels().name));
}

TEST_CASE("iterative centrality agrees across kernel variants") {
  std::mt19937 rng(550);
  std::vector<std::pair<std::uint32_t, std::vector<testutil::Edge>>> graphs;
  for (int trial = 0; trial < 25; ++trial) {
    const std::uint32_t n = 2 + rng() % 40;
    graphs.emplace_back(n, testutil::random_edges(rng, n, 0.15));
  }

  const std::string original = kernels::active_kernels().name;
  REQUIRE(kernels::select_kernels("scalar"));
  std::vector<std::vector<double>> pr_ref, hits_ref;
  for (const auto& [n, edges] : graphs) {
    const Digraph g = testutil::make_graph(n, edges);
    pr_ref.push_back(pagerank(g).scores);
    hits_ref.push_back(hits_authority(g).scores);
  }

  for (const auto* variant : kernels::available_kernels()) {
    CAPTURE(variant->name);
    REQUIRE(kernels::select_kernels(variant->name));
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const Digraph g = testutil::make_graph(graphs[i].first, graphs[i].second);
      const auto pr = pagerank(g).scores;
      const auto hits = hits_authority(g).scores;
      for (std::size_t j = 0; j < pr.size(); ++j) {
        CHECK(pr[j] == doctest::Approx(pr_ref[i][j]).epsilon(1e-9));
        CHECK(hits[j] == doctest::Approx(hits_ref[i][j]).epsilon(1e-9));
      }
    }
  }
  REQUIRE(kernels::select_kernels(original));
}

TEST_CASE("every available variant matches the scalar reference") {
  std::mt19937 rng(20240901);
  const auto& scalar = kernels::scalar_kernels();

  for (const auto* variant : kernels::available_kernels()) {
    CAPTURE(variant->name);
    for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 15u, 64u, 257u, 1000u}) {
      const auto x = random_values(rng, n);
      const auto y = random_values(rng, n);

      // Reductions may reassociate; element-wise ops must match bit for bit.
      const double tol = 1e-12 * (1.0 + scalar.l1_norm(x.data(), n));
      CHECK(std::fabs(variant->l1_norm(x.data(), n) - scalar.l1_norm(x.data(), n)) <= tol);
      CHECK(std::fabs(variant->l1_distance(x.data(), y.data(), n) -
                      scalar.l1_distance(x.data(), y.data(), n)) <= tol);

      std::vector<double> a = x, b = x;
      variant->scale(a.data(), n, 0.7331);
      scalar.scale(b.data(), n, 0.7331);
      CHECK(a == b);

      std::vector<double> da(n), db(n);
      variant->scale_add(da.data(), x.data(), n, 0.85, 0.0375);
      scalar.scale_add(db.data(), x.data(), n, 0.85, 0.0375);
      CHECK(da == db);
    }
  }
}
