#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "eqgen/partitions.hpp"

using namespace eqgen;

TEST_CASE("enumeration counts and order") {
  CHECK(enumerate_partitions(0).size() == 1);
  CHECK(enumerate_partitions(0)[0].parts().empty());
  CHECK(enumerate_partitions(4).size() == 5);
  CHECK(enumerate_partitions(5).size() == 7);

  // decreasing lexicographic, no repeats
  auto ps = enumerate_partitions(6);
  CHECK(ps.size() == 11);
  for (std::size_t i = 1; i < ps.size(); ++i) CHECK(ps[i - 1].parts() > ps[i].parts());
  CHECK(ps.front().parts() == std::vector<int>{6});
  CHECK(ps.back().parts() == std::vector<int>(6, 1));

  for (int n = 0; n <= 10; ++n)
    CHECK(mpz_class(static_cast<long>(enumerate_partitions(n).size())) == partition_count(n));
}

TEST_CASE("multipartition enumeration") {
  CHECK(enumerate_multipartitions(1, 3).size() == 3);
  auto e20 = enumerate_multipartitions(2, 0);
  REQUIRE(e20.size() == 1);
  CHECK(e20[0].components()[0].parts().empty());
  CHECK(e20[0].components()[1].parts().empty());
  CHECK(enumerate_multipartitions(2, 3).size() == 10);

  // generating-function oracle: #tuples(N,k) = [x^k] (sum_a p(a) x^a)^N
  for (int N = 1; N <= 3; ++N) {
    for (int k = 0; k <= 6; ++k) {
      std::vector<mpz_class> acc(k + 1);
      acc[0] = 1;
      for (int rep = 0; rep < N; ++rep) {
        std::vector<mpz_class> nx(k + 1);
        for (int a = 0; a <= k; ++a)
          for (int b = 0; a + b <= k; ++b) nx[a + b] += partition_count(a) * acc[b];
        acc = nx;
      }
      CHECK(mpz_class(static_cast<long>(enumerate_multipartitions(N, k).size())) == acc[k]);
    }
  }
}

TEST_CASE("transpose") {
  CHECK(Partition().transpose() == Partition());
  CHECK(Partition({2, 1}).transpose() == Partition({2, 1}));
  CHECK(Partition({3, 1}).transpose() == Partition({2, 1, 1}));
  for (int n = 0; n <= 12; ++n)
    for (const auto& mu : enumerate_partitions(n)) CHECK(mu.transpose().transpose() == mu);
}

TEST_CASE("cell statistics") {
  Partition one({1});
  CHECK(one.arm({1, 1}) == 0);
  CHECK(one.leg({1, 1}) == 0);
  CHECK(one.hook({1, 1}) == 1);

  auto hooks = [](const Partition& mu) {
    std::multiset<int> h;
    for (Cell e : mu.cells()) h.insert(mu.hook(e));
    return h;
  };
  CHECK(hooks(Partition({2, 1})) == std::multiset<int>{1, 1, 3});
  CHECK(hooks(Partition({2, 2})) == std::multiset<int>{1, 2, 2, 3});

  CHECK_THROWS(Partition({2, 1}).arm({2, 2}));

  for (int n = 0; n <= 12; ++n)
    for (const auto& mu : enumerate_partitions(n))
      for (Cell e : mu.cells()) CHECK(mu.hook(e) == mu.arm(e) + mu.leg(e) + 1);
}

TEST_CASE("kappa") {
  CHECK(Partition().kappa() == 0);
  CHECK(Partition({2}).kappa() == 2);
  CHECK(Partition({1, 1}).kappa() == -2);
  CHECK(Partition({3, 1}).kappa() == 4);

  for (int n = 0; n <= 12; ++n) {
    for (const auto& mu : enumerate_partitions(n)) {
      // second closed form: |mu| + sum(mu_i^2 - 2 i mu_i)
      long alt = mu.size();
      for (int i = 1; i <= mu.length(); ++i) {
        long mi = mu.part(i);
        alt += mi * mi - 2 * i * mi;
      }
      CHECK(mu.kappa() == alt);
      CHECK(mu.kappa() % 2 == 0);
      CHECK(mu.transpose().kappa() == -mu.kappa());
    }
  }
}

TEST_CASE("cycle type statistics") {
  CHECK(Partition(std::vector<int>(5, 1)).z_order() == 120);
  CHECK(Partition({7}).z_order() == 7);
  CHECK(Partition({2, 1}).z_order() == 2);

  // class equation: sum over |mu|=n of n!/z_mu = n!
  for (int n = 0; n <= 10; ++n) {
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), n);
    mpq_class total = 0;
    for (const auto& mu : enumerate_partitions(n)) {
      int sz = 0;
      for (const auto& [v, m] : mu.multiplicities()) sz += v * m;
      CHECK(sz == mu.size());
      total += mpq_class(fact) / mpq_class(mu.z_order());
    }
    CHECK(total == mpq_class(fact));
  }
}
