#include <doctest.h>

#include "crsym/classalg.hpp"

using namespace crsym;

namespace {

ClassElement ce(std::initializer_list<std::pair<Partition, std::pair<long, long>>> terms) {
  ClassElement e;
  for (const auto& [p, q] : terms) e[p] = make_rational(q.first, q.second);
  return e;
}

const Partition kId3{1, 1, 1}, kX{2, 1}, kY{3};

}  // namespace

TEST_CASE("partitions are listed from (1^k) up to (k)") {
  auto ps = partitions(4);
  REQUIRE(ps.size() == 5);
  CHECK(ps.front() == Partition{1, 1, 1, 1});
  CHECK(ps.back() == Partition{4});
  CHECK(partitions(6).size() == 11);
  CHECK(partition_to_string({2, 1}) == "(2,1)");
}

TEST_CASE("permutations and cycle types") {
  Perm a{1, 0, 2}, b{0, 2, 1};
  CHECK(compose(a, b) == Perm{1, 2, 0});
  CHECK(compose(a, inverse(a)) == identity_perm(3));
  CHECK(cycle_type(Perm{1, 2, 0, 4, 3}) == Partition{3, 2});
  CHECK(perm_sign(Perm{1, 2, 0}) == 1);
  CHECK(perm_sign(a) == -1);
  CHECK(all_perms(4).size() == 24);
  long total = 0;
  for (const auto& [p, size] : conjugacy_classes(5)) total += size;
  CHECK(total == 120);
  CHECK(class_size({2, 2}) == 3);
}

TEST_CASE("class algebra of S_2 and S_3") {
  CHECK(class_multiply(class_basis({2}), class_basis({2}), 2) == class_basis({1, 1}));
  CHECK(class_multiply(class_basis(kX), class_basis(kX), 3) == ce({{kId3, {1, 3}}, {kY, {2, 3}}}));
  CHECK(class_multiply(class_basis(kX), class_basis(kY), 3) == class_basis(kX));
  CHECK(class_multiply(class_basis(kY), class_basis(kY), 3) == ce({{kId3, {1, 2}}, {kY, {1, 2}}}));
  std::map<Partition, std::string> names{{kId3, "1"}, {kX, "x"}, {kY, "y"}};
  CHECK(class_element_to_string(class_multiply(class_basis(kX), class_basis(kX), 3), names) == "1/3*1 + 2/3*y");
}

TEST_CASE("structure constants are probabilities") {
  for (int k = 2; k <= 6; ++k)
    for (const auto& a : partitions(k))
      for (const auto& b : partitions(k)) {
        Rational sum = 0;
        for (const auto& [t, c] : class_multiply(class_basis(a), class_basis(b), k)) {
          CHECK(c > 0);
          sum += c;
        }
        CHECK(sum == 1);
      }
}

TEST_CASE("three multiplication backends agree") {
  for (int k = 2; k <= 5; ++k)
    for (const auto& a : partitions(k))
      for (const auto& b : partitions(k)) {
        ClassElement e = class_multiply(class_basis(a), class_basis(b), k);
        CHECK(e == class_multiply_characters(class_basis(a), class_basis(b), k));
        CHECK(e == center_convolution(class_basis(a), class_basis(b), k));
      }
  CHECK(oracle_equivalence(4).passed());
  CHECK(class_multiply(class_basis({2, 1, 1, 1, 1, 1, 1}), class_basis({3, 1, 1, 1, 1, 1}), 8) ==
        class_multiply_characters(class_basis({2, 1, 1, 1, 1, 1, 1}), class_basis({3, 1, 1, 1, 1, 1}), 8));
}

TEST_CASE("characters and dimensions") {
  CHECK(mn_character(kX, kY) == -1);
  CHECK(mn_character(kX, kX) == 0);
  CHECK(mn_character(kX, kId3) == 2);
  CHECK(mn_character({1, 1, 1}, kX) == -1);
  CHECK(mn_character({2, 2}, {2, 2}) == 2);
  CHECK(hook_dimension({3, 2}) == 5);
  CHECK(hook_dimension({3, 2, 1}) == 16);
  CHECK(standard_tableaux(kX).size() == 2);
  CHECK(static_cast<long>(standard_tableaux({3, 2}).size()) == hook_dimension({3, 2}));
  for (int k = 1; k <= 6; ++k) {
    long sum = 0;
    for (const auto& lam : partitions(k)) sum += hook_dimension(lam) * hook_dimension(lam);
    CHECK(sum == factorial_l(k));
  }
}

TEST_CASE("idempotents and Young symmetrizers") {
  for (const auto& lam : partitions(3)) {
    GroupAlgebraElement e = central_idempotent(lam);
    CHECK(ga_multiply(e, e) == e);
    for (const auto& t : standard_tableaux(lam)) {
      GroupAlgebraElement y = young_symmetrizer(t);
      GaussianRational factor(factorial_l(3) / hook_dimension(lam));
      CHECK(ga_multiply(y, y) == ga_scaled(y, factor));
    }
  }
  GroupAlgebraElement sum;
  for (const auto& lam : partitions(4)) sum = ga_add(sum, central_idempotent(lam));
  CHECK(sum == ga_identity(4));
  CHECK(ga_multiply(central_idempotent({2, 1}), central_idempotent({3})).empty());
}

TEST_CASE("verification report and tables") {
  for (int k = 1; k <= 5; ++k) CHECK_MESSAGE(verify_classalg(k).passed(), verify_classalg(k).summary());
  std::string csv = structure_constants_csv(2);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  CHECK(class_table_json(3).dump() == class_table_json(3).dump());
}
