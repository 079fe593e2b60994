#include <doctest.h>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "puv/rsk.hpp"

using namespace puv;

namespace {

Tableau T(std::vector<std::vector<int>> rows) { return Tableau(std::move(rows)); }

ZeroOneMatrix matrix_from_rows(const std::vector<std::vector<int>>& rows) {
  int n = static_cast<int>(rows.size());
  ZeroOneMatrix m(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      m.set(i, j, static_cast<std::uint8_t>(rows[static_cast<std::size_t>(i - 1)]
                                                [static_cast<std::size_t>(j - 1)]));
  return m;
}

const ZeroOneMatrix& worked_matrix() {
  static ZeroOneMatrix m = matrix_from_rows({{0, 0, 1}, {1, 0, 0}, {0, 1, 1}});
  return m;
}

ZeroOneMatrix dense_matrix(int n, std::uint8_t fill) {
  ZeroOneMatrix m(n);
  for (auto& b : m.bits) b = fill;
  return m;
}

ZeroOneMatrix mask_matrix(int n, unsigned mask) {
  ZeroOneMatrix m(n);
  for (std::size_t k = 0; k < m.bits.size(); ++k)
    m.bits[k] = static_cast<std::uint8_t>((mask >> k) & 1u);
  return m;
}

std::string filling_key(const SquareFilling& s) {
  std::string key;
  for (const auto& line : render_square(s)) {
    key += line;
    key += '|';
  }
  return key;
}

}  // namespace

TEST_CASE("matrix validation and access") {
  CHECK_THROWS_AS(ZeroOneMatrix(2, {1, 0, 1}), DomainError);
  CHECK_THROWS_AS(ZeroOneMatrix(1, {2}), DomainError);
  ZeroOneMatrix m = worked_matrix();
  CHECK(m.at(1, 3) == 1);
  CHECK(m.at(2, 2) == 0);
  CHECK(m.at(3, 2) == 1);
}

TEST_CASE("two row array validation") {
  CHECK_THROWS_AS(TwoRowArray({{1, 2}, {1, 2}}), DomainError);
  CHECK_THROWS_AS(TwoRowArray({{2, 1}, {1, 2}}), DomainError);
  CHECK_THROWS_AS(TwoRowArray({{0, 1}}), DomainError);
  CHECK(TwoRowArray({{1, 3}, {2, 1}}).pairs.size() == 2);
}

TEST_CASE("matrix to word on worked examples") {
  TwoRowArray w = matrix_to_word(worked_matrix());
  std::vector<std::pair<int, int>> want{{1, 3}, {2, 1}, {3, 2}, {3, 3}};
  CHECK(w.pairs == want);
  CHECK(matrix_to_word(ZeroOneMatrix(3)).pairs.empty());
  std::vector<std::pair<int, int>> full{{1, 1}, {1, 2}, {2, 1}, {2, 2}};
  CHECK(matrix_to_word(dense_matrix(2, 1)).pairs == full);
}

TEST_CASE("column insertion single steps") {
  auto [t1, box1] = column_insert(Tableau(), 4);
  CHECK(t1 == T({{4}}));
  CHECK(box1 == BoxPosition{0, 0});

  auto [t2, box2] = column_insert(T({{3}}), 1);
  CHECK(t2 == T({{1, 3}}));
  CHECK(box2 == BoxPosition{0, 1});

  auto [t3, box3] = column_insert(T({{1}, {2}}), 5);
  CHECK(t3 == T({{1}, {2}, {5}}));
  CHECK(box3 == BoxPosition{2, 0});

  CHECK_THROWS_AS(column_insert(Tableau(), 0), DomainError);
}

TEST_CASE("reverse insertion undoes single steps") {
  auto [t, box] = column_insert(T({{3}}), 1);
  auto [back, x] = column_insert_reverse(t, box);
  CHECK(back == T({{3}}));
  CHECK(x == 1);

  auto [empty, y] = column_insert_reverse(T({{7}}), {0, 0});
  CHECK(empty == Tableau());
  CHECK(y == 7);

  CHECK_THROWS_AS(column_insert_reverse(T({{1, 2}}), {0, 0}), DomainError);
  CHECK_THROWS_AS(column_insert_reverse(T({{1}}), {1, 0}), DomainError);
}

TEST_CASE("insert then reverse is the identity on random states") {
  std::mt19937 rng(321);
  std::uniform_int_distribution<int> letter(1, 6);
  std::uniform_int_distribution<int> len(0, 12);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<int> word(static_cast<std::size_t>(len(rng)));
    for (int& w : word) w = letter(rng);
    Tableau t = insert_word(word);
    int x = letter(rng);
    auto [grown, box] = column_insert(t, x);
    auto [back, y] = column_insert_reverse(grown, box);
    CHECK(back == t);
    CHECK(y == x);
  }
}

TEST_CASE("knuth correspondence on the worked matrix") {
  KnuthResult k = knuth_forward(worked_matrix());
  CHECK(k.t1 == T({{1, 3}, {2}, {3}}));
  CHECK(k.t2 == T({{1, 3, 3}, {2}}));
  CHECK(conjugate(k.t1.shape()) == k.t2.shape());
  std::vector<BoxPosition> boxes{{0, 0}, {0, 1}, {1, 0}, {2, 0}};
  CHECK(k.trace.boxes == boxes);
  CHECK(knuth_inverse(k.t1, k.t2, 3) == worked_matrix());
}

TEST_CASE("knuth correspondence edge matrices") {
  KnuthResult zero = knuth_forward(ZeroOneMatrix(3));
  CHECK(zero.t1.empty());
  CHECK(zero.t2.empty());
  CHECK(knuth_inverse(zero.t1, zero.t2, 3) == ZeroOneMatrix(3));

  KnuthResult one = knuth_forward(matrix_from_rows({{1}}));
  CHECK(one.t1 == T({{1}}));
  CHECK(one.t2 == T({{1}}));

  KnuthResult full = knuth_forward(dense_matrix(2, 1));
  CHECK(full.t1 == T({{1, 1}, {2, 2}}));
  CHECK(full.t2 == T({{1, 1}, {2, 2}}));
}

TEST_CASE("knuth inverse rejects malformed pairs") {
  CHECK_THROWS_AS(knuth_inverse(T({{1, 2}}), T({{1, 2}}), 2), DomainError);
  CHECK_THROWS_AS(knuth_inverse(T({{5}}), T({{1}}), 3), DomainError);
  CHECK_THROWS_AS(knuth_inverse(T({{1}}), T({{5}}), 3), DomainError);
}

TEST_CASE("knuth round trip is exhaustive at n <= 3") {
  for (int n = 0; n <= 3; ++n) {
    unsigned total = 1u << (n * n);
    for (unsigned mask = 0; mask < total; ++mask) {
      ZeroOneMatrix m = mask_matrix(n, mask);
      KnuthResult k = knuth_forward(m);
      CHECK(conjugate(k.t1.shape()) == k.t2.shape());
      CHECK(knuth_inverse(k.t1, k.t2, n) == m);
    }
  }
}

TEST_CASE("square bijection on the worked matrix") {
  SquareFilling s = phi(worked_matrix());
  CHECK(s.delta_tab == T({{1, 3}, {2}, {3}}));
  CHECK(s.chi_tab == T({{1, 1, 3}, {2, 2}}));
  CHECK(phi_inverse(s) == worked_matrix());
}

TEST_CASE("square bijection edge matrices") {
  SquareFilling zero = phi(ZeroOneMatrix(2));
  CHECK(zero.delta_tab.empty());
  CHECK(zero.chi_tab == T({{1, 1}, {2, 2}}));
  CHECK(phi_inverse(zero) == ZeroOneMatrix(2));

  SquareFilling full = phi(dense_matrix(2, 1));
  CHECK(full.delta_tab == T({{1, 1}, {2, 2}}));
  CHECK(full.chi_tab.empty());
  CHECK(phi_inverse(full) == dense_matrix(2, 1));
}

TEST_CASE("square bijection is one to one and onto at n <= 3") {
  for (int n = 0; n <= 3; ++n) {
    unsigned total = 1u << (n * n);
    std::set<std::string> images;
    unsigned full_first_row = 0;
    for (unsigned mask = 0; mask < total; ++mask) {
      ZeroOneMatrix m = mask_matrix(n, mask);
      SquareFilling s = phi(m);
      images.insert(filling_key(s));
      CHECK(phi_inverse(s) == m);
      if (!s.delta_tab.rows.empty() &&
          static_cast<int>(s.delta_tab.rows[0].size()) == n)
        ++full_first_row;
    }
    CHECK(images.size() == total);
    if (n >= 1) CHECK(full_first_row == total / 2);
  }
}

TEST_CASE("round trip holds on random matrices at n = 6") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int trial = 0; trial < 500; ++trial) {
    ZeroOneMatrix m(6);
    for (auto& b : m.bits) b = static_cast<std::uint8_t>(bit(rng));
    CHECK(phi_inverse(phi(m)) == m);
  }
}

TEST_CASE("row and column scan words of the worked matrix") {
  auto [w1, w2] = words_w1_w2(worked_matrix());
  CHECK(w1 == std::vector<int>{3, 1, 2, 3});
  CHECK(w2 == std::vector<int>{1, 3, 1, 2, 2});

  auto [z1, z2] = words_w1_w2(ZeroOneMatrix(2));
  CHECK(z1.empty());
  CHECK(z2 == std::vector<int>{1, 2, 1, 2});

  auto [f1, f2] = words_w1_w2(dense_matrix(2, 1));
  CHECK(f1 == std::vector<int>{1, 2, 1, 2});
  CHECK(f2.empty());
}

TEST_CASE("direct insertion of both scan words reproduces the square pair") {
  TableauPair alt = alternate_phi(worked_matrix());
  CHECK(alt.first == T({{1, 3}, {2}, {3}}));
  CHECK(alt.second == T({{1, 1, 3}, {2, 2}}));

  TableauPair zero = alternate_phi(ZeroOneMatrix(2));
  CHECK(zero.first.empty());
  CHECK(zero.second == T({{1, 1}, {2, 2}}));
}

TEST_CASE("the two constructions agree exhaustively at n <= 3") {
  for (int n = 0; n <= 3; ++n) {
    unsigned total = 1u << (n * n);
    for (unsigned mask = 0; mask < total; ++mask) {
      ZeroOneMatrix m = mask_matrix(n, mask);
      SquareFilling s = phi(m);
      TableauPair alt = alternate_phi(m);
      CHECK(alt.first == s.delta_tab);
      CHECK(alt.second == s.chi_tab);
    }
  }
}

TEST_CASE("the two constructions agree on random matrices at n in 4..6") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int n = 4; n <= 6; ++n) {
    for (int trial = 0; trial < 300; ++trial) {
      ZeroOneMatrix m(n);
      for (auto& b : m.bits) b = static_cast<std::uint8_t>(bit(rng));
      SquareFilling s = phi(m);
      TableauPair alt = alternate_phi(m);
      CHECK(alt.first == s.delta_tab);
      CHECK(alt.second == s.chi_tab);
    }
  }
}
