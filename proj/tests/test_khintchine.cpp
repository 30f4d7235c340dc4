#include <Eigen/Dense>

#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "hecke/khintchine.hpp"

using namespace hecke;

namespace {

CoxeterGraph rst_graph() { return CoxeterGraph({"r", "s", "t"}, {{"r", "t"}}); }
CoxeterGraph rs_edge_graph() { return CoxeterGraph({"r", "s", "t"}, {{"r", "s"}}); }
CoxeterGraph free_st() { return CoxeterGraph::free_graph({"s", "t"}); }
CoxeterGraph free3() { return CoxeterGraph::free_graph({"r", "s", "t"}); }

Word w(const CoxeterGraph& g, std::initializer_list<const char*> labels) {
  std::vector<Letter> ls;
  for (const char* l : labels) ls.push_back(static_cast<Letter>(g.index_of(l)));
  return reduce(ls, g);
}

std::vector<Letter> letters(const CoxeterGraph& g, std::initializer_list<const char*> labels) {
  std::vector<Letter> ls;
  for (const char* l : labels) ls.push_back(static_cast<Letter>(g.index_of(l)));
  return ls;
}

}  // namespace

TEST_CASE("free decomposition blocks") {
  auto g = free_st();
  auto comps0 = jd_free({}, g);
  REQUIRE(comps0.size() == 1);
  CHECK(comps0[0].nonzero);

  auto comps1 = jd_free(letters(g, {"s"}), g);
  CHECK(comps1.size() == 2 + 1 * 2);  // d+1 splits + d*|S| diagonal slots
  int nonzero = 0;
  for (const auto& c : comps1) nonzero += c.nonzero;
  CHECK(nonzero == 3);  // creator split, annihilator split, P_s slot

  auto comps2 = jd_free(letters(g, {"s", "t"}), g);
  CHECK(comps2.size() == 3 + 2 * 2);
  int nz2 = 0;
  for (const auto& c : comps2) nz2 += c.nonzero;
  CHECK(nz2 == 3 + 2);

  CHECK_THROWS_AS(jd_free(letters(g, {"s"}), rs_edge_graph()), std::invalid_argument);
  CHECK_THROWS_AS(jd_free(letters(g, {"s", "s"}), g), std::invalid_argument);
}

TEST_CASE("general decomposition blocks") {
  auto g = rs_edge_graph();
  auto comps = jd_general(letters(g, {"r", "s"}), g);
  // The full-clique block (k=0, gamma0={r,s}) is admissible.
  bool found = false;
  for (const auto& c : comps) {
    if (c.nonzero && clique_size(c.gamma0) == 2 && c.k == 0) {
      found = true;
      CHECK(c.creators.empty());
      CHECK(c.annihilators.empty());
    }
    if (clique_size(c.gamma0) == 2) CHECK(c.gamma1 == 0);
  }
  CHECK(found);

  // Non-commuting letters never form a diagonal clique.
  auto gf = free_st();
  for (const auto& c : jd_general(letters(gf, {"s", "t"}), gf))
    CHECK(clique_size(c.gamma0) <= 1);

  // Block list size equals the index-set count.
  for (int d = 1; d <= 3; ++d) {
    auto word0 = enumerate_ball(g, d);
    for (const Word& u : word0) {
      if (u.size() != d) continue;
      CHECK(static_cast<std::int64_t>(jd_general(u.letters, g).size()) ==
            khintchine_block_count(g, d));
      break;
    }
  }
}

TEST_CASE("free and general decompositions agree on free graphs") {
  auto g = free3();
  for (const Word& u : enumerate_ball(g, 3)) {
    if (u.empty()) continue;
    auto fr = jd_free(u.letters, g);
    auto ge = jd_general(u.letters, g);
    // Collect nonzero legs (creators, gamma0, annihilators) from both.
    std::set<std::tuple<Word, Clique, Word>> sf, sg;
    for (const auto& c : fr)
      if (c.nonzero) sf.insert({c.creators, c.gamma0, c.annihilators});
    for (const auto& c : ge)
      if (c.nonzero) sg.insert({c.creators, c.gamma0, c.annihilators});
    CHECK(sf == sg);
  }
}

TEST_CASE("factorization identity") {
  auto gf = free_st();
  CHECK(verify_factorization(letters(gf, {"s"}), gf, 3));
  CHECK(verify_factorization(letters(gf, {"s", "t"}), gf, 4));

  auto g = rs_edge_graph();
  CHECK(verify_factorization(letters(g, {"t", "r", "s"}), g, 4));
  for (const Word& u : enumerate_ball(g, 3))
    CHECK(verify_factorization(u.letters, g, 3));
}

TEST_CASE("intertwiners reconstruct the general blocks") {
  auto g = rs_edge_graph();
  auto word = letters(g, {"t", "r", "s"});
  bool found_full_clique = false;
  for (const auto& c : jd_general(word, g)) {
    if (!c.nonzero) continue;
    if (clique_size(c.gamma0) == 2) found_full_clique = true;
    CHECK(intertwiner_check(c, word, g, 4));
  }
  CHECK(found_full_clique);

  // Free graphs: the rearrangements are trivial.
  auto gf = free_st();
  auto wf = letters(gf, {"s", "t", "s"});
  for (const auto& c : jd_general(wf, gf)) {
    if (!c.nonzero) continue;
    CHECK(intertwiner_check(c, wf, gf, 4));
  }
}

TEST_CASE("diagonal families") {
  auto g = free3();
  for (int d = 1; d <= 5; ++d) {
    DiagonalFamily fam = diagonal_family(g, d, DiagonalVariant::Free3);
    CHECK(fam.words.size() == (1u << (d - 1)));
    CHECK(diagonal_condition_holds(fam));
    for (const Word& u : fam.words) CHECK(u.size() == 2 * d);
  }

  auto grst = rst_graph();
  for (int d : {1, 3, 5}) {
    DiagonalFamily fam = diagonal_family(grst, d, DiagonalVariant::Rst);
    CHECK(fam.words.size() == (1u << ((d - 1) / 2)));
    CHECK(diagonal_condition_holds(fam));
    for (const Word& u : fam.words) CHECK(u.size() == 2 * d);
  }
  CHECK_THROWS_AS(diagonal_family(grst, 4, DiagonalVariant::Rst), std::invalid_argument);
  CHECK_THROWS_AS(diagonal_family(free_st(), 3, DiagonalVariant::Free3), std::invalid_argument);

  // d = 3 rst family words follow the alternating pattern ending in r.
  DiagonalFamily f3 = diagonal_family(grst, 3, DiagonalVariant::Rst);
  for (const auto& [first, second] : f3.halves) {
    CHECK(first.size() == 3);
    CHECK(second.size() == 3);
    CHECK(first.letters[1] == static_cast<Letter>(grst.index_of("s")));
  }
}

TEST_CASE("crossover") {
  CrossoverReport rep = crossover(0.0, 3, DiagonalVariant::Free3);
  CHECK(rep.d_star == 15);
  CHECK(rep.lhs > rep.rhs);
  // The inequality still holds one step earlier.
  double lhs14 = std::pow(2.0, 13);
  double rhs14 = std::pow(2.0, 6.5) * (2 * 14 + 1 + 2 * 14 * 3);
  CHECK(lhs14 <= rhs14);

  // Monotone in p.
  int prev = 0;
  for (double p : {0.0, 0.5, 1.0, 2.0, 5.0}) {
    int d = crossover(p, 3, DiagonalVariant::Free3).d_star;
    CHECK(d >= prev);
    prev = d;
  }

  CrossoverReport rst = crossover(0.0, 3, DiagonalVariant::Rst);
  CHECK(rst.d_star % 2 == 1);
  CHECK(rst.lhs > rst.rhs);
  CHECK_THROWS_AS(crossover(-1.0, 3, DiagonalVariant::Free3), std::invalid_argument);
  CHECK_THROWS_AS(crossover(0.0, 2, DiagonalVariant::Free3), std::invalid_argument);
}

TEST_CASE("structured norm bound") {
  CHECK(structured_norm_bound({{0, 0, 2.5}}) == doctest::Approx(2.5));
  std::vector<NormBlock> blocks;
  for (int i = 0; i < 5; ++i) blocks.push_back({i, i, 1.0});
  CHECK(structured_norm_bound(blocks) == doctest::Approx(std::sqrt(5.0)));
  CHECK_THROWS_AS(structured_norm_bound({{0, 0, 1.0}, {0, 1, 1.0}}), std::invalid_argument);

  // Dense oracle: the bound dominates the true norm of random row-disjoint
  // block matrices.
  std::mt19937 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    int rows = 4, cols = 3, bs = 2;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rows * bs, cols * bs);
    std::vector<NormBlock> bl;
    for (int r = 0; r < rows; ++r) {
      int c = static_cast<int>(rng() % cols);
      Eigen::MatrixXd block(bs, bs);
      for (int i = 0; i < bs; ++i)
        for (int j = 0; j < bs; ++j)
          block(i, j) = (static_cast<double>(rng() % 2000) - 1000.0) / 500.0;
      m.block(r * bs, c * bs, bs, bs) = block;
      bl.push_back({r, c, block.jacobiSvd().singularValues()(0)});
    }
    double bound = structured_norm_bound(bl);
    double dense = m.jacobiSvd().singularValues()(0);
    CHECK(bound >= dense - 1e-9);
  }
}
