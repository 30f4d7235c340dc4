#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "hecke/algebra.hpp"

using namespace hecke;

namespace {

CoxeterGraph rst_graph() { return CoxeterGraph({"r", "s", "t"}, {{"r", "t"}}); }
CoxeterGraph rs_edge_graph() { return CoxeterGraph({"r", "s", "t"}, {{"r", "s"}}); }
CoxeterGraph free_st() { return CoxeterGraph::free_graph({"s", "t"}); }

Word w(const CoxeterGraph& g, std::initializer_list<const char*> labels) {
  std::vector<Letter> ls;
  for (const char* l : labels) ls.push_back(static_cast<Letter>(g.index_of(l)));
  return reduce(ls, g);
}

HeckeElement tw(const CoxeterGraph& g, std::initializer_list<const char*> labels) {
  return HeckeElement::basis(w(g, labels));
}

HeckeElement random_ball_element(const CoxeterGraph& g, int N, std::mt19937& rng) {
  auto ball = enumerate_ball(g, N);
  HeckeElement out;
  for (int i = 0; i < 4; ++i) {
    long long c = static_cast<long long>(rng() % 7) - 3;
    out.add(ball[rng() % ball.size()], PolyScalar(c));
  }
  return out;
}

}  // namespace

TEST_CASE("generator relation and commutation") {
  auto g = free_st();
  HeckeElement ts = tw(g, {"s"});
  HeckeElement sq = hecke_multiply(ts, ts, g);
  CHECK(sq == HeckeElement::unit() + PolyScalar::p_power(1) * ts);
  CHECK(hecke_multiply(ts, tw(g, {"t"}), g) == tw(g, {"s", "t"}));

  auto g2 = rst_graph();
  HeckeElement tr = tw(g2, {"r"});
  HeckeElement tt = tw(g2, {"t"});
  CHECK(hecke_multiply(tr, tt, g2) == hecke_multiply(tt, tr, g2));
}

TEST_CASE("product example T_st T_ts") {
  auto g = free_st();
  HeckeElement prod = hecke_multiply(tw(g, {"s", "t"}), tw(g, {"t", "s"}), g);
  HeckeElement expect = HeckeElement::unit();
  expect += PolyScalar::p_power(1) * tw(g, {"s"});
  expect += PolyScalar::p_power(1) * tw(g, {"s", "t", "s"});
  CHECK(prod == expect);
  CHECK(trace(prod) == PolyScalar(1));
}

TEST_CASE("associativity on sampled ball elements") {
  auto g = rst_graph();
  std::mt19937 rng(11);
  for (int trial = 0; trial < 12; ++trial) {
    HeckeElement a = random_ball_element(g, 3, rng);
    HeckeElement b = random_ball_element(g, 3, rng);
    HeckeElement c = random_ball_element(g, 3, rng);
    CHECK(hecke_multiply(hecke_multiply(a, b, g), c, g) ==
          hecke_multiply(a, hecke_multiply(b, c, g), g));
  }
}

TEST_CASE("adjoint") {
  auto g = free_st();
  CHECK(adjoint(tw(g, {"s", "t"}), g) == tw(g, {"t", "s"}));
  CHECK(adjoint(tw(g, {"s"}), g) == tw(g, {"s"}));
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    HeckeElement a = random_ball_element(g, 3, rng);
    HeckeElement b = random_ball_element(g, 3, rng);
    CHECK(adjoint(adjoint(a, g), g) == a);
    CHECK(adjoint(hecke_multiply(a, b, g), g) ==
          hecke_multiply(adjoint(b, g), adjoint(a, g), g));
  }
}

TEST_CASE("trace") {
  auto g = free_st();
  CHECK(trace(HeckeElement::unit()) == PolyScalar(1));
  CHECK(trace(tw(g, {"s", "t"})).is_zero());
  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    HeckeElement a = random_ball_element(g, 3, rng);
    HeckeElement b = random_ball_element(g, 3, rng);
    CHECK(trace(hecke_multiply(a, b, g)) == trace(hecke_multiply(b, a, g)));
  }
}

TEST_CASE("inner product") {
  auto g = free_st();
  for (const Word& v : enumerate_ball(g, 3))
    CHECK(inner_product(HeckeElement::basis(v), HeckeElement::basis(v), g) == PolyScalar(1));
  CHECK(inner_product(tw(g, {"s"}), tw(g, {"t"}), g).is_zero());
  HeckeElement ss = hecke_multiply(tw(g, {"s"}), tw(g, {"s"}), g);
  CHECK(inner_product(ss, tw(g, {"s"}), g) == PolyScalar::p_power(1));
}

TEST_CASE("group action") {
  auto g = free_st();
  HeckeElement a = tw(g, {"s", "t"}) + PolyScalar(2) * tw(g, {"t"});
  CHECK(group_action(Word{}, a, g) == a);
  CHECK(group_action(w(g, {"s"}), tw(g, {"s"}), g) == HeckeElement::unit());
  CHECK(group_action(w(g, {"s", "t"}), tw(g, {"t"}), g) == tw(g, {"s"}));

  // Basis permutation: coefficient pairings are preserved.
  std::mt19937 rng(17);
  Word v = w(g, {"t", "s"});
  for (int trial = 0; trial < 8; ++trial) {
    HeckeElement x = random_ball_element(g, 3, rng);
    HeckeElement y = random_ball_element(g, 3, rng);
    PolyScalar direct;
    for (const auto& [xw, xc] : x.terms()) direct += xc * y.coeff(xw);
    PolyScalar moved;
    HeckeElement xv = group_action(v, x, g), yv = group_action(v, y, g);
    for (const auto& [xw, xc] : xv.terms()) moved += xc * yv.coeff(xw);
    CHECK(direct == moved);
  }
}

TEST_CASE("prefix projection") {
  auto g = free_st();
  HeckeElement a = tw(g, {"t"}) + tw(g, {"s", "t"});
  CHECK(project_prefix(Word{}, a, g) == a);
  CHECK(project_prefix(w(g, {"s"}), tw(g, {"t"}), g).is_zero());

  auto g2 = rs_edge_graph();
  CHECK(project_prefix(w(g2, {"s"}), tw(g2, {"r", "s"}), g2) == tw(g2, {"r", "s"}));

  // Idempotent and self-adjoint on the ball basis.
  auto ball = enumerate_ball(g2, 3);
  Word p = w(g2, {"s"});
  for (const Word& u : ball) {
    HeckeElement once = project_prefix(p, HeckeElement::basis(u), g2);
    CHECK(project_prefix(p, once, g2) == once);
    for (const Word& vv : ball) {
      PolyScalar left = project_prefix(p, HeckeElement::basis(u), g2).coeff(vv);
      PolyScalar right = project_prefix(p, HeckeElement::basis(vv), g2).coeff(u);
      CHECK(left == right);
    }
  }
}

TEST_CASE("decomposition triples") {
  auto gf = free_st();
  auto triples_s = enumerate_Aw(w(gf, {"s"}), gf);
  CHECK(triples_s.size() == 2);
  CHECK(std::count_if(triples_s.begin(), triples_s.end(), [&](const ExpansionTriple& t) {
          return t.w_prime.empty() && t.clique == 0 && t.w_doubleprime == w(gf, {"s"});
        }) == 1);
  CHECK(std::count_if(triples_s.begin(), triples_s.end(), [&](const ExpansionTriple& t) {
          return t.w_prime.empty() && clique_size(t.clique) == 1 && t.w_doubleprime.empty();
        }) == 1);

  auto triples_st = enumerate_Aw(w(gf, {"s", "t"}), gf);
  CHECK(triples_st.size() == 3);

  auto g2 = rs_edge_graph();
  auto triples_rs = enumerate_Aw(w(g2, {"r", "s"}), g2);
  CHECK(triples_rs.size() == 4);

  // The empty clique admits exactly the triple (e, {}, w).
  for (const Word& u : enumerate_ball(g2, 4)) {
    int empties = 0;
    for (const ExpansionTriple& t : enumerate_Aw(u, g2))
      if (t.clique == 0) {
        ++empties;
        CHECK(t.w_prime.empty());
        CHECK(t.w_doubleprime == u);
      }
    CHECK(empties == 1);
  }
}

TEST_CASE("breakdown") {
  auto g = rs_edge_graph();
  // T^(1)_t P_r T^(1)_t collapses onto the projection at t r.
  ExpansionTriple t{w(g, {"t"}), 1u << g.index_of("r"), w(g, {"t"})};
  BreakdownParts parts = breakdown(t, g);
  CHECK(parts.u == w(g, {"t"}));
  CHECK(parts.u_prime.empty());
  CHECK(parts.u_doubleprime.empty());
  OperatorTerm collapsed = normalized_term(t, g);
  CHECK(collapsed.diagonal == w(g, {"t", "r"}));

  auto gf = free_st();
  ExpansionTriple t2{w(gf, {"s"}), 1u << gf.index_of("t"), Word{}};
  BreakdownParts parts2 = breakdown(t2, gf);
  CHECK(parts2.u == Word{});
  CHECK(parts2.u_prime == w(gf, {"s"}));
  CHECK(parts2.u_doubleprime == Word{});

  ExpansionTriple t3{Word{}, 0, w(gf, {"s", "t"})};
  BreakdownParts parts3 = breakdown(t3, gf);
  CHECK(parts3.u == Word{});
}

TEST_CASE("expansion identity on a ball") {
  for (const CoxeterGraph& g : {free_st(), rs_edge_graph()}) {
    auto ball = enumerate_ball(g, 3);
    for (const Word& u : ball) {
      auto terms = t_expansion(u, g);
      HeckeElement tu = HeckeElement::basis(u);
      for (const Word& v : ball) {
        CHECK(apply_terms(terms, HeckeElement::basis(v), g) ==
              hecke_multiply(tu, HeckeElement::basis(v), g));
      }
    }
  }
}

TEST_CASE("expansion base cases") {
  auto g = free_st();
  auto te = t_expansion(Word{}, g);
  REQUIRE(te.size() == 1);
  CHECK(te[0].weight == PolyScalar(1));
  CHECK(apply_term(te[0], w(g, {"t"}), g) == w(g, {"t"}));

  auto ts = t_expansion(w(g, {"s"}), g);
  CHECK(ts.size() == 2);
  auto tst = t_expansion(w(g, {"s", "t"}), g);
  CHECK(tst.size() == 3);
}

TEST_CASE("conditional expectation") {
  auto g = rst_graph();
  Clique rt = (1u << g.index_of("r")) | (1u << g.index_of("t"));
  CHECK(conditional_expectation(rt, tw(g, {"r", "t"}), g) == tw(g, {"r", "t"}));
  CHECK(conditional_expectation(rt, tw(g, {"r", "s"}), g).is_zero());

  std::mt19937 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    HeckeElement a = random_ball_element(g, 3, rng);
    CHECK(trace(conditional_expectation(rt, a, g)) == trace(a));
  }
  // Bimodule property over the subsystem.
  for (int trial = 0; trial < 10; ++trial) {
    HeckeElement a = random_ball_element(g, 3, rng);
    HeckeElement x = conditional_expectation(rt, random_ball_element(g, 2, rng), g);
    HeckeElement y = conditional_expectation(rt, random_ball_element(g, 2, rng), g);
    HeckeElement lhs = conditional_expectation(rt, hecke_multiply(hecke_multiply(x, a, g), y, g), g);
    HeckeElement rhs =
        hecke_multiply(hecke_multiply(x, conditional_expectation(rt, a, g), g), y, g);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("vacuum coefficient of T_w'* T_w is the Kronecker delta") {
  auto g = rst_graph();
  auto ball = enumerate_ball(g, 3);
  for (const Word& a : ball)
    for (const Word& b : ball) {
      PolyScalar c = trace(hecke_multiply(adjoint(HeckeElement::basis(a), g),
                                          HeckeElement::basis(b), g));
      CHECK(c == ((a == b) ? PolyScalar(1) : PolyScalar()));
    }
}

TEST_CASE("orthonormality through radius five") {
  for (const CoxeterGraph& g : {rst_graph(), free_st()}) {
    auto ball = enumerate_ball(g, 5);
    for (const Word& a : ball)
      for (const Word& b : ball) {
        PolyScalar ip = inner_product(HeckeElement::basis(a), HeckeElement::basis(b), g);
        CHECK(ip == ((a == b) ? PolyScalar(1) : PolyScalar()));
      }
  }
}
