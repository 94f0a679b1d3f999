#include <doctest.h>

#include <set>

#include "cotlar/error.hpp"
#include "cotlar/graph_product.hpp"
#include "oracles.hpp"
#include "systems.hpp"

using namespace cotlar;

namespace {

std::vector<Syllable> random_syllables(oracle::Gen& gen, const GraphProduct& gp, std::size_t max_len) {
  std::vector<Syllable> out(gen.below(max_len + 1));
  for (auto& s : out) {
    s.vertex = static_cast<Generator>(gen.below(gp.rank()));
    const auto n = gp.order(s.vertex);
    s.exponent = n == kInfiniteCyclic ? gen.between(-3, 3) : gen.between(0, static_cast<long long>(n) - 1);
  }
  return out;
}

oracle::Mat2 psl_image(const std::vector<Syllable>& w, Generator skip = 0xFF) {
  oracle::Mat2 m;
  for (const auto& s : w) {
    if (s.vertex == skip) continue;
    const int v = s.vertex == 0 ? 0 : 1;
    m = m * oracle::psl2z_power(v, s.exponent);
  }
  return m;
}

}  // namespace

TEST_CASE("normal form basics") {
  const auto gp = z2_free_z3();
  const auto a = gp.syllable(0, 1);
  const auto b = gp.syllable(1, 1);
  CHECK(gp.multiply(a, a).is_identity());
  CHECK(gp.multiply(b, gp.multiply(b, b)).is_identity());
  CHECK(gp.label(gp.multiply(b, b)) == "b^2");
  CHECK(gp.label(gp.multiply(a, gp.multiply(b, b))) == "a b^2");
  CHECK(gp.syllable(1, -1) == gp.syllable(1, 2));

  const auto c = z2_times_z2();
  const auto ba = c.multiply(c.syllable(1, 1), c.syllable(0, 1));
  CHECK(c.label(ba) == "a b");
  CHECK(c.multiply(ba, c.syllable(0, 1)) == c.syllable(1, 1));
  CHECK(c.ball(5).size() == 4);
}

TEST_CASE("free product Z2*Z3 agrees with PSL2(Z)") {
  const auto gp = z2_free_z3();
  oracle::Gen gen(13);
  for (int i = 0; i < 400; ++i) {
    const auto x = random_syllables(gen, gp, 8);
    const auto y = random_syllables(gen, gp, 8);
    const bool same = gp.normalize(x) == gp.normalize(y);
    CHECK(same == (psl_image(x) == psl_image(y)));
  }
}

TEST_CASE("path a-b-c agrees with Z2 x PSL2(Z)") {
  const auto gp = path_abc();
  oracle::Gen gen(17);
  auto image = [](const std::vector<Syllable>& w) {
    long long parity = 0;
    std::vector<Syllable> rest;
    for (const auto& s : w) {
      if (s.vertex == 1) {
        parity += s.exponent;
      } else {
        rest.push_back({static_cast<Generator>(s.vertex == 0 ? 0 : 1), s.exponent});
      }
    }
    return std::pair{parity % 2, psl_image(rest)};
  };
  for (int i = 0; i < 400; ++i) {
    const auto x = random_syllables(gen, gp, 8);
    const auto y = random_syllables(gen, gp, 8);
    const auto ix = image(x);
    const auto iy = image(y);
    CHECK((gp.normalize(x) == gp.normalize(y)) == (ix.first == iy.first && ix.second == iy.second));
  }
}

TEST_CASE("group laws") {
  oracle::Gen gen(29);
  for (const auto& gp : {z2_free_z3(), path_abc(), z_free_z2(), z2_times_z2()}) {
    for (int i = 0; i < 150; ++i) {
      const auto a = gp.normalize(random_syllables(gen, gp, 5));
      const auto b = gp.normalize(random_syllables(gen, gp, 5));
      const auto c = gp.normalize(random_syllables(gen, gp, 5));
      CHECK(gp.multiply(gp.multiply(a, b), c) == gp.multiply(a, gp.multiply(b, c)));
      CHECK(gp.multiply(a, gp.invert(a)).is_identity());
      CHECK(gp.normalize(a.syllables()) == a);
      for (std::size_t k = 0; k + 1 < a.size(); ++k) CHECK(a.syllables()[k].exponent != 0);
    }
  }
}

TEST_CASE("balls") {
  CHECK(z2_free_z3().ball(1).size() == 4);
  CHECK(z2_free_z3().ball(2).size() == 8);
  CHECK(z_free_z2().ball(2).size() == 10);
  const auto gp = path_abc();
  const auto ball = gp.ball(3);
  CHECK(std::is_sorted(ball.begin(), ball.end()));
  CHECK(std::set<GPElement>(ball.begin(), ball.end()).size() == ball.size());
  for (const auto& g : ball) CHECK(g.weight() <= 3);
}

TEST_CASE("vertex words and leading exponents") {
  const auto gp = path_abc();
  const auto g = gp.normalize({{1, 1}, {2, 2}, {0, 1}});
  CHECK(gp.vertex_word(g).size() == 3);
  CHECK(gp.label(g) == "b c^2 a");
  CHECK_FALSE(gp.leading_exponent(g, 0).has_value());
  CHECK(gp.leading_exponent(g, 1) == 1);
  CHECK(gp.leading_exponent(g, 2) == 2);
  const auto h = gp.normalize({{2, 1}, {0, 1}, {2, 1}});
  CHECK(gp.leading_exponent(h, 2) == 1);
  CHECK_FALSE(gp.leading_exponent(h, 0).has_value());
}

TEST_CASE("descriptor validation") {
  CHECK_THROWS_AS(GraphProduct::validate({{"a", 1}}, {}), Error);
  CHECK_THROWS_AS(GraphProduct::validate({{"a", 2}}, {{"a", "x"}}), Error);
  CHECK_THROWS_AS(GraphProduct::validate({{"a", 2}, {"a", 3}}, {}), Error);
  CHECK_THROWS_AS(z2_free_z3().vertex("c"), Error);
}
