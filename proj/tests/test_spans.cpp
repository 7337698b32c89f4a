#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "zetaspan/serialize.hpp"
#include "zetaspan/spans.hpp"

using namespace zetaspan;

namespace {

SpanVec random_vec(const SimplicialModel& base, std::mt19937_64& rng,
                   const std::string& tag) {
  const auto labels = base.one_simplices();
  std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
  std::uniform_int_distribution<int> count(1, 25);
  SpanVec v(base);
  const int k = count(rng);
  for (int i = 0; i < k; ++i)
    v.push(labels[pick(rng)], tag + "#" + std::to_string(i));
  return v;
}

}  // namespace

TEST_SUITE("spans") {

TEST_CASE("simplicial identities hold on every enumerated 2-simplex") {
  const QuadField K = QuadField::from_d(-1, 40);
  const SimplicialModel models[] = {
      SimplicialModel::reduced_base(40), SimplicialModel::full_base(40),
      SimplicialModel::reduced_ideal(K), SimplicialModel::full_ideal(K)};
  for (const auto& model : models) {
    for (const Label& d1 : model.one_simplices()) {
      for (const auto& [d2, d0] : model.two_simplices_over(d1)) {
        const auto composed = model.compose(d2, d0);
        REQUIRE(composed.has_value());
        REQUIRE(*composed == d1);
      }
    }
  }
}

TEST_CASE("two-simplex fibers match divisor / chain counts") {
  const auto reduced = SimplicialModel::reduced_base(60);
  for (std::int64_t n = 1; n <= 60; ++n)
    REQUIRE(reduced.two_simplices_over(Label(n)).size() ==
            oracles::divisors(n).size());

  const auto full = SimplicialModel::full_base(60);
  REQUIRE(full.two_simplices_over(Label(NumInterval{1, 4})).size() == 3);
  REQUIRE(full.two_simplices_over(Label(NumInterval{2, 12})).size() == 4);
}

TEST_CASE("objective zeta and delta have the right fibers") {
  const auto base = SimplicialModel::reduced_base(25);
  const auto zeta = SpanVec::objective_zeta(base);
  CHECK(zeta.size() == 25);
  CHECK(zeta.cardinality_reduced() == ReducedFn::zeta(25));
  CHECK(SpanVec::objective_delta(base).cardinality_reduced() ==
        ReducedFn::delta(25));

  const auto fbase = SimplicialModel::full_base(12);
  CHECK(SpanVec::objective_zeta(fbase).cardinality_full() == IntervalFn::zeta(12));
  CHECK(SpanVec::objective_delta(fbase).cardinality_full() == IntervalFn::delta(12));
}

TEST_CASE("add is fiberwise disjoint union") {
  const auto base = SimplicialModel::reduced_base(10);
  SpanVec u(base), v(base);
  u.push(6, "a");
  u.push(6, "b");
  v.push(6, "c");
  v.push(4, "d");
  const auto sum = add(u, v);
  CHECK(sum.fiber_cardinality(Label(std::int64_t{6})) == 3);
  CHECK(sum.fiber_cardinality(Label(std::int64_t{4})) == 1);

  // unit of disjoint union
  const auto same = add(u, SpanVec(base));
  CHECK(same.apex() == u.apex());

  // self-addition disambiguates payloads rather than duplicating them
  const auto doubled = add(u, u);
  CHECK(doubled.size() == 4);
  std::set<std::string> payloads;
  for (const auto& e : doubled.apex()) payloads.insert(e.payload);
  CHECK(payloads.size() == 4);

  CHECK_THROWS_AS(add(u, SpanVec(SimplicialModel::reduced_base(11))),
                  std::domain_error);
  CHECK_THROWS_AS(convolve(u, SpanVec(SimplicialModel::reduced_base(11))),
                  std::domain_error);
}

TEST_CASE("convolution fibers: reduced") {
  const auto base = SimplicialModel::reduced_base(20);
  const auto zeta = SpanVec::objective_zeta(base);
  const auto zz = convolve(zeta, zeta);
  CHECK(zz.fiber_cardinality(Label(std::int64_t{6})) == 4);
  // the four elements are the divisor pairs (1,6),(2,3),(3,2),(6,1)
  std::set<std::string> payloads;
  for (const auto& e : zz.apex())
    if (e.label == Label(std::int64_t{6})) payloads.insert(e.payload);
  CHECK(payloads == std::set<std::string>{"(z[1].z[6])", "(z[2].z[3])",
                                          "(z[3].z[2])", "(z[6].z[1])"});

  // unit law: delta is a two-sided unit fiberwise
  const auto dz = convolve(SpanVec::objective_delta(base), zeta);
  CHECK(dz.cardinality_reduced() == zeta.cardinality_reduced());
}

TEST_CASE("convolution fibers: full") {
  const auto base = SimplicialModel::full_base(20);
  const auto zeta = SpanVec::objective_zeta(base);
  const auto zz = convolve(zeta, zeta);
  // chains 1|1|4, 1|2|4, 1|4|4
  CHECK(zz.fiber_cardinality(Label(NumInterval{1, 4})) == 3);
  CHECK(zz.fiber_cardinality(Label(NumInterval{3, 3})) == 1);
}

TEST_CASE("cardinality is a homomorphism (random vectors)") {
  std::mt19937_64 rng(31);
  const auto base = SimplicialModel::reduced_base(200);
  for (int t = 0; t < 100; ++t) {
    const auto u = random_vec(base, rng, "u");
    const auto v = random_vec(base, rng, "v");
    REQUIRE(add(u, v).cardinality_reduced() ==
            u.cardinality_reduced() + v.cardinality_reduced());
    REQUIRE(convolve(u, v).cardinality_reduced() ==
            convolve(u.cardinality_reduced(), v.cardinality_reduced()));
  }
  const auto fbase = SimplicialModel::full_base(80);
  for (int t = 0; t < 20; ++t) {
    const auto u = random_vec(fbase, rng, "u");
    const auto v = random_vec(fbase, rng, "v");
    REQUIRE(convolve(u, v).cardinality_full() ==
            convolve(u.cardinality_full(), v.cardinality_full()));
  }
}

TEST_CASE("span convolution is associative up to label-preserving bijection") {
  std::mt19937_64 rng(37);
  const auto base = SimplicialModel::reduced_base(100);
  for (int t = 0; t < 25; ++t) {
    const auto f = random_vec(base, rng, "f");
    const auto g = random_vec(base, rng, "g");
    const auto h = random_vec(base, rng, "h");
    const auto w = check_equivalence(convolve(convolve(f, g), h),
                                     convolve(f, convolve(g, h)));
    REQUIRE(w.valid());
  }
}

TEST_CASE("pushforward along the norm") {
  const QuadField K = QuadField::from_d(-1, 30);
  const auto ideal_zeta =
      SpanVec::objective_zeta(SimplicialModel::reduced_ideal(K));
  const auto pushed = pushforward_norm(ideal_zeta);
  CHECK(pushed.base().kind() == BaseKind::ReducedBase);
  CHECK(pushed.fiber_cardinality(Label(std::int64_t{25})) == 3);
  CHECK(pushed.fiber_cardinality(Label(std::int64_t{1})) == 1);
  CHECK(pushed.fiber_cardinality(Label(std::int64_t{3})) == 0);
  // the apex is unchanged as a set: payloads survive relabeling
  CHECK(pushed.size() == ideal_zeta.size());

  const auto full_pushed =
      pushforward_norm(SpanVec::objective_zeta(SimplicialModel::full_ideal(K)));
  CHECK(full_pushed.fiber_cardinality(Label(NumInterval{1, 5})) == 2);
  CHECK(full_pushed.fiber_cardinality(Label(NumInterval{5, 25})) == 4);

  // identity map is a no-op
  const auto base = SimplicialModel::reduced_base(10);
  const auto zeta = SpanVec::objective_zeta(base);
  const auto same =
      pushforward(zeta, base, [](const Label& l) { return l; });
  CHECK(same.apex() == zeta.apex());

  // image out of bound
  CHECK_THROWS_AS(
      pushforward(zeta, base, [](const Label&) { return Label(std::int64_t{11}); }),
      std::out_of_range);
}

TEST_CASE("reduce_initial keeps exactly the initial-interval elements") {
  const auto fbase = SimplicialModel::full_base(15);
  const auto zeta = SpanVec::objective_zeta(fbase);
  const auto reduced = reduce_initial(zeta);
  CHECK(reduced.cardinality_reduced() == ReducedFn::zeta(15));

  SpanVec v(fbase);
  v.push(NumInterval{3, 9}, "x");
  v.push(NumInterval{5, 5}, "y");
  CHECK(reduce_initial(v).size() == 0);

  SpanVec w(fbase);
  w.push(NumInterval{1, 9}, "x");
  w.push(NumInterval{3, 9}, "y");
  const auto rw = reduce_initial(w);
  REQUIRE(rw.size() == 1);
  CHECK(rw.apex()[0].payload == "x");
  CHECK(rw.apex()[0].label == Label(std::int64_t{9}));
}

TEST_CASE("equivalence checking") {
  const auto base = SimplicialModel::reduced_base(10);
  SpanVec u(base), v(base);
  u.push(6, "a");
  u.push(6, "b");
  v.push(6, "x");
  v.push(6, "y");
  CHECK(check_equivalence(u, v).valid());

  v.push(6, "z");
  const auto w = check_equivalence(u, v);
  CHECK_FALSE(w.valid());
  CHECK(w.leftover_right.size() == 1);
  CHECK(w.fiber_sizes().at(Label(std::int64_t{6})) ==
        std::pair<Int, Int>(2, 3));

  // explicit pairing: valid, and label mismatches are detected
  SpanVec a(base), b(base);
  a.push(4, "p");
  b.push(4, "q");
  CHECK(check_equivalence(a, b, {{"p", "q"}}).valid());
  SpanVec c(base);
  c.push(5, "r");
  CHECK_FALSE(check_equivalence(a, c, {{"p", "r"}}).valid());
  CHECK_THROWS_AS(check_equivalence(a, b, {{"p", "nope"}}),
                  std::invalid_argument);
}

TEST_CASE("payload validation") {
  const auto base = SimplicialModel::reduced_base(10);
  SpanVec u(base);
  CHECK_THROWS_AS(u.push(11, "too-big"), std::out_of_range);
  CHECK_THROWS_AS(u.push(NumInterval{1, 5}, "wrong-kind"), std::out_of_range);
}

TEST_CASE("pushforward cardinality sums over preimages") {
  const QuadField K = QuadField::from_d(-1, 60);
  const auto model = SimplicialModel::reduced_ideal(K);
  std::mt19937_64 rng(53);
  const auto v = random_vec(model, rng, "v");
  const auto pushed = pushforward_norm(v);
  const auto before = v.fiber_cardinalities();
  const auto after = pushed.fiber_cardinalities();
  std::map<Label, Int> expected;
  for (const auto& [label, count] : before)
    expected[Label(std::get<IdealF>(label).norm())] += count;
  CHECK(after == expected);
}

TEST_CASE("span and witness serialization schemas") {
  const QuadField K = QuadField::from_d(-1, 10);
  const auto v =
      pushforward_norm(SpanVec::objective_zeta(SimplicialModel::reduced_ideal(K)));
  const auto j = to_json(v);
  CHECK(j["base"] == "ReducedBase");
  CHECK(j["bound"] == "10");
  bool saw_p5 = false;
  for (const auto& e : j["apex"]) {
    CHECK(e["label"].is_string());
    CHECK(e["payload"].is_string());
    if (e["payload"] == "z[p5]") {
      saw_p5 = true;
      CHECK(e["label"] == "5");
    }
  }
  CHECK(saw_p5);

  const auto base = SimplicialModel::reduced_base(10);
  SpanVec a(base), b(base);
  a.push(6, "x");
  b.push(6, "y");
  b.push(7, "stray");
  const auto w = to_json(check_equivalence(a, b));
  CHECK(w["valid"] == false);
  CHECK(w["pairs"].size() == 1);
  CHECK(w["leftover_right"][0]["label"] == "7");
}

TEST_CASE("every construction keeps payloads unique") {
  const QuadField K = QuadField::from_d(-1, 40);
  const auto base = SimplicialModel::reduced_base(40);
  const auto zeta = SpanVec::objective_zeta(base);
  CHECK(zeta.has_unique_payloads());
  CHECK(convolve(zeta, zeta).has_unique_payloads());
  CHECK(add(zeta, zeta).has_unique_payloads());
  CHECK(add(zeta, SpanVec::objective_delta(base)).has_unique_payloads());
  CHECK(pushforward_norm(
            SpanVec::objective_zeta(SimplicialModel::reduced_ideal(K)))
            .has_unique_payloads());
  CHECK(reduce_initial(SpanVec::objective_zeta(SimplicialModel::full_base(40)))
            .has_unique_payloads());
}

}  // TEST_SUITE
