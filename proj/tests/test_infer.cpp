#include <doctest.h>

#include <fstream>
#include <functional>
#include <sstream>

#include "beliefnet/core/error.hpp"
#include "beliefnet/core/model_io.hpp"
#include "beliefnet/data/counts.hpp"
#include "beliefnet/infer/elimination.hpp"
#include "beliefnet/infer/factor.hpp"
#include "beliefnet/infer/fit.hpp"
#include "beliefnet/infer/sample.hpp"
#include "beliefnet/util/log.hpp"
#include "support.hpp"

using namespace beliefnet;

namespace {

FittedNetwork sprinkler() {
  std::ifstream in(std::string(BELIEFNET_TEST_DIR) + "/golden/sprinkler.json");
  std::ostringstream s;
  s << in.rdbuf();
  return deserialize(s.str());
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Io;
}

}  // namespace

TEST_CASE("factor product and marginalization by hand") {
  // f(A, B) with A in {0,1}, B in {0,1,2}; g(B)
  Eigen::VectorXd fv(6), gv(3);
  fv << 1, 2, 3, 4, 5, 6;
  gv << 10, 20, 30;
  Factor f({0, 1}, {2, 3}, fv), g({1}, {3}, gv);
  const Factor h = f * g;
  REQUIRE(h.size() == 6);
  CHECK(h.values()[0] == 10);
  CHECK(h.values()[5] == 180);
  const Factor sa = f.sum_out(0);
  CHECK(sa.scope() == std::vector<int>{1});
  CHECK(sa.values()[2] == 9);
  const Factor r = f.reduce(1, 1);
  CHECK(r.scope() == std::vector<int>{0});
  CHECK(r.values()[1] == 5);
  const Factor t = f.reordered({1, 0});
  CHECK(t.values()[1] == 4);  // (B=0, A=1)
  CHECK(Factor().total() == 1.0);
}

TEST_CASE("sprinkler posteriors by hand enumeration") {
  const auto net = sprinkler();
  const auto w = posterior(net, "WetGrass");
  CHECK(w.distribution[1] == doctest::Approx(0.6471).epsilon(1e-12));
  const auto s = posterior(net, "Sprinkler", {{"WetGrass", "True"}});
  CHECK(s.distribution[1] == doctest::Approx(0.2781 / 0.6471).epsilon(1e-12));
  CHECK(s.evidence_probability == doctest::Approx(0.6471).epsilon(1e-12));
  const auto r = posterior(net, "Rain", {{"WetGrass", "True"}});
  CHECK(r.distribution[1] == doctest::Approx(0.4581 / 0.6471).epsilon(1e-12));
  // Explaining away: observing rain lowers the sprinkler posterior.
  const auto sr = posterior(net, "Sprinkler", {{"WetGrass", "True"}, {"Rain", "True"}});
  CHECK(sr.distribution[1] == doctest::Approx(0.0891 / 0.4581).epsilon(1e-12));
  CHECK(s.levels == std::vector<std::string>{"False", "True"});
}

TEST_CASE("posterior matches enumeration under any elimination order") {
  Rng rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    bntest::RandomNetOptions opt;
    opt.max_nodes = 7;
    auto net = bntest::random_network(rng, opt);
    const int n = static_cast<int>(net.size());
    const auto joint = bntest::enumerate_joint(net);
    const int target = bntest::uniform_int(rng, 0, n - 1);
    std::map<int, int> ev;
    for (int v = 0; v < n; ++v) {
      if (v != target && uniform01(rng) < 0.3) ev[v] = bntest::uniform_int(rng, 0, net.variable(v).cardinality() - 1);
    }
    double pe = 0.0;
    const auto expected = bntest::enumerate_posterior(joint, target, ev, &pe);
    const auto got = posterior(net, net.variable(target).name(), bntest::evidence_of(net, ev));
    CHECK((got.distribution - expected).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(got.evidence_probability == doctest::Approx(pe).epsilon(1e-10));
    CHECK(std::exp(got.log_evidence_probability) == doctest::Approx(pe).epsilon(1e-10));

    std::vector<std::string> order;
    for (int v = n - 1; v >= 0; --v) {
      if (v != target && !ev.contains(v)) order.push_back(net.variable(v).name());
    }
    const auto ordered =
        posterior(net, net.variable(target).name(), bntest::evidence_of(net, ev), order);
    CHECK((ordered.distribution - expected).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("joint posterior over two variables") {
  Rng rng(14);
  auto net = bntest::random_network(rng, {4, 6});
  const auto joint = bntest::enumerate_joint(net);
  const auto jq = joint_posterior(net, {0, 1}, std::vector<int>(net.size(), kUnobserved));
  const auto pair = bntest::enumerate_pair(joint, 0, 1);
  for (int a = 0; a < pair.rows(); ++a) {
    for (int b = 0; b < pair.cols(); ++b) {
      CHECK(jq.joint.values()[a * pair.cols() + b] == doctest::Approx(pair(a, b)).epsilon(1e-12));
    }
  }
}

TEST_CASE("inference errors") {
  const auto net = sprinkler();
  CHECK(kind_of([&] { posterior(net, "Snow"); }) == ErrorKind::UnknownVariable);
  CHECK(kind_of([&] { posterior(net, "Rain", {{"Cloudy", "Maybe"}}); }) == ErrorKind::UnknownLevel);
  CHECK(kind_of([&] { posterior(net, "Rain", {{"Rain", "True"}}); }) == ErrorKind::InvalidArgument);
  // WetGrass is never True without sprinkler or rain.
  CHECK(kind_of([&] {
          posterior(net, "Cloudy",
                    {{"Sprinkler", "False"}, {"Rain", "False"}, {"WetGrass", "True"}});
        }) == ErrorKind::ZeroProbabilityEvidence);
  // Barren WetGrass and Sprinkler are pruned; Cloudy must be in the order.
  CHECK(kind_of([&] { posterior(net, "Rain", {}, std::vector<std::string>{"Sprinkler"}); }) ==
        ErrorKind::InvalidArgument);
}

TEST_CASE("conditional table sweeps every level of the evidence variable") {
  const auto net = sprinkler();
  const auto rows = conditional_table(net, "Rain", "Cloudy");
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].evidence.empty());
  CHECK(rows[0].distribution[1] == doctest::Approx(0.5));
  CHECK(rows[1].evidence.assignments().at("Cloudy") == "False");
  CHECK(rows[1].distribution[1] == doctest::Approx(0.2));
  CHECK(rows[2].distribution[1] == doctest::Approx(0.8));
}

TEST_CASE("bayes and maximum-likelihood tables follow the closed forms") {
  CountTable ct;
  ct.variable = 0;
  ct.parents = {1};
  ct.parent_cards = {3};
  ct.counts.resize(3, 3);
  ct.counts << 5, 0, 1, 0, 0, 0, 2, 2, 4;
  const auto b = bayes_table(ct, 1.0);
  CHECK(b(0, 0) == (5.0 + 1) / (6 + 3));
  CHECK(b(1, 2) == 1.0 / 3);
  CHECK(b(2, 2) == (4.0 + 1) / (8 + 3));
  const auto half = bayes_table(ct, 0.5);
  CHECK(half(0, 1) == 0.5 / (6 + 1.5));
  std::vector<int> unseen;
  const auto m = mle_table(ct, &unseen);
  CHECK(m(0, 0) == 5.0 / 6);
  CHECK(m(1, 0) == 1.0 / 3);
  CHECK(unseen == std::vector<int>{1});
}

TEST_CASE("fit_bayes reproduces smoothed counts from data") {
  const auto truth = sprinkler();
  const auto data = sample(truth, 2000, 3);
  const auto fitted = fit_bayes(truth.dag(), data, 1.0);
  const int w = fitted.index_of("WetGrass");
  const auto ct = counts(data, "WetGrass", {"Sprinkler", "Rain"});
  for (int j = 0; j < 4; ++j) {
    const double nij = static_cast<double>(ct.counts.row(j).sum());
    for (int k = 0; k < 2; ++k) {
      CHECK(fitted.cpt(w).table(j, k) == (ct.counts(j, k) + 1.0) / (nij + 2.0));
    }
  }
  CHECK(kind_of([&] { fit_bayes(truth.dag(), data, 0.0); }) == ErrorKind::InvalidArgument);

  // WetGrass is never True with neither sprinkler nor rain, so MLE keeps the
  // structural zero that Bayes smooths away.
  const auto mle = fit_mle(truth.dag(), data);
  CHECK(mle.cpt(w).table(0, 1) == 0.0);
  CHECK(fitted.cpt(w).table(0, 1) > 0.0);
}

TEST_CASE("fit_mle falls back to uniform rows with one warning per table") {
  auto dag = Dag::from_parents({"A", "B"}, {{"B", {"A"}}});
  DataTable data({Variable("A", {"a0", "a1", "a2"}), Variable("B", {"b0", "b1"})},
                 {{0, 0, 1, kMissing}, {0, 1, 1, 1}});
  std::vector<std::string> warnings;
  log::ScopedSink sink([&](const std::string& m) { warnings.push_back(m); });
  const auto net = fit_mle(dag, data);
  CHECK(net.cpt(1).table(2, 0) == 0.5);
  CHECK(net.cpt(1).table(0, 1) == 0.5);
  CHECK(net.cpt(0).table(0, 0) == doctest::Approx(2.0 / 3));
  CHECK(warnings.size() == 1);
}

TEST_CASE("ancestral sampling reproduces the marginals") {
  const auto net = sprinkler();
  const auto a = sample(net, 20000, 77);
  const auto b = sample(net, 20000, 77);
  CHECK(a == b);
  const int w = a.index_of("WetGrass");
  double wet = 0;
  for (std::size_t r = 0; r < a.rows(); ++r) wet += a.value(r, w);
  // Standard error is about 0.0034; allow five.
  CHECK(std::abs(wet / 20000 - 0.6471) < 0.017);
}
