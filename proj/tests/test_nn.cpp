#include <cmath>
#include <cstdint>
#include <memory>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "fer/errors.hpp"
#include "fer/nn/graph.hpp"
#include "fer/nn/layers.hpp"
#include "fer/nn/ops.hpp"
#include "fer/nn/weights.hpp"
#include "fer/rng.hpp"
#include "test_util.hpp"

using namespace fer;
using namespace fer::nn;

namespace {

Tensor random_tensor(std::vector<int> shape, std::uint64_t seed,
                     float scale = 1.0f) {
  Tensor t(std::move(shape));
  Rng rng(seed);
  for (auto& v : t.data) {
    v = static_cast<float>(rng.uniform(-1.0, 1.0)) * scale;
  }
  return t;
}

double dot(const std::vector<float>& a, const std::vector<float>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += double(a[i]) * double(b[i]);
  return s;
}

}  // namespace

TEST_CASE("same-padding geometry: ceil output, smaller pad half leads") {
  ConvGeom g = make_conv_geom(5, 5, 3, 3, 2, 2, Padding::kSame);
  CHECK(g.out_h == 3);
  CHECK(g.out_w == 3);
  CHECK(g.pad_top == 1);  // total pad 2, split 1/1
  CHECK(g.pad_left == 1);

  g = make_conv_geom(5, 5, 2, 2, 2, 2, Padding::kSame);
  CHECK(g.out_h == 3);
  CHECK(g.pad_top == 0);  // total pad 1: smaller half first

  g = make_conv_geom(6, 6, 4, 4, 2, 2, Padding::kSame);
  CHECK(g.out_h == 3);
  CHECK(g.pad_top == 1);  // total pad 2

  g = make_conv_geom(7, 7, 3, 3, 1, 1, Padding::kSame);
  CHECK(g.out_h == 7);
  CHECK(g.pad_top == 1);

  g = make_conv_geom(5, 5, 3, 3, 2, 2, Padding::kValid);
  CHECK(g.out_h == 2);
  CHECK(g.pad_top == 0);
}

TEST_CASE("col2im is the exact adjoint of im2col") {
  struct Case {
    int h, w, c, k, s;
    Padding pad;
  };
  for (const Case& tc : {Case{6, 5, 3, 3, 2, Padding::kSame},
                         Case{7, 7, 2, 4, 3, Padding::kSame},
                         Case{8, 6, 1, 3, 1, Padding::kValid},
                         Case{5, 9, 4, 2, 2, Padding::kValid}}) {
    ConvGeom g = make_conv_geom(tc.h, tc.w, tc.k, tc.k, tc.s, tc.s, tc.pad);
    const std::size_t img_n = std::size_t(tc.h) * tc.w * tc.c;
    const std::size_t col_n = std::size_t(g.out_h) * g.out_w * tc.k * tc.k * tc.c;

    Tensor y = random_tensor({int(img_n)}, 11);
    Tensor x = random_tensor({int(col_n)}, 12);
    std::vector<float> fy(col_n), bx(img_n);
    im2col(y.data.data(), tc.c, g, fy.data());
    col2im(x.data.data(), tc.c, g, bx.data());

    // <im2col(y), x> == <y, col2im(x)>
    CHECK(dot(fy, x.data) ==
          doctest::Approx(dot(y.data, bx)).epsilon(1e-5));
  }
}

TEST_CASE("conv forward matches a naive sliding-window oracle") {
  Graph g("tiny", 31);
  g.add_input("in");
  g.add(std::make_unique<Conv2DLayer>("conv", 3, 3, 3, 2, 2, Padding::kSame,
                                      Activation::kLinear, true));
  Tensor x = random_tensor({2, 5, 6, 2}, 21);
  Tensor y = g.forward(x, false);
  REQUIRE(y.shape == std::vector<int>{2, 3, 3, 3});

  Tensor w, b;
  for (auto& p : g.params()) {
    if (p.name == "conv/kernel") w = *p.value;
    if (p.name == "conv/bias") b = *p.value;
  }
  REQUIRE(w.shape == std::vector<int>{3, 3, 2, 3});

  ConvGeom geom = make_conv_geom(5, 6, 3, 3, 2, 2, Padding::kSame);
  for (int n = 0; n < 2; ++n) {
    for (int oy = 0; oy < geom.out_h; ++oy) {
      for (int ox = 0; ox < geom.out_w; ++ox) {
        for (int f = 0; f < 3; ++f) {
          double acc = b.data[std::size_t(f)];
          for (int ky = 0; ky < 3; ++ky) {
            for (int kx = 0; kx < 3; ++kx) {
              int iy = oy * 2 - geom.pad_top + ky;
              int ix = ox * 2 - geom.pad_left + kx;
              if (iy < 0 || iy >= 5 || ix < 0 || ix >= 6) continue;
              for (int c = 0; c < 2; ++c) {
                acc += double(x.at4(n, iy, ix, c)) *
                       double(w.data[((std::size_t(ky) * 3 + kx) * 2 + c) * 3 + f]);
              }
            }
          }
          CHECK(y.at4(n, oy, ox, f) == doctest::Approx(acc).epsilon(1e-4));
        }
      }
    }
  }
}

TEST_CASE("matmul agrees with naive loops under every transpose mode") {
  const int m = 4, k = 5, n = 3;
  Tensor a = random_tensor({m, k}, 1);
  Tensor b = random_tensor({k, n}, 2);
  Tensor at = random_tensor({k, m}, 3);
  Tensor bt = random_tensor({n, k}, 4);

  auto naive = [&](const Tensor& A, const Tensor& B, bool ta, bool tb) {
    std::vector<float> c(std::size_t(m) * n, 0.0f);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) {
        double acc = 0.0;
        for (int l = 0; l < k; ++l) {
          float av = ta ? A.at2(l, i) : A.at2(i, l);
          float bv = tb ? B.at2(j, l) : B.at2(l, j);
          acc += double(av) * double(bv);
        }
        c[std::size_t(i) * n + j] = float(acc);
      }
    }
    return c;
  };

  std::vector<float> c(std::size_t(m) * n);
  matmul(a.data.data(), b.data.data(), c.data(), m, k, n, false, false, false);
  auto want = naive(a, b, false, false);
  for (std::size_t i = 0; i < c.size(); ++i)
    CHECK(c[i] == doctest::Approx(want[i]).epsilon(1e-5));

  matmul(at.data.data(), b.data.data(), c.data(), m, k, n, true, false, false);
  want = naive(at, b, true, false);
  for (std::size_t i = 0; i < c.size(); ++i)
    CHECK(c[i] == doctest::Approx(want[i]).epsilon(1e-5));

  matmul(a.data.data(), bt.data.data(), c.data(), m, k, n, false, true, false);
  want = naive(a, bt, false, true);
  for (std::size_t i = 0; i < c.size(); ++i)
    CHECK(c[i] == doctest::Approx(want[i]).epsilon(1e-5));

  // accumulate adds on top of existing contents
  std::vector<float> acc = want;
  matmul(a.data.data(), bt.data.data(), acc.data(), m, k, n, false, true, true);
  for (std::size_t i = 0; i < acc.size(); ++i)
    CHECK(acc[i] == doctest::Approx(2.0 * want[i]).epsilon(1e-5));
}

TEST_CASE("softmax rows are stable and sum to one") {
  Tensor logits({2, 3});
  logits.data = {1.0f, 2.0f, 3.0f, 1000.0f, 1000.0f, 999.0f};
  Tensor p = softmax_rows(logits);
  for (int r = 0; r < 2; ++r) {
    double s = 0.0;
    for (int c = 0; c < 3; ++c) {
      CHECK(p.at2(r, c) > 0.0f);
      s += p.at2(r, c);
    }
    CHECK(s == doctest::Approx(1.0).epsilon(1e-6));
  }
  CHECK(p.at2(0, 2) > p.at2(0, 1));
  CHECK(std::isfinite(p.at2(1, 0)));
}

TEST_CASE("categorical cross-entropy and its gradient, by hand") {
  Tensor logits({2, 3}, 0.0f);  // uniform rows
  LossResult r = softmax_cross_entropy(logits, {1, 2});
  CHECK(r.value == doctest::Approx(std::log(3.0)).epsilon(1e-6));
  // dlogits = (softmax - onehot) / N
  CHECK(r.dlogits.at2(0, 0) == doctest::Approx((1.0 / 3.0) / 2.0));
  CHECK(r.dlogits.at2(0, 1) == doctest::Approx((1.0 / 3.0 - 1.0) / 2.0));
  CHECK(r.dlogits.at2(1, 2) == doctest::Approx((1.0 / 3.0 - 1.0) / 2.0));
}

TEST_CASE("binary cross-entropy from logits, by hand") {
  Tensor logits({2, 1}, 0.0f);
  Tensor targets({2, 1});
  targets.data = {1.0f, 0.0f};
  LossResult r = sigmoid_binary_cross_entropy(logits, targets);
  CHECK(r.value == doctest::Approx(std::log(2.0)).epsilon(1e-6));
  // d/dz = (sigmoid(z) - t) / N
  CHECK(r.dlogits.at2(0, 0) == doctest::Approx((0.5 - 1.0) / 2.0));
  CHECK(r.dlogits.at2(1, 0) == doctest::Approx((0.5 - 0.0) / 2.0));
}

TEST_CASE("adam follows the bias-corrected reference update") {
  Tensor value({3});
  value.data = {1.0f, -2.0f, 0.5f};
  Tensor grad({3});
  grad.data = {0.5f, -0.25f, 0.0f};
  std::vector<ParamView> params{{"p", &value, &grad, true}};

  Adam::Config cfg;  // lr 1e-3, beta1 0.9, beta2 0.999, eps 1e-7
  Adam opt(cfg);

  // Double-precision reference over two identical steps.
  std::array<double, 3> ref = {1.0, -2.0, 0.5};
  std::array<double, 3> m{}, v{};
  const std::array<double, 3> g = {0.5, -0.25, 0.0};
  for (int t = 1; t <= 2; ++t) {
    for (int i = 0; i < 3; ++i) {
      m[i] = 0.9 * m[i] + 0.1 * g[i];
      v[i] = 0.999 * v[i] + 0.001 * g[i] * g[i];
      double mhat = m[i] / (1.0 - std::pow(0.9, t));
      double vhat = v[i] / (1.0 - std::pow(0.999, t));
      ref[i] -= 1e-3 * mhat / (std::sqrt(vhat) + 1e-7);
    }
    opt.step(params);
    for (int i = 0; i < 3; ++i) {
      CHECK(value.data[std::size_t(i)] ==
            doctest::Approx(ref[i]).epsilon(1e-6));
    }
  }
  CHECK(opt.iterations() == 2);
}

TEST_CASE("adam skips frozen parameters entirely") {
  Tensor value({2}, 1.0f);
  Tensor grad({2}, 1.0f);
  std::vector<ParamView> params{{"frozen", &value, &grad, true}};
  Adam opt({});
  // What the optimizer never sees cannot move; trainable_params filtering
  // upstream decides visibility, so stepping an empty list is the frozen path.
  opt.step({});
  CHECK(value.data[0] == 1.0f);
  opt.step(params);
  CHECK(value.data[0] != 1.0f);
}

namespace {

// Smooth everywhere (tanh/sigmoid, average pooling), so finite differences
// converge: kinked activations would poison random probes.
Graph smooth_net(std::uint64_t seed) {
  Graph g("probe", seed);
  g.add_input("in");
  g.add(std::make_unique<Conv2DLayer>("c1", 4, 3, 3, 1, 1, Padding::kSame,
                                      Activation::kTanh, true));
  g.add(std::make_unique<BatchNormLayer>("bn"));
  g.add(std::make_unique<Conv2DLayer>("c2", 3, 3, 3, 2, 2, Padding::kSame,
                                      Activation::kSigmoid, true));
  g.add(std::make_unique<AvgPool2DLayer>("pool", 2, 2, 2, 2, Padding::kValid));
  g.add(std::make_unique<FlattenLayer>("flat"));
  g.add(std::make_unique<DenseLayer>("fc", 5, Activation::kTanh, true));
  g.add(std::make_unique<DenseLayer>("out", 3, Activation::kLinear, true));
  return g;
}

}  // namespace

TEST_CASE("backward gradients agree with central finite differences") {
  Graph g = smooth_net(17);
  Tensor x = random_tensor({2, 8, 8, 3}, 23);
  const std::vector<int> labels = {0, 2};

  auto loss_value = [&]() {
    Tensor y = g.forward(x, true);
    return softmax_cross_entropy(y, labels).value;
  };

  Tensor y = g.forward(x, true);
  LossResult loss = softmax_cross_entropy(y, labels);
  Tensor dx = g.backward(loss.dlogits);
  REQUIRE(dx.shape == x.shape);

  // Snapshot analytic gradients before probing mutates any state.
  struct Probe {
    float* value;
    double analytic;
  };
  std::vector<Probe> probes;
  Rng pick(91);
  for (auto& p : g.params()) {
    if (!p.learnable) continue;
    for (int j = 0; j < 4; ++j) {
      std::size_t i = pick.next_below(p.value->data.size());
      probes.push_back({&p.value->data[i], double(p.grad->data[i])});
    }
  }
  for (int j = 0; j < 8; ++j) {
    std::size_t i = pick.next_below(x.data.size());
    probes.push_back({&x.data[i], double(dx.data[i])});
  }

  const double eps = 2e-3;
  int live = 0;
  for (const Probe& probe : probes) {
    const float saved = *probe.value;
    *probe.value = saved + float(eps);
    const double up = loss_value();
    *probe.value = saved - float(eps);
    const double down = loss_value();
    *probe.value = saved;
    const double fd = (up - down) / (2.0 * eps);
    CHECK(std::abs(fd - probe.analytic) <=
          doctest::Approx(1e-3 * std::max({1e-3, std::abs(fd),
                                           std::abs(probe.analytic)})));
    if (std::abs(probe.analytic) > 1e-6) ++live;
  }
  // The probe only means something if most gradients are alive.
  CHECK(live > int(probes.size()) / 2);
}

TEST_CASE("batch normalization: batch stats in training, moving at rest") {
  Graph g("bn", 5);
  g.add_input("in");
  g.add(std::make_unique<BatchNormLayer>("bn"));
  Tensor x({4, 1, 1, 2});
  Rng rng(3);
  for (auto& v : x.data) v = float(rng.uniform(2.0, 6.0));

  Tensor y = g.forward(x, true);
  // Per-channel batch statistics almost vanish under gamma=1, beta=0.
  for (int c = 0; c < 2; ++c) {
    double mean = 0.0;
    for (int n = 0; n < 4; ++n) mean += y.at4(n, 0, 0, c);
    CHECK(std::abs(mean / 4.0) < 1e-5);
  }

  // Moving statistics start at (0, 1) and crawl with momentum 0.99, so a
  // single update leaves inference output close to the raw input.
  Tensor infer = g.forward(x, false);
  for (std::size_t i = 0; i < x.data.size(); ++i) {
    CHECK(infer.data[i] == doctest::Approx(x.data[i]).epsilon(0.05));
  }

  // A frozen layer sticks to moving statistics even in training mode.
  Tensor before_mean, before_var;
  for (auto& p : g.params()) {
    if (p.name == "bn/moving_mean") before_mean = *p.value;
    if (p.name == "bn/moving_var") before_var = *p.value;
  }
  g.layer("bn").set_trainable(false);
  Tensor frozen_train = g.forward(x, true);
  for (std::size_t i = 0; i < infer.data.size(); ++i) {
    CHECK(frozen_train.data[i] == doctest::Approx(infer.data[i]).epsilon(1e-6));
  }
  for (auto& p : g.params()) {
    if (p.name == "bn/moving_mean") CHECK(p.value->data == before_mean.data);
    if (p.name == "bn/moving_var") CHECK(p.value->data == before_var.data);
  }
}

TEST_CASE("graphs with fan-out merge gradients additively") {
  Graph g("dag", 9);
  g.add_input("in");
  g.add(std::make_unique<DenseLayer>("a", 4, Activation::kTanh), {"in"});
  g.add(std::make_unique<DenseLayer>("b", 4, Activation::kSigmoid), {"in"});
  g.add(std::make_unique<ScaledAddLayer>("merge", 0.5f), {"a", "b"});
  g.add(std::make_unique<DenseLayer>("out", 2, Activation::kLinear), {"merge"});

  Tensor x = random_tensor({3, 6}, 41);
  auto loss_value = [&]() {
    Tensor y = g.forward(x, true);
    return softmax_cross_entropy(y, {0, 1, 0}).value;
  };
  Tensor y = g.forward(x, true);
  LossResult loss = softmax_cross_entropy(y, {0, 1, 0});
  Tensor dx = g.backward(loss.dlogits);

  const double eps = 2e-3;
  Rng pick(13);
  for (int j = 0; j < 6; ++j) {
    std::size_t i = pick.next_below(x.data.size());
    const float saved = x.data[i];
    x.data[i] = saved + float(eps);
    double up = loss_value();
    x.data[i] = saved - float(eps);
    double down = loss_value();
    x.data[i] = saved;
    double fd = (up - down) / (2.0 * eps);
    CHECK(std::abs(fd - double(dx.data[i])) <=
          doctest::Approx(1e-3 * std::max(1e-3, std::abs(fd))));
  }
}

TEST_CASE("trainable_params honors per-layer freezing") {
  Graph g = smooth_net(3);
  g.build({1, 8, 8, 3});
  auto all = g.trainable_params();
  g.layer("c1").set_trainable(false);
  auto rest = g.trainable_params();
  CHECK(rest.size() < all.size());
  for (auto& p : rest) {
    CHECK(p.name.rfind("c1/", 0) != 0);
    CHECK(p.learnable);
  }
  CHECK(g.trainable_param_count() < g.param_count());
}

TEST_CASE("weight archives round-trip bit-exactly, files and streams") {
  test::TempDir tmp("fer_weights");
  Graph g = smooth_net(27);
  g.build({1, 8, 8, 3});
  std::string path = (tmp / "net.ferw").string();
  save_graph_weights(g, path, "{\"note\":\"probe\"}");

  WeightArchive archive = load_weights(path);
  CHECK(archive.meta_json.find("probe") != std::string::npos);
  for (auto& p : g.params()) {
    auto it = archive.tensors.find(p.name);
    REQUIRE(it != archive.tensors.end());
    CHECK(it->second.shape == p.value->shape);
    CHECK(it->second.data == p.value->data);
  }

  // Perturb every weight, restore, and expect the original bits back.
  std::map<std::string, std::vector<float>> original;
  for (auto& p : g.params()) {
    original[p.name] = p.value->data;
    for (auto& v : p.value->data) v += 0.125f;
  }
  load_graph_weights(g, archive);
  for (auto& p : g.params()) CHECK(p.value->data == original[p.name]);

  // Streams are self-delimiting: two archives concatenate cleanly.
  std::stringstream ss;
  Tensor t1({2, 2});
  t1.data = {1, 2, 3, 4};
  Tensor t2({3});
  t2.data = {5, 6, 7};
  save_weights_stream(ss, {{"first", &t1}}, "{}");
  save_weights_stream(ss, {{"second", &t2}}, "{}");
  WeightArchive a1 = load_weights_stream(ss);
  WeightArchive a2 = load_weights_stream(ss);
  CHECK(a1.tensors.count("first") == 1);
  CHECK(a1.tensors.at("first").data == t1.data);
  CHECK(a2.tensors.count("second") == 1);
  CHECK(a2.tensors.at("second").data == t2.data);
}

TEST_CASE("strict restore rejects renames, reshapes and extras") {
  test::TempDir tmp("fer_weights");
  Graph g = smooth_net(33);
  g.build({1, 8, 8, 3});
  std::string path = (tmp / "net.ferw").string();
  save_graph_weights(g, path);
  WeightArchive good = load_weights(path);

  WeightArchive missing = good;
  missing.tensors.erase(missing.tensors.begin());
  CHECK_THROWS_AS(load_graph_weights(g, missing), IncompatibilityError);

  WeightArchive extra = good;
  extra.tensors["bogus/kernel"] = Tensor({1});
  CHECK_THROWS_AS(load_graph_weights(g, extra), IncompatibilityError);

  WeightArchive reshaped = good;
  reshaped.tensors.at("fc/bias") = Tensor({17});
  CHECK_THROWS_AS(load_graph_weights(g, reshaped), IncompatibilityError);

  // Flipping one byte must trip the checksum.
  std::string bytes = test::slurp(path);
  bytes[bytes.size() / 2] ^= 0x40;
  std::ofstream(tmp / "bad.ferw", std::ios::binary) << bytes;
  CHECK_THROWS_AS(load_weights((tmp / "bad.ferw").string()),
                  IncompatibilityError);
}

TEST_CASE("graph wiring mistakes are rejected up front") {
  Graph g("wires", 1);
  CHECK_THROWS_AS(g.add(std::make_unique<DenseLayer>("d", 2)),
                  ConfigurationError);
  g.add_input("in");
  CHECK_THROWS_AS(g.add_input("again"), ConfigurationError);
  g.add(std::make_unique<DenseLayer>("d", 2));
  CHECK_THROWS_AS(g.add(std::make_unique<DenseLayer>("d", 3)),
                  ConfigurationError);
  CHECK_THROWS_AS(
      g.add(std::make_unique<ScaledAddLayer>("m", 1.0f), {"d"}),
      ConfigurationError);  // arity 2, one input named
}

TEST_CASE("glorot fills are deterministic per seed and parameter name") {
  Tensor a({3, 3, 2, 4}), b({3, 3, 2, 4}), c({3, 3, 2, 4});
  glorot_uniform_fill(a, 7);
  glorot_uniform_fill(b, 7);
  glorot_uniform_fill(c, 8);
  CHECK(a.data == b.data);
  CHECK(a.data != c.data);

  // Bound = sqrt(6 / (fan_in + fan_out)) with receptive field 3*3.
  const double limit = std::sqrt(6.0 / (9 * 2 + 9 * 4));
  for (float v : a.data) CHECK(std::abs(v) <= limit + 1e-7);

  Initializer init = make_glorot_initializer(5);
  Tensor w1({4, 4}), w2({4, 4});
  init("layer/kernel", w1);
  init("other/kernel", w2);
  CHECK(w1.data != w2.data);  // name feeds the derivation
}
