#pragma once

// Law checks by deterministic sampling, for categories too large to
// materialize. The caller supplies the structure as callbacks.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cattool/report.hpp"

namespace cattool {

template <class Obj, class Mor>
struct LazyCategory {
  std::function<Obj(const Mor&)> dom;
  std::function<Obj(const Mor&)> cod;
  std::function<Mor(const Obj&)> id;
  // f then g
  std::function<Mor(const Mor&, const Mor&)> compose;
  std::function<bool(const Mor&, const Mor&)> equal;
  std::function<std::string(const Mor&)> show;
  // Draws a morphism; the object argument, when given, fixes the domain.
  std::function<Mor(std::mt19937_64&)> sample;
  std::function<Mor(const Obj&, std::mt19937_64&)> sample_from;
};

template <class Obj, class Mor>
Report sampled_laws(const LazyCategory<Obj, Mor>& c, std::size_t samples, std::uint64_t seed) {
  Report report("sampled category laws");
  report.note("seed " + std::to_string(seed) + ", " + std::to_string(samples) + " samples");
  std::mt19937_64 rng(seed);
  Report left("left unit"), right("right unit"), assoc("associativity");
  for (std::size_t i = 0; i < samples; ++i) {
    Mor f = c.sample(rng);
    Mor g = c.sample_from(c.cod(f), rng);
    Mor h = c.sample_from(c.cod(g), rng);
    left.tick();
    if (!c.equal(c.compose(c.id(c.dom(f)), f), f))
      left.fail("id then f differs from f", {{"f", c.show(f)}});
    right.tick();
    if (!c.equal(c.compose(f, c.id(c.cod(f))), f))
      right.fail("f then id differs from f", {{"f", c.show(f)}});
    assoc.tick();
    Mor a = c.compose(c.compose(f, g), h);
    Mor b = c.compose(f, c.compose(g, h));
    if (!c.equal(a, b))
      assoc.fail("(f then g) then h differs from f then (g then h)",
                 {{"f", c.show(f)},
                  {"g", c.show(g)},
                  {"h", c.show(h)},
                  {"(f;g);h", c.show(a)},
                  {"f;(g;h)", c.show(b)}});
  }
  report.add(std::move(left));
  report.add(std::move(right));
  report.add(std::move(assoc));
  return report;
}

// Integer matrices: Hom(l, m) is the l x m matrices, and f then g is the
// matrix product f * g.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<long long> data;  // row-major

  long long at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
  }
};

Matrix matrix_identity(std::size_t n);
Matrix matrix_product(const Matrix& a, const Matrix& b);
std::string matrix_string(const Matrix& m);

/// Dimensions 1..max_dim, sampled entries in [-entry_bound, entry_bound].
LazyCategory<std::size_t, Matrix> matrix_category(std::size_t max_dim = 3, long long entry_bound = 2);

}  // namespace cattool
