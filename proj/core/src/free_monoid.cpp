#include "cattool/free_monoid.hpp"

#include <map>
#include <sstream>

#include "cattool/error.hpp"

namespace cattool {

namespace {

std::string join(const std::vector<std::size_t>& xs) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
  out << "]";
  return out.str();
}

std::vector<std::vector<std::size_t>> all_functions(std::size_t from, std::size_t to) {
  std::vector<std::vector<std::size_t>> out;
  if (to == 0) {
    if (from == 0) out.push_back({});
    return out;
  }
  std::vector<std::size_t> f(from, 0);
  while (true) {
    out.push_back(f);
    std::size_t k = 0;
    while (k < from && ++f[k] == to) f[k++] = 0;
    if (k == from) break;
  }
  return out;
}

std::map<Word, std::size_t> index_words(const std::vector<Word>& ws) {
  std::map<Word, std::size_t> idx;
  for (std::size_t i = 0; i < ws.size(); ++i) idx[ws[i]] = i;
  return idx;
}

// Fold by multiplication, written out directly so it can be compared with lift(id).
std::size_t counit(const FiniteMonoid& m, const Word& w) {
  std::size_t acc = m.unit;
  for (std::size_t x : w) acc = m.mul(acc, x);
  return acc;
}

struct HomSearch {
  const std::vector<Word>& words;
  const std::map<Word, std::size_t>& index;
  const FiniteMonoid& m;
  const std::vector<std::size_t>* pinned;
  std::vector<std::size_t> table;
  std::vector<BoundedHom> found;
  std::size_t nodes = 0;

  bool consistent(std::size_t i) const {
    const Word& w = words[i];
    std::size_t v = table[i];
    if (w.empty()) return v == m.unit;
    if (pinned && w.size() == 1 && v != (*pinned)[w[0]]) return false;
    // Every split u ++ v = w, including the empty prefix and suffix.
    for (std::size_t cut = 0; cut <= w.size(); ++cut) {
      Word u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(cut));
      Word r(w.begin() + static_cast<std::ptrdiff_t>(cut), w.end());
      std::size_t tu = table[index.at(u)], tr = table[index.at(r)];
      if (m.mul(tu, tr) != v) return false;
    }
    return true;
  }

  void run(std::size_t i) {
    if (i == words.size()) {
      found.push_back(table);
      return;
    }
    for (std::size_t v = 0; v < m.size(); ++v) {
      ++nodes;
      table[i] = v;
      if (consistent(i)) run(i + 1);
    }
  }
};

}  // namespace

std::string to_string(const Word& w) { return join(w); }

std::vector<Word> words_up_to(std::size_t gens, std::size_t max_len) {
  double count = 0, layer = 1;
  for (std::size_t l = 0; l <= max_len; ++l, layer *= static_cast<double>(gens)) count += layer;
  require_within(count, static_cast<double>(search_limit()), "words");
  std::vector<Word> out{Word{}};
  std::size_t start = 0;
  for (std::size_t len = 1; len <= max_len && gens > 0; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = start; i < end; ++i)
      for (std::size_t x = 0; x < gens; ++x) {
        Word w = out[i];
        w.push_back(x);
        out.push_back(std::move(w));
      }
    start = end;
  }
  return out;
}

Word concat(const Word& u, const Word& v) {
  Word w = u;
  w.insert(w.end(), v.begin(), v.end());
  return w;
}

Word canonical_injection(std::size_t x) { return Word{x}; }

std::size_t lift(const std::vector<std::size_t>& f, const FiniteMonoid& m, const Word& w) {
  std::size_t acc = m.unit;
  for (std::size_t x : w) acc = m.mul(acc, f.at(x));
  return acc;
}

Word free_map(const std::vector<std::size_t>& f, const Word& w) {
  Word out;
  out.reserve(w.size());
  for (std::size_t x : w) out.push_back(f.at(x));
  return out;
}

Report check_free_monoid_laws(std::size_t gens, std::size_t max_len) {
  Report report("free monoid on " + std::to_string(gens) + " generators");
  auto ws = words_up_to(gens, max_len);
  Report assoc("concatenation is associative");
  Report unit("empty word is a two-sided unit");
  for (const auto& u : ws) {
    unit.tick();
    if (concat(Word{}, u) != u || concat(u, Word{}) != u) unit.fail("unit law fails", {{"word", to_string(u)}});
    for (const auto& v : ws)
      for (const auto& w : ws) {
        assoc.tick();
        if (concat(concat(u, v), w) != concat(u, concat(v, w)))
          assoc.fail("associativity fails", {{"u", to_string(u)}, {"v", to_string(v)}, {"w", to_string(w)}});
      }
  }
  report.add(std::move(assoc));
  report.add(std::move(unit));
  return report;
}

Report check_free_functor_laws(std::size_t max_set, std::size_t max_len) {
  Report report("Free preserves identities and composition");
  Report ident("Free(id) = id");
  Report comp("Free(f;g) = Free(f);Free(g)");
  for (std::size_t a = 0; a <= max_set; ++a) {
    auto ws = words_up_to(a, max_len);
    std::vector<std::size_t> id(a);
    for (std::size_t i = 0; i < a; ++i) id[i] = i;
    for (const auto& w : ws) {
      ident.tick();
      if (free_map(id, w) != w) ident.fail("identity moved a word", {{"word", to_string(w)}});
    }
    for (std::size_t b = 0; b <= max_set; ++b)
      for (std::size_t c = 0; c <= max_set; ++c)
        for (const auto& f : all_functions(a, b))
          for (const auto& g : all_functions(b, c)) {
            std::vector<std::size_t> fg(a);
            for (std::size_t i = 0; i < a; ++i) fg[i] = g[f[i]];
            for (const auto& w : ws) {
              comp.tick();
              if (free_map(fg, w) != free_map(g, free_map(f, w)))
                comp.fail("composition not preserved", {{"f", join(f)}, {"g", join(g)}, {"word", to_string(w)}});
            }
          }
  }
  report.add(std::move(ident));
  report.add(std::move(comp));
  return report;
}

Report check_lift_is_hom(const std::vector<std::size_t>& f, const FiniteMonoid& m, std::size_t max_len) {
  Report report("lift(" + join(f) + ") is a monoid hom");
  auto ws = words_up_to(f.size(), max_len);
  report.tick();
  if (lift(f, m, Word{}) != m.unit) report.fail("empty word does not go to the unit", {{"f", join(f)}});
  for (const auto& u : ws)
    for (const auto& v : ws) {
      report.tick();
      std::size_t lhs = lift(f, m, concat(u, v));
      std::size_t rhs = m.mul(lift(f, m, u), lift(f, m, v));
      if (lhs != rhs)
        report.fail("concatenation not preserved", {{"u", to_string(u)}, {"v", to_string(v)}, {"f", join(f)}});
    }
  return report;
}

std::vector<BoundedHom> enumerate_bounded_homs(std::size_t gens, const FiniteMonoid& m, std::size_t max_len,
                                               const std::vector<std::size_t>* pinned) {
  auto ws = words_up_to(gens, max_len);
  auto idx = index_words(ws);
  HomSearch s{ws, idx, m, pinned, std::vector<std::size_t>(ws.size(), 0), {}, 0};
  if (m.size() > 0) s.run(0);
  return s.found;
}

Report check_uvp(std::size_t gens, const FiniteMonoid& m, const std::vector<std::size_t>& f, std::size_t max_len) {
  auto ws = words_up_to(gens, max_len);
  double space = 1;
  for (std::size_t i = 0; i < ws.size(); ++i) space *= static_cast<double>(m.size());
  if (!(gens <= 2 && m.size() <= 3 && max_len <= 3) && space > static_cast<double>(search_limit()))
    throw SizeLimitError("free monoid UVP: needs |X| <= 2, |M| <= 3, L <= 3 (or a candidate count within the limit)");
  if (f.size() != gens) throw ShapeError("f must have one entry per generator");
  for (std::size_t v : f)
    if (v >= m.size()) throw ShapeError("f value out of range: " + std::to_string(v));

  Report report("universal property of the free monoid, f = " + join(f));
  report.note("checked on the " + std::to_string(ws.size()) + " words of length <= " + std::to_string(max_len));

  Report factor("lift(f) after the injection is f");
  for (std::size_t x = 0; x < gens; ++x) {
    factor.tick();
    if (lift(f, m, canonical_injection(x)) != f[x])
      factor.fail("lift(f)([x]) differs from f(x)", {{"x", std::to_string(x)}});
  }
  report.add(std::move(factor));
  report.add(check_lift_is_hom(f, m, max_len));

  Report unique("lift(f) is the only bounded hom extending f");
  auto idx = index_words(ws);
  HomSearch s{ws, idx, m, &f, std::vector<std::size_t>(ws.size(), 0), {}, 0};
  if (m.size() > 0) s.run(0);
  unique.tick(s.nodes);
  unique.note("search covered " + std::to_string(static_cast<unsigned long long>(space)) + " candidate tables");
  if (s.found.size() != 1) {
    std::vector<Witness> ws_out{{"f", join(f)}, {"bounded homs extending f", std::to_string(s.found.size())}};
    if (s.found.size() >= 2) {
      ws_out.push_back({"h1", join(s.found[0])});
      ws_out.push_back({"h2", join(s.found[1])});
    }
    unique.fail("expected exactly one bounded hom extending f", std::move(ws_out));
  } else {
    for (std::size_t i = 0; i < ws.size(); ++i) {
      if (s.found[0][i] != lift(f, m, ws[i])) {
        unique.fail("the unique hom differs from lift(f)", {{"word", to_string(ws[i])}});
        break;
      }
    }
  }
  report.add(std::move(unique));
  return report;
}

Report check_hom_candidate(std::size_t gens, const FiniteMonoid& m, const std::vector<std::size_t>& f,
                           const BoundedHom& table, std::size_t max_len) {
  auto ws = words_up_to(gens, max_len);
  if (table.size() != ws.size())
    throw ShapeError("candidate needs one entry per word of length <= " + std::to_string(max_len) + " (" +
                     std::to_string(ws.size()) + "), got " + std::to_string(table.size()));
  if (f.size() != gens) throw ShapeError("f must have one entry per generator");
  for (std::size_t v : table)
    if (v >= m.size()) throw ShapeError("candidate value out of range: " + std::to_string(v));
  auto idx = index_words(ws);
  Report report("candidate hom " + join(table));
  Report unit("unit: [] goes to the unit");
  unit.tick();
  if (table[0] != m.unit)
    unit.fail("empty word does not go to the unit", {{"word", "[]"}, {"value", m.elements[table[0]]}});
  Report agree("agrees with f on generators");
  for (std::size_t x = 0; x < gens; ++x) {
    agree.tick();
    std::size_t v = table[idx.at(canonical_injection(x))];
    if (v != f.at(x))
      agree.fail("differs from f on a generator", {{"word", to_string(canonical_injection(x))},
                                                   {"value", m.elements[v]}, {"f", m.elements[f[x]]}});
  }
  Report conc("concatenation within the bound");
  for (const auto& u : ws)
    for (const auto& v : ws) {
      if (u.size() + v.size() > max_len) continue;
      conc.tick();
      std::size_t lhs = table[idx.at(concat(u, v))];
      std::size_t rhs = m.mul(table[idx.at(u)], table[idx.at(v)]);
      if (lhs != rhs)
        conc.fail("t(u ++ v) differs from t(u) * t(v)",
                  {{"u", to_string(u)}, {"v", to_string(v)}, {"t(u ++ v)", m.elements[lhs]}, {"t(u) * t(v)", m.elements[rhs]}});
    }
  Report equal("equals lift(f)");
  for (std::size_t i = 0; i < ws.size(); ++i) {
    equal.tick();
    std::size_t l = lift(f, m, ws[i]);
    if (table[i] != l)
      equal.fail("differs from lift(f)", {{"word", to_string(ws[i])}, {"candidate", m.elements[table[i]]}, {"lift(f)", m.elements[l]}});
  }
  report.add(std::move(unit));
  report.add(std::move(agree));
  report.add(std::move(conc));
  report.add(std::move(equal));
  return report;
}

Report check_uvp_all(std::size_t gens, const FiniteMonoid& m, std::size_t max_len) {
  Report report("universal property for every f : X -> M");
  for (const auto& f : all_functions(gens, m.size())) {
    report.tick();
    report.add(check_uvp(gens, m, f, max_len));
  }
  return report;
}

bool is_monoid_hom(const std::vector<std::size_t>& h, const FiniteMonoid& a, const FiniteMonoid& b) {
  if (h.size() != a.size() || h.at(a.unit) != b.unit) return false;
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y)
      if (h[a.mul(x, y)] != b.mul(h[x], h[y])) return false;
  return true;
}

std::vector<std::vector<std::size_t>> enumerate_monoid_homs(const FiniteMonoid& a, const FiniteMonoid& b) {
  std::vector<std::vector<std::size_t>> out;
  for (auto& h : all_functions(a.size(), b.size()))
    if (is_monoid_hom(h, a, b)) out.push_back(std::move(h));
  return out;
}

Report free_forget_adjunction(std::size_t gens, const FiniteMonoid& m, std::size_t max_len) {
  Report report("Free -| Forget on " + std::to_string(gens) + " generators");
  report.note("homs out of the free monoid are observed on words of length <= " + std::to_string(max_len));
  auto ws = words_up_to(gens, max_len);
  auto idx = index_words(ws);
  auto alpha = [&idx](const BoundedHom& phi, std::size_t g) {
    std::vector<std::size_t> f(g);
    for (std::size_t x = 0; x < g; ++x) f[x] = phi[idx.at(canonical_injection(x))];
    return f;
  };
  auto lift_table = [&ws](const std::vector<std::size_t>& f, const FiniteMonoid& mm) {
    BoundedHom t(ws.size());
    for (std::size_t i = 0; i < ws.size(); ++i) t[i] = lift(f, mm, ws[i]);
    return t;
  };

  auto homs = enumerate_bounded_homs(gens, m, max_len);
  auto fns = all_functions(gens, m.size());
  Report bij("alpha is a bijection with inverse lift");
  bij.tick();
  if (homs.size() != fns.size())
    bij.fail("hom-set sizes differ",
             {{"|Hom(Free X, M)|", std::to_string(homs.size())}, {"|Hom(X, U M)|", std::to_string(fns.size())}});
  for (const auto& f : fns) {
    bij.tick();
    if (alpha(lift_table(f, m), gens) != f) bij.fail("alpha(lift f) differs from f", {{"f", join(f)}});
  }
  for (const auto& phi : homs) {
    bij.tick();
    if (lift_table(alpha(phi, gens), m) != phi) bij.fail("lift(alpha phi) differs from phi", {{"phi", join(phi)}});
  }
  report.add(std::move(bij));

  Report nat_x("natural in X");
  for (std::size_t g2 = 0; g2 <= 2; ++g2) {
    auto ws2 = words_up_to(g2, max_len);
    for (const auto& g : all_functions(g2, gens)) {
      for (const auto& phi : homs) {
        // Free(g);phi on the words over X'.
        BoundedHom pre(ws2.size());
        for (std::size_t i = 0; i < ws2.size(); ++i) pre[i] = phi[idx.at(free_map(g, ws2[i]))];
        auto idx2 = index_words(ws2);
        std::vector<std::size_t> lhs(g2), rhs(g2);
        auto a = alpha(phi, gens);
        for (std::size_t x = 0; x < g2; ++x) {
          lhs[x] = pre[idx2.at(canonical_injection(x))];
          rhs[x] = a[g[x]];
        }
        nat_x.tick();
        if (lhs != rhs) nat_x.fail("square fails", {{"g", join(g)}, {"phi", join(phi)}});
      }
    }
  }
  report.add(std::move(nat_x));

  Report nat_m("natural in M");
  std::vector<std::pair<std::string, FiniteMonoid>> monoids{
      {"M", m}, {"trivial", monoid_trivial()}, {"bool-or", monoid_bool_or()}};
  for (const auto& [an, a] : monoids) {
    auto ahoms = enumerate_bounded_homs(gens, a, max_len);
    for (const auto& [bn, b] : monoids) {
      for (const auto& h : enumerate_monoid_homs(a, b)) {
        for (const auto& phi : ahoms) {
          BoundedHom post(phi.size());
          for (std::size_t i = 0; i < phi.size(); ++i) post[i] = h[phi[i]];
          auto lhs = alpha(post, gens);
          auto rhs = alpha(phi, gens);
          for (auto& v : rhs) v = h[v];
          nat_m.tick();
          if (lhs != rhs)
            nat_m.fail("square fails", {{"from", an}, {"to", bn}, {"h", join(h)}, {"phi", join(phi)}});
        }
      }
    }
  }
  report.add(std::move(nat_m));

  Report counit_fold("counit folds words by multiplication");
  std::vector<std::size_t> id(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) id[i] = i;
  for (const auto& w : words_up_to(m.size(), max_len)) {
    counit_fold.tick();
    if (counit(m, w) != lift(id, m, w)) counit_fold.fail("counit differs from lift(id)", {{"word", to_string(w)}});
  }
  report.add(std::move(counit_fold));

  Report tri1("Free(eta);eps_Free = id");
  for (const auto& w : ws) {
    // Free(eta) gives a word of singleton words; the counit of Free X concatenates.
    std::vector<Word> lifted;
    for (std::size_t x : w) lifted.push_back(canonical_injection(x));
    Word back;
    for (const auto& piece : lifted) back = concat(back, piece);
    tri1.tick();
    if (back != w) tri1.fail("triangle fails", {{"word", to_string(w)}});
  }
  report.add(std::move(tri1));
  Report tri2("eta_U;U(eps) = id");
  for (std::size_t x = 0; x < m.size(); ++x) {
    tri2.tick();
    if (counit(m, canonical_injection(x)) != x) tri2.fail("triangle fails", {{"element", m.elements[x]}});
  }
  report.add(std::move(tri2));
  return report;
}

}  // namespace cattool
