// Copyright 2026 The shardstab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "shardstab/harness.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace shardstab {

Deadline::Deadline(double seconds) {
  if (seconds > 0)
    end_ = std::chrono::steady_clock::now() +
           std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(seconds));
}

bool Deadline::expired() const { return end_ && std::chrono::steady_clock::now() > *end_; }

namespace {

json word_json(const std::vector<int>& word) {
  json out = json::array();
  for (int i : word) out.push_back(i + 1);
  return out;
}

// Runs body, timing it and turning exceptions into a failed check.
CheckResult run_check(const std::string& name, const std::function<void(CheckResult&)>& body) {
  CheckResult r;
  r.name = name;
  auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.passed = false;
    r.counterexample = {{"error", e.what()}};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

void fail(CheckResult& r, json counterexample) {
  r.passed = false;
  r.counterexample = std::move(counterexample);
}

struct Geometry {
  std::optional<WeylGroup> group;
  ShardModel model;
};

Geometry make_geometry(const TypeSpec& spec) {
  Geometry g;
  if (spec.cartan) g.group.emplace(*spec.cartan);
  g.model = build_shard_model(spec.arrangement, g.group ? &*g.group : nullptr);
  return g;
}

bool large_type(const CartanData& c) { return !(c.type.family == DynkinFamily::A && c.rank() <= 3); }

}  // namespace

VerificationReport verify_lattice(const TypeSpec& spec, const RunOptions& options) {
  VerificationReport report;
  report.type_label = spec.label;
  Geometry geo = make_geometry(spec);
  const RegionPoset& p = geo.model.poset;
  const std::size_t n = p.size();
  Deadline deadline(options.budget_seconds);

  report.checks.push_back(run_check("lattice.axioms", [&](CheckResult& r) {
    for (auto s : geo.model.chambers[p.bottom()].signs)
      if (s != 1) return fail(r, {{"rule", "bottom is the base chamber"}, {"chamber", p.bottom()}});
    for (auto s : geo.model.chambers[p.top()].signs)
      if (s != -1) return fail(r, {{"rule", "top is the opposite chamber"}, {"chamber", p.top()}});
    for (std::size_t a = 0; a < n; ++a) {
      if (deadline.expired()) {
        r.scope = Scope::sampled;
        return;
      }
      if (p.join(a, a) != a || p.meet(a, a) != a) return fail(r, {{"rule", "idempotence"}, {"triple", {a, a, a}}});
      for (std::size_t b = 0; b < n; ++b) {
        const std::size_t j = p.join(a, b), m = p.meet(a, b);
        auto bad = [&](const char* rule, std::size_t c) { fail(r, {{"rule", rule}, {"triple", {a, b, c}}}); };
        if (j != p.join(b, a) || m != p.meet(b, a)) return bad("commutativity", b);
        if (!p.leq(a, j) || !p.leq(b, j) || !p.leq(m, a) || !p.leq(m, b)) return bad("bounds", b);
        if (p.join(a, m) != a || p.meet(a, j) != a) return bad("absorption", b);
        if (p.leq(a, b) != (j == b) || p.leq(a, b) != (m == a)) return bad("order consistency", b);
        for (std::size_t c = 0; c < n; ++c) {
          ++r.count;
          if (p.leq(a, c) && p.leq(b, c) && !p.leq(j, c)) return bad("least upper bound", c);
          if (p.leq(c, a) && p.leq(c, b) && !p.leq(c, m)) return bad("greatest lower bound", c);
          if (p.join(j, c) != p.join(a, p.join(b, c))) return bad("join associativity", c);
          if (p.meet(m, c) != p.meet(a, p.meet(b, c))) return bad("meet associativity", c);
        }
      }
    }
  }));

  report.checks.push_back(run_check("lattice.semidistributive", [&](CheckResult& r) {
    for (std::size_t e = 0; e < n; ++e) {
      if (deadline.expired()) {
        r.scope = Scope::sampled;
        return;
      }
      for (std::size_t f = 0; f < n; ++f)
        for (std::size_t g = 0; g < n; ++g) {
          ++r.count;
          const std::size_t ef = p.join(e, f);
          if (ef == p.join(e, g) && ef != p.join(e, p.meet(f, g)))
            return fail(r, {{"rule", "join semidistributivity"}, {"triple", {e, f, g}}});
          const std::size_t mf = p.meet(e, f);
          if (mf == p.meet(e, g) && mf != p.meet(e, p.join(f, g)))
            return fail(r, {{"rule", "meet semidistributivity"}, {"triple", {e, f, g}}});
        }
    }
  }));
  return report;
}

VerificationReport verify_shard_bijection(const TypeSpec& spec, const RunOptions& options) {
  VerificationReport report;
  report.type_label = spec.label;
  Geometry geo = make_geometry(spec);
  const ShardModel& m = geo.model;
  Deadline deadline(options.budget_seconds);

  report.checks.push_back(run_check("bijection.shards", [&](CheckResult& r) {
    auto image = m.join_irreducible_shards();
    r.count = image.size();
    std::set<std::size_t> distinct(image.begin(), image.end());
    if (distinct.size() != image.size() || distinct.size() != m.shards.size())
      fail(r, {{"join_irreducibles", m.join_irreducibles.size()}, {"shards", m.shards.size()}, {"image", image}});
  }));

  report.checks.push_back(run_check("bijection.label_commutation", [&](CheckResult& r) {
    std::map<std::size_t, std::size_t> ji_cover;
    for (const auto& j : m.join_irreducibles) ji_cover[j.element] = j.cover;
    const auto& covers = m.poset.covers();
    for (std::size_t c = 0; c < covers.size(); ++c) {
      if (deadline.expired()) {
        r.scope = Scope::sampled;
        return;
      }
      ++r.count;
      const Cover& cv = covers[c];
      RationalVector q = facet_point(m.arrangement, m.chambers, cv);
      int inside = 0;
      for (const auto& s : m.shards)
        if (s.hyperplane == cv.hyperplane && shard_interior_contains(m.arrangement, s, q)) ++inside;
      if (inside != 1)
        return fail(r, {{"cover", {cv.lower, cv.upper}}, {"facet_point", vector_json(q)}, {"shards_containing", inside}});
      std::size_t label = j_label(m.poset, c);
      auto it = ji_cover.find(label);
      if (it == ji_cover.end()) return fail(r, {{"cover", {cv.lower, cv.upper}}, {"j_label", label}, {"reason", "not join-irreducible"}});
      if (m.cover_shard[c] != m.cover_shard[it->second])
        return fail(r, {{"cover", {cv.lower, cv.upper}},
                        {"j_label", label},
                        {"shard", m.cover_shard[c]},
                        {"label_shard", m.cover_shard[it->second]}});
    }
  }));
  return report;
}

RationalVector generic_point(const Arrangement& arr, const Codim2Flat& flat) {
  const std::size_t n = arr.dimension();
  std::set<std::size_t> containing(flat.hyperplanes.begin(), flat.hyperplanes.end());
  for (long t = 1; t < 10000; ++t) {
    RationalVector x(n, Rational(0));
    Integer power = 1;
    for (const auto& b : flat.basis) {
      for (std::size_t i = 0; i < n; ++i) x[i] += Rational(power * b[i]);
      power *= t;
    }
    bool ok = true;
    for (std::size_t k = 0; k < arr.size() && ok; ++k)
      if (!containing.count(k) && arr.side(k, x) == 0) ok = false;
    if (ok) return x;
  }
  throw std::logic_error("no generic point found in flat");
}

std::vector<SesConfiguration> codim2_configurations(const BrickTable& table) {
  const ShardModel& m = table.model;
  const Arrangement& arr = m.arrangement;
  std::map<std::size_t, std::size_t> entry_of_shard;
  for (std::size_t k = 0; k < table.entries.size(); ++k) entry_of_shard[table.entries[k].shard] = k;
  auto entry_at = [&](std::size_t h, const RationalVector& x) {
    auto s = m.shard_containing(h, x);
    if (!s) throw std::logic_error("point lies in no shard of hyperplane " + std::to_string(h));
    return entry_of_shard.at(*s);
  };

  std::vector<SesConfiguration> out;
  for (std::size_t f = 0; f < m.flats.size(); ++f) {
    const auto& ordered = m.splits[f].ordered;
    if (ordered.size() != 3) continue;
    const std::size_t h1 = ordered[0], h2 = ordered[1], h3 = ordered[2];
    RationalVector x0 = generic_point(arr, m.flats[f]);

    // A direction inside H_2 leaving the flat.
    RationalMatrix hm(0, arr.dimension());
    hm.append_row(to_rational(arr.normals[h2]));
    RationalMatrix h2basis = nullspace(hm);
    RationalMatrix flat_rows(0, arr.dimension());
    for (const auto& b : m.flats[f].basis) flat_rows.append_row(to_rational(b));
    RationalVector v;
    for (std::size_t r = 0; r < h2basis.rows(); ++r)
      if (!in_row_space(flat_rows, h2basis.row_vector(r))) {
        v = h2basis.row_vector(r);
        break;
      }
    if (v.empty()) throw std::logic_error("flat fills its hyperplane");

    std::set<std::size_t> containing(m.flats[f].hyperplanes.begin(), m.flats[f].hyperplanes.end());
    std::optional<Rational> eps;
    for (std::size_t k = 0; k < arr.size(); ++k) {
      if (containing.count(k)) continue;
      auto nk = to_rational(arr.normals[k]);
      Rational at = dot(std::span<const Rational>(nk), std::span<const Rational>(x0));
      Rational along = dot(std::span<const Rational>(nk), std::span<const Rational>(v));
      if (along == 0) continue;
      Rational ratio = abs(at) / abs(along);
      if (!eps || ratio < *eps) eps = ratio;
    }
    Rational step = eps ? *eps / 2 : Rational(1);

    const std::size_t e1 = entry_at(h1, x0), e3 = entry_at(h3, x0);
    for (int side : {1, -1}) {
      RationalVector p = x0;
      for (std::size_t i = 0; i < p.size(); ++i) p[i] += side * step * v[i];
      SesConfiguration cfg;
      cfg.flat = f;
      cfg.side = side;
      cfg.point = p;
      cfg.middle = entry_at(h2, p);
      StabilityFunctional phi(p);
      Rational at1 = phi(table.entries[e1].brick.dims);
      cfg.sub = at1 < 0 ? e1 : e3;
      cfg.quotient = at1 < 0 ? e3 : e1;
      out.push_back(std::move(cfg));
    }
  }
  return out;
}

PathA2Modules path_a2_modules() {
  Quiver q{2, {Arrow{1, 0}}};
  PathA2Modules m;
  m.s1 = QuiverRep::simple(q, 0);
  m.s2 = QuiverRep::simple(q, 1);
  m.p2.quiver = q;
  m.p2.dims = {1, 1};
  m.p2.maps = {RationalMatrix::identity(1)};
  return m;
}

namespace {

VerificationReport verify_path_a2(const TypeSpec& spec, const RunOptions& options) {
  VerificationReport report;
  report.type_label = spec.label;
  auto mods = path_a2_modules();
  struct Named {
    const char* name;
    const QuiverRep* module;
    std::function<bool(const RationalVector&)> expected;
  };
  std::vector<Named> list = {
      {"S_1", &mods.s1, [](const RationalVector& x) { return x[0] == 0; }},
      {"S_2", &mods.s2, [](const RationalVector& x) { return x[1] == 0; }},
      {"P_2", &mods.p2, [](const RationalVector& x) { return x[0] + x[1] == 0 && x[0] <= 0; }},
  };
  // The origin, both rays of each line, and each chamber.
  std::vector<RationalVector> points = {{0, 0}, {0, 3}, {0, -3}, {3, 0}, {-3, 0}, {-2, 2}, {2, -2}};
  for (const auto& ch : chambers(spec.arrangement, nullptr)) points.push_back(ch.rep_point);

  report.checks.push_back(run_check("hereditary.bricks", [&](CheckResult& r) {
    for (const auto& item : list) {
      ++r.count;
      if (!is_brick(*item.module)) return fail(r, {{"module", item.name}});
    }
  }));
  report.checks.push_back(run_check("hereditary.semistable_regions", [&](CheckResult& r) {
    for (const auto& item : list) {
      DimVectorSet subs = submodule_dim_vectors(*item.module, options.primes);
      for (const auto& x : points) {
        ++r.count;
        bool direct = is_semistable(subs, StabilityFunctional(x));
        if (direct != item.expected(x))
          return fail(r, {{"module", item.name}, {"phi", vector_json(x)}, {"direct", direct}, {"expected", !direct}});
      }
    }
  }));
  return report;
}

}  // namespace

VerificationReport verify_semistability(const TypeSpec& spec, const RunOptions& options) {
  if (spec.kind == TypeSpec::Kind::path_a2) return verify_path_a2(spec, options);
  if (spec.kind != TypeSpec::Kind::dynkin) throw std::invalid_argument("semistability checks need a Dynkin type or A2path");
  const CartanData& cartan = *spec.cartan;
  if (large_type(cartan) && options.budget_seconds <= 0)
    throw std::invalid_argument("semistability verification beyond A3 is opt-in: pass a positive --budget-seconds");

  VerificationReport report;
  report.type_label = spec.label;
  Deadline deadline(options.budget_seconds);
  const bool sample_words = large_type(cartan);

  BrickTable table = build_brick_table(cartan, options.primes);
  const ShardModel& model = table.model;
  const WeylGroup& group = table.group;
  const AlgebraTable& alg = table.algebra;
  const auto& entries = table.entries;
  const auto& covers = model.poset.covers();
  const int n = cartan.rank();
  StandardModules standard = standard_modules(alg);
  std::vector<Ideal> vertex_ideals;
  for (int i = 0; i < n; ++i) vertex_ideals.push_back(ideal_of_vertex(alg, i));
  std::map<std::size_t, std::size_t> entry_of_element;
  for (std::size_t k = 0; k < entries.size(); ++k) entry_of_element[entries[k].element] = k;

  auto brick_ref = [&](std::size_t k) {
    return json{{"element", entries[k].element}, {"reduced_word", word_json(group[entries[k].element].reduced_word)}};
  };
  auto out_of_time = [&](CheckResult& r) {
    if (!deadline.expired()) return false;
    r.scope = Scope::sampled;
    return true;
  };

  report.checks.push_back(run_check("main.grid", [&](CheckResult& r) {
    for (std::size_t k = 0; k < entries.size(); ++k) {
      if (out_of_time(r)) return;
      for (std::size_t s = 0; s < model.shards.size(); ++s) {
        ++r.count;
        StabilityFunctional phi(model.shards[s].witness);
        bool direct = is_semistable(*entries[k].submodules, phi);
        bool predicted = shard_closure_contains(model.arrangement, model.shards[entries[k].shard], phi);
        bool same_hyperplane = model.shards[s].hyperplane == entries[k].hyperplane;
        if (direct != predicted || (same_hyperplane && direct != (s == entries[k].shard)))
          return fail(r, {{"brick", brick_ref(k)}, {"shard", s}, {"phi", vector_json(phi.coords)},
                          {"direct", direct}, {"predicted", predicted}});
      }
    }
  }));

  report.checks.push_back(run_check("main.origin", [&](CheckResult& r) {
    StabilityFunctional zero(RationalVector(n, Rational(0)));
    auto sets = semistable_bricks_at(zero, table);
    r.count = entries.size();
    if (sets.direct.size() != entries.size() || !sets.agree())
      fail(r, {{"phi", vector_json(zero.coords)}, {"direct", sets.direct}, {"predicted", sets.predicted}});
  }));

  report.checks.push_back(run_check("main.generic_chambers", [&](CheckResult& r) {
    for (const auto& ch : model.chambers) {
      if (out_of_time(r)) return;
      ++r.count;
      auto sets = semistable_bricks_at(StabilityFunctional(ch.rep_point), table);
      if (!sets.direct.empty() || !sets.predicted.empty())
        return fail(r, {{"phi", vector_json(ch.rep_point)}, {"direct", sets.direct}, {"predicted", sets.predicted}});
    }
  }));

  report.checks.push_back(run_check("main.flat_points", [&](CheckResult& r) {
    for (const auto& flat : model.flats) {
      if (out_of_time(r)) return;
      ++r.count;
      RationalVector x = generic_point(model.arrangement, flat);
      auto sets = semistable_bricks_at(StabilityFunctional(x), table);
      if (!sets.agree()) return fail(r, {{"phi", vector_json(x)}, {"direct", sets.direct}, {"predicted", sets.predicted}});
    }
  }));

  // Brick labels of every cover, shared by the algebraic suites.
  std::vector<QuiverRep> cover_bricks(covers.size());
  for (std::size_t c = 0; c < covers.size(); ++c)
    cover_bricks[c] = brick_label(alg, group, table.ideals, covers[c].lower, covers[c].upper);

  report.checks.push_back(run_check("brick.label_factorization", [&](CheckResult& r) {
    for (std::size_t c = 0; c < covers.size(); ++c) {
      if (out_of_time(r)) return;
      ++r.count;
      std::size_t label = j_label(model.poset, c);
      auto it = entry_of_element.find(label);
      json where{{"cover", {covers[c].lower, covers[c].upper}}, {"j_label", label}};
      if (it == entry_of_element.end()) return fail(r, where);
      if (cover_bricks[c].dims != model.arrangement.normals[covers[c].hyperplane]) return fail(r, where);
      if (!is_isomorphic(cover_bricks[c], entries[it->second].brick, options.seed)) return fail(r, where);
    }
  }));

  report.checks.push_back(run_check("brick.pairwise_nonisomorphic", [&](CheckResult& r) {
    for (std::size_t a = 0; a < entries.size(); ++a) {
      if (out_of_time(r)) return;
      for (std::size_t b = a + 1; b < entries.size(); ++b) {
        ++r.count;
        if (entries[a].brick.dims == entries[b].brick.dims && is_isomorphic(entries[a].brick, entries[b].brick, options.seed))
          return fail(r, {{"bricks", {brick_ref(a), brick_ref(b)}}});
      }
    }
  }));

  report.checks.push_back(run_check("ideals.reduced_word_invariance", [&](CheckResult& r) {
    if (sample_words) r.scope = Scope::sampled;
    for (std::size_t w = 0; w < group.size(); ++w) {
      if (out_of_time(r)) return;
      auto words = reduced_words(group, w);
      if (sample_words && words.size() > 3) words.resize(3);
      for (const auto& word : words) {
        ++r.count;
        Ideal acc = whole_algebra(alg);
        for (int i : word) acc = ideal_product(alg, acc, vertex_ideals[i]);
        if (!(acc == table.ideals[w]))
          return fail(r, {{"element", w}, {"word", word_json(word)}, {"reference_word", word_json(group[w].reduced_word)}});
      }
    }
  }));

  report.checks.push_back(run_check("ideals.cover_inclusion", [&](CheckResult& r) {
    for (std::size_t w = 0; w < group.size(); ++w) {
      if (out_of_time(r)) return;
      for (int i = 0; i < n; ++i) {
        ++r.count;
        Ideal prod = ideal_product(alg, table.ideals[w], vertex_ideals[i]);
        std::size_t ws = group.right_multiply(w, i);
        bool ascent = group[ws].length == group[w].length + 1;
        bool ok = ascent ? (prod == table.ideals[ws] && contains(table.ideals[w], prod) &&
                            prod.dimension() < table.ideals[w].dimension())
                         : prod == table.ideals[w];
        if (!ok) return fail(r, {{"element", w}, {"vertex", i + 1}, {"ascent", ascent}});
      }
    }
  }));

  report.checks.push_back(run_check("modules.hom_vanishing", [&](CheckResult& r) {
    for (std::size_t c = 0; c < covers.size(); ++c) {
      if (out_of_time(r)) return;
      const std::size_t w = covers[c].upper;
      for (int i = 0; i < n; ++i) {
        if (group[group.left_multiply(i, w)].length <= group[w].length) continue;
        ++r.count;
        if (hom_space(standard.simples[i], cover_bricks[c]).dimension() != 0)
          return fail(r, {{"cover", {covers[c].lower, w}}, {"vertex", i + 1}});
      }
    }
  }));

  // Modules for the tensor suites: every cover's brick and every projective.
  std::vector<QuiverRep> corpus = cover_bricks;
  corpus.insert(corpus.end(), standard.projectives.begin(), standard.projectives.end());

  report.checks.push_back(run_check("tensor.class_reflection", [&](CheckResult& r) {
    for (std::size_t k = 0; k < corpus.size(); ++k) {
      if (out_of_time(r)) return;
      for (int i = 0; i < n; ++i) {
        if (hom_space(standard.simples[i], corpus[k]).dimension() != 0) continue;
        ++r.count;
        QuiverRep t = IdealTensor(alg, vertex_ideals[i], corpus[k]).module();
        IntVector expected = act_on_class(simple_reflection_matrix(cartan, i), corpus[k].dims);
        if (t.dims != expected)
          return fail(r, {{"module", k}, {"dims", corpus[k].dims}, {"vertex", i + 1}, {"tensor_dims", t.dims}, {"expected", expected}});
      }
    }
  }));

  report.checks.push_back(run_check("tensor.kernel_simple", [&](CheckResult& r) {
    for (std::size_t c = 0; c < cover_bricks.size(); ++c) {
      if (out_of_time(r)) return;
      const QuiverRep& m = cover_bricks[c];
      for (const auto& sub : {socle_spaces(m), radical_spaces(m)}) {
        QuiverRep nsub = subrepresentation(m, sub);
        ModuleMap inc = inclusion_map(m, sub);
        for (int i = 0; i < n; ++i) {
          if (hom_space(standard.simples[i], m).dimension() != 0) continue;
          ++r.count;
          IdealTensor tn(alg, vertex_ideals[i], nsub), tm(alg, vertex_ideals[i], m);
          ModuleMap g = tn.induced_map(tm, inc);
          if (!is_module_map(g, tn.module(), tm.module()))
            return fail(r, {{"cover", {covers[c].lower, covers[c].upper}}, {"vertex", i + 1}, {"reason", "induced map"}});
          IntVector kd = subspace_dims(kernel_spaces(g, tn.module()));
          for (int v = 0; v < n; ++v)
            if (v != i && kd[v] != 0)
              return fail(r, {{"cover", {covers[c].lower, covers[c].upper}}, {"vertex", i + 1}, {"kernel_dims", kd}});
        }
      }
    }
  }));

  report.checks.push_back(run_check("ses.codim2", [&](CheckResult& r) {
    for (const auto& cfg : codim2_configurations(table)) {
      if (out_of_time(r)) return;
      ++r.count;
      if (!ses_exists(entries[cfg.sub].brick, entries[cfg.middle].brick, entries[cfg.quotient].brick, options.seed))
        return fail(r, {{"flat", cfg.flat}, {"point", vector_json(cfg.point)}, {"sub", brick_ref(cfg.sub)},
                        {"middle", brick_ref(cfg.middle)}, {"quotient", brick_ref(cfg.quotient)}});
    }
  }));

  report.checks.push_back(run_check("twist.compatibility", [&](CheckResult& r) {
    for (std::size_t c = 0; c < covers.size(); ++c) {
      if (out_of_time(r)) return;
      const std::size_t u = covers[c].lower, w = covers[c].upper;
      for (int i = 0; i < n; ++i) {
        const std::size_t iu = group.left_multiply(i, u), iw = group.left_multiply(i, w);
        if (group[iu].length <= group[u].length || group[iw].length <= group[w].length) continue;
        ++r.count;
        QuiverRep moved = brick_label(alg, group, table.ideals, iu, iw);
        QuiverRep twisted = IdealTensor(alg, vertex_ideals[i], cover_bricks[c]).module();
        if (!is_isomorphic(moved, twisted, options.seed))
          return fail(r, {{"cover", {u, w}}, {"vertex", i + 1}, {"moved_dims", moved.dims}, {"tensor_dims", twisted.dims}});
      }
    }
  }));
  return report;
}

VerificationReport run_verification(const TypeSpec& spec, std::string_view which, const RunOptions& options) {
  if (which == "lattice") return verify_lattice(spec, options);
  if (which == "bijection") return verify_shard_bijection(spec, options);
  if (which == "main") return verify_semistability(spec, options);
  if (which != "all") throw std::invalid_argument("unknown check '" + std::string(which) + "'");
  VerificationReport report = verify_lattice(spec, options);
  auto append = [&](const VerificationReport& more) {
    report.checks.insert(report.checks.end(), more.checks.begin(), more.checks.end());
  };
  append(verify_shard_bijection(spec, options));
  if (spec.kind != TypeSpec::Kind::rank2) append(verify_semistability(spec, options));
  return report;
}

}  // namespace shardstab
