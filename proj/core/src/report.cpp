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

#include <algorithm>
#include <stdexcept>

#include "shardstab/harness.hpp"

namespace shardstab {

namespace {

json word_json(const std::vector<int>& word) {
  json out = json::array();
  for (int i : word) out.push_back(i + 1);
  return out;
}

json int_matrix_json(const Matrix<int>& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.row_vector(r));
  return out;
}

}  // namespace

TypeSpec parse_type_spec(std::string_view text) {
  TypeSpec spec;
  spec.label = std::string(text);
  if (text == "octagon") {
    spec.kind = TypeSpec::Kind::rank2;
    spec.arrangement = octagon_arrangement();
    return spec;
  }
  if (text == "A2path") {
    spec.kind = TypeSpec::Kind::path_a2;
    spec.cartan = build_cartan('A', 2);
    spec.arrangement = reflection_arrangement(*spec.cartan);
    return spec;
  }
  if (text.rfind("rank2:", 0) == 0) {
    spec.kind = TypeSpec::Kind::rank2;
    std::vector<IntVector> normals;
    std::string body(text.substr(6));
    std::size_t start = 0;
    while (start <= body.size()) {
      std::size_t end = body.find(';', start);
      if (end == std::string::npos) end = body.size();
      std::string item = body.substr(start, end - start);
      std::size_t comma = item.find(',');
      if (comma == std::string::npos) throw std::invalid_argument("rank2 normal '" + item + "' is not of the form a,b");
      try {
        std::size_t used = 0;
        int a = std::stoi(item.substr(0, comma), &used);
        if (used != comma) throw std::invalid_argument("");
        std::string rest = item.substr(comma + 1);
        int b = std::stoi(rest, &used);
        if (used != rest.size()) throw std::invalid_argument("");
        normals.push_back({a, b});
      } catch (const std::exception&) {
        throw std::invalid_argument("rank2 normal '" + item + "' is not a pair of integers");
      }
      start = end + 1;
    }
    if (normals.empty()) throw std::invalid_argument("rank2 arrangement needs at least one normal");
    spec.arrangement = rank2_arrangement(std::move(normals));
    return spec;
  }
  spec.kind = TypeSpec::Kind::dynkin;
  spec.cartan = build_cartan(DynkinType::parse(text));
  spec.label = spec.cartan->type.label();
  spec.arrangement = reflection_arrangement(*spec.cartan);
  return spec;
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerificationReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

json VerificationReport::to_json(bool include_timings) const {
  std::vector<CheckResult> sorted = checks;
  std::stable_sort(sorted.begin(), sorted.end(), [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  json out;
  out["type"] = type_label;
  out["passed"] = passed();
  out["checks"] = json::array();
  json timings = json::object();
  for (const auto& c : sorted) {
    json item;
    item["name"] = c.name;
    item["scope"] = c.scope == Scope::exhaustive ? "exhaustive" : "sampled";
    item["passed"] = c.passed;
    item["count"] = c.count;
    item["counterexample"] = c.counterexample;
    out["checks"].push_back(std::move(item));
    timings[c.name] = c.seconds;
  }
  if (include_timings) out["timings"] = timings;
  return out;
}

json rational_json(const Rational& q) { return to_string(q); }

json vector_json(const RationalVector& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

json matrix_json(const RationalMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.row_vector(r)));
  return out;
}

json module_json(const QuiverRep& m) {
  json out;
  out["dims"] = m.dims;
  out["arrows"] = json::array();
  for (std::size_t a = 0; a < m.maps.size(); ++a) {
    json item;
    item["source"] = m.quiver.arrows[a].source + 1;
    item["target"] = m.quiver.arrows[a].target + 1;
    item["matrix"] = matrix_json(m.maps[a]);
    out["arrows"].push_back(std::move(item));
  }
  return out;
}

std::string brick_name(const QuiverRep& brick, const std::vector<QuiverRep>& projectives) {
  const int n = static_cast<int>(brick.dims.size());
  for (int i = 0; i < n; ++i) {
    bool unit = true;
    for (int v = 0; v < n; ++v) unit = unit && brick.dims[v] == (v == i ? 1 : 0);
    if (unit) return "S_" + std::to_string(i + 1);
  }
  for (std::size_t i = 0; i < projectives.size(); ++i)
    if (projectives[i].dims == brick.dims && is_isomorphic(projectives[i], brick))
      return "P_" + std::to_string(i + 1);
  std::string s = "(";
  for (int v = 0; v < n; ++v) s += (v ? "," : "") + std::to_string(brick.dims[v]);
  return s + ")";
}

json describe_build(const TypeSpec& spec) {
  json out;
  out["type"] = spec.label;
  out["normals"] = spec.arrangement.normals;
  out["base_point"] = vector_json(spec.arrangement.base_point);
  if (spec.kind == TypeSpec::Kind::rank2) {
    out["chambers"] = chambers(spec.arrangement).size();
    return out;
  }
  const CartanData& c = *spec.cartan;
  out["rank"] = c.rank();
  out["cartan"] = int_matrix_json(c.cartan);
  if (spec.kind == TypeSpec::Kind::path_a2) {
    out["quiver_arrows"] = json::array({json::array({2, 1})});
    out["algebra"] = "path algebra of 2 -> 1";
    return out;
  }
  out["quiver_arrows"] = json::array();
  for (const auto& a : c.quiver_arrows) out["quiver_arrows"].push_back({a.source + 1, a.target + 1});
  WeylGroup group(c);
  out["positive_roots"] = json::array();
  for (const auto& r : group.roots()) out["positive_roots"].push_back(r.coords);
  out["weyl_group_order"] = group.size();
  out["longest_element"] = {{"length", group[group.longest()].length},
                            {"reduced_word", word_json(group[group.longest()].reduced_word)}};
  AlgebraTable alg = build_algebra(c);
  json basis = json::array();
  for (std::size_t b = 0; b < alg.dimension(); ++b) {
    const auto& p = alg.basis()[b];
    basis.push_back({{"path", alg.path_string(b)}, {"source", p.source + 1}, {"target", p.target + 1}, {"degree", p.degree}});
  }
  out["algebra"] = {{"dimension", alg.dimension()}, {"basis", basis}};
  return out;
}

json describe_shards(const TypeSpec& spec) {
  std::optional<WeylGroup> group;
  if (spec.kind != TypeSpec::Kind::rank2) group.emplace(*spec.cartan);
  ShardModel model = build_shard_model(spec.arrangement, group ? &*group : nullptr);
  json out;
  out["type"] = spec.label;
  out["arrangement"] = {{"normals", model.arrangement.normals}, {"base_point", vector_json(model.arrangement.base_point)}};
  out["chambers"] = json::array();
  for (const auto& ch : model.chambers) {
    json item{{"signs", ch.signs}, {"rep_point", vector_json(ch.rep_point)}};
    if (ch.weyl_element) item["reduced_word"] = word_json((*group)[*ch.weyl_element].reduced_word);
    out["chambers"].push_back(std::move(item));
  }
  out["covers"] = json::array();
  for (std::size_t c = 0; c < model.poset.covers().size(); ++c) {
    const auto& cv = model.poset.covers()[c];
    out["covers"].push_back({{"lower", cv.lower}, {"upper", cv.upper}, {"hyperplane", cv.hyperplane}, {"shard", model.cover_shard[c]}});
  }
  out["join_irreducibles"] = json::array();
  auto ji_shards = model.join_irreducible_shards();
  for (std::size_t k = 0; k < model.join_irreducibles.size(); ++k) {
    const auto& j = model.join_irreducibles[k];
    out["join_irreducibles"].push_back({{"element", j.element}, {"lower", j.lower}, {"shard", ji_shards[k]}});
  }
  out["flats"] = json::array();
  for (std::size_t f = 0; f < model.flats.size(); ++f)
    out["flats"].push_back({{"hyperplanes", model.flats[f].hyperplanes},
                            {"basis", model.flats[f].basis},
                            {"ordered", model.splits[f].ordered},
                            {"split", model.splits[f].split}});
  out["shards"] = json::array();
  for (const auto& s : model.shards) {
    json cuts = json::array();
    for (const auto& c : s.cuts) cuts.push_back({{"flat", c.flat}, {"functional", c.functional}, {"side", c.side}});
    out["shards"].push_back({{"hyperplane", s.hyperplane}, {"cuts", cuts}, {"witness", vector_json(s.witness)}});
  }
  return out;
}

json describe_bricks(const TypeSpec& spec, const RunOptions& options) {
  json out;
  out["type"] = spec.label;
  out["bricks"] = json::array();
  if (spec.kind == TypeSpec::Kind::rank2) throw std::invalid_argument("bricks need a Dynkin type or A2path");
  if (spec.kind == TypeSpec::Kind::path_a2) {
    auto mods = path_a2_modules();
    std::vector<std::pair<std::string, QuiverRep>> list = {{"S_1", mods.s1}, {"S_2", mods.s2}, {"P_2", mods.p2}};
    for (const auto& [name, m] : list) {
      DimVectorSet subs = submodule_dim_vectors(m, options.primes);
      out["bricks"].push_back({{"name", name}, {"module", module_json(m)},
                               {"submodule_dim_vectors", json(std::vector<IntVector>(subs.achievable.begin(), subs.achievable.end()))}});
    }
    return out;
  }
  BrickTable table = build_brick_table(*spec.cartan, options.primes);
  auto projectives = standard_modules(table.algebra).projectives;
  for (const auto& e : table.entries) {
    json item;
    item["element"] = e.element;
    item["reduced_word"] = word_json(table.group[e.element].reduced_word);
    item["name"] = brick_name(e.brick, projectives);
    item["shard"] = e.shard;
    item["hyperplane"] = e.hyperplane;
    item["module"] = module_json(e.brick);
    item["submodule_dim_vectors"] = std::vector<IntVector>(e.submodules->achievable.begin(), e.submodules->achievable.end());
    out["bricks"].push_back(std::move(item));
  }
  return out;
}

}  // namespace shardstab
