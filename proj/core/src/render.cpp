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

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "shardstab/harness.hpp"

namespace shardstab {

namespace {

constexpr double kCanvas = 400;
constexpr double kRadius = 150;
constexpr double kGap = 14;
constexpr double kLabel = 22;

using Vec = std::array<double, 2>;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(x) < 0.005 ? 0.0 : x);
  return buf;
}

// Linear map from functional coordinates to the picture plane, rotated so
// that the base chamber sits at the bottom.
class Embedding {
 public:
  Embedding(const TypeSpec& spec) {
    if (spec.cartan) {
      // Cholesky factor of the inverse Cartan matrix.
      const auto& c = spec.cartan->cartan;
      double a = c(0, 0), b = c(0, 1), d = c(1, 1);
      double det = a * d - b * b;
      double p = d / det, q = -b / det, r = a / det;
      double l11 = std::sqrt(p), l21 = q / l11, l22 = std::sqrt(r - l21 * l21);
      m_ = {{{l11, 0}, {l21, l22}}};
    }
    Vec base = raw(to_vec(spec.arrangement.base_point));
    double len = std::hypot(base[0], base[1]);
    // Rotation taking base/len to (0, -1).
    cos_ = -base[1] / len;
    sin_ = -base[0] / len;
  }

  Vec operator()(const Vec& x) const {
    Vec y = raw(x);
    return {cos_ * y[0] - sin_ * y[1], sin_ * y[0] + cos_ * y[1]};
  }

  static Vec to_vec(const RationalVector& v) { return {v[0].get_d(), v[1].get_d()}; }

 private:
  Vec raw(const Vec& x) const {
    // Rows of L^T applied to x.
    return {m_[0][0] * x[0] + m_[1][0] * x[1], m_[0][1] * x[0] + m_[1][1] * x[1]};
  }

  std::array<Vec, 2> m_ = {{{1, 0}, {0, 1}}};
  double cos_ = 1, sin_ = 0;
};

Vec unit(const Vec& v) {
  double len = std::hypot(v[0], v[1]);
  return {v[0] / len, v[1] / len};
}

class Canvas {
 public:
  void line(const Vec& from, const Vec& to) {
    body_ << "  <line x1=\"" << x(from) << "\" y1=\"" << y(from) << "\" x2=\"" << x(to) << "\" y2=\"" << y(to)
          << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  }
  void dot(const Vec& at) {
    body_ << "  <circle cx=\"" << x(at) << "\" cy=\"" << y(at) << "\" r=\"3\" fill=\"black\"/>\n";
  }
  // "S_1" becomes S with a subscript 1.
  void label(const Vec& at, const std::string& text) {
    body_ << "  <text x=\"" << x(at) << "\" y=\"" << y(at)
          << "\" font-family=\"serif\" font-size=\"14\" text-anchor=\"middle\" dominant-baseline=\"middle\">";
    auto us = text.find('_');
    if (us == std::string::npos) {
      body_ << text;
    } else {
      body_ << text.substr(0, us) << "<tspan baseline-shift=\"sub\" font-size=\"10\">" << text.substr(us + 1)
            << "</tspan>";
    }
    body_ << "</text>\n";
  }
  // Segment along direction d, leaving a gap at the origin when it is a ray.
  void ray(const Vec& d, const std::string& text) {
    line({kGap * d[0], kGap * d[1]}, {kRadius * d[0], kRadius * d[1]});
    label({(kRadius + kLabel) * d[0], (kRadius + kLabel) * d[1]}, text);
  }
  void full_line(const Vec& d, const std::string& text) {
    line({-kRadius * d[0], -kRadius * d[1]}, {kRadius * d[0], kRadius * d[1]});
    label({(kRadius + kLabel) * d[0], (kRadius + kLabel) * d[1]}, text);
  }

  std::string str(const std::string& title) const {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(kCanvas) << "\" height=\""
        << num(kCanvas) << "\" viewBox=\"0 0 " << num(kCanvas) << " " << num(kCanvas) << "\">\n"
        << "  <title>" << title << "</title>\n"
        << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << body_.str() << "</svg>\n";
    return out.str();
  }

 private:
  static std::string x(const Vec& p) { return num(kCanvas / 2 + p[0]); }
  static std::string y(const Vec& p) { return num(kCanvas / 2 - p[1]); }
  std::ostringstream body_;
};

// Direction of the line normal . x = 0 in functional coordinates.
Vec line_direction(const IntVector& normal) { return {double(-normal[1]), double(normal[0])}; }

std::string render_a1(const TypeSpec& spec) {
  Canvas canvas;
  canvas.line({-kRadius, 0}, {kRadius, 0});
  canvas.dot({0, 0});
  canvas.label({0, kLabel}, "S_1");
  return canvas.str(spec.label);
}

std::string render_path_a2(const TypeSpec& spec, const RunOptions& options) {
  Embedding embed(spec);
  Canvas canvas;
  auto mods = path_a2_modules();
  std::vector<std::pair<std::string, QuiverRep>> list = {{"S_1", mods.s1}, {"S_2", mods.s2}, {"P_2", mods.p2}};
  for (const auto& [name, m] : list) {
    DimVectorSet subs = submodule_dim_vectors(m, options.primes);
    for (const auto& n : spec.arrangement.normals) {
      RationalVector along = {Rational(-n[1]), Rational(n[0])};
      RationalVector back = {Rational(n[1]), Rational(-n[0])};
      bool fwd = is_semistable(subs, StabilityFunctional(along));
      bool bwd = is_semistable(subs, StabilityFunctional(back));
      if (!fwd && !bwd) continue;
      Vec d = unit(embed(Embedding::to_vec(fwd ? along : back)));
      if (fwd && bwd)
        canvas.full_line(d, name);
      else
        canvas.ray(d, name);
    }
  }
  return canvas.str(spec.label);
}

}  // namespace

std::string render_rank2(const TypeSpec& spec, const RunOptions& options) {
  if (spec.cartan && spec.cartan->rank() == 1) return render_a1(spec);
  if (spec.arrangement.dimension() != 2) throw std::invalid_argument("render needs a rank-2 type, got " + spec.label);
  if (spec.kind == TypeSpec::Kind::path_a2) return render_path_a2(spec, options);

  Embedding embed(spec);
  Canvas canvas;
  if (spec.kind == TypeSpec::Kind::rank2) {
    ShardModel model = build_shard_model(spec.arrangement);
    for (const auto& s : model.shards) {
      std::string name = "H_" + std::to_string(s.hyperplane + 1);
      if (s.cuts.empty())
        canvas.full_line(unit(embed(line_direction(spec.arrangement.normals[s.hyperplane]))), name);
      else
        canvas.ray(unit(embed(Embedding::to_vec(s.witness))), name);
    }
    return canvas.str(spec.label);
  }

  BrickTable table = build_brick_table(*spec.cartan, options.primes, false);
  auto projectives = standard_modules(table.algebra).projectives;
  for (const auto& e : table.entries) {
    const Shard& s = table.model.shards[e.shard];
    std::string name = brick_name(e.brick, projectives);
    if (s.cuts.empty())
      canvas.full_line(unit(embed(line_direction(spec.arrangement.normals[s.hyperplane]))), name);
    else
      canvas.ray(unit(embed(Embedding::to_vec(s.witness))), name);
  }
  return canvas.str(spec.label);
}

}  // namespace shardstab
