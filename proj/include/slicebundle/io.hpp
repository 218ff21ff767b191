#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "slicebundle/bundle.hpp"

namespace slicebundle {

using Json = nlohmann::json;

namespace detail {

// Keeps -0.0 out of emitted files so identical inputs give identical bytes.
inline double jnum(double v) { return v == 0.0 ? 0.0 : v; }

inline const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string("missing field '") + key + "'");
  return *it;
}

inline double number_at(const Json& j, std::size_t k) {
  if (!j.is_array() || k >= j.size() || !j[k].is_number())
    throw SchemaError("expected a numeric array element");
  return j[k].get<double>();
}

}  // namespace detail

inline Json quaternion_to_json(const Quaternion& q) {
  return Json::array({detail::jnum(q.w), detail::jnum(q.x), detail::jnum(q.y), detail::jnum(q.z)});
}

inline Quaternion quaternion_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw SchemaError("quaternion: expected [w,x,y,z]");
  return {detail::number_at(j, 0), detail::number_at(j, 1), detail::number_at(j, 2),
          detail::number_at(j, 3)};
}

inline Json unit_imaginary_to_json(const UnitImaginary& v) {
  return Json::array({detail::jnum(v.x()), detail::jnum(v.y()), detail::jnum(v.z())});
}

inline UnitImaginary unit_imaginary_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw SchemaError("axis: expected [x,y,z]");
  return UnitImaginary(detail::number_at(j, 0), detail::number_at(j, 1), detail::number_at(j, 2));
}

inline Json frame_to_json(const Frame& fr) {
  return Json{{"i", unit_imaginary_to_json(fr.i())}, {"j", unit_imaginary_to_json(fr.j())}};
}

inline Frame frame_from_json(const Json& j) {
  return Frame(unit_imaginary_from_json(detail::field(j, "i")),
               unit_imaginary_from_json(detail::field(j, "j")));
}

inline Json series_to_json(const MultiSeries& f) {
  Json terms = Json::array();
  for (const auto& [alpha, coeff] : f.terms()) {
    terms.push_back(Json{{"alpha", alpha}, {"coeff", quaternion_to_json(coeff)}});
  }
  Json center = Json::array();
  for (double c : f.center()) center.push_back(detail::jnum(c));
  return Json{{"n", f.vars()}, {"max_deg", f.max_degree()}, {"center", center},
              {"terms", terms}};
}

inline MultiSeries series_from_json(const Json& j) {
  const int n = detail::field(j, "n").get<int>();
  const int deg = detail::field(j, "max_deg").get<int>();
  const Json& jc = detail::field(j, "center");
  if (!jc.is_array() || static_cast<int>(jc.size()) != n)
    throw SchemaError("series: center arity does not match n");
  std::vector<double> center;
  for (std::size_t k = 0; k < jc.size(); ++k) center.push_back(detail::number_at(jc, k));
  MultiSeries out(n, deg, std::move(center));
  for (const Json& t : detail::field(j, "terms")) {
    const Json& ja = detail::field(t, "alpha");
    if (!ja.is_array() || static_cast<int>(ja.size()) != n)
      throw SchemaError("series: multi-index arity mismatch");
    MultiIndex alpha;
    for (std::size_t k = 0; k < ja.size(); ++k) {
      if (!ja[k].is_number_integer()) throw SchemaError("series: multi-index must be integral");
      alpha.push_back(ja[k].get<int>());
    }
    out.add_to(alpha, quaternion_from_json(detail::field(t, "coeff")));
  }
  return out;
}

inline Json domain_to_json(const Domain& d) {
  Json c = Json::array();
  Json r = Json::array();
  for (double v : d.center) c.push_back(detail::jnum(v));
  for (double v : d.radius) r.push_back(detail::jnum(v));
  return Json{{"center", c}, {"radius", r}};
}

inline Domain domain_from_json(const Json& j) {
  Domain d;
  const Json& jc = detail::field(j, "center");
  const Json& jr = detail::field(j, "radius");
  if (!jc.is_array() || !jr.is_array() || jc.size() != jr.size())
    throw SchemaError("domain: center/radius arity mismatch");
  for (std::size_t k = 0; k < jc.size(); ++k) d.center.push_back(detail::number_at(jc, k));
  for (std::size_t k = 0; k < jr.size(); ++k) d.radius.push_back(detail::number_at(jr, k));
  return d;
}

inline Json quad_to_json(const HarmonicQuadruple& quad) {
  return Json{{"frame", frame_to_json(quad.frame())},
              {"F", series_to_json(quad.F())},
              {"G", series_to_json(quad.G())},
              {"domain", domain_to_json(quad.domain())}};
}

inline HarmonicQuadruple quad_from_json(const Json& j) {
  std::optional<Domain> dom;
  if (j.contains("domain")) dom = domain_from_json(j["domain"]);
  return HarmonicQuadruple(series_from_json(detail::field(j, "F")),
                           series_from_json(detail::field(j, "G")),
                           frame_from_json(detail::field(j, "frame")), std::move(dom));
}

inline Json bundle_to_json(const BundlePoint& bp) {
  const HarmonicQuadruple& quad = bp.quad();
  return Json{{"frame", frame_to_json(bp.frame())},
              {"quad", Json{{"F", series_to_json(quad.F())},
                            {"G", series_to_json(quad.G())},
                            {"domain", domain_to_json(quad.domain())}}}};
}

inline BundlePoint bundle_from_json(const Json& j) {
  const Json& q = detail::field(j, "quad");
  std::optional<Domain> dom;
  if (q.contains("domain")) dom = domain_from_json(q["domain"]);
  HarmonicQuadruple quad(series_from_json(detail::field(q, "F")),
                         series_from_json(detail::field(q, "G")),
                         frame_from_json(detail::field(j, "frame")), std::move(dom));
  return make_bundle_point(std::move(quad));
}

// {"slot":l, "q":[w,x,y,z], "zs":[[x,y],...]}; the slice axis comes from the
// frame the caller supplies.
inline EvalPoint evalpoint_from_json(const Json& j, const UnitImaginary& axis) {
  EvalPoint p;
  p.slot = detail::field(j, "slot").get<int>();
  p.q = quaternion_from_json(detail::field(j, "q"));
  const Json& zs = detail::field(j, "zs");
  if (!zs.is_array()) throw SchemaError("point: zs must be an array of pairs");
  for (const Json& pair : zs) {
    if (!pair.is_array() || pair.size() != 2) throw SchemaError("point: zs entries are [x,y]");
    p.zs.push_back({detail::number_at(pair, 0), detail::number_at(pair, 1)});
  }
  p.axis = axis;
  return p;
}

// {"coords":[[x1,y1],...,[xn,yn]]}
inline GridPoint gridpoint_from_json(const Json& j) {
  GridPoint p;
  const Json& coords = detail::field(j, "coords");
  if (!coords.is_array()) throw SchemaError("point: coords must be an array of pairs");
  for (const Json& pair : coords) {
    if (!pair.is_array() || pair.size() != 2)
      throw SchemaError("point: coords entries are [x,y]");
    p.xy.push_back({detail::number_at(pair, 0), detail::number_at(pair, 1)});
  }
  return p;
}

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw SchemaError("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace slicebundle
