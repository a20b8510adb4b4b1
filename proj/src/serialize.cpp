#include "qfe/serialize.hpp"

#include <regex>
#include <stdexcept>

namespace qfe {

Json to_json(const SeriesParams& p) { return p.to_string(); }

SeriesParams params_from_json(const Json& j) { return SeriesParams::parse(j.get<std::string>()); }

Json to_json(const IndexBox& b) {
  return Json{{"m1", b.m1}, {"M1", b.M1}, {"m2", b.m2}, {"M2", b.M2}, {"d1", b.d1}, {"d2", b.d2}};
}

IndexBox box_from_json(const Json& j) {
  IndexBox b{j.at("m1").get<int>(), j.at("M1").get<int>(), j.at("m2").get<int>(),
             j.at("M2").get<int>(), j.value("d1", 1),       j.value("d2", 1)};
  b.validate();
  return b;
}

Json keep_to_json(const std::vector<IndexPair>& keep) {
  Json out = Json::array();
  for (const auto& [a, b] : keep) out.push_back({a, b});
  return out;
}

std::vector<IndexPair> keep_from_json(const Json& j) {
  std::vector<IndexPair> out;
  for (const auto& e : j) out.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return out;
}

Json to_json(const ExtractedSystem& s) {
  Json eqs = Json::array();
  for (const auto& e : s.equations) {
    Json rhs = Json::array();
    for (const auto& t : e.rhs) {
      rhs.push_back({{"pair", {t.pair.first, t.pair.second}},
                     {"num", t.coeff.num().to_string(PolyStyle::Compact)},
                     {"den", t.coeff.den().to_string(PolyStyle::Compact)}});
    }
    eqs.push_back({{"lhs", {e.lhs.first, e.lhs.second}},
                   {"rhs", std::move(rhs)},
                   {"text", e.to_string(s.params.gamma)}});
  }
  return Json{{"params", to_json(s.params)},
              {"keep", keep_to_json(s.keep)},
              {"rank", s.rank},
              {"all_polynomial", s.all_polynomial},
              {"all_nonnegative", s.all_nonnegative},
              {"relations", s.relation_strings()},
              {"equations", std::move(eqs)}};
}

ExtractedSystem system_from_json(const Json& j) {
  ExtractedSystem s;
  s.params = params_from_json(j.at("params"));
  s.keep = keep_from_json(j.at("keep"));
  s.rank = j.value("rank", 0);
  s.all_polynomial = j.value("all_polynomial", false);
  s.all_nonnegative = j.value("all_nonnegative", false);
  for (const auto& r : j.value("relations", Json::array())) {
    s.relations.push_back(FuncEquation::parse(r.get<std::string>()));
  }
  for (const auto& e : j.value("equations", Json::array())) {
    SystemEquation eq;
    eq.lhs = {e.at("lhs").at(0).get<int>(), e.at("lhs").at(1).get<int>()};
    for (const auto& t : e.at("rhs")) {
      eq.rhs.push_back({RatXQ(PolyXQ::parse(t.at("num").get<std::string>()),
                              PolyXQ::parse(t.value("den", std::string("1")))),
                        {t.at("pair").at(0).get<int>(), t.at("pair").at(1).get<int>()}});
    }
    s.equations.push_back(std::move(eq));
  }
  return s;
}

Json to_json(const VerifyReport& r) {
  return Json{{"order", r.order}, {"ok", r.ok()}, {"residual_orders", r.residual_orders}};
}

Json to_json(const UniquenessReport& r) {
  return Json{{"status", std::string(to_string(r.status))},
              {"iterations", r.iterations},
              {"detail", r.detail}};
}

Json to_json(const ProductForm& f) {
  Json out;
  if (f.period) {
    out["period"] = f.period->period;
    out["offset"] = f.period->offset;
    Json prof = Json::array();
    for (const auto& [r, a] : f.profile()) prof.push_back({r, a.get_str()});
    out["profile"] = std::move(prof);
    if (f.period->offset == 1) out["product"] = f.spec().to_string();
  } else {
    out["period"] = nullptr;
  }
  Json ex = Json::array();
  for (std::size_t i = 1; i < f.exponents.size(); ++i) ex.push_back(f.exponents[i].get_str());
  out["exponents"] = std::move(ex);
  return out;
}

ProductForm product_form_from_json(const Json& j) {
  ProductForm f;
  f.exponents.emplace_back(0);
  for (const auto& e : j.at("exponents")) f.exponents.emplace_back(e.get<std::string>());
  if (!j.at("period").is_null()) f.period = Period{j.at("period").get<int>(), j.value("offset", 1)};
  return f;
}

Json to_json(const ProductHit& h) {
  Json out{{"c1", h.c1}, {"c2", h.c2}, {"x_power", h.x_power}};
  out.update(to_json(h.form));
  return out;
}

ProductHit product_hit_from_json(const Json& j) {
  return {j.at("c1").get<int>(), j.at("c2").get<int>(), j.at("x_power").get<int>(),
          product_form_from_json(j)};
}

std::vector<IndexPair> parse_keep(std::string_view text) {
  static const std::regex pair(R"(\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\))");
  const std::string s(text);
  std::vector<IndexPair> out;
  std::string rest;
  auto it = std::sregex_iterator(s.begin(), s.end(), pair);
  std::size_t last = 0;
  for (; it != std::sregex_iterator(); ++it) {
    rest += s.substr(last, static_cast<std::size_t>(it->position()) - last);
    last = static_cast<std::size_t>(it->position() + it->length());
    out.emplace_back(std::stoi((*it)[1]), std::stoi((*it)[2]));
  }
  rest += s.substr(last);
  if (rest.find_first_not_of("; \t") != std::string::npos || out.empty()) {
    throw std::invalid_argument("bad keep-set: " + s);
  }
  return out;
}

std::string keep_to_string(const std::vector<IndexPair>& keep) {
  std::string out;
  for (const auto& [a, b] : keep) {
    if (!out.empty()) out += ";";
    out += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
  return out;
}

}  // namespace qfe
