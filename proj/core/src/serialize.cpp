#include "theta/serialize.hpp"

#include <json.hpp>

namespace theta {

using nlohmann::json;

namespace {

json parse_checked(std::string_view text) {
  json j = json::parse(text, nullptr, false);
  require(!j.is_discarded(), "ShapeError", "malformed JSON input");
  return j;
}

// json type/access errors become ShapeError so the CLI exit contract holds
template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    fail("ShapeError", e.what());
  }
}

json scalar_to(const Scalar& s) {
  return json{{"re", rational_str(s.re)}, {"im", rational_str(s.im)}};
}

Scalar scalar_from(const json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  require(j.is_object() && j.contains("re"), "ShapeError", "scalar JSON must be {re, im}");
  Rational re = parse_rational(j.at("re").get<std::string>());
  Rational im = j.contains("im") ? parse_rational(j.at("im").get<std::string>()) : Rational(0);
  return Scalar(std::move(re), std::move(im));
}

json tuple_to(const std::vector<Scalar>& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(rational_str(x.re));
  return arr;
}

std::vector<Scalar> tuple_from(const json& arr) {
  require(arr.is_array(), "ShapeError", "expected an array of rationals");
  std::vector<Scalar> out;
  for (const auto& x : arr) out.push_back(scalar_from(x));
  return out;
}

json group_to(const GroupSig& sig) {
  if (sig.kind == GroupKind::Sp) return json{{"kind", "sp"}, {"p", sig.p}, {"q", sig.q}};
  return json{{"kind", "ostar"}, {"n", sig.n}};
}

GroupSig group_from(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "sp") return GroupSig::sp(j.at("p").get<int>(), j.at("q").get<int>());
  require(kind == "ostar", "ShapeError", "group kind must be 'sp' or 'ostar'");
  return GroupSig::ostar(j.at("n").get<int>());
}

json psi_to(const PosSystem& psi) {
  json signs = json::object();
  for (const auto& [idx, sign] : psi.tied_signs)
    signs[std::to_string(idx)] = sign == BlockSign::Plus ? "+" : "-";
  json j{{"tied_signs", signs}};
  if (psi.name) j["name"] = *psi.name;
  return j;
}

PosSystem psi_from(const json& j) {
  PosSystem psi;
  if (j.contains("name") && !j.at("name").is_null()) psi.name = j.at("name").get<std::string>();
  if (j.contains("tied_signs"))
    for (const auto& [key, val] : j.at("tied_signs").items()) {
      std::string s = val.get<std::string>();
      require(s == "+" || s == "-", "ShapeError", "tied sign must be '+' or '-'");
      psi.tied_signs[std::stoi(key)] = s == "+" ? BlockSign::Plus : BlockSign::Minus;
    }
  return psi;
}

json param_to(const LanglandsParam& param, const std::vector<bool>* nu_mask = nullptr) {
  json nu = json::array();
  for (size_t i = 0; i < param.nu.size(); ++i) {
    if (nu_mask && (*nu_mask)[i])
      nu.push_back(nullptr);
    else
      nu.push_back(scalar_to(param.nu[i]));
  }
  return json{{"group", group_to(param.group)},
              {"r", param.r},
              {"lambda", json{{"left", tuple_to(param.lambda.left)},
                              {"right", tuple_to(param.lambda.right)}}},
              {"psi", psi_to(param.psi)},
              {"mu", param.mu},
              {"nu", nu}};
}

LanglandsParam param_from(const json& j) {
  LanglandsParam param;
  param.group = group_from(j.at("group"));
  param.r = j.value("r", 0);
  if (j.contains("lambda")) {
    const json& l = j.at("lambda");
    if (l.contains("left")) param.lambda.left = tuple_from(l.at("left"));
    if (l.contains("right")) param.lambda.right = tuple_from(l.at("right"));
  }
  if (j.contains("psi")) param.psi = psi_from(j.at("psi"));
  if (j.contains("mu")) param.mu = j.at("mu").get<std::vector<long>>();
  if (j.contains("nu"))
    for (const auto& x : j.at("nu")) {
      require(!x.is_null(), "ShapeError", "nu entries must be concrete scalars");
      param.nu.push_back(scalar_from(x));
    }
  validate(param);
  return param;
}

json ktype_sp_to(const KTypeSp& kt) { return json{{"a", kt.a}, {"b", kt.b}}; }
json ktype_u_to(const KTypeU& kt) { return json{{"w", kt.w}}; }

json infchar_to(const InfChar& c) {
  json entries = json::array();
  for (const auto& x : c.entries) entries.push_back(scalar_to(x));
  return json{{"entries", entries}, {"weyl", c.weyl == WeylFamily::TypeC ? "C" : "D"}};
}

InfChar infchar_from(const json& j) {
  InfChar c;
  for (const auto& x : j.at("entries")) c.entries.push_back(scalar_from(x));
  std::string w = j.at("weyl").get<std::string>();
  require(w == "C" || w == "D", "ShapeError", "weyl must be 'C' or 'D'");
  c.weyl = w == "C" ? WeylFamily::TypeC : WeylFamily::TypeD;
  return c;
}

json ostar4_to(const OStar4Rep& rep) {
  return json{{"family", family_str(rep.family)}, {"l1", rep.l1.str()}, {"l2", rep.l2.str()}};
}

OStar4Rep ostar4_from(const json& j) {
  std::string fam = j.at("family").get<std::string>();
  OStar4Family family;
  if (fam == "P")
    family = OStar4Family::P;
  else if (fam == "D")
    family = OStar4Family::D;
  else if (fam == "Dbar")
    family = OStar4Family::Dbar;
  else if (fam == "F")
    family = OStar4Family::F;
  else
    fail("ShapeError", "family must be one of P, D, Dbar, F");
  return make_ostar4(family, scalar_from(j.at("l1")), scalar_from(j.at("l2")));
}

json lift_to(const LiftResult& result) {
  json trace = json::array();
  for (const auto& step : result.trace) {
    switch (step.kind) {
      case LiftStep::Kind::Duality:
        trace.push_back(json{{"kind", "duality"}});
        break;
      case LiftStep::Kind::GoingUp:
        trace.push_back(
            json{{"kind", "going_up"}, {"s", step.s}, {"base", {step.base_p, step.base_q}}});
        break;
      case LiftStep::Kind::Base:
        trace.push_back(json{{"kind", "base"}, {"rule", step.rule}});
        break;
    }
  }
  json j{{"trace", trace}};
  if (result.value) {
    j["result"] = param_to(*result.value);
    InfChar c = infinitesimal_character(*result.value);
    j["infchar"] = infchar_to(c);
  } else {
    j["result"] = "zero";
    j["infchar"] = nullptr;
  }
  return j;
}

LiftResult lift_from(const json& j) {
  LiftResult result;
  if (!(j.at("result").is_string() && j.at("result").get<std::string>() == "zero"))
    result.value = param_from(j.at("result"));
  if (j.contains("trace"))
    for (const auto& t : j.at("trace")) {
      std::string kind = t.at("kind").get<std::string>();
      LiftStep step;
      if (kind == "duality") {
        step.kind = LiftStep::Kind::Duality;
      } else if (kind == "going_up") {
        step.kind = LiftStep::Kind::GoingUp;
        step.s = t.at("s").get<int>();
        step.base_p = t.at("base")[0].get<int>();
        step.base_q = t.at("base")[1].get<int>();
      } else {
        require(kind == "base", "ShapeError", "unknown trace step");
        step.kind = LiftStep::Kind::Base;
        step.rule = t.value("rule", "");
      }
      result.trace.push_back(std::move(step));
    }
  return result;
}

}  // namespace

std::string to_json(const Scalar& s) { return scalar_to(s).dump(); }
std::string to_json(const GroupSig& sig) { return group_to(sig).dump(); }
std::string to_json(const LanglandsParam& param) { return param_to(param).dump(); }
std::string to_json(const KTypeSp& kt) { return ktype_sp_to(kt).dump(); }
std::string to_json(const KTypeU& kt) { return ktype_u_to(kt).dump(); }
std::string to_json(const InfChar& c) { return infchar_to(c).dump(); }
std::string to_json(const OStar4Rep& rep) { return ostar4_to(rep).dump(); }
std::string to_json(const OStar2Rep& rep) { return json{{"k", rep.k}}.dump(); }
std::string to_json(const LiftResult& result) { return lift_to(result).dump(); }

std::string to_json(const CatalogEntry& entry) {
  std::vector<bool> mask(entry.param.nu.size(), entry.nu_symbolic());
  json j{{"case", entry.case_tag}, {"param", param_to(entry.param, &mask)}};
  if (entry.b_side) j["side"] = std::string(1, *entry.b_side);
  return j.dump();
}

Scalar scalar_from_json(std::string_view text) {
  return guarded([&] { return scalar_from(parse_checked(text)); });
}
GroupSig group_from_json(std::string_view text) {
  return guarded([&] { return group_from(parse_checked(text)); });
}
LanglandsParam param_from_json(std::string_view text) {
  return guarded([&] { return param_from(parse_checked(text)); });
}

KTypeSp ktype_sp_from_json(std::string_view text) {
  return guarded([&] {
    json j = parse_checked(text);
    KTypeSp kt{j.at("a").get<std::vector<long>>(), j.at("b").get<std::vector<long>>()};
    check_dominant(kt);
    return kt;
  });
}

KTypeU ktype_u_from_json(std::string_view text) {
  return guarded([&] {
    json j = parse_checked(text);
    KTypeU kt{j.at("w").get<std::vector<long>>()};
    check_dominant(kt);
    return kt;
  });
}

InfChar infchar_from_json(std::string_view text) {
  return guarded([&] { return infchar_from(parse_checked(text)); });
}
OStar4Rep ostar4_from_json(std::string_view text) {
  return guarded([&] { return ostar4_from(parse_checked(text)); });
}

OStar2Rep ostar2_from_json(std::string_view text) {
  return guarded([&] {
    json j = parse_checked(text);
    return OStar2Rep{j.at("k").get<long>()};
  });
}

LiftResult lift_result_from_json(std::string_view text) {
  return guarded([&] { return lift_from(parse_checked(text)); });
}

}  // namespace theta
