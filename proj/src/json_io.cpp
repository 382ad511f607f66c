#include "spinor/json_io.hpp"

#include <algorithm>

namespace spinor {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json model_to_json(const FieldModel& m) {
  ordered_json j;
  j["schema"] = "spinor/1";
  j["kind"] = "field-model";
  j["label"] = m.label();
  j["e"] = m.e();
  j["dim"] = m.dim();
  std::vector<std::string> classes;
  for (int i = 0; i < m.num_classes(); ++i) classes.push_back(m.name(m.cls(i)));
  j["classes"] = classes;
  std::vector<std::string> basis;
  for (int b = 0; b < m.dim(); ++b) basis.push_back(m.name(m.cls(1 << b)));
  j["basis"] = basis;
  j["pi"] = m.name(m.pi());
  j["delta"] = m.name(m.delta());
  j["minus_one"] = m.name(m.minus_one());
  ordered_json parity = ordered_json::object(), d = ordered_json::object();
  for (int i = 0; i < m.num_classes(); ++i) {
    SquareClass c = m.cls(i);
    parity[m.name(c)] = m.ord_parity(c);
    if (m.d_of(c).is_infinite())
      d[m.name(c)] = "inf";
    else
      d[m.name(c)] = m.d_of(c).value();
  }
  j["ord_parity"] = parity;
  j["d"] = d;
  std::vector<std::vector<int>> hil(m.num_classes(), std::vector<int>(m.num_classes()));
  for (int a = 0; a < m.num_classes(); ++a)
    for (int b = 0; b < m.num_classes(); ++b) hil[a][b] = m.hilbert_of(m.cls(a), m.cls(b));
  j["hilbert"] = hil;
  return j;
}

FieldModelPtr model_from_json(const json& j) {
  int e = j.at("e").get<int>();
  int dim = j.at("dim").get<int>();
  std::vector<std::string> names = j.at("classes").get<std::vector<std::string>>();
  const std::size_t n = std::size_t(1) << dim;
  if (names.size() != n) throw ValidationError("model json: class list size mismatch");
  auto index_of = [&](const std::string& nm) -> std::uint16_t {
    auto it = std::find(names.begin(), names.end(), nm);
    if (it == names.end()) throw ValidationError("model json: unknown class " + nm);
    return static_cast<std::uint16_t>(it - names.begin());
  };
  std::vector<std::uint8_t> parity(n);
  std::vector<DValue> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    parity[i] = static_cast<std::uint8_t>(j.at("ord_parity").at(names[i]).get<int>());
    const json& dv = j.at("d").at(names[i]);
    d[i] = dv.is_string() ? DValue::infinite() : DValue::finite(dv.get<int>());
  }
  std::vector<std::int8_t> hil(n * n);
  const json& hj = j.at("hilbert");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      hil[a * n + b] = static_cast<std::int8_t>(hj.at(a).at(b).get<int>());
  std::string label = j.value("label", std::string("table"));
  return std::make_shared<FieldModel>(
      e, dim, names, std::move(parity), std::move(d), std::move(hil),
      SquareClass{index_of(j.at("pi").get<std::string>())},
      SquareClass{index_of(j.at("delta").get<std::string>())},
      SquareClass{index_of(j.at("minus_one").get<std::string>())}, label);
}

ordered_json group_to_json(const ClassSubgroup& g) {
  ordered_json j;
  std::vector<std::string> members;
  for (SquareClass c : g.members()) members.push_back(g.model().name(c));
  j["members"] = members;
  j["name"] = subgroup_name(g);
  j["index"] = g.index_in_full();
  return j;
}

ordered_json invariants_to_json(const FieldModel& m, const LatticeInvariants& inv) {
  ordered_json j;
  j["r"] = inv.r;
  std::vector<std::string> alpha;
  for (const Alpha& a : inv.alpha) alpha.push_back(a.str());
  j["alpha"] = alpha;
  j["norm_order"] = inv.norm_order.str();
  j["scale_order"] = inv.scale_order.str();
  j["vol_order"] = inv.vol_order;
  j["det"] = m.name(inv.det);
  j["property_a"] = inv.prop_a;
  j["property_b"] = inv.prop_b;
  return j;
}

ordered_json verdict_to_json(const ThetaVerdict& v) {
  ordered_json j;
  j["schema"] = "spinor/1";
  j["group"] = group_to_json(v.group);
  j["branch"] = branch_name(v.branch);
  ordered_json cond = ordered_json::object();
  if (v.report) {
    const Theorem75Report& r = *v.report;
    cond["parity"] = r.parity_ok;
    ordered_json c2 = ordered_json::array();
    for (const auto& c : r.cond2) {
      c2.push_back({{"i", c.i},
                    {"applicable", c.applicable},
                    {"sum_case", c.case_sum},
                    {"touch_case", c.case_touch},
                    {"ok", c.ok}});
    }
    cond["gap_cases"] = c2;
    ordered_json c3 = ordered_json::array();
    for (const auto& c : r.cond3)
      c3.push_back({{"i", c.i}, {"bounded", c.bounded}, {"alt_bounded", c.alt_bounded}});
    cond["bounded_factors"] = c3;
    cond["alt_agrees"] = r.alt_agrees;
    cond["theta_M_bounded"] = r.theta_m_bounded;
    cond["theta_N_bounded"] = r.theta_n_bounded;
    cond["all"] = r.all();
  }
  j["conditions"] = cond;
  j["factors"] = v.factors;
  return j;
}

SquareClass parse_class(const FieldModel& m, const std::string& text) {
  for (int i = 0; i < m.num_classes(); ++i)
    if (m.name(m.cls(i)) == text) return m.cls(i);
  // integer literal reduction for the rational base field naming scheme
  try {
    std::size_t pos = 0;
    long long v = std::stoll(text, &pos);
    if (pos == text.size() && v != 0) {
      int k = 0;
      long long u = v < 0 ? -v : v;
      while (u % 2 == 0) {
        u /= 2;
        ++k;
      }
      if (v < 0) u = -u;
      long long mod8 = ((u % 8) + 8) % 8;
      std::string nm = std::to_string((k % 2) ? 2 * mod8 : mod8);
      return m.class_by_name(nm);
    }
  } catch (const ValidationError&) {
    throw;
  } catch (...) {
  }
  throw ValidationError("unknown square class: " + text);
}

LatticeInput parse_lattice_input(const json& j, int precision) {
  LatticeInput in;
  const json& field = j.at("field");
  if (field.contains("model")) {
    in.model = model_from_json(field.at("model"));
  } else {
    FieldSpec spec = FieldSpec::parse(field.at("kind").get<std::string>(), precision);
    in.field = build_field(spec);
    in.model = in.field->model_ptr();
  }
  auto parse_entries = [&](const json& arr) {
    std::vector<BongEntry> entries;
    for (const auto& item : arr) {
      if (!item.is_array() || item.size() != 2)
        throw ValidationError("lattice entries must be [unit, valuation] pairs");
      std::string unit = item.at(0).is_string() ? item.at(0).get<std::string>()
                                                : std::to_string(item.at(0).get<long long>());
      SquareClass c = parse_class(*in.model, unit);
      if (in.model->ord_parity(c) != 0)
        throw ValidationError("lattice entry unit " + unit + " has odd valuation");
      entries.push_back({c, item.at(1).get<long>()});
    }
    return entries;
  };
  if (j.contains("M")) in.M = GoodBong(in.model, parse_entries(j.at("M")));
  if (j.contains("N")) in.N = GoodBong(in.model, parse_entries(j.at("N")));
  return in;
}

ordered_json lattice_to_json(const GoodBong& lat) {
  ordered_json arr = ordered_json::array();
  for (int i = 1; i <= lat.rank(); ++i)
    arr.push_back({lat.model().name(lat.unit(i)), lat.r(i)});
  return arr;
}

}  // namespace spinor
