#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <utility>

#include "spinor/bong.hpp"
#include "spinor/dyadic.hpp"

namespace ts {

inline spinor::DyadicFieldPtr field(const std::string& name, int prec = 64) {
  return spinor::build_field(spinor::FieldSpec::parse(name, prec));
}

inline spinor::FieldModelPtr q2_model() { return field("q2")->model_ptr(); }

inline spinor::SquareClass C(const spinor::FieldModel& m, const std::string& name) {
  return m.class_by_name(name);
}

inline spinor::GoodBong lat(spinor::FieldModelPtr m,
                            std::initializer_list<std::pair<const char*, long>> entries) {
  std::vector<spinor::BongEntry> es;
  for (const auto& [u, r] : entries) es.push_back({m->class_by_name(u), r});
  return spinor::GoodBong(std::move(m), std::move(es));
}

// Random valid lattice by rejection sampling.
inline std::optional<spinor::GoodBong> random_lattice(const spinor::FieldModelPtr& model,
                                                      std::mt19937_64& rng, int rank,
                                                      long lo = -4, long hi = 6) {
  const spinor::FieldModel& m = *model;
  std::vector<spinor::SquareClass> units;
  for (int i = 0; i < m.num_classes(); ++i)
    if (m.ord_parity(m.cls(i)) == 0) units.push_back(m.cls(i));
  for (int attempt = 0; attempt < 300; ++attempt) {
    std::vector<spinor::BongEntry> e;
    long r = lo + static_cast<long>(rng() % (hi - lo + 1));
    for (int i = 0; i < rank; ++i) {
      e.push_back({units[rng() % units.size()], r});
      r += static_cast<long>(rng() % (2 * m.e() + 4)) - 2 * m.e() + 2;
    }
    try {
      return spinor::GoodBong(model, e);
    } catch (const spinor::ValidationError&) {
    }
  }
  return std::nullopt;
}

inline spinor::GoodBong random_chain(const spinor::GoodBong& lat, std::mt19937_64& rng,
                                     int steps) {
  spinor::GoodBong out = lat;
  for (int s = 0; s < steps && out.rank() >= 2; ++s) {
    int i = 1 + static_cast<int>(rng() % (out.rank() - 1));
    auto members = spinor::g_index(out, i).members();
    out = spinor::transform(out, i, members[rng() % members.size()]);
  }
  return out;
}

}  // namespace ts
