#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinor/dyadic.hpp"
#include "spinor/gmaps.hpp"
#include "spinor/identities.hpp"
#include "spinor/json_io.hpp"
#include "spinor/oracle.hpp"

using namespace spinor;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitInput = 2;
constexpr int kExitPrecision = 3;

int env_precision() {
  const char* p = std::getenv("SPINOR_PRECISION");
  if (!p) return 64;
  try {
    return std::stoi(p);
  } catch (...) {
    return 64;
  }
}

struct FieldHandle {
  FieldModelPtr model;
  DyadicFieldPtr field;  // null for table-driven models
};

FieldHandle resolve_field(const std::string& name, int precision) {
  std::ifstream in(name);
  if (in.good()) {
    json j;
    in >> j;
    return {model_from_json(j), nullptr};
  }
  FieldSpec spec = FieldSpec::parse(name, precision);
  DyadicFieldPtr f = build_field(spec);
  return {f->model_ptr(), f};
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw ValidationError("cannot open " + path);
  json j;
  in >> j;
  return j;
}

Alpha parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Alpha::from_int(std::stol(text));
  long num = std::stol(text.substr(0, slash));
  long den = std::stol(text.substr(slash + 1));
  return Alpha::from_fraction(num, den);
}

std::string pretty(const GoodBong& lat) {
  std::ostringstream o;
  o << "≺";
  for (int i = 1; i <= lat.rank(); ++i) {
    if (i > 1) o << ",";
    o << lat.model().name(lat.unit(i)) << "*pi^" << lat.r(i);
  }
  o << "≻";
  return o.str();
}

void emit_group(const ClassSubgroup& g, bool as_json) {
  if (as_json)
    std::cout << group_to_json(g).dump(2) << "\n";
  else
    std::cout << subgroup_name(g) << ", index " << g.index_in_full() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariants, isometry and spinor norm groups of dyadic quadratic lattices"};
  app.require_subcommand(1);

  int precision = env_precision();
  app.add_option("--precision", precision, "working 2-adic precision (24..128)");

  std::string field_name = "q2", format = "text", lattice_path, pair_path;
  std::string class_name, weight_text;
  bool explain = false, use_oracle = false, force = false;

  auto* c_info = app.add_subcommand("field-info", "square class tables of a base field");
  c_info->add_option("--field", field_name, "q2, q2(d) with d in {-1,2,-2,5}, or a model file");
  c_info->add_option("--format", format, "text|json");

  auto* c_validate = app.add_subcommand("validate", "check a lattice presentation");
  c_validate->add_option("--lattice", lattice_path, "lattice JSON file")->required();
  c_validate->add_option("--format", format, "text|json");

  auto* c_inv = app.add_subcommand("invariants", "r, alpha, norm/scale/volume, det");
  c_inv->add_option("--lattice", lattice_path, "lattice JSON file")->required();
  c_inv->add_option("--format", format, "text|json");

  auto* c_tp = app.add_subcommand("theta-plus", "spinor norm of the proper rotations");
  c_tp->add_option("--lattice", lattice_path, "lattice JSON file")->required();
  c_tp->add_option("--format", format, "text|json");

  auto* c_tr = app.add_subcommand("theta-rel", "relative spinor norm of a lattice pair");
  c_tr->add_option("--pair", pair_path, "pair JSON file with M and N")->required();
  c_tr->add_option("--format", format, "text|json");
  c_tr->add_flag("--explain", explain, "include per-condition diagnostics and factors");
  c_tr->add_flag("--oracle", use_oracle, "cross-check with the recursive reduction (needs --force)");
  c_tr->add_flag("--force", force, "run the reduction on a pair without certified containment");

  auto* c_iso = app.add_subcommand("isometric", "classify two lattices up to isometry");
  c_iso->add_option("--pair", pair_path, "pair JSON file with M and N")->required();
  c_iso->add_option("--format", format, "text|json");

  auto* c_gmap = app.add_subcommand("gmap", "the weighted class groups g and G");
  c_gmap->add_option("--field", field_name, "base field");
  c_gmap->add_option("--a", class_name, "square class")->required();
  c_gmap->add_option("--R", weight_text, "weight, an integer or fraction p/q with q|4")->required();
  c_gmap->add_option("--format", format, "text|json");

  int st_rank = 4;
  std::string st_vals = "-2..4";
  int st_count = 1000;
  std::uint64_t st_seed = 0x5eedc1a55ULL;
  bool st_no_exhaustive = false;
  auto* c_st = app.add_subcommand("selftest", "closed form vs reduction on generated pairs");
  c_st->add_option("--field", field_name, "base field");
  c_st->add_option("--rank", st_rank, "maximum rank (default 4)");
  c_st->add_option("--vals", st_vals, "valuation window lo..hi (default -2..4)");
  c_st->add_option("--count", st_count, "number of randomized pairs (default 1000)");
  c_st->add_option("--seed", st_seed, "random seed");
  c_st->add_flag("--no-exhaustive", st_no_exhaustive, "skip the exhaustive enumeration");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*c_info) {
      FieldHandle h = resolve_field(field_name, precision);
      const FieldModel& m = *h.model;
      if (format == "json") {
        std::cout << model_to_json(m).dump(2) << "\n";
      } else {
        std::cout << m.label() << ": e=" << m.e() << " dim=" << m.dim() << "\n";
        std::cout << "pi=" << m.name(m.pi()) << " delta=" << m.name(m.delta())
                  << " -1=" << m.name(m.minus_one()) << "\n";
        std::cout << "class parity d\n";
        for (int i = 0; i < m.num_classes(); ++i) {
          SquareClass c = m.cls(i);
          std::cout << "  " << m.name(c) << "  " << m.ord_parity(c) << "  "
                    << m.d_of(c).str() << "\n";
        }
        std::cout << "hilbert matrix (class order as above)\n";
        for (int a = 0; a < m.num_classes(); ++a) {
          std::cout << " ";
          for (int b = 0; b < m.num_classes(); ++b)
            std::cout << " " << (m.hilbert_of(m.cls(a), m.cls(b)) > 0 ? "+" : "-");
          std::cout << "\n";
        }
        ValidationReport rep = validate_model(m);
        std::cout << (rep.all_pass() ? "model axioms: all pass" : "model axioms: FAILURES")
                  << "\n";
        if (!rep.all_pass()) std::cout << rep.summary();
      }
      return kExitOk;
    }

    if (*c_validate) {
      json j = load_json(lattice_path);
      try {
        LatticeInput in = parse_lattice_input(j, precision);
        if (!in.M) throw ValidationError("input has no lattice M");
        if (format == "json") {
          ordered_json out;
          out["valid"] = true;
          out["M"] = lattice_to_json(*in.M);
          if (in.N) out["N"] = lattice_to_json(*in.N);
          std::cout << out.dump(2) << "\n";
        } else {
          std::cout << "valid: " << pretty(*in.M) << "\n";
          if (in.N) std::cout << "valid: " << pretty(*in.N) << "\n";
        }
        return kExitOk;
      } catch (const ValidationError& err) {
        if (format == "json")
          std::cout << ordered_json{{"valid", false}, {"reason", err.what()}}.dump(2) << "\n";
        else
          std::cout << "invalid: " << err.what() << "\n";
        return kExitVerification;
      }
    }

    if (*c_inv) {
      LatticeInput in = parse_lattice_input(load_json(lattice_path), precision);
      if (!in.M) throw ValidationError("input has no lattice M");
      LatticeInvariants inv = invariants(*in.M);
      if (format == "json") {
        std::cout << invariants_to_json(*in.model, inv).dump(2) << "\n";
      } else {
        std::cout << pretty(*in.M) << "\n";
        std::cout << "r:";
        for (long r : inv.r) std::cout << " " << r;
        std::cout << "\nalpha:";
        for (const Alpha& a : inv.alpha) std::cout << " " << a.str();
        std::cout << "\nnorm " << inv.norm_order.str() << ", scale " << inv.scale_order.str()
                  << ", volume " << inv.vol_order << ", det " << in.model->name(inv.det) << "\n";
        std::cout << "property A: " << (inv.prop_a ? "yes" : "no")
                  << ", property B: " << (inv.prop_b ? "yes" : "no") << "\n";
      }
      return kExitOk;
    }

    if (*c_tp) {
      LatticeInput in = parse_lattice_input(load_json(lattice_path), precision);
      if (!in.M) throw ValidationError("input has no lattice M");
      ClassSubgroup g = theta_plus(*in.M);
      if (format == "json") {
        ordered_json out;
        out["schema"] = "spinor/1";
        out["lattice"] = lattice_to_json(*in.M);
        out["theta_plus"] = group_to_json(g);
        if (property_a(*in.M))
          out["theta_plus_refined"] = group_to_json(theta_plus_refined(*in.M));
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "theta+(" << pretty(*in.M) << ") = ";
        emit_group(g, false);
      }
      return kExitOk;
    }

    if (*c_tr) {
      LatticeInput in = parse_lattice_input(load_json(pair_path), precision);
      if (!in.M || !in.N) throw ValidationError("pair input needs both M and N");
      LatticePair pair(*in.M, *in.N);
      ThetaVerdict v = theta_X(pair);
      if (explain && !v.report && pair.gap() <= 2 && condition_R1(pair))
        v.report = units_bounded_report(pair);
      int rc = kExitOk;
      std::string oracle_note;
      if (use_oracle) {
        if (!force)
          throw ValidationError(
              "pair containment is not certified; pass --force to run the reduction anyway");
        try {
          OracleResult r = theta_X_oracle(pair);
          if (r.group == v.group) {
            oracle_note = "agrees";
          } else {
            oracle_note = "MISMATCH: oracle " + subgroup_name(r.group);
            rc = kExitVerification;
          }
        } catch (const InconsistentPairError& err) {
          oracle_note = std::string("inconsistent pair: ") + err.what();
          rc = kExitVerification;
        }
      }
      if (format == "json") {
        ordered_json out = verdict_to_json(v);
        if (!explain) {
          out.erase("conditions");
          out.erase("factors");
        }
        if (use_oracle) out["oracle"] = oracle_note;
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "theta(X(M/N)) = " << subgroup_name(v.group) << "  [" << branch_name(v.branch)
                  << "]\n";
        if (explain)
          for (const auto& f : v.factors) std::cout << "  factor " << f << "\n";
        if (use_oracle) std::cout << "oracle: " << oracle_note << "\n";
      }
      return rc;
    }

    if (*c_iso) {
      LatticeInput in = parse_lattice_input(load_json(pair_path), precision);
      if (!in.M || !in.N) throw ValidationError("pair input needs both M and N");
      bool iso = isometric_lattices(*in.M, *in.N);
      if (format == "json")
        std::cout << ordered_json{{"isometric", iso}}.dump(2) << "\n";
      else
        std::cout << (iso ? "isometric" : "not isometric") << "\n";
      return kExitOk;
    }

    if (*c_gmap) {
      FieldHandle h = resolve_field(field_name, precision);
      const FieldModel& m = *h.model;
      SquareClass a = parse_class(m, class_name);
      Alpha R = parse_rational(weight_text);
      ClassSubgroup small = g_bar(m, a, R), big = G_bar(m, a, R);
      if (format == "json") {
        ordered_json out;
        out["a"] = m.name(a);
        out["R"] = R.str();
        out["g_bar"] = group_to_json(small);
        out["G_bar"] = group_to_json(big);
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "g(" << m.name(a) << "," << R.str() << ") = " << subgroup_name(small) << "\n";
        std::cout << "G(" << m.name(a) << "," << R.str() << ") = " << subgroup_name(big) << "\n";
      }
      return kExitOk;
    }

    if (*c_st) {
      FieldHandle h = resolve_field(field_name, precision);
      PairGenOptions opts;
      opts.max_rank = st_rank;
      auto dots = st_vals.find("..");
      if (dots == std::string::npos) throw ValidationError("--vals expects lo..hi");
      opts.val_lo = std::stol(st_vals.substr(0, dots));
      opts.val_hi = std::stol(st_vals.substr(dots + 2));
      opts.random_count = st_count;
      opts.seed = st_seed;
      opts.exhaustive = !st_no_exhaustive;
      CrossCheckStats stats;
      generate_pairs(h.model, opts, [&](const LatticePair& p) { crosscheck_pair(p, stats); });
      std::cout << "pairs: " << stats.pairs << ", mismatches: " << stats.mismatches << "\n";
      for (const auto& f : stats.failures) std::cout << "  " << f << "\n";
      return stats.mismatches == 0 ? kExitOk : kExitVerification;
    }
  } catch (const PrecisionError& err) {
    std::cerr << ordered_json{{"error", {{"type", "precision"}, {"message", err.what()}}}}.dump()
              << "\n";
    return kExitPrecision;
  } catch (const UnsupportedFieldError& err) {
    std::cerr << ordered_json{{"error", {{"type", "unsupported-field"}, {"message", err.what()}}}}
                     .dump()
              << "\n";
    return kExitInput;
  } catch (const Error& err) {
    std::cerr << ordered_json{{"error", {{"type", "input"}, {"message", err.what()}}}}.dump()
              << "\n";
    return kExitInput;
  } catch (const std::exception& err) {
    std::cerr << ordered_json{{"error", {{"type", "internal"}, {"message", err.what()}}}}.dump()
              << "\n";
    return kExitInput;
  }
  return kExitOk;
}
