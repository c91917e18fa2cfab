#include "dispatch.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "glacm/checks.hpp"
#include "glacm/extbundle.hpp"
#include "glacm/graded.hpp"
#include "glacm/k0.hpp"
#include "glacm/orbits.hpp"
#include "glacm/picard.hpp"
#include "glacm/serialize.hpp"
#include "glacm/stablehom.hpp"
#include "glacm/suites.hpp"
#include "glacm/tilting.hpp"

namespace glacm::cli {
namespace {

/// Malformed flag values; reported like CLI11 parse errors (exit 2).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<Int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    Int v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw UsageError("malformed " + what + ": '" + text + "'");
    }
    if (used != item.size()) throw UsageError("malformed " + what + ": '" + text + "'");
    out.push_back(v);
  }
  return out;
}

std::array<int, kArity> parse_quad(const std::string& text, const std::string& what) {
  const auto v = parse_int_list(text, what);
  if (v.size() != kArity) throw UsageError(what + " needs four comma-separated integers, got '" + text + "'");
  return {static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2]), static_cast<int>(v[3])};
}

Weights parse_weights(const std::string& text) {
  const auto p = parse_quad(text, "weights");
  for (int v : p) {
    if (v < 2) throw UsageError("weights must satisfy p_i >= 2, got '" + text + "'");
  }
  return Weights(p);
}

/// LElem from JSON {"lambda":[..],"ell":e} or the shorthand "l1,l2,l3,l4,ell";
/// raw coefficients are normalized under `w`.
LElem parse_lelem(const Weights& w, const std::string& text, const std::string& what) {
  LElem raw;
  if (!text.empty() && text.front() == '{') {
    try {
      raw = json::parse(text).get<LElem>();
    } catch (const std::exception& e) {
      throw UsageError("malformed " + what + ": " + e.what());
    }
  } else {
    const auto v = parse_int_list(text, what);
    if (v.size() != kArity + 1) throw UsageError(what + " needs 'l1,l2,l3,l4,ell' or LElem JSON, got '" + text + "'");
    raw.lambda = {v[0], v[1], v[2], v[3]};
    raw.ell = v[4];
  }
  return picard::normalize(w, raw.lambda, raw.ell);
}

/// K0Class from JSON [{"degree":LElem,"coeff":n},...] or a single line bundle degree.
K0Class parse_class(const Weights& w, const std::string& text, const std::string& what) {
  if (!text.empty() && text.front() == '[') {
    json j;
    try {
      j = json::parse(text);
    } catch (const std::exception& e) {
      throw UsageError("malformed " + what + ": " + e.what());
    }
    K0Class k;
    for (const auto& term : j) {
      const LElem d = parse_lelem(w, term.at("degree").dump(), what);
      k.add_term(d, term.at("coeff").get<Int>());
    }
    return k;
  }
  return K0Class::line(parse_lelem(w, text, what));
}

json bigint_json(const BigInt& v) {
  if (v >= std::numeric_limits<Int>::min() && v <= std::numeric_limits<Int>::max()) {
    return static_cast<Int>(v);
  }
  return v.str();
}

json suite_json(const SuiteResult& r, bool timing) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back(json{{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}});
  }
  json j{{"suite", r.suite}, {"weights", r.weights}, {"checks", checks}, {"passed", r.passed()}};
  if (timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for 2-extension bundles on GL projective planes", "glacm"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string weights_text = "2,2,2,2";
  app.add_option("--weights", weights_text, "weight quadruple p1,p2,p3,p4 (each >= 2)");

  // Handlers run after parsing, once the weights are known.
  std::function<int(const Weights&)> handler;
  auto bind = [&handler](CLI::App* sub, std::function<int(const Weights&)> fn) {
    sub->callback([&handler, fn] { handler = fn; });
  };

  std::string a_text, b_text, x_text, y_text, q_text, twist_text = "0,0,0,0,0", y_twist_text = "0,0,0,0,0";

  auto* normal_form = app.add_subcommand("normal-form", "normal form of an element of L");
  normal_form->add_option("x", x_text, "element as l1,l2,l3,l4,ell or LElem JSON")->required();
  bind(normal_form, [&](const Weights& w) {
    emit(out, json(parse_lelem(w, x_text, "x")));
    return kExitOk;
  });

  auto* add = app.add_subcommand("add", "sum of two elements of L");
  add->add_option("a", a_text)->required();
  add->add_option("b", b_text)->required();
  bind(add, [&](const Weights& w) {
    emit(out, json(picard::add(w, parse_lelem(w, a_text, "a"), parse_lelem(w, b_text, "b"))));
    return kExitOk;
  });

  auto* leq = app.add_subcommand("leq", "partial order a <= b");
  leq->add_option("a", a_text)->required();
  leq->add_option("b", b_text)->required();
  bind(leq, [&](const Weights& w) {
    const auto value = picard::leq(w, parse_lelem(w, a_text, "a"), parse_lelem(w, b_text, "b"));
    emit(out, json{{"leq", value}});
    return kExitOk;
  });

  auto* dim_r = app.add_subcommand("dim-r", "dim R_x");
  dim_r->add_option("x", x_text)->required();
  bind(dim_r, [&](const Weights& w) {
    const auto value = graded::dim_R(w, parse_lelem(w, x_text, "x"));
    emit(out, json{{"dim", value}});
    return kExitOk;
  });

  auto* dim_s = app.add_subcommand("dim-s", "dim S_x for S = R/(X_i^q_i)");
  dim_s->add_option("x", x_text)->required();
  dim_s->add_option("--q", q_text, "truncation q1,q2,q3,q4")->required();
  bind(dim_s, [&](const Weights& w) {
    const Truncation q(w, parse_quad(q_text, "q"));
    const auto value = graded::dim_S(w, parse_lelem(w, x_text, "x"), q);
    emit(out, json{{"dim", value}});
    return kExitOk;
  });

  auto* line_ext = app.add_subcommand("line-ext", "dim Hom, Ext^1, Ext^2 from O(x) to O(y)");
  line_ext->add_option("x", x_text)->required();
  line_ext->add_option("y", y_text)->required();
  bind(line_ext, [&](const Weights& w) {
    const ExtDims d = graded::line_ext_dims(w, parse_lelem(w, x_text, "x"), parse_lelem(w, y_text, "y"));
    emit(out, json{{"dims", {d.hom, d.ext1, d.ext2}}});
    return kExitOk;
  });

  auto* euler = app.add_subcommand("euler", "Euler form chi(a, b) of two K0 classes");
  euler->add_option("a", a_text, "K0Class JSON or a line bundle degree")->required();
  euler->add_option("b", b_text, "K0Class JSON or a line bundle degree")->required();
  bind(euler, [&](const Weights& w) {
    const auto value = k0::euler_pairing(w, parse_class(w, a_text, "a"), parse_class(w, b_text, "b"));
    emit(out, json{{"chi", value}});
    return kExitOk;
  });

  auto* k0_eq = app.add_subcommand("k0-eq", "equality of two K0 classes");
  k0_eq->add_option("a", a_text)->required();
  k0_eq->add_option("b", b_text)->required();
  bind(k0_eq, [&](const Weights& w) {
    const k0::K0Lattice lat(w);
    const bool eq = lat.classes_equal(parse_class(w, a_text, "a"), parse_class(w, b_text, "b"));
    emit(out, json{{"equal", eq}, {"mode", lat.mode() == k0::EqualityMode::exact ? "exact" : "necessary"}});
    return kExitOk;
  });

  auto* gram_det = app.add_subcommand("gram-det", "determinant of the Euler Gram matrix on [0, 2c]");
  bind(gram_det, [&](const Weights& w) {
    const k0::K0Lattice lat(w);
    emit(out, json{{"det", bigint_json(lat.gram_determinant())},
                   {"basis_size", lat.basis().size()},
                   {"mode", lat.mode() == k0::EqualityMode::exact ? "exact" : "necessary"}});
    return kExitOk;
  });

  // ext family
  auto* ext_cmd = app.add_subcommand("ext", "2-extension bundle labels");
  ext_cmd->require_subcommand(1);
  auto label_opts = [&](CLI::App* sub) {
    sub->add_option("--x", x_text, "extension parameter in [0, delta]")->required();
    sub->add_option("--twist", twist_text, "twist (default 0)");
  };
  auto label = [&](const Weights& w) {
    return ext::make(w, parse_lelem(w, x_text, "x"), parse_lelem(w, twist_text, "twist"));
  };

  auto* ext_make = ext_cmd->add_subcommand("make", "validated label E<x>(twist)");
  label_opts(ext_make);
  bind(ext_make, [&](const Weights& w) {
    emit(out, json(label(w)));
    return kExitOk;
  });

  Int shift = 0;
  auto* ext_suspend = ext_cmd->add_subcommand("suspend", "label of E<x>(twist)[n]");
  label_opts(ext_suspend);
  ext_suspend->add_option("--n", shift, "suspension exponent")->required();
  bind(ext_suspend, [&](const Weights& w) {
    emit(out, json(ext::suspend(w, label(w), shift)));
    return kExitOk;
  });

  auto* ext_dual = ext_cmd->add_subcommand("dual", "vector bundle dual");
  label_opts(ext_dual);
  bind(ext_dual, [&](const Weights& w) {
    emit(out, json(ext::dualize(w, label(w))));
    return kExitOk;
  });

  auto* ext_iso = ext_cmd->add_subcommand("iso", "isomorphism test E<x>(twist) ~ E<y>(y-twist)");
  label_opts(ext_iso);
  ext_iso->add_option("--y", y_text)->required();
  ext_iso->add_option("--y-twist", y_twist_text);
  bind(ext_iso, [&](const Weights& w) {
    const ExtLabel b = ext::make(w, parse_lelem(w, y_text, "y"), parse_lelem(w, y_twist_text, "y-twist"));
    const auto value = ext::iso_equivalent(w, label(w), b);
    emit(out, json{{"iso", value}});
    return kExitOk;
  });

  auto* ext_canon = ext_cmd->add_subcommand("canon", "canonical representative of the iso class");
  label_opts(ext_canon);
  bind(ext_canon, [&](const Weights& w) {
    const ExtLabel a = label(w);
    emit(out, json{{"canonical", ext::canonical_form(w, a)}, {"class_size", ext::iso_class_size(w, a)}});
    return kExitOk;
  });

  auto* ext_hull = ext_cmd->add_subcommand("hull", "injective hull degrees");
  label_opts(ext_hull);
  bind(ext_hull, [&](const Weights& w) {
    const auto value = ext::injective_hull(w, label(w));
    emit(out, json{{"hull", value}});
    return kExitOk;
  });

  auto* ext_cover = ext_cmd->add_subcommand("cover", "projective cover degrees");
  label_opts(ext_cover);
  bind(ext_cover, [&](const Weights& w) {
    const auto value = ext::projective_cover(w, label(w));
    emit(out, json{{"cover", value}});
    return kExitOk;
  });

  auto* ext_aus = ext_cmd->add_subcommand("aus", "2-Auslander test");
  label_opts(ext_aus);
  bind(ext_aus, [&](const Weights& w) {
    const auto z = ext::is_auslander(w, label(w));
    emit(out, json{{"auslander", z.has_value()}, {"twist", z ? json(*z) : json(nullptr)}});
    return kExitOk;
  });

  std::string ell_text;
  auto* ext_ucorr = ext_cmd->add_subcommand("ucorr", "U^ell <-> E<s+delta-ell>(-omega)");
  auto* ell_opt = ext_ucorr->add_option("--ell", ell_text, "index in [s, s + delta]");
  auto* x_opt = ext_ucorr->add_option("--x", x_text, "extension parameter in [0, delta]");
  ell_opt->excludes(x_opt);
  bind(ext_ucorr, [&](const Weights& w) {
    if (!ell_text.empty()) {
      const auto value = ext::u_to_ext(w, parse_lelem(w, ell_text, "ell"));
      emit(out, json{{"label", value}});
    } else if (!x_text.empty()) {
      const auto value = ext::ext_to_u(w, parse_lelem(w, x_text, "x"));
      emit(out, json{{"ell", value}});
    } else {
      throw UsageError("ext ucorr needs --ell or --x");
    }
    return kExitOk;
  });

  // stable Homs
  std::string src_x = "0,0,0,0,0", src_twist = "0,0,0,0,0", tgt_x, tgt_twist = "0,0,0,0,0";
  Int src_shift = 0, tgt_shift = 0;
  auto* stable_hom = app.add_subcommand("stable-hom", "dim Hom(source[m], target[n]) for a 2-Auslander source");
  stable_hom->add_option("--source-x", src_x);
  stable_hom->add_option("--source-twist", src_twist);
  stable_hom->add_option("--source-shift", src_shift);
  stable_hom->add_option("--target-x", tgt_x)->required();
  stable_hom->add_option("--target-twist", tgt_twist);
  stable_hom->add_option("--target-shift", tgt_shift);
  bind(stable_hom, [&](const Weights& w) {
    const StableObj s{ext::make(w, parse_lelem(w, src_x, "source-x"), parse_lelem(w, src_twist, "source-twist")),
                      src_shift};
    const StableObj t{ext::make(w, parse_lelem(w, tgt_x, "target-x"), parse_lelem(w, tgt_twist, "target-twist")),
                      tgt_shift};
    const auto value = stablehom::stable_hom(w, s, t);
    emit(out, json{{"dim", value}});
    return kExitOk;
  });

  std::optional<Int> n_max;
  bool with_table = false;
  auto* rigidity = app.add_subcommand("rigidity", "Hom(T, T[n]) = 0 for 0 < |n| <= n-max");
  rigidity->add_option("--n-max", n_max, "shift bound (default sigma(delta) + 4)");
  rigidity->add_flag("--table", with_table, "include the nonzero hom.rig entries");
  bind(rigidity, [&](const Weights& w) {
    const Int bound = n_max.value_or(stablehom::default_shift_bound(w));
    if (bound < 0) throw UsageError("--n-max must be nonnegative");
    const bool rigid = stablehom::rigidity_check(w, bound);
    json j{{"rigid", rigid}, {"n_max", bound}};
    if (with_table) j["table"] = stablehom::hom_rig_table(w, bound);
    emit(out, j);
    return rigid ? kExitOk : kExitDomain;
  });

  // tilting
  std::string format = "json";
  auto* quiver = app.add_subcommand("quiver", "quiver presentation and Cartan matrix of Lambda(q)");
  quiver->add_option("--q", q_text, "truncation q1,q2,q3,q4 (default q = p)");
  quiver->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
  bind(quiver, [&](const Weights& w) {
    const Truncation q = q_text.empty() ? Truncation::full(w) : Truncation(w, parse_quad(q_text, "q"));
    const auto pres = tilting::quiver_presentation(w, q);
    if (format == "dot") {
      out << tilting::to_dot(w, q, pres);
    } else {
      emit(out, quiver_to_json(pres, tilting::cartan_matrix(w, q)));
    }
    return kExitOk;
  });

  // orbits
  std::optional<int> sweep;
  auto* orbit_count = app.add_subcommand("orbit-count", "Burnside count of sigma_I orbits on [0, delta]");
  orbit_count->add_option("--sweep", sweep, "sweep all weights 2 <= p_i <= pmax instead");
  bind(orbit_count, [&](const Weights& w) {
    if (!sweep) {
      const OrbitReport r = orbits::burnside_count(w);
      emit(out, json(r));
      return r.burnside == r.closed_formula ? kExitOk : kExitDomain;
    }
    if (*sweep < 2) throw UsageError("--sweep needs pmax >= 2");
    json rows = json::array();
    bool agree = true;
    for (const Weights& v : checks::weight_sweep(*sweep)) {
      const OrbitReport r = orbits::burnside_count(v);
      agree = agree && r.burnside == r.closed_formula;
      rows.push_back(json{{"weights", v.to_string()},
                          {"burnside", r.burnside},
                          {"closed_formula", r.closed_formula},
                          {"transitive", r.burnside == 1}});
    }
    emit(out, json{{"sweep", *sweep}, {"tuples", rows}, {"all_agree", agree}});
    return agree ? kExitOk : kExitDomain;
  });

  // verification suites
  std::string suite;
  int bound = 7;
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  verify->add_option("--suite", suite, "suite name")->required()->check(CLI::IsMember(suites::names()));
  verify->add_option("--bound", bound, "orbit-sweep bound on p_i (default 7)")->check(CLI::Range(2, 12));
  verify->add_flag("--timing", timing, "include elapsed_ms in the JSON output");
  bind(verify, [&](const Weights& w) {
    const SuiteResult r = suites::run_suite(suite, w, bound);
    emit(out, suite_json(r, timing));
    err << r.suite << ": " << r.elapsed_ms << " ms\n";
    return r.passed() ? kExitOk : kExitDomain;
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    const Weights w = parse_weights(weights_text);
    if (!handler) throw UsageError("no subcommand given");
    return handler(w);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    emit(out, json{{"error", e.what()}, {"kind", "domain"}});
    return kExitDomain;
  } catch (const ContextError& e) {
    emit(out, json{{"error", e.what()}, {"kind", "context"}});
    return kExitDomain;
  } catch (const UnsupportedInput& e) {
    emit(out, json{{"error", e.what()}, {"kind", "unsupported"}});
    return kExitDomain;
  }
}

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int k = 1; k < argc; ++k) args.emplace_back(argv[k]);
  return dispatch(args, out, err);
}

}  // namespace glacm::cli
