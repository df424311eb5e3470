#pragma once

// Subcommand implementations behind tools/brunr. Each returns a JSON report, a text summary and an exit code.

#include <brunr/crosscheck.hpp>
#include <brunr/io/json.hpp>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <sstream>

namespace brunr::cli {

using io::Json;

enum ExitCode : int { kOk = 0, kInternal = 1, kParse = 2, kBudget = 3, kDisagreement = 4 };

struct Options {
  bool json = false;
  bool slow = false;
  bool seedless = false;
  bool timing = false;
  /// Largest |G| for the brute-force cocycle solvers; unset means BRUNR_BUDGET or the built-in defaults.
  std::optional<std::size_t> budget;
  cohomology::Family family = cohomology::Family::Bicyclic;
};

struct Outcome {
  Json report;
  std::string text;
  int exit_code = kOk;
};

/// --budget wins over BRUNR_BUDGET, which wins over the defaults.
inline std::optional<std::size_t> resolved_budget(const Options& o) {
  if (o.budget) return o.budget;
  if (const char* env = std::getenv("BRUNR_BUDGET"); env && *env) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0) throw ParseError("BRUNR_BUDGET must be a positive integer");
    return static_cast<std::size_t>(v);
  }
  return std::nullopt;
}

inline cohomology::CohomologyOptions cohomology_options(const Options& o) {
  cohomology::CohomologyOptions c;
  if (auto b = resolved_budget(o)) c.max_order_b0 = c.max_order_h2 = *b;
  c.slow = o.slow;
  return c;
}

inline lattices::LatticeOptions lattice_options(const Options& o) {
  lattices::LatticeOptions l;
  l.slow = o.slow;
  return l;
}

inline groups::GroupOptions group_options(const Options& o) {
  groups::GroupOptions g;
  if (o.slow) g.order_bound = 1u << 14;
  return g;
}

inline Json options_json(const Options& o) {
  Json j;
  j["family"] = cohomology::to_string(o.family);
  j["slow"] = o.slow;
  j["seedless"] = o.seedless;
  const auto b = resolved_budget(o);
  j["budget"] = b ? Json(*b) : Json(nullptr);
  return j;
}

namespace detail {

inline Json structure(const exactalg::AbelianStructure& s) { return io::to_json(s); }

inline BigInt pow_p(std::int64_t p, std::size_t k) { return num::ipow(BigInt(p), static_cast<int>(k)); }

inline Json lambda_rows(const class2::CentralExtensionData& e) { return io::to_json(e)["lambda"]; }

}  // namespace detail

/// Runs `body`, mapping library errors to exit codes, and stamps timing when requested.
inline Outcome run_guarded(const std::string& command, const Options& o, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  auto error_report = [&](const char* kind, const std::exception& e, int code) {
    out.report = Json{{"schema", io::schema_id("report")}, {"command", command}, {"error", {{"kind", kind}, {"message", e.what()}}}};
    out.text = std::string("error (") + kind + "): " + e.what() + "\n";
    out.exit_code = code;
  };
  try {
    out = body();
  } catch (const ParseError& e) {
    error_report("parse", e, kParse);
  } catch (const NotAGroup& e) {
    error_report("invalid-group", e, kParse);
  } catch (const InvalidPermutation& e) {
    error_report("invalid-group", e, kParse);
  } catch (const InvalidLattice& e) {
    error_report("invalid-lattice", e, kParse);
  } catch (const DimensionMismatch& e) {
    error_report("dimension", e, kParse);
  } catch (const UnsupportedDimension& e) {
    error_report("dimension", e, kParse);
  } catch (const BudgetExceeded& e) {
    error_report("budget", e, kBudget);
  } catch (const OrderBoundExceeded& e) {
    error_report("budget", e, kBudget);
  } catch (const Error& e) {
    error_report("error", e, kInternal);
  }
  if (o.timing)
    out.report["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

// ---------------------------------------------------------------- b0

/// The obstruction by brute force (cohomology::b0); for central-extension inputs also by the class-2 formula,
/// with an agreement bit. Over budget the oracle is skipped when the formula applies and is an error otherwise.
inline Outcome cmd_b0(const io::GroupSpec& spec, const Options& o) {
  return run_guarded("b0", o, [&] {
    Outcome out;
    const auto copts = cohomology_options(o);
    out.report = io::make_report("b0", options_json(o), io::to_json(spec));
    Json result, witnesses = Json::object();
    std::ostringstream text;
    std::optional<exactalg::AbelianStructure> formula, oracle;

    if (spec.kind == io::GroupKind::CentralExtension) {
      const auto& ext = *spec.extension;
      formula = class2::bogomolov_class2(ext);
      result["formula"] = detail::structure(*formula);
      const auto s = class2::s_group(ext);
      witnesses["s"] = s.basis();
      witnesses["s_bic"] = class2::s_bic(s, ext.gamma_rank).basis();
    }

    const auto known = spec.known_order();
    const bool over = !o.slow && known && *known > BigInt(copts.max_order_b0);
    Json oj;
    if (over && formula) {
      oj["ran"] = false;
      oj["reason"] = "|G| = " + known->str() + " exceeds budget " + std::to_string(copts.max_order_b0);
    } else {
      const auto g = spec.build(group_options(o));
      const auto k = cohomology::b0(g, o.family, copts);
      oracle = k.structure();
      oracle->generators.reset();
      oj["ran"] = true;
      oj["group_order"] = g.order();
      oj["structure"] = detail::structure(*oracle);
      if (!k.is_trivial()) {
        witnesses["cocycles_mod"] = k.modulus_context();
        witnesses["cocycles"] = k.representatives();
      }
    }
    result["oracle"] = oj;
    const auto& answer = formula ? *formula : *oracle;
    result["obstruction"] = detail::structure(answer);
    if (known) result["group_order"] = io::to_json(*known);
    if (formula && oracle) {
      const bool agree = formula->isomorphic_to(*oracle);
      result["agreement"] = agree;
      if (!agree) out.exit_code = kDisagreement;
    }
    out.report["result"] = result;
    out.report["witnesses"] = witnesses;

    text << "B0(G) = " << answer.to_string() << "\n";
    if (formula) text << "  class-2 formula: " << formula->to_string() << "\n";
    if (oracle)
      text << "  cocycle oracle:  " << oracle->to_string() << " (" << cohomology::to_string(o.family) << " family)\n";
    else
      text << "  cocycle oracle:  skipped, " << oj["reason"].get<std::string>() << "\n";
    if (formula && oracle) text << "  agreement: " << (out.exit_code == kOk ? "yes" : "NO") << "\n";
    out.text = text.str();
    return out;
  });
}

// ---------------------------------------------------------------- classify

inline Json classification_json(const class2::SubspaceClassification& c) {
  Json j;
  j["label"] = class2::to_string(c.label);
  j["projective_dim"] = c.dim;
  j["points_on_quadric"] = c.points_on_quadric;
  j["obstructed"] = c.obstructed;
  j["predicted_group_order"] = io::to_json(c.predicted_group_order);
  j["bogomolov"] = detail::structure(c.bogomolov);
  return j;
}

inline Outcome cmd_classify(const io::SubspaceSpec& spec, const Options& o) {
  return run_guarded("classify", o, [&] {
    if (spec.d != 4) throw UnsupportedDimension("classify: d must be 4");
    Outcome out;
    out.report = io::make_report("classify", options_json(o), io::to_json(spec.space, spec.d));
    const auto c = class2::classify_subspace(spec.space);
    out.report["result"] = classification_json(c);
    const auto ext = class2::extension_from_subspace(spec.space, 4);
    out.report["witnesses"] = Json{{"s_bic", class2::s_bic(spec.space, 4).basis()}, {"extension", io::to_json(ext)}};
    std::ostringstream t;
    t << "label: " << class2::to_string(c.label) << "\n"
      << "points on Q: " << c.points_on_quadric << "\n"
      << "group order: " << c.predicted_group_order << "\n"
      << "B_G: " << c.bogomolov.to_string() << (c.obstructed ? "" : " (unobstructed)") << "\n";
    out.text = t.str();
    return out;
  });
}

// ---------------------------------------------------------------- examples

inline Outcome cmd_examples(const std::string& which, std::int64_t p, const Options& o) {
  return run_guarded("examples", o, [&] {
    if (!num::is_prime(p)) throw ParseError("examples: p must be prime");
    std::vector<int> cases;
    if (which == "all") {
      cases = {1, 2, 3, 4, 5};
    } else {
      int c = 0;
      try {
        c = std::stoi(which);
      } catch (const std::exception&) {
      }
      if (c < 1 || c > 5 || std::to_string(c) != which) throw ParseError("examples: case must be 1..5 or 'all'");
      cases = {c};
    }
    Outcome out;
    out.report = io::make_report("examples", options_json(o), Json{{"case", which}, {"p", p}});
    Json rows = Json::array();
    std::ostringstream t;
    t << "case  label               |G|        B_G\n";
    for (int c : cases) {
      const auto w = class2::example_case_witness(c, p);
      Json row;
      row["case"] = c;
      row["label"] = class2::to_string(w.classification.label);
      row["group_order"] = io::to_json(w.classification.predicted_group_order);
      row["group_order_log_p"] = w.ext.order_exponent();
      row["bogomolov"] = detail::structure(w.classification.bogomolov);
      row["s"] = w.s.basis();
      row["extension"] = io::to_json(w.ext);
      rows.push_back(std::move(row));
      std::ostringstream order;
      order << w.classification.predicted_group_order << " = " << p << "^" << w.ext.order_exponent();
      t << std::left;
      t.width(6);
      t << c;
      t.width(20);
      t << class2::to_string(w.classification.label);
      t.width(11);
      t << order.str() << w.classification.bogomolov.to_string() << "\n";
    }
    out.report["result"] = Json{{"rows", rows}};
    out.text = t.str();
    return out;
  });
}

// ---------------------------------------------------------------- pfaffian

inline Outcome cmd_pfaffian(std::size_t m, std::int64_t p, const Options& o) {
  return run_guarded("pfaffian", o, [&] {
    if (!num::is_prime(p)) throw ParseError("pfaffian: p must be prime");
    if (m < 1 || m > 6) throw ParseError("pfaffian: m must lie in 1..6");
    Outcome out;
    out.report = io::make_report("pfaffian", options_json(o), Json{{"m", m}, {"p", p}});
    const auto s = class2::pfaffian_family_subspace(m, p);
    const auto ext = class2::pfaffian_family(m, p);
    const auto sb = class2::s_bic(s, 2 * m);
    const auto hyper = class2::pfaffian_family_hyperplane(m, p);
    const bool equal = sb.contains(hyper) && hyper.contains(sb);
    const auto b = class2::bogomolov_class2(ext);
    Json r;
    r["gamma_rank"] = 2 * m;
    r["dim_s"] = s.dim();
    r["dim_s_bic"] = sb.dim();
    r["s_bic_is_hyperplane"] = equal;
    r["group_order"] = io::to_json(detail::pow_p(p, ext.order_exponent()));
    r["bogomolov"] = detail::structure(b);
    out.report["result"] = r;
    out.report["witnesses"] = Json{{"s", s.basis()}, {"s_bic", sb.basis()}};
    std::ostringstream t;
    t << "block family m=" << m << " over F_" << p << ": dim S = " << s.dim() << ", dim S_bic = " << sb.dim() << "\n"
      << "S_bic = {diagonal = 0}: " << (equal ? "yes" : "no") << "\n"
      << "|G| = " << p << "^" << ext.order_exponent() << ", B_G = " << b.to_string() << "\n";
    out.text = t.str();
    return out;
  });
}

// ---------------------------------------------------------------- lattice

inline Outcome cmd_lattice(const io::LatticeSpec& spec, const Options& o) {
  return run_guarded("lattice", o, [&] {
    Outcome out;
    out.report = io::make_report("lattice", options_json(o), io::to_json(spec));
    const auto g = spec.group.build(group_options(o));
    const auto lopts = lattice_options(o);
    const auto l = io::build_lattice(spec, g, lopts);
    const auto h = lattices::h2_lattice(l, lopts);
    const auto mk = lattices::multiplicative_kernel(l, lopts, cohomology_options(o));
    Json r;
    r["group_order"] = g.order();
    r["rank"] = l.rank();
    r["h2"] = Json{{"route", h.route == lattices::Route::Direct ? "direct" : "shifted"}, {"structure", detail::structure(h.structure)}};
    r["tate_h0"] = detail::structure(lattices::tate_h0(l));
    r["multiplicative_kernel"] = Json{{"brauer_part", detail::structure(mk.brauer_part)},
                                      {"lattice_part", detail::structure(mk.lattice_part)},
                                      {"total", detail::structure(mk.total)}};
    r["obstruction"] = detail::structure(mk.total);
    if (spec.kind == lattices::LatticeKind::StandardKernel) r["standard_obstruction"] = io::to_json(lattices::standard_obstruction(g), true);
    out.report["result"] = r;
    std::ostringstream t;
    t << "lattice " << lattices::to_string(l.kind()) << " of rank " << l.rank() << " over |G| = " << g.order() << "\n"
      << "H^2(G, L) = " << h.structure.to_string() << " (" << (h.route == lattices::Route::Direct ? "direct" : "shifted") << ")\n"
      << "Tate H^0(G, L) = " << lattices::tate_h0(l).to_string() << "\n"
      << "obstruction: " << mk.total.to_string() << " (Brauer part " << mk.brauer_part.to_string() << ", lattice part "
      << mk.lattice_part.to_string() << ")\n";
    out.text = t.str();
    return out;
  });
}

// ---------------------------------------------------------------- sylow

inline Outcome cmd_sylow(const io::GroupSpec& spec, const Options& o) {
  return run_guarded("sylow", o, [&] {
    Outcome out;
    out.report = io::make_report("sylow", options_json(o), io::to_json(spec));
    const auto g = spec.build(group_options(o));
    Json per = Json::array();
    std::ostringstream t;
    for (auto p : num::prime_divisors(static_cast<std::int64_t>(g.order()))) {
      const auto s = groups::sylow_subgroup(g, p);
      per.push_back(Json{{"p", p}, {"order", s.order()}, {"abelian", groups::is_abelian(s)}, {"bicyclic", groups::is_bicyclic(s)},
                         {"cyclic", groups::is_cyclic(s)}});
      t << "Sylow-" << p << ": order " << s.order() << (groups::is_cyclic(s) ? ", cyclic" : groups::is_bicyclic(s) ? ", bicyclic" : ", not bicyclic")
        << "\n";
    }
    const bool bic = groups::all_sylow_bicyclic(g), cyc = groups::all_sylow_cyclic(g);
    out.report["result"] = Json{{"group_order", g.order()}, {"sylow", per}, {"all_sylow_bicyclic", bic}, {"all_sylow_cyclic", cyc}};
    t << "all_sylow_bicyclic: " << (bic ? "true" : "false") << "\nall_sylow_cyclic: " << (cyc ? "true" : "false") << "\n";
    out.text = t.str();
    return out;
  });
}

// ---------------------------------------------------------------- oracle-compare

using crosscheck::ComparisonCase;
using crosscheck::formula_oracle_sweep;

inline Outcome comparison_outcome(const std::string& command, const Json& input, const std::vector<ComparisonCase>& cases, const Options& o) {
  Outcome out;
  out.report = io::make_report(command, options_json(o), input);
  Json rows = Json::array();
  std::size_t agreed = 0;
  for (const auto& c : cases) {
    agreed += c.agree();
    rows.push_back(Json{{"p", c.ext.p},
                        {"gamma_rank", c.ext.gamma_rank},
                        {"c_rank", c.ext.c_rank},
                        {"lambda", detail::lambda_rows(c.ext)},
                        {"formula", c.formula.to_string()},
                        {"oracle", c.oracle.to_string()},
                        {"agree", c.agree()}});
  }
  out.report["result"] = Json{{"compared", cases.size()}, {"agreed", agreed}, {"all_agree", agreed == cases.size()}, {"cases", rows}};
  std::ostringstream t;
  t << "formula vs oracle: " << agreed << "/" << cases.size() << " agree\n";
  for (const auto& c : cases)
    if (!c.agree()) t << "  DISAGREE: p=" << c.ext.p << " d=" << c.ext.gamma_rank << " r=" << c.ext.c_rank << " lambda=" << detail::lambda_rows(c.ext).dump()
                      << " formula " << c.formula.to_string() << " oracle " << c.oracle.to_string() << "\n";
  out.text = t.str();
  if (agreed != cases.size()) out.exit_code = kDisagreement;
  return out;
}

inline Outcome cmd_oracle_sweep(std::int64_t p, std::size_t max_d, std::size_t max_r, const Options& o) {
  return run_guarded("oracle-compare", o, [&] {
    if (!num::is_prime(p)) throw ParseError("oracle-compare: p must be prime");
    const auto copts = cohomology_options(o);
    const auto cases = formula_oracle_sweep(p, max_d, max_r, copts.max_order_b0, o.family, copts);
    const Json input{{"sweep", {{"p", p}, {"max_gamma_rank", max_d}, {"max_c_rank", max_r}, {"max_order", copts.max_order_b0}}}};
    return comparison_outcome("oracle-compare", input, cases, o);
  });
}

inline Outcome cmd_oracle_compare(const class2::CentralExtensionData& ext, const Options& o) {
  return run_guarded("oracle-compare", o, [&] {
    const auto copts = cohomology_options(o);
    const auto g = groups::from_central_extension(ext, std::nullopt, group_options(o));
    auto oracle = cohomology::b0(g, o.family, copts).structure();
    oracle.generators.reset();
    std::vector<ComparisonCase> cases{{ext, class2::bogomolov_class2(ext), std::move(oracle)}};
    return comparison_outcome("oracle-compare", io::to_json(io::GroupSpec::central_extension(ext)), cases, o);
  });
}

}  // namespace brunr::cli
