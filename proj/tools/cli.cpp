#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "reestype/errors.hpp"
#include "reestype/io.hpp"
#include "reestype/monres.hpp"
#include "reestype/multipliers.hpp"
#include "reestype/ramsey.hpp"
#include "reestype/rees.hpp"
#include "reestype/version.hpp"

namespace reestype::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[19];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     start)
        .count();
  }
};

std::uint32_t effective_degree_cap(const CLI::Option* opt, std::uint32_t flag_value) {
  if (opt->count() > 0) return flag_value;
  if (const char* env = std::getenv("REESTYPE_DEGREE_CAP")) {
    try {
      long v = std::stol(env);
      if (v > 0) return static_cast<std::uint32_t>(v);
    } catch (...) {
      throw ParseError("REESTYPE_DEGREE_CAP is not a positive integer");
    }
  }
  return kDefaultDegreeCap;
}

struct RingBundle {
  RingFile file;
  QuotientRing R;
};

RingBundle load_ring(const std::string& path, std::uint32_t cap) {
  RingFile rf = RingFile::load(path);
  QuotientRing R = rf.build(cap);
  return RingBundle{std::move(rf), std::move(R)};
}

ordered_json poly_list_json(const PolyRing& ring, std::span<const Polynomial> polys) {
  ordered_json arr = ordered_json::array();
  for (const auto& p : polys) arr.push_back(ring.to_string(p));
  return arr;
}

// ---------------------------------------------------------------------- gb

ordered_json run_gb(const RingBundle& rb, const std::string& ideal_text,
                    const std::string& order_name) {
  const PolyRing& amb = rb.R.ambient();
  MonomialOrder ord = order_name == "lex" ? MonomialOrder::lex(amb.nvars())
                                          : amb.grevlex();
  if (order_name != "lex" && order_name != "grevlex") {
    throw ParseError("unknown order '" + order_name + "'");
  }
  std::vector<Polynomial> gens = amb.parse_list(ideal_text, ord);
  for (const auto& r : rb.R.defining_ideal().generators()) {
    gens.push_back(poly_reorder(r, amb.field(), ord));
  }
  Ideal I(amb, ord, std::move(gens), rb.R.degree_cap());
  ordered_json res;
  res["order"] = order_name;
  res["basis"] = poly_list_json(amb, I.groebner_basis());
  res["size"] = I.groebner_basis().size();
  res["dimension"] = I.dimension();
  return res;
}

// ----------------------------------------------------------------- rees-rt

ordered_json run_rees_rt(const RingBundle& rb, const std::string& gens_text) {
  const PolyRing& amb = rb.R.ambient();
  std::vector<Polynomial> gens = amb.parse_list(gens_text, amb.grevlex());
  if (gens.empty()) throw ParseError("rees-rt needs at least one generator");
  ReesPresentation P = rees_presentation(rb.R, std::move(gens));
  ordered_json res;
  res["q_generators"] = poly_list_json(P.context().relation_ring(), P.q_generators());
  ordered_json degs = ordered_json::array();
  for (auto d : P.q_degrees()) degs.push_back(d);
  res["t_degrees"] = degs;
  res["relation_type"] = relation_type(P);
  res["inhomogeneous_warning"] = P.inhomogeneous_input();
  return res;
}

// ----------------------------------------------------------------- descent

ordered_json run_descent(const RingBundle& rb, const std::string& gens_text,
                         const std::string& relation_text,
                         const std::string& gamma_text) {
  const PolyRing& amb = rb.R.ambient();
  std::vector<Polynomial> gens = amb.parse_list(gens_text, amb.grevlex());
  if (gens.size() != 2) throw ParseError("descent needs exactly two generators");
  ReesContext ctx(rb.R, std::move(gens));
  Polynomial F = ctx.relation_ring().parse(relation_text, ctx.relation_order());
  Polynomial gamma = amb.parse(gamma_text, amb.grevlex());
  DescentResult dr = two_param_descent(ctx, F, gamma);
  ordered_json res;
  switch (dr.status) {
    case DescentResult::Status::Descended: res["status"] = "descended"; break;
    case DescentResult::Status::DegeneratePassThrough:
      res["status"] = "degenerate-pass-through";
      break;
    case DescentResult::Status::Failed: res["status"] = "failed"; break;
  }
  res["relation"] = ctx.relation_ring().to_string(dr.relation);
  res["degree"] = dr.degree;
  res["steps"] = dr.steps;
  res["message"] = dr.message;
  return res;
}

// ----------------------------------------------------------------- resolve

ordered_json run_resolve(const RingBundle& rb, const std::string& ideal_text,
                         bool radical_check) {
  if (!rb.R.defining_ideal().is_zero_ideal()) {
    throw PreconditionError(
        "resolve works over a polynomial ring; remove 'rel' lines");
  }
  const PolyRing& amb = rb.R.ambient();
  MonomialOrder ord = amb.grevlex();
  std::vector<Monomial> gens;
  for (const auto& f : amb.parse_list(ideal_text, ord)) {
    if (f.size() != 1 || f.leading_coef() != 1) {
      throw ParseError("resolve expects a list of monomials");
    }
    gens.push_back(f.leading_monomial());
  }
  MonomialIdeal I(amb.nvars(), std::move(gens));
  FreeComplex C = mapping_cone_resolution(I, amb);
  RankHeightReport rep = verify_rank_height(rb.R, C, radical_check);
  ordered_json res;
  ordered_json betti = ordered_json::array();
  for (auto b : C.betti()) betti.push_back(b);
  res["betti"] = betti;
  res["length"] = C.length();
  res["length_at_most_nvars"] = C.length() <= amb.nvars();
  ordered_json entries = ordered_json::array();
  for (const auto& e : rep.entries) {
    ordered_json row;
    row["i"] = e.index;
    row["expected_rank"] = e.expected_rank;
    row["rank"] = e.rank;
    row["rank_ok"] = e.rank_ok;
    row["height"] = e.height;
    row["height_ok"] = e.height_ok;
    if (radical_check) row["radical_ok"] = e.radical_ok;
    entries.push_back(row);
  }
  res["conditions"] = entries;
  res["pass"] = rep.pass() && C.length() <= amb.nvars();
  return res;
}

// -------------------------------------------------------------- multiplier

ordered_json run_multiplier(const RingBundle& rb, const std::string& z_text,
                            const std::string& sop_text, std::uint32_t power_cap) {
  const PolyRing& amb = rb.R.ambient();
  Polynomial z = amb.parse(z_text, amb.grevlex());
  std::vector<Polynomial> sop = amb.parse_list(sop_text, amb.grevlex());
  MultiplierCertificate cert = cm_multiplier_check(rb.R, z, sop, power_cap);
  ordered_json res;
  res["pass"] = cert.pass;
  res["power"] = cert.power;
  res["element"] = amb.to_string(cert.element);
  ordered_json idx = ordered_json::array();
  for (bool b : cert.index_pass) idx.push_back(b);
  res["index_pass"] = idx;
  res["degenerate_zero"] = cert.degenerate_zero;
  return res;
}

// ----------------------------------------------------------------- perturb

ordered_json run_perturb(const RingBundle& rb, const std::string& sop_text,
                         const std::string& alpha_text, std::size_t index1) {
  const PolyRing& amb = rb.R.ambient();
  std::vector<Polynomial> sop = amb.parse_list(sop_text, amb.grevlex());
  Polynomial alpha = amb.parse(alpha_text, amb.grevlex());
  if (index1 == 0 || index1 > sop.size()) {
    throw PreconditionError("perturbation index must be in 1..d");
  }
  PerturbationReport rep = rt_perturbation_experiment(rb.R, sop, alpha, index1 - 1);
  ordered_json res;
  res["rt_base"] = rep.rt_base;
  res["rt_perturbed"] = rep.rt_perturbed;
  res["equal"] = rep.equal;
  res["inhomogeneous_warning"] = rep.inhomogeneous_warning;
  return res;
}

// ------------------------------------------------------------------ ramsey

ordered_json run_ramsey(std::size_t d, std::uint32_t k, std::uint32_t l,
                        std::uint64_t mmax) {
  RamseySearchResult r = ramsey_number_search(d, k, l, mmax);
  ordered_json res;
  if (r.value) {
    res["value"] = *r.value;
    res["known"] = true;
  } else {
    res["value"] = nullptr;
    res["known"] = false;
    res["note"] = "unknown above m_max";
  }
  res["searched_up_to"] = r.searched_up_to;
  if (r.witness) {
    ordered_json w = ordered_json::array();
    for (const auto& t : r.witness->tuples) {
      ordered_json tup = ordered_json::array();
      for (auto v : t) tup.push_back(v);
      w.push_back(tup);
    }
    res["witness"] = w;
  } else {
    res["witness"] = nullptr;
  }
  return res;
}

// ------------------------------------------------------------------ fedder

ordered_json run_fedder(const RingBundle& rb) {
  ordered_json res;
  res["characteristic"] = rb.R.characteristic();
  res["fpure"] = fedder_fpure(rb.R.defining_ideal(), rb.R.characteristic());
  return res;
}

// ------------------------------------------------- replicate-example21

ordered_json replicate_one(std::uint32_t p, std::uint32_t cap, std::uint32_t n) {
  Timer t;
  PolyRing amb(p, {"x", "y", "z", "w"});
  MonomialOrder ord = amb.grevlex();
  QuotientRing R(amb, amb.parse_list("w^2, w*z", ord), cap);
  std::string u1 = (n >= 2 ? "x^" + std::to_string(n - 1) + "*y" : "y") + " + z^" +
                   std::to_string(n);
  std::vector<Polynomial> gens = {
      amb.parse(u1, ord),
      amb.parse("x^" + std::to_string(n), ord),
      amb.parse("y^" + std::to_string(n), ord),
  };
  ReesPresentation P = rees_presentation(R, gens);
  std::uint32_t rt = relation_type(P);
  ReesContext ctx(R, gens);
  const PolyRing& tring = ctx.relation_ring();
  std::string wit = "w*T1^" + std::to_string(n) + " - w*T2^" + std::to_string(n - 1) +
                    "*T3";
  Polynomial F = tring.parse(wit, ctx.relation_order());
  bool isrel = ctx.is_relation(F);
  bool irreducible = !reducible_to_lower_degree(P, F);
  ordered_json row;
  row["n"] = n;
  row["ideal"] = poly_list_json(amb, gens);
  row["relation_type"] = rt;
  row["rt_at_least_n"] = rt >= n;
  row["witness"] = wit;
  row["witness_is_relation"] = isrel;
  row["witness_irreducible_at_degree_n"] = irreducible;
  row["ms"] = t.ms();
  return row;
}

ordered_json run_replicate(std::uint32_t p, std::uint32_t cap, std::uint32_t n,
                           const std::string& sweep) {
  std::vector<std::uint32_t> ns;
  if (!sweep.empty()) {
    auto dots = sweep.find("..");
    if (dots == std::string::npos) throw ParseError("--sweep expects A..B");
    std::uint32_t a = 0, b = 0;
    try {
      a = static_cast<std::uint32_t>(std::stoul(sweep.substr(0, dots)));
      b = static_cast<std::uint32_t>(std::stoul(sweep.substr(dots + 2)));
    } catch (...) {
      throw ParseError("--sweep expects A..B with integers");
    }
    if (a == 0 || b < a) throw ParseError("--sweep range is empty");
    for (std::uint32_t i = a; i <= b; ++i) ns.push_back(i);
  } else {
    if (n == 0) throw ParseError("replicate-example21 needs --n or --sweep");
    ns.push_back(n);
  }
  // instances are independent; run them concurrently
  std::vector<std::future<ordered_json>> futures;
  futures.reserve(ns.size());
  for (auto ni : ns) {
    futures.push_back(std::async(std::launch::async, replicate_one, p, cap, ni));
  }
  ordered_json rows = ordered_json::array();
  for (auto& f : futures) rows.push_back(f.get());
  ordered_json res;
  res["instances"] = rows;
  bool all = true;
  for (const auto& r : rows) {
    all = all && r["rt_at_least_n"].get<bool>() &&
          r["witness_irreducible_at_degree_n"].get<bool>();
  }
  res["all_instances_confirm"] = all;
  return res;
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
  CLI::App app{"exact computations around Rees algebras, relation type, and "
               "homology multipliers"};
  app.name("reestype");
  app.require_subcommand(1);

  std::string ring_path, ideal_text, gens_text, order_name = "grevlex";
  std::string relation_text, gamma_text, z_text, sop_text, alpha_text, sweep;
  std::uint32_t degree_cap = kDefaultDegreeCap;
  std::uint32_t power_cap = 1;
  std::size_t index1 = 1;
  bool radical_check = true;
  std::uint64_t r_d = 1, r_k = 0, r_l = 1, r_mmax = 12;
  std::uint32_t ex_n = 0, ex_p = kDefaultPrime;

  CLI::Option* cap_opt =
      app.add_option("--degree-cap", degree_cap,
                     "abort Groebner runs above this total degree");

  // let --degree-cap appear after the subcommand as well
  auto with_fallthrough = [&](CLI::App* sub) {
    sub->fallthrough();
    return sub;
  };

  auto* gb = with_fallthrough(
      app.add_subcommand("gb", "reduced Groebner basis of an ideal"));
  gb->add_option("--ring", ring_path, "ring definition file")->required();
  gb->add_option("--ideal", ideal_text, "comma-separated generators")->required();
  gb->add_option("--order", order_name, "grevlex|lex");

  auto* rees = with_fallthrough(
      app.add_subcommand("rees-rt", "Rees presentation ideal and relation type"));
  rees->add_option("--ring", ring_path, "ring definition file")->required();
  rees->add_option("--gens", gens_text, "comma-separated ideal generators")->required();

  auto* desc = with_fallthrough(
      app.add_subcommand("descent", "two-parameter degree descent"));
  desc->add_option("--ring", ring_path, "ring definition file")->required();
  desc->add_option("--gens", gens_text, "the two parameters")->required();
  desc->add_option("--relation", relation_text, "relation in T1, T2")->required();
  desc->add_option("--gamma", gamma_text, "certified multiplier")->required();

  auto* resv = with_fallthrough(app.add_subcommand(
      "resolve", "mapping-cone resolution of a monomial ideal"));
  resv->add_option("--ring", ring_path, "ring definition file (no rel lines)")->required();
  resv->add_option("--ideal", ideal_text, "comma-separated monomials")->required();
  resv->add_flag("--radical-check,!--no-radical-check", radical_check,
                 "verify the radical containment");

  auto* mult = with_fallthrough(app.add_subcommand(
      "multiplier", "Cohen-Macaulay multiplier certificate"));
  mult->add_option("--ring", ring_path, "ring definition file")->required();
  mult->add_option("--z", z_text, "candidate multiplier")->required();
  mult->add_option("--sop", sop_text, "system of parameters")->required();
  mult->add_option("--power-cap", power_cap, "try powers of z up to this cap");

  auto* pert = with_fallthrough(app.add_subcommand(
      "perturb", "relation type under a multiplier perturbation"));
  pert->add_option("--ring", ring_path, "ring definition file")->required();
  pert->add_option("--sop", sop_text, "system of parameters")->required();
  pert->add_option("--alpha", alpha_text, "perturbation element")->required();
  pert->add_option("--index", index1, "1-based position to perturb")->required();

  auto* ram = with_fallthrough(
      app.add_subcommand("ramsey", "chain threshold search M(d,k,l)"));
  ram->add_option("--d", r_d, "tuple width")->required();
  ram->add_option("--k", r_k, "sum offset")->required();
  ram->add_option("--l", r_l, "chain length")->required();
  ram->add_option("--mmax", r_mmax, "search cap");

  auto* fed = with_fallthrough(app.add_subcommand(
      "fedder", "Fedder F-purity criterion for the ring file"));
  fed->add_option("--ring", ring_path, "ring definition file (rel lines = J)")->required();

  auto* ex21 = with_fallthrough(app.add_subcommand(
      "replicate-example21", "unbounded relation type counterexample"));
  ex21->add_option("--n", ex_n, "instance degree");
  ex21->add_option("--sweep", sweep, "range A..B of instance degrees");
  ex21->add_option("--p", ex_p, "coefficient prime");

  std::vector<const char*> argv;
  argv.push_back("reestype");
  for (const auto& a : args) argv.push_back(a.c_str());

  RunResult out;
  Timer total;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    std::uint32_t cap = effective_degree_cap(cap_opt, degree_cap);

    ordered_json inputs;
    ordered_json results;
    std::string command;

    auto echo_ring = [&](const RingBundle& rb) {
      inputs["ring"] = rb.file.canonical_text();
    };

    if (gb->parsed()) {
      command = "gb";
      RingBundle rb = load_ring(ring_path, cap);
      echo_ring(rb);
      inputs["ideal"] = ideal_text;
      inputs["order"] = order_name;
      results = run_gb(rb, ideal_text, order_name);
    } else if (rees->parsed()) {
      command = "rees-rt";
      RingBundle rb = load_ring(ring_path, cap);
      echo_ring(rb);
      inputs["gens"] = gens_text;
      results = run_rees_rt(rb, gens_text);
    } else if (desc->parsed()) {
      command = "descent";
      RingBundle rb = load_ring(ring_path, cap);
      echo_ring(rb);
      inputs["gens"] = gens_text;
      inputs["relation"] = relation_text;
      inputs["gamma"] = gamma_text;
      results = run_descent(rb, gens_text, relation_text, gamma_text);
    } else if (resv->parsed()) {
      command = "resolve";
      RingBundle rb = load_ring(ring_path, cap);
      echo_ring(rb);
      inputs["ideal"] = ideal_text;
      inputs["radical_check"] = radical_check;
      results = run_resolve(rb, ideal_text, radical_check);
    } else if (mult->parsed()) {
      command = "multiplier";
      RingBundle rb = load_ring(ring_path, cap);
      echo_ring(rb);
      inputs["z"] = z_text;
      inputs["sop"] = sop_text;
      inputs["power_cap"] = power_cap;
      results = run_multiplier(rb, z_text, sop_text, power_cap);
    } else if (pert->parsed()) {
      command = "perturb";
      RingBundle rb = load_ring(ring_path, cap);
      echo_ring(rb);
      inputs["sop"] = sop_text;
      inputs["alpha"] = alpha_text;
      inputs["index"] = index1;
      results = run_perturb(rb, sop_text, alpha_text, index1);
    } else if (ram->parsed()) {
      command = "ramsey";
      inputs["d"] = r_d;
      inputs["k"] = r_k;
      inputs["l"] = r_l;
      inputs["mmax"] = r_mmax;
      results = run_ramsey(static_cast<std::size_t>(r_d),
                           static_cast<std::uint32_t>(r_k),
                           static_cast<std::uint32_t>(r_l), r_mmax);
    } else if (fed->parsed()) {
      command = "fedder";
      RingBundle rb = load_ring(ring_path, cap);
      echo_ring(rb);
      results = run_fedder(rb);
    } else if (ex21->parsed()) {
      command = "replicate-example21";
      inputs["n"] = ex_n;
      inputs["sweep"] = sweep;
      inputs["p"] = ex_p;
      results = run_replicate(ex_p, cap, ex_n, sweep);
    }

    inputs["degree_cap"] = cap;
    inputs["digest"] = fnv1a_hex(inputs.dump());
    out.report["tool"] = "reestype";
    out.report["version"] = kVersion;
    out.report["command"] = command;
    out.report["inputs"] = inputs;
    out.report["results"] = results;
    out.report["timing_ms"] = ordered_json{{"total", total.ms()}};
    out.exit_code = kExitOk;
  } catch (const CLI::CallForHelp&) {
    out.report["help"] = app.help();
    out.exit_code = kExitOk;
  } catch (const CLI::ParseError& e) {
    out.report["error"] = e.what();
    out.exit_code = kExitParse;
  } catch (const ParseError& e) {
    out.report["error"] = e.what();
    out.exit_code = kExitParse;
  } catch (const DegreeCapError& e) {
    out.report["error"] = e.what();
    out.exit_code = kExitDegreeCap;
  } catch (const PreconditionError& e) {
    out.report["error"] = e.what();
    out.exit_code = kExitPrecondition;
  } catch (const std::exception& e) {
    out.report["error"] = std::string("internal error: ") + e.what();
    out.exit_code = 1;
  }
  return out;
}

int main_entry(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  RunResult r = run(args);
  std::cout << r.report.dump(2) << "\n";
  return r.exit_code;
}

}  // namespace reestype::cli
