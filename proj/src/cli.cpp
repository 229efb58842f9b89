#include "nsring/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "nsring/errors.hpp"
#include "nsring/report_json.hpp"
#include "nsring/series_module.hpp"

namespace nsring {

namespace {

std::vector<Z> parse_gens(const std::string& text) {
  std::vector<Z> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t pos = 0;
    long long v = std::stoll(tok, &pos);
    if (pos != tok.size() && tok.find_first_not_of(" \t", pos) != std::string::npos)
      throw Error("bad generator list: '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw EmptyGenerators();
  return out;
}

// "0,1@3,7,8" | "K@3,7,8" | "m@..." | "c@..." | "R@..."
RelativeIdeal parse_ideal_literal(const std::string& text) {
  size_t at = text.find('@');
  if (at == std::string::npos)
    throw Error("ideal literal must be gens@H, e.g. 0,1@3,7,8");
  std::string lhs = text.substr(0, at);
  auto H = NumericalSemigroup::from_generators(parse_gens(text.substr(at + 1)));
  if (lhs == "K") return RelativeIdeal::canonical(H);
  if (lhs == "m") return RelativeIdeal::maximal_ideal(H);
  if (lhs == "c") return conductor_ideal(H);
  if (lhs == "R") return RelativeIdeal::ring(H);
  return RelativeIdeal::from_generators(H, parse_gens(lhs));
}

struct FieldSpec {
  bool rational = true;
  std::uint64_t p = 0;
};

FieldSpec parse_field(const std::string& text) {
  if (text == "q") return {true, 0};
  if (text.rfind("p:", 0) == 0) return {false, std::stoull(text.substr(2))};
  throw Error("field must be q or p:<prime>, got '" + text + "'");
}

Z default_prec(const NumericalSemigroup& H, const std::vector<SeriesPattern>& ps) {
  Z maxval = 0;
  for (const auto& p : ps) {
    Z v = -1;
    for (const auto& t : p.terms)
      if (v < 0 || t.exp < v) v = t.exp;
    if (v > maxval) maxval = v;
  }
  return H.conductor() + 2 * maxval + H.multiplicity();
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

void print_analysis(std::ostream& out, const NumericalSemigroup& H) {
  json j = analyze_json(H);
  out << "H = " << H.to_string() << "  f = " << H.frobenius()
      << "  c = " << H.conductor() << "  genus = " << H.genus() << "\n";
  out << "PF = {";
  for (size_t i = 0; i < H.pseudo_frobenius().size(); ++i)
    out << (i ? "," : "") << H.pseudo_frobenius()[i];
  out << "}  type = " << H.type() << "  e = " << H.multiplicity()
      << "  v = " << H.embedding_dim() << "\n";
  out << "gorenstein: " << yesno(j["gorenstein"].get<bool>())
      << "  almost_gorenstein: " << yesno(j["almost_gorenstein"].get<bool>())
      << "  ggl: " << yesno(j["ggl"].get<bool>()) << "\n";
  out << "minimal_multiplicity: " << yesno(j["minimal_multiplicity"].get<bool>())
      << "  arf: " << yesno(j["arf"].get<bool>())
      << "  finite_cm_type: " << yesno(j["finite_cm_type"].get<bool>()) << "\n";
  out << "S = <" << j["S"].get<std::string>() << "> (K-power exponent "
      << j["S_exponent"].get<Z>() << "),  c(R:S) = "
      << conductor_ideal(H).to_string()
      << ",  l(R/c) = " << j["ell_R_mod_c"].get<Z>() << "\n";
  if (!j["reflexive_count"].is_null())
    out << "reflexive count = " << j["reflexive_count"].get<Z>() << "\n";
  if (!j["reflexive_sector_count"].is_null()) {
    out << "reflexive classes (rank-one monomial sector): "
        << j["reflexive_sector_count"].get<Z>() << "\n";
    for (const auto& lit : j["reflexive_classes"])
      out << "  " << lit.get<std::string>() << "\n";
  }
}

int cmd_ulrich_series(std::ostream& out, const NumericalSemigroup& H,
                      const std::string& series, const FieldSpec& fs, Z prec,
                      const UlrichOptions& opts, bool as_json) {
  auto patterns = parse_series_list(series);
  for (const auto& p : patterns)
    if (p.has_slot())
      throw Error("series has an unbound slot 'c'; use ulrich sweep");
  if (prec <= 0) prec = default_prec(H, patterns);
  UlrichEvidence ev;
  if (fs.rational)
    ev = is_ulrich_series(H, patterns, Rationals{}, prec, opts);
  else
    ev = is_ulrich_series(H, patterns, PrimeField(fs.p), prec, opts);
  if (as_json)
    out << to_json(ev).dump() << "\n";
  else
    out << "verdict: " << verdict_name(ev.verdict) << "  mu = " << ev.mu
        << "  l(R/I) = " << ev.colength << "  r(R/I) = " << ev.socle_dim
        << "\n"
        << (ev.reduction.empty() ? std::string()
                                 : "reduction a = " + ev.reduction + "\n")
        << (ev.reason.empty() ? std::string() : "note: " + ev.reason + "\n");
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"numerical semigroup ring calculator: invariants, ideal "
               "calculus, Ulrich ideals, and theorem verification"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand arguments

  bool as_json = false;
  app.add_flag("--json", as_json, "render JSON instead of text");

  // analyze
  std::string an_gens;
  auto* an = app.add_subcommand("analyze", "invariants and classification of k[[H]]");
  an->add_option("gens", an_gens, "semigroup generators, e.g. 3,7,8")->required();

  // ideal
  std::string id_op, id_a, id_b;
  auto* id = app.add_subcommand("ideal", "monomial relative-ideal calculus");
  id->add_option("op", id_op,
                 "trace|bidual|colon|product|sum|blowup|endo|mingens|filtration|info")
      ->required();
  id->add_option("ideal", id_a, "ideal literal gens@H (or K|m|c|R @H)")->required();
  id->add_option("second", id_b, "second ideal literal for binary ops");

  // chain
  std::string ch_gens;
  auto* ch = app.add_subcommand("chain", "Lipman chain of blow-ups");
  ch->add_option("gens", ch_gens, "semigroup generators")->required();

  // ulrich
  auto* ul = app.add_subcommand("ulrich", "Ulrich ideal verification");
  ul->require_subcommand(1);
  std::string ul_gens, ul_ideal, ul_series, ul_field = "q", ul_template;
  Z ul_prec = 0, ul_minbound = 0;
  std::uint64_t ul_seed = 0;
  bool ul_principal = false;
  auto* ulv = ul->add_subcommand("verify", "check one ideal");
  ulv->add_option("gens", ul_gens, "semigroup generators")->required();
  ulv->add_option("--ideal", ul_ideal, "monomial generators, e.g. 6,7,8");
  ulv->add_option("--series", ul_series, "series generators, e.g. 't^6 - t^7, t^10'");
  ulv->add_option("--field", ul_field, "q or p:<prime> (default q)");
  ulv->add_option("--prec", ul_prec, "truncation precision N");
  ulv->add_option("--seed", ul_seed, "seed for reduction candidates");
  ulv->add_flag("--include-principal", ul_principal, "count principal ideals");
  auto* ule = ul->add_subcommand("enumerate", "all monomial Ulrich ideals");
  ule->add_option("gens", ul_gens, "semigroup generators")->required();
  ule->add_option("--min-bound", ul_minbound, "search min(E) up to this bound")
      ->required();
  ule->add_flag("--include-principal", ul_principal, "count principal ideals");
  auto* uls = ul->add_subcommand("sweep", "sweep the scalar slot over GF(p)");
  uls->add_option("gens", ul_gens, "semigroup generators")->required();
  uls->add_option("--template", ul_template, "series with slot c, e.g. 't^6 - c*t^7, t^10'")
      ->required();
  uls->add_option("--field", ul_field, "p:<prime>")->required();
  uls->add_option("--prec", ul_prec, "truncation precision N");
  uls->add_option("--seed", ul_seed, "seed for reduction candidates");

  // verify
  std::string vf_suite, vf_out;
  Z vf_gmax = 0;
  auto* vf = app.add_subcommand("verify", "machine-verify theorem suites");
  vf->add_option("--suite", vf_suite, "prop110|main|cor34|cor35|counts|all")
      ->required();
  vf->add_option("--genus-max", vf_gmax, "survey bound")->required();
  vf->add_option("--out", vf_out, "write JSONL here instead of stdout");

  // survey
  std::string sv_out;
  Z sv_gmax = 0;
  auto* sv = app.add_subcommand("survey", "classify all semigroups of genus <= G");
  sv->add_option("--genus-max", sv_gmax, "survey bound")->required();
  sv->add_option("--out", sv_out, "output JSONL path")->required();

  std::vector<std::string> argv_copy = args;
  std::vector<char*> argv;
  std::string prog = "nsring";
  argv.push_back(prog.data());
  for (auto& a : argv_copy) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (an->parsed()) {
      auto H = NumericalSemigroup::from_generators(parse_gens(an_gens));
      if (as_json)
        out << analyze_json(H).dump() << "\n";
      else
        print_analysis(out, H);
      return 0;
    }

    if (id->parsed()) {
      RelativeIdeal  I = parse_ideal_literal(id_a);
      bool binary = (id_op == "colon" || id_op == "product" || id_op == "sum");
      if (binary && id_b.empty()) throw Error(id_op + " needs a second ideal");
      auto render = [&](const RelativeIdeal& E) {
        if (as_json)
          out << to_json(E).dump() << "\n";
        else
          out << E.to_string() << "\n";
      };
      if (id_op == "trace") render(trace(I));
      else if (id_op == "bidual") {
        RelativeIdeal R = RelativeIdeal::ring(I.ambient());
        render(colon(R, colon(R, I)));
      } else if (id_op == "colon") render(colon(I, parse_ideal_literal(id_b)));
      else if (id_op == "product") render(sumset(I, parse_ideal_literal(id_b)));
      else if (id_op == "sum") render(module_sum(I, parse_ideal_literal(id_b)));
      else if (id_op == "blowup" || id_op == "endo") {
        auto A = (id_op == "blowup") ? blowup(I) : endomorphism_semigroup(I);
        if (as_json)
          out << to_json(A).dump() << "\n";
        else
          out << A.to_string() << "\n";
      } else if (id_op == "mingens") {
        json j = minimal_generators(I);
        if (as_json)
          out << j.dump() << "\n";
        else
          out << j.dump() << "\n";
      } else if (id_op == "filtration") {
        json j = json::array();
        for (const auto& A : filtration(I)) j.push_back(A.key());
        if (as_json)
          out << j.dump() << "\n";
        else
          for (const auto& k : j) out << "<" << k.get<std::string>() << ">\n";
      } else if (id_op == "info") {
        json j;
        j["ideal"] = to_json(I);
        j["literal"] = I.literal();
        j["mu"] = mu(I);
        j["integral"] = I.is_integral();
        j["reflexive"] = is_reflexive(I);
        j["stable"] = is_stable(I);
        j["trace_ideal"] = I.is_integral() ? json(is_trace(I)) : json(nullptr);
        if (as_json)
          out << j.dump() << "\n";
        else {
          out << I.to_string() << "  (" << I.literal() << ")\n"
              << "mu = " << j["mu"].get<Z>()
              << "  integral: " << yesno(j["integral"].get<bool>())
              << "  reflexive: " << yesno(j["reflexive"].get<bool>())
              << "  stable: " << yesno(j["stable"].get<bool>()) << "\n";
        }
      } else {
        throw Error("unknown ideal op: " + id_op);
      }
      return 0;
    }

    if (ch->parsed()) {
      auto H = NumericalSemigroup::from_generators(parse_gens(ch_gens));
      LipmanChain chain = lipman_chain(H);
      if (as_json) {
        out << to_json(chain).dump() << "\n";
      } else {
        for (size_t i = 0; i < chain.members.size(); ++i)
          out << (i ? " ⊂ " : "") << chain.members[i].to_string();
        out << "\nmultiplicities:";
        for (Z e : chain.multiplicity_sequence) out << " " << e;
        out << "\n";
      }
      return 0;
    }

    if (ul->parsed()) {
      auto H = NumericalSemigroup::from_generators(parse_gens(ul_gens));
      UlrichOptions opts;
      opts.seed = ul_seed;
      opts.include_principal = ul_principal;
      FieldSpec fs = parse_field(ul_field);
      if (ulv->parsed()) {
        if (ul_ideal.empty() == ul_series.empty())
          throw Error("ulrich verify needs exactly one of --ideal or --series");
        if (!ul_ideal.empty()) {
          auto E = RelativeIdeal::from_generators(H, parse_gens(ul_ideal));
          auto ev = is_ulrich_monomial(H, E, ul_principal);
          if (as_json)
            out << to_json(ev).dump() << "\n";
          else
            out << "verdict: " << verdict_name(ev.verdict) << "  mu = " << ev.mu
                << "  l(R/I) = " << ev.colength << "  r(R/I) = " << ev.socle_dim
                << (ev.reason.empty() ? "" : "\nnote: " + ev.reason) << "\n";
          return 0;
        }
        return cmd_ulrich_series(out, H, ul_series, fs, ul_prec, opts, as_json);
      }
      if (ule->parsed()) {
        auto found = enumerate_ulrich_monomial(H, ul_minbound, ul_principal);
        if (as_json) {
          json j = json::array();
          for (const auto& E : found) j.push_back(to_json(E));
          out << j.dump() << "\n";
        } else {
          out << found.size() << " monomial Ulrich ideal(s) with min <= "
              << ul_minbound << "\n";
          for (const auto& E : found) out << "  " << E.to_string() << "\n";
        }
        return 0;
      }
      // sweep
      if (fs.rational) throw Error("sweep needs a finite field, e.g. --field p:5");
      auto tpl = parse_series_list(ul_template);
      Z prec = ul_prec > 0 ? ul_prec : default_prec(H, tpl);
      auto hits = field_sweep(H, tpl, PrimeField(fs.p), prec, opts);
      if (as_json) {
        json j;
        j["field"] = "p:" + std::to_string(fs.p);
        j["prec"] = prec;
        j["ulrich_values"] = hits;
        out << j.dump() << "\n";
      } else {
        out << "Ulrich for c in {";
        for (size_t i = 0; i < hits.size(); ++i) out << (i ? "," : "") << hits[i];
        out << "} over GF(" << fs.p << ")\n";
      }
      return 0;
    }

    if (vf->parsed()) {
      std::ofstream file;
      std::ostream* sink_stream = &out;
      if (!vf_out.empty()) {
        file.open(vf_out);
        if (!file) throw Error("cannot open " + vf_out);
        sink_stream = &file;
      }
      std::vector<std::string> suites;
      if (vf_suite == "all")
        suites = {"prop110", "cor34", "cor35", "counts", "main"};
      else
        suites = {vf_suite};
      Z instances = 0, violations = 0;
      for (const auto& s : suites) {
        auto sum = run_suite(s, vf_gmax, [&](const Certificate& c) {
          *sink_stream << to_json(c).dump() << "\n";
        });
        instances += sum.instances;
        violations += sum.violations;
      }
      json summary;
      summary["summary"] = true;
      summary["instances"] = instances;
      summary["violations"] = violations;
      *sink_stream << summary.dump() << "\n";
      err << "checked " << instances << " instance(s), " << violations
          << " violation(s)\n";
      return violations == 0 ? 0 : 1;
    }

    if (sv->parsed()) {
      std::ofstream file(sv_out);
      if (!file) throw Error("cannot open " + sv_out);
      Z total = 0, gor = 0, ag = 0, ggl = 0, mm = 0, arf_n = 0, fcm = 0;
      for_each_semigroup(sv_gmax, [&](const NumericalSemigroup& H) {
        ClassificationReport rep = classify(H);
        json j;
        j["key"] = H.key();
        j["generators"] = H.minimal_generators();
        j["frobenius"] = H.frobenius();
        j["conductor"] = H.conductor();
        j["genus"] = H.genus();
        j["pf"] = H.pseudo_frobenius();
        j["type"] = H.type();
        j["multiplicity"] = H.multiplicity();
        j["embedding_dim"] = H.embedding_dim();
        json cls = to_json(rep);
        for (auto& [k, v] : cls.items())
          if (k != "notes") j[k] = v;
        auto classes = reflexive_classes(H);
        j["reflexive_sector_count"] = classes.size();
        file << j.dump() << "\n";
        ++total;
        gor += rep.gorenstein;
        ag += rep.almost_gorenstein;
        ggl += rep.generalized_gorenstein;
        mm += rep.minimal_multiplicity;
        arf_n += rep.arf;
        fcm += rep.finite_cm_type;
      });
      if (!(ag >= gor && ggl >= ag))
        throw std::logic_error("classification counts violate the implication chain");
      json summary;
      summary["summary"] = true;
      summary["total"] = total;
      summary["gorenstein"] = gor;
      summary["almost_gorenstein"] = ag;
      summary["ggl"] = ggl;
      summary["minimal_multiplicity"] = mm;
      summary["arf"] = arf_n;
      summary["finite_cm_type"] = fcm;
      file << summary.dump() << "\n";
      out << "wrote " << total << " semigroup(s) to " << sv_out << "\n";
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "theorem check failed: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace nsring
