#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <regex>

#include "zstab/cli.hpp"
#include "zstab/errors.hpp"

namespace zstab::cli {

namespace {

using io::Json;

struct Globals {
  std::vector<std::string> inputs;
  std::string format = "text";
  bool approx = false;

  OutputOptions output() const { return {format == "json", approx}; }
};

Workspace load(const Globals& g, bool validate_rings = true) { return Workspace::load(g.inputs, validate_rings); }

Json adapted_table(std::span<const GaussianRational> rho) {
  Json t = Json::object();
  for (std::size_t d = 0; d < rho.size(); ++d) t[std::to_string(d)] = is_adapted(rho, static_cast<int>(d));
  return t;
}

Json classify(std::span<const GaussianRational> rho) {
  Json r;
  r["rho"] = Json::array();
  for (const auto& z : rho) r["rho"].push_back(io::to_json(z));
  const bool sv = is_stability_vector(rho);
  r["stability"] = sv;
  if (!sv) r["note"] = "not a stability vector: need Im(rho_n) > 0 and Im(conj(rho_n) rho_{n-1}) > 0";
  r["bayer"] = is_bayer(rho);
  r["adapted"] = adapted_table(rho);
  r["adapted_coherent"] = is_adapted_coherent(rho);
  r["halfplane_signs"] = Json{{"strict", halfplane_sign_strict(rho)}, {"nonzero", halfplane_sign_nonzero(rho)}};
  std::vector<int> all(rho.size());
  for (std::size_t i = 0; i < rho.size(); ++i) all[i] = static_cast<int>(i);
  if (const auto w = halfplane_witness(rho, all)) {
    Json wj;
    wj["rotator_index"] = w->rotator_index;
    wj["lambda"] = io::to_json(w->lambda);
    wj["members"] = Json::array();
    for (const auto& m : w->certified)
      wj["members"].push_back(Json{{"index", m.index}, {"upper", m.upper}, {"negative_real", m.negative_real}});
    r["halfplane_witness"] = std::move(wj);
  } else {
    r["halfplane_witness"] = nullptr;
  }
  return r;
}

MuCondition parse_condition(const std::string& spec, const Workspace& ws, const std::string& charge_id) {
  auto charge = [&]() -> const ChargeData& {
    if (charge_id.empty()) throw ParseError("condition '" + spec + "' needs --charge");
    return ws.charge(charge_id);
  };
  if (spec == "slope") return SlopeLex{charge()};
  if (spec == "gieseker") return GiesekerReduced{charge()};
  if (spec.rfind("pzd:", 0) == 0) {
    int d = 0;
    try {
      std::size_t used = 0;
      d = std::stoi(spec.substr(4), &used);
      if (used != spec.size() - 4) throw std::invalid_argument(spec);
    } catch (const std::exception&) {
      throw ParseError("malformed condition '" + spec + "'");
    }
    return PZd{charge(), d};
  }
  if (spec.rfind("gamma:", 0) == 0) return GammaDegree{ws.gamma(spec.substr(6))};
  throw ParseError("unknown condition '" + spec + "' (slope, gieseker, pzd:<d>, gamma:<id>)");
}

struct Range {
  Rational lo, hi;
  int steps;
  Rational at(int i) const { return steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1); }
};

Range parse_range(const std::string& text) {
  const auto a = text.find(':');
  const auto b = text.find(':', a == std::string::npos ? a : a + 1);
  if (a == std::string::npos || b == std::string::npos) throw ParseError("range '" + text + "' must be lo:hi:steps");
  Range r{parse_rational(text.substr(0, a)), parse_rational(text.substr(a + 1, b - a - 1)), 0};
  const Rational steps = parse_rational(text.substr(b + 1));
  if (steps.get_den() != 1 || steps < 1 || steps > 10000) throw ParseError("range steps '" + text.substr(b + 1) + "' invalid");
  r.steps = static_cast<int>(steps.get_num().get_si());
  return r;
}

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

}  // namespace

std::vector<GaussianRational> parse_rho_list(const std::string& text) {
  static const std::regex pair(R"(\s*\[\s*([^,\[\]\s]+)\s*,\s*([^,\[\]\s]+)\s*\]\s*(,|$))");
  std::vector<GaussianRational> out;
  auto it = text.cbegin();
  std::smatch m;
  while (it != text.cend()) {
    if (!std::regex_search(it, text.cend(), m, pair, std::regex_constants::match_continuous))
      throw ParseError("malformed stability vector at position " + std::to_string(it - text.cbegin()) + ": '" +
                       std::string(it, text.cend()) + "'");
    out.emplace_back(parse_rational(m[1].str()), parse_rational(m[2].str()));
    it = m[0].second;
  }
  if (out.size() < 2) throw ParseError("a stability vector needs at least two entries");
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Asymptotic Z-stability, stability vectors and HN/JH filtrations in exact arithmetic", "zstab"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--input", g.inputs, "Workspace JSON file (repeatable)");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--float", g.approx, "Add decimal approximations");

  std::string ring_id, charge_id, class_id, e_id, f_id, lattice_id, preset, rho_text, method = "both",
              condition = "slope", re_range, im_range, repro_name;
  int dim = 3, bound = 2, max_dim = 2, index = 0, projective = 0;
  bool all_chains = false;
  std::vector<std::string> class_ids, pairs;

  auto* ring_validate = app.add_subcommand("ring-validate", "Check unit, commutativity and associativity");
  ring_validate->add_option("--ring", ring_id, "Ring id (default: all)");
  ring_validate->add_option("--projective", projective, "Validate the built-in P^n");

  auto* vector_check = app.add_subcommand("vector-check", "Classify a stability vector");
  vector_check->add_option("--preset", preset)->check(CLI::IsMember({"leung", "dhym", "gieseker"}));
  vector_check->add_option("--dim", dim);
  vector_check->add_option("--rho", rho_text, "Entries as \"[re,im],[re,im],...\"");
  vector_check->add_option("--charge", charge_id);

  auto* charge_eval = app.add_subcommand("charge-eval", "Degrees, slope vector and central charge of a class");
  charge_eval->add_option("--charge", charge_id)->required();
  charge_eval->add_option("--class", class_id)->required();

  auto* destab = app.add_subcommand("destab", "Does F destabilise E asymptotically");
  destab->add_option("--charge", charge_id)->required();
  destab->add_option("--E", e_id)->required();
  destab->add_option("--F", f_id)->required();
  destab->add_option("--method", method)->check(CLI::IsMember({"sign", "lex", "both"}));

  auto* slopes = app.add_subcommand("slopes", "Slope vectors of workspace classes");
  slopes->add_option("--charge", charge_id)->required();
  slopes->add_option("--class", class_ids, "Class ids (default: all on the ring)");

  auto* hn = app.add_subcommand("hn", "Harder-Narasimhan filtration of a lattice");
  auto* jh = app.add_subcommand("jh", "Jordan-Hoelder filtration of a lattice");
  for (auto* sub : {hn, jh}) {
    sub->add_option("--lattice", lattice_id)->required();
    sub->add_option("--condition", condition, "slope | gieseker | pzd:<d> | gamma:<id>");
    sub->add_option("--charge", charge_id);
  }
  jh->add_flag("--all", all_chains, "Enumerate every JH chain");

  auto* gieseker = app.add_subcommand("gieseker-compare", "Compare reduced Hilbert polynomials");
  gieseker->add_option("--charge", charge_id)->required();
  gieseker->add_option("--E", e_id)->required();
  gieseker->add_option("--F", f_id)->required();

  auto* repro = app.add_subcommand("repro", "Run a built-in reproduction");
  repro->add_option("name", repro_name)
      ->required()
      ->check(CLI::IsMember({"dhym-counterexample", "gieseker-p2", "leung-vector", "bayer-lemma-grid"}));
  repro->add_option("--dim", dim);
  repro->add_option("--bound", bound);
  repro->add_option("--max-dim", max_dim);

  auto* sweep = app.add_subcommand("sweep", "Vary one stability-vector entry over a rational grid");
  sweep->add_option("--charge", charge_id)->required();
  sweep->add_option("--index", index)->required();
  sweep->add_option("--re", re_range, "lo:hi:steps")->required();
  sweep->add_option("--im", im_range, "lo:hi:steps")->required();
  sweep->add_option("--pair", pairs, "E:F (repeatable)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParse;
  }

  const OutputOptions opt = g.output();
  try {
    if (ring_validate->parsed()) {
      Json report;
      report["rings"] = Json::array();
      std::vector<std::pair<std::string, RingPtr>> rings;
      if (projective > 0) rings.emplace_back("P" + std::to_string(projective), projective_space_ring(projective));
      if (!g.inputs.empty()) {
        const Workspace ws = load(g, false);
        for (const auto& [id, r] : ws.rings())
          if (ring_id.empty() || id == ring_id) rings.emplace_back(id, r);
        if (!ring_id.empty() && rings.empty()) throw ParseError("unknown ring '" + ring_id + "'");
      }
      if (rings.empty()) throw ParseError("ring-validate needs --input or --projective");
      bool all_valid = true;
      for (const auto& [id, r] : rings) {
        Json entry{{"id", id}, {"dim", r->dim()}, {"basis", r->basis_sizes()}};
        Json viol = Json::array();
        for (const auto& v : validate_ring(*r)) viol.push_back(v.describe());
        entry["valid"] = viol.empty();
        all_valid = all_valid && viol.empty();
        entry["violations"] = std::move(viol);
        report["rings"].push_back(std::move(entry));
      }
      emit(out, report, opt);
      return all_valid ? kOk : kPrecondition;
    }

    if (vector_check->parsed()) {
      std::vector<GaussianRational> rho;
      const int given = !preset.empty() + !rho_text.empty() + !charge_id.empty();
      if (given != 1) throw ParseError("vector-check needs exactly one of --preset, --rho, --charge");
      if (!preset.empty()) {
        const StabilityVector v = preset == "leung" ? leung_vector(dim) : preset == "dhym" ? dhym_vector(dim)
                                                                                           : gieseker_vector(dim);
        rho.assign(v.entries().begin(), v.entries().end());
      } else if (!rho_text.empty()) {
        rho = parse_rho_list(rho_text);
      } else {
        const auto e = load(g).charge(charge_id).rho().entries();
        rho.assign(e.begin(), e.end());
      }
      emit(out, classify(rho), opt);
      return kOk;
    }

    if (charge_eval->parsed()) {
      const Workspace ws = load(g);
      const ChargeData& cd = ws.charge(charge_id);
      const SheafClass& e = ws.sheaf(class_id);
      const DegreeVector dv = degrees(cd, e);
      Json r{{"charge", charge_id}, {"class", class_id}, {"codim", e.codim()}};
      r["degrees"] = Json::array();
      for (const auto& x : dv.values) r["degrees"].push_back(io::to_json(x));
      r["rank"] = io::to_json(dv.rank());
      r["slope_vector"] = Json::array();
      for (const auto& x : slope_vector(cd, e)) r["slope_vector"].push_back(io::to_json(x));
      r["central_charge"] = io::to_json(central_charge(cd, e));
      r["hilbert_polynomial"] = io::to_json(hilbert_polynomial(cd, e));
      r["hilbert_polynomial_note"] = "valid when the twist is Td(X)";
      emit(out, r, opt);
      return kOk;
    }

    if (destab->parsed()) {
      const Workspace ws = load(g);
      const ChargeData& cd = ws.charge(charge_id);
      const SheafClass& e = ws.sheaf(e_id);
      const SheafClass& f = ws.sheaf(f_id);
      Json r{{"charge", charge_id}, {"E", e_id}, {"F", f_id}, {"method", method}};
      std::optional<Destab> sign_v, lex_v;
      if (method != "lex") {
        const SignVerdict sv = destabilizes_sign(cd, e, f);
        sign_v = sv.verdict;
        r["sign"] = io::verdict_to_json(sv);
      }
      if (method != "sign") {
        lex_v = destabilizes_lex(cd, e, f);
        r["lex"] = to_string(*lex_v);
      }
      if (method == "both") r["agreement"] = *sign_v == *lex_v;
      emit(out, r, opt);
      return kOk;
    }

    if (slopes->parsed()) {
      const Workspace ws = load(g);
      const ChargeData& cd = ws.charge(charge_id);
      if (class_ids.empty())
        for (const auto& [id, c] : ws.classes())
          if (c.ring().get() == cd.ring().get()) class_ids.push_back(id);
      Json r{{"charge", charge_id}, {"slopes", Json::array()}};
      for (const auto& id : class_ids) {
        const SheafClass& c = ws.sheaf(id);
        Json entry{{"class", id}, {"codim", c.codim()}, {"slope_vector", Json::array()}};
        for (const auto& x : slope_vector(cd, c)) entry["slope_vector"].push_back(io::to_json(x));
        r["slopes"].push_back(std::move(entry));
      }
      emit(out, r, opt);
      return kOk;
    }

    if (hn->parsed() || jh->parsed()) {
      const Workspace ws = load(g);
      const SubobjectLattice& l = ws.lattice(lattice_id);
      const MuCondition cond = parse_condition(condition, ws, charge_id);
      Json r{{"lattice", lattice_id}, {"condition", condition_name(cond)}};
      r["semistable"] = is_semistable(cond, l);
      r["stable"] = is_stable(cond, l);
      if (hn->parsed()) {
        r["filtration"] = io::filtration_to_json(l, hn_filtration(cond, l));
      } else {
        const Filtration f = jh_filtration(cond, l);
        r["polystable"] = is_polystable(cond, l);
        r["filtration"] = io::filtration_to_json(l, f);
        r["gr"] = Json::array();
        for (const auto& c : graded_object(f)) r["gr"].push_back(io::class_to_json(c));
        if (all_chains) {
          r["chains"] = Json::array();
          bool same = true;
          const auto gr = graded_object(f);
          for (const auto& c : all_jh_chains(cond, l)) {
            r["chains"].push_back(chain_ids(l, c));
            same = same && graded_object(c) == gr;
          }
          r["gr_identical"] = same;
        }
      }
      emit(out, r, opt);
      return kOk;
    }

    if (gieseker->parsed()) {
      const Workspace ws = load(g);
      const ChargeData& cd = ws.charge(charge_id);
      const MuCondition cond = GiesekerReduced{cd};
      const SheafClass& e = ws.sheaf(e_id);
      const SheafClass& f = ws.sheaf(f_id);
      const MuValue pe = mu_value(cond, e), pf = mu_value(cond, f);
      const auto c = pf <=> pe;
      Json r{{"charge", charge_id}, {"E", e_id}, {"F", f_id}};
      r["hilbert_E"] = io::to_json(hilbert_polynomial(cd, e));
      r["hilbert_F"] = io::to_json(hilbert_polynomial(cd, f));
      r["reduced_E"] = io::to_json(pe.poly);
      r["reduced_F"] = io::to_json(pf.poly);
      r["comparison"] = c < 0 ? "F<E" : c == 0 ? "F=E" : "F>E";
      r["verdict"] = to_string(c > 0 ? Destab::Strict : c == 0 ? Destab::Weak : Destab::No);
      emit(out, r, opt);
      return kOk;
    }

    if (repro->parsed()) {
      ReproResult res;
      if (repro_name == "dhym-counterexample")
        res = repro_dhym_counterexample(dim);
      else if (repro_name == "gieseker-p2")
        res = repro_gieseker_p2();
      else if (repro_name == "leung-vector")
        res = repro_leung_vector(dim);
      else
        res = repro_bayer_lemma_grid(bound, max_dim);
      emit(out, res.report, opt);
      return res.pass ? kOk : kReproFail;
    }

    if (sweep->parsed()) {
      const Workspace ws = load(g);
      const ChargeData& cd = ws.charge(charge_id);
      const int n = cd.dim();
      if (index < 0 || index > n) throw PreconditionError("--index out of range");
      const Range re = parse_range(re_range), im = parse_range(im_range);
      std::vector<std::pair<std::string, std::string>> pair_ids;
      for (const auto& p : pairs) {
        const auto colon = p.find(':');
        if (colon == std::string::npos) throw ParseError("pair '" + p + "' must be E:F");
        pair_ids.emplace_back(p.substr(0, colon), p.substr(colon + 1));
        ws.sheaf(pair_ids.back().first);
        ws.sheaf(pair_ids.back().second);
      }
      Json rows = Json::array();
      for (int a = 0; a < re.steps; ++a) {
        for (int b = 0; b < im.steps; ++b) {
          std::vector<GaussianRational> rho(cd.rho().entries().begin(), cd.rho().entries().end());
          rho[static_cast<std::size_t>(index)] = GaussianRational(re.at(a), im.at(b));
          Json row{{"re", io::to_json(re.at(a))}, {"im", io::to_json(im.at(b))}};
          const bool sv = is_stability_vector(rho);
          row["stability_vector"] = sv;
          row["bayer"] = is_bayer(rho);
          row["adapted"] = Json::array();
          for (int d = 0; d <= n; ++d) row["adapted"].push_back(is_adapted(rho, d));
          row["verdicts"] = Json::array();
          for (const auto& [eid, fid] : pair_ids) {
            Json v{{"pair", eid + ":" + fid}};
            if (sv) {
              const SignVerdict s = destabilizes_sign(cd.with_rho(StabilityVector(rho)), ws.sheaf(eid), ws.sheaf(fid));
              v["verdict"] = to_string(s.verdict);
              v["order"] = s.order ? Json(*s.order) : Json(nullptr);
            } else {
              v["verdict"] = nullptr;
              v["order"] = nullptr;
            }
            row["verdicts"].push_back(std::move(v));
          }
          rows.push_back(std::move(row));
        }
      }
      if (opt.json) {
        emit(out, Json{{"charge", charge_id}, {"index", index}, {"rows", std::move(rows)}}, opt);
        return kOk;
      }
      out << "re\tim\tstability_vector\tbayer";
      for (int d = 0; d <= n; ++d) out << "\tadapted_" << d;
      for (const auto& [eid, fid] : pair_ids) out << '\t' << eid << ':' << fid;
      out << '\n';
      for (const auto& row : rows) {
        out << cell(row["re"]) << '\t' << cell(row["im"]) << '\t' << cell(row["stability_vector"]) << '\t'
            << cell(row["bayer"]);
        for (const auto& x : row["adapted"]) out << '\t' << cell(x);
        for (const auto& v : row["verdicts"]) {
          out << '\t' << cell(v["verdict"]);
          if (!v["order"].is_null()) out << '@' << v["order"].get<int>();
        }
        out << '\n';
      }
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const NotUnique& e) {
    err << "not unique: " << e.what() << '\n';
    return kNotUnique;
  } catch (const NoStablePiece& e) {
    err << "no stable piece: " << e.what() << '\n';
    return kNoStablePiece;
  } catch (const NonEffective& e) {
    err << "non-effective class: " << e.what() << '\n';
    return kNonEffective;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  }
  return kOk;
}

}  // namespace zstab::cli
