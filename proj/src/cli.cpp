#include "lorenz/cli.hpp"

#include <algorithm>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "lorenz/census.hpp"
#include "lorenz/errors.hpp"
#include "lorenz/garside.hpp"
#include "lorenz/invariants.hpp"
#include "lorenz/lorenz_vector.hpp"
#include "lorenz/report.hpp"
#include "lorenz/tlink.hpp"
#include "lorenz/torus_detect.hpp"

namespace lorenz::cli {

namespace {

using nlohmann::json;

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool json_output = false;
  bool quiet = false;

  void warn(const std::string& message) const {
    if (!quiet) err << "warning: " << message << '\n';
  }
  void emit(const json& j, const std::string& text) const {
    if (json_output) {
      out << j.dump(2) << '\n';
    } else {
      out << text << '\n';
    }
  }
};

LorenzVector read_vector(const Context& ctx, const std::string& text) {
  auto parsed = parse_vector(text);
  for (const auto& w : parsed.warnings) ctx.warn(w);
  return parsed.vector;
}

// Destabilizes with a warning; empty result means the unknot.
std::optional<LorenzVector> read_normalized(const Context& ctx, const std::string& text) {
  const LorenzVector v = read_vector(ctx, text);
  auto result = normalize(v);
  if (result.is_unknot()) {
    ctx.warn("<" + format_vector(v) + "> destabilizes to the unknot");
    return std::nullopt;
  }
  if (!(*result.vector == v)) {
    ctx.warn("<" + format_vector(v) + "> destabilized to <" + format_vector(*result.vector) + ">");
  }
  return result.vector;
}

json word_json(const BraidWord& w) {
  return {{"strands", w.strands()}, {"letters", std::vector<int>(w.letters().begin(), w.letters().end())},
          {"length", w.length()}};
}

json triple_json(const TmTriple& t) { return {{"t", t.t}, {"n", t.n}, {"m", t.m}}; }

std::string join(const std::vector<int>& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + ")";
}

void print_unknot(const Context& ctx) { ctx.emit(json{{"result", "Unknot"}}, "Unknot"); }

std::string invariants_text(const InvariantReport& r) {
  std::ostringstream s;
  s << "components: " << r.components << '\n'
    << "genus: " << r.genus << '\n'
    << "unknotting number: " << r.unknotting << '\n'
    << "trip number: " << r.trip << '\n'
    << "c - n: " << r.excess << '\n'
    << "minimal crossings: " << r.min_crossings << '\n'
    << "predicted 2*mindeg V = maxdeg Delta: " << r.predicted_degree << '\n'
    << "crossing bound 4g+2mu-2: " << r.crossing_bound << (r.crossing_bound_holds ? " (holds)" : " (VIOLATED)")
    << '\n'
    << "representation  crossings  strands";
  for (const auto& m : r.milestones) {
    s << '\n' << "  " << m.name << std::string(14 - m.name.size(), ' ') << m.crossings << "  " << m.strands;
  }
  return s.str();
}

std::string report_line(const Report& r) {
  std::ostringstream s;
  s << r.name << ' ' << r.input << ' ';
  if (r.error) {
    s << "error: " << *r.error;
    return s.str();
  }
  s << "mu=" << r.invariants.components << " g=" << r.invariants.genus << " t=" << r.invariants.trip
    << " c=(";
  for (std::size_t i = 0; i < r.invariants.milestones.size(); ++i) {
    s << (i ? "," : "") << r.invariants.milestones[i].crossings;
  }
  s << ") n=(";
  for (std::size_t i = 0; i < r.invariants.milestones.size(); ++i) {
    s << (i ? "," : "") << r.invariants.milestones[i].strands;
  }
  s << ") " << to_string(r.torus);
  return s.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx{out, err};
  CLI::App app{"Lorenz links, T-links and positive braid tools", "lorenz"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", ctx.json_output, "Machine-readable output");
  app.add_flag("--quiet", ctx.quiet, "Suppress warnings");

  std::string arg1, arg2;
  std::function<int()> action;

  auto* validate = app.add_subcommand("validate", "Parse a Lorenz vector and check normalization");
  validate->add_option("vector", arg1)->required();
  validate->callback([&] {
    action = [&] {
      const LorenzVector v = read_vector(ctx, arg1);
      const bool ok = v.is_normalized();
      ctx.emit(json{{"vector", format_vector(v)}, {"p", v.p()}, {"normalized", ok}},
               format_vector(v) + (ok ? " normalized" : " not normalized"));
      return kExitOk;
    };
  });

  auto* normalize_cmd = app.add_subcommand("normalize", "Destabilize to a normalized vector");
  normalize_cmd->add_option("vector", arg1)->required();
  normalize_cmd->callback([&] {
    action = [&] {
      const auto result = normalize(read_vector(ctx, arg1));
      if (result.is_unknot()) {
        print_unknot(ctx);
      } else {
        ctx.emit(json{{"result", format_vector(*result.vector)},
                      {"left_moves", result.left_moves},
                      {"right_moves", result.right_moves}},
                 format_vector(*result.vector));
      }
      return kExitOk;
    };
  });

  auto* dual = app.add_subcommand("dual", "Dual Lorenz vector or dual T-link parameters");
  dual->add_option("input", arg1, "Lorenz vector or (r,s)(r,s)...")->required();
  dual->callback([&] {
    action = [&] {
      if (arg1.find('(') != std::string::npos) {
        const TParams d = dual_tparams(parse_tparams(arg1).canonical());
        ctx.emit(json{{"result", format_tparams(d)}}, format_tparams(d));
        return kExitOk;
      }
      const LorenzVector v = read_vector(ctx, arg1);
      const std::string d = format_vector(dual_vector(v));
      ctx.emit(json{{"result", d}}, d);
      return kExitOk;
    };
  });

  auto* tbraid = app.add_subcommand("tbraid", "T-link parameters and T-braid word of a vector");
  tbraid->add_option("vector", arg1)->required();
  tbraid->callback([&] {
    action = [&] {
      const auto v = read_normalized(ctx, arg1);
      if (!v) {
        print_unknot(ctx);
        return kExitOk;
      }
      const TParams t = vector_to_tparams(*v);
      const BraidWord w = tbraid_word(t);
      ctx.emit(json{{"tparams", format_tparams(t)}, {"word", word_json(w)}},
               format_tparams(t) + '\n' + format_word(w));
      return kExitOk;
    };
  });

  auto* minimal = app.add_subcommand("minimal", "Minimal braid index word of a vector");
  minimal->add_option("vector", arg1)->required();
  minimal->callback([&] {
    action = [&] {
      const auto v = read_normalized(ctx, arg1);
      if (!v) {
        print_unknot(ctx);
        return kExitOk;
      }
      const TmTriple triple = tm_triple(*v);
      const BraidWord w = minimal_braid_word(triple);
      ctx.emit(json{{"triple", triple_json(triple)}, {"word", word_json(w)}},
               "t=" + std::to_string(triple.t) + " n=" + join(triple.n) + " m=" + join(triple.m) + '\n' +
                   format_word(w));
      return kExitOk;
    };
  });

  auto* trip = app.add_subcommand("trip", "Trip number (minimal braid index)");
  trip->add_option("vector", arg1)->required();
  trip->callback([&] {
    action = [&] {
      const auto v = read_normalized(ctx, arg1);
      const int t = v ? trip_number(*v) : 1;
      ctx.emit(json{{"trip_number", t}}, std::to_string(t));
      return kExitOk;
    };
  });

  auto* index = app.add_subcommand("braid-index", "Braid index of a T-link");
  index->add_option("tparams", arg1, "(r,s)(r,s)...")->required();
  index->callback([&] {
    action = [&] {
      const int b = braid_index(parse_tparams(arg1));
      ctx.emit(json{{"braid_index", b}}, std::to_string(b));
      return kExitOk;
    };
  });

  auto* invariants = app.add_subcommand("invariants", "Invariant report of a vector");
  invariants->add_option("vector", arg1)->required();
  invariants->callback([&] {
    action = [&] {
      const auto v = read_normalized(ctx, arg1);
      const InvariantReport r = v ? invariant_report(*v) : unknot_report();
      ctx.emit(to_json(r), r.unknot ? std::string("Unknot") : invariants_text(r));
      return kExitOk;
    };
  });

  std::vector<int> morton;
  auto* alexander = app.add_subcommand("alexander", "Alexander polynomial up to units");
  auto* morton_opt = alexander->add_option("--morton", morton, "m p q: T((2,2m),(p,q))")->expected(3);
  auto* burau_opt = alexander->add_option("--burau", arg1, "Lorenz vector of a knot");
  morton_opt->excludes(burau_opt);
  alexander->callback([&] {
    action = [&] {
      LaurentPoly delta;
      if (!morton.empty()) {
        delta = morton_alexander(morton[0], morton[1], morton[2]);
      } else if (!arg1.empty()) {
        const auto v = read_normalized(ctx, arg1);
        delta = v ? burau_alexander(minimal_braid_word(*v), BurauLimits{16, 400}) : LaurentPoly::constant(1);
      } else {
        throw ParseError("alexander needs --morton m p q or --burau <vector>");
      }
      const LaurentPoly normal = normalize_units(delta);
      const auto coeffs = normal.coefficients();
      ctx.emit(json{{"polynomial", to_string(normal)},
                    {"coefficients", std::vector<std::int64_t>(coeffs.begin(), coeffs.end())}},
               to_string(normal));
      return kExitOk;
    };
  });

  auto* torus = app.add_subcommand("is-torus", "Decide whether the closure is a torus link");
  torus->add_option("vector", arg1)->required();
  torus->callback([&] {
    action = [&] {
      const TorusVerdict verdict = is_torus(read_vector(ctx, arg1));
      json j{{"verdict", to_string(verdict)}};
      if (verdict.kind == TorusVerdict::Kind::Torus) {
        j["t"] = verdict.t;
        j["q"] = verdict.q;
      }
      ctx.emit(j, to_string(verdict));
      return kExitOk;
    };
  });

  auto* nf = app.add_subcommand("normal-form", "Left-greedy normal form of a positive word");
  nf->add_option("word", arg1, "\"n=<strands> i j k ...\"")->required();
  nf->callback([&] {
    action = [&] {
      const NormalForm form = normal_form(parse_word(arg1));
      json factors = json::array();
      std::string text = "n=" + std::to_string(form.strands());
      for (const auto& f : form.factors()) {
        const BraidWord w = f.word();
        factors.push_back(std::vector<int>(w.letters().begin(), w.letters().end()));
        text += " |";
        for (int letter : w.letters()) text += ' ' + std::to_string(letter);
      }
      ctx.emit(json{{"strands", form.strands()}, {"factors", factors}, {"length", form.letter_count()}}, text);
      return kExitOk;
    };
  });

  auto* eq = app.add_subcommand("word-eq", "Decide equality of two positive words");
  eq->add_option("first", arg1)->required();
  eq->add_option("second", arg2)->required();
  eq->callback([&] {
    action = [&] {
      const bool same = words_equal(parse_word(arg1), parse_word(arg2));
      ctx.emit(json{{"equal", same}}, same ? "true" : "false");
      return kExitOk;
    };
  });

  unsigned threads = 0;
  auto* census = app.add_subcommand("census", "Census operations");
  census->require_subcommand(1);
  auto* census_report = census->add_subcommand("report", "Report every entry of a census file");
  census_report->add_option("file", arg1)->required();
  census_report->add_option("--threads", threads, "Worker threads (0 = all cores)");
  census_report->callback([&] {
    action = [&] {
      const auto entries = load_census(arg1);
      const auto reports = report_all(entries, threads);
      int code = kExitOk;
      json all = json::array();
      std::string text;
      for (const auto& r : reports) {
        if (r.error && r.known) code = kExitDomain;
        for (const auto& w : r.warnings) ctx.warn(w);
        all.push_back(to_json(r));
        if (!text.empty()) text += '\n';
        text += report_line(r);
      }
      ctx.emit(all, text);
      return code;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace lorenz::cli
