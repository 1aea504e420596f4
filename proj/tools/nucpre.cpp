#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <nucpre/harness.hpp>

using json = nlohmann::json;
using namespace nucpre;

namespace {

// exit codes
constexpr int kOk = 0;
constexpr int kFound = 1;
constexpr int kMalformed = 2;

struct Options {
  std::string file;
  std::string variant = "umon";
  bool commutative = false;
  int budget = 4;
  int depth = 6;
  int n_max = 3;
  bool json = false;
  std::uint64_t seed = 1;
};

PreimageVariant parse_variant(const Options& o) {
  static const std::map<std::string, Shape> shapes{
      {"mon", Shape::monoid}, {"umon", Shape::unital}, {"sgrp", Shape::semigroup}};
  auto it = shapes.find(o.variant);
  if (it == shapes.end()) throw ParseError("unknown variant '" + o.variant + "'");
  return {it->second, o.commutative};
}

void emit(const Options& o, const json& record, const std::string& text) {
  if (o.json)
    std::cout << record.dump() << "\n";
  else
    std::cout << text << "\n";
}

const Nucleus& pick_nucleus(const AlgebraFile& f, const std::string& name) {
  if (f.nuclei.empty()) throw ParseError("the algebra file has no nucleus block");
  if (name.empty()) return f.nuclei.front();
  for (const Nucleus& g : f.nuclei)
    if (g.name == name) return g;
  throw ParseError("no nucleus named '" + name + "'");
}

std::string map_text(const std::vector<Elem>& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? " " : "") + std::to_string(m[i]);
  return s;
}

int cmd_validate(const Options& o) {
  const auto f = load_algebra(o.file);
  const auto rep = validate(f.algebra, kind_of(f.algebra));
  int code = kOk;
  for (const auto& v : rep.violations) {
    emit(o, {{"object", f.algebra.name}, {"axiom", v.axiom}, {"witness", v.witness}},
         f.algebra.name + " " + v.axiom + " " + to_literal(v.witness));
    code = kFound;
  }
  for (const Nucleus& g : f.nuclei)
    for (const auto& v : validate_nucleus(f.algebra, g).violations) {
      emit(o, {{"object", g.name}, {"axiom", v.axiom}, {"witness", v.witness}},
           g.name + " " + v.axiom + " " + to_literal(v.witness));
      code = kFound;
    }
  if (code == kOk) emit(o, {{"object", f.algebra.name}, {"status", "ok"}}, "OK");
  return code;
}

int cmd_props(const Options& o) {
  const auto f = load_algebra(o.file);
  const FinitePomonoid& A = f.algebra;
  const bool unit = A.unit.has_value();
  std::vector<std::pair<std::string, bool>> props{
      {"commutative", A.is_commutative()},
      {"integral", unit && is_integral(A)},
      {"integrally-closed", is_integrally_closed(A)},
      {"cancellative", is_cancellative(A)},
      {"ideally-residuated", is_ideally_residuated(A)},
      {"residuated", is_residuated(A)},
      {"down-directed", is_down_directed(A)},
  };
  json rec{{"object", A.name}};
  std::string text;
  for (const auto& [k, v] : props) {
    rec[k] = v;
    text += k + ": " + (v ? "true" : "false") + "\n";
  }
  text.pop_back();
  emit(o, rec, text);
  return kOk;
}

int cmd_nuclei(const Options& o, bool co) {
  const auto f = load_algebra(o.file);
  if (co) {
    for (const Conucleus& s : enumerate_conuclei(f.algebra))
      emit(o, {{"name", s.name}, {"map", s.map}}, s.name + ": " + map_text(s.map));
  } else {
    for (const Nucleus& g : enumerate_nuclei(f.algebra))
      emit(o, {{"name", g.name}, {"map", g.map}}, g.name + ": " + map_text(g.map));
  }
  return kOk;
}

int cmd_image(const Options& o, const std::string& nucleus) {
  const auto f = load_algebra(o.file);
  const Nucleus& g = pick_nucleus(f, nucleus);
  if (!validate_nucleus(f.algebra, g).ok()) throw ParseError("nucleus " + g.name + " is not a nucleus");
  const FinitePomonoid B = nuclear_image(f.algebra, g);
  emit(o, {{"carrier", fixed_points(g.map)}, {"algebra", serialize(B)}}, serialize(B));
  return kOk;
}

int cmd_word_le(const Options& o, const std::string& us, const std::string& vs) {
  const auto f = load_algebra(o.file);
  const FreePreimage F(f.algebra, parse_variant(o));
  const Word u = parse_word(us), v = parse_word(vs);
  check_letters(f.algebra, u);
  check_letters(f.algebra, v);
  F.check(u);
  F.check(v);
  const bool r = F.le(u, v);
  emit(o, {{"u", to_literal(u)}, {"v", to_literal(v)}, {"le", r}}, r ? "true" : "false");
  return kOk;
}

int cmd_canon(const Options& o, const std::string& ws) {
  const auto f = load_algebra(o.file);
  const FreePreimage F(f.algebra, parse_variant(o));
  const Word w = parse_word(ws);
  check_letters(f.algebra, w);
  F.check(w);
  const Word c = F.canonical(w);
  emit(o, {{"word", to_literal(w)}, {"canonical", to_literal(c)}}, to_literal(c));
  return kOk;
}

int cmd_free_cancel(const Options& o) {
  const auto f = load_algebra(o.file);
  const FreePreimage F(f.algebra, parse_variant(o));
  if (auto w = check_limited_cancellativity(F, o.budget)) {
    emit(o, {{"check", "limited"}, {"u", to_literal(w->u)}, {"w", to_literal(w->w)}},
         "limited " + to_literal(w->u) + " " + to_literal(w->w));
    return kFound;
  }
  if (F.variant().shape != Shape::monoid)
    if (auto w = check_left_cancellativity(F, o.budget)) {
      const Word a{w->a};
      const bool left = w->side == Side::left;
      const std::string lhs = to_literal(left ? F.compose(a, w->u) : F.compose(w->u, a));
      const std::string rhs = to_literal(left ? F.compose(a, w->v) : F.compose(w->v, a));
      emit(o, {{"check", "cancellative"}, {"a", w->a}, {"u", to_literal(w->u)}, {"v", to_literal(w->v)},
               {"side", left ? "left" : "right"}},
           lhs + " <= " + rhs + " but " + to_literal(w->u) + " </= " + to_literal(w->v));
      return kFound;
    }
  emit(o, {{"status", "ok"}}, "OK");
  return kOk;
}

int cmd_square(const Options& o, int n, bool consecutive) {
  const auto f = load_algebra(o.file);
  const bool comm = !consecutive && f.algebra.is_commutative();
  if (auto w = check_square_condition(f.algebra, n, std::nullopt, comm)) {
    json rec{{"table", to_string(w->table)}, {"assignment", w->assignment}};
    std::string text = to_string(w->table) + " at " + to_literal(w->assignment);
    if (w->y) {
      rec["y"] = *w->y;
      text += " y=" + std::to_string(*w->y);
    }
    emit(o, rec, text);
    return kFound;
  }
  emit(o, {{"status", "ok"}}, "OK");
  return kOk;
}

int cmd_idcancel(const Options& o) {
  const auto f = load_algebra(o.file);
  const FinitePomonoid& A = f.algebra;
  const int bound = static_cast<int>(all_antichains(ElementCarrier(A)).size());
  const auto rep = check_id_cancel_criterion(A, bound);
  json rec{{"id_cancellative", rep.id_cancellative}, {"sentences_hold", rep.sentences_hold},
           {"n_max", bound}};
  std::string text = std::string("Id cancellative: ") + (rep.id_cancellative ? "true" : "false") +
                     "\ncycle sentences (n <= " + std::to_string(bound) +
                     "): " + (rep.sentences_hold ? "hold" : "fail");
  if (rep.violation) {
    const auto& v = *rep.violation;
    const char* vs = v.side == Side::left ? "left" : "right";
    rec["violation"] = {{"side", vs}, {"y", v.y}, {"x", v.xs}, {"z", v.zs}};
    text += std::string("\n") + vs + " cycle y=" + std::to_string(v.y) + " x=" + to_literal(v.xs) +
            " z=" + to_literal(v.zs);
  }
  if (auto w = rep.constructed ? rep.constructed : rep.direct) {
    const bool left = w->side == Side::left;
    const std::string a = to_literal(w->a), b = to_literal(w->b), c = to_literal(w->c);
    rec["witness"] = {{"side", left ? "left" : "right"}, {"a", a}, {"b", b}, {"c", c}};
    text += "\nwitness " + (left ? a + "." + b + " <= " + a + "." + c : b + "." + a + " <= " + c + "." + a) +
            " but " + b + " </= " + c;
  }
  emit(o, rec, text);
  return rep.id_cancellative ? kOk : kFound;
}

IdAlgebra<WordCarrier> word_id(const Options& o, const FinitePomonoid& A) {
  PreimageVariant v = parse_variant(o);
  if (v.shape != Shape::unital) throw ParseError("Id over words uses the umon variant");
  return IdAlgebra<WordCarrier>(WordCarrier(FreePreimage(A, v), o.budget));
}

Antichain<Word> read_antichain(const FinitePomonoid& A, const IdAlgebra<WordCarrier>& id,
                               const std::string& s) {
  auto x = parse_word_antichain(s);
  for (const Word& w : x.gens) check_letters(A, w);
  return id.normalize(x.gens);
}

int cmd_meet(const Options& o, const std::vector<std::string>& args) {
  const auto f = load_algebra(o.file);
  if (args.empty()) {
    const FreePreimage F(f.algebra, parse_variant(o));
    if (auto w = check_meet_distribution(F, o.budget)) {
      emit(o, {{"side", w->side == Side::left ? "left" : "right"}, {"x", to_literal(w->x)},
               {"y", to_literal(w->y)}, {"z", to_literal(w->z)}},
           std::string(w->side == Side::left ? "left" : "right") + " x=" + to_literal(w->x) +
               " y=" + to_literal(w->y) + " z=" + to_literal(w->z));
      return kFound;
    }
    emit(o, {{"status", "ok"}}, "OK");
    return kOk;
  }
  if (args.size() != 2) throw ParseError("meet takes two antichains or none");
  const auto id = word_id(o, f.algebra);
  const auto m = id.meet(read_antichain(f.algebra, id, args[0]), read_antichain(f.algebra, id, args[1]));
  emit(o, {{"meet", to_literal(m)}}, to_literal(m));
  return kOk;
}

int cmd_residual(const Options& o, const std::string& xs, const std::string& ys, const std::string& side) {
  const auto f = load_algebra(o.file);
  if (side != "left" && side != "right") throw ParseError("side is left or right");
  const auto id = word_id(o, f.algebra);
  const auto r = id.residual(read_antichain(f.algebra, id, xs), read_antichain(f.algebra, id, ys),
                             side == "left" ? Side::left : Side::right);
  emit(o, {{"residual", to_literal(r)}}, to_literal(r));
  return kOk;
}

int cmd_sigma(const Options& o, const std::string& as) {
  const auto f = load_algebra(o.file);
  const SignedWord a = parse_signed_word(as);
  check_letters(f.algebra, a);
  const GroupPreimage G(f.algebra);
  const auto s = G.sigma(a);
  emit(o, {{"alpha", to_literal(a)}, {"sigma", words_literal(s)}}, words_literal(s));
  return kOk;
}

int cmd_prove(const Options& o, const std::string& as, const std::string& bs) {
  const auto f = load_algebra(o.file);
  const SignedWord a = parse_signed_word(as), b = parse_signed_word(bs);
  check_letters(f.algebra, a);
  check_letters(f.algebra, b);
  const GroupPreimage G(f.algebra);
  const auto r = G.prove_bounded(a, b, o.depth);
  if (!r.proved()) {
    emit(o, {{"status", "unknown"}, {"depth", o.depth}}, "unknown at depth " + std::to_string(o.depth));
    return kFound;
  }
  json steps = json::array();
  for (const ProofStep& s : r.proof->steps)
    steps.push_back({{"rule", to_string(s.rule)}, {"at", s.at}, {"side", side_condition_text(s)}});
  emit(o, {{"status", "proved"}, {"normal", is_normal(*r.proof)}, {"steps", steps}},
       to_text(*r.proof) + (is_normal(*r.proof) ? "normal" : "not normal"));
  return kOk;
}

int cmd_catalog(const Options& o, const std::string& kind, const std::string& cache, bool list) {
  static const std::map<std::string, Structure> kinds{{"pomonoid", Structure::pomonoid},
                                                      {"slmonoid", Structure::sl_monoid},
                                                      {"residuated", Structure::residuated},
                                                      {"posemigroup", Structure::posemigroup}};
  auto it = kinds.find(kind);
  if (it == kinds.end()) throw ParseError("unknown kind '" + kind + "'");
  const auto cat = load_catalog(o.n_max, it->second, o.commutative, cache);
  if (list) {
    for (const auto& A : cat) emit(o, {{"name", A.name}, {"algebra", serialize(A)}}, serialize(A));
    return kOk;
  }
  std::vector<int> per(o.n_max, 0);
  for (const auto& A : cat) ++per[A.n - 1];
  json rec{{"kind", kind}, {"commutative", o.commutative}, {"total", cat.size()}, {"by_size", per}};
  std::string text;
  for (int n = 1; n <= o.n_max; ++n) text += "n=" + std::to_string(n) + ": " + std::to_string(per[n - 1]) + "\n";
  text += "total: " + std::to_string(cat.size());
  emit(o, rec, text);
  return kOk;
}

// millis is left out unless asked for so that repeated runs print the same bytes
int cmd_verify(const Options& o, int n_square, const std::string& cache, bool timing) {
  SuiteConfig cfg;
  cfg.n_max = o.n_max;
  cfg.L = o.budget;
  cfg.depth = o.depth;
  cfg.n_square = n_square;
  cfg.seed = o.seed;
  cfg.cache_dir = cache;
  bool failed = false;
  run_suite(cfg, [&](const VerificationReport& r) {
    failed = failed || r.status == Status::fail;
    json rec{{"id", r.id}, {"status", to_string(r.status)}};
    rec["witness"] = r.witness.empty() ? json(nullptr) : json(r.witness);
    rec["millis"] = timing ? json(r.millis) : json(nullptr);
    rec["note"] = r.note;
    std::string text = r.id;
    text.resize(std::max<std::size_t>(text.size() + 1, 42), ' ');
    text += to_string(r.status);
    if (timing) text += "  " + std::to_string(r.millis) + " ms";
    if (!r.note.empty()) text += "  (" + r.note + ")";
    if (!r.witness.empty()) text += "\n    " + r.witness;
    emit(o, rec, text);
    std::cout.flush();
  });
  return failed ? kFound : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nucpre: finite nuclear preimages, word preorders and their checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "one JSON record per line");

  auto with_file = [&](CLI::App* c) { c->add_option("algebra", o.file, "algebra file")->required(); };
  auto with_words = [&](CLI::App* c) {
    c->add_option("--variant", o.variant, "mon, umon or sgrp")->check(CLI::IsMember({"mon", "umon", "sgrp"}));
    c->add_flag("--commutative", o.commutative, "commutative word variant");
    c->add_option("--budget", o.budget, "word length budget L");
  };

  auto* validate_cmd = app.add_subcommand("validate", "check the axioms of an algebra file and its nuclei");
  with_file(validate_cmd);
  auto* props_cmd = app.add_subcommand("props", "integral, integrally closed, cancellative, ...");
  with_file(props_cmd);
  auto* nuclei_cmd = app.add_subcommand("nuclei", "all nuclei");
  with_file(nuclei_cmd);
  auto* conuclei_cmd = app.add_subcommand("conuclei", "all conuclei");
  with_file(conuclei_cmd);

  std::string nucleus;
  auto* image_cmd = app.add_subcommand("image", "nuclear image of a nucleus given in the file");
  with_file(image_cmd);
  image_cmd->add_option("--nucleus", nucleus, "nucleus name (default: the first)");

  std::string u, v;
  auto* le_cmd = app.add_subcommand("word-le", "decide u <= v in the word preorder");
  with_file(le_cmd);
  le_cmd->add_option("u", u)->required();
  le_cmd->add_option("v", v)->required();
  with_words(le_cmd);

  auto* canon_cmd = app.add_subcommand("canon", "shortest equivalent word");
  with_file(canon_cmd);
  canon_cmd->add_option("word", u)->required();
  with_words(canon_cmd);

  auto* cancel_cmd = app.add_subcommand("free-cancel", "limited and full cancellativity of the word preorder");
  with_file(cancel_cmd);
  with_words(cancel_cmd);

  int square_n = 3;
  bool consecutive = false;
  auto* square_cmd = app.add_subcommand("square", "square condition up to n x n tables");
  with_file(square_cmd);
  square_cmd->add_option("--n", square_n, "largest table size");
  square_cmd->add_flag("--consecutive", consecutive, "rows cut x1..xk into consecutive blocks");

  auto* idcancel_cmd = app.add_subcommand("idcancel", "cancellativity of Id S and the cycle sentences");
  with_file(idcancel_cmd);

  std::vector<std::string> meet_args;
  auto* meet_cmd = app.add_subcommand("meet", "meet of two antichains, or the meet distribution check");
  with_file(meet_cmd);
  meet_cmd->add_option("antichains", meet_args, "two antichain literals");
  with_words(meet_cmd);

  std::string side = "left";
  auto* residual_cmd = app.add_subcommand("residual", "residual of antichains over words");
  with_file(residual_cmd);
  residual_cmd->add_option("x", u)->required();
  residual_cmd->add_option("y", v)->required();
  residual_cmd->add_option("--side", side, "left: x\\y, right: y/x");
  with_words(residual_cmd);

  auto* sigma_cmd = app.add_subcommand("sigma", "maximal positive words below a signed word");
  with_file(sigma_cmd);
  sigma_cmd->add_option("alpha", u)->required();

  auto* prove_cmd = app.add_subcommand("prove", "search a proof of alpha <= beta");
  with_file(prove_cmd);
  prove_cmd->add_option("alpha", u)->required();
  prove_cmd->add_option("beta", v)->required();
  prove_cmd->add_option("--depth", o.depth, "contraction and expansion steps");

  std::string kind = "pomonoid", cache;
  bool list = false;
  auto* catalog_cmd = app.add_subcommand("catalog", "enumerate small algebras up to isomorphism");
  catalog_cmd->add_option("--n-max", o.n_max)->check(CLI::Range(1, 4));
  catalog_cmd->add_option("--kind", kind, "pomonoid, slmonoid, residuated, posemigroup");
  catalog_cmd->add_flag("--commutative", o.commutative);
  catalog_cmd->add_option("--cache", cache, "cache directory");
  catalog_cmd->add_flag("--list", list, "print every algebra");

  int n_square = 3;
  bool timing = false;
  auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");
  verify_cmd->add_option("--n-max", o.n_max)->check(CLI::Range(1, 4));
  verify_cmd->add_option("--budget", o.budget);
  verify_cmd->add_option("--depth", o.depth);
  verify_cmd->add_option("--n-square", n_square);
  verify_cmd->add_option("--seed", o.seed);
  verify_cmd->add_option("--cache", cache, "cache directory");
  verify_cmd->add_flag("--timing", timing, "report milliseconds per row");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kMalformed;
  }

  try {
    if (*validate_cmd) return cmd_validate(o);
    if (*props_cmd) return cmd_props(o);
    if (*nuclei_cmd) return cmd_nuclei(o, false);
    if (*conuclei_cmd) return cmd_nuclei(o, true);
    if (*image_cmd) return cmd_image(o, nucleus);
    if (*le_cmd) return cmd_word_le(o, u, v);
    if (*canon_cmd) return cmd_canon(o, u);
    if (*cancel_cmd) return cmd_free_cancel(o);
    if (*square_cmd) return cmd_square(o, square_n, consecutive);
    if (*idcancel_cmd) return cmd_idcancel(o);
    if (*meet_cmd) return cmd_meet(o, meet_args);
    if (*residual_cmd) return cmd_residual(o, u, v, side);
    if (*sigma_cmd) return cmd_sigma(o, u);
    if (*prove_cmd) return cmd_prove(o, u, v);
    if (*catalog_cmd) return cmd_catalog(o, kind, cache, list);
    if (*verify_cmd) return cmd_verify(o, n_square, cache, timing);
  } catch (const StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  } catch (const std::exception& e) {
    // precondition failures: not ideally residuated, budget exceeded, ...
    std::cerr << "error: " << e.what() << "\n";
    return kFound;
  }
  return kOk;
}
