#include <CLI11.hpp>

#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "wqh/catalog.hpp"
#include "wqh/functor.hpp"
#include "wqh/hopf.hpp"
#include "wqh/io.hpp"
#include "wqh/twist.hpp"

using namespace wqh;

namespace {

struct Options {
  std::string command;
  std::string input;
  std::string builtin_name;
  int n = 2;
  int q = 0;
  std::string backend = "exact";
  double tol = -1.0;
  std::string dim = "minimal";
  long bound = 4;
  long minimal = 0;
  std::string seed = "canonical";
  std::string seeds = "canonical,7";
  std::string output;
  std::string export_path;
  std::string report = "human";
};

Tolerance tolerance(const Options& o) {
  if (o.backend == "exact") {
    if (o.tol > 0) throw InputError("--tol must be 0 with the exact backend");
    return {};
  }
  return {o.tol < 0 ? Tolerance::default_approx : o.tol};
}

CategoryData load_category(const Options& o) {
  if (o.input.empty() == o.builtin_name.empty()) throw InputError("give exactly one of --builtin NAME or a category file");
  CategoryData cat = o.builtin_name.empty() ? category_from_json(read_json_file(o.input))
                                            : builtin(o.builtin_name, o.n, o.q).data;
  return o.backend == "approx" ? approximate(cat) : cat;
}

DimensionFunction choose_dimension(const Options& o, const FusionRing& ring) {
  if (o.minimal > 0) return minimize_dimension_function(ring, o.minimal);
  if (o.dim == "canonical") return canonical_weak_dimension(ring);
  if (o.dim == "max") return max_weak_dimension(ring);
  if (o.dim == "minimal") return minimize_dimension_function(ring, o.bound);
  return dimension_from_json(read_json_file(o.dim), ring);
}

FunctorStrategy parse_seed(const std::string& s) {
  if (s == "canonical") return FunctorStrategy::canonical();
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used == s.size()) return FunctorStrategy::with_seed(v);
  } catch (const std::exception&) {
  }
  throw InputError("seed must be an integer or 'canonical', got '" + s + "'");
}

std::string join_D(const FusionRing& ring, const std::vector<long>& D) {
  std::ostringstream os;
  for (int a = 0; a < ring.rank(); ++a) os << (a ? ", " : "") << "D(" << ring.label(a) << ")=" << D[a];
  return os.str();
}

int emit(const Options& o, const Report& rep, Json extra, const std::vector<std::string>& lines) {
  const int code = rep.ok() ? 0 : 1;
  if (o.report == "machine") {
    extra["command"] = o.command;
    extra["status"] = rep.ok() ? "pass" : "fail";
    extra["exit_code"] = code;
    extra["checks"] = report_to_json(rep);
    std::cout << extra.dump(1) << '\n';
  } else {
    for (const auto& l : lines) std::cout << l << '\n';
    std::cout << rep.human() << (rep.ok() ? "result: PASS" : "result: FAIL") << '\n';
  }
  return code;
}

// Runs one verifier, turning an obstruction into a failed identity.
void run_check(Report& rep, const std::string& id, const std::function<Report()>& f) {
  try {
    rep.merge(f());
  } catch (const MathError& e) {
    rep.fail(id, {}, e.what());
  }
}

int cmd_verify(const Options& o) {
  Tolerance tol = tolerance(o);
  CategoryData cat = load_category(o);
  Report rep = verify_fusion_ring(cat.ring);
  if (rep.ok()) {
    run_check(rep, "pentagon", [&] { return verify_pentagon(cat, tol); });
    run_check(rep, "hexagon", [&] { return verify_hexagons(cat, tol); });
    run_check(rep, "snake", [&] { return verify_snakes(cat, tol); });
    run_check(rep, "ribbon", [&] { return verify_ribbon(cat, tol); });
  } else {
    rep.note("duality", "fusion ring invalid; category-level checks skipped");
  }
  if (!o.output.empty()) write_json_file(o.output, report_to_json(rep));
  if (!o.export_path.empty()) {
    std::string provenance = o.builtin_name.empty() ? "file " + o.input : builtin(o.builtin_name, o.n, o.q).provenance;
    write_json_file(o.export_path, category_to_json(cat, provenance));
  }
  return emit(o, rep, {{"category", cat.name}}, {"category: " + cat.name});
}

int cmd_dims(const Options& o) {
  CategoryData cat = load_category(o);
  DimensionFunction D = choose_dimension(o, cat.ring);
  bool exact = false;
  Report rep = is_weak_dimension_function(cat.ring, D.values, &exact);
  std::string choice = o.minimal > 0 ? "minimal" : o.dim;
  Json info = {{"category", cat.name}, {"D", D.values}, {"objective", D.objective()}, {"exact", exact}, {"choice", choice}};
  if (!o.output.empty()) write_json_file(o.output, info);
  std::vector<std::string> lines = {"category:  " + cat.name, "choice:    " + choice, join_D(cat.ring, D.values),
                                    "objective: " + std::to_string(D.objective()) + " (= dim H)",
                                    std::string("exact:     ") + (exact ? "yes" : "no (weak)")};
  return emit(o, rep, info, lines);
}

int cmd_reconstruct(const Options& o) {
  Tolerance tol = tolerance(o);
  auto cat = std::make_shared<const CategoryData>(load_category(o));
  DimensionFunction D = choose_dimension(o, cat->ring);
  auto F = std::make_shared<const FunctorData>(build_functor(cat, D, parse_seed(o.seed)));
  Report rep = verify_functor(*F, tol);
  WQHopf H = reconstruct(F);
  rep.merge(verify_weak_axioms(H, tol));
  rep.merge(verify_structure_transport(H, tol));
  if (!o.output.empty()) write_json_file(o.output, algebra_to_json(H));
  Json info = {{"category", cat->name}, {"D", H.D}, {"dimension", H.dimension()}, {"seed", F->strategy.tag()}};
  return emit(o, rep, info,
              {"category:  " + cat->name, join_D(cat->ring, H.D), "dim H:     " + std::to_string(H.dimension()),
               "functor:   " + F->strategy.tag()});
}

Family approximate_family(const Family& f) {
  Family out = f;
  for (auto& [k, m] : out.blocks) m = m.to_approx();
  return out;
}

WQHopf approximate_algebra(const WQHopf& H) {
  auto cat = std::make_shared<const CategoryData>(approximate(H.cat()));
  auto F = std::make_shared<FunctorData>(*H.functor);
  F->cat = cat;
  for (auto* m : {&F->c, &F->c_inv})
    for (auto& [k, v] : *m) v = v.to_approx();
  for (auto& d : F->d) d = d.to_approx();
  WQHopf out = H;
  out.functor = F;
  for (auto* f : {&out.delta_unit, &out.phi, &out.phi_inv, &out.R, &out.R_inv, &out.alpha, &out.beta, &out.ribbon_v})
    *f = approximate_family(*f);
  for (auto* v : {&out.dT, &out.dT_inv})
    for (auto& m : *v) m = m.to_approx();
  return out;
}

int cmd_check_hopf(const Options& o) {
  Tolerance tol = tolerance(o);
  if (o.input.empty()) throw InputError("check-hopf needs an algebra dump");
  WQHopf H = algebra_from_json(read_json_file(o.input));
  if (o.backend == "approx") H = approximate_algebra(H);
  Report rep = verify_weak_axioms(H, tol);
  rep.merge(verify_structure_transport(H, tol));
  Json info = {{"category", H.cat().name}, {"D", H.D}, {"dimension", H.dimension()}};
  return emit(o, rep, info,
              {"category:  " + H.cat().name, join_D(H.cat().ring, H.D), "dim H:     " + std::to_string(H.dimension())});
}

int cmd_twist(const Options& o) {
  Tolerance tol = tolerance(o);
  auto comma = o.seeds.find(',');
  if (comma == std::string::npos) throw InputError("--seeds expects two comma-separated seeds");
  FunctorStrategy s1 = parse_seed(o.seeds.substr(0, comma));
  FunctorStrategy s2 = parse_seed(o.seeds.substr(comma + 1));
  auto cat = std::make_shared<const CategoryData>(load_category(o));
  DimensionFunction D = choose_dimension(o, cat->ring);
  WQHopf H1 = reconstruct(std::make_shared<const FunctorData>(build_functor(cat, D, s1)));
  WQHopf H2 = reconstruct(std::make_shared<const FunctorData>(build_functor(cat, D, s2)));
  TwistElement T = twist_between(H1, H2, tol);
  Report rep = verify_twist(H1, H2, T, tol);
  if (!o.output.empty()) write_json_file(o.output, twist_to_json(T));
  Json info = {{"category", cat->name}, {"D", D.values}, {"seeds", {s1.tag(), s2.tag()}}};
  return emit(o, rep, info,
              {"category:  " + cat->name, join_D(cat->ring, D.values), "seeds:     " + s1.tag() + " -> " + s2.tag()});
}

void common(CLI::App* sub, Options& o, bool category_input) {
  sub->add_option("input", o.input, category_input ? "category JSON file" : "algebra dump");
  if (category_input) {
    sub->add_option("--builtin", o.builtin_name, "builtin category")
        ->check(CLI::IsMember(builtin_names()));
    sub->add_option("--n", o.n, "order of Z/n for vec_zn")->check(CLI::Range(1, 12));
    sub->add_option("--q", o.q, "cocycle parameter for vec_zn");
  }
  sub->add_option("--backend", o.backend, "exact or approx")->check(CLI::IsMember({"exact", "approx"}));
  sub->add_option("--tol", o.tol, "absolute tolerance (approx backend only)")->check(CLI::NonNegativeNumber);
  sub->add_option("--report", o.report, "human or machine")->check(CLI::IsMember({"human", "machine"}));
}

void dimension_flags(CLI::App* sub, Options& o) {
  sub->add_option("--dim", o.dim, "canonical, max, minimal or a JSON file with D");
  sub->add_option("--bound", o.bound, "search bound for --dim minimal")->check(CLI::Range(1L, 16L));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weak quasi Hopf algebra reconstruction from ribbon category data"};
  app.require_subcommand(1);
  Options o;

  auto* verify = app.add_subcommand("verify", "check fusion ring, pentagon, hexagons, snakes and ribbon");
  common(verify, o, true);
  verify->add_option("-o", o.output, "write the machine report here");
  verify->add_option("--export", o.export_path, "write the category in the shared file format");

  auto* dims = app.add_subcommand("dims", "compute a weak dimension function");
  common(dims, o, true);
  dimension_flags(dims, o);
  dims->add_option("--minimal", o.minimal, "shorthand for --dim minimal --bound N")->check(CLI::Range(1L, 16L));
  dims->add_option("-o", o.output, "write D as JSON");

  auto* rec = app.add_subcommand("reconstruct", "build the functor and the algebra, verify, dump");
  common(rec, o, true);
  dimension_flags(rec, o);
  rec->add_option("--seed", o.seed, "functor strategy: canonical or an integer seed");
  rec->add_option("-o", o.output, "algebra dump path");

  auto* chk = app.add_subcommand("check-hopf", "reload an algebra dump and re-verify it");
  common(chk, o, false);

  auto* tw = app.add_subcommand("twist", "compare the algebras of two functor strategies");
  common(tw, o, true);
  dimension_flags(tw, o);
  tw->add_option("--seeds", o.seeds, "two strategies, e.g. canonical,7");
  tw->add_option("-o", o.output, "twist dump path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  o.command = app.get_subcommands().front()->get_name();

  try {
    if (o.command == "verify") return cmd_verify(o);
    if (o.command == "dims") return cmd_dims(o);
    if (o.command == "reconstruct") return cmd_reconstruct(o);
    if (o.command == "check-hopf") return cmd_check_hopf(o);
    return cmd_twist(o);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const MathError& e) {
    std::cerr << "mathematical obstruction: " << e.what() << '\n';
    if (o.report == "machine")
      std::cout << Json{{"command", o.command}, {"status", "error"}, {"exit_code", 1}, {"message", e.what()}}.dump(1)
                << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
