#include "commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "ends/cayley_ends.hpp"
#include "ends/commensurated.hpp"
#include "ends/ends_metric.hpp"
#include "ends/free_product.hpp"
#include "ends/groupspec.hpp"
#include "ends/locally_finite.hpp"
#include "ends/sampling.hpp"
#include "ends/tree_action.hpp"

namespace endstool {

using namespace ends;

namespace {

struct Options {
  std::uint64_t seed = 0;
  std::size_t max_elements = kDefaultMaxElements;
  std::string format = "json";
  bool quiet = false;

  std::string group;
  std::string set;
  std::string chain;
  std::string h_spec;
  std::string l_spec;
  std::string m_expr;
  std::string factors;
  std::string element;
  std::string pairs_file;
  std::string genset1 = "a,b";
  std::string genset2;
  std::string edges_file;
  std::string levels = "even";
  int rmax = 6;
  int window = 2;
  int radius = 4;
  int n = 0;
  int depth = 4;
  int samples = 0;
  int triples = 1000;
  int random_sets = 0;
  int difference_radius = -1;
  bool all = false;
  bool right = false;
};

std::string fmt(const Group& g, const Element& x) { return g.format(x); }

// A spec, or @path naming a file that holds one ('#' starts a comment).
std::string spec_text(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw UsageError("cannot open group-spec file " + arg.substr(1));
  std::string text, line;
  while (std::getline(in, line)) text += line.substr(0, line.find('#')) + ' ';
  return text;
}

GroupPtr load_group(const std::string& arg) { return parse_group_spec(spec_text(arg)); }

json verdict_witness(const Group& g, const VerificationVerdict& v) {
  if (v.status != VerdictStatus::Refuted) return nullptr;
  json w = json::object();
  w["generator"] = v.witness_generator ? json(fmt(g, *v.witness_generator)) : json(nullptr);
  w["side"] = v.witness_side ? json(to_string(*v.witness_side)) : json(nullptr);
  w["element"] = v.witness_element ? json(fmt(g, *v.witness_element)) : json(nullptr);
  return w;
}

Check verdict_check(const std::string& name, const Group& g, const VerificationVerdict& v) {
  Check c{name, to_string(v.status)};
  c.detail["radius"] = v.radius;
  json ev = json::array();
  for (const auto& e : v.evidence) {
    json row;
    row["generator"] = e.generator ? json(fmt(g, *e.generator)) : json(nullptr);
    row["side"] = to_string(e.side);
    row["sizes"] = e.sizes;
    row["certificate"] = e.certificate ? json(e.certificate->describe()) : json(nullptr);
    ev.push_back(std::move(row));
  }
  c.detail["evidence"] = std::move(ev);
  c.witness = verdict_witness(g, v);
  return c;
}

Check sweep_check(const std::string& name, bool ok, json detail, json witness) {
  return Check{name, ok ? "verified" : "refuted", std::move(detail), ok ? json(nullptr) : std::move(witness)};
}

std::vector<std::string> split_top(const std::string& text) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// ---------------------------------------------------------------- ends

Report ends_estimate(const Options& o) {
  const auto g = load_group(o.group);
  Report r;
  r.group = g->spec();
  r.parameters = {{"rmax", o.rmax}, {"window", o.window}};
  const auto est = estimate_end_count(g, o.rmax, o.window, o.max_elements);
  for (const auto& row : est.rows) {
    r.table.push_back({{"inner_radius", row.inner_radius},
                       {"outer_radius", row.outer_radius},
                       {"unbounded", row.unbounded},
                       {"total", row.total}});
  }
  Check c{"end_count", "estimate"};
  c.detail["verdict"] = to_string(est.verdict);
  json counts = json::array();
  for (const auto& row : est.rows) counts.push_back(row.unbounded);
  c.detail["unbounded"] = std::move(counts);
  r.checks.push_back(std::move(c));
  return r;
}

std::vector<std::pair<FreeGroupEnd, FreeGroupEnd>> read_pairs(const GroupPtr& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open pair file " + path);
  std::vector<std::pair<FreeGroupEnd, FreeGroupEnd>> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    std::string a, b;
    if (!(row >> a >> b)) throw UsageError("pair file lines need two end literals: '" + line + "'");
    out.emplace_back(parse_end(g, a), parse_end(g, b));
  }
  return out;
}

Report ends_metric(const Options& o) {
  const auto g = load_group(o.group);
  if (g->kind() != GroupKind::Free) throw UsageError("ends metric needs a free group, got " + g->spec());
  Report r;
  r.group = g->spec();
  r.parameters = {{"triples", o.triples}, {"seed", o.seed}};
  const auto pairs = read_pairs(g, o.pairs_file);
  std::vector<FreeGroupEnd> pool;
  for (const auto& [a, b] : pairs) {
    const auto d = common_suffix_depth(a, b);
    r.table.push_back({{"a", a.literal()},
                       {"b", b.literal()},
                       {"depth", d ? json(*d) : json(nullptr)},
                       {"distance", end_distance(a, b)}});
    pool.push_back(a);
    pool.push_back(b);
  }
  std::mt19937_64 rng(o.seed);
  while (pool.size() < 3) pool.push_back(random_end(g, rng));
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  json witness = nullptr;
  std::size_t failures = 0;
  for (int i = 0; i < o.triples; ++i) {
    const auto& a = pool[pick(rng)];
    const auto& b = pool[pick(rng)];
    const auto& c = pool[pick(rng)];
    if (end_distance(a, c) > std::max(end_distance(a, b), end_distance(b, c))) {
      if (failures++ == 0) witness = {a.literal(), b.literal(), c.literal()};
    }
  }
  r.checks.push_back(sweep_check("ultrametric", failures == 0, {{"triples", o.triples}, {"failures", failures}}, witness));
  return r;
}

std::vector<Word> parse_basis(const FreeGroup& f, const std::string& text) {
  std::vector<Word> out;
  for (const auto& w : split_top(text)) out.push_back(f.parse_compact(w));
  return out;
}

Report ends_holder(const Options& o) {
  const auto g = load_group(o.group);
  if (g->kind() != GroupKind::Free) throw UsageError("ends holder needs a free group, got " + g->spec());
  const auto& f = as<FreeGroup>(*g);
  Report r;
  r.group = g->spec();
  r.parameters = {{"genset1", o.genset1}, {"genset2", o.genset2}, {"seed", o.seed}};
  std::vector<std::pair<FreeGroupEnd, FreeGroupEnd>> sample;
  if (!o.pairs_file.empty()) {
    sample = read_pairs(g, o.pairs_file);
  } else {
    std::mt19937_64 rng(o.seed);
    const int n = o.samples > 0 ? o.samples : 200;
    r.parameters["samples"] = n;
    for (int i = 0; i < n; ++i) {
      auto a = random_end(g, rng);
      sample.emplace_back(std::move(a), random_end(g, rng));
    }
  }
  const auto h = holder_compare(g, parse_basis(f, o.genset1), parse_basis(f, o.genset2), sample);
  Check c{"holder", "estimate"};
  c.detail = {{"pairs", h.pairs}, {"used", h.used},   {"ratio_min", h.ratio_min},
              {"ratio_max", h.ratio_max}, {"alpha", h.alpha}, {"beta", h.beta}};
  r.checks.push_back(std::move(c));
  return r;
}

// ---------------------------------------------------------------- verify

Report verify_coupme(const Options& o) {
  const auto g = parse_group_spec("free_product([" + o.factors + "])");
  Report r;
  r.group = g->spec();
  const int samples = o.samples > 0 ? o.samples : 1000;
  // The pairs are sampled by random walks, but the difference sets need
  // the whole ball.
  const int dr = o.difference_radius >= 0 ? o.difference_radius : std::min(o.radius, 4);
  r.parameters = {{"radius", o.radius}, {"difference_radius", dr}, {"samples", samples}, {"seed", o.seed}};
  std::mt19937_64 rng(o.seed);
  const auto& gens = g->ball_generators();
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::size_t exceptions = 0;
  json witness = nullptr;
  for (int i = 0; i < samples; ++i) {
    const Element s = gens[pick(rng)];
    Element h = random_element(g, rng, o.radius);
    while (g->is_identity(h) || h == g->invert(s)) h = random_element(g, rng, o.radius);
    const Element sh = g->multiply(s, h);
    const int th = last_letter_type(*g, h);
    const int tsh = last_letter_type(*g, sh);
    r.table.push_back({{"g", fmt(*g, s)}, {"h", fmt(*g, h)}, {"gh", fmt(*g, sh)}, {"type_h", th}, {"type_gh", tsh}});
    if (th != tsh && exceptions++ == 0) witness = {{"g", fmt(*g, s)}, {"h", fmt(*g, h)}};
  }
  r.checks.push_back(sweep_check("last_letter", exceptions == 0, {{"samples", samples}, {"exceptions", exceptions}},
                                 witness));

  // f(sh) ≠ f(h) only for h ∈ {1, s⁻¹}.
  bool ok = true;
  witness = nullptr;
  json sizes = json::object();
  for (const auto& s : gens) {
    const auto d = coupme_difference_set(g, s, dr, o.max_elements);
    sizes[fmt(*g, s)] = d.size();
    for (const auto& h : d) {
      if (!g->is_identity(h) && h != g->invert(s) && ok) {
        ok = false;
        witness = {{"g", fmt(*g, s)}, {"h", fmt(*g, h)}};
      }
    }
  }
  r.checks.push_back(sweep_check("difference_sets", ok, {{"radius", dr}, {"sizes", sizes}}, witness));
  return r;
}

Report verify_freepro_inj(const Options& o) {
  const auto hg = load_group(o.h_spec);
  const auto lg = load_group(o.l_spec);
  const auto g = free_product({hg, lg});
  const auto& fp = as<FreeProductGroup>(*g);
  const auto& h = fp.factors()[0];
  Report r;
  r.group = g->spec();
  const auto m = parse_set_expression(h, o.m_expr);
  r.parameters = {{"M", m->describe()}, {"radius", o.radius}};
  const auto lift = lift_commensurated(g, 0, m, o.radius, o.max_elements);
  r.checks.push_back(verdict_check("M_commensurated", *h, lift.verdict));
  if (!lift.lifted) return r;
  const auto& mp = *lift.lifted;
  r.parameters["M_lift"] = mp.describe();

  const Subgroup sub = Subgroup::factor(g, 0);
  const Ball ball(g, o.radius, o.max_elements);
  const Ball hball(h, 2);
  bool ok = true;
  json witness = nullptr;
  std::size_t tested = 0;
  json translations = json::array();
  for (const auto& hx : hball.elements()) {
    if (h->is_identity(hx)) continue;
    translations.push_back(fmt(*h, hx));
    const Element y = fp.embed(0, hx);
    for (const auto& x : ball.elements()) {
      ++tested;
      // M' ∖ y⁻¹M' against M ∖ y⁻¹M, the latter read inside H.
      const bool lhs = mp.contains(x) && !mp.contains(g->multiply(y, x));
      bool rhs = false;
      if (sub.contains(x)) {
        const Element z = h_suffix(*g, x, 0);
        rhs = m->contains(z) && !m->contains(h->multiply(hx, z));
      }
      if (lhs != rhs && ok) {
        ok = false;
        witness = {{"h", fmt(*h, hx)}, {"x", fmt(*g, x)}};
      }
    }
  }
  r.checks.push_back(sweep_check("difference", ok, {{"translations", translations}, {"tested", tested}}, witness));

  ok = true;
  witness = nullptr;
  tested = 0;
  for (const auto& x : ball.elements()) {
    if (!sub.contains(x)) continue;
    ++tested;
    if (mp.contains(x) != m->contains(h_suffix(*g, x, 0)) && ok) {
      ok = false;
      witness = {{"x", fmt(*g, x)}};
    }
  }
  r.checks.push_back(sweep_check("intersection", ok, {{"tested", tested}}, witness));

  ok = true;
  witness = nullptr;
  for (const auto& l : Subgroup::factor(g, 1).generators()) {
    const auto d = translate_difference(mp, l, o.radius, Side::Left, o.max_elements);
    if (!d.empty() && ok) {
      ok = false;
      witness = {{"l", fmt(*g, l)}, {"x", fmt(*g, d.front())}};
    }
  }
  r.checks.push_back(sweep_check("L_invariance", ok, {{"radius", o.radius}}, witness));
  return r;
}

Report verify_notame(const Options& o) {
  const std::string chain = spec_text(o.chain);
  const std::string spec =
      chain.find('(') != std::string::npos ? chain : "ascending_union(" + chain + ", " + std::to_string(o.n) + ")";
  const auto g = parse_group_spec(spec);
  const auto& au = as<AscendingUnionGroup>(*g);
  Report r;
  r.group = g->spec();
  r.parameters = {{"N", au.depth()}, {"levels", o.levels}, {"radius", o.radius}};
  BiInvarianceVerdict v;
  if (o.all) {
    r.parameters["g"] = "all";
    v = verify_bi_invariance_exhaustive(g);
  } else {
    if (o.element.empty()) throw UsageError("verify notame needs --g <element> or --all");
    const Element x = g->parse(o.element);
    r.parameters["g"] = fmt(*g, x);
    v = verify_bi_invariance(g, x, -1, o.max_elements);
  }
  json witness = nullptr;
  if (v.witness) witness = {{"g", fmt(*g, v.witness->first)}, {"h", fmt(*g, v.witness->second)}};
  r.checks.push_back(sweep_check("bi_invariance", v.holds, {{"truncation", v.depth}, {"pairs", v.checked}}, witness));

  const auto a = levelset(g, parse_natset(o.levels));
  auto c = verdict_check("levelset_bicommensurated", *g, is_bicommensurated_up_to(*a, o.radius, o.max_elements));
  c.detail["set"] = a->describe();
  r.checks.push_back(std::move(c));
  return r;
}

Report verify_cardbool(const Options& o) {
  const auto g = load_group(o.group);
  Report r;
  r.group = g->spec();
  r.parameters = {{"radius", o.radius}, {"seed", o.seed}};
  std::vector<SubsetPtr> sets;
  std::mt19937_64 rng(o.seed);
  if (!o.set.empty()) sets.push_back(parse_set_expression(g, o.set));
  if (o.random_sets > 0) {
    r.parameters["random"] = o.random_sets;
    for (int i = 0; i < o.random_sets; ++i) sets.push_back(random_commensurated(g, rng, true));
  }
  if (sets.empty()) throw UsageError("verify cardbool needs --set or --random");

  const Ball inner(g, o.radius - 1, o.max_elements);
  bool ok = true;
  json witness = nullptr;
  for (const auto& u : sets) {
    const auto k = boundary_encode(*u, o.radius, o.max_elements);
    const auto v = boundary_decode(k, o.radius, o.max_elements);
    std::size_t mismatches = 0;
    for (const auto& x : inner.elements()) {
      if (v->contains(x) != u->contains(x)) {
        if (ok) witness = {{"set", u->describe()}, {"element", fmt(*g, x)}};
        ok = false;
        ++mismatches;
      }
    }
    r.table.push_back({{"set", u->describe()}, {"pairs", k.pairs.size()}, {"mismatches", mismatches}});
  }
  r.checks.push_back(sweep_check("round_trip", ok, {{"sets", sets.size()}, {"compared_radius", o.radius - 1}}, witness));

  // Kernel: sets with no boundary pair in the ball are constant on the
  // smaller ball. Candidates include sets whose support lies beyond it.
  std::vector<SubsetPtr> candidates = sets;
  candidates.push_back(whole_set(g));
  candidates.push_back(empty_set(g));
  const Ball outer(g, o.radius + 2, o.max_elements);
  const auto far = outer.sphere(o.radius + 2);
  if (!far.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, far.size() - 1);
    for (int i = 0; i < 4; ++i) {
      std::vector<Element> xs{far[pick(rng)], far[pick(rng)]};
      candidates.push_back(finite_set(g, xs));
      candidates.push_back(cofinite_set(g, xs));
    }
  }
  ok = true;
  witness = nullptr;
  std::size_t empty_boundaries = 0;
  for (const auto& u : candidates) {
    if (!boundary_pairs(*u, o.radius, o.max_elements).pairs.empty()) continue;
    ++empty_boundaries;
    std::size_t members = 0;
    for (const auto& x : inner.elements()) members += u->contains(x) ? 1 : 0;
    if (members != 0 && members != inner.size() && ok) {
      ok = false;
      witness = {{"set", u->describe()}, {"members", members}};
    }
  }
  r.checks.push_back(sweep_check("kernel", ok, {{"candidates", candidates.size()}, {"empty_boundaries", empty_boundaries}},
                                 witness));
  return r;
}

Report verify_tree_disjoint(const Options& o) {
  const auto hg = load_group(o.h_spec);
  const auto lg = load_group(o.l_spec);
  // Translates by a generator reach radius + 1 syllables.
  if (o.radius >= o.depth) throw UsageError("--radius must be below --depth");
  const BassSerreTree t(hg, lg, o.depth, o.max_elements);
  const auto& g = t.group();
  const auto& fp = as<FreeProductGroup>(*g);
  Report r;
  r.group = g->spec();
  r.parameters = {{"depth", o.depth}, {"radius", o.radius}};
  if (!o.edges_file.empty()) {
    std::ofstream out(o.edges_file);
    if (!out) throw UsageError("cannot write " + o.edges_file);
    out << t.edge_list();
    r.parameters["edges_file"] = o.edges_file;
  }
  r.checks.push_back(sweep_check("tree", t.is_tree(), {{"vertices", t.vertices().size()}, {"edges", t.edges().size()}},
                                 "cycle in the truncation"));

  // M_s ⊆ s⁻¹F; the edge group F is trivial here.
  bool ok = true;
  json witness = nullptr;
  json sizes = json::object();
  for (const auto& s : g->ball_generators()) {
    const auto ms = t.commensuration_witness(s, o.radius);
    sizes[fmt(*g, s)] = ms.size();
    for (const auto& x : ms) {
      if (x != g->invert(s) && ok) {
        ok = false;
        witness = {{"s", fmt(*g, s)}, {"x", fmt(*g, x)}};
      }
    }
  }
  r.checks.push_back(sweep_check("commensuration", ok, {{"sizes", sizes}}, witness));

  std::vector<Element> nontrivial;
  const auto& hf = as<FiniteGroup>(*hg);
  for (std::uint32_t i = 1; i < *hg->order(); ++i) nontrivial.push_back(fp.embed(0, hf.element(i)));
  const auto v = t.disjoint_translates(nontrivial, o.radius);
  witness = nullptr;
  if (v.witness) {
    witness = {{"h1", fmt(*g, (*v.witness)[0])}, {"h2", fmt(*g, (*v.witness)[1])}, {"x", fmt(*g, (*v.witness)[2])}};
  }
  json translates = json::array();
  for (std::size_t i = 0; i < nontrivial.size(); ++i) {
    translates.push_back({{"h", fmt(*g, nontrivial[i])}, {"size", v.translate_sizes[i]}});
  }
  r.checks.push_back(sweep_check("disjoint", v.disjoint, {{"translates", translates}}, witness));
  return r;
}

Report verify_set(const Options& o, bool both_sides, const std::string& name) {
  const auto g = load_group(o.group);
  const auto a = parse_set_expression(g, o.set);
  Report r;
  r.group = g->spec();
  r.parameters = {{"set", a->describe()}, {"radius", o.radius}};
  const auto v = both_sides ? is_bicommensurated_up_to(*a, o.radius, o.max_elements)
                            : is_left_commensurated_up_to(*a, o.radius, o.max_elements);
  r.checks.push_back(verdict_check(name, *g, v));
  return r;
}

struct Parsed {
  Options options;
  std::string command;
  std::function<Report(const Options&)> action;
};

Parsed parse(const std::vector<std::string>& args, CLI::App& app) {
  Parsed p;
  Options& o = p.options;
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", o.seed, "seed for every randomized sweep")->capture_default_str();
  app.add_option("--max-elements", o.max_elements, "cap on enumerated elements")->capture_default_str();
  app.add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  app.add_flag("--quiet", o.quiet, "no table on standard error");

  auto* ends_cmd = app.add_subcommand("ends", "end counts and the end space of free groups")->require_subcommand(1)->fallthrough();
  auto* verify_cmd = app.add_subcommand("verify", "verify a construction on balls")->require_subcommand(1)->fallthrough();

  auto bind = [&](CLI::App* sub, std::string name, std::function<Report(const Options&)> f) {
    sub->callback([&p, name, f] {
      p.command = name;
      p.action = f;
    });
    return sub;
  };

  auto* est = bind(ends_cmd->add_subcommand("estimate", "end count estimate from complement components"),
                   "ends estimate", ends_estimate);
  est->add_option("--group", o.group, "group spec")->required();
  est->add_option("--rmax", o.rmax, "largest ball radius")->capture_default_str();
  est->add_option("--window", o.window, "outer minus inner radius")->capture_default_str();

  auto* met = bind(ends_cmd->add_subcommand("metric", "end distances for pairs of ends"), "ends metric", ends_metric);
  met->add_option("--group", o.group, "free(k)")->required();
  met->add_option("--pairs", o.pairs_file, "file of 'tail|period tail|period' lines")->required();
  met->add_option("--triples", o.triples, "sampled triples for the ultrametric check")->capture_default_str();

  auto* hol = bind(ends_cmd->add_subcommand("holder", "compare end metrics of two bases"), "ends holder", ends_holder);
  hol->add_option("--group", o.group, "free(k)")->required();
  hol->add_option("--genset1", o.genset1, "basis as comma-separated words")->capture_default_str();
  hol->add_option("--genset2", o.genset2, "basis as comma-separated words")->required();
  hol->add_option("--pairs", o.pairs_file, "pair file instead of random ends");
  hol->add_option("--samples", o.samples, "random pairs (default 200)");

  auto* cpm = bind(verify_cmd->add_subcommand("coupme", "last-letter type on free products"), "verify coupme",
                   verify_coupme);
  cpm->add_option("--factors", o.factors, "comma-separated factor specs")->required();
  cpm->add_option("--radius", o.radius, "ball radius")->capture_default_str();
  cpm->add_option("--samples", o.samples, "random pairs (default 1000)");
  cpm->add_option("--difference-radius", o.difference_radius, "ball radius for difference sets (default min(radius, 4))");

  auto* inj = bind(verify_cmd->add_subcommand("freepro-inj", "lift a commensurated subset of H to H*L"),
                   "verify freepro-inj", verify_freepro_inj);
  inj->add_option("--H", o.h_spec, "first factor")->required();
  inj->add_option("--L", o.l_spec, "second factor")->required();
  inj->add_option("--M", o.m_expr, "set expression over H")->required();
  inj->add_option("--radius", o.radius, "ball radius")->capture_default_str();

  auto* nt = bind(verify_cmd->add_subcommand("notame", "level function of an ascending union"), "verify notame",
                  verify_notame);
  nt->add_option("--chain", o.chain, "sum_z2, sym or an ascending_union spec")->required();
  nt->add_option("--N", o.n, "truncation depth");
  nt->add_option("--g", o.element, "element");
  nt->add_flag("--all", o.all, "every element of the truncation");
  nt->add_option("--levels", o.levels, "level set for the bi-commensuration check")->capture_default_str();
  nt->add_option("--radius", o.radius, "radius for the level-set check")->capture_default_str();

  auto* cb = bind(verify_cmd->add_subcommand("cardbool", "boundary encode/decode round trip"), "verify cardbool",
                  verify_cardbool);
  cb->add_option("--group", o.group, "group spec")->required();
  cb->add_option("--set", o.set, "set expression containing 1");
  cb->add_option("--random", o.random_sets, "number of seeded random sets");
  cb->add_option("--radius", o.radius, "encoding radius")->capture_default_str();

  auto* td = bind(verify_cmd->add_subcommand("tree-disjoint", "Bass-Serre tree of H*L with finite factors"),
                  "verify tree-disjoint", verify_tree_disjoint);
  td->add_option("--H", o.h_spec, "finite factor")->required();
  td->add_option("--L", o.l_spec, "finite factor")->required();
  td->add_option("--depth", o.depth, "truncation depth")->capture_default_str();
  td->add_option("--radius", o.radius, "ball radius")->capture_default_str();
  td->add_option("--edges", o.edges_file, "write the edge list here");

  auto* bi = bind(verify_cmd->add_subcommand("biends", "bi-commensuration"), "verify biends",
                  [](const Options& x) { return verify_set(x, true, "bi_commensurated"); });
  bi->add_option("--group", o.group, "group spec")->required();
  bi->add_option("--set", o.set, "set expression")->required();
  bi->add_option("--radius", o.radius, "ball radius")->capture_default_str();

  auto* cm = bind(verify_cmd->add_subcommand("commensurated", "left (or two-sided) commensuration"),
                  "verify commensurated",
                  [](const Options& x) { return verify_set(x, x.right, x.right ? "bi_commensurated" : "commensurated"); });
  cm->add_option("--group", o.group, "group spec")->required();
  cm->add_option("--set", o.set, "set expression")->required();
  cm->add_option("--radius", o.radius, "ball radius")->capture_default_str();
  cm->add_flag("--both-sides", o.right, "also translate on the right");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  app.parse(reversed);
  return p;
}

}  // namespace

Report execute(const std::vector<std::string>& args) {
  CLI::App app{"endstool"};
  Parsed p;
  try {
    p = parse(args, app);
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  return [&] {
    try {
      const auto start = std::chrono::steady_clock::now();
      Report r = p.action(p.options);
      r.command = p.command;
      r.args = args;
      r.parameters["seed"] = p.options.seed;
      r.parameters["max_elements"] = p.options.max_elements;
      r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      return r;
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    } catch (const PreconditionError& e) {
      throw UsageError(e.what());
    } catch (const RangeError& e) {
      throw UsageError(e.what());
    } catch (const ResourceError& e) {
      throw UsageError(e.what());
    }
  }();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"endstool"};
  Parsed p;
  try {
    p = parse(args, app);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "endstool: " << e.what() << '\n';
    return 2;
  }
  Report r;
  try {
    r = execute(args);
  } catch (const UsageError& e) {
    err << "endstool: " << e.what() << '\n';
    return 2;
  }
  if (p.options.format == "csv") {
    out << r.to_csv();
  } else {
    out << r.to_json().dump(2) << '\n';
  }
  if (!p.options.quiet) err << r.human();
  return r.exit_code();
}

}  // namespace endstool
