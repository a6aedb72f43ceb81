// Command-line front end for the matroid library.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "matroid/matroid_all.hpp"

using namespace matroid;
using nlohmann::json;

namespace {

struct Globals {
  std::string in;
  std::string format = "bases";
  std::string named_matroid;
  std::string output = "text";
  int cap = 0;
  std::uint64_t seed = 1;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
};

Globals g;

bool jsonl() { return g.output == "jsonl"; }

std::string read_input() {
  if (g.in.empty() || g.in == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  return io::read_file(g.in);
}

Matroid load() {
  if (!g.named_matroid.empty()) return named(g.named_matroid);
  const auto fmt = io::parse_format(g.format);
  if (fmt == io::Format::Named && !g.in.empty() && g.in != "-") {
    std::ifstream probe(g.in);
    if (!probe) return named(g.in);
  }
  return io::parse(read_input(), fmt);
}

Mask parse_set(const std::string& s) {
  std::string body = s;
  if (!body.empty() && body.front() == '{') body = body.substr(1, body.size() - 2);
  Mask m = 0;
  std::stringstream ss(body);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) continue;
    m |= bit(std::stoi(part));
  }
  return m;
}

json big_list(const std::vector<BigInt>& v) {
  json a = json::array();
  for (const auto& x : v) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
      a.push_back(static_cast<std::int64_t>(x));
    else
      a.push_back(x.str());
  }
  return a;
}

json set_json(Mask s) { return elements(s); }

void emit(const json& j, const std::string& text) {
  if (jsonl()) std::cout << j.dump() << "\n";
  else std::cout << text << "\n";
}

std::string bases_text(const Matroid& m) {
  std::string t = io::write_bases(m);
  if (!t.empty() && t.back() == '\n') t.pop_back();
  return t;
}

void emit_matroid(const Matroid& m, json extra = json::object()) {
  extra["n"] = m.size();
  extra["rank"] = m.rank();
  json b = json::array();
  for (Mask x : m.bases()) b.push_back(set_json(x));
  extra["bases"] = b;
  emit(extra, bases_text(m));
}

Matroid parse_target(const std::string& text) {
  // "uniform:r,n" or a named matroid
  if (text.rfind("uniform:", 0) == 0) {
    auto body = text.substr(8);
    auto comma = body.find(',');
    return uniform(std::stoi(body.substr(0, comma)), std::stoi(body.substr(comma + 1)));
  }
  return named(text);
}

WeightVector parse_weights(const std::string& s, int n) {
  WeightVector w;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    auto slash = part.find('/');
    if (slash == std::string::npos) w.emplace_back(BigInt(part));
    else w.emplace_back(BigInt(part.substr(0, slash)), BigInt(part.substr(slash + 1)));
  }
  if (static_cast<int>(w.size()) != n)
    fail(ErrorCode::InvalidArgument, "expected " + std::to_string(n) + " weights");
  return w;
}

std::string rational_text(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string weight_text(const MinkowskiWeight& c) {
  std::string out = "dim " + std::to_string(c.dim) + ", " + std::to_string(c.values.size()) + " cones";
  for (const auto& [f, v] : c.values) out += "\n" + matroid::to_string(f) + " " + std::to_string(v);
  return out;
}

json weight_json(const MinkowskiWeight& c) {
  json cones = json::array();
  for (const auto& [f, v] : c.values) {
    json flag = json::array();
    for (Mask s : f) flag.push_back(set_json(s));
    cones.push_back({{"flag", flag}, {"value", v}});
  }
  return {{"n", c.n}, {"dim", c.dim}, {"cones", cones}};
}

int cmd_info() {
  Matroid m = load();
  auto deg = degeneracies(m);
  auto comps = connected_components(m);
  auto counts = flats_by_rank(m).counts();
  auto circ = circuits(m);
  std::string comp_text, flat_text;
  json jc = json::array();
  for (Mask c : comps) {
    comp_text += (comp_text.empty() ? "" : " ") + matroid::to_string(c);
    jc.push_back(set_json(c));
  }
  for (auto c : counts) flat_text += (flat_text.empty() ? "" : " ") + std::to_string(c);
  std::ostringstream os;
  os << "elements " << m.size() << "\nrank " << m.rank() << "\nbases " << m.basis_count()
     << "\nloops " << matroid::to_string(deg.loops) << "\ncoloops " << matroid::to_string(deg.coloops)
     << "\nsimple " << (deg.simple ? "yes" : "no") << "\ncomponents " << comp_text << "\nflats by rank "
     << flat_text << "\ncircuits " << circ.size();
  emit({{"n", m.size()},
        {"rank", m.rank()},
        {"bases", m.basis_count()},
        {"loops", set_json(deg.loops)},
        {"coloops", set_json(deg.coloops)},
        {"simple", deg.simple},
        {"components", jc},
        {"flat_counts", counts},
        {"circuits", circ.size()}},
       os.str());
  return 0;
}

int cmd_charpoly(const std::string& alg, bool reduced) {
  Matroid m = load();
  if (reduced) {
    auto r = reduced_charpoly(m);
    emit({{"reduced", big_list(r.poly.descending())}, {"mu", big_list(r.mu)}}, r.poly.to_string());
    return 0;
  }
  if (alg == "all") {
    auto a = charpoly(m, CharpolyAlgorithm::Mobius);
    auto b = charpoly(m, CharpolyAlgorithm::Whitney);
    auto c = charpoly(m, CharpolyAlgorithm::Delcon);
    const bool agree = a == b && b == c;
    emit({{"charpoly", big_list(a.descending())}, {"agree", agree}},
         a.to_string() + (agree ? "" : "  (algorithms disagree)"));
    return agree ? 0 : 1;
  }
  CharpolyAlgorithm k = alg == "whitney"  ? CharpolyAlgorithm::Whitney
                        : alg == "delcon" ? CharpolyAlgorithm::Delcon
                                          : CharpolyAlgorithm::Mobius;
  auto p = charpoly(m, k);
  emit({{"charpoly", big_list(p.descending())}}, p.to_string());
  return 0;
}

int cmd_tutte(const std::string& alg) {
  Matroid m = load();
  BiPolynomial t;
  bool agree = true;
  if (alg == "all") {
    t = tutte(m, TutteAlgorithm::RankGenerating);
    agree = t == tutte(m, TutteAlgorithm::Delcon);
  } else {
    t = tutte(m, alg == "rankgen" ? TutteAlgorithm::RankGenerating : TutteAlgorithm::Delcon);
  }
  json terms = json::array();
  for (auto& [i, j, v] : t.terms()) terms.push_back({i, j, v.str()});
  emit({{"tutte", terms}, {"agree", agree}}, t.to_string() + (agree ? "" : "  (algorithms disagree)"));
  return agree ? 0 : 1;
}

int cmd_fvector() {
  Matroid m = load();
  auto f = f_vector(m);
  auto h = h_polynomial(m);
  std::string ft;
  for (auto& x : f) ft += (ft.empty() ? "" : ", ") + x.str();
  emit({{"f", big_list(f)}, {"h", big_list(h.descending())}}, "f = (" + ft + ")\nh = " + h.to_string());
  return 0;
}

int cmd_mobius() {
  Matroid m = load();
  auto t = mobius(m);
  const auto all = t.flats().all();
  std::string text;
  json j = json::array();
  for (std::size_t i = 0; i < all.size(); ++i) {
    text += (i ? "\n" : "") + matroid::to_string(all[i]) + " " + t.values()[i].str();
    j.push_back({{"flat", set_json(all[i])}, {"mu", t.values()[i].str()}});
  }
  emit({{"mobius", j}}, text);
  return 0;
}

int cmd_dual() {
  emit_matroid(dual(load()));
  return 0;
}

int cmd_minor(const std::string& del, const std::string& con, const std::string& has) {
  Matroid m = load();
  if (!has.empty()) {
    const bool r = has_minor(m, parse_target(has));
    emit({{"has_minor", r}}, r ? "yes" : "no");
    return 0;
  }
  const Mask c = parse_set(con), d = parse_set(del);
  if (c & d) fail(ErrorCode::InvalidArgument, "delete and contract sets overlap");
  Minor mc = contract_elements(m, c);
  Mask d2 = 0;
  for (std::size_t i = 0; i < mc.index_map.size(); ++i)
    if (contains(d, mc.index_map[i])) d2 |= bit(static_cast<int>(i));
  Minor md = delete_elements(mc.matroid, d2);
  std::vector<int> map;
  for (int k : md.index_map) map.push_back(mc.index_map[k]);
  emit_matroid(md.matroid, {{"index_map", map}});
  return 0;
}

int cmd_relax(const std::string& set) {
  emit_matroid(relax(load(), parse_set(set)));
  return 0;
}

int cmd_extend(bool free_ext, const std::string& principal, bool coext) {
  Matroid m = load();
  if (coext) emit_matroid(free_coextension(m));
  else if (!principal.empty()) emit_matroid(principal_extension(m, parse_set(principal)));
  else if (free_ext) emit_matroid(free_extension(m));
  else fail(ErrorCode::InvalidArgument, "choose --free, --principal SET or --coextension");
  return 0;
}

int cmd_greedy(const std::string& weights, bool minimize) {
  Matroid m = load();
  auto r = greedy_basis(m, parse_weights(weights, m.size()), minimize ? Sense::Min : Sense::Max);
  emit({{"basis", set_json(r.basis)}, {"weight", rational_text(r.weight)}},
       matroid::to_string(r.basis) + " weight " + rational_text(r.weight));
  return 0;
}

int cmd_bergman_weight(int r1, int r2) {
  Matroid m = load();
  auto c = r1 > 0 ? truncation_weight(m, r1, r2) : bergman_weight(m);
  auto rep = check_balancing(c);
  json j = weight_json(c);
  j["balanced"] = rep.ok;
  emit(j, weight_text(c) + "\nbalanced " + (rep.ok ? "yes" : "no"));
  return rep.ok ? 0 : 1;
}

int cmd_bergman_cup(int alphas, int betas) {
  Matroid m = load();
  auto c = cup_power(bergman_weight(m), alphas, betas);
  std::string text = weight_text(c);
  json j = weight_json(c);
  if (c.dim == 0) {
    text += "\ndegree " + std::to_string(degree(c));
    j["degree"] = degree(c);
  }
  emit(j, text);
  return 0;
}

int cmd_bergman_degmu() {
  Matroid m = load();
  auto mu = reduced_charpoly(m).mu;
  bool ok = true;
  std::string text;
  json rows = json::array();
  for (int r = 0; r < m.rank(); ++r) {
    const auto deg = mu_via_intersection(m, r);
    const bool eq = BigInt(deg) == mu[r];
    ok = ok && eq;
    text += (r ? "\n" : "") + std::string("r=") + std::to_string(r) + " degree " + std::to_string(deg) +
            " mu " + mu[r].str() + (eq ? "" : "  MISMATCH");
    rows.push_back({{"r", r}, {"degree", deg}, {"mu", mu[r].str()}, {"equal", eq}});
  }
  emit({{"deg_mu", rows}, {"ok", ok}}, text);
  return ok ? 0 : 1;
}

int cmd_ingleton(int kinser, std::uint64_t budget) {
  Matroid m = load();
  if (kinser > 0) {
    auto r = kinser_check(m, kinser, budget, g.seed);
    std::string text = "kinser k=" + std::to_string(kinser) + ": " + std::to_string(r.violations.size()) +
                       " violations in " + std::to_string(r.tuples_checked) + " tuples" +
                       (r.exhaustive ? "" : " (sampled)");
    emit({{"k", kinser},
          {"violations", r.violations.size()},
          {"tuples", r.tuples_checked},
          {"exhaustive", r.exhaustive}},
         text);
    return 0;
  }
  auto v = ingleton_violations(m);
  if (v.empty()) {
    emit({{"violations", 0}}, "ingleton: no violations");
    return 0;
  }
  const auto& w = v.front();
  std::string text = "ingleton: " + std::to_string(v.size()) + " violations; first X1=" +
                     matroid::to_string(w.x[0]) + " X2=" + matroid::to_string(w.x[1]) +
                     " X3=" + matroid::to_string(w.x[2]) + " X4=" + matroid::to_string(w.x[3]) +
                     " lhs " + std::to_string(w.lhs) + " > rhs " + std::to_string(w.rhs);
  emit({{"violations", v.size()},
        {"first", {set_json(w.x[0]), set_json(w.x[1]), set_json(w.x[2]), set_json(w.x[3])}},
        {"lhs", w.lhs},
        {"rhs", w.rhs}},
       text);
  return 0;
}

int cmd_sweep(const std::string& db_path, const std::string& checks_csv, int max_n, std::size_t limit) {
  std::vector<Matroid> db;
  for (auto& m : io::load_database(db_path))
    if (max_n < 0 || m.size() <= max_n) db.push_back(m);
  if (limit > 0 && db.size() > limit) db.erase(db.begin() + static_cast<std::ptrdiff_t>(limit), db.end());
  std::vector<SweepCheck> checks;
  std::stringstream ss(checks_csv);
  std::string part;
  while (std::getline(ss, part, ','))
    if (!part.empty()) checks.push_back(parse_sweep_check(part));
  if (checks.empty())
    for (auto [name, c] : sweep_check_names()) checks.push_back(c);
  auto rep = sweep(db, checks, g.jobs);
  if (jsonl()) {
    for (const auto& f : rep.failures)
      std::cout << json{{"index", f.index}, {"check", sweep_check_name(f.check)}, {"detail", f.detail}}.dump()
                << "\n";
    json t = json::object();
    for (const auto& [c, x] : rep.tally)
      t[std::string(sweep_check_name(c))] = {{"passed", x.passed}, {"failed", x.failed}, {"skipped", x.skipped}};
    std::cout << json{{"matroids", rep.matroids}, {"checks", t}, {"failures", rep.failures.size()}}.dump() << "\n";
  } else {
    for (const auto& f : rep.failures)
      std::cout << "FAIL #" << f.index << " " << sweep_check_name(f.check) << ": " << f.detail << "\n";
    std::cout << rep.summary();
  }
  return rep.ok() ? 0 : 1;
}

int cmd_enumerate(int max_n, const std::string& out) {
  auto levels = enumerate_matroids(max_n, [](int k, std::size_t c) {
    std::cerr << k << " elements: " << c << " classes\n";
  });
  std::vector<Matroid> all;
  for (auto& l : levels) all.insert(all.end(), l.begin(), l.end());
  const std::string text = io::write_revlex(all);
  if (out.empty() || out == "-") std::cout << text;
  else std::ofstream(out) << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matroid computations: polynomials, polytopes, Bergman fans"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--in", g.in, "input file ('-' for stdin)");
  app.add_option("--format", g.format, "bases | revlex | matrix | graph | named")
      ->check(CLI::IsMember({"bases", "revlex", "matrix", "graph", "named"}));
  app.add_option("--named", g.named_matroid, "fano | nonfano | pappus | nonpappus | vamos");
  app.add_option("--output", g.output, "text | jsonl")->check(CLI::IsMember({"text", "jsonl"}));
  app.add_option("--cap", g.cap, "largest ground set for 2^E sweeps")->each([](const std::string& v) {
    set_exhaustive_cap(std::stoi(v));
  });
  app.add_option("--seed", g.seed, "seed for sampled checks");
  app.add_option("--jobs", g.jobs, "worker threads for sweep");

  int rc = 0;
  auto* info = app.add_subcommand("info", "summary of structure");
  info->callback([&] { rc = cmd_info(); });

  std::string alg = "mobius";
  bool reduced = false;
  auto* cp = app.add_subcommand("charpoly", "characteristic polynomial");
  cp->add_option("--algorithm", alg, "mobius | whitney | delcon | all");
  cp->add_flag("--reduced", reduced, "divide by q - 1");
  cp->callback([&] { rc = cmd_charpoly(alg, reduced); });

  std::string talg = "delcon";
  auto* tt = app.add_subcommand("tutte", "Tutte polynomial");
  tt->add_option("--algorithm", talg, "rankgen | delcon | all");
  tt->callback([&] { rc = cmd_tutte(talg); });

  app.add_subcommand("fvector", "f-vector and h-polynomial")->callback([&] { rc = cmd_fvector(); });
  app.add_subcommand("mobius", "Mobius function on flats")->callback([&] { rc = cmd_mobius(); });
  app.add_subcommand("dual", "dual matroid")->callback([&] { rc = cmd_dual(); });

  std::string del, con, has;
  auto* mn = app.add_subcommand("minor", "delete/contract, or test for a minor");
  mn->add_option("--delete", del, "elements to delete, e.g. 0,3");
  mn->add_option("--contract", con, "elements to contract");
  mn->add_option("--has", has, "test for a minor: uniform:r,n or a named matroid");
  mn->callback([&] { rc = cmd_minor(del, con, has); });

  std::string relax_set;
  auto* rx = app.add_subcommand("relax", "relax a circuit-hyperplane");
  rx->add_option("--set", relax_set, "the circuit-hyperplane")->required();
  rx->callback([&] { rc = cmd_relax(relax_set); });

  bool free_ext = false, coext = false;
  std::string principal;
  auto* ex = app.add_subcommand("extend", "single-element extension");
  ex->add_flag("--free", free_ext, "free extension");
  ex->add_option("--principal", principal, "principal extension on this flat");
  ex->add_flag("--coextension", coext, "free coextension");
  ex->callback([&] { rc = cmd_extend(free_ext, principal, coext); });

  std::string weights;
  bool minimize = false;
  auto* gr = app.add_subcommand("greedy", "optimal basis by the greedy algorithm");
  gr->add_option("--weights", weights, "comma-separated weights (a or a/b)")->required();
  gr->add_flag("--min", minimize, "minimize instead of maximize");
  gr->callback([&] { rc = cmd_greedy(weights, minimize); });

  auto* bg = app.add_subcommand("bergman", "Bergman fan as a Minkowski weight");
  bg->require_subcommand(1);
  int r1 = 0, r2 = 0, alphas = 0, betas = 0;
  auto* bw = bg->add_subcommand("weight", "Delta_M, or Delta_M[r1,r2] with --r1/--r2");
  bw->add_option("--r1", r1);
  bw->add_option("--r2", r2);
  bw->callback([&] { rc = cmd_bergman_weight(r1, r2); });
  auto* bc = bg->add_subcommand("cup", "alpha^a beta^b cup Delta_M");
  bc->add_option("--alpha", alphas);
  bc->add_option("--beta", betas);
  bc->callback([&] { rc = cmd_bergman_cup(alphas, betas); });
  bg->add_subcommand("deg-mu", "deg(alpha^(d-r) beta^r cup Delta_M) against mu^r")->callback([&] {
    rc = cmd_bergman_degmu();
  });

  int kinser = 0;
  std::uint64_t budget = 2'000'000;
  auto* ig = app.add_subcommand("ingleton", "Ingleton (or Kinser) inequality violations over flats");
  ig->add_option("--kinser", kinser, "check Kinser's k-th inequality instead");
  ig->add_option("--budget", budget, "tuple budget for sampled Kinser checks");
  ig->callback([&] { rc = cmd_ingleton(kinser, budget); });

  std::string db_path, checks;
  int max_n = -1;
  std::size_t limit = 0;
  auto* sw = app.add_subcommand("sweep", "run property checks over a revlex database");
  sw->add_option("--db", db_path, "database file")->required();
  sw->add_option("--check", checks,
                 "comma list: charpoly,tutte,logconcave,balancing,mu-identity,fink,truncation");
  sw->add_option("--max-n", max_n, "only matroids on at most this many elements");
  sw->add_option("--limit", limit, "only the first N matroids");
  sw->callback([&] { rc = cmd_sweep(db_path, checks, max_n, limit); });

  int enum_n = 8;
  std::string enum_out;
  auto* en = app.add_subcommand("enumerate", "all matroids up to isomorphism, as a revlex database");
  en->add_option("--max-n", enum_n, "largest ground set");
  en->add_option("--out", enum_out, "output file (default stdout)");
  en->callback([&] { rc = cmd_enumerate(enum_n, enum_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
