#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

#include "CLI11.hpp"
#include "lagmat/antisym.hpp"
#include "lagmat/bridges.hpp"
#include "lagmat/examples.hpp"
#include "lagmat/homotopy.hpp"
#include "lagmat/io.hpp"
#include "lagmat/lagrangian.hpp"
#include "lagmat/tract_antisym.hpp"

namespace lagmat::cli {

using nlohmann::json;

namespace {

// Exit 1: the input is readable but fails an axiom or cannot be converted.
class Invalid : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exit 2: bad usage, or a request above the scale limits.
class Usage : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr std::size_t kMaxListedViolations = 100;

int max_n() {
  const char* env = std::getenv("LAGMAT_MAX_N");
  if (env == nullptr || *env == '\0') return 8;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 0 || v > kMaxHalfSize) throw Usage("LAGMAT_MAX_N must be an integer in [0, 32]");
  return static_cast<int>(v);
}

void guard_n(int n) {
  if (n > max_n())
    throw Usage("n = " + std::to_string(n) + " exceeds LAGMAT_MAX_N = " + std::to_string(max_n()));
}

int instance_n(const Instance& x) {
  struct Visitor {
    int operator()(const SetFamilyFile& f) const { return f.n; }
    int operator()(const MatroidFile& m) const { return m.n; }
    int operator()(const RGPFunction& p) const { return p.n(); }
    int operator()(const FCircuitSet& c) const { return c.n(); }
    int operator()(const FieldMatrix& m) const { return m.rows(); }
  };
  return std::visit(Visitor{}, x);
}

Instance load(const std::string& path) {
  Instance x = read_instance(path);
  guard_n(instance_n(x));
  return x;
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw SchemaError("cannot write " + path);
  file << text;
}

std::string set_text(const ESubset& s) { return s.to_string(); }

json set_list(const std::vector<ESubset>& sets) {
  json out = json::array();
  for (const ESubset& s : sets) out.push_back(s.to_string());
  return out;
}

template <class F>
auto invalid_on_error(F&& f) {
  try {
    return f();
  } catch (const CapacityError& e) {
    throw Usage(e.what());
  } catch (const std::invalid_argument& e) {
    throw Invalid(e.what());
  }
}

RGPFunction normalized_at_least_basis(const RGPFunction& phi) {
  for (std::size_t k = 0; k < phi.domain().size(); ++k) {
    if (phi.values()[k].is_zero()) continue;
    const TractElement scale = phi.values()[k].inverse();
    RGPFunction out(phi.n(), phi.tract());
    for (std::size_t j = 0; j < phi.domain().size(); ++j) out.set(phi.domain()[j], phi.values()[j] * scale);
    return out;
  }
  return phi;
}

// ---- check ----------------------------------------------------------------

json check_instance(const Instance& x, RelationMode mode, bool& ok) {
  json r;
  r["kind"] = to_string(kind_of(x));
  const InstanceKind kind = kind_of(x);
  if (const auto* f = std::get_if<SetFamilyFile>(&x)) {
    if (kind == InstanceKind::Bases) {
      bool members = true;
      for (const ESubset& b : f->sets)
        if (b.classify() == SetKind::Neither) {
          members = false;
          r["failure"] = set_text(b) + " is neither a transversal nor an almost-transversal";
        }
      if (members) {
        const BasisAxiomReport a = check_basis_axioms(f->n, f->sets);
        r["axioms"] = {{"B1", a.b1}, {"B2", a.b2}, {"Exch", a.exch}};
        ok = a.ok();
        if (!ok) r["failure"] = a.failure();
      } else {
        ok = false;
      }
    } else if (kind == InstanceKind::Circuits) {
      bool members = true;
      for (const ESubset& c : f->sets)
        if (c.skew_pair_count() > 1) {
          members = false;
          r["failure"] = set_text(c) + " contains two skew pairs";
        }
      if (members) {
        const CircuitAxiomReport a = check_circuit_axioms(CircuitFamily::make(f->n, f->sets));
        r["axioms"] = {{"C1", a.c1}, {"C2", a.c2}, {"Orth", a.orth}, {"Max", a.max}};
        ok = a.ok();
        if (!ok) r["failure"] = a.failure;
      } else {
        ok = false;
      }
    } else if (kind == InstanceKind::Symmetric) {
      ok = !f->sets.empty();
      if (!ok) r["failure"] = "no bases";
      for (const ESubset& b : f->sets)
        if (ok && b.classify() != SetKind::Transversal) {
          ok = false;
          r["failure"] = set_text(b) + " is not a transversal";
        }
      if (ok) {
        if (auto w = check_sea(f->n, f->sets)) {
          ok = false;
          r["failure"] = "symmetric exchange fails";
          r["witness"] = {{"B1", set_text(w->b1)}, {"B2", set_text(w->b2)}, {"x", w->x.to_string()}};
        }
      }
      if (ok) r["even"] = SymmetricMatroid(f->n, f->sets).is_even();
    } else {
      const GaussoidReport g = check_gaussoid(f->n, f->sets);
      r["axioms"] = {{"members", g.members}, {"allowable", g.allowable}, {"edge_compatible", g.compatible}};
      ok = g.ok();
      if (!ok) r["failure"] = g.failure;
    }
  } else if (const auto* m = std::get_if<MatroidFile>(&x)) {
    const ExchangeReport e = check_basis_exchange(m->n, m->bases);
    ok = e.ok;
    if (!ok) {
      r["failure"] = "basis exchange fails";
      if (e.witness)
        r["witness"] = {{"B", mask_to_string(e.witness->b)}, {"B'", mask_to_string(e.witness->b_prime)}, {"e", e.witness->e}};
    }
  } else if (const auto* phi = std::get_if<RGPFunction>(&x)) {
    r["mode"] = to_string(mode);
    r["tract"] = phi->tract().tag();
    if (phi->trivial()) {
      ok = false;
      r["failure"] = "identically zero";
      return r;
    }
    const SymReport sym = check_sym(*phi);
    r["sym"] = sym.ok;
    if (!sym.ok) r["sym_witness"] = {set_text(sym.witness->first), set_text(sym.witness->second)};
    const RelationReport rel = check_rgp(*phi, mode);
    r["relations_checked"] = rel.checked;
    r["violation_count"] = rel.violations.size();
    json list = json::array();
    for (std::size_t k = 0; k < rel.violations.size() && k < kMaxListedViolations; ++k) {
      const RelationViolation& v = rel.violations[k];
      list.push_back({{"S", set_text(v.s)}, {"T", set_text(v.t)}, {"terms", (v.s - v.t).size()}, {"sum", v.sum.to_string()}});
    }
    r["violations"] = list;
    ok = sym.ok && rel.ok;
  } else if (const auto* c = std::get_if<FCircuitSet>(&x)) {
    r["tract"] = c->tract().tag();
    const FCircuitReport f = check_fcircuit_set(*c);
    r["axioms"] = {{"supports", f.prepared}, {"orthogonality", f.orth}, {"maximality", f.max}};
    ok = f.ok();
    if (!ok) r["failure"] = f.failure;
  } else {
    const FieldMatrix& mat = std::get<FieldMatrix>(x);
    r["field"] = mat.field().tag();
    try {
      ok = is_lagrangian(mat);
      r["lagrangian"] = ok;
      if (!ok) r["failure"] = "row space is not isotropic";
    } catch (const NotLagrangian& e) {
      ok = false;
      r["lagrangian"] = false;
      r["failure"] = e.what();
    }
    if (ok) {
      const RGPFunction phi = plucker(LagrangianWitness::verify(mat));
      const RelationReport rel = check_rgp(phi, mode);
      r["relations_checked"] = rel.checked;
      r["minors_pass"] = rel.ok && check_sym(phi).ok;
      ok = ok && r["minors_pass"].get<bool>();
    }
  }
  return r;
}

int cmd_check(const std::string& path, const std::string& kind_flag, const std::string& mode_flag, std::ostream& out) {
  const Instance x = load(path);
  if (!kind_flag.empty() && parse_kind(kind_flag) != kind_of(x))
    throw Usage("file holds kind \"" + std::string(to_string(kind_of(x))) + "\", not \"" + kind_flag + "\"");
  RelationMode mode = RelationMode::Full;
  if (mode_flag == "weak") mode = RelationMode::Weak;
  else if (mode_flag == "three-term") mode = RelationMode::ThreeTerm;
  else if (mode_flag != "full") throw Usage("unknown mode \"" + mode_flag + "\"");
  bool ok = false;
  json r = invalid_on_error([&] { return check_instance(x, mode, ok); });
  r["ok"] = ok;
  out << dump(r);
  return ok ? 0 : 1;
}

// ---- convert --------------------------------------------------------------

AntisymmetricMatroid as_antisymmetric(const Instance& x) {
  return invalid_on_error([&]() -> AntisymmetricMatroid {
    if (const auto* f = std::get_if<SetFamilyFile>(&x)) {
      switch (f->kind) {
        case InstanceKind::Bases: return AntisymmetricMatroid(f->n, f->sets);
        case InstanceKind::Circuits: return bases_from_circuits(CircuitFamily::make(f->n, f->sets));
        case InstanceKind::Symmetric: {
          const SymmetricMatroid s(f->n, f->sets);
          if (s.is_even()) return antisym_extension_even(s);
          const auto all = extend_symmetric(s);
          if (all.size() != 1)
            throw Invalid("symmetric matroid has " + std::to_string(all.size()) + " antisymmetric extensions");
          return all.front();
        }
        default: throw Usage("a gaussoid does not determine an antisymmetric matroid");
      }
    }
    if (const auto* m = std::get_if<MatroidFile>(&x)) return ant_of_matroid(Matroid(m->n, m->bases));
    if (const auto* phi = std::get_if<RGPFunction>(&x)) {
      if (phi->trivial()) throw Invalid("identically zero");
      return underlying(*phi);
    }
    if (const auto* c = std::get_if<FCircuitSet>(&x)) return bases_from_circuits(CircuitFamily::make(c->n(), c->supports()));
    return underlying(plucker(LagrangianWitness::verify(std::get<FieldMatrix>(x))));
  });
}

Instance convert(const Instance& x, InstanceKind to) {
  const InstanceKind from = kind_of(x);
  return invalid_on_error([&]() -> Instance {
    switch (to) {
      case InstanceKind::Bases: {
        const AntisymmetricMatroid m = as_antisymmetric(x);
        return family_file(InstanceKind::Bases, m.n(), m.bases());
      }
      case InstanceKind::Circuits: {
        if (from == InstanceKind::FCircuits) {
          const auto& c = std::get<FCircuitSet>(x);
          return family_file(InstanceKind::Circuits, c.n(), c.supports());
        }
        const CircuitFamily c = circuits_from_bases(as_antisymmetric(x));
        return family_file(InstanceKind::Circuits, c.n, c.circuits);
      }
      case InstanceKind::Rgp:
        if (from == InstanceKind::Matrix)
          return normalized_at_least_basis(plucker(LagrangianWitness::verify(std::get<FieldMatrix>(x))));
        if (from == InstanceKind::FCircuits) return normalized_at_least_basis(rgp_from_circuit_set(std::get<FCircuitSet>(x)));
        if (from == InstanceKind::Rgp) return normalized_at_least_basis(std::get<RGPFunction>(x));
        break;
      case InstanceKind::FCircuits:
        // The circuits of the row space W are the stars of the minimal supports of W.
        if (from == InstanceKind::Matrix) return circuit_vectors(LagrangianWitness::verify(std::get<FieldMatrix>(x))).star();
        if (from == InstanceKind::Rgp) return circuit_set_from_rgp(std::get<RGPFunction>(x));
        if (from == InstanceKind::FCircuits) return std::get<FCircuitSet>(x);
        break;
      case InstanceKind::Matrix:
        if (from == InstanceKind::Rgp) {
          const auto& phi = std::get<RGPFunction>(x);
          if (!phi.tract().is_field()) throw Usage("matrices need coefficients in GF(p) or Q");
          return reconstruct(phi).matrix();
        }
        if (from == InstanceKind::Matrix) return row_reduce(LagrangianWitness::verify(std::get<FieldMatrix>(x)).matrix());
        break;
      case InstanceKind::Symmetric: {
        const SymmetricMatroid s = restrict_transversal(as_antisymmetric(x));
        return family_file(InstanceKind::Symmetric, s.n(), s.bases());
      }
      case InstanceKind::Gaussoid: {
        const Gaussoid g = gaussoid_from_antisym(as_antisymmetric(x));
        return family_file(InstanceKind::Gaussoid, g.n(), g.members());
      }
      case InstanceKind::Matroid: break;
    }
    throw Usage(std::string("cannot convert ") + to_string(from) + " to " + to_string(to));
  });
}

int cmd_convert(const std::string& path, const std::string& to, const std::string& output, std::ostream& out) {
  const Instance x = load(path);
  const Instance y = convert(x, parse_kind(to));
  write_output(serialize(y), output, out);
  return 0;
}

// ---- enumerate ------------------------------------------------------------

int cmd_enumerate(int n, const std::string& family, bool exhaustive, long sample, std::uint64_t seed, bool allow_large,
                  const std::string& output, std::ostream& out) {
  if (exhaustive == (sample >= 0)) throw Usage("give exactly one of --exhaustive and --sample");
  if (n < 0) throw Usage("n must be nonnegative");
  guard_n(n);
  std::vector<json> instances;
  if (family == "antisym") {
    const int limit = allow_large ? 3 : 2;
    if (n > limit) throw Usage("antisymmetric enumeration at n = " + std::to_string(n) + " is refused (limit " +
                               std::to_string(limit) + (allow_large ? ")" : "; --allow-large raises it to 3)"));
    for (const AntisymmetricMatroid& m : enumerate_antisymmetric(n))
      instances.push_back(to_json(family_file(InstanceKind::Bases, n, m.bases())));
  } else if (family == "symmetric" || family == "even") {
    const int limit = allow_large ? 4 : 3;
    if (n > limit) throw Usage("symmetric enumeration at n = " + std::to_string(n) + " is refused (limit " +
                               std::to_string(limit) + (allow_large ? ")" : "; --allow-large raises it to 4)"));
    for (const SymmetricMatroid& s : family == "even" ? enumerate_even(n) : enumerate_symmetric(n))
      instances.push_back(to_json(family_file(InstanceKind::Symmetric, n, s.bases())));
  } else {
    throw Usage("unknown family \"" + family + "\"");
  }
  json r;
  r["schema"] = kSchemaVersion;
  r["kind"] = "enumeration";
  r["family"] = family;
  r["n"] = n;
  r["total"] = instances.size();
  if (!exhaustive) {
    // A seeded sample without replacement, reported in enumeration order.
    std::vector<std::size_t> order(instances.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    order.resize(std::min(order.size(), static_cast<std::size_t>(sample)));
    std::sort(order.begin(), order.end());
    std::vector<json> picked;
    for (std::size_t k : order) picked.push_back(instances[k]);
    instances = std::move(picked);
    r["seed"] = seed;
  }
  r["mode"] = exhaustive ? "exhaustive" : "sample";
  r["count"] = instances.size();
  r["instances"] = instances;
  write_output(dump(r), output, out);
  return 0;
}

// ---- random-matrix / homotopy / graph / examples ---------------------------

int cmd_random_matrix(int n, const std::string& field, std::uint64_t seed, const std::string& output, std::ostream& out) {
  if (n < 1) throw Usage("n must be positive");
  guard_n(n);
  TractId t;
  try {
    t = TractId::parse(field);
  } catch (const std::exception& e) {
    throw Usage(e.what());
  }
  if (!t.is_field()) throw Usage("unsupported field \"" + field + "\"; use GF(p) or Q");
  std::mt19937_64 rng(seed);
  write_output(serialize(random_symmetric_embedding(n, t, rng)), output, out);
  return 0;
}

int cmd_homotopy(const std::string& path, int max_weight, int max_length, std::ostream& out) {
  const AntisymmetricMatroid m = as_antisymmetric(load(path));
  const BasisGraphs g = build_graphs(m);
  CycleOptions options;
  options.max_weight = max_weight;
  options.max_length = max_length;
  const CycleReport c = invalid_on_error([&] { return short_cycle_generation(g.transversal, options); });
  json r;
  r["kind"] = "homotopy";
  r["n"] = m.n();
  r["max_weight"] = max_weight;
  r["max_length"] = max_length;
  r["vertices"] = c.vertex_count;
  r["edges"] = c.edge_count;
  r["cyclomatic_number"] = c.cyclomatic;
  r["cycles_enumerated"] = c.cycles;
  r["cycles_used"] = c.used;
  r["rank"] = c.rank;
  json factors = json::array();
  for (const mpz_class& d : c.invariant_factors) factors.push_back(d.get_str());
  r["invariant_factors"] = factors;
  r["verdict"] = to_string(c.verdict);
  if (!c.note.empty()) r["note"] = c.note;
  r["ok"] = c.passed();
  out << dump(r);
  return c.passed() ? 0 : 1;
}

int cmd_graph(const std::string& path, const std::string& output, std::ostream& out) {
  const AntisymmetricMatroid m = as_antisymmetric(load(path));
  const BasisGraphs g = build_graphs(m);
  json r;
  r["schema"] = kSchemaVersion;
  r["kind"] = "graphs";
  r["n"] = m.n();
  json edges = json::array();
  for (const WeightedEdge& e : g.transversal.edges)
    edges.push_back({{"u", set_text(g.transversal.vertices[static_cast<std::size_t>(e.u)])},
                     {"v", set_text(g.transversal.vertices[static_cast<std::size_t>(e.v)])},
                     {"weight", e.weight}});
  r["transversal_graph"] = {{"vertices", set_list(g.transversal.vertices)}, {"edges", edges}};
  json full_edges = json::array();
  for (std::size_t a = 0; a < g.full.vertices.size(); ++a)
    for (int b : g.full.neighbours[a])
      if (static_cast<std::size_t>(b) > a)
        full_edges.push_back({{"u", set_text(g.full.vertices[a])}, {"v", set_text(g.full.vertices[static_cast<std::size_t>(b)])}});
  r["basis_graph"] = {{"vertices", set_list(g.full.vertices)}, {"edges", full_edges}, {"connected", is_connected(g.full)}};
  write_output(dump(r), output, out);
  return 0;
}

int cmd_examples(const std::string& dir, std::ostream& out) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw SchemaError("cannot create " + dir);
  json written = json::array();
  for (const examples::NamedInstance& e : examples::all()) {
    const std::string file = (std::filesystem::path(dir) / (e.name + ".json")).string();
    write_output(serialize(e.instance), file, out);
    written.push_back(e.name + ".json");
  }
  out << dump(json{{"kind", "examples"}, {"directory", dir}, {"files", written}});
  return 0;
}

int report_error(std::ostream& out, std::ostream& err, int code, const std::string& what) {
  err << "lagmat: " << what << "\n";
  out << dump(json{{"ok", false}, {"error", what}, {"exit", code}});
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Antisymmetric matroids and Lagrangian subspaces", "lagmat"};
  app.require_subcommand(1);

  std::string path, kind, mode = "full", to, output, family, field;
  int n = -1, max_weight = 8, max_length = 8;
  long sample = -1;
  std::uint64_t seed = 0;
  bool exhaustive = false, allow_large = false;

  CLI::App* check = app.add_subcommand("check", "Check the axioms of an instance file");
  check->add_option("path", path, "Instance file")->required();
  check->add_option("--kind", kind, "Expected kind");
  check->add_option("--mode", mode, "Relations to check: full, weak or three-term");

  CLI::App* conv = app.add_subcommand("convert", "Convert between instance kinds");
  conv->add_option("path", path, "Instance file")->required();
  conv->add_option("--to", to, "Target kind")->required();
  conv->add_option("-o,--output", output, "Output file (default stdout)");

  CLI::App* en = app.add_subcommand("enumerate", "List every instance of a family");
  en->add_option("--n", n, "Half size of the ground set")->required();
  en->add_option("--kind", family, "antisym, symmetric or even")->required();
  en->add_flag("--exhaustive", exhaustive, "Emit every instance");
  en->add_option("--sample", sample, "Emit a seeded sample of this size");
  en->add_option("--seed", seed, "Seed for --sample");
  en->add_flag("--allow-large", allow_large, "Raise the size limit by one");
  en->add_option("-o,--output", output, "Output file (default stdout)");

  CLI::App* rm = app.add_subcommand("random-matrix", "Random [I | Sigma] with Sigma symmetric");
  rm->add_option("--n", n, "Half size")->required();
  rm->add_option("--field", field, "GF(p) or Q")->required();
  rm->add_option("--seed", seed, "Seed")->required();
  rm->add_option("-o,--output", output, "Output file (default stdout)");

  CLI::App* ho = app.add_subcommand("homotopy", "Check that short cycles generate the cycle lattice");
  ho->add_option("path", path, "Instance file")->required();
  ho->add_option("--max-weight", max_weight, "Largest cycle weight enumerated");
  ho->add_option("--max-length", max_length, "Longest cycle enumerated");

  CLI::App* gr = app.add_subcommand("graph", "Export both basis graphs as edge lists");
  gr->add_option("path", path, "Instance file")->required();
  gr->add_option("-o,--output", output, "Output file (default stdout)");

  std::string dir = "fixtures";
  CLI::App* ex = app.add_subcommand("examples", "Write the worked instances as fixture files");
  ex->add_option("--out", dir, "Directory");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    return report_error(out, err, 2, e.what());
  }

  try {
    if (check->parsed()) return cmd_check(path, kind, mode, out);
    if (conv->parsed()) return cmd_convert(path, to, output, out);
    if (en->parsed()) return cmd_enumerate(n, family, exhaustive, sample, seed, allow_large, output, out);
    if (rm->parsed()) return cmd_random_matrix(n, field, seed, output, out);
    if (ho->parsed()) return cmd_homotopy(path, max_weight, max_length, out);
    if (gr->parsed()) return cmd_graph(path, output, out);
    if (ex->parsed()) return cmd_examples(dir, out);
  } catch (const Invalid& e) {
    return report_error(out, err, 1, e.what());
  } catch (const Usage& e) {
    return report_error(out, err, 2, e.what());
  } catch (const SchemaError& e) {
    return report_error(out, err, 2, e.what());
  } catch (const CapacityError& e) {
    return report_error(out, err, 2, e.what());
  } catch (const std::invalid_argument& e) {
    return report_error(out, err, 1, e.what());
  }
  return report_error(out, err, 2, "no subcommand");
}

}  // namespace lagmat::cli
