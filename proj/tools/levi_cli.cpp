// levi: Betti tables and classification verdicts for Levi graphs of curve
// arrangements.
//
//   levi gen quasi-pencil --k 4 | levi betti --char 2
//   levi classify arrangement.json --format json
//   levi corpus

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "levi/corpus.hpp"
#include "levi/io.hpp"

namespace {

enum ExitCode { kOk = 0, kInput = 2, kCap = 3, kMismatch = 4, kUnknownFamily = 5, kZeroIdeal = 6 };

struct UnknownFamily : levi::Error {
  using levi::Error::Error;
};

struct RunConfig {
  std::uint32_t p = 2;
  unsigned threads = 1;
  std::string format = "diagram";
  int cap_vertices = 16;
  std::size_t cap_lattice = std::size_t{1} << 14;
  std::size_t cap_faces = levi::kDefaultFaceCap;
  std::string out;

  levi::ResolutionOptions resolution() const {
    levi::ResolutionOptions r;
    r.hochster_vertex_cap = cap_vertices;
    r.lattice_cap = cap_lattice;
    r.face_cap = cap_faces;
    r.threads = threads;
    return r;
  }
  bool json() const { return format == "json"; }
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw levi::InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out);
  if (!out) throw levi::InputError("cannot write " + cfg.out);
  out << text;
}

std::string yes_no(bool b) { return b ? "YES" : "NO"; }

std::string face_text(levi::Face f, const std::vector<std::string>& labels) {
  std::string s = "{";
  for (int v = 0; v < static_cast<int>(labels.size()); ++v) {
    if ((f >> v) & 1U) s += (s.size() > 1 ? "," : "") + labels[v];
  }
  return s + "}";
}

std::string order_text(const levi::VertexOrder& o) {
  std::string s;
  for (std::size_t i = 0; i < o.size(); ++i) {
    s += (i ? " " : "") + std::string("x") + std::to_string(o.x[i] + 1) + "y" + std::to_string(o.y[i] + 1);
  }
  return s;
}

// --- subcommands --------------------------------------------------------------

std::string cmd_gen(const std::string& family, int k, int q) {
  if (family == "pencil") return levi::dump_arrangement(levi::gen_pencil(k)) + "\n";
  if (family == "quasi-pencil") return levi::dump_arrangement(levi::gen_quasi_pencil(k)) + "\n";
  if (family == "generic") return levi::dump_arrangement(levi::gen_generic_lines(k)) + "\n";
  if (family == "projective-plane") return levi::dump_arrangement(levi::gen_projective_plane(q)) + "\n";
  if (family == "conic-6-5") return levi::dump_arrangement(levi::gen_conic_6_5()) + "\n";
  throw UnknownFamily("unknown family \"" + family +
                      "\" (pencil, quasi-pencil, generic, projective-plane, conic-6-5)");
}

std::string cmd_betti(const levi::ParsedInput& in, const RunConfig& cfg) {
  const levi::PrimeField field(cfg.p);
  if (in.graph.edges().empty()) throw levi::ZeroIdeal();
  const levi::SimplicialComplex delta = levi::independence_complex(in.graph);
  const levi::BettiTable t = levi::betti_squarefree(delta, field, cfg.resolution());
  const levi::HomologicalSummary s = levi::summarize(t, delta);
  if (cfg.json()) {
    levi::Json j{{"characteristic", cfg.p}, {"betti", levi::to_json(t)}, {"summary", levi::to_json(s)}};
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << t.to_diagram() << "\n";
  os << "pd(S/I)         " << s.pd << "\n";
  os << "reg(S/I)        " << s.reg_quotient << "\n";
  os << "reg(I)          " << s.reg_ideal << "\n";
  os << "dim(S/I)        " << s.dim << "\n";
  os << "depth(S/I)      " << s.depth << "\n";
  os << "codim           " << s.codim << "\n";
  os << "Cohen-Macaulay  " << yes_no(s.is_cm) << "\n";
  return os.str();
}

std::string cmd_classify(const levi::ParsedInput& in, const RunConfig& cfg) {
  const levi::ClassificationVerdict v = levi::classify(in.graph);
  if (cfg.json()) return levi::to_json(v).dump(2) + "\n";
  const auto labels = in.graph.labels();
  std::ostringstream os;
  if (!v.isolated.empty()) {
    os << "isolated vertices set aside:";
    for (const auto& l : v.isolated) os << " " << l;
    os << "\n";
  }
  os << "Cohen-Macaulay: " << yes_no(v.is_cm);
  if (v.ordering.order) {
    os << " (ordering " << order_text(*v.ordering.order) << ")\n";
  } else {
    os << " (" << v.ordering.witness << ")\n";
  }
  os << "cross-free pure order: " << (v.cross_free ? order_text(*v.cross_free) : "none") << "\n";
  os << "Buchsbaum: " << yes_no(v.is_buchsbaum) << "\n";
  os << "sequentially Cohen-Macaulay: " << yes_no(v.is_scm);
  if (v.shelling.shellable) {
    os << " (shelling certificate";
    for (levi::Face f : v.shelling.shelling) os << " " << face_text(f, labels);
    os << ")\n";
  } else {
    os << " (" << v.shelling.obstruction << ")\n";
  }
  os << "note: " << v.note << "\n";
  return os.str();
}

std::string cmd_bounds(const levi::ParsedInput& in, const RunConfig& cfg) {
  const levi::BoundReport r = in.arrangement ? levi::bounds_report(*in.arrangement) : levi::bounds_report(in.graph);
  std::vector<levi::BoundCheck> checks;
  std::string skipped;
  if (in.graph.vertex_count() <= cfg.cap_vertices && !in.graph.edges().empty()) {
    const levi::SimplicialComplex delta = levi::independence_complex(in.graph);
    const levi::HomologicalSummary s =
        levi::summarize(levi::betti_squarefree(delta, levi::PrimeField(cfg.p), cfg.resolution()), delta);
    checks = levi::bounds_verify(r, s, r.matching_number);
  } else {
    skipped = in.graph.edges().empty() ? "zero ideal"
                                       : std::to_string(in.graph.vertex_count()) + " vertices exceed cap " +
                                             std::to_string(cfg.cap_vertices) + "; bounds only";
  }
  if (cfg.json()) {
    levi::Json j{{"bounds", levi::to_json(r)}};
    levi::Json cs = levi::Json::array();
    for (const auto& c : checks) cs.push_back(levi::to_json(c));
    j["checks"] = std::move(cs);
    if (!skipped.empty()) j["skipped"] = skipped;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "s = " << r.s << ", k = " << r.k << ", n = " << r.n;
  if (in.arrangement) os << ", d = " << r.d << ", t_k = 0: " << yes_no(r.tk_zero);
  os << "\n";
  if (in.arrangement) os << "pd interval        [" << r.pd_lower << ", " << levi::to_string(r.pd_upper) << "]\n";
  os << "pd upper (degree)  " << levi::to_string(r.dhs_upper) << " (max degree " << r.max_degree << ")\n";
  os << "matching number    " << r.matching_number << "\n";
  os << "reg(I) <=          " << r.reg_upper_matching << " (matching), " << r.reg_upper_global << " (k + 1)\n";
  os << "reg(I^q) <=        2q + " << r.k - 1 << (r.power_bound_applicable ? "" : " (requires k <= s: not applicable)")
     << "\n";
  os << "reg(Rees)          " << r.rees_reg << " (reported, not computed)\n";
  if (!skipped.empty()) os << "checks skipped: " << skipped << "\n";
  for (const auto& c : checks) {
    os << (c.applicable ? (c.pass ? "PASS " : "FAIL ") : "n/a  ") << c.name << ": " << c.detail << "\n";
  }
  return os.str();
}

std::string cmd_power(const levi::ParsedInput& in, int q, const RunConfig& cfg) {
  if (in.graph.edges().empty()) throw levi::ZeroIdeal();
  if (q < 1) throw levi::InputError("--q must be at least 1");
  const levi::PowerBoundResult p = levi::power_bound_check(in.graph, q, levi::PrimeField(cfg.p), cfg.resolution());
  const bool applicable = in.graph.y_count() <= in.graph.x_count();
  if (cfg.json()) {
    levi::Json j{{"q", p.q}, {"reg", p.reg}, {"bound", p.bound}, {"pass", p.pass}, {"applicable", applicable}};
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "reg(I^" << p.q << ") = " << p.reg << "\n";
  os << "bound 2q + k - 1 = " << p.bound << (applicable ? "" : " (requires k <= s: not applicable)") << "\n";
  os << (p.pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

int cmd_corpus(const RunConfig& cfg) {
  levi::corpus::CorpusOptions opt;
  opt.threads = cfg.threads;
  levi::Json all = levi::Json::array();
  bool ok = true;
  std::string text;
  for (const auto& r : levi::corpus::run(opt)) {
    ok = ok && r.pass;
    all.push_back(levi::Json{{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
    text += std::string(r.pass ? "PASS" : "FAIL") + "  [" + (r.id < 10 ? " " : "") + std::to_string(r.id) + "] " +
            r.title + "\n";
    if (!r.detail.empty()) text += "          " + r.detail + "\n";
  }
  emit(cfg, cfg.json() ? all.dump(2) + "\n" : text);
  return ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Betti tables and classification for Levi graphs of curve arrangements"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--char", cfg.p, "field characteristic (prime)");
  app.add_option("--threads", cfg.threads, "worker threads for Betti computations")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"diagram", "json"}));
  app.add_option("--cap-vertices", cfg.cap_vertices, "largest vertex count for Hochster enumeration")
      ->check(CLI::PositiveNumber);
  app.add_option("--cap-lattice", cfg.cap_lattice, "largest lcm lattice")->check(CLI::PositiveNumber);
  app.add_option("--cap-faces", cfg.cap_faces, "largest face list")->check(CLI::PositiveNumber);
  app.add_option("--out", cfg.out, "write output to this file");

  std::string family;
  int k = 4, q_plane = 2, q_power = 2;
  std::string input;
  auto* gen = app.add_subcommand("gen", "print a family member as arrangement JSON");
  gen->add_option("family", family, "pencil, quasi-pencil, generic, projective-plane, conic-6-5")->required();
  gen->add_option("--k", k, "number of lines");
  gen->add_option("--q", q_plane, "order of the projective plane (prime)");

  auto* betti = app.add_subcommand("betti", "graded Betti table of S/I(G)");
  auto* classify = app.add_subcommand("classify", "Cohen-Macaulay and sequentially Cohen-Macaulay verdicts");
  auto* bounds = app.add_subcommand("bounds", "projective dimension and regularity bounds");
  auto* power = app.add_subcommand("power", "regularity of a power of the edge ideal");
  power->add_option("--q", q_power, "exponent");
  for (auto* sub : {betti, classify, bounds, power}) {
    sub->add_option("input", input, "arrangement or graph JSON (default: stdin)");
  }
  app.add_subcommand("corpus", "run the acceptance corpus");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    (void)levi::PrimeField(cfg.p);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kInput;
  }

  try {
    if (*gen) {
      emit(cfg, cmd_gen(family, k, q_plane));
      return kOk;
    }
    if (app.got_subcommand("corpus")) return cmd_corpus(cfg);
    const levi::ParsedInput in = levi::parse_input(read_input(input));
    if (*betti) emit(cfg, cmd_betti(in, cfg));
    if (*classify) emit(cfg, cmd_classify(in, cfg));
    if (*bounds) emit(cfg, cmd_bounds(in, cfg));
    if (*power) emit(cfg, cmd_power(in, q_power, cfg));
    return kOk;
  } catch (const levi::ZeroIdeal& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kZeroIdeal;
  } catch (const levi::CapExceeded& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kCap;
  } catch (const UnknownFamily& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUnknownFamily;
  } catch (const levi::InputError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kInput;
  } catch (const levi::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kInput;
  }
}
