#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>

#include "holomatch/decompose.hpp"
#include "holomatch/errors.hpp"
#include "holomatch/fkt.hpp"
#include "holomatch/harness.hpp"
#include "holomatch/holant.hpp"
#include "holomatch/holographic.hpp"
#include "holomatch/io.hpp"
#include "holomatch/signature_algebra.hpp"

using Json = nlohmann::ordered_json;

namespace hm = holomatch;

namespace {

constexpr int kPass = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct Globals {
  std::uint64_t seed = 1;
  bool json = false;
  bool timing = false;
  unsigned cap = 12;
  std::uint64_t holant_cap = hm::kDefaultHolantCap;
};

Globals g_opts;

std::string str(const hm::Scalar& s) { return s.str(); }

void emit(const Json& j, const std::string& text) {
  if (g_opts.json)
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
}

// Prints the result and, for a violation, a single machine-readable witness line.
int finish(bool pass, Json j, const std::string& text, const std::string& witness = {}) {
  j["pass"] = pass;
  if (!pass && !witness.empty()) j["witness"] = witness;
  emit(j, text);
  if (!pass && !witness.empty() && !g_opts.json) std::cout << "WITNESS " << witness << '\n';
  return pass ? kPass : kViolation;
}

hm::Matchgate load_gate(const std::string& path) { return hm::io::parse_matchgate(hm::io::read_file(path)); }
hm::BooleanSignature load_sig(const std::string& path) { return hm::io::parse_signature(hm::io::read_file(path)); }
hm::Matrix load_matrix(const std::string& path) { return hm::io::parse_matrix(hm::io::read_file(path)); }

hm::MgiOptions mgi_options() {
  hm::MgiOptions o;
  o.exhaustive_cap = g_opts.cap;
  return o;
}

std::string positions_text(hm::Index mask, unsigned arity) {
  std::string out = "{";
  for (unsigned p : hm::positions_of(mask, arity)) out += (out.size() > 1 ? "," : "") + std::to_string(p);
  return out + "}";
}

Json report_json(const hm::HarnessReport& r) {
  Json j;
  j["check"] = r.check;
  j["claim"] = r.claim;
  j["pass"] = r.pass;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  Json w = Json::object();
  for (const auto& [k, v] : r.witness) w[k] = v;
  j["witness"] = w;
  if (g_opts.timing) j["seconds"] = r.seconds;
  return j;
}

int report(const hm::HarnessReport& r) {
  emit(report_json(r), hm::format_report(r, g_opts.timing));
  if (!r.pass && !g_opts.json) std::cout << "WITNESS check=" << r.check << " seed=" << r.seed << '\n';
  return r.pass ? kPass : kViolation;
}

int cmd_perfmatch(const std::string& path, const std::string& method) {
  const hm::Matchgate g = load_gate(path);
  Json j;
  std::ostringstream os;
  hm::Scalar brute, fkt;
  if (method != "fkt") {
    brute = hm::perfmatch_bruteforce(g);
    j["brute"] = str(brute);
    os << (method == "both" ? "brute " : "") << brute << '\n';
  }
  if (method != "brute") {
    fkt = hm::perfmatch_fkt(g);
    j["fkt"] = str(fkt);
    os << (method == "both" ? "fkt " : "") << fkt << '\n';
  }
  if (method != "both") return finish(true, j, os.str());
  const bool match = brute == fkt;
  os << "match " << (match ? "yes" : "no") << '\n';
  return finish(match, j, os.str(), "brute=" + str(brute) + " fkt=" + str(fkt));
}

int cmd_signature(const std::string& path) {
  const hm::BooleanSignature s = hm::signature(load_gate(path));
  Json j;
  j["arity"] = s.arity();
  Json e = Json::object();
  for (hm::Index a : s.support()) e[s.arity() ? hm::format_bits(a, s.arity()) : "-"] = str(s[a]);
  j["entries"] = e;
  return finish(true, j, hm::io::format_signature(s));
}

int cmd_mgi(const std::string& path) {
  const hm::BooleanSignature s = load_sig(path);
  const hm::MgiVerdict v = hm::check_mgi(s, mgi_options());
  Json j;
  j["checked"] = v.checked;
  std::ostringstream os;
  std::string witness;
  if (v.pass) {
    os << "pass (" << v.checked << " identities)\n";
  } else {
    witness = "alpha=" + hm::format_bits(v.alpha, s.arity()) + " P=" + positions_text(v.positions, s.arity()) +
              " residual=" + str(v.residual);
    os << "fail\n";
  }
  return finish(v.pass, j, os.str(), witness);
}

int cmd_parity(const std::string& path) {
  const hm::BooleanSignature s = load_sig(path);
  const hm::ParityVerdict v = hm::check_parity(s);
  static const char* kNames[] = {"zero", "even", "odd", "violated"};
  const char* name = kNames[static_cast<int>(v.kind)];
  Json j;
  j["kind"] = name;
  const bool pass = v.kind != hm::ParityKind::kViolated;
  const std::string witness = pass ? "" : "even=" + hm::format_bits(v.even_witness, s.arity()) +
                                              " odd=" + hm::format_bits(v.odd_witness, s.arity());
  return finish(pass, j, std::string(name) + '\n', witness);
}

Json matrix_json(const hm::Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(str(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

int cmd_matform(const std::string& path, unsigned block) {
  const hm::BooleanSignature s = load_sig(path);
  const hm::Matrix m = hm::matrix_form(hm::BlockView(s, block));
  Json j;
  j["matrix"] = matrix_json(m);
  return finish(true, j, hm::io::format_matrix(m));
}

int cmd_rank(const std::string& path, unsigned block) {
  const std::string text = hm::io::read_file(path);
  hm::Matrix m;
  if (text.find("rows") != std::string::npos) {
    m = hm::io::parse_matrix(text);
  } else {
    if (block == 0) throw CLI::ValidationError("--block", "required for a signature file");
    m = hm::matrix_form(hm::BlockView(hm::io::parse_signature(text), block));
  }
  const std::size_t rank = hm::exact_rank(m);
  Json j;
  j["rank"] = rank;
  return finish(true, j, std::to_string(rank) + '\n');
}

int cmd_detcheck(const std::string& path, unsigned block) {
  const hm::BooleanSignature s = load_sig(path);
  const hm::BlockView v(s, block);
  const hm::DetVerdict d = hm::check_det_identities(v);
  Json j;
  j["checked"] = d.checked;
  std::ostringstream w;
  if (!d.pass)
    w << "kind=" << d.kind << " alpha=" << hm::format_bits(d.alpha, s.arity()) << " i=" << d.i << " j=" << d.j
      << " s=" << d.s << " t=" << d.t << " det=" << d.det;
  return finish(d.pass, j, d.pass ? "pass (" + std::to_string(d.checked) + " determinants)\n" : "fail\n", w.str());
}

int cmd_minpair(const std::string& path, unsigned block, bool same_parity) {
  const hm::BooleanSignature s = load_sig(path);
  const auto p = hm::find_min_weight_pair(hm::BlockView(s, block), same_parity);
  Json j;
  if (!p) {
    j["pair"] = nullptr;
    return finish(true, j, "none\n");
  }
  j["sigma"] = hm::format_bits(p->sigma, block);
  j["tau"] = hm::format_bits(p->tau, block);
  j["weight"] = p->weight;
  return finish(true, j,
                "sigma " + hm::format_bits(p->sigma, block) + "\ntau " + hm::format_bits(p->tau, block) +
                    "\nweight " + std::to_string(p->weight) + '\n');
}

int cmd_transform(const std::string& fpath, const std::string& mpath) {
  const hm::DomainSignature f = hm::io::parse_domain_signature(hm::io::read_file(fpath));
  const hm::BooleanSignature s = hm::transform(f, hm::TransformMatrix(load_matrix(mpath)));
  Json j;
  j["signature"] = hm::io::format_signature(s);
  return finish(true, j, hm::io::format_signature(s));
}

int cmd_rightinv(const std::string& path) {
  const hm::Matrix inv = hm::right_inverse(hm::TransformMatrix(load_matrix(path)));
  Json j;
  j["matrix"] = matrix_json(inv);
  return finish(true, j, hm::io::format_matrix(inv));
}

int cmd_eq(unsigned q, unsigned n) {
  const hm::DomainSignature f = hm::equality(q, n);
  Json j;
  j["signature"] = hm::io::format_domain_signature(f);
  return finish(true, j, hm::io::format_domain_signature(f));
}

int cmd_decompose(const std::string& path, unsigned block) {
  const hm::BooleanSignature s = load_sig(path);
  hm::DecomposeOptions o;
  o.mgi = mgi_options();
  const hm::Decomposition d = hm::decompose(hm::BlockView(s, block), o);
  Json j;
  j["rank"] = d.rank;
  j["decomposition"] = hm::io::format_decomposition(d);
  return finish(true, j, hm::io::format_decomposition(d));
}

int cmd_reconstruct(const std::string& path) {
  const hm::BooleanSignature s = hm::reconstruct_all(hm::io::parse_decomposition(hm::io::read_file(path)));
  Json j;
  j["signature"] = hm::io::format_signature(s);
  return finish(true, j, hm::io::format_signature(s));
}

std::vector<hm::Matchgate> grid_gates(const hm::io::LoadedGrid& lg) {
  std::vector<hm::Matchgate> gates;
  for (std::size_t k = 0; k < lg.gates.size(); ++k) {
    if (!lg.gates[k]) throw hm::PreconditionError("vertex " + lg.grid.vertex(k).id + " has no gate line");
    gates.push_back(*lg.gates[k]);
  }
  return gates;
}

int cmd_holant(const std::string& path, const std::string& method) {
  const hm::io::LoadedGrid lg = hm::io::load_grid(path);
  Json j;
  std::ostringstream os;
  hm::Scalar brute, fkt;
  if (method != "fkt") {
    brute = hm::holant_bruteforce(lg.grid, g_opts.holant_cap);
    j["brute"] = str(brute);
    os << (method == "both" ? "brute " : "") << brute << '\n';
  }
  if (method != "brute") {
    fkt = hm::holant_fkt(lg.grid, grid_gates(lg));
    j["fkt"] = str(fkt);
    os << (method == "both" ? "fkt " : "") << fkt << '\n';
  }
  if (method != "both") return finish(true, j, os.str());
  const bool match = brute == fkt;
  os << "match " << (match ? "yes" : "no") << '\n';
  return finish(match, j, os.str(), "brute=" + str(brute) + " fkt=" + str(fkt));
}

int cmd_verify_holant(const std::string& gpath, const std::string& mpath, const std::string& inv_path) {
  const hm::io::LoadedGrid lg = hm::io::load_grid(gpath);
  const hm::TransformMatrix m(load_matrix(mpath));
  const hm::HolantTheoremVerdict v = inv_path.empty()
                                         ? hm::verify_holant_theorem(lg.grid, m, g_opts.holant_cap)
                                         : hm::verify_holant_theorem(lg.grid, m, load_matrix(inv_path), g_opts.holant_cap);
  Json j;
  j["lhs"] = str(v.lhs);
  j["rhs"] = str(v.rhs);
  j["scale"] = str(v.scale);
  std::ostringstream os;
  os << "lhs " << v.lhs << "\nrhs " << v.rhs << '\n';
  if (!v.scale.is_one()) os << "scale " << v.scale << '\n';
  return finish(v.pass, j, os.str(), "lhs=" + str(v.lhs) + " rhs=" + str(v.rhs));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"holomatch: matchgates, holographic transformations and Holant sums in exact arithmetic"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.fallthrough();
  app.add_option("--seed", g_opts.seed, "RNG seed for randomized checks");
  app.add_flag("--json", g_opts.json, "Machine-readable output");
  app.add_flag("--timing", g_opts.timing, "Include wall-clock durations in reports");
  app.add_option("--cap", g_opts.cap, "Largest arity swept exhaustively by MGI checks");
  app.add_option("--holant-cap", g_opts.holant_cap, "Largest assignment count for brute-force Holant sums");

  std::string file, file2, file3, method = "both";
  unsigned block = 0, q = 0, n = 0;
  std::uint64_t trials = 0;
  bool same_parity = false, control = false;
  std::function<int()> run;

  auto with_file = [&](CLI::App* sub, const char* what) { sub->add_option("file", file, what)->required()->check(CLI::ExistingFile); };
  auto with_block = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--block,-l", block, "Block size l")->check(CLI::Range(1U, 16U));
    if (required) o->required();
  };

  auto* perfmatch = app.add_subcommand("perfmatch", "PerfMatch of a matchgate file");
  with_file(perfmatch, "Matchgate file");
  perfmatch->add_option("--method", method)->check(CLI::IsMember({"brute", "fkt", "both"}));
  perfmatch->callback([&] { run = [&] { return cmd_perfmatch(file, method); }; });

  auto* sig = app.add_subcommand("signature", "Signature of a matchgate file");
  with_file(sig, "Matchgate file");
  sig->callback([&] { run = [&] { return cmd_signature(file); }; });

  auto* mgi = app.add_subcommand("mgi", "Check the matchgate identities");
  with_file(mgi, "Signature file");
  mgi->callback([&] { run = [&] { return cmd_mgi(file); }; });

  auto* par = app.add_subcommand("parity", "Check the parity condition");
  with_file(par, "Signature file");
  par->callback([&] { run = [&] { return cmd_parity(file); }; });

  auto* matform = app.add_subcommand("matform", "Matrix form with rows indexed by the first block");
  with_file(matform, "Signature file");
  with_block(matform, true);
  matform->callback([&] { run = [&] { return cmd_matform(file, block); }; });

  auto* rank = app.add_subcommand("rank", "Exact rank of a matrix file or of a signature's matrix form");
  with_file(rank, "Matrix or signature file");
  with_block(rank, false);
  rank->callback([&] { run = [&] { return cmd_rank(file, block); }; });

  auto* det = app.add_subcommand("detcheck", "Check the 2x2 determinant identities (n >= 3 blocks)");
  with_file(det, "Signature file");
  with_block(det, true);
  det->callback([&] { run = [&] { return cmd_detcheck(file, block); }; });

  auto* minpair = app.add_subcommand("minpair", "Independent row pair of least Hamming distance");
  with_file(minpair, "Signature file");
  with_block(minpair, true);
  minpair->add_flag("--same-parity", same_parity, "Only pairs whose weights share parity");
  minpair->callback([&] { run = [&] { return cmd_minpair(file, block, same_parity); }; });

  auto* transform = app.add_subcommand("transform", "Apply M to every argument of a domain signature");
  transform->add_option("signature", file, "Domain signature file")->required()->check(CLI::ExistingFile);
  transform->add_option("matrix", file2, "q x 2^l matrix file")->required()->check(CLI::ExistingFile);
  transform->callback([&] { run = [&] { return cmd_transform(file, file2); }; });

  auto* rightinv = app.add_subcommand("rightinv", "Right inverse of a full-rank matrix");
  with_file(rightinv, "Matrix file");
  rightinv->callback([&] { run = [&] { return cmd_rightinv(file); }; });

  auto* eq = app.add_subcommand("eq", "Equality signature on domain q");
  eq->add_option("--q", q)->required()->check(CLI::Range(1U, 64U));
  eq->add_option("--n", n)->required();
  eq->callback([&] { run = [&] { return cmd_eq(q, n); }; });

  auto* decompose = app.add_subcommand("decompose", "Decompose a blockwise symmetric signature");
  with_file(decompose, "Signature file");
  with_block(decompose, true);
  decompose->callback([&] { run = [&] { return cmd_decompose(file, block); }; });

  auto* reconstruct = app.add_subcommand("reconstruct", "Signature from a decomposition file");
  with_file(reconstruct, "Decomposition file");
  reconstruct->callback([&] { run = [&] { return cmd_reconstruct(file); }; });

  auto* holant = app.add_subcommand("holant", "Holant value of a grid file");
  with_file(holant, "Grid file");
  holant->add_option("--method", method)->check(CLI::IsMember({"brute", "fkt", "both"}));
  holant->callback([&] { run = [&] { return cmd_holant(file, method); }; });

  auto* vh = app.add_subcommand("verify-holant", "Compare Holant(F|G) with the transformed grid");
  vh->add_option("grid", file, "Grid file")->required()->check(CLI::ExistingFile);
  vh->add_option("matrix", file2, "q x 2^l matrix file")->required()->check(CLI::ExistingFile);
  vh->add_option("--inverse", file3, "Matrix N with M N = c I (default: exact right inverse)")->check(CLI::ExistingFile);
  vh->callback([&] { run = [&] { return cmd_verify_holant(file, file2, file3); }; });

  auto* demo = app.add_subcommand("demo-gamma1", "Rebuild the four-corner ladder gate and check its claims");
  demo->callback([&] { run = [] { return report(hm::demo_gamma1()); }; });

  auto* veq = app.add_subcommand("verify-eq-theorem", "Random transforms of Equality are not matchgate signatures");
  unsigned eq_q = 3, eq_n = 3, eq_block = 2;
  std::uint64_t eq_trials = 50;
  veq->add_option("--q", eq_q);
  veq->add_option("--n", eq_n);
  veq->add_option("--block,-l", eq_block);
  veq->add_option("--trials", eq_trials);
  veq->add_flag("--control", control, "Run the Boolean Hadamard control instead");
  veq->callback([&] {
    run = [&] {
      return report(control ? hm::verify_equality_control(eq_n)
                             : hm::verify_equality_theorem(eq_q, eq_n, eq_block, eq_trials, g_opts.seed));
    };
  });

  auto* vrb = app.add_subcommand("verify-rank-bound", "Generated blockwise symmetric gates have rank <= 2");
  auto* vd = app.add_subcommand("verify-decomposition", "Decompose, reconstruct and rebuild generated gates");
  for (auto* sub : {vrb, vd}) sub->add_option("--trials", trials, "Generated gates (default 100)");
  vrb->callback([&] { run = [&] { return report(hm::verify_rank_bound(trials ? trials : 100, g_opts.seed)); }; });
  vd->callback([&] { run = [&] { return report(hm::verify_decomposition(trials ? trials : 100, g_opts.seed)); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }
  try {
    return run();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
