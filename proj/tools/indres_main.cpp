// indres command-line tool: run verification suites, induce/restrict
// representations along homomorphism files, query hom-space dimensions,
// and check Mackey's formula on concrete inputs.
//
// Exit codes: 0 success / all hypothesis-satisfied checks pass,
//             1 a check failed, 2 parse or I/O errors.

#include <CLI11.hpp>

#include <iostream>

#include "indres/suite.hpp"
#include "indres/version.hpp"

using namespace indres;

namespace {

Loader standard_loader() {
  return make_catalog_loader(std::make_shared<Catalog>(builtin_catalog()));
}

int cmd_verify(const std::string& suite_path, bool builtin, std::uint64_t seed, bool seed_set,
               int max_trials, bool trials_set, const std::string& report_path, bool quiet) {
  Suite suite = builtin ? builtin_suite(seed, max_trials) : parse_suite_file(suite_path);
  if (seed_set || builtin) suite.seed = seed;
  if (trials_set || builtin) suite.max_trials = max_trials;
  SuiteReport report = run_suite(suite, quiet ? nullptr : &std::cout);
  if (!report_path.empty()) write_file(report_path, serialize_report(report));
  int code = suite_exit_code(report);
  if (!quiet) std::cout << (code == 0 ? "ok" : "FAILED") << "\n";
  return code;
}

// Group references in output files are made absolute so the output stays
// loadable regardless of where it is written.
std::string portable_ref(const std::string& ref, const std::string& hom_path) {
  if (ref.rfind("builtin:", 0) == 0) return ref;
  std::string dir = std::filesystem::path(hom_path).parent_path().string();
  return std::filesystem::absolute(Loader::resolve_path(ref, dir)).string();
}

int cmd_induce(const std::string& hom_path, const std::string& rep_path,
               const std::string& out_path, bool restrict_mode) {
  Loader loader = standard_loader();
  LoadedHom lh = load_hom_ref(hom_path, "", loader);
  LoadedRep lr = load_rep_file(rep_path, loader);
  if (restrict_mode) {
    if (!same_group(lr.rep.group, lh.hom.codomain))
      fail("restrict: representation group does not match the homomorphism codomain");
    Representation out = restrict_along(lh.hom, lr.rep);
    write_file(out_path, rep_file_text(out, portable_ref(lh.domain_ref, hom_path),
                                       {"restricted along " + hom_path + " from " + rep_path,
                                        "dim = " + std::to_string(out.dim)}));
    return 0;
  }
  if (!same_group(lr.rep.group, lh.hom.domain))
    fail("induce: representation group does not match the homomorphism domain");
  InductionResult ind = induce_along(lh.hom, lr.rep);
  std::string transversal;
  for (std::size_t i = 0; i < ind.transversal.size(); ++i)
    transversal += (i ? " " : "") + std::to_string(ind.transversal[i]);
  write_file(out_path,
             rep_file_text(ind.rep, portable_ref(lh.codomain_ref, hom_path),
                           {"induced along " + hom_path + " from " + rep_path,
                            "dim = " + std::to_string(ind.rep.dim),
                            "kernel order = " + std::to_string(lh.hom.kernel.order()),
                            "image index = " + std::to_string(int(ind.transversal.size())),
                            "transversal = " + transversal}));
  return 0;
}

int cmd_homdim(const std::string& rep_a, const std::string& rep_b) {
  Loader loader = standard_loader();
  LoadedRep a = load_rep_file(rep_a, loader);
  LoadedRep b = load_rep_file(rep_b, loader);
  std::cout << dim_hom(a.rep, b.rep) << "\n";
  return 0;
}

int cmd_mackey(const std::string& alpha_path, const std::string& beta_path,
               const std::string& rep_path, std::uint64_t seed, int max_trials) {
  Loader loader = standard_loader();
  LoadedHom alpha = load_hom_ref(alpha_path, "", loader);
  LoadedHom beta = load_hom_ref(beta_path, "", loader);
  LoadedRep v = load_rep_file(rep_path, loader);
  CheckOptions opt{seed, max_trials};
  CheckReport r = check_mackey(alpha.hom, beta.hom, v.rep,
                               "alpha=" + alpha_path + " beta=" + beta_path + " v=" + rep_path,
                               opt);
  std::cout << "name = " << r.name << "\n";
  std::cout << "inputs = " << r.inputs << "\n";
  std::cout << "hypothesis = " << hypothesis_str(r.hypothesis) << "\n";
  std::cout << "lhs_dim = " << r.lhs_dim << "\n";
  std::cout << "rhs_dim = " << r.rhs_dim << "\n";
  std::cout << "verdict = " << verdict_str(r.verdict) << "\n";
  if (r.certificate) {
    std::cout << "certificate = " << matrix_literal(r.certificate->intertwiner) << "\n";
    std::cout << "certificate_inverse = " << matrix_literal(r.certificate->inverse) << "\n";
  }
  return r.verdict == Verdict::pass ? 0 : 1;
}

int cmd_catalog(const std::string& emit_dir) {
  Catalog cat = builtin_catalog();
  std::cout << "groups:\n";
  for (const auto& name : cat.group_order)
    std::cout << "  " << name << "  order " << cat.group(name)->n << "\n";
  std::cout << "homomorphisms:\n";
  for (const auto& name : cat.hom_order) {
    const GroupHom& h = cat.hom(name);
    std::string dn = "?", cn = "?";
    for (const auto& gn : cat.group_order) {
      if (same_group(cat.group(gn), h.domain)) dn = gn;
      if (same_group(cat.group(gn), h.codomain)) cn = gn;
    }
    std::cout << "  " << name << "  " << dn << " -> " << cn << "  |kernel| "
              << h.kernel.order() << "  |image| " << h.image.order() << "\n";
  }
  std::cout << "representation kinds: trivial regular permutation random2\n";
  std::cout << "fields: Q F2 F3 F5\n";
  if (!emit_dir.empty()) {
    std::filesystem::create_directories(emit_dir);
    for (const auto& name : cat.group_order)
      write_file((std::filesystem::path(emit_dir) / (name + ".group")).string(),
                 group_file_text(*cat.group(name)));
    for (const auto& name : cat.hom_order) {
      const GroupHom& h = cat.hom(name);
      std::string dn, cn;
      for (const auto& gn : cat.group_order) {
        if (same_group(cat.group(gn), h.domain)) dn = gn + ".group";
        if (same_group(cat.group(gn), h.codomain)) cn = gn + ".group";
      }
      write_file((std::filesystem::path(emit_dir) / (name + ".hom")).string(),
                 hom_file_text(h, dn, cn));
    }
    // a small starter suite exercising each check type once
    std::string s;
    s += "seed = 0\n";
    s += "max_trials = 256\n";
    s += "group S3 = S3.group\n";
    s += "group C2 = C2.group\n";
    s += "group C4 = C4.group\n";
    s += "group C6 = C6.group\n";
    s += "hom sgn = sign_S3_C2.hom\n";
    s += "hom c2c4 = incl_C2_C4.hom\n";
    s += "hom a = emb_C4_S3.hom\n";
    s += "hom b = emb_C6_S3.hom\n";
    s += "hom ids3 = id_S3.hom\n";
    s += "subgroup A3 = S3 generated 2\n";
    s += "rep v = regular S3 Q\n";
    s += "rep w = regular C2 Q\n";
    s += "rep z = regular C4 Q\n";
    s += "rep t = trivial S3 Q 1\n";
    s += "check transitivity phi=sgn psi=c2c4 u=v w=z\n";
    s += "check ind_tensor phi=sgn v=v v1=w\n";
    s += "check dual_res phi=sgn v1=w\n";
    s += "check dual_ind phi=sgn v=v\n";
    s += "check hom_equals_ind phi=sgn v=v\n";
    s += "check frobenius phi=sgn v=t v1=w\n";
    s += "check mackey_1 alpha=sgn g0=A3 v=v u=regular\n";
    s += "check mackey_2 beta=ids3 gamma=ids3 v=v u=v k0=auto\n";
    s += "check mackey alpha=a beta=b v=z\n";
    write_file((std::filesystem::path(emit_dir) / "starter.suite").string(), s);
    std::cout << "emitted catalog files to " << emit_dir << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact induction/restriction of group-algebra modules with "
               "isomorphism certificates"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite_path, report_path;
  std::uint64_t seed = 0;
  int max_trials = 256;
  bool builtin = false, quiet = false;
  verify->add_option("suite", suite_path, "suite file");
  verify->add_flag("--builtin", builtin, "run the bundled catalog suite");
  auto* seed_opt = verify->add_option("--seed", seed, "search seed (default 0)");
  auto* trials_opt = verify->add_option("--max-trials", max_trials,
                                        "random certificate trials per check (default 256)");
  verify->add_option("--report", report_path, "write the machine report here");
  verify->add_flag("--quiet", quiet, "suppress the human summary");

  // induce / restrict
  auto* induce = app.add_subcommand("induce", "induce a representation along a homomorphism");
  auto* restr = app.add_subcommand("restrict", "restrict a representation along a homomorphism");
  std::string hom_path, rep_path, out_path = "-";
  for (auto* c : {induce, restr}) {
    c->add_option("hom", hom_path, "homomorphism file (or builtin:NAME)")->required();
    c->add_option("rep", rep_path, "representation file")->required();
    c->add_option("-o,--out", out_path, "output representation file (default stdout)");
  }

  // homdim
  auto* homdim = app.add_subcommand("homdim", "dimension of the intertwiner space");
  std::string rep_a, rep_b;
  homdim->add_option("rep_a", rep_a)->required();
  homdim->add_option("rep_b", rep_b)->required();

  // mackey
  auto* mackey = app.add_subcommand("mackey", "check Mackey's formula on concrete inputs");
  std::string alpha_path, beta_path, mrep_path;
  std::uint64_t mseed = 0;
  int mtrials = 256;
  mackey->add_option("alpha", alpha_path, "homomorphism K -> G")->required();
  mackey->add_option("beta", beta_path, "homomorphism H -> G")->required();
  mackey->add_option("rep", mrep_path, "representation of K")->required();
  mackey->add_option("--seed", mseed);
  mackey->add_option("--max-trials", mtrials);

  // catalog
  auto* catalog = app.add_subcommand("catalog", "list the built-in catalog");
  std::string emit_dir;
  catalog->add_option("--emit", emit_dir, "write catalog files and a starter suite here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) {
      if (suite_path.empty() && !builtin) {
        std::cerr << "verify: need a suite file or --builtin\n";
        return 2;
      }
      return cmd_verify(suite_path, builtin, seed, seed_opt->count() > 0, max_trials,
                        trials_opt->count() > 0, report_path, quiet);
    }
    if (induce->parsed()) return cmd_induce(hom_path, rep_path, out_path, false);
    if (restr->parsed()) return cmd_induce(hom_path, rep_path, out_path, true);
    if (homdim->parsed()) return cmd_homdim(rep_a, rep_b);
    if (mackey->parsed()) return cmd_mackey(alpha_path, beta_path, mrep_path, mseed, mtrials);
    if (catalog->parsed()) return cmd_catalog(emit_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
