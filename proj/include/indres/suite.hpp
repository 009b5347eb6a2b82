// Verification suites: the built-in catalog suite, suite files, the
// runner, and the machine report format.
//
// Reports are deterministic given (suite, seed): the only field outside
// the determinism contract is elapsed_ms.

#pragma once

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "indres/catalog.hpp"
#include "indres/io.hpp"
#include "indres/theorems.hpp"
#include "indres/version.hpp"

namespace indres {

struct SuiteItem {
  std::string label;
  std::function<std::vector<CheckReport>(const CheckOptions&)> run;
};

struct Suite {
  std::uint64_t seed = 0;
  int max_trials = 256;
  std::vector<SuiteItem> items;
};

struct SuiteCounts {
  int pass = 0, dim_mismatch = 0, no_certificate = 0, skipped_hypothesis = 0,
      not_applicable = 0;
};

struct SuiteReport {
  std::string version = kVersion;
  std::uint64_t seed = 0;
  int max_trials = 256;
  std::vector<CheckReport> checks;
};

inline SuiteCounts summarize(const SuiteReport& r) {
  SuiteCounts c;
  for (const CheckReport& k : r.checks) {
    if (k.hypothesis == Hypothesis::not_applicable) {
      ++c.not_applicable;
    } else if (k.hypothesis == Hypothesis::violated) {
      ++c.skipped_hypothesis;
    } else {
      switch (k.verdict) {
        case Verdict::pass: ++c.pass; break;
        case Verdict::dim_mismatch: ++c.dim_mismatch; break;
        case Verdict::no_certificate_found: ++c.no_certificate; break;
        case Verdict::skipped_hypothesis: ++c.skipped_hypothesis; break;
      }
    }
  }
  return c;
}

// exit 0 iff no hypothesis-satisfied check failed
inline int suite_exit_code(const SuiteReport& r) {
  SuiteCounts c = summarize(r);
  return (c.dim_mismatch == 0 && c.no_certificate == 0) ? 0 : 1;
}

inline const char* hypothesis_str(Hypothesis h) {
  switch (h) {
    case Hypothesis::satisfied: return "satisfied";
    case Hypothesis::violated: return "violated";
    case Hypothesis::not_applicable: return "not_applicable";
  }
  return "?";
}

inline const char* verdict_str(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::dim_mismatch: return "dim_mismatch";
    case Verdict::no_certificate_found: return "no_certificate_found";
    case Verdict::skipped_hypothesis: return "skipped_hypothesis";
  }
  return "?";
}

inline std::string serialize_report(const SuiteReport& r) {
  std::string out;
  out += "# indres machine report\n";
  out += "version = " + r.version + "\n";
  out += "seed = " + std::to_string(r.seed) + "\n";
  out += "max_trials = " + std::to_string(r.max_trials) + "\n";
  out += "checks = " + std::to_string(r.checks.size()) + "\n";
  char buf[64];
  for (std::size_t i = 0; i < r.checks.size(); ++i) {
    const CheckReport& k = r.checks[i];
    std::string p = "check[" + std::to_string(i) + "].";
    out += p + "name = " + k.name + "\n";
    out += p + "inputs = " + k.inputs + "\n";
    out += p + "hypothesis = " + hypothesis_str(k.hypothesis) + "\n";
    if (!k.hypothesis_reason.empty())
      out += p + "hypothesis_reason = " + k.hypothesis_reason + "\n";
    out += p + "lhs_dim = " + std::to_string(k.lhs_dim) + "\n";
    out += p + "rhs_dim = " + std::to_string(k.rhs_dim) + "\n";
    out += p + "verdict = " + verdict_str(k.verdict) + "\n";
    out += p + "seed = " + std::to_string(k.seed) + "\n";
    out += p + "trials = " + std::to_string(k.trials) + "\n";
    std::snprintf(buf, sizeof buf, "%.3f", k.elapsed_ms);
    out += p + "elapsed_ms = " + buf + "\n";
    if (k.certificate) {
      out += p + "field = " + k.certificate->intertwiner.field().str() + "\n";
      out += p + "certificate = " + matrix_literal(k.certificate->intertwiner) + "\n";
      out += p + "certificate_inverse = " + matrix_literal(k.certificate->inverse) + "\n";
    }
  }
  SuiteCounts c = summarize(r);
  out += "summary.pass = " + std::to_string(c.pass) + "\n";
  out += "summary.dim_mismatch = " + std::to_string(c.dim_mismatch) + "\n";
  out += "summary.no_certificate = " + std::to_string(c.no_certificate) + "\n";
  out += "summary.skipped_hypothesis = " + std::to_string(c.skipped_hypothesis) + "\n";
  out += "summary.not_applicable = " + std::to_string(c.not_applicable) + "\n";
  return out;
}

inline SuiteReport parse_report(const std::string& text, const std::string& file = "<report>") {
  KvDoc doc(parse_kv_document(text, file), file);
  SuiteReport r;
  r.version = doc.get("version").value;
  r.seed = std::uint64_t(parse_long_strict(doc.get("seed").value, file, 1));
  r.max_trials = int(parse_long_strict(doc.get("max_trials").value, file, 1));
  int n = int(parse_long_strict(doc.get("checks").value, file, 1));
  for (int i = 0; i < n; ++i) {
    std::string p = "check[" + std::to_string(i) + "].";
    CheckReport k;
    k.name = doc.get(p + "name").value;
    k.inputs = doc.get(p + "inputs").value;
    std::string h = doc.get(p + "hypothesis").value;
    if (h == "satisfied") k.hypothesis = Hypothesis::satisfied;
    else if (h == "violated") k.hypothesis = Hypothesis::violated;
    else if (h == "not_applicable") k.hypothesis = Hypothesis::not_applicable;
    else parse_fail(file, 1, 1, "bad hypothesis '" + h + "'");
    if (doc.has(p + "hypothesis_reason"))
      k.hypothesis_reason = doc.get(p + "hypothesis_reason").value;
    k.lhs_dim = int(parse_long_strict(doc.get(p + "lhs_dim").value, file, 1));
    k.rhs_dim = int(parse_long_strict(doc.get(p + "rhs_dim").value, file, 1));
    std::string v = doc.get(p + "verdict").value;
    if (v == "pass") k.verdict = Verdict::pass;
    else if (v == "dim_mismatch") k.verdict = Verdict::dim_mismatch;
    else if (v == "no_certificate_found") k.verdict = Verdict::no_certificate_found;
    else if (v == "skipped_hypothesis") k.verdict = Verdict::skipped_hypothesis;
    else parse_fail(file, 1, 1, "bad verdict '" + v + "'");
    k.seed = std::uint64_t(parse_long_strict(doc.get(p + "seed").value, file, 1));
    k.trials = int(parse_long_strict(doc.get(p + "trials").value, file, 1));
    {
      std::string ms = doc.get(p + "elapsed_ms").value;
      k.elapsed_ms = std::strtod(ms.c_str(), nullptr);
    }
    if (doc.has(p + "field")) {
      FieldDescriptor f = FieldDescriptor::parse(doc.get(p + "field").value);
      const KvLine& cert = doc.get(p + "certificate");
      const KvLine& inv = doc.get(p + "certificate_inverse");
      k.certificate = IsoCertificate{parse_matrix_literal(cert.value, f, file, cert.line),
                                     parse_matrix_literal(inv.value, f, file, inv.line)};
    }
    r.checks.push_back(std::move(k));
  }
  for (const char* key : {"summary.pass", "summary.dim_mismatch", "summary.no_certificate",
                          "summary.skipped_hypothesis", "summary.not_applicable"})
    doc.get(key);
  doc.finish();
  SuiteCounts c = summarize(r);
  auto check_count = [&](const char* key, int want) {
    int got = int(parse_long_strict(doc.get(key).value, file, 1));
    if (got != want) parse_fail(file, 1, 1, std::string("summary count mismatch for ") + key);
  };
  check_count("summary.pass", c.pass);
  check_count("summary.dim_mismatch", c.dim_mismatch);
  check_count("summary.no_certificate", c.no_certificate);
  check_count("summary.skipped_hypothesis", c.skipped_hypothesis);
  check_count("summary.not_applicable", c.not_applicable);
  return r;
}

// Strip the informational timing lines; what remains is the determinism
// contract.
inline std::string report_determinism_view(const std::string& serialized) {
  std::string out;
  std::istringstream in(serialized);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find(".elapsed_ms = ") != std::string::npos) continue;
    out += line;
    out += "\n";
  }
  return out;
}

inline SuiteReport run_suite(const Suite& suite, std::ostream* human = nullptr) {
  SuiteReport report;
  report.seed = suite.seed;
  report.max_trials = suite.max_trials;
  CheckOptions opt{suite.seed, suite.max_trials};
  for (const SuiteItem& item : suite.items) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<CheckReport> rs = item.run(opt);
    auto t1 = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    for (CheckReport& r : rs) {
      r.elapsed_ms = ms;
      bool failed = r.hypothesis == Hypothesis::satisfied &&
                    (r.verdict == Verdict::dim_mismatch ||
                     r.verdict == Verdict::no_certificate_found);
      if (failed && human)
        *human << "FAIL " << r.name << " [" << r.inputs << "] lhs_dim=" << r.lhs_dim
               << " rhs_dim=" << r.rhs_dim << " verdict=" << verdict_str(r.verdict) << "\n";
      report.checks.push_back(std::move(r));
    }
  }
  if (human) {
    SuiteCounts c = summarize(report);
    *human << "checks: " << report.checks.size() << "  pass: " << c.pass
           << "  dim_mismatch: " << c.dim_mismatch << "  no_certificate: " << c.no_certificate
           << "  skipped_hypothesis: " << c.skipped_hypothesis
           << "  not_applicable: " << c.not_applicable << "\n";
  }
  return report;
}

// --- builtin suite -----------------------------------------------------------

namespace detail {

// Shared state for generated suite items: catalog plus a representation
// cache keyed by kind(group,field).
struct SuiteContext {
  Catalog cat;
  std::uint64_t seed = 0;
  std::map<std::string, Representation> reps;

  std::string rep_tag(const std::string& kind, const std::string& gname,
                      const FieldDescriptor& f) const {
    return kind + "(" + gname + "," + f.str() + ")";
  }

  const Representation& rep(const std::string& kind, const std::string& gname,
                            const FieldDescriptor& f) {
    std::string tag = rep_tag(kind, gname, f);
    auto it = reps.find(tag);
    if (it != reps.end()) return it->second;
    Representation r = catalog_rep(kind, cat.group(gname), f, tag, seed);
    return reps.emplace(tag, std::move(r)).first->second;
  }

  // representation over an ad-hoc group (realized subgroup, pullback, ...)
  Representation derived_rep(const std::string& kind, const GroupPtr& g,
                             const FieldDescriptor& f, const std::string& tag) const {
    return catalog_rep(kind, g, f, tag, seed);
  }
};

inline std::vector<std::string> surjective_homs(const Catalog& cat) {
  std::vector<std::string> out;
  for (const std::string& name : cat.hom_order)
    if (cat.hom(name).is_surjective()) out.push_back(name);
  return out;
}

// G0 choices for the first Mackey lemma: the whole domain, the kernel
// itself, and the smallest strictly intermediate subgroup when one exists.
inline std::vector<Subgroup> g0_choices(const GroupHom& alpha) {
  std::vector<Subgroup> out;
  out.push_back(full_subgroup(alpha.domain));
  if (alpha.kernel.order() < alpha.domain->n) out.push_back(alpha.kernel);
  for (const Subgroup& s : all_subgroups(alpha.domain)) {
    if (s.order() == alpha.domain->n || s.order() == alpha.kernel.order()) continue;
    if (!subgroup_contains(s, alpha.kernel)) continue;
    out.push_back(s);
    break;
  }
  return out;
}

}  // namespace detail

// The bundled desk-scale suite: every catalog homomorphism and field,
// module kinds trivial / regular / permutation / random2, one item per
// check instance. Deterministic given the seed.
inline Suite builtin_suite(std::uint64_t seed, int max_trials) {
  auto ctx = std::make_shared<detail::SuiteContext>();
  ctx->cat = builtin_catalog();
  ctx->seed = seed;
  Suite suite;
  suite.seed = seed;
  suite.max_trials = max_trials;

  const std::vector<FieldDescriptor> fields = {
      FieldDescriptor::rationals(), FieldDescriptor::prime(2), FieldDescriptor::prime(3),
      FieldDescriptor::prime(5)};
  const std::vector<std::string> kinds = {"trivial", "regular", "permutation", "random2"};
  std::vector<std::pair<std::string, std::string>> all_pairs;
  for (const auto& a : kinds)
    for (const auto& b : kinds) all_pairs.emplace_back(a, b);
  const std::vector<std::pair<std::string, std::string>> pairs4 = {
      {"regular", "regular"}, {"random2", "trivial"},
      {"trivial", "random2"}, {"permutation", "regular"}};

  auto dom_name = [&](const GroupHom& h) {
    for (const auto& n : ctx->cat.group_order)
      if (same_group(ctx->cat.group(n), h.domain)) return n;
    return std::string("?");
  };
  auto cod_name = [&](const GroupHom& h) {
    for (const auto& n : ctx->cat.group_order)
      if (same_group(ctx->cat.group(n), h.codomain)) return n;
    return std::string("?");
  };

  // transitivity over all composable pairs
  for (const FieldDescriptor& f : fields)
    for (const std::string& phi_name : ctx->cat.hom_order)
      for (const std::string& psi_name : ctx->cat.hom_order) {
        const GroupHom& phi = ctx->cat.hom(phi_name);
        const GroupHom& psi = ctx->cat.hom(psi_name);
        if (!same_group(phi.codomain, psi.domain)) continue;
        for (const auto& [uk, wk] : pairs4) {
          std::string utag = ctx->rep_tag(uk, dom_name(phi), f);
          std::string wtag = ctx->rep_tag(wk, cod_name(psi), f);
          ctx->rep(uk, dom_name(phi), f);
          ctx->rep(wk, cod_name(psi), f);
          std::string inputs =
              "phi=" + phi_name + " psi=" + psi_name + " u=" + utag + " w=" + wtag;
          suite.items.push_back(
              {"transitivity " + inputs,
               [ctx, phi_name, psi_name, uk, wk, f, utag, wtag, inputs,
                dn = dom_name(phi), cn = cod_name(psi)](const CheckOptions& opt) {
                 auto [a, b] = check_transitivity(ctx->cat.hom(phi_name), ctx->cat.hom(psi_name),
                                                  ctx->rep(uk, dn, f), ctx->rep(wk, cn, f),
                                                  inputs, opt);
                 return std::vector<CheckReport>{std::move(a), std::move(b)};
               }});
        }
      }

  // per-hom families
  for (const FieldDescriptor& f : fields)
    for (const std::string& hname : ctx->cat.hom_order) {
      const GroupHom& h = ctx->cat.hom(hname);
      std::string dn = dom_name(h), cn = cod_name(h);
      for (const std::string& k : kinds) {
        ctx->rep(k, cn, f);
        std::string v1tag = ctx->rep_tag(k, cn, f);
        std::string inputs = "phi=" + hname + " v1=" + v1tag;
        suite.items.push_back({"dual_res " + inputs,
                               [ctx, hname, k, cn, f, inputs](const CheckOptions& opt) {
                                 return std::vector<CheckReport>{check_dual_res(
                                     ctx->cat.hom(hname), ctx->rep(k, cn, f), inputs, opt)};
                               }});
      }
      for (const std::string& k : kinds) {
        ctx->rep(k, dn, f);
        std::string vtag = ctx->rep_tag(k, dn, f);
        std::string inputs = "phi=" + hname + " v=" + vtag;
        suite.items.push_back({"dual_ind " + inputs,
                               [ctx, hname, k, dn, f, inputs](const CheckOptions& opt) {
                                 return std::vector<CheckReport>{check_dual_ind(
                                     ctx->cat.hom(hname), ctx->rep(k, dn, f), inputs, opt)};
                               }});
        suite.items.push_back({"hom_equals_ind " + inputs,
                               [ctx, hname, k, dn, f, inputs](const CheckOptions& opt) {
                                 return std::vector<CheckReport>{check_hom_equals_ind(
                                     ctx->cat.hom(hname), ctx->rep(k, dn, f), inputs, opt)};
                               }});
      }
      for (const auto& [vk, v1k] : all_pairs) {
        ctx->rep(vk, dn, f);
        ctx->rep(v1k, cn, f);
        std::string inputs = "phi=" + hname + " v=" + ctx->rep_tag(vk, dn, f) +
                             " v1=" + ctx->rep_tag(v1k, cn, f);
        suite.items.push_back({"ind_tensor " + inputs,
                               [ctx, hname, vk, v1k, dn, cn, f, inputs](const CheckOptions& opt) {
                                 return std::vector<CheckReport>{
                                     check_ind_tensor(ctx->cat.hom(hname), ctx->rep(vk, dn, f),
                                                      ctx->rep(v1k, cn, f), inputs, opt)};
                               }});
        suite.items.push_back({"frobenius " + inputs,
                               [ctx, hname, vk, v1k, dn, cn, f, inputs](const CheckOptions& opt) {
                                 auto [a, b] =
                                     check_frobenius(ctx->cat.hom(hname), ctx->rep(vk, dn, f),
                                                     ctx->rep(v1k, cn, f), inputs, opt);
                                 return std::vector<CheckReport>{std::move(a), std::move(b)};
                               }});
      }
    }

  // first Mackey lemma over all surjections and G0 choices
  for (const FieldDescriptor& f : fields)
    for (const std::string& aname : detail::surjective_homs(ctx->cat)) {
      const GroupHom& alpha = ctx->cat.hom(aname);
      std::string dn = dom_name(alpha);
      std::vector<Subgroup> choices = detail::g0_choices(alpha);
      for (std::size_t gi = 0; gi < choices.size(); ++gi) {
        const Subgroup& g0 = choices[gi];
        Mackey1Setup setup = mackey1_setup(alpha, g0);
        for (const auto& [vk, uk] : pairs4) {
          ctx->rep(vk, dn, f);
          std::string utag = uk + "(H0," + f.str() + ")";
          Representation u = ctx->derived_rep(
              uk, setup.h0r.group, f,
              "mackey1-u/" + aname + "/" + std::to_string(gi) + "/" + utag);
          std::string inputs = "alpha=" + aname + " g0=#" + std::to_string(g0.order()) +
                               " v=" + ctx->rep_tag(vk, dn, f) + " u=" + utag;
          suite.items.push_back(
              {"mackey_1 " + inputs,
               [ctx, aname, g0, vk, dn, f, u, inputs](const CheckOptions& opt) {
                 auto [a, b] = check_lemma_mackey_1(ctx->cat.hom(aname), g0,
                                                    ctx->rep(vk, dn, f), u, inputs, opt);
                 return std::vector<CheckReport>{std::move(a), std::move(b)};
               }});
        }
      }
    }

  // second Mackey lemma over all composable pairs of surjections
  for (const FieldDescriptor& f : fields)
    for (const std::string& gname : detail::surjective_homs(ctx->cat))
      for (const std::string& bname : detail::surjective_homs(ctx->cat)) {
        const GroupHom& gamma = ctx->cat.hom(gname);
        const GroupHom& beta = ctx->cat.hom(bname);
        if (!same_group(gamma.codomain, beta.domain)) continue;
        std::string an = dom_name(beta), bn = dom_name(gamma);
        for (const auto& [vk, uk] : pairs4) {
          ctx->rep(vk, an, f);
          ctx->rep(uk, bn, f);
          std::string inputs = "beta=" + bname + " gamma=" + gname +
                               " v=" + ctx->rep_tag(vk, an, f) +
                               " u=" + ctx->rep_tag(uk, bn, f) + " k0=auto";
          suite.items.push_back(
              {"mackey_2 " + inputs,
               [ctx, bname, gname, vk, uk, an, bn, f, inputs](const CheckOptions& opt) {
                 auto [a, b] = check_lemma_mackey_2(ctx->cat.hom(bname), ctx->cat.hom(gname),
                                                    ctx->rep(vk, an, f), ctx->rep(uk, bn, f),
                                                    std::nullopt, inputs, opt);
                 return std::vector<CheckReport>{std::move(a), std::move(b)};
               }});
        }
      }

  // third Mackey lemma on the squares arising inside Mackey's formula,
  // one per common-codomain pair (first double coset)
  for (const FieldDescriptor& f : fields)
    for (const std::string& aname : ctx->cat.hom_order)
      for (const std::string& bname : ctx->cat.hom_order) {
        const GroupHom& alpha = ctx->cat.hom(aname);
        const GroupHom& beta = ctx->cat.hom(bname);
        if (!same_group(alpha.codomain, beta.codomain)) continue;
        DoubleCosetDecomposition dc =
            double_cosets(alpha.codomain, beta.image, alpha.image);
        for (int x : dc.representatives) {
          GroupHom xalpha = conjugate_hom(alpha, x);
          Factorization fac = factorize(xalpha);
          Pullback pb = pullback(xalpha, beta);
          std::vector<int> inter;
          for (int e : xalpha.image.elements)
            if (beta.image.contains(e)) inter.push_back(e);
          Subgroup isub = subgroup_from_elements(alpha.codomain, inter);
          GroupHom i_x = restrict_hom_to(identity_hom(alpha.codomain), isub, xalpha.image);
          RealizedSubgroup ir = realize(isub);
          std::vector<int> eps_map(static_cast<std::size_t>(pb.group->n));
          {
            std::vector<int> pos(std::size_t(alpha.codomain->n), -1);
            for (int q = 0; q < ir.group->n; ++q)
              pos[std::size_t(ir.to_parent[std::size_t(q)])] = q;
            for (int bx = 0; bx < pb.group->n; ++bx)
              eps_map[std::size_t(bx)] = pos[std::size_t(beta(pb.p_g(bx)))];
          }
          GroupHom eps = hom_from_map(pb.group, ir.group, eps_map);
          std::string dn = dom_name(alpha);
          for (const auto& [vk, uk] :
               {std::pair<std::string, std::string>{"regular", "regular"},
                {"random2", "trivial"},
                {"permutation", "random2"}}) {
            ctx->rep(vk, dn, f);
            std::string utag = uk + "(Bx," + f.str() + ")";
            Representation u = ctx->derived_rep(
                uk, pb.group, f,
                "mackey3-u/" + aname + "/" + bname + "/" + std::to_string(x) + "/" + utag);
            std::string inputs = "alpha=" + aname + " beta=" + bname + " x=" + std::to_string(x) +
                                 " v=" + ctx->rep_tag(vk, dn, f) + " u=" + utag + " k0=auto";
            GroupHom top = fac.onto;
            suite.items.push_back(
                {"mackey_3 " + inputs,
                 [ctx, top, i_x, pb, eps, vk, dn, f, u, inputs](const CheckOptions& opt) {
                   auto [a, b] =
                       check_lemma_mackey_3(top, i_x, pb.p_f, eps, ctx->rep(vk, dn, f), u,
                                            std::nullopt, inputs, opt);
                   return std::vector<CheckReport>{std::move(a), std::move(b)};
                 }});
          }
        }
      }

  // Mackey's formula over all common-codomain pairs
  for (const FieldDescriptor& f : fields)
    for (const std::string& aname : ctx->cat.hom_order)
      for (const std::string& bname : ctx->cat.hom_order) {
        const GroupHom& alpha = ctx->cat.hom(aname);
        const GroupHom& beta = ctx->cat.hom(bname);
        if (!same_group(alpha.codomain, beta.codomain)) continue;
        std::string dn = dom_name(alpha);
        for (const std::string& vk : kinds) {
          ctx->rep(vk, dn, f);
          std::string inputs =
              "alpha=" + aname + " beta=" + bname + " v=" + ctx->rep_tag(vk, dn, f);
          suite.items.push_back(
              {"mackey " + inputs, [ctx, aname, bname, vk, dn, f, inputs](const CheckOptions& opt) {
                 return std::vector<CheckReport>{check_mackey(ctx->cat.hom(aname),
                                                              ctx->cat.hom(bname),
                                                              ctx->rep(vk, dn, f), inputs, opt)};
               }});
        }
      }

  return suite;
}

// --- suite files ---------------------------------------------------------

inline Loader make_catalog_loader(std::shared_ptr<Catalog> cat) {
  Loader loader;
  auto homs = std::make_shared<std::map<std::string, LoadedHom>>();
  for (const auto& name : cat->hom_order) {
    const GroupHom& h = cat->hom(name);
    std::string dref, cref;
    for (const auto& gn : cat->group_order) {
      if (same_group(cat->group(gn), h.domain)) dref = "builtin:" + gn;
      if (same_group(cat->group(gn), h.codomain)) cref = "builtin:" + gn;
    }
    homs->emplace(name, LoadedHom{h, dref, cref});
  }
  loader.builtin_group = [cat](const std::string& name) -> GroupPtr {
    auto it = cat->groups.find(name);
    return it == cat->groups.end() ? nullptr : it->second;
  };
  loader.builtin_hom = [homs](const std::string& name) -> const LoadedHom* {
    auto it = homs->find(name);
    return it == homs->end() ? nullptr : &it->second;
  };
  return loader;
}

// Parse a suite file. Two passes: seed/max_trials first (they may appear
// anywhere), then every declaration and check in file order. See
// docs/formats.md for the grammar.
inline Suite parse_suite_file(const std::string& path) {
  struct Ctx {
    std::map<std::string, GroupPtr> groups;
    std::map<std::string, GroupHom> homs;
    std::map<std::string, Subgroup> subgroups;
    std::map<std::string, Representation> reps;
  };
  Ctx ctx;
  Loader loader = make_catalog_loader(std::make_shared<Catalog>(builtin_catalog()));
  std::string base_dir = std::filesystem::path(path).parent_path().string();
  std::string text = read_file(path);

  struct Line {
    std::vector<std::string> toks;
    std::string text;
    int no;
  };
  std::vector<Line> lines;
  {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
      ++lineno;
      std::string line = raw;
      std::size_t hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      line = detail::trim(line);
      if (line.empty()) continue;
      lines.push_back({split_ws_or_comma(line), line, lineno});
    }
  }

  Suite suite;
  for (const Line& l : lines) {
    const std::string& head = l.toks[0];
    if (head == "seed" || head == "max_trials") {
      if (l.toks.size() != 3 || l.toks[1] != "=")
        parse_fail(path, l.no, 1, "expected '" + head + " = N'");
      long v = parse_long_strict(l.toks[2], path, l.no);
      if (head == "seed")
        suite.seed = std::uint64_t(v);
      else
        suite.max_trials = int(v);
    }
  }

  auto group_of = [&](const std::string& name, int line) -> GroupPtr {
    auto it = ctx.groups.find(name);
    if (it == ctx.groups.end()) parse_fail(path, line, 1, "unknown group '" + name + "'");
    return it->second;
  };
  auto hom_of = [&](const std::string& name, int line) -> const GroupHom& {
    auto it = ctx.homs.find(name);
    if (it == ctx.homs.end()) parse_fail(path, line, 1, "unknown hom '" + name + "'");
    return it->second;
  };
  auto rep_of = [&](const std::string& name, int line) -> const Representation& {
    auto it = ctx.reps.find(name);
    if (it == ctx.reps.end()) parse_fail(path, line, 1, "unknown rep '" + name + "'");
    return it->second;
  };
  auto subgroup_of = [&](const std::string& name, int line) -> const Subgroup& {
    auto it = ctx.subgroups.find(name);
    if (it == ctx.subgroups.end()) parse_fail(path, line, 1, "unknown subgroup '" + name + "'");
    return it->second;
  };

  auto fresh_name = [&](const std::string& name, int line) {
    if (ctx.groups.count(name) || ctx.homs.count(name) || ctx.subgroups.count(name) ||
        ctx.reps.count(name))
      parse_fail(path, line, 1, "duplicate name '" + name + "'");
  };

  for (const Line& l : lines) {
    const auto& toks = l.toks;
    const std::string& head = toks[0];
    const int lineno = l.no;
    if (head == "seed" || head == "max_trials") continue;
    if (head == "group") {
      if (toks.size() != 4 || toks[2] != "=")
        parse_fail(path, lineno, 1, "expected 'group NAME = REF'");
      fresh_name(toks[1], lineno);
      try {
        ctx.groups.emplace(toks[1], loader.load_group(toks[3], base_dir));
      } catch (const ParseError&) {
        throw;
      } catch (const std::exception& e) {
        parse_fail(path, lineno, 1, e.what());
      }
    } else if (head == "hom") {
      if (toks.size() != 4 || toks[2] != "=")
        parse_fail(path, lineno, 1, "expected 'hom NAME = REF'");
      fresh_name(toks[1], lineno);
      try {
        ctx.homs.emplace(toks[1], load_hom_ref(toks[3], base_dir, loader).hom);
      } catch (const ParseError&) {
        throw;
      } catch (const std::exception& e) {
        parse_fail(path, lineno, 1, e.what());
      }
    } else if (head == "subgroup") {
      if (toks.size() < 5 || toks[2] != "=" || (toks[4] != "generated" && toks[4] != "elements"))
        parse_fail(path, lineno, 1, "expected 'subgroup NAME = GROUP generated|elements i...'");
      fresh_name(toks[1], lineno);
      GroupPtr g = group_of(toks[3], lineno);
      std::vector<int> elems;
      for (std::size_t i = 5; i < toks.size(); ++i)
        elems.push_back(int(parse_long_strict(toks[i], path, lineno)));
      try {
        ctx.subgroups.emplace(toks[1], toks[4] == "generated"
                                           ? subgroup_generated(g, elems)
                                           : subgroup_from_elements(g, elems));
      } catch (const std::exception& e) {
        parse_fail(path, lineno, 1, e.what());
      }
    } else if (head == "rep") {
      if (toks.size() < 4 || toks[2] != "=")
        parse_fail(path, lineno, 1, "expected 'rep NAME = ...'");
      fresh_name(toks[1], lineno);
      const std::string& name = toks[1];
      const std::string& kind = toks[3];
      try {
        if (kind == "file") {
          if (toks.size() != 5) parse_fail(path, lineno, 1, "expected 'rep NAME = file PATH'");
          ctx.reps.emplace(name,
                           load_rep_file(Loader::resolve_path(toks[4], base_dir), loader).rep);
        } else if (kind == "trivial" && toks.size() == 7) {
          GroupPtr g = group_of(toks[4], lineno);
          FieldDescriptor f = FieldDescriptor::parse(toks[5]);
          ctx.reps.emplace(name,
                           trivial_rep(g, f, int(parse_long_strict(toks[6], path, lineno))));
        } else {
          if (toks.size() != 6)
            parse_fail(path, lineno, 1, "expected 'rep NAME = KIND GROUP FIELD'");
          GroupPtr g = group_of(toks[4], lineno);
          FieldDescriptor f = FieldDescriptor::parse(toks[5]);
          ctx.reps.emplace(name, catalog_rep(kind, g, f, name, suite.seed));
        }
      } catch (const ParseError&) {
        throw;
      } catch (const std::exception& e) {
        parse_fail(path, lineno, 1, e.what());
      }
    } else if (head == "check") {
      if (toks.size() < 2) parse_fail(path, lineno, 1, "expected 'check TYPE key=value ...'");
      std::string type = toks[1];
      std::map<std::string, std::string> args;
      for (std::size_t i = 2; i < toks.size(); ++i) {
        std::size_t eq = toks[i].find('=');
        if (eq == std::string::npos)
          parse_fail(path, lineno, 1, "expected key=value, got '" + toks[i] + "'");
        args[toks[i].substr(0, eq)] = toks[i].substr(eq + 1);
      }
      auto need = [&](const std::string& k) -> std::string {
        auto it = args.find(k);
        if (it == args.end())
          parse_fail(path, lineno, 1, "check " + type + " needs argument '" + k + "'");
        return it->second;
      };
      std::string inputs = l.text.substr(l.text.find(type));
      try {
        if (type == "transitivity") {
          GroupHom phi = hom_of(need("phi"), lineno), psi = hom_of(need("psi"), lineno);
          Representation u = rep_of(need("u"), lineno), w = rep_of(need("w"), lineno);
          suite.items.push_back({"transitivity " + inputs, [=](const CheckOptions& opt) {
                                   auto [a, b] = check_transitivity(phi, psi, u, w, inputs, opt);
                                   return std::vector<CheckReport>{a, b};
                                 }});
        } else if (type == "ind_tensor") {
          GroupHom phi = hom_of(need("phi"), lineno);
          Representation v = rep_of(need("v"), lineno), v1 = rep_of(need("v1"), lineno);
          suite.items.push_back({"ind_tensor " + inputs, [=](const CheckOptions& opt) {
                                   return std::vector<CheckReport>{
                                       check_ind_tensor(phi, v, v1, inputs, opt)};
                                 }});
        } else if (type == "dual_res") {
          GroupHom phi = hom_of(need("phi"), lineno);
          Representation v1 = rep_of(need("v1"), lineno);
          suite.items.push_back({"dual_res " + inputs, [=](const CheckOptions& opt) {
                                   return std::vector<CheckReport>{
                                       check_dual_res(phi, v1, inputs, opt)};
                                 }});
        } else if (type == "dual_ind") {
          GroupHom phi = hom_of(need("phi"), lineno);
          Representation v = rep_of(need("v"), lineno);
          suite.items.push_back({"dual_ind " + inputs, [=](const CheckOptions& opt) {
                                   return std::vector<CheckReport>{
                                       check_dual_ind(phi, v, inputs, opt)};
                                 }});
        } else if (type == "hom_equals_ind") {
          GroupHom phi = hom_of(need("phi"), lineno);
          Representation v = rep_of(need("v"), lineno);
          suite.items.push_back({"hom_equals_ind " + inputs, [=](const CheckOptions& opt) {
                                   return std::vector<CheckReport>{
                                       check_hom_equals_ind(phi, v, inputs, opt)};
                                 }});
        } else if (type == "frobenius") {
          GroupHom phi = hom_of(need("phi"), lineno);
          Representation v = rep_of(need("v"), lineno), v1 = rep_of(need("v1"), lineno);
          suite.items.push_back({"frobenius " + inputs, [=](const CheckOptions& opt) {
                                   auto [a, b] = check_frobenius(phi, v, v1, inputs, opt);
                                   return std::vector<CheckReport>{a, b};
                                 }});
        } else if (type == "mackey_1") {
          GroupHom alpha = hom_of(need("alpha"), lineno);
          Subgroup g0 = subgroup_of(need("g0"), lineno);
          Representation v = rep_of(need("v"), lineno);
          Mackey1Setup setup = mackey1_setup(alpha, g0);
          Representation u =
              catalog_rep(need("u"), setup.h0r.group, v.field, "suite-u/" + inputs, suite.seed);
          suite.items.push_back({"mackey_1 " + inputs, [=](const CheckOptions& opt) {
                                   auto [a, b] = check_lemma_mackey_1(alpha, g0, v, u, inputs, opt);
                                   return std::vector<CheckReport>{a, b};
                                 }});
        } else if (type == "mackey_2" || type == "mackey_3") {
          std::optional<Subgroup> k0;
          std::string k0name = need("k0");
          if (k0name != "auto") k0 = subgroup_of(k0name, lineno);
          Representation v = rep_of(need("v"), lineno), u = rep_of(need("u"), lineno);
          if (type == "mackey_2") {
            GroupHom beta = hom_of(need("beta"), lineno), gamma = hom_of(need("gamma"), lineno);
            suite.items.push_back(
                {"mackey_2 " + inputs, [=](const CheckOptions& opt) {
                   auto [a, b] = check_lemma_mackey_2(beta, gamma, v, u, k0, inputs, opt);
                   return std::vector<CheckReport>{a, b};
                 }});
          } else {
            GroupHom alpha = hom_of(need("alpha"), lineno), i = hom_of(need("i"), lineno);
            GroupHom gamma = hom_of(need("gamma"), lineno),
                     eps = hom_of(need("epsilon"), lineno);
            suite.items.push_back(
                {"mackey_3 " + inputs, [=](const CheckOptions& opt) {
                   auto [a, b] = check_lemma_mackey_3(alpha, i, gamma, eps, v, u, k0, inputs, opt);
                   return std::vector<CheckReport>{a, b};
                 }});
          }
        } else if (type == "mackey") {
          GroupHom alpha = hom_of(need("alpha"), lineno), beta = hom_of(need("beta"), lineno);
          Representation v = rep_of(need("v"), lineno);
          suite.items.push_back({"mackey " + inputs, [=](const CheckOptions& opt) {
                                   return std::vector<CheckReport>{
                                       check_mackey(alpha, beta, v, inputs, opt)};
                                 }});
        } else {
          parse_fail(path, lineno, 1, "unknown check type '" + type + "'");
        }
      } catch (const ParseError&) {
        throw;
      } catch (const std::exception& e) {
        parse_fail(path, lineno, 1, e.what());
      }
    } else {
      parse_fail(path, lineno, 1, "unknown directive '" + head + "'");
    }
  }
  return suite;
}

}  // namespace indres
