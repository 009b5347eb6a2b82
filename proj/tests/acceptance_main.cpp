// Acceptance suite. Runs every acceptance criterion and prints one
// PASS/FAIL line per criterion; exits nonzero if any fails.
//
// Usage: acceptance [path-to-indres-cli]
// The CLI path enables the end-to-end determinism check through the real
// binary; without it the determinism check runs in-process.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "indres/suite.hpp"

using namespace indres;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << " (" << name << "): "
            << detail << "\n";
  if (!ok) ++g_failures;
}

const std::vector<FieldDescriptor> kFields = {
    FieldDescriptor::rationals(), FieldDescriptor::prime(2), FieldDescriptor::prime(3),
    FieldDescriptor::prime(5)};
const std::vector<std::string> kKinds = {"trivial", "regular", "permutation", "random2"};

// Row-reduction written independently of the library's rref, used as the
// brute-force rank oracle for criterion 2.
int oracle_rank(std::vector<std::vector<FieldScalar>> rows, const FieldDescriptor& f) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[r]);
    FieldScalar inv = rows[r][c].inv();
    for (std::size_t j = c; j < cols; ++j) rows[r][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      FieldScalar factor = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= factor * rows[r][j];
    }
    ++r;
  }
  return int(r);
}

// dim of v / I(R Ker)v by brute force: the span of (rho(k) - id) e_i over
// every kernel element and every basis vector.
int oracle_cofixed_dim(const Representation& v, const Subgroup& ker) {
  std::vector<std::vector<FieldScalar>> rows;
  for (int s : ker.elements) {
    if (s == 0) continue;
    Matrix d = v.of(s) - Matrix::identity(v.field, v.dim);
    for (int col = 0; col < v.dim; ++col) {
      std::vector<FieldScalar> row;
      for (int r = 0; r < v.dim; ++r) row.push_back(d.at(r, col));
      rows.push_back(std::move(row));
    }
  }
  return v.dim - oracle_rank(std::move(rows), v.field);
}

struct RepSet {
  Catalog cat;
  std::map<std::string, Representation> cache;

  const Representation& get(const std::string& kind, const std::string& gname,
                            const FieldDescriptor& f) {
    std::string tag = kind + "(" + gname + "," + f.str() + ")";
    auto it = cache.find(tag);
    if (it != cache.end()) return it->second;
    Representation r = catalog_rep(kind, cat.group(gname), f, tag, 0);
    return cache.emplace(tag, std::move(r)).first->second;
  }

  std::string name_of_dom(const GroupHom& h) {
    for (const auto& n : cat.group_order)
      if (same_group(cat.group(n), h.domain)) return n;
    fail("unknown domain group");
  }
};

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "";
  RepSet rs{builtin_catalog(), {}};

  // 1. catalog theorem suite: every hypothesis-satisfied check passes
  {
    auto t0 = std::chrono::steady_clock::now();
    Suite suite = builtin_suite(0, 256);
    SuiteReport rep = run_suite(suite, nullptr);
    auto t1 = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(t1 - t0).count();
    SuiteCounts c = summarize(rep);
    // every required check family must actually appear in the suite
    const std::vector<std::string> families = {
        "transitivity.res", "transitivity.ind", "ind_tensor",  "dual_res",
        "dual_ind",         "hom_equals_ind",   "frobenius.1", "frobenius.2",
        "mackey_1.1",       "mackey_1.2",       "mackey_2.1",  "mackey_2.2",
        "mackey_3.1",       "mackey_3.2",       "mackey"};
    int missing = 0;
    for (const auto& fam : families) {
      bool found = false;
      for (const auto& k : rep.checks)
        if (k.name == fam) {
          found = true;
          break;
        }
      if (!found) ++missing;
    }
    std::ostringstream d;
    d << rep.checks.size() << " checks, " << c.pass << " pass, " << c.dim_mismatch
      << " dim_mismatch, " << c.no_certificate << " no_certificate, " << c.skipped_hypothesis
      << " skipped_hypothesis, " << c.not_applicable << " not_applicable, " << missing
      << " families missing, " << int(secs * 1000) / 1000.0 << "s";
    bool ok = c.dim_mismatch == 0 && c.no_certificate == 0 && c.pass > 0 && missing == 0 &&
              secs < 60.0;
    report(1, "catalog theorem suite", ok, d.str());
  }

  // 2. dimension oracle for induction: dim Ind = index * brute-force cofixed dim
  {
    int checked = 0, bad = 0;
    for (const auto& hname : rs.cat.hom_order) {
      const GroupHom& h = rs.cat.hom(hname);
      for (const auto& f : kFields)
        for (const auto& kind : kKinds) {
          const Representation& v = rs.get(kind, rs.name_of_dom(h), f);
          InductionResult ind = induce_along(h, v);
          int index = h.codomain->n / h.image.order();
          int want = index * oracle_cofixed_dim(v, h.kernel);
          ++checked;
          if (ind.rep.dim != want) ++bad;
        }
    }
    report(2, "induction dimension oracle", bad == 0,
           std::to_string(checked) + " (hom, field, module) combinations, " +
               std::to_string(bad) + " mismatches");
  }

  // 3. Mackey counting identity, before any certificate search
  {
    int checked = 0, bad = 0;
    for (const auto& aname : rs.cat.hom_order)
      for (const auto& bname : rs.cat.hom_order) {
        const GroupHom& a = rs.cat.hom(aname);
        const GroupHom& b = rs.cat.hom(bname);
        if (!same_group(a.codomain, b.codomain)) continue;
        for (const auto& f : kFields)
          for (const auto& kind : kKinds) {
            const Representation& v = rs.get(kind, rs.name_of_dom(a), f);
            Representation lhs = restrict_along(b, induce_along(a, v).rep);
            MackeyRhs rhs = build_mackey_rhs(a, b, v);
            int total = 0;
            for (const auto& s : rhs.summands) total += s.summand.dim;
            ++checked;
            if (lhs.dim != total) ++bad;
          }
      }
    // the specific star instance
    const GroupHom& a = rs.cat.hom("emb_C4_S3");
    const GroupHom& b = rs.cat.hom("emb_C6_S3");
    Representation v = regular_rep(rs.cat.group("C4"), FieldDescriptor::rationals());
    MackeyRhs rhs = build_mackey_rhs(a, b, v);
    Representation lhs = restrict_along(b, induce_along(a, v).rep);
    bool star = rhs.summands.size() == 1 && rhs.summands[0].pullback_group->n == 4 &&
                lhs.dim == 6 && rhs.sum.rep.dim == 6;
    report(3, "Mackey counting identity", bad == 0 && star,
           std::to_string(checked) + " (alpha, beta, module) combinations, " +
               std::to_string(bad) + " mismatches; star instance 6 = 6 with one double coset, "
                                     "|B_x| = 4: " + (star ? "yes" : "no"));
  }

  // 4. hypothesis-gate soundness
  {
    int checked = 0, bad = 0;
    for (const auto& gname : rs.cat.group_order) {
      const GroupPtr& g = rs.cat.group(gname);
      std::vector<Subgroup> subs = all_subgroups(g);
      for (const auto& f : kFields)
        for (const auto& kind : kKinds) {
          const Representation& v = rs.get(kind, gname, f);
          for (const Subgroup& k : subs) {
            auto w = relative_one_projectivity_witness(v, k);
            bool averaging_applies =
                f.is_rationals() || std::uint64_t(k.order()) % f.characteristic != 0;
            ++checked;
            if (averaging_applies && !w) ++bad;
            if (w) {
              // independent re-verification by direct summation over K
              Matrix sum = Matrix::zero(f, v.dim, v.dim);
              for (int s : k.elements) sum = sum + v.of(s) * *w * v.of(g->inverse(s));
              if (!sum.is_identity()) ++bad;
            }
          }
        }
    }
    const GroupPtr& c2 = rs.cat.group("C2");
    FieldDescriptor F2 = FieldDescriptor::prime(2);
    bool reg_case =
        relative_one_projectivity_witness(regular_rep(c2, F2), full_subgroup(c2)).has_value();
    bool triv_case =
        !relative_one_projectivity_witness(trivial_rep(c2, F2, 1), full_subgroup(c2));
    report(4, "hypothesis-gate soundness", bad == 0 && reg_case && triv_case,
           std::to_string(checked) + " (module, subgroup) pairs, " + std::to_string(bad) +
               " failures; regular F2C2 witness: " + (reg_case ? "yes" : "no") +
               ", trivial F2C2 absent: " + (triv_case ? "yes" : "no"));
  }

  // 5. explicit-map verification for the tensor identity
  {
    int checked = 0, bad = 0;
    CheckOptions opt{0, 256};
    for (const auto& hname : rs.cat.hom_order) {
      const GroupHom& h = rs.cat.hom(hname);
      std::string dn = rs.name_of_dom(h), cn;
      for (const auto& n : rs.cat.group_order)
        if (same_group(rs.cat.group(n), h.codomain)) cn = n;
      for (const auto& f : kFields)
        for (const auto& vk : kKinds)
          for (const auto& v1k : kKinds) {
            CheckReport r = check_ind_tensor(h, rs.get(vk, dn, f), rs.get(v1k, cn, f), "", opt);
            ++checked;
            if (r.verdict != Verdict::pass) ++bad;
          }
    }
    report(5, "explicit tensor-identity maps", bad == 0,
           std::to_string(checked) + " instances (intertwining and mutual inversion exact), " +
               std::to_string(bad) + " failures");
  }

  // 6. semisimple sanity over Q
  {
    int checked = 0, bad = 0;
    FieldDescriptor q = FieldDescriptor::rationals();
    for (const auto& gname : rs.cat.group_order) {
      const GroupPtr& g = rs.cat.group(gname);
      for (const Subgroup& k : all_subgroups(g)) {
        if (!k.is_normal()) continue;
        for (const auto& kind : kKinds) {
          const Representation& v = rs.get(kind, gname, q);
          ++checked;
          if (fixed_points(v, k).dim() != cofixed_quotient(v, k).rep.dim) ++bad;
        }
      }
    }
    InductionResult ind = induce_along(rs.cat.hom("sign_S3_C2"),
                                       regular_rep(rs.cat.group("S3"), q));
    Representation reg_c2 = regular_rep(rs.cat.group("C2"), q);
    IsoResult iso = iso_certificate(ind.rep, reg_c2, 0, 256);
    bool certified = iso.status == IsoStatus::certified &&
                     verify_certificate(ind.rep, reg_c2, *iso.certificate);
    report(6, "semisimple sanity over Q", bad == 0 && certified,
           std::to_string(checked) + " fixed/cofixed comparisons, " + std::to_string(bad) +
               " mismatches; Ind_sign(reg QS3) ~= reg QC2 certified: " +
               (certified ? "yes" : "no"));
  }

  // 7. determinism of the bundled suite at seed 0
  {
    bool ok = false;
    std::string how;
    if (!cli.empty()) {
      fs::path dir = fs::temp_directory_path() / "indres_acceptance";
      fs::create_directories(dir);
      std::string r1 = (dir / "r1.txt").string(), r2 = (dir / "r2.txt").string();
      std::string cmd1 = cli + " verify --builtin --seed 0 --quiet --report " + r1;
      std::string cmd2 = cli + " verify --builtin --seed 0 --quiet --report " + r2;
      int e1 = std::system(cmd1.c_str());
      int e2 = std::system(cmd2.c_str());
      ok = e1 == 0 && e2 == 0 &&
           report_determinism_view(read_file(r1)) == report_determinism_view(read_file(r2));
      how = "two CLI runs, reports byte-identical after dropping elapsed_ms";
      // CLI error contract while we are here: missing suite file gives exit 2
      int e3 = std::system((cli + " verify " + (dir / "missing.suite").string() +
                            " --quiet 2>/dev/null")
                               .c_str());
      if (WEXITSTATUS(e3) != 2) {
        ok = false;
        how += "; missing-file exit code was not 2";
      }
      fs::remove_all(dir);
    } else {
      SuiteReport a = run_suite(builtin_suite(0, 256), nullptr);
      SuiteReport b = run_suite(builtin_suite(0, 256), nullptr);
      ok = report_determinism_view(serialize_report(a)) ==
           report_determinism_view(serialize_report(b));
      how = "two in-process runs, reports byte-identical after dropping elapsed_ms";
    }
    report(7, "determinism at seed 0", ok, how);
  }

  std::cout << (g_failures == 0 ? "ACCEPTANCE: all criteria pass"
                                : "ACCEPTANCE: " + std::to_string(g_failures) + " criteria FAILED")
            << "\n";
  return g_failures == 0 ? 0 : 1;
}
