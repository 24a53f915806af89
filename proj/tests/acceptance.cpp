// Acceptance gate: nine end-to-end criteria, one pass/fail line each.
// Every check is exact (integer defect counts, no tolerances); a criterion
// also fails if it exceeds its time budget. Exit 0 only when all nine pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "helpers.hpp"
#include "hpt/driver.hpp"
#include "hpt/io.hpp"
#include "oracles.hpp"

using namespace hpt;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  long checks = 0;
  void require(bool ok, const std::string& what) {
    ++checks;
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::mt19937_64 seeded(std::uint64_t s) { return std::mt19937_64(s); }

/* ---------- 1: the sign calculus on random graded maps ---------- */

Outcome sign_calculus() {
  Outcome t;
  std::mt19937_64 rng = seeded(101);
  Field Q;
  Field F7(7);
  int maps = 0;
  for (int trial = 0; maps < 200; ++trial) {
    const Field& F = trial % 2 ? F7 : Q;
    Complex A = hpt_test::random_complex(rng, F, 6, -2, 2);
    Complex B = hpt_test::random_complex(rng, F, 6, -2, 2);
    Complex C = hpt_test::random_complex(rng, F, 6, -2, 2);
    Complex D = hpt_test::random_complex(rng, F, 6, -2, 2);
    Complex E = hpt_test::random_complex(rng, F, 6, -2, 2);
    Complex G = hpt_test::random_complex(rng, F, 6, -2, 2);
    GradedMap u = hpt_test::random_map(rng, B.space, C.space, hpt_test::random_bidegree(rng));
    GradedMap v = hpt_test::random_map(rng, A.space, B.space, hpt_test::random_bidegree(rng));
    GradedMap f = hpt_test::random_map(rng, E.space, G.space, hpt_test::random_bidegree(rng));
    GradedMap g = hpt_test::random_map(rng, D.space, E.space, hpt_test::random_bidegree(rng));
    maps += 4;

    t.require(map_differential(A, B, map_differential(A, B, v)).is_zero(),
              "delta^2 != 0 on a random map");

    GradedMap lhs = map_differential(A, C, compose(u, v));
    GradedMap u_dv = compose(u, map_differential(A, B, v));
    GradedMap rhs = map_add(compose(map_differential(B, C, u), v),
                            u.total_degree() % 2 == 0 ? u_dv : map_neg(u_dv));
    t.require(lhs == rhs, "composition Leibniz rule failed");

    GradedMap il = compose(tensor_map(u, f), tensor_map(v, g));
    GradedMap ir = tensor_map(compose(u, v), compose(f, g));
    if ((f.total_degree() * v.total_degree()) % 2) ir = map_neg(ir);
    t.require(il == ir, "tensor interchange sign law failed");
  }
  if (t.pass) t.detail = "200 maps, dims <= 6, weights -2..2, over Q and F7";
  return t;
}

/* ---------- 2: signed operation identities == sign-free square ---------- */

/* Bump one coefficient of one column by 1; a genuinely single-entry edit. */
GradedMap bump_entry(const Field& F, const GradedMap& m, int column, size_t slot) {
  GradedMap out(m.source(), m.target(), m.bidegree());
  for (int i = 0; i < m.source()->dim(); ++i) {
    std::vector<Entry> col = m.column(i);
    if (i == column) {
      col[slot].coeff = F.add(col[slot].coeff, F.one());
      if (F.is_zero(col[slot].coeff)) col.erase(col.begin() + static_cast<long>(slot));
    }
    out.set_column(i, col);
  }
  return out;
}

bool signed_identities_hold(const AInfinityStructure& A, int top) {
  for (int n = 1; n <= top; ++n)
    if (!stasheff_defect(A, n).is_zero()) return false;
  return true;
}

Outcome form_equivalence() {
  Outcome t;
  std::mt19937_64 rng = seeded(202);
  Field Q;
  Field F5(5);
  int families = 0, failing_families = 0;
  while (families < 100) {
    const Field& F = families % 2 ? F5 : Q;
    Complex C = hpt_test::random_complex(rng, F, 5, -1, 1, 0, 2);
    if (C.space->dim() == 0) continue;
    BarContextPtr ctx = make_bar_context(C, 4);
    std::map<int, GradedMap> ops;
    for (int n = 2; n <= 4; ++n) {
      GradedMap op =
          hpt_test::random_map(rng, ctx->base_power(n), ctx->base_power(1), {2 - n, 0}, 70);
      if (!op.is_zero()) ops.emplace(n, std::move(op));
    }
    AInfinityStructure A(ctx, std::move(ops));
    const bool signed_ok = signed_identities_hold(A, 4);
    BarMap b = bar_differential(A);
    const bool square_ok = compose_bar(b, b).is_zero();
    t.require(signed_ok == square_ok, "signed and sign-free forms disagree on a random family");
    if (!square_ok) ++failing_families;
    ++families;
  }
  t.require(failing_families > 30, "random families were almost never invalid");

  // single-entry mutations of a valid structure: the two forms break together
  MasseyInstance mi = massey_instance(Q);
  BarContextPtr ctx = make_bar_context(mi.dga.complex, 3);
  AInfinityStructure good(ctx, {{2, mi.dga.product}});
  t.require(signed_identities_hold(good, 3), "the unmutated structure is invalid");
  t.require(compose_bar(bar_differential(good), bar_differential(good)).is_zero(),
            "the unmutated square is nonzero");

  int mutations = 0, broke_both = 0;
  const GradedMap& m2 = mi.dga.product;
  for (int i = 0; i < m2.source()->dim(); ++i) {
    for (size_t slot = 0; slot < m2.column(i).size(); ++slot) {
      AInfinityStructure mutated(ctx, {{2, bump_entry(Q, m2, i, slot)}});
      const bool signed_ok = signed_identities_hold(mutated, 3);
      BarMap b = bar_differential(mutated);
      const bool square_ok = compose_bar(b, b).is_zero();
      t.require(signed_ok == square_ok, "a mutation separated the two forms");
      if (!signed_ok && !square_ok) ++broke_both;
      ++mutations;
    }
  }
  t.require(mutations >= 15, "not enough mutations enumerated");
  t.require(broke_both > 0, "no mutation broke the identities");

  // a targeted mutation known to destroy associativity breaks both at once
  const int ee = m2.source()->index_of("e|e");
  AInfinityStructure skew(ctx, {{2, bump_entry(Q, m2, ee, 0)}});
  BarMap bs = bar_differential(skew);
  t.require(!signed_identities_hold(skew, 3) && !compose_bar(bs, bs).is_zero(),
            "the unit-entry mutation failed to break both forms");

  if (t.pass)
    t.detail = "100 families at arity <= 4, " + std::to_string(failing_families) +
               " invalid; " + std::to_string(mutations) + " single-entry mutations";
  return t;
}

/* ---------- 3: repair enforces the side conditions exactly ---------- */

Outcome contraction_repair() {
  Outcome t;
  std::mt19937_64 rng = seeded(303);
  Field Q;
  Field F7(7);
  for (int trial = 0; trial < 100; ++trial) {
    const Field& F = trial % 2 ? F7 : Q;
    Complex C = hpt_test::random_complex(rng, F, 6, -2, 2);
    SdrDatum noisy = noised_sdr(rng, gaussian_contraction(C));
    SdrReport before = check_sdr(noisy);
    t.require(before.sdr_ok(), "noise broke the retraction identities themselves");

    SdrReport after = check_sdr(repair_to_contraction(noisy).datum());
    t.require(after.h_alpha == 0, "h.alpha != 0 after repair");
    t.require(after.r_h == 0, "r.h != 0 after repair");
    t.require(after.h_h == 0, "h.h != 0 after repair");
    t.require(after.homotopy == 0, "d.h + h.d != 1 - alpha.r after repair");
    t.require(after.contraction_ok(), "repair output is not a contraction");
  }
  if (t.pass) t.detail = "100 noised retractions, all side conditions restored exactly";
  return t;
}

/* ---------- 4: the transfer theorem at truncation arity five ---------- */

Outcome transfer_theorem() {
  Outcome t;
  Field Q;
  Field F7(7);
  int pairs = 0;
  std::uint64_t seed = 4000;
  while (pairs < 100) {
    const Field& F = seed % 2 ? F7 : Q;
    for (const SuiteInstance& inst : random_suite(seed, 12, 6, -1, 1, F)) {
      if (!inst.product || pairs >= 100) continue;
      BarContextPtr ctx = make_bar_context(inst.complex, 5);
      TransferResult res = transfer(inst.contraction, from_dga(ctx, *inst.product), 5);
      TransferReport rep = verify_transfer(res);
      bool okay = rep.ok() && rep.retract == 0 && rep.homotopy == 0;
      for (long s : rep.stasheff) okay = okay && s == 0;
      t.require(okay, "a transfer identity failed at seed " + std::to_string(seed));
      ++pairs;
    }
    ++seed;
  }
  if (t.pass) t.detail = "100 algebra/contraction pairs, dims <= 6, truncation arity 5";
  return t;
}

/* ---------- 5: recursion output == brute-force tree expansion ---------- */

void check_against_trees(Outcome& t, const Contraction& c, const AInfinityStructure& A,
                         const GradedMap* product) {
  TransferResult res = transfer(c, A, 3);
  std::map<int, GradedMap> out = corestriction(res.b_small);
  for (int u : {2, 3}) {
    GradedMap oracle = hpt_test::tree_corestriction_oracle(res, c, u);
    bool match = out.count(u) ? out.at(u) == oracle : oracle.is_zero();
    t.require(match, "tree formula mismatch at arity " + std::to_string(u));
  }
  if (product) {
    GradedMap oracle = hpt_test::transferred_product_oracle(res, c, *product);
    const GradedMap* m2 = res.transferred.op(2);
    t.require(m2 ? *m2 == oracle : oracle.is_zero(), "m2 != r . m2 . (alpha (x) alpha)");
  }
}

Outcome oracle_equivalence() {
  Outcome t;
  Field Q;
  Field F5(5);
  int instances = 0;
  for (std::uint64_t seed : {2024u, 7u}) {
    for (const Field* F : {&Q, &F5}) {
      for (const SuiteInstance& inst : random_suite(seed, 10, 8, -2, 2, *F)) {
        BarContextPtr ctx = make_bar_context(inst.complex, 3);
        AInfinityStructure A = inst.product ? from_dga(ctx, *inst.product)
                                            : AInfinityStructure(ctx, {});
        check_against_trees(t, inst.contraction, A,
                            inst.product ? &*inst.product : nullptr);
        ++instances;
      }
    }
  }
  for (const std::string name : {"interval", "circle", "torus", "massey"}) {
    Document doc = read_document_file(std::string(HPT_FIXTURES_DIR) + "/" + name + ".json");
    DgAlgebra dga = assemble_dga(doc, "algebra");
    Contraction c = make_contraction(assemble_sdr(doc, "sdr"));
    check_against_trees(t, c, from_dga(make_bar_context(dga.complex, 3), dga.product),
                        &dga.product);
    ++instances;
  }
  if (t.pass)
    t.detail = std::to_string(instances) + " instances matched at arities 2 and 3";
  return t;
}

/* ---------- 6: the triple product the transfer must detect ---------- */

Outcome massey_detection() {
  Outcome t;
  Field Q;
  MasseyInstance mi = massey_instance(Q);
  HomologySolver solver(mi.dga.complex);
  MasseyResult m = massey_triple(solver, mi.dga.product, mi.x, mi.y, mi.z);
  t.require(m.defined, "triple product undefined");
  t.require(m.nonzero_mod_indeterminacy, "triple product vanished mod indeterminacy");

  Contraction c = gaussian_contraction(mi.dga.complex);
  TransferResult res =
      transfer(c, from_dga(make_bar_context(mi.dga.complex, 3), mi.dga.product), 3);
  const GradedMap* m3 = res.transferred.op(3);
  t.require(m3 != nullptr && !m3->is_zero(), "transferred m3 is zero");

  // on the formal fixtures the transferred product is the cup product
  // evaluated on the chosen cohomology representatives
  for (const std::string name : {"circle", "torus"}) {
    DgAlgebra dga = name == "circle" ? cochain_dga(circle_description(), Q)
                                     : cochain_dga(torus_description(), Q);
    Contraction cf = gaussian_contraction(dga.complex);
    TransferResult rf = transfer(cf, from_dga(make_bar_context(dga.complex, 3), dga.product), 3);
    GradedMap cup = hpt_test::transferred_product_oracle(rf, cf, dga.product);
    const GradedMap* m2 = rf.transferred.op(2);
    t.require(m2 != nullptr && *m2 == cup, name + ": transferred m2 is not the cup product");
  }

  if (t.pass)
    t.detail = "m3 nonzero with indeterminacy rank " + std::to_string(m.indeterminacy_dim) +
               "; circle and torus m2 equal the cup product";
  return t;
}

/* ---------- 7: the decomposition-sum audit of the coderivation ---------- */

Outcome decomposition_audit() {
  Outcome t;
  Field Q;
  Field F3(3);
  int instances = 0;
  auto audit = [&](const TransferResult& res) {
    std::map<int, GradedMap> out = corestriction(res.b_small);
    for (int u = 1; u <= 4; ++u) {
      GradedMap oracle = hpt_test::decomposition_corestriction(res, u);
      bool match = out.count(u) ? out.at(u) == oracle : oracle.is_zero();
      t.require(match, "decomposition mismatch at arity " + std::to_string(u));
    }
    ++instances;
  };

  MasseyInstance mi = massey_instance(Q);
  audit(transfer(gaussian_contraction(mi.dga.complex),
                 from_dga(make_bar_context(mi.dga.complex, 4), mi.dga.product), 4));

  std::uint64_t seed = 900;
  while (instances < 20) {
    const Field& F = seed % 2 ? F3 : Q;
    for (const SuiteInstance& inst : random_suite(seed, 8, 6, -1, 1, F)) {
      if (instances >= 20) break;
      BarContextPtr ctx = make_bar_context(inst.complex, 4);
      AInfinityStructure A = inst.product ? from_dga(ctx, *inst.product)
                                          : AInfinityStructure(ctx, {});
      audit(transfer(inst.contraction, A, 4));
    }
    ++seed;
  }
  if (t.pass) t.detail = "20 instances, components matched through arity 4";
  return t;
}

/* ---------- 8: naturality in a comparison isomorphism ---------- */

struct ConjugatedData {
  Complex big2;
  Contraction c2;
  GradedMap phi;
};

/* The same instance written in a shuffled basis: phi is the relabeling
   isomorphism and everything downstream is conjugated through it. */
ConjugatedData conjugate_instance(std::mt19937_64& rng, const Complex& big,
                                  const Contraction& c) {
  const Field& F = big.space->field();
  const int dim = big.space->dim();
  std::vector<int> perm(static_cast<size_t>(dim));
  for (int i = 0; i < dim; ++i) perm[static_cast<size_t>(i)] = i;
  std::shuffle(perm.begin(), perm.end(), rng);

  std::vector<BasisElement> elems(static_cast<size_t>(dim), BasisElement{});
  for (int i = 0; i < dim; ++i) elems[static_cast<size_t>(perm[static_cast<size_t>(i)])] = big.space->at(i);
  SpacePtr space2 = make_space(F, elems);
  GradedMap phi(big.space, space2, {0, 0});
  for (int i = 0; i < dim; ++i) phi.add_term(i, perm[static_cast<size_t>(i)], F.one());
  GradedMap phi_inv = invert_permutation_map(phi);

  Complex big2 = make_complex(space2, compose(phi, compose(big.d, phi_inv)));
  Contraction c2 = make_contraction({big2, c.small(), compose(phi, c.alpha()),
                                     compose(c.r(), phi_inv),
                                     compose(phi, compose(c.h(), phi_inv))});
  return {std::move(big2), std::move(c2), std::move(phi)};
}

Outcome naturality() {
  Outcome t;
  Field Q;
  Field F7(7);
  std::mt19937_64 rng = seeded(808);

  int pairs = 0;
  std::uint64_t seed = 6000;
  while (pairs < 20) {
    const Field& F = seed % 2 ? F7 : Q;
    for (const SuiteInstance& inst : random_suite(seed, 8, 7, -1, 1, F)) {
      if (pairs >= 20) break;
      ConjugatedData conj = conjugate_instance(rng, inst.complex, inst.contraction);
      BarContextPtr ctx = make_bar_context(inst.complex, 3);
      BarContextPtr ctx2 = make_bar_context(conj.big2, 3);
      GradedMap phi_inv = invert_permutation_map(conj.phi);

      AInfinityStructure A = inst.product ? from_dga(ctx, *inst.product)
                                          : AInfinityStructure(ctx, {});
      AInfinityStructure A2 = [&] {
        if (!inst.product) return AInfinityStructure(ctx2, {});
        std::vector<const GradedMap*> ii{&phi_inv, &phi_inv};
        GradedMap product2 = compose(
            conj.phi, compose(*inst.product,
                              tensor_of_maps(ii, power_space(conj.big2.space, 2),
                                             power_space(inst.complex.space, 2))));
        return from_dga(ctx2, product2);
      }();

      NaturalityReport rep =
          naturality_check(inst.contraction, conj.c2, conj.phi,
                           GradedMap::identity(inst.contraction.small().space), A, A2, 3);
      t.require(rep.hypotheses_ok(), "a commuting pair failed a hypothesis");
      t.require(rep.natural(), "a commuting pair failed naturality");
      ++pairs;
    }
    ++seed;
  }

  // five deliberate hypothesis violations: each must be reported as a
  // hypothesis failure and never as a conclusion failure
  MasseyInstance mi = massey_instance(Q);
  const Complex& big = mi.dga.complex;
  Contraction c = gaussian_contraction(big);
  ConjugatedData conj = conjugate_instance(rng, big, c);
  BarContextPtr ctx = make_bar_context(big, 3);
  BarContextPtr ctx2 = make_bar_context(conj.big2, 3);
  GradedMap phi_inv = invert_permutation_map(conj.phi);
  std::vector<const GradedMap*> ii{&phi_inv, &phi_inv};
  GradedMap product2 = compose(
      conj.phi, compose(mi.dga.product, tensor_of_maps(ii, power_space(conj.big2.space, 2),
                                                       power_space(big.space, 2))));
  AInfinityStructure A = from_dga(ctx, mi.dga.product);
  AInfinityStructure A2 = from_dga(ctx2, product2);
  GradedMap one_small = GradedMap::identity(c.small().space);

  int violations = 0;
  auto expect_hypothesis_failure = [&](const NaturalityReport& rep, const std::string& label) {
    t.require(!rep.hypotheses_ok(), label + ": violation went unnoticed");
    t.require(rep.conclusion_failures.empty(), label + ": blamed naturality instead");
    t.require(!rep.natural(), label + ": reported natural despite the violation");
    ++violations;
  };

  {  // 1: a mutated operation upstairs
    GradedMap bad = product2;
    bad.add_term("x|x", "g", Q.one());
    AInfinityStructure A2bad(ctx2, {{2, bad}});
    expect_hypothesis_failure(
        naturality_check(c, conj.c2, conj.phi, one_small, A, A2bad, 3), "mutated product");
  }
  {  // 2: a sign-flipped small comparison
    expect_hypothesis_failure(
        naturality_check(c, conj.c2, conj.phi, map_neg(one_small), A, A2, 3),
        "negated small comparison");
  }
  {  // 3: a sign-flipped big comparison
    expect_hypothesis_failure(
        naturality_check(c, conj.c2, map_neg(conj.phi), one_small, A, A2, 3),
        "negated big comparison");
  }
  {  // 4: a comparison that is not a chain map
    GradedMap leaky = conj.phi;
    leaky.add_term(big.space->index_of("x"),
                   conj.phi.column(big.space->index_of("u"))[0].to, Q.one());
    expect_hypothesis_failure(naturality_check(c, conj.c2, leaky, one_small, A, A2, 3),
                              "non-closed comparison");
  }
  {  // 5: an unrelated target homotopy on an acyclic complex
    SpacePtr space = make_space(Q, {{"a", 0, 0}, {"b", 1, 0}, {"c", 1, 0}, {"e", 2, 0}});
    GradedMap d(space, space, {1, 0});
    d.add_term("a", "b", Q.one());
    d.add_term("c", "e", Q.one());
    Complex acy = make_complex(space, std::move(d));
    Contraction c1 = gaussian_contraction(acy);
    GradedMap w(space, space, {-2, 0});
    w.add_term("e", "a", Q.one());
    SdrDatum datum = c1.datum();
    datum.h = map_add(datum.h, delta(acy, acy, w));
    Contraction cW = repair_to_contraction(datum);
    t.require(cW.h() != c1.h(), "homotopy alteration vanished");
    AInfinityStructure bare(make_bar_context(acy, 3), {});
    expect_hypothesis_failure(
        naturality_check(c1, cW, GradedMap::identity(space),
                         GradedMap::identity(c1.small().space), bare, bare, 3),
        "unrelated homotopy");
  }
  t.require(violations == 5, "expected five violation scenarios");

  if (t.pass) t.detail = "20 commuting pairs natural; 5 violations reported as hypotheses";
  return t;
}

/* ---------- 9: the randomized suite is bitwise reproducible ---------- */

struct CliRun {
  int exit_code;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  std::string cmd = std::string(HPT_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string strip_seconds(const std::string& text) {
  std::istringstream in(text);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("seconds:", 0) == 0) continue;
    if (line.find("\"seconds\":") != std::string::npos) continue;
    out << line << "\n";
  }
  return out.str();
}

Outcome cli_determinism() {
  Outcome t;
  SuiteOptions opt;
  opt.seed = 31;
  opt.count = 6;
  opt.max_arity = 3;
  opt.max_dim = 6;
  CommandReport a = run_suite(opt);
  CommandReport b = run_suite(opt);
  t.require(a.ok(), "the suite itself failed");
  t.require(a.checks.size() == b.checks.size(), "verdict counts differ");
  for (size_t i = 0; i < a.checks.size() && i < b.checks.size(); ++i) {
    t.require(a.checks[i].name == b.checks[i].name && a.checks[i].pass == b.checks[i].pass &&
                  a.checks[i].defect == b.checks[i].defect,
              "verdict " + std::to_string(i) + " differs between runs");
  }
  a.seconds = 0;
  b.seconds = 0;
  t.require(report_json(a) == report_json(b), "in-process reports differ");
  t.require(report_text(a) == report_text(b), "in-process text reports differ");

  const std::string args = "suite --seed 31 --count 6 --max-arity 3 --max-dim 6 --format json";
  CliRun r1 = run_cli(args);
  CliRun r2 = run_cli(args);
  t.require(r1.exit_code == 0 && r2.exit_code == 0, "cli suite run failed");
  t.require(strip_seconds(r1.out) == strip_seconds(r2.out),
            "cli outputs differ beyond the timing field");
  if (t.pass) t.detail = "two runs, byte-identical verdicts in process and through the binary";
  return t;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"sign calculus: delta^2, composition Leibniz, interchange", 10, sign_calculus},
      {"signed identities match the sign-free coderivation square", 30, form_equivalence},
      {"repair restores every side condition exactly", 10, contraction_repair},
      {"transfer theorem holds through truncation arity five", 120, transfer_theorem},
      {"recursion equals the brute-force tree expansion", 30, oracle_equivalence},
      {"triple product detected; fixture products match the cup product", 10, massey_detection},
      {"coderivation components match the decomposition sum", 60, decomposition_audit},
      {"naturality passes and hypothesis failures are attributed", 30, naturality},
      {"suite verdicts are byte-identical across runs", 10, cli_determinism},
  };

  bool all = true;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("unexpected exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_budget = secs < criteria[i].budget;
    const bool pass = out.pass && in_budget;
    all = all && pass;
    std::printf("[%zu/9] %s  %s  (%ld checks, %.2fs, budget %.0fs)%s%s\n", i + 1,
                pass ? "PASS" : "FAIL", criteria[i].name, out.checks, secs, criteria[i].budget,
                out.detail.empty() ? "" : " -- ", out.detail.c_str());
    if (out.pass && !in_budget) std::printf("      exceeded the time budget\n");
  }
  std::printf("%s\n", all ? "acceptance: all nine criteria pass"
                          : "acceptance: at least one criterion failed");
  return all ? 0 : 1;
}
