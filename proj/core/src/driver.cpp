#include "hpt/driver.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "json.hpp"

namespace hpt {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

long nnz(const GradedMap& m) {
  long n = 0;
  for (int i = 0; i < m.source()->dim(); ++i) n += static_cast<long>(m.column(i).size());
  return n;
}

void add_defect(CommandReport& rep, std::string name, long defect) {
  rep.checks.push_back({std::move(name), defect == 0, defect});
}

void add_predicate(CommandReport& rep, std::string name, bool pass) {
  rep.checks.push_back({std::move(name), pass, -1});
}

void param(CommandReport& rep, const char* key, std::string value) {
  rep.params.emplace_back(key, std::move(value));
}

/* Pick the labeled record, or the unique one when label is empty. */
template <class Section>
const std::string* pick(const Section& section, const std::string& label, const char* kind,
                        const char* plural, CommandReport& rep) {
  if (!label.empty()) {
    auto it = section.find(label);
    if (it != section.end()) return &it->first;
    rep.input_error = true;
    rep.failure = std::string("the document has no ") + kind + " named '" + label + "'";
    return nullptr;
  }
  if (section.size() == 1) return &section.begin()->first;
  rep.input_error = true;
  rep.failure = section.empty() ? std::string("the document has no ") + kind
                                : std::string("the document has several ") + plural + "; name one";
  return nullptr;
}

void verify_complex_checks(const Document& doc, const ComplexRecord& rec, CommandReport& rep) {
  const GradedMap& d = doc.map_named(rec.d);
  add_defect(rep, "d.d = 0", nnz(compose(d, d)));
}

void verify_dga_checks(const Document& doc, const DgaRecord& rec, CommandReport& rep) {
  const ComplexRecord& crec = doc.complexes.at(rec.complex);
  verify_complex_checks(doc, crec, rep);

  SpacePtr space = doc.resolve_space(crec.space);
  const GradedMap& d = doc.map_named(crec.d);
  const GradedMap& mu = doc.map_named(rec.product);
  const Vec& unit = doc.vector_named(rec.unit);
  SpacePtr p2 = power_space(space, 2);
  GradedMap id = GradedMap::identity(space);

  // Leibniz: d.mu = mu.(d(x)1 + 1(x)d), the tensor evaluation supplying signs
  GradedMap d2 = map_add(tensor_of_maps({&d, &id}, p2, p2), tensor_of_maps({&id, &d}, p2, p2));
  add_defect(rep, "product is closed (Leibniz rule)",
             nnz(map_sub(compose(d, mu), compose(mu, d2))));

  SpacePtr p3 = power_space(space, 3);
  GradedMap left = compose(mu, tensor_of_maps({&mu, &id}, p3, p2));
  GradedMap right = compose(mu, tensor_of_maps({&id, &mu}, p3, p2));
  add_defect(rep, "product is associative", nnz(map_sub(left, right)));

  long unit_defect = 0;
  for (int i = 0; i < space->dim(); ++i) {
    Vec x = basis_vec(space, i);
    std::vector<const Vec*> ux{&unit, &x}, xu{&x, &unit};
    Vec minus_x = vec_scale(space->field().from_int(-1), x);
    unit_defect += static_cast<long>(
        vec_add(apply(mu, vec_tensor(ux, p2)), minus_x).entries.size());
    unit_defect += static_cast<long>(
        vec_add(apply(mu, vec_tensor(xu, p2)), minus_x).entries.size());
  }
  add_defect(rep, "unit is two-sided", unit_defect);
}

void verify_ainfty_checks(const Document& doc, const std::string& label, int arity,
                          CommandReport& rep) {
  AInfinityStructure A = assemble_ainfty(doc, label, 0);
  for (int n = 1; n <= arity; ++n)
    add_defect(rep, "Stasheff identity, arity " + std::to_string(n),
               nnz(stasheff_defect(A, n)));
}

void verify_sdr_checks(const Document& doc, const std::string& label, CommandReport& rep) {
  SdrReport sr = check_sdr(assemble_sdr(doc, label));
  if (!sr.shape_error.empty()) {
    rep.failure = sr.shape_error;
    return;
  }
  add_defect(rep, "alpha is a chain map", sr.alpha_closed);
  add_defect(rep, "r is a chain map", sr.r_closed);
  add_defect(rep, "r.alpha = 1", sr.retract);
  add_defect(rep, "d.h + h.d = 1 - alpha.r", sr.homotopy);
  add_defect(rep, "h.alpha = 0", sr.h_alpha);
  add_defect(rep, "r.h = 0", sr.r_h);
  add_defect(rep, "h.h = 0", sr.h_h);
}

long total_defect(const TransferReport& tr) {
  long total = 0;
  for (long s : tr.stasheff) total += std::max(0L, s);
  for (long v : {tr.square, tr.retract, tr.alpha_morphism, tr.r_morphism, tr.homotopy,
                 tr.h_alpha, tr.r_h, tr.h_h})
    total += std::max(0L, v);
  if (!tr.coderivation || !tr.m1_is_differential) total += 1;
  return total;
}

void transfer_checks(const TransferResult& res, CommandReport& rep) {
  TransferReport tr = verify_transfer(res);
  for (size_t n = 1; n <= tr.stasheff.size(); ++n)
    add_defect(rep, "transferred Stasheff identity, arity " + std::to_string(n),
               tr.stasheff[n - 1]);
  add_defect(rep, "b.b = 0 on the bar side", tr.square);
  add_predicate(rep, "transferred table is a coderivation", tr.coderivation);
  add_predicate(rep, "arity-1 operation is the transferred differential", tr.m1_is_differential);
  add_defect(rep, "bar_r.bar_alpha = 1", tr.retract);
  add_defect(rep, "bar_alpha intertwines the coderivations", tr.alpha_morphism);
  add_defect(rep, "bar_r intertwines the coderivations", tr.r_morphism);
  add_defect(rep, "delta(bar_h) = 1 - bar_alpha.bar_r", tr.homotopy);
  add_defect(rep, "bar_h.bar_alpha = 0", tr.h_alpha);
  add_defect(rep, "bar_r.bar_h = 0", tr.r_h);
  add_defect(rep, "bar_h.bar_h = 0", tr.h_h);
}

}  // namespace

bool CommandReport::ok() const {
  if (input_error || !failure.empty()) return false;
  for (const CheckVerdict& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string report_json(const CommandReport& r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = std::move(params);
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const CheckVerdict& c : r.checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    cj["defect"] = c.defect;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  j["failure"] = r.failure;
  j["hint"] = r.hint;
  j["input_error"] = r.input_error;
  j["pass"] = r.ok();
  j["seconds"] = r.seconds;
  return j.dump(2) + "\n";
}

std::string report_text(const CommandReport& r) {
  std::ostringstream out;
  out << "command: " << r.command << "\n";
  for (const auto& [k, v] : r.params) out << k << ": " << v << "\n";
  for (const CheckVerdict& c : r.checks) {
    out << "check: " << c.name << " -- " << (c.pass ? "pass" : "FAIL");
    if (c.defect >= 0) out << " (defect " << c.defect << ")";
    out << "\n";
  }
  if (!r.failure.empty()) out << "failure: " << r.failure << "\n";
  if (!r.hint.empty()) out << "hint: " << r.hint << "\n";
  out << "result: " << (r.ok() ? "pass" : r.input_error ? "input error" : "FAIL") << "\n";
  out << "seconds: " << r.seconds << "\n";
  return out.str();
}

CommandReport run_verify(const Document& doc, const VerifyOptions& opt) {
  const auto t0 = Clock::now();
  CommandReport rep;
  rep.command = "verify";
  param(rep, "kind", opt.kind);
  param(rep, "field", doc.field.name());

  try {
    if (opt.kind == "complex") {
      if (const std::string* label = pick(doc.complexes, opt.label, "complex", "complexes", rep)) {
        param(rep, "label", *label);
        verify_complex_checks(doc, doc.complexes.at(*label), rep);
      }
    } else if (opt.kind == "dga") {
      if (const std::string* label = pick(doc.dgas, opt.label, "dga", "dgas", rep)) {
        param(rep, "label", *label);
        verify_dga_checks(doc, doc.dgas.at(*label), rep);
      }
    } else if (opt.kind == "ainfty") {
      if (const std::string* label = pick(doc.ainfty, opt.label, "A-infinity structure", "A-infinity structures", rep)) {
        param(rep, "label", *label);
        const int stored = doc.ainfty.at(*label).max_arity;
        if (opt.max_arity > stored) {
          rep.input_error = true;
          rep.failure = "--max-arity " + std::to_string(opt.max_arity) +
                        " exceeds the stored truncation " + std::to_string(stored);
        } else {
          const int arity = opt.max_arity > 0 ? opt.max_arity : stored;
          param(rep, "max_arity", std::to_string(arity));
          verify_ainfty_checks(doc, *label, arity, rep);
        }
      }
    } else if (opt.kind == "sdr") {
      if (const std::string* label = pick(doc.sdrs, opt.label, "SDR", "SDRs", rep)) {
        param(rep, "label", *label);
        verify_sdr_checks(doc, *label, rep);
      }
    } else {
      rep.input_error = true;
      rep.failure = "unknown kind '" + opt.kind + "' (use complex, dga, ainfty or sdr)";
    }
  } catch (const std::invalid_argument& e) {
    rep.failure = e.what();  // mathematics the data's type already promises
  }

  rep.seconds = since(t0);
  return rep;
}

CommandReport run_transfer(const Document& doc, const TransferOptions& opt, Document* out) {
  const auto t0 = Clock::now();
  CommandReport rep;
  rep.command = "transfer";
  param(rep, "max_arity", std::to_string(opt.max_arity));
  param(rep, "repair", opt.repair ? "true" : "false");
  param(rep, "field", doc.field.name());

  if (opt.max_arity < 1) {
    rep.input_error = true;
    rep.failure = "--max-arity must be at least 1";
    rep.seconds = since(t0);
    return rep;
  }

  const std::string* sdr_label = pick(doc.sdrs, opt.sdr_label, "SDR", "SDRs", rep);
  if (!sdr_label) {
    rep.seconds = since(t0);
    return rep;
  }
  param(rep, "sdr", *sdr_label);

  // the structure: an A-infinity record, or a dga to take literally
  const std::string* ainfty_label = nullptr;
  const std::string* dga_label = nullptr;
  if (!opt.structure_label.empty()) {
    const bool in_ainfty = doc.ainfty.count(opt.structure_label) > 0;
    const bool in_dgas = doc.dgas.count(opt.structure_label) > 0;
    if (in_ainfty && in_dgas) {
      rep.input_error = true;
      rep.failure = "'" + opt.structure_label + "' names both an A-infinity structure and a dga";
    } else if (in_ainfty) {
      ainfty_label = &doc.ainfty.find(opt.structure_label)->first;
    } else if (in_dgas) {
      dga_label = &doc.dgas.find(opt.structure_label)->first;
    } else {
      rep.input_error = true;
      rep.failure = "the document has no structure named '" + opt.structure_label + "'";
    }
  } else if (doc.ainfty.size() + doc.dgas.size() == 1) {
    if (!doc.ainfty.empty()) ainfty_label = &doc.ainfty.begin()->first;
    else dga_label = &doc.dgas.begin()->first;
  } else {
    rep.input_error = true;
    rep.failure = doc.ainfty.empty() && doc.dgas.empty()
                      ? "the document has no structure to transfer"
                      : "the document has several structures; name one";
  }
  if (rep.input_error) {
    rep.seconds = since(t0);
    return rep;
  }
  param(rep, "structure", ainfty_label ? *ainfty_label : *dga_label);

  try {
    SdrDatum datum = assemble_sdr(doc, *sdr_label);

    Contraction* contraction = nullptr;
    std::optional<Contraction> holder;
    try {
      holder.emplace(make_contraction(datum));
    } catch (const std::invalid_argument& first) {
      if (!opt.repair) {
        rep.failure = first.what();
        if (check_sdr(datum).sdr_ok())
          rep.hint = "the SDR identities hold; rerun with --repair to enforce the side "
                     "conditions";
        rep.seconds = since(t0);
        return rep;
      }
      holder.emplace(repair_to_contraction(datum));
    }
    contraction = &*holder;

    AInfinityStructure A = [&] {
      if (ainfty_label) return assemble_ainfty(doc, *ainfty_label, 0);
      DgAlgebra a = assemble_dga(doc, *dga_label);
      return from_dga(make_bar_context(a.complex, std::max(2, opt.max_arity)), a.product);
    }();

    TransferResult res = transfer(*contraction, A, opt.max_arity);
    transfer_checks(res, rep);

    if (out) {
      Document outdoc;
      outdoc.field = doc.field;
      put_complex(outdoc, "big", contraction->big());
      put_complex(outdoc, "small", contraction->small());
      put_sdr(outdoc, "contraction", contraction->datum(), "big", "small");
      put_ainfty(outdoc, "transferred", res.transferred, "small");
      put_barmap(outdoc, "bar_alpha", res.bar_alpha, "small", "big");
      put_barmap(outdoc, "bar_r", res.bar_r, "big", "small");
      put_barmap(outdoc, "bar_h", res.bar_h, "big", "big");
      *out = std::move(outdoc);
    }
  } catch (const std::invalid_argument& e) {
    rep.failure = e.what();
  }

  rep.seconds = since(t0);
  return rep;
}

CommandReport run_suite(const SuiteOptions& opt) {
  const auto t0 = Clock::now();
  CommandReport rep;
  rep.command = "suite";
  param(rep, "seed", std::to_string(opt.seed));
  param(rep, "count", std::to_string(opt.count));
  param(rep, "max_arity", std::to_string(opt.max_arity));
  param(rep, "max_dim", std::to_string(opt.max_dim));
  param(rep, "weights", std::to_string(opt.wmin) + ".." + std::to_string(opt.wmax));
  param(rep, "field", opt.field.name());

  if (opt.count < 0 || opt.max_arity < 1 || opt.max_dim < 0 || opt.wmin > opt.wmax) {
    rep.input_error = true;
    rep.failure = "suite options out of range";
    rep.seconds = since(t0);
    return rep;
  }

  std::vector<SuiteInstance> suite =
      random_suite(opt.seed, opt.count, opt.max_dim, opt.wmin, opt.wmax, opt.field);
  for (size_t i = 0; i < suite.size(); ++i) {
    const SuiteInstance& inst = suite[i];
    const std::string tag = "instance " + std::to_string(i);

    SdrReport sr = check_sdr(inst.contraction.datum());
    long sdr_defect = 0;
    for (long v : {sr.alpha_closed, sr.r_closed, sr.retract, sr.homotopy, sr.h_alpha, sr.r_h,
                   sr.h_h})
      sdr_defect += std::max(0L, v);
    rep.checks.push_back({tag + ": contraction identities", sr.contraction_ok(), sdr_defect});

    AInfinityStructure A =
        inst.product
            ? from_dga(make_bar_context(inst.complex, std::max(2, opt.max_arity)),
                       *inst.product)
            : AInfinityStructure(make_bar_context(inst.complex, opt.max_arity), {});
    TransferResult res = transfer(inst.contraction, A, opt.max_arity);
    TransferReport tr = verify_transfer(res);
    rep.checks.push_back({tag + ": transfer identities", tr.ok(), total_defect(tr)});
  }

  rep.seconds = since(t0);
  return rep;
}

Document fixture_document(const std::string& name) {
  Field F;
  std::vector<std::pair<std::string, Vec>> vectors;
  DgAlgebra dga = [&]() -> DgAlgebra {
    if (name == "interval") return cochain_dga(interval_description(), F);
    if (name == "circle") return cochain_dga(circle_description(), F);
    if (name == "torus") return cochain_dga(torus_description(), F);
    if (name == "massey") {
      MasseyInstance mi = massey_instance(F);
      vectors = {{"x", mi.x}, {"y", mi.y}, {"z", mi.z}};
      return std::move(mi.dga);
    }
    throw std::invalid_argument("unknown fixture '" + name + "'");
  }();

  Contraction c = gaussian_contraction(dga.complex);
  Document doc;
  put_complex(doc, "big", dga.complex);
  put_complex(doc, "small", c.small());
  put_dga(doc, "algebra", dga, "big");
  put_sdr(doc, "sdr", c.datum(), "big", "small");
  for (const auto& [label, v] : vectors) put_vector(doc, label, v);
  return doc;
}

}  // namespace hpt
