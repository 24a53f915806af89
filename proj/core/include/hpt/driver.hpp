#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hpt/io.hpp"

namespace hpt {

/** One named check: pass/fail plus the defect entry count when the check
    measures a map (-1 when it is a plain predicate). */
struct CheckVerdict {
  std::string name;
  bool pass = false;
  long defect = -1;
};

/**
 * Outcome of one driver command. Everything except seconds is a pure
 * function of the inputs, so rendered reports are byte-identical across
 * runs once the timing line is dropped. input_error marks problems with
 * the request itself (unknown label, bad flag, schema-level rejection) as
 * opposed to checks that ran and failed; the CLI turns the three outcomes
 * into exit codes 0 (pass), 1 (check failure), 2 (input error).
 */
struct CommandReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;  // echoed in order
  std::vector<CheckVerdict> checks;
  std::string failure;  // nonempty when a check could not even run
  std::string hint;     // optional remedy, e.g. rerun with --repair
  bool input_error = false;
  double seconds = 0.0;

  bool ok() const;
};

/** Render a report; "seconds" is the final field / line and the only
    nondeterministic part. */
std::string report_json(const CommandReport& r);
std::string report_text(const CommandReport& r);

struct VerifyOptions {
  std::string kind;   // complex | dga | ainfty | sdr
  std::string label;  // empty: the unique record of that kind
  int max_arity = 0;  // ainfty only; 0 means the stored arity
};
/** Run the identity checks the named kind promises. */
CommandReport run_verify(const Document& doc, const VerifyOptions& opt);

struct TransferOptions {
  std::string sdr_label;        // empty: the unique SDR record
  std::string structure_label;  // empty: the unique ainfty record, else the unique dga
  int max_arity = 3;
  bool repair = false;  // run the side-condition repair before refusing the SDR
};
/**
 * Transfer the structure across the contraction and verify every
 * post-condition. When out is nonnull and the pipeline ran, it receives the
 * transferred structure, the perturbed bar maps and the (possibly repaired)
 * contraction as a fresh document.
 */
CommandReport run_transfer(const Document& doc, const TransferOptions& opt, Document* out);

struct SuiteOptions {
  std::uint64_t seed = 1;
  int count = 10;
  int max_arity = 4;
  int max_dim = 8;
  int wmin = -2, wmax = 2;
  Field field;
};
/** Generate the deterministic random suite and run the whole pipeline on
    each instance. Equal options give byte-identical verdict lists. */
CommandReport run_suite(const SuiteOptions& opt);

/**
 * The bundled example documents: "interval", "circle", "torus" and
 * "massey", each holding the algebra ("algebra" on complex "big"), its
 * elimination contraction ("sdr" onto complex "small") and, for massey, the
 * three cocycles "x", "y", "z". Deterministic, so shipped files can be
 * compared byte for byte against regeneration. Throws std::invalid_argument
 * for unknown names.
 */
Document fixture_document(const std::string& name);

}  // namespace hpt
