// hpt: verify interchange documents, transfer structures across
// contractions, and run the randomized suite. Exit codes: 0 every check
// passed, 1 at least one check failed, 2 the input could not be used.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "hpt/driver.hpp"
#include "hpt/io.hpp"

namespace {

int finish(const hpt::CommandReport& rep, const std::string& format) {
  std::cout << (format == "json" ? hpt::report_json(rep) : hpt::report_text(rep));
  if (rep.input_error) return 2;
  return rep.ok() ? 0 : 1;
}

hpt::CommandReport unreadable(const std::string& command, const std::string& path,
                              const std::string& why) {
  hpt::CommandReport rep;
  rep.command = command;
  rep.params.push_back({"input", path});
  rep.input_error = true;
  rep.failure = "cannot read the input: " + why;
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact homotopy transfer over Q and F_p"};
  app.require_subcommand(1);

  CLI::App* verify = app.add_subcommand("verify", "check the identities a kind of record promises");
  std::string v_input, v_kind, v_label, v_format = "text";
  int v_arity = 0;
  verify->add_option("input", v_input, "interchange document")->required();
  verify->add_option("--kind", v_kind, "complex | dga | ainfty | sdr")
      ->required()
      ->check(CLI::IsMember({"complex", "dga", "ainfty", "sdr"}));
  verify->add_option("--label", v_label, "which record (default: the only one of that kind)");
  verify->add_option("--max-arity", v_arity,
                     "ainfty only: check the Stasheff identities up to this arity "
                     "(default: the stored truncation)");
  verify->add_option("--format", v_format, "report format")
      ->check(CLI::IsMember({"json", "text"}));

  CLI::App* transfer =
      app.add_subcommand("transfer", "move a structure across a contraction and verify it");
  std::string t_input, t_sdr, t_structure, t_out, t_format = "text";
  int t_arity = 3;
  bool t_repair = false;
  transfer->add_option("input", t_input, "interchange document")->required();
  transfer->add_option("--max-arity", t_arity, "truncation arity for the transferred structure");
  transfer->add_option("--sdr", t_sdr, "which sdr record (default: the only one)");
  transfer->add_option("--structure", t_structure,
                       "which dga or ainfty record (default: the only one)");
  transfer->add_flag("--repair", t_repair,
                     "rebuild the homotopy so the side conditions hold before transferring");
  transfer->add_option("--out", t_out, "write the transferred structure here");
  transfer->add_option("--format", t_format, "report format")
      ->check(CLI::IsMember({"json", "text"}));

  CLI::App* suite = app.add_subcommand("suite", "run the randomized end-to-end suite");
  std::string s_field = "Q", s_format = "text";
  std::uint64_t s_seed = 1;
  int s_count = 10, s_arity = 4, s_dim = 8, s_wmin = -2, s_wmax = 2;
  suite->add_option("--seed", s_seed, "suite seed, echoed in the report");
  suite->add_option("--count", s_count, "number of instances");
  suite->add_option("--max-arity", s_arity, "truncation arity for each transfer");
  suite->add_option("--field", s_field, "Q or Fp:<prime>");
  suite->add_option("--max-dim", s_dim, "dimension cap per instance");
  suite->add_option("--wmin", s_wmin, "smallest weight");
  suite->add_option("--wmax", s_wmax, "largest weight");
  suite->add_option("--format", s_format, "report format")
      ->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      hpt::Document doc;
      try {
        doc = hpt::read_document_file(v_input);
      } catch (const hpt::ParseError& e) {
        return finish(unreadable("verify", v_input, e.what()), v_format);
      }
      hpt::VerifyOptions opt;
      opt.kind = v_kind;
      opt.label = v_label;
      opt.max_arity = v_arity;
      return finish(hpt::run_verify(doc, opt), v_format);
    }

    if (transfer->parsed()) {
      hpt::Document doc;
      try {
        doc = hpt::read_document_file(t_input);
      } catch (const hpt::ParseError& e) {
        return finish(unreadable("transfer", t_input, e.what()), t_format);
      }
      hpt::TransferOptions opt;
      opt.sdr_label = t_sdr;
      opt.structure_label = t_structure;
      opt.max_arity = t_arity;
      opt.repair = t_repair;
      hpt::Document result;
      hpt::CommandReport rep = hpt::run_transfer(doc, opt, t_out.empty() ? nullptr : &result);
      if (!t_out.empty() && !rep.input_error && rep.failure.empty())
        hpt::write_document_file(result, t_out);
      return finish(rep, t_format);
    }

    hpt::SuiteOptions opt;
    opt.seed = s_seed;
    opt.count = s_count;
    opt.max_arity = s_arity;
    opt.max_dim = s_dim;
    opt.wmin = s_wmin;
    opt.wmax = s_wmax;
    try {
      opt.field = hpt::Field::from_name(s_field);
    } catch (const std::invalid_argument& e) {
      hpt::CommandReport rep;
      rep.command = "suite";
      rep.params.push_back({"field", s_field});
      rep.input_error = true;
      rep.failure = e.what();
      return finish(rep, s_format);
    }
    return finish(hpt::run_suite(opt), s_format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
