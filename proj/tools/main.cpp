#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "hessec/report.hpp"

using namespace hessec;

int main(int argc, char** argv) {
  CLI::App app{"exact Hesse-curve verifier for pencils of plane curves over large prime fields"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_field_opts = [&](CLI::App* c) {
    c->add_option("--seed", cfg.seed, "RNG seed; also drives the prime unless --prime is given");
    c->add_option("--prime", cfg.prime, "explicit prime modulus (odd, < 2^63)");
  };
  auto add_io_opts = [&](CLI::App* c) {
    c->add_option("--out", cfg.out_path, "write the JSON report here instead of stdout");
    c->add_flag("--quiet", cfg.quiet, "suppress the human summary on stderr");
  };

  auto* v = app.add_subcommand("verify", "draw a random pencil and machine-check the theorem");
  v->add_option("--degree", cfg.d, "member degree d >= 3")->required();
  add_field_opts(v);
  v->add_flag("--long", cfg.long_run, "include the hyperflex census (minutes at degree 4)");
  v->add_option("--cache", cfg.cache_path, "resumable sample cache for the census");
  add_io_opts(v);

  auto* h = app.add_subcommand("hesse", "closed-form Hesse curve of an explicit pencil");
  h->add_option("--f0", cfg.f0_text, "first generator, e.g. \"x^3+y^3+z^3\"")->required();
  h->add_option("--f1", cfg.f1_text, "second generator, e.g. \"x*y*z\"")->required();
  add_field_opts(h);
  add_io_opts(h);

  auto* fl = app.add_subcommand("flexes", "certified flex set of one member of a random pencil");
  fl->add_option("--degree", cfg.d, "member degree d >= 3")->required();
  add_field_opts(fl);
  fl->add_option("--t", cfg.t_text, "member parameter: decimal residue or inf (default 0)");
  add_io_opts(fl);

  auto* sf =
      app.add_subcommand("singular-fibers", "certified nodal members of a random pencil");
  sf->add_option("--degree", cfg.d, "member degree d >= 3")->required();
  add_field_opts(sf);
  add_io_opts(sf);

  auto* hf = app.add_subcommand("hyperflexes", "census of hyperflex-carrying members");
  hf->add_option("--degree", cfg.d, "member degree d >= 3")->required();
  add_field_opts(hf);
  hf->add_flag("--long", cfg.long_run, "opt in to the long run (required for degree >= 4)");
  hf->add_option("--cache", cfg.cache_path, "resumable sample cache");
  add_io_opts(hf);

  auto* au = app.add_subcommand("audit", "closed-form count audits over a degree range");
  au->add_option("--range", cfg.range_text, "inclusive range a..b with 3 <= a <= b <= 1000")
      ->required();
  add_io_opts(au);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;  // bad input
  }

  cfg.subcommand = app.get_subcommands().front()->get_name();
  Report r = run_command(cfg);

  std::string body = render_json(r.doc);
  if (!cfg.out_path.empty()) {
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << cfg.out_path << "\n";
      return 3;
    }
    out << body;
  } else {
    std::cout << body;
  }
  if (!cfg.quiet) std::cerr << r.summary;
  return r.exit_code;
}
