// Copyright (c) the mpcs authors. Licensed under the Apache License,
// Version 2.0; see LICENSE or http://www.apache.org/licenses/LICENSE-2.0
#include "cli.hpp"

#include <fstream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "mpcs/ac_sequence.hpp"
#include "mpcs/complexity.hpp"
#include "mpcs/criteria.hpp"
#include "mpcs/dot.hpp"
#include "mpcs/families.hpp"
#include "mpcs/model_checker.hpp"
#include "mpcs/mpcs_format.hpp"

namespace mpcs::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kFinding = 1;
constexpr int kInputError = 2;
constexpr int kBudget = 3;

struct InputOpts {
  std::string file;
  std::string family;
  unsigned n = 0;
};

void add_input_options(CLI::App* cmd, InputOpts& in, bool file_allowed = true) {
  if (file_allowed)
    cmd->add_option("file", in.file, "skeletal protocol file (.mpcs)");
  cmd->add_option("--family", in.family, "built-in protocol family");
  cmd->add_option("--n", in.n, "family parameter");
}

SkeletalGraph load_input(const InputOpts& in) {
  if (in.file.empty() == in.family.empty())
    throw std::runtime_error(
        "exactly one input source required: a file or --family");
  if (!in.file.empty()) return load_skeletal_file(in.file);
  auto fam = family_from_name(in.family);
  if (!fam) throw std::runtime_error("unknown family " + in.family);
  return generate({*fam, in.n});
}

const char* reply_text(TtpReply r) {
  return r == TtpReply::Abort ? "abort" : "signed";
}

std::vector<std::string> trace_lines(const Protocol& p, const Execution& rho) {
  std::vector<std::string> out;
  for (const Step& s : rho.steps) out.push_back(step_text(p, s));
  return out;
}

json verdict_json(const Protocol& p, const SignerVerdict& v) {
  json j;
  j["role"] = p.role_name(v.role);
  j["verdict"] = v.fair ? "fair" : "unfair";
  j["states_explored"] = v.states_explored;
  if (!v.fair) {
    json order = json::array();
    for (VertexId x : v.exit_order) order.push_back(p.dag().name(x));
    j["exit_order"] = order;
    json replies = json::array();
    for (TtpReply r : v.ttp_replies) replies.push_back(reply_text(r));
    j["ttp_replies"] = replies;
    j["witness"] = trace_lines(p, *v.counterexample);
  }
  return j;
}

int cmd_verify(const InputOpts& in, const std::string& signer, bool as_json,
               std::size_t max_states, std::ostream& out) {
  Protocol p = Protocol::expand(load_input(in));
  ModelCheckOptions opts;
  opts.max_states = max_states;

  std::vector<RoleId> roles;
  if (!signer.empty()) {
    auto r = p.find_role(signer);
    if (!r) throw std::runtime_error("unknown signer " + signer);
    roles.push_back(*r);
  } else {
    for (RoleId r = 0; r < p.signer_count(); ++r) roles.push_back(r);
  }

  FairnessReport report;
  for (RoleId r : roles) {
    report.signers.push_back(model_check(p, r, opts));
    report.states_explored += report.signers.back().states_explored;
    if (!report.signers.back().fair) report.fair = false;
  }

  if (as_json) {
    json j;
    j["schema"] = 1;
    j["command"] = "verify";
    j["protocol"] = p.name();
    j["overall"] = report.fair ? "fair" : "unfair";
    j["signers"] = json::array();
    for (const auto& v : report.signers) j["signers"].push_back(verdict_json(p, v));
    out << j.dump(2) << "\n";
  } else {
    out << "protocol " << p.name() << "\n";
    for (const auto& v : report.signers) {
      if (v.fair) {
        out << "signer " << p.role_name(v.role) << ": fair ("
            << v.states_explored << " states)\n";
        continue;
      }
      out << "signer " << p.role_name(v.role) << ": unfair ("
          << v.states_explored << " states)\n";
      out << "  exit order:";
      for (VertexId x : v.exit_order) out << " " << p.dag().name(x);
      out << "\n  ttp replies:";
      for (TtpReply r : v.ttp_replies) out << " " << reply_text(r);
      out << "\n  witness:\n";
      for (const auto& line : trace_lines(p, *v.counterexample))
        out << "    " << line << "\n";
    }
    out << "overall: " << (report.fair ? "fair" : "unfair") << "\n";
  }
  return report.fair ? kOk : kFinding;
}

int cmd_ac_find(const InputOpts& in, bool witness, bool as_json,
                std::ostream& out) {
  Protocol p = Protocol::expand(load_input(in));
  auto ac = find_ac_sequence(p);

  if (as_json) {
    json j;
    j["schema"] = 1;
    j["command"] = "ac-find";
    j["protocol"] = p.name();
    j["found"] = ac.has_value();
    if (ac) {
      json contacts = json::array();
      for (VertexId v : ac->contacts) contacts.push_back(p.dag().name(v));
      j["contacts"] = contacts;
      j["sig_vertex"] = p.dag().name(ac->sig_vertex);
      if (witness)
        j["witness"] = trace_lines(p, ac_to_execution(p, *ac));
    }
    out << j.dump(2) << "\n";
  } else {
    out << "protocol " << p.name() << "\n";
    if (!ac) {
      out << "no AC sequence\n";
    } else {
      out << "ac sequence:";
      for (VertexId v : ac->contacts) out << " " << p.dag().name(v);
      out << " | " << p.dag().name(ac->sig_vertex) << "\n";
      if (witness) {
        out << "witness:\n";
        for (const auto& line : trace_lines(p, ac_to_execution(p, *ac)))
          out << "  " << line << "\n";
      }
    }
  }
  return ac ? kFinding : kOk;
}

int cmd_criteria(const InputOpts& in, bool as_json, std::ostream& out) {
  Protocol p = Protocol::expand(load_input(in));
  auto failures = check_permutation_necessary(p);
  auto suff = check_permutation_sufficient(p);

  if (as_json) {
    json j;
    j["schema"] = 1;
    j["command"] = "criteria";
    j["protocol"] = p.name();
    j["necessary_pass"] = failures.empty();
    j["necessary_failures"] = json::array();
    for (const auto& f : failures) {
      json perm = json::array();
      for (RoleId r : f.permutation) perm.push_back(p.role_name(r));
      j["necessary_failures"].push_back(
          {{"vertex", p.dag().name(f.vertex)}, {"permutation", perm}});
    }
    j["sufficient_applicable"] = suff.applicable;
    j["sufficient_claims"] = json::array();
    for (const auto& c : suff.claims)
      j["sufficient_claims"].push_back(
          {{"role", p.role_name(c.role)}, {"fair", c.fair}});
    out << j.dump(2) << "\n";
  } else {
    out << "protocol " << p.name() << "\n";
    out << "necessary permutation coverage: "
        << (failures.empty() ? "pass" : "FAIL") << "\n";
    for (const auto& f : failures) {
      out << "  missing at " << p.dag().name(f.vertex) << ":";
      for (RoleId r : f.permutation) out << " " << p.role_name(r);
      out << "\n";
    }
    if (!suff.applicable) {
      out << "sufficient criterion: not applicable (in-role parallelism)\n";
    } else {
      out << "sufficient criterion:\n";
      for (const auto& c : suff.claims)
        out << "  fair for " << p.role_name(c.role) << ": "
            << (c.fair ? "yes" : "unknown") << "\n";
    }
  }
  return failures.empty() ? kOk : kFinding;
}

int cmd_complexity(const InputOpts& in, bool as_json, std::ostream& out) {
  Protocol p = Protocol::expand(load_input(in));
  ComplexityReport r = complexity_report(p);
  if (as_json) {
    json j;
    j["schema"] = 1;
    j["command"] = "complexity";
    j["protocol"] = p.name();
    j["n_signers"] = r.n_signers;
    j["mc"] = r.mc;
    j["pc"] = r.pc;
    if (r.bounds_known) {
      j["mc_lower_bound"] = r.mc_lower_bound;
      j["pc_lower_bound"] = r.pc_lower_bound;
    }
    out << j.dump(2) << "\n";
  } else {
    out << "protocol " << p.name() << "\n";
    out << "signers: " << r.n_signers << "\n";
    out << "mc: " << r.mc << "\npc: " << r.pc << "\n";
    if (r.bounds_known)
      out << "mc_lower_bound: " << r.mc_lower_bound
          << "\npc_lower_bound: " << r.pc_lower_bound << "\n";
  }
  return kOk;
}

int cmd_expand(const InputOpts& in, std::ostream& out) {
  Protocol p = Protocol::expand(load_input(in));
  const Dag& g = p.dag();
  out << "protocol " << p.name() << "\n";
  out << "signers";
  for (RoleId r = 0; r < p.signer_count(); ++r) out << " " << p.role_name(r);
  out << "\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "vertex " << g.name(v) << " role=" << p.role_name(p.role_of(v));
    if (p.sigma().test(v)) out << " sign";
    out << "\n";
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    out << "edge " << g.name(g.edge(e).src) << " " << g.name(g.edge(e).dst)
        << " " << p.label_text(e) << "\n";
  return kOk;
}

int write_out(const std::string& text, const std::string& path,
              std::ostream& out) {
  if (path.empty()) {
    out << text;
    return kOk;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"DAG multi-party contract signing analyzer"};
  app.require_subcommand(1);

  InputOpts in;
  bool as_json = false;
  bool witness = false;
  bool full = false;
  std::string signer;
  std::string out_path;
  std::size_t max_states = 10'000'000;

  auto* verify = app.add_subcommand("verify", "model check fairness");
  add_input_options(verify, in);
  verify->add_option("--signer", signer, "check a single signer role");
  verify->add_flag("--json", as_json, "JSON report");
  verify->add_option("--max-states", max_states, "state budget");

  auto* acfind = app.add_subcommand("ac-find", "search abort-chaining sequences");
  add_input_options(acfind, in);
  acfind->add_flag("--witness", witness, "emit the witness execution");
  acfind->add_flag("--json", as_json, "JSON report");

  auto* criteria = app.add_subcommand("criteria", "permutation criteria");
  add_input_options(criteria, in);
  criteria->add_flag("--json", as_json, "JSON report");

  auto* complexity = app.add_subcommand("complexity", "message/parallel complexity");
  add_input_options(complexity, in);
  complexity->add_flag("--json", as_json, "JSON report");

  auto* expand = app.add_subcommand("expand", "print the full graph");
  add_input_options(expand, in);

  auto* generate = app.add_subcommand("generate", "write a family fixture");
  add_input_options(generate, in, /*file_allowed=*/false);
  generate->add_option("--out", out_path, "output path (default stdout)");

  auto* render = app.add_subcommand("render", "emit graphviz DOT");
  add_input_options(render, in);
  render->add_flag("--full", full, "render the expanded graph");
  render->add_option("--out", out_path, "output path (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (verify->parsed())
      return cmd_verify(in, signer, as_json, max_states, out);
    if (acfind->parsed()) return cmd_ac_find(in, witness, as_json, out);
    if (criteria->parsed()) return cmd_criteria(in, as_json, out);
    if (complexity->parsed()) return cmd_complexity(in, as_json, out);
    if (expand->parsed()) return cmd_expand(in, out);
    if (generate->parsed()) {
      if (in.family.empty())
        throw std::runtime_error("generate requires --family");
      return write_out(serialize_skeletal(load_input(in)), out_path, out);
    }
    if (render->parsed()) {
      SkeletalGraph sk = load_input(in);
      std::string dot =
          full ? to_dot(Protocol::expand(sk)) : to_dot(sk);
      return write_out(dot, out_path, out);
    }
  } catch (const MaxStatesExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace mpcs::cli
