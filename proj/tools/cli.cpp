#include "cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "msdmv/codec.hpp"
#include "msdmv/error.hpp"
#include "msdmv/ledger.hpp"
#include "vectors.hpp"

namespace msdmv::cli {

namespace {

using codec::Json;
using session::SchemeTag;

constexpr std::uint64_t kDefaultSeed = 1;
constexpr std::size_t kNetworkSize = 20;
const char* const kLedgerSet = "paper-ex2";

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParameterError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParameterError("cannot write " + path);
  out << text;
  if (!out) throw ParameterError("write to " + path + " failed");
}

// Writes to the file, or to stdout when no path was given.
void emit(const std::optional<std::string>& path, const Json& j, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (path) {
    write_text(*path, text);
  } else {
    out << text;
  }
}

SchemeTag parse_scheme(const std::string& text) { return session::scheme_from_string(text); }

session::SchemeParams resolve_params(const std::optional<std::string>& scheme, const std::optional<std::string>& set,
                                     const std::optional<std::string>& params_file, Rng& rng) {
  if (params_file) {
    auto params = codec::params_from_json(codec::parse(read_file(*params_file)));
    if (scheme && params.index() != static_cast<std::size_t>(parse_scheme(*scheme))) {
      throw ParameterError("parameter file is for a different scheme");
    }
    return params;
  }
  if (!scheme) throw ParameterError("--scheme is required without --params");
  const SchemeTag tag = parse_scheme(*scheme);
  return set ? session::named_params(tag, *set) : session::random_params(tag, rng);
}

session::Membership load_keys(const std::string& path) {
  return codec::membership_from_json(codec::parse(read_file(path)));
}

GElem pairing_aggregate(const std::vector<session::Participant>& members, const PairingParams& params) {
  std::vector<GElem> points;
  for (const auto& m : members) points.push_back(std::get<pairing_scheme::Member>(m.key).public_point);
  return pairing_scheme::aggregate_public(points, params);
}

// Range and curve-membership checks on a received signature. Throws
// ParameterError for a malformed one.
void check_signature(const session::SchemeParams& params, const session::Signature& signature) {
  if (signature.index() != params.index()) throw ParameterError("signature is for a different scheme");
  std::visit(Overloaded{[&](const PairingParams& p) {
                          if (!in_target_group(std::get<pairing_scheme::Signature>(signature).sigma, p))
                            throw ParameterError("sigma is not in the target group");
                        },
                        [&](const zn_scheme::Params& p) {
                          zn_scheme::check_well_formed(p, std::get<zn_scheme::Signature>(signature));
                        },
                        [&](const ec_scheme::Params& p) {
                          ec_scheme::check_well_formed(p, std::get<ec_scheme::Signature>(signature));
                        },
                        [&](const combined_scheme::Params& p) {
                          combined_scheme::check_well_formed(p, std::get<combined_scheme::Signature>(signature));
                        }},
             params);
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool json = false;
};

int report_verdict(Context& ctx, bool accepted, const std::string& reason, Json extra = Json::object()) {
  if (ctx.json) {
    extra["accepted"] = accepted;
    extra["reason"] = reason;
    ctx.out << extra.dump() << "\n";
  } else {
    ctx.out << (accepted ? "accepted" : "rejected") << ": " << reason << "\n";
  }
  return accepted ? kOk : kRejected;
}

// ---- subcommands ----

struct ParamsGenArgs {
  std::optional<std::string> scheme, set, out;
  std::uint64_t seed = kDefaultSeed;
};

int cmd_params_gen(Context& ctx, const ParamsGenArgs& a) {
  Rng rng(a.seed);
  const auto params = resolve_params(a.scheme, a.set, std::nullopt, rng);
  emit(a.out, codec::params_to_json(params), ctx.out);
  return kOk;
}

struct KeygenArgs {
  std::optional<std::string> scheme, set, params, out;
  std::size_t signers = 3;
  std::size_t verifiers = 2;
  std::uint64_t seed = kDefaultSeed;
};

int cmd_keygen(Context& ctx, const KeygenArgs& a) {
  Rng rng(a.seed);
  auto params = resolve_params(a.scheme, a.set, a.params, rng);
  const auto tag = static_cast<SchemeTag>(params.index());
  const auto membership = session::generate_membership(tag, std::move(params), a.signers, a.verifiers, rng);
  emit(a.out, codec::membership_to_json(membership), ctx.out);
  return kOk;
}

struct SignArgs {
  std::string keys, message, session = "session-1";
  std::optional<std::string> out, log;
  std::uint64_t seed = kDefaultSeed;
};

int cmd_sign(Context& ctx, const SignArgs& a) {
  const auto membership = load_keys(a.keys);
  Rng rng(a.seed);
  const auto run = session::run_honest_session(membership, a.session, a.message, rng);
  if (a.log) {
    std::string text;
    for (const auto& line : run.log) text += line + "\n";
    write_text(*a.log, text);
  }
  if (!run.state.signature) throw SequencingError("session ended without a signature");

  std::optional<GElem> u, v;
  if (const auto* p = std::get_if<PairingParams>(&membership.params)) {
    u = pairing_aggregate(membership.signers, *p);
    v = pairing_aggregate(membership.verifiers, *p);
  }
  const Json record =
      codec::signature_to_json(*run.state.signature, membership.params, u ? &*u : nullptr, v ? &*v : nullptr);
  if (a.out) {
    emit(a.out, record, ctx.out);
  } else if (!ctx.json) {
    emit(std::nullopt, record, ctx.out);
  }
  const bool accepted = run.state.phase == session::Phase::accepted;
  Json extra{{"phase", session::to_string(run.state.phase)}};
  if (!a.out) extra["signature"] = record;
  return report_verdict(ctx, accepted, "session " + std::string(session::to_string(run.state.phase)), extra);
}

struct VerifyArgs {
  std::string keys, message, sig, session = "verify-1";
};

int cmd_verify(Context& ctx, const VerifyArgs& a) {
  const auto membership = load_keys(a.keys);
  const auto signature = codec::signature_from_json(codec::parse(read_file(a.sig)));
  if (signature.index() != membership.params.index()) throw ParameterError("signature is for a different scheme");
  try {
    check_signature(membership.params, signature);
  } catch (const ParameterError& e) {
    return report_verdict(ctx, false, std::string("malformed signature: ") + e.what());
  }
  const auto run = session::run_verification(membership, a.session, a.message, signature);
  const bool accepted = run.state.phase == session::Phase::accepted;
  std::size_t denials = 0;
  std::string reason = "accepted";
  for (const auto& [id, verdict] : run.state.verdicts) {
    if (!verdict.accept) {
      ++denials;
      reason = verdict.reason;
    }
  }
  Json extra{{"phase", session::to_string(run.state.phase)},
             {"denials", denials},
             {"verifiers", membership.verifiers.size()}};
  if (!accepted) {
    reason = std::to_string(denials) + " of " + std::to_string(membership.verifiers.size()) +
             " verifiers denied (" + reason + "); signature returned to system A";
  }
  return report_verdict(ctx, accepted, reason, extra);
}

struct SimulateArgs {
  std::string keys, message, mode = "corrected";
  std::optional<std::string> out;
  std::uint64_t seed = kDefaultSeed;
};

int cmd_simulate(Context& ctx, const SimulateArgs& a) {
  const auto membership = load_keys(a.keys);
  const auto mode = a.mode == "paper" ? zn_scheme::SimulationMode::paper : zn_scheme::SimulationMode::corrected;
  Rng rng(a.seed);
  const BigInt k = session::sample_nonce(membership.params, rng);

  bool accepted = false;
  std::string reason;
  Json record;
  std::visit(
      Overloaded{
          [&](const PairingParams& p) {
            // The verifiers' product of zeta shares is already signature-shaped.
            const GElem u = pairing_aggregate(membership.signers, p);
            const GElem v = pairing_aggregate(membership.verifiers, p);
            std::vector<pairing_scheme::Signature> zetas, sigmas;
            for (const auto& d : membership.verifiers)
              zetas.push_back(pairing_scheme::verify_share(a.message, std::get<pairing_scheme::Member>(d.key), u, p));
            for (const auto& s : membership.signers)
              sigmas.push_back(pairing_scheme::sign_share(a.message, std::get<pairing_scheme::Member>(s.key), v, p));
            const auto simulated = pairing_scheme::combine(zetas, p);
            accepted = pairing_scheme::verify(simulated, sigmas, p);
            reason = accepted ? "accepted" : "pairing check";
            record = codec::signature_to_json(simulated, membership.params, &u, &v);
          },
          [&](const zn_scheme::Params& p) {
            std::vector<zn_scheme::MemberKey> signers, verifiers;
            std::vector<BigInt> e_a, y_a, d_a, e_b, y_b, shares;
            for (const auto& s : membership.signers) signers.push_back(std::get<zn_scheme::MemberKey>(s.key));
            for (const auto& d : membership.verifiers) verifiers.push_back(std::get<zn_scheme::MemberKey>(d.key));
            for (const auto& s : signers) e_a.push_back(s.e), y_a.push_back(s.y), d_a.push_back(s.d);
            for (const auto& d : verifiers) e_b.push_back(d.e), y_b.push_back(d.y);
            const auto simulated = zn_scheme::simulate_transcript(p, a.message, verifiers, e_a, y_a, k, mode);
            for (const auto& s : signers) shares.push_back(zn_scheme::decode_share(p, simulated, s));
            const auto verdict = zn_scheme::verify_mirrored(p, a.message, simulated, e_b, y_b, d_a, shares);
            accepted = verdict.accepted;
            reason = verdict.reason;
            record = codec::signature_to_json(simulated, membership.params);
          },
          [&](const ec_scheme::Params& p) {
            std::vector<ec_scheme::MemberKey> signers, verifiers;
            std::vector<BigInt> e_a, d_a, e_b;
            std::vector<Point> y_a, y_b, shares;
            for (const auto& s : membership.signers) signers.push_back(std::get<ec_scheme::MemberKey>(s.key));
            for (const auto& d : membership.verifiers) verifiers.push_back(std::get<ec_scheme::MemberKey>(d.key));
            for (const auto& s : signers) e_a.push_back(s.e), y_a.push_back(s.y), d_a.push_back(s.d);
            for (const auto& d : verifiers) e_b.push_back(d.e), y_b.push_back(d.y);
            const auto simulated = ec_scheme::simulate_transcript(p, a.message, verifiers, e_a, y_a, k, mode);
            for (const auto& s : signers) shares.push_back(ec_scheme::decode_share(p, simulated, s));
            const auto verdict = ec_scheme::verify_mirrored(p, a.message, simulated, e_b, y_b, d_a, shares);
            accepted = verdict.accepted;
            reason = verdict.reason;
            record = codec::signature_to_json(simulated, membership.params);
          },
          [&](const combined_scheme::Params& p) {
            combined_scheme::Membership keys;
            for (const auto& s : membership.signers) keys.signers.push_back(std::get<combined_scheme::MemberKey>(s.key));
            for (const auto& d : membership.verifiers)
              keys.verifiers.push_back(std::get<combined_scheme::MemberKey>(d.key));
            const auto simulated = combined_scheme::simulate_transcript(p, a.message, keys, k, mode);
            const auto verdict = combined_scheme::verify_mirrored(p, a.message, simulated, keys);
            accepted = verdict.accepted;
            reason = verdict.reason;
            record = codec::signature_to_json(simulated, membership.params);
          }},
      membership.params);

  if (a.out) emit(a.out, record, ctx.out);
  Json extra{{"mode", a.mode}, {"check", "mirrored"}};
  if (!a.out) extra["transcript"] = record;
  if (!ctx.json && !a.out) emit(std::nullopt, record, ctx.out);
  return report_verdict(ctx, accepted, "mirrored verification " + reason, extra);
}

struct VectorsArgs {
  std::string scheme = "all";
  std::string set = "all";
};

int cmd_vectors(Context& ctx, const VectorsArgs& a) {
  std::vector<SchemeTag> schemes;
  if (a.scheme == "all") {
    schemes = {SchemeTag::s1, SchemeTag::s2, SchemeTag::s3};
  } else {
    schemes = {parse_scheme(a.scheme)};
  }
  std::vector<std::string> sets = a.set == "all" ? std::vector<std::string>{"paper-ex1", "paper-ex2"}
                                                 : std::vector<std::string>{a.set};
  std::vector<VectorCheck> checks;
  for (const auto scheme : schemes) {
    for (const auto& set : sets) {
      auto part = paper_vectors(scheme, set);
      checks.insert(checks.end(), part.begin(), part.end());
    }
  }
  std::size_t failed = 0;
  Json rows = Json::array();
  for (const auto& c : checks) {
    if (!c.pass) ++failed;
    if (ctx.json) {
      rows.push_back({{"scheme", c.scheme},
                      {"set", c.set},
                      {"value", c.label},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"pass", c.pass}});
    } else {
      ctx.out << (c.pass ? "PASS " : "FAIL ") << c.scheme << " " << c.set << " " << c.label << ": expected "
              << c.expected << ", got " << c.actual << "\n";
    }
  }
  if (ctx.json) {
    ctx.out << Json{{"checks", rows}, {"failed", failed}, {"total", checks.size()}}.dump() << "\n";
  } else {
    ctx.out << (checks.size() - failed) << "/" << checks.size() << " values pass\n";
  }
  return failed == 0 ? kOk : kRejected;
}

struct LedgerArgs {
  std::optional<std::string> out;
  std::string chain;
  std::uint64_t seed = kDefaultSeed;
};

ledger::Network ledger_network(Rng& rng) {
  return ledger::make_network(combined_scheme::Params::named(kLedgerSet), kNetworkSize, rng);
}

int report_chain(Context& ctx, const std::vector<ledger::Block>& chain, const ledger::ChainCheck& check) {
  if (ctx.json) {
    Json blocks = Json::array();
    for (const auto& b : chain) {
      blocks.push_back({{"hash", to_hex(ledger::header_hash(b.header))},
                        {"transactions", b.transactions.size()},
                        {"signers", b.attestation ? b.attestation->signers.size() : 0}});
    }
    Json j{{"blocks", blocks}, {"ok", check.ok}, {"reason", check.reason}};
    if (check.first_bad) j["first_bad"] = *check.first_bad;
    ctx.out << j.dump() << "\n";
  } else {
    for (std::size_t i = 0; i < chain.size(); ++i) {
      const auto& b = chain[i];
      ctx.out << "block " << i << " " << to_hex(ledger::header_hash(b.header)) << " txs=" << b.transactions.size();
      if (b.attestation) {
        ctx.out << " signers=" << b.attestation->signers.size() << " verifiers=" << b.attestation->verifiers.size();
      }
      ctx.out << "\n";
    }
    if (check.ok) {
      ctx.out << "chain verified\n";
    } else {
      ctx.out << "chain rejected at block " << (check.first_bad ? std::to_string(*check.first_bad) : "?") << ": "
              << check.reason << "\n";
    }
  }
  return check.ok ? kOk : kRejected;
}

int cmd_ledger_demo(Context& ctx, const LedgerArgs& a) {
  Rng rng(a.seed);
  const auto network = ledger_network(rng);
  const auto chain = ledger::demo_chain(network, rng);
  if (a.out) {
    std::ostringstream text;
    ledger::write_chain(text, chain);
    write_text(*a.out, text.str());
  }
  return report_chain(ctx, chain, ledger::verify_chain(chain, network));
}

int cmd_ledger_verify(Context& ctx, const LedgerArgs& a) {
  Rng rng(a.seed);
  const auto network = ledger_network(rng);
  std::istringstream in(read_file(a.chain));
  const auto chain = ledger::read_chain(in);
  return report_chain(ctx, chain, ledger::verify_chain(chain, network));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-signer designated multi-verifier signature toolkit", "msdmv"};
  app.require_subcommand(1);
  Context ctx{out, err};
  app.add_flag("--json", ctx.json, "machine-readable output");

  const std::vector<std::string> scheme_names{"s1", "s2", "s3", "combined"};
  const std::vector<std::string> set_names{"paper-ex1", "paper-ex2"};

  ParamsGenArgs params_gen;
  auto* params_cmd = app.add_subcommand("params", "parameter sets");
  params_cmd->require_subcommand(1);
  auto* gen = params_cmd->add_subcommand("gen", "write a named or seeded random parameter set");
  gen->add_option("--scheme", params_gen.scheme)->required()->check(CLI::IsMember(scheme_names));
  gen->add_option("--set", params_gen.set, "named set; random from --seed when absent")->check(CLI::IsMember(set_names));
  gen->add_option("--seed", params_gen.seed);
  gen->add_option("--out", params_gen.out);

  KeygenArgs keygen;
  auto* keygen_cmd = app.add_subcommand("keygen", "generate signer and verifier keys");
  keygen_cmd->add_option("--scheme", keygen.scheme)->check(CLI::IsMember(scheme_names));
  auto* keygen_set = keygen_cmd->add_option("--set", keygen.set)->check(CLI::IsMember(set_names));
  keygen_cmd->add_option("--params", keygen.params, "parameter file")->excludes(keygen_set);
  keygen_cmd->add_option("--signers", keygen.signers)->check(CLI::Range(1, 64));
  keygen_cmd->add_option("--verifiers", keygen.verifiers)->check(CLI::Range(1, 64));
  keygen_cmd->add_option("--seed", keygen.seed);
  keygen_cmd->add_option("--out", keygen.out);

  SignArgs sign;
  auto* sign_cmd = app.add_subcommand("sign", "run a full signing session");
  sign_cmd->add_option("--keys", sign.keys)->required();
  sign_cmd->add_option("--message", sign.message)->required();
  sign_cmd->add_option("--seed", sign.seed);
  sign_cmd->add_option("--session", sign.session);
  sign_cmd->add_option("--out", sign.out);
  sign_cmd->add_option("--log", sign.log, "JSON-lines event log");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "designated verification of a signature file");
  verify_cmd->add_option("--keys", verify.keys)->required();
  verify_cmd->add_option("--message", verify.message)->required();
  verify_cmd->add_option("--sig", verify.sig)->required();
  verify_cmd->add_option("--session", verify.session);

  SimulateArgs simulate;
  auto* simulate_cmd = app.add_subcommand("simulate", "verifier-side transcript simulation");
  simulate_cmd->add_option("--keys", simulate.keys)->required();
  simulate_cmd->add_option("--message", simulate.message)->required();
  simulate_cmd->add_option("--mode", simulate.mode)->check(CLI::IsMember({"paper", "corrected"}));
  simulate_cmd->add_option("--seed", simulate.seed);
  simulate_cmd->add_option("--out", simulate.out);

  VectorsArgs vectors;
  auto* vectors_cmd = app.add_subcommand("vectors", "replay the worked examples");
  vectors_cmd->add_option("--scheme", vectors.scheme)->check(CLI::IsMember({"s1", "s2", "s3", "combined", "all"}));
  vectors_cmd->add_option("--set", vectors.set)->check(CLI::IsMember({"paper-ex1", "paper-ex2", "all"}));

  LedgerArgs ledger_args;
  auto* ledger_cmd = app.add_subcommand("ledger", "attested toy ledger");
  ledger_cmd->require_subcommand(1);
  auto* demo = ledger_cmd->add_subcommand("demo", "build and verify the two-block demo chain");
  demo->add_option("--seed", ledger_args.seed);
  demo->add_option("--out", ledger_args.out, "chain as JSON lines");
  auto* ledger_verify = ledger_cmd->add_subcommand("verify", "verify a chain file");
  ledger_verify->add_option("--chain", ledger_args.chain)->required();
  ledger_verify->add_option("--seed", ledger_args.seed, "seed the network was built with");

  std::vector<std::string> argv_store{"msdmv"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) return cmd_params_gen(ctx, params_gen);
    if (*keygen_cmd) return cmd_keygen(ctx, keygen);
    if (*sign_cmd) return cmd_sign(ctx, sign);
    if (*verify_cmd) return cmd_verify(ctx, verify);
    if (*simulate_cmd) return cmd_simulate(ctx, simulate);
    if (*vectors_cmd) return cmd_vectors(ctx, vectors);
    if (*demo) return cmd_ledger_demo(ctx, ledger_args);
    if (*ledger_verify) return cmd_ledger_verify(ctx, ledger_args);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  }
  err << "usage error: no command\n";
  return kUsage;
}

}  // namespace msdmv::cli
