#include "msdmv/ledger.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "msdmv/codec.hpp"
#include "msdmv/error.hpp"

namespace msdmv::ledger {

namespace {

Digest hash_pair(const Digest& left, const Digest& right) {
  std::string buffer(left.begin(), left.end());
  buffer.append(right.begin(), right.end());
  return sha256(buffer);
}

struct Transfer {
  int from;
  int to;
};

// Batches of the two demo blocks, in transaction-id order.
const std::vector<std::vector<Transfer>> kDemoBatches = {
    {{1, 2}, {1, 3}, {1, 5}, {1, 7}, {9, 1}, {9, 3}, {9, 5}, {9, 11}},
    {{7, 13}, {7, 15}, {4, 2}, {4, 7}, {4, 13}, {3, 4}, {3, 5}, {3, 11}, {3, 13}},
};

constexpr std::int64_t kGenesisTime = 1'700'000'000;
constexpr std::int64_t kBlockInterval = 600;
constexpr std::uint32_t kNBits = 0x1d00ffff;

std::string random_blinding(Rng& rng) {
  Digest raw{};
  for (auto& byte : raw) byte = static_cast<std::uint8_t>(rng.next());
  return to_hex(raw);
}

}  // namespace

Digest commit_amount(std::uint64_t amount, std::string_view blinding) {
  return sha256("amount:" + std::to_string(amount) + ":" + std::string(blinding));
}

Digest tx_leaf(const Transaction& tx) {
  return sha256("tx:" + tx.tx_id + "|" + tx.from + "|" + tx.to + "|" + to_hex(tx.commitment));
}

Digest merkle_root(const std::vector<Digest>& leaves) {
  if (leaves.empty()) throw ParameterError("Merkle tree needs at least one leaf");
  std::vector<Digest> level = leaves;
  do {
    if (level.size() % 2 == 1) level.push_back(level.back());
    std::vector<Digest> next;
    for (std::size_t i = 0; i < level.size(); i += 2) next.push_back(hash_pair(level[i], level[i + 1]));
    level = std::move(next);
  } while (level.size() > 1);
  return level.front();
}

std::string header_bytes(const BlockHeader& header) {
  return "v=" + std::to_string(header.version) + ";root=" + to_hex(header.merkle_root) +
         ";time=" + std::to_string(header.timestamp) + ";bits=" + std::to_string(header.n_bits) +
         ";nonce=" + std::to_string(header.nonce) + ";parent=" + to_hex(header.parent_hash);
}

Digest header_hash(const BlockHeader& header) { return sha256(header_bytes(header)); }

std::string attestation_message(const BlockHeader& header) { return "block-header:" + header_bytes(header); }

Block make_genesis() {
  Block genesis;
  genesis.header.timestamp = kGenesisTime;
  genesis.header.n_bits = kNBits;
  genesis.header.merkle_root = sha256("genesis");
  return genesis;
}

const NetworkMember& Network::member(const std::string& id) const {
  for (const auto& m : members) {
    if (m.id == id) return m;
  }
  throw ParameterError("unknown participant '" + id + "'");
}

session::Membership Network::membership_for(const std::vector<Transaction>& txs) const {
  std::set<std::string> involved;
  for (const auto& tx : txs) {
    member(tx.from);
    member(tx.to);
    involved.insert(tx.from);
    involved.insert(tx.to);
  }
  session::Membership out{session::SchemeTag::combined, params, {}, {}};
  for (const auto& m : members) {
    if (involved.count(m.id) != 0) {
      out.signers.push_back({m.id, m.as_signer});
    } else {
      out.verifiers.push_back({m.id, m.as_verifier});
    }
  }
  return out;
}

Network make_network(combined_scheme::Params params, std::size_t size, Rng& rng) {
  Network network{std::move(params), {}};
  for (std::size_t i = 1; i <= size; ++i) {
    auto as_signer = combined_scheme::member_keygen(network.params, zn_scheme::Side::A, rng);
    auto as_verifier = combined_scheme::member_keygen(network.params, zn_scheme::Side::B, rng);
    network.members.push_back({"P" + std::to_string(i), std::move(as_signer), std::move(as_verifier)});
  }
  return network;
}

BlockHeader draft_header(const BlockHeader& prev, const std::vector<Transaction>& txs, const HeaderFields& fields) {
  if (txs.empty()) throw ParameterError("a block needs at least one transaction");
  std::vector<Digest> leaves;
  for (const auto& tx : txs) leaves.push_back(tx_leaf(tx));
  return BlockHeader{fields.version, merkle_root(leaves), fields.timestamp, fields.n_bits, fields.nonce,
                     header_hash(prev)};
}

Block build_block(const BlockHeader& prev, std::vector<Transaction> txs, const HeaderFields& fields,
                  const session::SessionState& session) {
  const BlockHeader header = draft_header(prev, txs, fields);
  if (session.phase != session::Phase::accepted) {
    throw RefusalError("attestation session ended in phase " + std::string(session::to_string(session.phase)));
  }
  if (session.scheme != session::SchemeTag::combined || !session.signature) {
    throw RefusalError("attestation must be a combined-scheme signature");
  }
  if (session.message != attestation_message(header)) throw RefusalError("session signed a different header");
  Attestation attestation;
  for (const auto& e : session.roster_a) attestation.signers.push_back(e.id);
  for (const auto& e : session.roster_b) attestation.verifiers.push_back(e.id);
  attestation.signature = std::get<combined_scheme::Signature>(*session.signature);
  return Block{header, std::move(txs), std::move(attestation)};
}

Block attest_and_build(const Network& network, const BlockHeader& prev, std::vector<Transaction> txs,
                       const HeaderFields& fields, Rng& rng) {
  const BlockHeader header = draft_header(prev, txs, fields);
  const auto membership = network.membership_for(txs);
  auto run = session::run_honest_session(membership, "block-" + to_hex(header.merkle_root).substr(0, 16),
                                         attestation_message(header), rng);
  return build_block(prev, std::move(txs), fields, run.state);
}

ChainCheck verify_chain(const std::vector<Block>& blocks, const Network& network) {
  if (blocks.empty()) throw ParameterError("chain is empty");
  auto bad = [](std::size_t index, std::string reason) { return ChainCheck{false, index, std::move(reason)}; };
  if (!(blocks.front() == make_genesis())) return bad(0, "genesis block differs");
  for (std::size_t k = 1; k < blocks.size(); ++k) {
    const Block& block = blocks[k];
    if (block.header.parent_hash != header_hash(blocks[k - 1].header)) return bad(k, "parent hash mismatch");
    if (block.transactions.empty()) return bad(k, "empty transaction batch");
    std::set<std::string> ids;
    std::vector<Digest> leaves;
    for (const auto& tx : block.transactions) {
      if (!ids.insert(tx.tx_id).second) return bad(k, "duplicate transaction id " + tx.tx_id);
      leaves.push_back(tx_leaf(tx));
    }
    if (block.header.merkle_root != merkle_root(leaves)) return bad(k, "merkle root mismatch");
    if (!block.attestation) return bad(k, "missing attestation");
    session::Membership membership;
    try {
      membership = network.membership_for(block.transactions);
    } catch (const ParameterError& err) {
      return bad(k, err.what());
    }
    std::vector<std::string> signers, verifiers;
    for (const auto& s : membership.signers) signers.push_back(s.id);
    for (const auto& v : membership.verifiers) verifiers.push_back(v.id);
    if (signers != block.attestation->signers || verifiers != block.attestation->verifiers) {
      return bad(k, "attestation roster does not match the transaction participants");
    }
    combined_scheme::Membership keys;
    for (const auto& s : membership.signers) keys.signers.push_back(std::get<combined_scheme::MemberKey>(s.key));
    for (const auto& v : membership.verifiers) keys.verifiers.push_back(std::get<combined_scheme::MemberKey>(v.key));
    try {
      const auto verdict = combined_scheme::verify(network.params, attestation_message(block.header),
                                                   block.attestation->signature, keys);
      if (!verdict.accepted) return bad(k, "attestation rejected: " + verdict.reason);
    } catch (const ParameterError& err) {
      return bad(k, std::string("malformed attestation: ") + err.what());
    }
  }
  return {};
}

std::vector<Block> demo_chain(const Network& network, Rng& rng) {
  std::vector<Block> chain{make_genesis()};
  for (std::size_t b = 0; b < kDemoBatches.size(); ++b) {
    const auto block_index = b + 1;
    std::vector<Transaction> txs;
    for (std::size_t i = 0; i < kDemoBatches[b].size(); ++i) {
      const auto& transfer = kDemoBatches[b][i];
      const auto amount = rng.uniform_u64(1, 1'000'000);
      txs.push_back({"T" + std::to_string(block_index) + "," + std::to_string(i + 1),
                     "P" + std::to_string(transfer.from), "P" + std::to_string(transfer.to),
                     commit_amount(amount, random_blinding(rng))});
    }
    const HeaderFields fields{1, kGenesisTime + static_cast<std::int64_t>(block_index) * kBlockInterval, kNBits,
                              block_index};
    chain.push_back(attest_and_build(network, chain.back().header, std::move(txs), fields, rng));
  }
  return chain;
}

namespace {

codec::Json header_json(const BlockHeader& h) {
  return {{"version", h.version},         {"merkle_root", to_hex(h.merkle_root)},
          {"timestamp", h.timestamp},     {"n_bits", h.n_bits},
          {"nonce", h.nonce},             {"parent_hash", to_hex(h.parent_hash)}};
}

}  // namespace

std::string block_to_json_line(const Block& block) {
  codec::Json txs = codec::Json::array();
  for (const auto& tx : block.transactions) {
    txs.push_back({{"tx_id", tx.tx_id}, {"from", tx.from}, {"to", tx.to}, {"commitment", to_hex(tx.commitment)}});
  }
  codec::Json j{{"header", header_json(block.header)}, {"transactions", std::move(txs)}};
  if (block.attestation) {
    const auto& sig = block.attestation->signature;
    j["attestation"] = {{"signers", block.attestation->signers},
                        {"verifiers", block.attestation->verifiers},
                        {"signature",
                         {{"scheme", "combined"},
                          {"sigma", codec::to_json(sig.sigma.value)},
                          {"r", codec::to_json(sig.r)},
                          {"s", codec::to_json(sig.s)},
                          {"t", codec::to_json(sig.t)},
                          {"u_bar", codec::to_json(sig.u_bar)}}}};
  } else {
    j["attestation"] = nullptr;
  }
  return j.dump();
}

Block block_from_json_line(std::string_view line) {
  const codec::Json j = codec::parse(line);
  try {
    Block block;
    const auto& h = j.at("header");
    block.header = BlockHeader{h.at("version").get<std::uint32_t>(),
                               digest_from_hex(h.at("merkle_root").get<std::string>()),
                               h.at("timestamp").get<std::int64_t>(),
                               h.at("n_bits").get<std::uint32_t>(),
                               h.at("nonce").get<std::uint64_t>(),
                               digest_from_hex(h.at("parent_hash").get<std::string>())};
    for (const auto& tx : j.at("transactions")) {
      block.transactions.push_back({tx.at("tx_id").get<std::string>(), tx.at("from").get<std::string>(),
                                    tx.at("to").get<std::string>(),
                                    digest_from_hex(tx.at("commitment").get<std::string>())});
    }
    const auto& att = j.at("attestation");
    if (!att.is_null()) {
      const auto sig = codec::signature_from_json(att.at("signature"));
      block.attestation = Attestation{att.at("signers").get<std::vector<std::string>>(),
                                      att.at("verifiers").get<std::vector<std::string>>(),
                                      std::get<combined_scheme::Signature>(sig)};
    }
    return block;
  } catch (const nlohmann::json::exception& err) {
    throw ParameterError(std::string("malformed block record: ") + err.what());
  } catch (const std::bad_variant_access&) {
    throw ParameterError("block attestation must be a combined-scheme signature");
  }
}

void write_chain(std::ostream& out, const std::vector<Block>& blocks) {
  for (const auto& block : blocks) out << block_to_json_line(block) << '\n';
}

std::vector<Block> read_chain(std::istream& in) {
  std::vector<Block> blocks;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) blocks.push_back(block_from_json_line(line));
  }
  return blocks;
}

}  // namespace msdmv::ledger
