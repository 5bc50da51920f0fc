#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "msdmv/hash.hpp"
#include "msdmv/participant.hpp"
#include "msdmv/scheme_combined.hpp"

// Permissioned toy chain: each block's transaction batch is attested by its
// participants with the combined scheme, designated to every other member.
namespace msdmv::ledger {

struct Transaction {
  std::string tx_id;  // "T1,4": block 1, transaction 4
  std::string from;
  std::string to;
  Digest commitment;  // hides the amount
  friend bool operator==(const Transaction&, const Transaction&) = default;
};

Digest commit_amount(std::uint64_t amount, std::string_view blinding);
Digest tx_leaf(const Transaction& tx);

// Pairwise SHA-256 of concatenated children; an odd level repeats its last node.
Digest merkle_root(const std::vector<Digest>& leaves);

struct BlockHeader {
  std::uint32_t version = 1;
  Digest merkle_root{};
  std::int64_t timestamp = 0;
  std::uint32_t n_bits = 0;  // carried, no proof of work
  std::uint64_t nonce = 0;
  Digest parent_hash{};
  friend bool operator==(const BlockHeader&, const BlockHeader&) = default;
};

std::string header_bytes(const BlockHeader& header);
Digest header_hash(const BlockHeader& header);

// The message the block's signers attest to.
std::string attestation_message(const BlockHeader& header);

struct Attestation {
  std::vector<std::string> signers;
  std::vector<std::string> verifiers;
  combined_scheme::Signature signature;
  friend bool operator==(const Attestation&, const Attestation&) = default;
};

struct Block {
  BlockHeader header;
  std::vector<Transaction> transactions;
  std::optional<Attestation> attestation;  // absent only for genesis
  friend bool operator==(const Block&, const Block&) = default;
};

Block make_genesis();

// Participants P1..Pn, each with a signer-side and a verifier-side key.
struct NetworkMember {
  std::string id;
  combined_scheme::MemberKey as_signer;
  combined_scheme::MemberKey as_verifier;
};

struct Network {
  combined_scheme::Params params;
  std::vector<NetworkMember> members;

  const NetworkMember& member(const std::string& id) const;
  // Transaction participants sign; everyone else verifies. Network order.
  session::Membership membership_for(const std::vector<Transaction>& txs) const;
};

Network make_network(combined_scheme::Params params, std::size_t size, Rng& rng);

struct HeaderFields {
  std::uint32_t version = 1;
  std::int64_t timestamp = 0;
  std::uint32_t n_bits = 0;
  std::uint64_t nonce = 0;
};

BlockHeader draft_header(const BlockHeader& prev, const std::vector<Transaction>& txs, const HeaderFields& fields);

// Throws RefusalError unless the session accepted a signature over this
// block's header; ParameterError for an empty batch.
Block build_block(const BlockHeader& prev, std::vector<Transaction> txs, const HeaderFields& fields,
                  const session::SessionState& session);

struct ChainCheck {
  bool ok = true;
  std::optional<std::size_t> first_bad;
  std::string reason;
};

ChainCheck verify_chain(const std::vector<Block>& blocks, const Network& network);

// Runs the attestation session for one batch and builds the block.
Block attest_and_build(const Network& network, const BlockHeader& prev, std::vector<Transaction> txs,
                       const HeaderFields& fields, Rng& rng);

// Genesis plus two blocks: the first batch of 8 and the second of 9 transfers
// among 20 participants.
std::vector<Block> demo_chain(const Network& network, Rng& rng);

std::string block_to_json_line(const Block& block);
Block block_from_json_line(std::string_view line);
void write_chain(std::ostream& out, const std::vector<Block>& blocks);
std::vector<Block> read_chain(std::istream& in);

}  // namespace msdmv::ledger
