#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "recirc/identity/roles.hpp"
#include "recirc/ledger/canonical.hpp"
#include "recirc/ledger/digest.hpp"
#include "recirc/ledger/keys.hpp"

namespace recirc::ledger {

enum class TxKind {
  Registration,
  Agreement,
  FeePayment,
  BalancePosting,
  EolDeclaration,
  FailureDeclaration,
  Refurbishment,
  Shipment,
  Receipt,
  PaymentAck,
  LandfillDeclaration,
  EnergyReport,
  EscrowDeploy,
  EscrowDeposit,
  EscrowWithdrawal,
  Mint,
  Burn,
  Trade,
  Donation,
};

std::string_view tx_kind_name(TxKind k);
std::optional<TxKind> tx_kind_from_name(std::string_view name);

enum class PaymentPurpose { Fee, Liability, TransportReward, RecyclerPayment };
std::string_view purpose_name(PaymentPurpose p);
std::optional<PaymentPurpose> purpose_from_name(std::string_view name);

enum class CurrencyKind { Fiat, Stablecoin, RcCoin };
std::string_view currency_name(CurrencyKind c);
std::optional<CurrencyKind> currency_from_name(std::string_view name);

enum class TradeSide { Buy, Sell };
std::string_view trade_side_name(TradeSide s);
std::optional<TradeSide> trade_side_from_name(std::string_view name);

// ---------------------------------------------------------------------------
// Kind-specific payloads. Field order below is the canonical serialization
// order; changing it changes every tx id.
// ---------------------------------------------------------------------------

struct RegistrationPayload {
  std::string actor_id;
  identity::Role role{};
  identity::NodeClass node_class{};
  bool observer = false;
  PublicKey public_key;
  void canonical(CanonicalWriter& w) const;
};

struct AgreementPayload {
  std::string agreement_id;
  std::string prosumer;
  std::string manufacturer;
  std::string recycler;
  int64_t capacity_w = 0;
  int64_t cost_rate_micros = 0;  // micro-dollars per watt
  int64_t lifetime_months = 0;
  int64_t warranty_months = 0;
  int64_t transport_allowance_micros = 0;
  uint64_t start_tick = 0;
  void canonical(CanonicalWriter& w) const;
};

struct FeePaymentPayload {
  std::string agreement_id;
  std::string payer;
  std::string payee;
  int64_t amount_micros = 0;
  PaymentPurpose purpose{};
  CurrencyKind currency{};
  void canonical(CanonicalWriter& w) const;
};

struct BalancePostingPayload {
  std::string account_number;
  int64_t balance_micros = 0;
  int64_t active_customers = 0;
  void canonical(CanonicalWriter& w) const;
};

struct EolDeclarationPayload {
  std::string agreement_id;
  void canonical(CanonicalWriter& w) const;
};

struct FailureDeclarationPayload {
  std::string agreement_id;
  std::string cause;
  int64_t remaining_cost_micros = 0;
  bool in_warranty = false;  // warranty claim attached
  void canonical(CanonicalWriter& w) const;
};

struct RefurbishmentPayload {
  std::string agreement_id;
  std::string new_prosumer;
  void canonical(CanonicalWriter& w) const;
};

struct ShipmentPayload {
  std::string agreement_id;
  std::string from_actor;
  std::string to_actor;
  void canonical(CanonicalWriter& w) const;
};

struct ReceiptPayload {
  std::string agreement_id;
  std::string recycler;
  void canonical(CanonicalWriter& w) const;
};

struct PaymentAckPayload {
  std::string agreement_id;
  std::string ack_by;
  int64_t amount_micros = 0;
  void canonical(CanonicalWriter& w) const;
};

struct LandfillDeclarationPayload {
  std::string agreement_id;
  void canonical(CanonicalWriter& w) const;
};

// One per tick, authored by the utility: gross generation per prosumer for
// the public summary channel. Entries sorted by prosumer id.
struct EnergyReportPayload {
  std::vector<std::pair<std::string, int64_t>> kwh_milli_by_prosumer;
  void canonical(CanonicalWriter& w) const;
};

struct EscrowDeployPayload {
  std::string contract_id;
  std::string agreement_id;
  std::vector<std::string> required_signers;
  AgreementPayload terms;  // encoded copy of the agreement parameters
  void canonical(CanonicalWriter& w) const;
};

struct EscrowDepositPayload {
  std::string contract_id;
  std::string agreement_id;
  std::string payer;
  int64_t fiat_micros = 0;   // fiat collected off-chain before conversion
  int64_t token_micros = 0;  // tokens credited to the contract
  CurrencyKind currency{};
  PaymentPurpose purpose{};
  void canonical(CanonicalWriter& w) const;
};

struct WithdrawalApproval {
  std::string signer;
  Signature signature;  // over the withdrawal digest
};

struct EscrowWithdrawalPayload {
  std::string contract_id;
  std::string beneficiary;
  int64_t token_micros = 0;
  int64_t value_micros = 0;  // fiat value at execution-tick price
  CurrencyKind currency{};
  PaymentPurpose purpose{};
  std::vector<WithdrawalApproval> approvals;
  void canonical(CanonicalWriter& w) const;
  // What the required signers approve: everything except the signatures.
  Digest approval_digest() const;
};

struct MintPayload {
  std::string agreement_id;
  std::string contract_id;
  int64_t kwh_milli = 0;
  int64_t batches = 0;
  int64_t coins_micros = 0;
  int64_t escrow_micros = 0;
  int64_t reserve_micros = 0;
  void canonical(CanonicalWriter& w) const;
};

struct BurnPayload {
  int64_t coins_micros = 0;
  std::string reason;
  void canonical(CanonicalWriter& w) const;
};

struct TradePayload {
  std::string party;
  TradeSide side{};
  int64_t coins_micros = 0;
  int64_t price_micros = 0;  // micro-dollars per coin
  int64_t fiat_micros = 0;
  void canonical(CanonicalWriter& w) const;
};

struct DonationPayload {
  std::string donor;
  int64_t coins_micros = 0;
  void canonical(CanonicalWriter& w) const;
};

using Payload =
    std::variant<RegistrationPayload, AgreementPayload, FeePaymentPayload,
                 BalancePostingPayload, EolDeclarationPayload, FailureDeclarationPayload,
                 RefurbishmentPayload, ShipmentPayload, ReceiptPayload, PaymentAckPayload,
                 LandfillDeclarationPayload, EnergyReportPayload, EscrowDeployPayload,
                 EscrowDepositPayload, EscrowWithdrawalPayload, MintPayload, BurnPayload,
                 TradePayload, DonationPayload>;

TxKind payload_kind(const Payload& p);
void payload_canonical(const Payload& p, CanonicalWriter& w);

// ---------------------------------------------------------------------------

struct Transaction {
  Digest tx_id;  // digest of canonical (author, channel, kind, payload)
  std::string author;
  std::string channel;
  TxKind kind{};
  Payload payload;
  Signature signature;  // by the author, over tx_id

  Digest signing_digest() const;
  bool id_consistent() const { return tx_id == signing_digest(); }

  static Transaction make(std::string author, std::string channel, Payload payload,
                          const SecretKey& sk);
};

}  // namespace recirc::ledger
