#include "recirc/ledger/tx.hpp"

namespace recirc::ledger {

std::string_view tx_kind_name(TxKind k) {
  switch (k) {
    case TxKind::Registration: return "registration";
    case TxKind::Agreement: return "agreement";
    case TxKind::FeePayment: return "fee-payment";
    case TxKind::BalancePosting: return "balance-posting";
    case TxKind::EolDeclaration: return "eol-declaration";
    case TxKind::FailureDeclaration: return "failure-declaration";
    case TxKind::Refurbishment: return "refurbishment";
    case TxKind::Shipment: return "shipment";
    case TxKind::Receipt: return "receipt";
    case TxKind::PaymentAck: return "payment-ack";
    case TxKind::LandfillDeclaration: return "landfill-declaration";
    case TxKind::EnergyReport: return "energy-report";
    case TxKind::EscrowDeploy: return "escrow-deploy";
    case TxKind::EscrowDeposit: return "escrow-deposit";
    case TxKind::EscrowWithdrawal: return "escrow-withdrawal";
    case TxKind::Mint: return "mint";
    case TxKind::Burn: return "burn";
    case TxKind::Trade: return "trade";
    case TxKind::Donation: return "donation";
  }
  return "unknown";
}

std::optional<TxKind> tx_kind_from_name(std::string_view name) {
  for (int k = 0; k <= static_cast<int>(TxKind::Donation); ++k) {
    if (tx_kind_name(static_cast<TxKind>(k)) == name) return static_cast<TxKind>(k);
  }
  return std::nullopt;
}

std::string_view purpose_name(PaymentPurpose p) {
  switch (p) {
    case PaymentPurpose::Fee: return "fee";
    case PaymentPurpose::Liability: return "liability";
    case PaymentPurpose::TransportReward: return "transport-reward";
    case PaymentPurpose::RecyclerPayment: return "recycler-payment";
  }
  return "unknown";
}

std::optional<PaymentPurpose> purpose_from_name(std::string_view name) {
  if (name == "fee") return PaymentPurpose::Fee;
  if (name == "liability") return PaymentPurpose::Liability;
  if (name == "transport-reward") return PaymentPurpose::TransportReward;
  if (name == "recycler-payment") return PaymentPurpose::RecyclerPayment;
  return std::nullopt;
}

std::string_view currency_name(CurrencyKind c) {
  switch (c) {
    case CurrencyKind::Fiat: return "fiat";
    case CurrencyKind::Stablecoin: return "stablecoin";
    case CurrencyKind::RcCoin: return "rc-coin";
  }
  return "unknown";
}

std::optional<CurrencyKind> currency_from_name(std::string_view name) {
  if (name == "fiat") return CurrencyKind::Fiat;
  if (name == "stablecoin") return CurrencyKind::Stablecoin;
  if (name == "rc-coin") return CurrencyKind::RcCoin;
  return std::nullopt;
}

std::string_view trade_side_name(TradeSide s) {
  return s == TradeSide::Buy ? "buy" : "sell";
}

std::optional<TradeSide> trade_side_from_name(std::string_view name) {
  if (name == "buy") return TradeSide::Buy;
  if (name == "sell") return TradeSide::Sell;
  return std::nullopt;
}

// --- canonical serialization ------------------------------------------------

void RegistrationPayload::canonical(CanonicalWriter& w) const {
  w.str(actor_id);
  w.str(identity::role_name(role));
  w.str(identity::node_class_name(node_class));
  w.u64(observer ? 1 : 0);
  w.bytes(std::span<const uint8_t>(public_key.bytes.data(), public_key.bytes.size()));
}

void AgreementPayload::canonical(CanonicalWriter& w) const {
  w.str(agreement_id);
  w.str(prosumer);
  w.str(manufacturer);
  w.str(recycler);
  w.i64(capacity_w);
  w.i64(cost_rate_micros);
  w.i64(lifetime_months);
  w.i64(warranty_months);
  w.i64(transport_allowance_micros);
  w.u64(start_tick);
}

void FeePaymentPayload::canonical(CanonicalWriter& w) const {
  w.str(agreement_id);
  w.str(payer);
  w.str(payee);
  w.i64(amount_micros);
  w.str(purpose_name(purpose));
  w.str(currency_name(currency));
}

void BalancePostingPayload::canonical(CanonicalWriter& w) const {
  w.str(account_number);
  w.i64(balance_micros);
  w.i64(active_customers);
}

void EolDeclarationPayload::canonical(CanonicalWriter& w) const { w.str(agreement_id); }

void FailureDeclarationPayload::canonical(CanonicalWriter& w) const {
  w.str(agreement_id);
  w.str(cause);
  w.i64(remaining_cost_micros);
  w.u64(in_warranty ? 1 : 0);
}

void RefurbishmentPayload::canonical(CanonicalWriter& w) const {
  w.str(agreement_id);
  w.str(new_prosumer);
}

void ShipmentPayload::canonical(CanonicalWriter& w) const {
  w.str(agreement_id);
  w.str(from_actor);
  w.str(to_actor);
}

void ReceiptPayload::canonical(CanonicalWriter& w) const {
  w.str(agreement_id);
  w.str(recycler);
}

void PaymentAckPayload::canonical(CanonicalWriter& w) const {
  w.str(agreement_id);
  w.str(ack_by);
  w.i64(amount_micros);
}

void LandfillDeclarationPayload::canonical(CanonicalWriter& w) const {
  w.str(agreement_id);
}

void EnergyReportPayload::canonical(CanonicalWriter& w) const {
  w.u64(kwh_milli_by_prosumer.size());
  for (const auto& [id, kwh] : kwh_milli_by_prosumer) {
    w.str(id);
    w.i64(kwh);
  }
}

void EscrowDeployPayload::canonical(CanonicalWriter& w) const {
  w.str(contract_id);
  w.str(agreement_id);
  w.u64(required_signers.size());
  for (const auto& s : required_signers) w.str(s);
  terms.canonical(w);
}

void EscrowDepositPayload::canonical(CanonicalWriter& w) const {
  w.str(contract_id);
  w.str(agreement_id);
  w.str(payer);
  w.i64(fiat_micros);
  w.i64(token_micros);
  w.str(currency_name(currency));
  w.str(purpose_name(purpose));
}

void EscrowWithdrawalPayload::canonical(CanonicalWriter& w) const {
  w.str(contract_id);
  w.str(beneficiary);
  w.i64(token_micros);
  w.i64(value_micros);
  w.str(currency_name(currency));
  w.str(purpose_name(purpose));
  w.u64(approvals.size());
  for (const auto& a : approvals) {
    w.str(a.signer);
    w.bytes(std::span<const uint8_t>(a.signature.bytes.data(), a.signature.bytes.size()));
  }
}

Digest EscrowWithdrawalPayload::approval_digest() const {
  CanonicalWriter w;
  w.str(contract_id);
  w.str(beneficiary);
  w.i64(token_micros);
  w.i64(value_micros);
  w.str(currency_name(currency));
  w.str(purpose_name(purpose));
  return w.sha256();
}

void MintPayload::canonical(CanonicalWriter& w) const {
  w.str(agreement_id);
  w.str(contract_id);
  w.i64(kwh_milli);
  w.i64(batches);
  w.i64(coins_micros);
  w.i64(escrow_micros);
  w.i64(reserve_micros);
}

void BurnPayload::canonical(CanonicalWriter& w) const {
  w.i64(coins_micros);
  w.str(reason);
}

void TradePayload::canonical(CanonicalWriter& w) const {
  w.str(party);
  w.str(trade_side_name(side));
  w.i64(coins_micros);
  w.i64(price_micros);
  w.i64(fiat_micros);
}

void DonationPayload::canonical(CanonicalWriter& w) const {
  w.str(donor);
  w.i64(coins_micros);
}

// The variant alternatives are declared in TxKind order.
static_assert(std::variant_size_v<Payload> ==
              static_cast<size_t>(TxKind::Donation) + 1);

TxKind payload_kind(const Payload& p) {
  return static_cast<TxKind>(p.index());
}

void payload_canonical(const Payload& p, CanonicalWriter& w) {
  std::visit([&w](const auto& v) { v.canonical(w); }, p);
}

// --- transaction -------------------------------------------------------------

Digest Transaction::signing_digest() const {
  CanonicalWriter w;
  w.str(author);
  w.str(channel);
  w.str(tx_kind_name(kind));
  payload_canonical(payload, w);
  return w.sha256();
}

Transaction Transaction::make(std::string author, std::string channel, Payload payload,
                              const SecretKey& sk) {
  Transaction tx;
  tx.author = std::move(author);
  tx.channel = std::move(channel);
  tx.kind = payload_kind(payload);
  tx.payload = std::move(payload);
  tx.tx_id = tx.signing_digest();
  tx.signature = sign_digest(sk, tx.tx_id);
  return tx;
}

}  // namespace recirc::ledger
